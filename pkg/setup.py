"""Build hook for the optional compiled trace kernel.

The package works without the extension; kernels.py falls back to the
numpy implementation when the import fails.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fiberspin._trace_cy",
                ["src/fiberspin/_trace_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
