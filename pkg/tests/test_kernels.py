"""Trace kernel: constants, backends, and agreement with the slow route."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from fiberspin import concurrence_pure, eof_from_concurrence, evolve_analytic
from fiberspin.errors import BadGrid, DegenerateEta
from fiberspin.kernels import backend, ent_trace_grid, trace_constants


def test_backend_reports_a_known_name():
    assert backend() in {"compiled", "python"}


@pytest.mark.parametrize("eta", [0.05, 0.3, 1.0, 2.0])
def test_trace_constants_identities(eta):
    a1, a4, b1, b4, omega = trace_constants(eta)
    s = math.sqrt(1.0 + eta * eta)
    assert abs(a1 + a4 - 0.5) <= 1e-15
    assert abs(b1 + b4) <= 1e-15
    assert abs(b1 + eta / (4.0 * s)) <= 1e-15
    assert abs(omega - 2.0 * s) <= 1e-15
    assert a1 > 0.0 and a4 > 0.0


def test_trace_constants_degenerate_eta():
    with pytest.raises(DegenerateEta):
        trace_constants(0.0)
    with pytest.raises(DegenerateEta):
        trace_constants(-0.3)


def test_grid_matches_pointwise_evolution():
    vals = ent_trace_grid(0.35, 0.0, 0.037, 200)
    for k in (0, 1, 57, 199):
        tau = 0.037 * k
        expect = eof_from_concurrence(concurrence_pure(evolve_analytic(0.35, tau)))
        assert abs(float(vals[k]) - expect) <= 1e-12


def test_grid_offset_start():
    shifted = ent_trace_grid(0.2, 5.0, 0.01, 50)
    plain = ent_trace_grid(0.2, 0.0, 0.01, 551)
    # 5.0 + k*0.01 and (500+k)*0.01 differ in the last ulp, so compare loosely
    assert float(np.max(np.abs(shifted - plain[500:550]))) <= 1e-9


def test_no_exact_period_pi():
    # frequencies 2 and 2*sqrt(1+eta^2) share no common period
    base = ent_trace_grid(0.1, 0.0, 0.01, 1001)
    shifted = ent_trace_grid(0.1, math.pi, 0.01, 1001)
    assert float(np.max(np.abs(base - shifted))) > 1e-3


def test_grid_guards():
    with pytest.raises(BadGrid):
        ent_trace_grid(0.1, 0.0, 0.01, 0)
    with pytest.raises(BadGrid):
        ent_trace_grid(0.1, 0.0, -0.01, 10)
    with pytest.raises(BadGrid):
        ent_trace_grid(0.1, math.nan, 0.01, 10)
    with pytest.raises(DegenerateEta):
        ent_trace_grid(0.0, 0.0, 0.01, 10)


def test_pure_python_backend_matches(tmp_path):
    code = (
        "import os\n"
        "import numpy as np\n"
        "from fiberspin.kernels import backend, ent_trace_grid\n"
        "vals = ent_trace_grid(0.1, 0.0, 0.01, 20001)\n"
        "print(backend())\n"
        "np.save(os.environ['OUT_NPY'], vals)\n"
    )

    def run(pure):
        env = os.environ.copy()
        out = tmp_path / ("pure.npy" if pure else "default.npy")
        env["OUT_NPY"] = str(out)
        if pure:
            env["FIBERSPIN_PURE"] = "1"
        else:
            env.pop("FIBERSPIN_PURE", None)
        proc = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        assert proc.returncode == 0, proc.stderr
        return proc.stdout.strip(), np.load(out)

    _, default_vals = run(False)
    name_pure, pure_vals = run(True)
    assert name_pure == "python"
    assert float(np.max(np.abs(default_vals - pure_vals))) <= 1e-12
