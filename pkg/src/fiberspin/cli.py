"""Command-line front end: steady fields, coupling audit, traces, sweeps, self-checks.

Subcommands: steady, coupling, evolve, taustar, feasibility, validate.
Parameter resolution order is flags > preset > config file > built-in
defaults; config files are flat `key = value` lines with # comments.
Numeric output uses 9 significant digits, locale-independent, and is
byte-identical across repeated invocations, threaded sweeps included.

Exit codes: 0 ok, 1 usage or domain error, 2 recycling singularity,
3 self-check failure. Every failure writes one line
`error: <code>: <message>` to stderr and keeps the data stream clean.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .entanglement import entanglement_trace, tau_star
from .errors import FiberspinError, ResonantRecycling, ValidationFailure
from .feasibility import (
    FIBER_PRESET,
    RAMAN_PRESET,
    FiberLossSpec,
    LossConvention,
    RamanParams,
    chi_from_raman,
    gamma_f_from_db,
    j_estimate,
    lossy_coupling_report,
)
from .network import NetworkParams, coupling, denominator, steady_fields, validate_regime
from .validate import DEFAULT_SEED, run_all


class _CliUsage(Exception):
    """Raised for argument, config, and preset problems; maps to exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliUsage(message)


_NETWORK_PRESETS = {
    "example-sym": {
        "gamma": 1.0,
        "delta": 1.0,
        "chi": 0.1,
        "drive_re": 10.0,
        "drive_im": 0.0,
        "phi12": math.pi / 4.0,
        "phi21": math.pi / 4.0,
        "gamma_f": 0.0,
    },
    "example-asym": {
        "gamma": 1.0,
        "delta": 0.5,
        "chi": 0.1,
        "drive_re": 1.0,
        "drive_im": 0.0,
        "phi12": 0.3,
        "phi21": 0.9,
        "gamma_f": 0.0,
    },
}

_FEASIBILITY_PRESET = "paper-feasibility"

_EVOLVE_DEFAULTS = {"eta": 0.1, "tau_max": 1000.0, "step": 0.01}
_TAUSTAR_DEFAULTS = {"window": 1e4, "step": 1e-2, "tolerance": 1e-2}
_DEFAULT_ETAS = (0.4, 0.2, 0.1, 0.05)

#: relative asymmetry beyond which the coupling report flags theta1 != theta2
_THETA_WARN = 1e-9


def fmt9(x: float) -> str:
    """9-significant-digit decimal, shortest fixed/scientific form."""
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise ValueError("refusing to format a non-finite number")
    if x == 0.0:
        return "0.00000000"
    ax = abs(x)
    if ax >= 1e12 or ax < 1e-8:
        return f"{x:.8e}"
    digits = min(max(8 - math.floor(math.log10(ax)), 0), 20)
    return f"{x:.{digits}f}"


def _emit(rows: list[tuple[str, ...]], fmt: str, out: str | None, kv: bool = True) -> None:
    """Render rows and write them to stdout or a file, LF-terminated.

    kv=True renders two-element rows as `key = value` report lines in
    text mode; kv=False renders every row as space-joined columns.
    """
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in rows:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        lines = []
        for row in rows:
            if kv and len(row) == 2 and row[0] == "warn":
                lines.append(f"WARN {row[1]}")
            elif kv and len(row) == 2:
                lines.append(f"{row[0]} = {row[1]}")
            else:
                lines.append(" ".join(row))
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliUsage(f"cannot read config file {path}: {exc}") from exc
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise _CliUsage(f"{path}:{lineno}: expected `key = value`")
        key, value = line.split("=", 1)
        entries[key.strip().lower().replace("-", "_")] = value.strip()
    return entries


def _cast(key: str, value: str, kind):
    try:
        return kind(value)
    except (TypeError, ValueError) as exc:
        raise _CliUsage(f"bad value for {key}: {value!r}") from exc


def _parse_eta_list(text: str) -> list[float]:
    items = [s for s in (part.strip() for part in text.split(",")) if s]
    if not items:
        raise _CliUsage("eta list is empty")
    return [_cast("etas", s, float) for s in items]


def _resolve(args, keys: dict[str, type], defaults: dict, preset: dict | None) -> dict:
    """Merge defaults < config < preset < explicit flags for the given keys."""
    merged = dict(defaults)
    config_path = getattr(args, "config", None)
    if config_path:
        raw = _read_config(config_path)
        for key, value in raw.items():
            if key not in keys:
                raise _CliUsage(f"unknown config key {key!r} for this subcommand")
            merged[key] = _parse_eta_list(value) if key == "etas" else _cast(key, value, keys[key])
    if preset:
        merged.update(preset)
    for key in keys:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    return merged


def _network_params(args) -> NetworkParams:
    preset = None
    if getattr(args, "preset", None) is not None:
        try:
            preset = _NETWORK_PRESETS[args.preset]
        except KeyError:
            raise _CliUsage(
                f"unknown preset {args.preset!r}; choose from {sorted(_NETWORK_PRESETS)}"
            ) from None
    keys = {k: float for k in _NETWORK_PRESETS["example-sym"]}
    cfg = _resolve(args, keys, _NETWORK_PRESETS["example-sym"], preset)
    return NetworkParams(
        gamma=cfg["gamma"],
        delta=cfg["delta"],
        chi=cfg["chi"],
        drive=complex(cfg["drive_re"], cfg["drive_im"]),
        phi12=cfg["phi12"],
        phi21=cfg["phi21"],
        gamma_f=cfg["gamma_f"],
        units="MHz",
    )


def cmd_steady(args) -> None:
    p = _network_params(args)
    s = steady_fields(p)
    d = denominator(p)
    rows = [
        ("alpha_re", fmt9(s.alpha.real)),
        ("alpha_im", fmt9(s.alpha.imag)),
        ("alpha_mod", fmt9(abs(s.alpha))),
        ("beta_re", fmt9(s.beta.real)),
        ("beta_im", fmt9(s.beta.imag)),
        ("beta_mod", fmt9(abs(s.beta))),
        ("denominator_re", fmt9(d.real)),
        ("denominator_im", fmt9(d.imag)),
        ("denominator_mod", fmt9(abs(d))),
    ]
    for note in validate_regime(p, s):
        rows.append(("warn", note))
    _emit(rows, args.format, args.out)


def cmd_coupling(args) -> None:
    p = _network_params(args)
    r = coupling(p)
    rows = [
        ("j_oracle", fmt9(r.j_oracle)),
        ("j_closed", fmt9(r.j_closed)),
        ("j_single", fmt9(r.j_single)),
        ("theta1", fmt9(r.theta1)),
        ("theta2", fmt9(r.theta2)),
        ("local1", fmt9(r.local1)),
        ("local2", fmt9(r.local2)),
    ]
    if abs(r.theta1 - r.theta2) > _THETA_WARN * max(abs(r.theta1), abs(r.theta2)):
        rows.append(
            (
                "warn",
                "theta-asymmetry: |theta1 - theta2| = "
                f"{abs(r.theta1 - r.theta2):.6e} exceeds {_THETA_WARN:.0e} * max moduli;"
                " the single-theta shortcut j_single is unreliable here",
            )
        )
    _emit(rows, args.format, args.out)


def cmd_evolve(args) -> None:
    keys = {"eta": float, "tau_max": float, "step": float}
    cfg = _resolve(args, keys, _EVOLVE_DEFAULTS, None)
    trace = entanglement_trace(cfg["eta"], cfg["tau_max"], cfg["step"])
    rows = [("tau", "entanglement")]
    rows.extend((fmt9(t), fmt9(e)) for t, e in zip(trace.taus.tolist(), trace.values.tolist()))
    _emit(rows, args.format, args.out, kv=False)


def _taustar_etas(args, cfg) -> list[float]:
    if getattr(args, "etas_log", None) is not None:
        parts = args.etas_log.split(":")
        if len(parts) != 3:
            raise _CliUsage("--etas-log expects start:stop:count")
        start = _cast("etas-log start", parts[0], float)
        stop = _cast("etas-log stop", parts[1], float)
        count = _cast("etas-log count", parts[2], int)
        if count < 1 or start <= 0.0 or stop <= 0.0:
            raise _CliUsage("--etas-log needs positive endpoints and count >= 1")
        if count == 1:
            return [start]
        return [float(v) for v in np.geomspace(start, stop, count)]
    etas = cfg["etas"]
    if isinstance(etas, str):
        etas = _parse_eta_list(etas)
    if not etas:
        raise _CliUsage("eta list is empty")
    return list(etas)


def cmd_taustar(args) -> None:
    keys = {"window": float, "step": float, "tolerance": float, "threads": int, "etas": str}
    defaults = dict(_TAUSTAR_DEFAULTS)
    defaults["etas"] = list(_DEFAULT_ETAS)
    defaults["threads"] = os.cpu_count() or 1
    cfg = _resolve(args, keys, defaults, None)
    etas = _taustar_etas(args, cfg)
    window, step, tolerance = cfg["window"], cfg["step"], cfg["tolerance"]
    threads = max(int(cfg["threads"]), 1)

    def one(eta: float):
        return tau_star(eta, window=window, step=step, tolerance=tolerance)

    if threads == 1 or len(etas) == 1:
        results = [one(eta) for eta in etas]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, etas))
    rows = [("eta", "tau_star", "e_max")]
    rows.extend((fmt9(r.eta), fmt9(r.tau_star), fmt9(r.e_max)) for r in results)
    _emit(rows, args.format, args.out, kv=False)


def cmd_feasibility(args) -> None:
    keys = {
        "g": float,
        "omega": float,
        "delta_a": float,
        "gamma": float,
        "nbar": float,
        "chi": float,
        "db_per_km": float,
        "length_km": float,
    }
    defaults = {
        "g": RAMAN_PRESET.g,
        "omega": RAMAN_PRESET.omega,
        "delta_a": RAMAN_PRESET.delta_a,
        "gamma": RAMAN_PRESET.gamma,
        "nbar": RAMAN_PRESET.nbar,
        "chi": None,
        "db_per_km": FIBER_PRESET.db_per_km,
        "length_km": FIBER_PRESET.length_km,
    }
    if getattr(args, "preset", None) is not None and args.preset != _FEASIBILITY_PRESET:
        raise _CliUsage(f"feasibility supports only the preset {_FEASIBILITY_PRESET!r}")
    cfg = _resolve(args, keys, defaults, None)
    raman = RamanParams(
        g=cfg["g"], omega=cfg["omega"], delta_a=cfg["delta_a"], gamma=cfg["gamma"], nbar=cfg["nbar"]
    )
    chi_mag, chi_sign = chi_from_raman(raman)
    if cfg["chi"] is not None:
        chi_mag, chi_sign = abs(cfg["chi"]), math.copysign(1.0, cfg["chi"]) if cfg["chi"] else 0.0
    power = FiberLossSpec(cfg["db_per_km"], cfg["length_km"], LossConvention.POWER)
    amplitude = FiberLossSpec(cfg["db_per_km"], cfg["length_km"], LossConvention.AMPLITUDE)
    gf_power = gamma_f_from_db(power)
    gf_amp = gamma_f_from_db(amplitude)
    ratios = lossy_coupling_report(1.0, gf_power)
    rows = [
        ("chi", fmt9(chi_mag)),
        ("chi_sign", fmt9(chi_sign)),
        ("nbar", fmt9(raman.nbar)),
        ("j_at_nbar", fmt9(j_estimate(chi_mag, raman.nbar, raman.gamma))),
        ("j_nbar_50", fmt9(j_estimate(chi_mag, 50.0, raman.gamma))),
        ("j_nbar_100", fmt9(j_estimate(chi_mag, 100.0, raman.gamma))),
        ("gamma_f_power", fmt9(gf_power)),
        ("gamma_f_amplitude", fmt9(gf_amp)),
        ("loss_ratio_single", fmt9(ratios.single)),
        ("loss_ratio_squared", fmt9(ratios.squared)),
    ]
    _emit(rows, args.format, args.out)


def cmd_validate(args) -> None:
    results = run_all(seed=args.seed, tolerance=args.tolerance)
    rows = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if args.format == "csv":
            rows.append((status, r.name, r.detail))
        else:
            rows.append((f"{status} {r.name}:", r.detail))
    _emit(rows, args.format, args.out, kv=False)
    failed = [r for r in results if not r.passed]
    if failed:
        names = ", ".join(r.name for r in failed)
        raise ValidationFailure(f"{len(failed)} suite(s) failed: {names}")


def _add_output_flags(sub) -> None:
    sub.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub.add_argument("--format", choices=("csv", "text"), help="output format")
    sub.add_argument("--config", metavar="PATH", help="flat key = value config file")


def _add_network_flags(sub) -> None:
    for flag in ("gamma", "delta", "chi", "drive-re", "drive-im", "phi12", "phi21", "gamma-f"):
        sub.add_argument(f"--{flag}", type=float, default=None)
    sub.add_argument("--preset", choices=sorted(_NETWORK_PRESETS), default=None)
    _add_output_flags(sub)


def build_parser() -> _Parser:
    parser = _Parser(prog="fiberspin", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True)

    steady = subs.add_parser("steady", help="steady intracavity fields and regime diagnostics")
    _add_network_flags(steady)
    steady.set_defaults(func=cmd_steady, format_default="text")

    coup = subs.add_parser("coupling", help="effective Ising strength, both routes")
    _add_network_flags(coup)
    coup.set_defaults(func=cmd_coupling, format_default="text")

    evolve = subs.add_parser("evolve", help="entanglement-of-formation trace from |gg>")
    evolve.add_argument("--eta", type=float, default=None)
    evolve.add_argument("--tau-max", type=float, default=None)
    evolve.add_argument("--step", type=float, default=None)
    _add_output_flags(evolve)
    evolve.set_defaults(func=cmd_evolve, format_default="csv")

    taus = subs.add_parser("taustar", help="first near-maximal entanglement time per eta")
    taus.add_argument("--etas", type=_parse_eta_list, default=None, metavar="E1,E2,...")
    taus.add_argument("--etas-log", default=None, metavar="START:STOP:COUNT")
    taus.add_argument("--window", type=float, default=None)
    taus.add_argument("--step", type=float, default=None)
    taus.add_argument("--tolerance", type=float, default=None)
    taus.add_argument("--threads", type=int, default=None)
    _add_output_flags(taus)
    taus.set_defaults(func=cmd_taustar, format_default="csv")

    feas = subs.add_parser("feasibility", help="experimental estimates and loss conversions")
    for flag in ("g", "omega", "delta-a", "gamma", "nbar", "chi", "db-per-km", "length-km"):
        feas.add_argument(f"--{flag}", type=float, default=None)
    feas.add_argument("--preset", default=None)
    _add_output_flags(feas)
    feas.set_defaults(func=cmd_feasibility, format_default="text")

    val = subs.add_parser("validate", help="run the seeded self-check suites")
    val.add_argument("--seed", type=int, default=DEFAULT_SEED)
    val.add_argument("--tolerance", type=float, default=None)
    _add_output_flags(val)
    val.set_defaults(func=cmd_validate, format_default="text")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.format is None:
            args.format = args.format_default
        args.func(args)
        return 0
    except _CliUsage as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1
    except ResonantRecycling as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except ValidationFailure as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 3
    except FiberspinError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
