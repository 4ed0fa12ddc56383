"""Command-line front end: analyze a state file, scan a family, estimate the
volume of the orbit-safe set, or run the self-check battery.

Exit codes: 0 success, 1 property failure (verify), 2 usage or parse error,
3 invalid state.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import (
    InternalInconsistency,
    NotHermitian,
    NotPositive,
    NotUnitTrace,
    OutOfRange,
)
from . import absolute, families, sampling, states, steering, teleport, witness

_VALIDATION_ERRORS = (NotHermitian, NotUnitTrace, NotPositive, OutOfRange)


class StateFileError(ValueError):
    """Malformed state file (structure, not physics)."""


def _fmt(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".12g")


def _fmt_vec(v) -> str:
    return " ".join(_fmt(x) for x in np.asarray(v, dtype=float))


def _load_state_file(path: str) -> tuple[np.ndarray, dict]:
    """Parse a JSON state file; returns (state, echo of the input record)."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StateFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "format" not in data:
        raise StateFileError("state file must be a JSON object with a 'format' tag")
    allowed = {
        "matrix": {"format", "matrix"},
        "bloch": {"format", "a", "b", "T"},
        "family": {"format", "family", "parameters"},
    }
    tag = data["format"]
    if tag not in allowed:
        raise StateFileError(f"unknown format tag {tag!r}")
    if set(data) != allowed[tag]:
        raise StateFileError(
            f"format {tag!r} requires exactly the keys {sorted(allowed[tag])}, "
            f"got {sorted(data)}"
        )
    if tag == "matrix":
        raw = np.asarray(data["matrix"], dtype=float)
        if raw.shape != (4, 4, 2):
            raise StateFileError("matrix must be 4 rows of 4 [re, im] pairs")
        rho = states.validate(raw[..., 0] + 1j * raw[..., 1])
    elif tag == "bloch":
        a = np.asarray(data["a"], dtype=float)
        b = np.asarray(data["b"], dtype=float)
        T = np.asarray(data["T"], dtype=float)
        if a.shape != (3,) or b.shape != (3,) or T.shape != (3, 3):
            raise StateFileError("bloch record needs a[3], b[3], T[3][3]")
        rho = states.from_bloch(states.BlochForm(a=a, b=b, T=T))
    else:
        family = data["family"]
        params = data["parameters"]
        if not isinstance(params, dict):
            raise StateFileError("parameters must be an object")
        try:
            if family == "werner":
                rho = families.werner(float(params["p"]))
            elif family == "gisin":
                rho = families.gisin(float(params["lambda"]), float(params["theta"]))
            elif family == "xstate":
                rho = families.x_state(*(float(params[f"v{k}"]) for k in range(1, 7)))
            else:
                raise StateFileError(f"unknown family {family!r}")
        except KeyError as exc:
            raise StateFileError(f"missing family parameter {exc}") from exc
    return rho, data


def _analysis_lines(path: str, rho: np.ndarray, echo: dict) -> list[str]:
    form = states.to_bloch(rho)
    report = states.spectrum_report(rho)
    f2 = steering.f2_max(rho)
    f3 = steering.f3_max(rho)
    verdict = absolute.decide_aus3(rho)
    aux = teleport.aux_criteria(rho)

    lines = [f"input: {path}", f"format: {echo['format']}"]
    if echo["format"] == "family":
        lines.append(f"family: {echo['family']}")
        lines.append("parameters:")
        for key in sorted(echo["parameters"]):
            lines.append(f"  {key}: {_fmt(echo['parameters'][key])}")
    lines.append("bloch:")
    lines.append(f"  a: {_fmt_vec(form.a)}")
    lines.append(f"  b: {_fmt_vec(form.b)}")
    lines.append("  T:")
    for row in form.T:
        lines.append(f"    {_fmt_vec(row)}")
    lines.append("spectrum:")
    lines.append(f"  eigenvalues: {_fmt_vec(report.eigenvalues)}")
    lines.append(f"  purity: {_fmt(report.purity)}")
    lines.append(f"f2_max: {_fmt(f2.value)}")
    lines.append(f"f3_max: {_fmt(f3.value)}")
    lines.append(f"f3_global_max: {_fmt(verdict.f3_global_max)}")
    lines.append(f"N: {_fmt(aux.N)}")
    lines.append(f"M: {_fmt(aux.M)}")
    lines.append("verdicts:")
    lines.append(f"  unsteerable_as_given: {str(not f3.violated).lower()}")
    lines.append(f"  in_aus3: {str(verdict.in_aus3).lower()}")
    lines.append(f"  teleportation_useful: {str(aux.N > 1.0).lower()}")
    lines.append(f"  chsh_local: {str(aux.M <= 1.0).lower()}")
    if verdict.f3_global_max > 1.0:
        w = witness.activation_witness(rho)
        expectation = float(np.real(np.trace(w.matrix @ rho)))
        lines.append(f"witness_expectation: {_fmt(expectation)}")
    return lines


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    try:
        rho, echo = _load_state_file(args.infile)
    except StateFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except _VALIDATION_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    _write_out("\n".join(_analysis_lines(args.infile, rho, echo)) + "\n", args.out)
    return 0


def cmd_scan(args) -> int:
    if args.family not in families.SCANNABLE:
        print(f"scan supports families {families.SCANNABLE}", file=sys.stderr)
        return 2
    if args.step <= 0 or args.stop < args.start:
        print("empty parameter range", file=sys.stderr)
        return 2
    span = (args.stop - args.start) / args.step
    # hit the endpoint when the step divides the range, stay inside otherwise
    count = (int(round(span)) if abs(span - round(span)) < 1e-9 else int(span)) + 1
    grid = np.minimum(args.start + args.step * np.arange(count), args.stop)
    try:
        result = families.scan_family(args.family, grid)
    except OutOfRange as exc:
        print(f"OutOfRange: {exc}", file=sys.stderr)
        return 2
    lines = [
        f"# family: {args.family}",
        f"# from: {_fmt(args.start)} to: {_fmt(args.stop)} step: {_fmt(args.step)}"
        f" points: {count}",
        "param,f3_global_max_minus_1,in_aus3",
    ]
    for point in result.points:
        key = "p" if args.family == "werner" else "lambda"
        lines.append(
            f"{_fmt(point.parameters[key])},"
            f"{_fmt(point.verdict.f3_global_max - 1.0)},"
            f"{str(point.verdict.in_aus3).lower()}"
        )
    if result.threshold is not None:
        lines.append(f"# threshold: {_fmt(result.threshold)}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_sample(args) -> int:
    if args.samples < 100:
        print("samples must be >= 100", file=sys.stderr)
        return 2
    fraction, stderr = sampling.aus3_volume_estimate(
        args.samples, sampling.SeededGenerator(args.seed)
    )
    lines = [
        f"samples: {args.samples}",
        f"seed: {args.seed}",
        f"fraction: {_fmt(fraction)}",
        f"stderr: {_fmt(stderr)}",
    ]
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def _check_maximality(n: int, seed: int) -> tuple[bool, float]:
    """Sampled orbit values never beat the closed form; the canonical
    Bell-diagonal state attains it.  Margin: worst (observed - bound)."""
    worst = -np.inf
    for k in range(n):
        rho = sampling.random_state(sampling.SeededGenerator(seed, 2 * k))
        bound = absolute.decide_aus3(rho).f3_global_max
        sup = sampling.empirical_f3_sup(rho, n, sampling.SeededGenerator(seed, 2 * k + 1))
        canonical = absolute.bell_diagonal_canonical(rho)
        attained = steering.f3_max(canonical.matrix).value
        worst = max(worst, sup - bound, abs(attained - bound))
    return worst <= 1e-9, worst


def _check_four_criteria(n: int, seed: int) -> tuple[bool, float]:
    """All membership routes agree; margin: worst purity-scale spread."""
    worst = 0.0
    for k in range(n):
        rho = sampling.random_state(sampling.SeededGenerator(seed, k))
        try:
            v = absolute.decide_aus3(rho)
        except InternalInconsistency:
            return False, np.inf
        spread = max(
            abs((v.spectrum_lhs + 1.0) / 4.0 - v.purity),
            abs((v.bloch_sum + 1.0) / 4.0 - v.purity),
            abs((v.f3_global_max**2 + 1.0) / 4.0 - v.purity),
        )
        worst = max(worst, spread)
    return worst <= 1e-9, worst


def _check_steer_teleport(n: int, seed: int) -> tuple[bool, float]:
    """F3 <= N on every draw; margin: worst F3 - N."""
    worst = -np.inf
    ok = True
    for k in range(n):
        rho = sampling.random_state(sampling.SeededGenerator(seed, k))
        worst = max(worst, steering.f3_max(rho).value - teleport.teleportation_N(rho))
        ok = ok and teleport.steer_implies_teleport_check(rho)
    return ok and worst <= 1e-10, worst


def _check_convexity(n: int, seed: int) -> tuple[bool, float]:
    """Mixtures of member states stay members; margin: worst purity - 1/2."""
    rng = sampling.SeededGenerator(seed, 0).rng()
    members: list[np.ndarray] = []
    while len(members) < 2 * n:
        batch = sampling.states_from_rng(rng, size=4 * n)
        for rho in batch:
            if np.sum(np.abs(rho) ** 2) <= 0.5:
                members.append(rho)
                if len(members) == 2 * n:
                    break
    worst = -np.inf
    ok = True
    for k in range(n):
        lam = rng.uniform()
        mix = lam * members[2 * k] + (1.0 - lam) * members[2 * k + 1]
        verdict = absolute.decide_aus3(states.validate(mix))
        worst = max(worst, verdict.purity - 0.5)
        ok = ok and verdict.in_aus3
    return ok, worst


def cmd_verify(args) -> int:
    if args.trials < 1:
        print("trials must be >= 1", file=sys.stderr)
        return 2
    checks = [
        ("maximality", _check_maximality),
        ("four_criteria", _check_four_criteria),
        ("steer_implies_teleport", _check_steer_teleport),
        ("convexity", _check_convexity),
    ]
    all_ok = True
    lines = []
    for name, check in checks:
        try:
            ok, margin = check(args.trials, args.seed)
        except InternalInconsistency as exc:
            ok, margin = False, np.inf
            lines.append(f"# {name}: {exc}")
        all_ok = all_ok and ok
        lines.append(f"{name}: {'PASS' if ok else 'FAIL'} (worst margin {_fmt(margin)})")
    lines.append(f"overall: {'PASS' if all_ok else 'FAIL'}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0 if all_ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steerability",
        description="Steering criteria for two-qubit states and their global-unitary orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one state file")
    p.add_argument("--in", dest="infile", required=True, help="JSON state file")
    p.add_argument("--out", default=None, help="write report here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="threshold scan of a one-parameter family")
    p.add_argument("--family", required=True, help="werner or gisin")
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--out", default=None, help="write curve file here instead of stdout")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("sample", help="Monte Carlo estimate of the orbit-safe volume")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run the invariant battery")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
