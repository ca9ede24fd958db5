"""Command-line front end: sampling, curve tabulation, comparison, analysis.

Subcommands
    sample    draw level spacings from an ensemble, write a CSV
    curve     tabulate an analytic curve's pdf and cdf on a grid
    compare   KS-test a spacing file against the analytic curves
    analyze   parse + unfold a raw spectrum, then compare against all curves
    verify    run the built-in verification suite

Exit codes: 0 success, 1 runtime or check failure, 2 usage error.
CSV outputs are byte-deterministic for fixed flags (12 significant digit
formatting, LF newlines); JSON reports are deterministic except for their
timestamp field.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import curves, ensembles, ingest, stats, verify

_ENSEMBLE_CHOICES = ("goe", "gue", "gse", "gpoe", "gpue", "qh3", "qh4")
_CURVE_CHOICES = ("goe", "gue", "gse", "gpoe", "gpue")


def _fmt(v: float) -> str:
    return format(float(v), ".12g")


def _resolve_ensemble(parser: argparse.ArgumentParser, name: str, kappa) -> ensembles.EnsembleKind:
    tag = name.upper()
    if tag in ("QH3", "QH4"):
        if kappa is None:
            print(f"note: --kappa not given for {name}; defaulting to kappa=0", file=sys.stderr)
            kappa = 0.0
        if kappa < 0:
            parser.error("--kappa must be nonnegative")
        return ensembles.EnsembleKind(tag, float(kappa))
    if kappa is not None:
        parser.error(f"--kappa is only valid with qh3/qh4, not {name}")
    return ensembles.EnsembleKind(tag)


def _cmd_sample(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    kind = _resolve_ensemble(parser, args.ensemble, args.kappa)
    if args.n < 1:
        parser.error("--n must be at least 1")
    if args.sigma <= 0:
        parser.error("--sigma must be positive")
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in an unsigned 64-bit integer")
    config = ensembles.SamplerConfig(sigma=args.sigma, seed=args.seed, workers=args.workers)
    sample, rate = ensembles.sample_spacings(kind, args.n, config)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("raw_spacing,normalized_spacing\n")
        for r, x in zip(sample.raw, sample.normalized):
            fh.write(f"{_fmt(r)},{_fmt(x)}\n")
    print(f"acceptance-rate {_fmt(rate)}")
    return 0


def _cmd_curve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    kind = curves.canonical_kind(args.curve)
    if args.xmax <= 0:
        parser.error("--xmax must be positive")
    if args.points < 2:
        parser.error("--points must be at least 2")
    xs = np.linspace(0.0, args.xmax, args.points)
    ps = np.atleast_1d(curves.pdf(kind, xs))
    cs = np.atleast_1d(curves.cdf(kind, xs))
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("x,pdf,cdf\n")
        for x, p, c in zip(xs, ps, cs):
            fh.write(f"{_fmt(x)},{_fmt(p)},{_fmt(c)}\n")
    return 0


def _parse_against(text: str) -> list[str]:
    if text.strip().lower() == "all":
        return list(curves.CURVE_ORDER)
    requested = [curves.canonical_kind(tok) for tok in text.split(",") if tok.strip()]
    if not requested:
        raise ValueError("--against selected no curves")
    # keep the canonical order, drop duplicates
    return [k for k in curves.CURVE_ORDER if k in requested]


def _read_spacings_csv(path) -> np.ndarray:
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty spacing file")
    col = 0
    start = 0
    head = [tok.strip().lower() for tok in lines[0].split(",")]
    try:
        float(head[0])
    except ValueError:
        start = 1
        if "raw_spacing" in head:
            col = head.index("raw_spacing")
    values = []
    for lineno, line in enumerate(lines[start:], start=start + 1):
        fields = line.split(",")
        try:
            values.append(float(fields[col]))
        except (ValueError, IndexError):
            raise ValueError(f"{path}: line {lineno}: cannot read a spacing") from None
    if not values:
        raise ValueError(f"{path}: no spacing rows")
    return np.asarray(values)


def build_report(source: str, n: int, seed, rate, ks_results: dict[str, stats.KsResult]) -> dict:
    """Assemble a RunReport dict; key order is part of the stable schema."""
    best = min(ks_results, key=lambda k: (ks_results[k].d, curves.CURVE_ORDER.index(k)))
    report: dict = {
        "ensemble-or-source": source,
        "n": int(n),
        "seed": seed,
    }
    if rate is not None:
        report["acceptance-rate"] = rate
    report["ks-results"] = {
        k: {"d": ks_results[k].d, "p": ks_results[k].p_value} for k in ks_results
    }
    report["best-fit"] = best
    report["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return report


def _emit_report(report: dict, mode: str) -> None:
    if mode == "json":
        print(json.dumps(report, indent=2))
        return
    print(f"source:   {report['ensemble-or-source']}")
    print(f"n:        {report['n']}")
    if report.get("acceptance-rate") is not None:
        print(f"rate:     {report['acceptance-rate']:.6g}")
    print("curve     d           p")
    for name, entry in report["ks-results"].items():
        print(f"{name:<8}  {entry['d']:<10.6f}  {entry['p']:.6g}")
    print(f"best-fit: {report['best-fit']}")


def _compare_sample(sample: stats.SpacingSample, against: list[str]) -> dict[str, stats.KsResult]:
    if np.ptp(sample.normalized) == 0.0:
        warnings.warn("zero-variance sample: every spacing is identical", stacklevel=2)
    return {k: stats.ks_test(sample, k) for k in against}


def _cmd_compare(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    against = _parse_against(args.against)
    raw = _read_spacings_csv(args.spacings)
    sample = stats.normalize(raw)
    ks_results = _compare_sample(sample, against)
    report = build_report(str(args.spacings), len(sample), None, None, ks_results)
    _emit_report(report, args.report)
    return 0


def _cmd_analyze(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    method = ingest.parse_unfold_method(args.unfold)
    spectrum = ingest.load_spectrum(args.spectrum)
    sample = ingest.unfold(spectrum, method)
    ks_results = _compare_sample(sample, list(curves.CURVE_ORDER))
    source = f"{spectrum.source_label or args.spectrum} (unfold={args.unfold})"
    report = build_report(source, len(sample), None, None, ks_results)
    _emit_report(report, args.report)
    return 0


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    results = verify.run_verification()
    print(verify.format_table(results))
    return 0 if all(r.passed for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spacinglab",
        description="Level-spacing statistics of Gaussian random-matrix ensembles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample spacings from an ensemble into a CSV")
    p.add_argument("--ensemble", required=True, choices=_ENSEMBLE_CHOICES)
    p.add_argument("--kappa", type=float, default=None, help="qh3/qh4 non-Hermiticity parameter")
    p.add_argument("--n", required=True, type=int, help="number of accepted spacings")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("curve", help="tabulate an analytic curve (x, pdf, cdf)")
    p.add_argument("--curve", required=True, choices=_CURVE_CHOICES)
    p.add_argument("--xmax", required=True, type=float)
    p.add_argument("--points", required=True, type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("compare", help="KS-test a spacing CSV against analytic curves")
    p.add_argument("--spacings", required=True)
    p.add_argument("--against", default="all", help="comma list of curves, or 'all'")
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("analyze", help="parse, unfold and classify a raw spectrum")
    p.add_argument("--spectrum", required=True)
    p.add_argument("--unfold", default="local:51", help="global, local:w or poly:p")
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="run the built-in verification suite")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
