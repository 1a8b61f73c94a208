"""Command-line front end: coupling sweeps, single-shot scattering reports,
detection runs, and the dual-construction verification suite.

Exit codes: 0 success, 1 verification or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .entanglement import entanglement_of_formation
from .oracle import run_verification_checks
from .scattering import ImpurityPreparation, JointState, scatter, scatter_full
from .spinspace import KET_DOWN, KET_UP, KET_UP_UP
from .sweep import (
    DETECT_COLUMNS,
    STDOUT_MARKER,
    SWEEP_COLUMNS,
    SweepConfig,
    format_value,
    sweep_rows,
    write_csv,
)

_BASIS_LABELS = tuple(
    "|" + "".join("u" if (i >> shift) & 1 == 0 else "d" for shift in (2, 1, 0)) + ">"
    for i in range(8)
)
_DENSITY_LABELS = ("uu", "ud", "du", "dd")


def _nonnegative_float(text: str) -> float:
    value = float(text)
    if value < 0.0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="railspin",
        description="Spin entanglement of two same-spin ballistic electrons "
                    "scattered off a magnetic impurity, with beam-splitter detection. "
                    "The scattering map is first order in the exchange coupling, the "
                    "regime above the Kondo temperature.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--j-min", type=_nonnegative_float, default=0.0,
                       help="lower end of the coupling grid (default 0)")
        p.add_argument("--j-max", type=_nonnegative_float, default=5.0,
                       help="upper end of the coupling grid (default 5)")
        p.add_argument("--steps", type=_positive_int, default=101,
                       help="number of grid points, endpoints included (default 101)")
        p.add_argument("--impurity", choices=("down", "up", "random"), default="down",
                       help="initial impurity spin preparation (default down)")
        p.add_argument("--output", "-o", default="-",
                       help="output CSV path, or - for standard output (default -)")
        p.add_argument("--figure", default=None, metavar="PATH",
                       help="also render the curves to this image file")

    p_sweep = sub.add_parser("sweep", help="entanglement and detection observables "
                                           "over a coupling grid (CSV)")
    add_grid_options(p_sweep)

    p_scatter = sub.add_parser("scatter", help="single-shot scattering report")
    p_scatter.add_argument("--j", type=_nonnegative_float, required=True,
                           help="dimensionless coupling strength (>= 0)")
    p_scatter.add_argument("--impurity", choices=("down", "up", "random"), default="down",
                           help="initial impurity spin preparation (default down)")
    p_scatter.add_argument("--json", action="store_true",
                           help="emit one structured JSON document instead of text")
    p_scatter.add_argument("--output", "-o", default="-",
                           help="output path, or - for standard output (default -)")

    p_detect = sub.add_parser("detect", help="detection columns of the sweep "
                                             "(bunching and spin correlation)")
    add_grid_options(p_detect)

    p_verify = sub.add_parser("verify", help="run all dual-construction cross-checks")
    p_verify.add_argument("--debug-perturb-kernel", type=float, default=0.0,
                          metavar="EPS",
                          help="corrupt one kernel entry by EPS to self-test the checks")

    return parser


@contextlib.contextmanager
def _open_output(path: str):
    if path == STDOUT_MARKER:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _emit_rows(args, columns, figure_renderer) -> int:
    try:
        config = SweepConfig(j_min=args.j_min, j_max=args.j_max,
                             steps=args.steps, impurity=args.impurity,
                             output_path=args.output)
    except ValueError as exc:
        print(f"railspin: invalid sweep configuration: {exc}", file=sys.stderr)
        return 2
    rows = sweep_rows(config)
    try:
        with _open_output(config.output_path) as fh:
            write_csv(rows, columns, fh)
    except OSError as exc:
        print(f"railspin: cannot write {config.output_path!r}: {exc}", file=sys.stderr)
        return 1
    if args.figure is not None:
        from . import plotting

        render = getattr(plotting, figure_renderer)
        try:
            render(rows, args.figure)
        except OSError as exc:
            print(f"railspin: cannot write figure {args.figure!r}: {exc}", file=sys.stderr)
            return 1
    return 0


def scatter_report(strength: float, impurity_tag: str) -> dict:
    """Machine-readable single-shot report; the text renderer shares it."""
    preparation = ImpurityPreparation.from_tag(impurity_tag)
    outcome = scatter_full(strength, preparation)
    ent = entanglement_of_formation(outcome.unconditional)

    state = None
    if preparation.is_definite:
        ket = KET_UP if impurity_tag == "up" else KET_DOWN
        joint = scatter(strength, JointState.from_parts(KET_UP_UP, ket))
        state = [[float(a.real), float(a.imag)] for a in joint.vector]

    return {
        "coupling": float(strength),
        "impurity": impurity_tag,
        "state_basis": "index = 4*s3 + 2*s4 + s_imp (electron3, electron4, impurity; u=0, d=1)",
        "state": state,
        "density_basis": "electron spins rail3,rail4: uu, ud, du, dd",
        "density": [[[float(z.real), float(z.imag)] for z in row]
                    for row in outcome.unconditional.matrix],
        "flip_probability": outcome.flip_probability,
        "concurrence": ent.concurrence,
        "entanglement_of_formation": ent.eof,
    }


def _format_complex(re: float, im: float) -> str:
    sign = "-" if im < 0 else "+"
    return f"{format_value(re)} {sign} {format_value(abs(im))}i"


def render_scatter_text(report: dict) -> str:
    lines = [
        f"coupling strength: {format_value(report['coupling'])}",
        f"impurity preparation: {report['impurity']}",
    ]
    if report["state"] is None:
        lines.append("final joint state: mixed preparation, no pure joint state")
    else:
        lines.append("normalized final joint state (electron3 electron4 impurity):")
        for label, (re, im) in zip(_BASIS_LABELS, report["state"]):
            lines.append(f"  {label}  {_format_complex(re, im)}")
    lines.append("electron density matrix (basis uu, ud, du, dd):")
    for label, row in zip(_DENSITY_LABELS, report["density"]):
        entries = "  ".join(_format_complex(re, im) for re, im in row)
        lines.append(f"  {label}:  {entries}")
    if report["flip_probability"] is None:
        lines.append("impurity flip probability: undefined (mixed preparation)")
    else:
        lines.append(f"impurity flip probability: {format_value(report['flip_probability'])}")
    lines.append(f"concurrence: {format_value(report['concurrence'])}")
    lines.append(f"entanglement of formation: {format_value(report['entanglement_of_formation'])}")
    return "\n".join(lines) + "\n"


def _cmd_scatter(args) -> int:
    report = scatter_report(args.j, args.impurity)
    text = (json.dumps(report, indent=2) + "\n") if args.json else render_scatter_text(report)
    try:
        with _open_output(args.output) as fh:
            fh.write(text)
    except OSError as exc:
        print(f"railspin: cannot write {args.output!r}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    results = run_verification_checks(kernel_perturbation=args.debug_perturb_kernel)
    width = max(len(res.name) for res in results)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{res.name:<{width}}  {status}  max error {res.max_error:.3e}  "
              f"(tolerance {res.tolerance:.0e})")
    if all(res.passed for res in results):
        print("all checks passed")
        return 0
    print("verification FAILED", file=sys.stderr)
    return 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep":
        return _emit_rows(args, SWEEP_COLUMNS, "render_sweep_figure")
    if args.command == "detect":
        return _emit_rows(args, DETECT_COLUMNS, "render_detection_figure")
    if args.command == "scatter":
        return _cmd_scatter(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
