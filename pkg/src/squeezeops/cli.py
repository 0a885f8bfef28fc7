"""Command-line driver.

Four subcommands::

    squeezeops compose --theta1 R --r1 R --phi1 R --theta2 R --r2 R --phi2 R
    squeezeops fragment --theta R --r R --phi R
    squeezeops tdct --config PATH [--out PATH]
    squeezeops verify [--seed N] [--fock-dim N]

compose and fragment are single-shot algebra calls; tdct runs a scenario
scan to CSV; verify runs the full oracle suite and exits 0 only when
every suite passes.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import SqueezeParam, compose_full, fragment
from .scenario import ScenarioError, load_scenario, run_scan
from .verify import run_verify


def _fmt(value):
    return format(float(value), ".17g")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="squeezeops",
        description="Squeezing-operator calculus and canonical-transformation scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compose = sub.add_parser("compose", help="compose two squeezing operators")
    for name in ("theta1", "r1", "phi1", "theta2", "r2", "phi2"):
        compose.add_argument(f"--{name}", type=float, required=True, metavar="R")

    frag = sub.add_parser("fragment", help="normal-ordered factorization of one operator")
    for name in ("theta", "r", "phi"):
        frag.add_argument(f"--{name}", type=float, required=True, metavar="R")

    tdct = sub.add_parser("tdct", help="run a scenario scan, emitting CSV")
    tdct.add_argument("--config", required=True, metavar="PATH")
    tdct.add_argument("--out", default=None, metavar="PATH")

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument("--seed", type=int, default=1, metavar="N")
    verify.add_argument("--fock-dim", type=int, default=60, metavar="N")
    verify.add_argument("--corrupt-fusion", action="store_true",
                        help=argparse.SUPPRESS)
    return parser


def _cmd_compose(args):
    first = SqueezeParam(args.theta1, args.r1, args.phi1)
    second = SqueezeParam(args.theta2, args.r2, args.phi2)
    combined = compose_full(second, first)
    print(f"theta_o = {_fmt(combined.theta)}")
    print(f"r_o = {_fmt(combined.r)}")
    print(f"phi_o = {_fmt(combined.phi)}")
    return 0


def _cmd_fragment(args):
    split = fragment(SqueezeParam(args.theta, args.r, args.phi))
    print(f"eta_re = {_fmt(split.eta.eta.real)}")
    print(f"eta_im = {_fmt(split.eta.eta.imag)}")
    print(f"gamma_frag = {_fmt(split.gamma_frag)}")
    return 0


def _cmd_tdct(args):
    scenario = load_scenario(args.config)
    if args.out is None:
        run_scan(scenario, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            run_scan(scenario, handle)
    return 0


def _cmd_verify(args):
    report = run_verify(seed=args.seed, fock_dim=args.fock_dim,
                        corrupt_fusion=args.corrupt_fusion)
    return 0 if report.all_passed else 1


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handler = {
        "compose": _cmd_compose,
        "fragment": _cmd_fragment,
        "tdct": _cmd_tdct,
        "verify": _cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except (ScenarioError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
