"""
Command-line entry point.

Subcommands: params, eval, render, figure1, verify.
Exit codes: 0 ok, 1 runtime/numeric failure, 2 usage, 3 verification failure.
"""
import argparse
import os
import sys

import numpy as np

from . import compass, oscillator, phasespace, qkernel, verify
from .errors import QCompassError
from .quadrature import QuadratureSpec, overlap

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


def _g(v):
    return f"{v:.17g}"


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=1, help="quantum number (default 1)")
    common.add_argument("--mass", type=float, default=1.0)
    common.add_argument("--omega", type=float, default=1.0)
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--h", type=float, default=1.3, help="deformation step, > 0 (default 1.3)")
    common.add_argument("--quad-halfwidth", type=float, default=None)
    common.add_argument("--quad-step", type=float, default=None)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--verbose", action="store_true")
    return common


def _grid_parser(np_default=301):
    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--pmin", type=float, default=None)
    grid.add_argument("--pmax", type=float, default=None)
    grid.add_argument("--xmin", type=float, default=None)
    grid.add_argument("--xmax", type=float, default=None)
    grid.add_argument("--np", dest="n_p", type=int, default=np_default)
    grid.add_argument("--nx", dest="n_x", type=int, default=np_default)
    grid.add_argument("--format", choices=("csv", "pgm"), default="pgm")
    grid.add_argument("--out", default=None)
    return grid


def build_parser():
    parser = argparse.ArgumentParser(prog="qcompass", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True)
    common, grid = _common_parser(), _grid_parser()

    sub.add_parser("params", parents=[common], help="print lambda, q and basic numbers")

    ev = sub.add_parser("eval", parents=[common], help="tabulate a wavefunction on an x-grid")
    ev.add_argument("--state", choices=("compass", "component", "cat"), default="compass")
    ev.add_argument("--direction", choices=("N", "S", "E", "W"), default="W")
    ev.add_argument("--pair", choices=("NS", "EW"), default="EW")
    ev.add_argument("--x", type=float, action="append", default=None, help="evaluation point (repeatable)")
    ev.add_argument("--xmin", type=float, default=-5.0)
    ev.add_argument("--xmax", type=float, default=5.0)
    ev.add_argument("--nx", dest="n_x", type=int, default=11)
    ev.add_argument("--out", default=None, help="write CSV here instead of standard output")

    sub.add_parser("render", parents=[common, grid], help="render one Wigner grid")
    fig = sub.add_parser("figure1", parents=[common, grid], help="six n=1 panels and a summary")
    fig.set_defaults(n=1)

    ver = sub.add_parser("verify", parents=[common], help="run the property suite")
    ver.add_argument("--perturb-prefactor", type=float, default=1.0, help=argparse.SUPPRESS)
    return parser


def _validate(parser, args):
    for name in ("mass", "omega", "hbar", "h"):
        v = getattr(args, name)
        if not (np.isfinite(v) and v > 0):
            parser.error(f"{name} must be > 0 (got {v!r})")
    if args.n < 0:
        parser.error(f"n must be >= 0 (got {args.n})")
    if args.workers < 1:
        parser.error("workers must be >= 1")
    for name in ("quad_halfwidth", "quad_step"):
        v = getattr(args, name)
        if v is not None and not v > 0:
            parser.error(f"{name.replace('_', '-')} must be > 0")
    if (args.quad_halfwidth is None) != (args.quad_step is None):
        parser.error("--quad-halfwidth and --quad-step must be given together")
    if args.quad_halfwidth is not None and args.quad_halfwidth / args.quad_step < 64:
        parser.error("--quad-halfwidth / --quad-step must be >= 64")
    for lo, hi in (("pmin", "pmax"), ("xmin", "xmax")):
        a, b = getattr(args, lo, None), getattr(args, hi, None)
        if a is not None and b is not None and not b > a:
            parser.error(f"--{hi} must exceed --{lo}")
    if getattr(args, "n_x", 2) < (1 if args.command == "eval" else 2) or getattr(args, "n_p", 2) < 2:
        parser.error("node counts too small")


def _params(args):
    return oscillator.make_params(args.mass, args.omega, args.hbar, args.h)


def _quad(args):
    if args.quad_halfwidth is None:
        return None
    return QuadratureSpec(args.quad_halfwidth, args.quad_step)


def cmd_params(args, out):
    prm = _params(args)
    out.write(f"lambda = {_g(prm.lam)}\n")
    out.write(f"q = {_g(prm.q)}\n")
    out.write(f"q_2dp = {prm.q:.2f}\n")
    for k in range(args.n + 1):
        out.write(f"[{k}]_q = {_g(qkernel.basic_number(k, prm.q))}\n")
    return EXIT_OK


def cmd_eval(args, out):
    prm = _params(args)
    quad = _quad(args)
    x = np.array(args.x) if args.x else np.linspace(args.xmin, args.xmax, args.n_x)
    lines = []
    if args.state == "compass":
        spec = compass.CompassSpec(args.n, prm)
        vals = compass.compass_amplitude(spec, x, quad)
        label = f"compass n={args.n}"
        ground = oscillator.norm_const_cn(0, prm) * np.exp(-prm.lam * x**2)
        if args.n == 0:
            lines.append(f"ground_gaussian_max_deviation = {_g(np.max(np.abs(vals - ground)))}")
            lines.append(f"ground_gaussian_ratio_spread = {_g(np.ptp(np.abs(vals / ground)))}")
        if args.verbose:
            lines.append(f"N_q = {_g(spec.nq())}")
    elif args.state == "component":
        vals = compass.component(args.direction, args.n, x, prm)
        label = f"component {args.direction} n={args.n}"
    else:
        vals = compass.cat_amplitude(args.pair, args.n, x, prm, quad)
        label = f"cat {args.pair} n={args.n}"
        q2 = quad or QuadratureSpec.for_position(prm, args.n)
        st = compass.cat_state(args.pair, args.n, prm, quad)
        lines.append(f"cat_norm = {_g(overlap(st, st, q2).real)}")
    vals = np.atleast_1d(vals)
    table = ["x,re,im"] + [f"{_g(a)},{_g(v.real)},{_g(v.imag)}" for a, v in zip(x, vals)]
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(f"# {label} h={_g(prm.h)} q={_g(prm.q)}\n")
            fh.write("\n".join(table) + "\n")
        lines.insert(0, f"wrote {args.out}")
    else:
        out.write(f"# {label} h={_g(prm.h)} q={_g(prm.q)}\n")
        out.write("\n".join(table) + "\n")
    for line in lines:
        out.write(line + "\n")
    return EXIT_OK


def _grid_spec(args, default):
    return phasespace.GridSpec(
        default.p_min if args.pmin is None else args.pmin,
        default.p_max if args.pmax is None else args.pmax,
        default.x_min if args.xmin is None else args.xmin,
        default.x_max if args.xmax is None else args.xmax,
        args.n_p,
        args.n_x,
    )


def _peak_lines(tag, peaks):
    return [f"  {tag} p={_g(pk.p)} x={_g(pk.x)} W={_g(pk.value)} distance={_g(pk.radius)}" for pk in peaks]


def cmd_render(args, out):
    prm = _params(args)
    spec = _grid_spec(args, phasespace.figure1_grid_spec(prm.h, args.n_p))
    grid = phasespace.render_grid(args.n, prm, spec, workers=args.workers)
    dest = args.out or f"wigner_n{args.n}_h{prm.h:g}.{args.format}"
    for path in phasespace.export_grid(grid, args.format, dest):
        out.write(f"wrote {path}\n")
    out.write(f"W_min = {_g(grid.values.min())}\nW_max = {_g(grid.values.max())}\n")
    out.write(f"negativity_fraction(0.01) = {_g(phasespace.negativity_fraction(grid, 0.01))}\n")
    return EXIT_OK


def cmd_figure1(args, out):
    outdir = args.out or "figure1"
    os.makedirs(outdir, exist_ok=True)
    summary = [f"figure1 n={args.n} m={_g(args.mass)} omega={_g(args.omega)} hbar={_g(args.hbar)}"]
    for h in phasespace.FIGURE1_H:
        prm = oscillator.make_params(args.mass, args.omega, args.hbar, h)
        spec = _grid_spec(args, phasespace.figure1_grid_spec(h, args.n_p))
        grid = phasespace.render_grid(args.n, prm, spec, workers=args.workers)
        path = os.path.join(outdir, f"panel_h{h:g}.{args.format}")
        written = phasespace.export_grid(grid, args.format, path)
        peaks = phasespace.locate_peaks(grid, 4)
        lobes = phasespace.locate_peaks(phasespace.render_grid(args.n, prm, spec, part="diagonal", workers=args.workers), 4)
        summary.append(
            f"panel h={_g(h)} q={_g(prm.q)} file={os.path.basename(written[0])} "
            f"W_min={_g(grid.values.min())} W_max={_g(grid.values.max())} "
            f"negativity_fraction={_g(phasespace.negativity_fraction(grid, 0.01))}"
        )
        summary += _peak_lines("peak", peaks)
        summary += _peak_lines("lobe", lobes)
    prm = oscillator.make_params(args.mass, args.omega, args.hbar, args.h)
    ctrl = phasespace.render_grid(0, prm, _grid_spec(args, phasespace.figure1_grid_spec(prm.h, args.n_p)),
                                  workers=args.workers)
    summary.append(f"control n=0 h={_g(prm.h)} negativity_fraction={_g(phasespace.negativity_fraction(ctrl, 1e-6))}")
    spath = os.path.join(outdir, "figure1_summary.txt")
    with open(spath, "w", newline="\n") as fh:
        fh.write("\n".join(summary) + "\n")
    out.write("\n".join(summary) + "\n")
    out.write(f"wrote {spath}\n")
    return EXIT_OK


def cmd_verify(args, out):
    results = verify.run_verification(prefactor_scale=args.perturb_prefactor)
    for r in results:
        out.write(r.line() + "\n")
        if args.verbose:
            for d in r.details:
                out.write(f"  {d}\n")
    failed = [r.name for r in results if not r.passed]
    out.write(f"SUMMARY {len(results) - len(failed)}/{len(results)} passed\n")
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {"params": cmd_params, "eval": cmd_eval, "render": cmd_render,
            "figure1": cmd_figure1, "verify": cmd_verify}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return COMMANDS[args.command](args, out)
    except (QCompassError, OSError) as exc:
        sys.stderr.write(f"qcompass: error: {exc}\n")
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
