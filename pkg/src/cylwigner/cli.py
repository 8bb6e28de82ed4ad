"""Command-line surface: grid computation, marginals, and oracle checks.

Exit codes: 0 success, 2 spec parse error, 3 precondition violation,
4 numerical-tolerance failure.  ``OAM_WIGNER_THREADS`` caps grid
parallelism (default 1).  Output is byte-deterministic for fixed inputs.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .cylindrical import (KAPPA, CylPoint, gauss_hermite, oracle_cyl_from_cartesian,
                          wigner_cyl, wigner_cyl_grid)
from .errors import CylWignerError, SpecParseError
from .phase1d import Convention
from .statespec import build_state, parse_state_spec, serialize_state_spec

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_TOLERANCE = 4

ORACLE_SPREAD_TOL = 1e-6


@dataclass(frozen=True)
class GridRequest:
    """Validated grid axes and evaluation settings for a CLI run."""

    r_min: float
    r_max: float
    n_r: int
    n_phi: int
    ell_min: int
    ell_max: int
    quad_order: int
    convention: Convention = Convention.MARGINAL

    def __post_init__(self):
        if self.r_min <= 0:
            raise ValueError("r_min must be strictly positive (r = 0 is excluded)")
        if self.r_max <= self.r_min:
            raise ValueError("r_max must exceed r_min")
        if self.n_r < 1 or self.n_phi < 1:
            raise ValueError("grid must have at least one node per axis")
        if self.ell_min > self.ell_max:
            raise ValueError("ell_min must not exceed ell_max")

    def axes(self):
        r = np.linspace(self.r_min, self.r_max, self.n_r)
        phi = np.linspace(0.0, 2.0 * np.pi, self.n_phi, endpoint=False)
        ell = np.arange(self.ell_min, self.ell_max + 1)
        return r, phi, ell


def _fmt(v):
    return f"{v:.17g}"


def write_grid_csv(fh, spec, req, grid):
    r, phi, ell = grid.r_nodes, grid.phi_nodes, grid.ell_values
    fh.write(f"# cylwigner-grid v{__version__}\n")
    fh.write(f"# state: {serialize_state_spec(spec)}\n")
    fh.write(f"# convention: {req.convention.value}\n")
    fh.write(f"# quad_order: {req.quad_order}\n")
    fh.write("# r_nodes: " + " ".join(_fmt(v) for v in r) + "\n")
    fh.write("# phi_nodes: " + " ".join(_fmt(v) for v in phi) + "\n")
    fh.write("# ell_values: " + " ".join(str(int(v)) for v in ell) + "\n")
    fh.write("# columns: r,phi,ell,W\n")
    for i, rv in enumerate(r):
        for j, pv in enumerate(phi):
            for k, lv in enumerate(ell):
                fh.write(f"{_fmt(rv)},{_fmt(pv)},{int(lv)},{_fmt(grid.values[i, j, k])}\n")


def write_grid_json(fh, spec, req, grid):
    doc = {
        "format": f"cylwigner-grid v{__version__}",
        "state": serialize_state_spec(spec),
        "convention": req.convention.value,
        "quad_order": req.quad_order,
        "r_nodes": [_fmt(v) for v in grid.r_nodes],
        "phi_nodes": [_fmt(v) for v in grid.phi_nodes],
        "ell_values": [int(v) for v in grid.ell_values],
        "values": [[[_fmt(v) for v in row] for row in plane] for plane in grid.values],
    }
    json.dump(doc, fh, indent=1, sort_keys=True)
    fh.write("\n")


def cmd_wigner_cyl(spec, req, out_path, fmt="csv", n_workers=1):
    state = build_state(spec)
    rule = gauss_hermite(req.quad_order)
    r, phi, ell = req.axes()
    grid = wigner_cyl_grid(state, r, phi, ell, rule, n_workers=n_workers)
    writer = write_grid_csv if fmt == "csv" else write_grid_json
    if out_path in (None, "-"):
        writer(sys.stdout, spec, req, grid)
    else:
        with open(out_path, "w") as fh:
            writer(fh, spec, req, grid)
    return EXIT_OK


def cmd_oracle_check(spec, n_points=10, seed=0, r_range=(0.5, 2.2), ell_span=3,
                     stream=None):
    """Compare the two evaluation routes at random points; report the ratios."""
    stream = stream or sys.stdout
    state = build_state(spec)
    rng = np.random.default_rng(seed)
    gh = gauss_hermite(state.max_total_quanta + 4)
    pr_rule = gauss_hermite(state.max_total_quanta + 8)
    ratios = []
    for _ in range(n_points):
        pt = CylPoint(rng.uniform(*r_range), rng.uniform(0, 2 * np.pi),
                      int(rng.integers(-ell_span, ell_span + 1)))
        direct = wigner_cyl(state, pt, gh)
        brute = oracle_cyl_from_cartesian(state, pt, pr_rule)
        if abs(brute) < 1e-12:
            stream.write(f"r={pt.r:.4f} phi={pt.phi:.4f} ell={pt.ell:+d}  "
                         "skipped (both routes vanish)\n")
            continue
        ratio = direct / brute
        ratios.append(ratio)
        stream.write(f"r={pt.r:.4f} phi={pt.phi:.4f} ell={pt.ell:+d}  "
                     f"ratio={ratio:.12f}\n")
    if not ratios:
        stream.write("no usable points\n")
        return EXIT_TOLERANCE
    ratios = np.array(ratios)
    spread = (ratios.max() - ratios.min()) / abs(ratios.mean())
    ok = spread <= ORACLE_SPREAD_TOL
    stream.write(f"kappa={ratios.mean():.12f} (reference {KAPPA:.12f}) "
                 f"spread={spread:.3e} -> {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_TOLERANCE


def _error_record(code, exc):
    return json.dumps({"error": type(exc).__name__, "exit": code, "message": str(exc)})


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cylwigner",
        description="Cylindrical-coordinate Wigner functions of two-mode OAM states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--state", required=True,
                        help='state spec, e.g. "eigenstate N=3 l0=1" or JSON')

    g = sub.add_parser("wigner-cyl", parents=[common],
                       help="evaluate W(r, phi, ell) on a grid and export it")
    g.add_argument("--r-min", type=float, default=1e-3)
    g.add_argument("--r-max", type=float, default=6.0)
    g.add_argument("--nr", type=int, default=64)
    g.add_argument("--nphi", type=int, default=64)
    g.add_argument("--lmax", type=int, default=5)
    g.add_argument("--lmin", type=int, default=None,
                   help="lowest ell (default -lmax)")
    g.add_argument("--quad-order", type=int, default=None,
                   help="Gauss-Hermite order (default: state quanta + 8)")
    g.add_argument("--convention", choices=["literal", "marginal"], default="marginal")
    g.add_argument("--format", choices=["csv", "json"], default="csv")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-", help="output path, '-' for stdout")

    o = sub.add_parser("oracle-check", parents=[common],
                       help="cross-check the transform against the brute-force route")
    o.add_argument("--n-points", type=int, default=10)
    o.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        spec = parse_state_spec(args.state)
    except SpecParseError as e:
        print(_error_record(EXIT_PARSE, e), file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(_error_record(EXIT_PRECONDITION, e), file=sys.stderr)
        return EXIT_PRECONDITION

    try:
        if args.command == "wigner-cyl":
            state = build_state(spec)
            order = args.quad_order
            if order is None:
                order = state.max_total_quanta + 8
            req = GridRequest(args.r_min, args.r_max, args.nr, args.nphi,
                              args.lmin if args.lmin is not None else -args.lmax,
                              args.lmax, order, Convention(args.convention))
            n_workers = max(1, int(os.environ.get("OAM_WIGNER_THREADS", "1")))
            return cmd_wigner_cyl(spec, req, args.out, args.format, n_workers)
        return cmd_oracle_check(spec, args.n_points, args.seed)
    except ValueError as e:
        print(_error_record(EXIT_PRECONDITION, e), file=sys.stderr)
        return EXIT_PRECONDITION
    except CylWignerError as e:
        print(_error_record(EXIT_TOLERANCE, e), file=sys.stderr)
        return EXIT_TOLERANCE


if __name__ == "__main__":
    sys.exit(main())
