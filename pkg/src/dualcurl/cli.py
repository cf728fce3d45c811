"""Command-line driver: norm table, pointwise identity grids, convergence
study and an invariant self-check.

Outputs (all deterministic, period decimal separator, 12 significant
digits):

  table1.csv   header N,normF,normE,absdiff
  fig3.csv     header N,errF,errE
  fig2_xi.csv  grid_size rows of comma-separated reals (xi component of
               E^h - curl F^h at N=3 on an interior Gauss tensor grid)
  fig2_eta.csv same for the eta component
  incidence.csv, trace.csv   integer operator dumps (--emit matrices)
"""

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import curlcurl as cc
from .basis1d import gauss_rule, gll_nodes, edge_eval
from .galerkin import GramSet, psi0_table
from .operators2d import build_incidence, build_trace

__all__ = [
    "StudyConfig",
    "StudyReport",
    "DegreeRecord",
    "run_study",
    "emit_fig2",
    "self_check",
    "theoretical_norm",
    "main",
]

EMIT_CHOICES = ("table1", "fig2", "fig3", "matrices")


def theoretical_norm():
    """sqrt(8 (sinh 2 + sinh^2 1)), the exact H(curl) norm of the test pair."""
    return float(np.sqrt(8.0 * (np.sinh(2.0) + np.sinh(1.0) ** 2)))


@dataclass(frozen=True)
class StudyConfig:
    max_degree: int = 9
    grid_size: int = 30
    quadrature_boost: int = 15
    output_dir: Path = Path("out")
    emit: frozenset = frozenset({"table1", "fig3"})

    def __post_init__(self):
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1")
        if self.grid_size < 2:
            raise ValueError("grid_size must be >= 2")
        bad = set(self.emit) - set(EMIT_CHOICES)
        if bad:
            raise ValueError(f"unknown emit targets: {sorted(bad)}")


@dataclass(frozen=True)
class DegreeRecord:
    N: int
    normF: float
    normE: float
    errF: float
    errE: float
    equivalence_residual: float
    wall_time_ms: float


@dataclass(frozen=True)
class StudyReport:
    records: tuple
    theoretical_norm: float


def _fmt(v):
    return f"{v:.12g}"


def run_study(cfg, log=print):
    """Solve both problems for N = 1..max_degree with the exponential test
    data; record norms, errors and the equivalence residual, and write
    table1.csv / fig3.csv when requested."""
    exact = cc.exponential_pair()
    records = []
    for N in range(1, cfg.max_degree + 1):
        t0 = time.perf_counter()
        disc = cc.Discretization(N)
        bd = cc.project_boundary_data(exact, disc, n_quad=N + cfg.quadrature_boost)
        sol = cc.solve_both(bd, disc)
        nF = cc.norm_F(sol.neumann, disc)
        nE = cc.norm_E(sol.dirichlet, bd, disc)
        ref = disc.gram.M1 @ disc.E10 @ sol.neumann
        eq = float(
            np.linalg.norm(sol.dirichlet - ref) / np.linalg.norm(sol.dirichlet)
        )
        errF, errE = cc.error_norms(sol, exact, disc, boost=cfg.quadrature_boost)
        records.append(
            DegreeRecord(
                N=N,
                normF=nF,
                normE=nE,
                errF=errF,
                errE=errE,
                equivalence_residual=eq,
                wall_time_ms=(time.perf_counter() - t0) * 1e3,
            )
        )
    report = StudyReport(records=tuple(records), theoretical_norm=theoretical_norm())

    if "table1" in cfg.emit:
        _write_csv(
            cfg.output_dir / "table1.csv",
            "N,normF,normE,absdiff",
            [
                (r.N, _fmt(r.normF), _fmt(r.normE), _fmt(abs(r.normF - r.normE)))
                for r in records
            ],
        )
        log(_norm_table_text(report))
    if "fig3" in cfg.emit:
        _write_csv(
            cfg.output_dir / "fig3.csv",
            "N,errF,errE",
            [(r.N, _fmt(r.errF), _fmt(r.errE)) for r in records],
        )
    return report


def _norm_table_text(report):
    lines = [f"{'N':>3}  {'|F^h|_H(curl)':>14}  {'|E^h|_H(curl)':>14}"]
    for r in report.records:
        lines.append(f"{r.N:>3}  {r.normF:>14.8f}  {r.normE:>14.8f}")
    lines.append(f"theoretical value: {report.theoretical_norm:.8f}")
    return "\n".join(lines)


def _write_csv(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(str(c) for c in row) + "\n")


def emit_fig2(cfg, N=3, log=print):
    """Pointwise difference E^h - curl F^h on an interior Gauss tensor grid.

    Writes the two component grids and returns (grid_xi, grid_eta, maxabs).
    The grid avoids the element edges at +-1 on purpose.
    """
    exact = cc.exponential_pair()
    disc = cc.Discretization(N)
    bd = cc.project_boundary_data(exact, disc, n_quad=N + cfg.quadrature_boost)
    sol = cc.solve_both(bd, disc)

    g = gauss_rule(cfg.grid_size).points
    X, Y = np.meshgrid(g, g, indexing="ij")
    x, y = X.ravel(), Y.ravel()
    Ex, Ey = cc.reconstruct("dual-vector", sol.dirichlet, x, y, disc)
    Cx, Cy = cc.reconstruct("primal-curl", sol.neumann, x, y, disc)
    dxi = (Ex - Cx).reshape(cfg.grid_size, cfg.grid_size)
    deta = (Ey - Cy).reshape(cfg.grid_size, cfg.grid_size)

    for name, grid in (("fig2_xi.csv", dxi), ("fig2_eta.csv", deta)):
        _write_csv(
            cfg.output_dir / name,
            ",".join(_fmt(v) for v in g),
            [tuple(_fmt(v) for v in row) for row in grid],
        )
    maxabs = float(max(np.abs(dxi).max(), np.abs(deta).max()))
    log(f"max |E^h - curl F^h| on {cfg.grid_size}x{cfg.grid_size} grid, "
        f"N={N}: {maxabs:.3e}")
    return dxi, deta, maxabs


def emit_matrices(cfg, N=3):
    """Dump the incidence and trace operators as integer CSV."""
    for name, M in (("incidence.csv", build_incidence(N)),
                    ("trace.csv", build_trace(N))):
        _write_csv(cfg.output_dir / name, ",".join(str(c) for c in range(M.shape[1])),
                   [tuple(int(v) for v in row) for row in M])


def _expected_incidence_n3():
    E = np.zeros((24, 16), dtype=np.int64)
    for r in range(12):
        E[r, r] = -1
        E[r, r + 4] = 1
    for b in range(4):
        for k in range(3):
            E[12 + 3 * b + k, 4 * b + k] = 1
            E[12 + 3 * b + k, 4 * b + k + 1] = -1
    return E


def _expected_trace_n3():
    T = np.zeros((12, 16), dtype=np.int64)
    for r, c in enumerate([0, 1, 2, 3, 7, 11, 15, 14, 13, 12, 8, 4]):
        T[r, c] = 1
    return T


def self_check(cfg, log=print, incidence_builder=build_incidence):
    """Run the invariant suite; returns True iff everything passes.

    `incidence_builder` is a test hook: swapping in a broken builder must
    make the fixture comparison fail.
    """
    checks = []

    def check(name, residual, tol):
        ok = residual <= tol
        checks.append(ok)
        log(f"{'PASS' if ok else 'FAIL'}  {name}: residual {residual:.3e} "
            f"(tol {tol:.0e})")

    # edge-basis Kronecker integrals over the node intervals
    worst = 0.0
    for N in range(1, 13):
        ns = gll_nodes(N)
        q = gauss_rule(max(N, 2))
        rows = []
        for j in range(1, N + 1):
            a, b = ns.nodes[j - 1], ns.nodes[j]
            pts = 0.5 * (b - a) * q.points + 0.5 * (a + b)
            rows.append(edge_eval(ns, pts) @ q.weights * 0.5 * (b - a))
        worst = max(worst, float(np.abs(np.column_stack(rows) - np.eye(N)).max()))
    check("edge-basis interval integrals = identity (N=1..12)", worst, 1e-12)

    # biorthogonality of the dual volume basis, exact-quadrature masses
    worst = 0.0
    for N in range(1, 9):
        ns = gll_nodes(N)
        gram = GramSet(N, rule="gauss")
        q = gauss_rule(N + 1)
        X, Y = np.meshgrid(q.points, q.points, indexing="ij")
        w2 = np.outer(q.weights, q.weights).ravel()
        P0 = psi0_table(ns, X.ravel(), Y.ravel())
        D0 = gram.solve_mass0(P0)
        worst = max(worst, float(np.abs((D0 * w2) @ P0.T - np.eye(P0.shape[0])).max()))
    check("dual/primal volume biorthogonality (N=1..8)", worst, 1e-12)

    # printed N=3 operator fixtures
    def fixture_gap(got, expected):
        if got.shape != expected.shape:
            return float("inf")
        return float(np.abs(got - expected).max())

    check("incidence matrix matches the N=3 fixture",
          fixture_gap(incidence_builder(3), _expected_incidence_n3()), 0)
    check("trace matrix matches the N=3 fixture",
          fixture_gap(build_trace(3), _expected_trace_n3()), 0)

    # equivalence of the two solves and equality of their norms
    exact = cc.exponential_pair()
    worst_eq, worst_nm = 0.0, 0.0
    for N in range(1, 9):
        disc = cc.Discretization(N)
        bd = cc.project_boundary_data(exact, disc)
        sol = cc.solve_both(bd, disc)
        ref = disc.gram.M1 @ disc.E10 @ sol.neumann
        worst_eq = max(
            worst_eq,
            float(np.linalg.norm(sol.dirichlet - ref) / np.linalg.norm(sol.dirichlet)),
        )
        nF = cc.norm_F(sol.neumann, disc)
        nE = cc.norm_E(sol.dirichlet, bd, disc)
        worst_nm = max(worst_nm, abs(nF - nE) / nF)
    check("dual edge dofs equal M1 E10 F (N=1..8)", worst_eq, 1e-11)
    check("norm of E^h equals norm of F^h (N=1..8)", worst_nm, 1e-11)

    ok = all(checks)
    log(f"self-check: {sum(checks)}/{len(checks)} passed")
    return ok


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="dualcurl",
        description="Discrete curl-curl solvers on the reference square: "
        "norm table, pointwise identity grids, convergence study.",
    )
    parser.add_argument("--max-degree", type=int, default=9)
    parser.add_argument("--grid-size", type=int, default=30)
    parser.add_argument("--quadrature-boost", type=int, default=15)
    parser.add_argument("--out", type=Path, default=Path("out"))
    parser.add_argument(
        "--emit",
        default="table1,fig3",
        help=f"comma-separated subset of {','.join(EMIT_CHOICES)}",
    )
    parser.add_argument("--self-check", action="store_true")
    args = parser.parse_args(argv)

    emit = frozenset(t for t in args.emit.split(",") if t)
    try:
        cfg = StudyConfig(
            max_degree=args.max_degree,
            grid_size=args.grid_size,
            quadrature_boost=args.quadrature_boost,
            output_dir=args.out,
            emit=emit,
        )
    except ValueError as exc:
        parser.error(str(exc))

    try:
        cfg.output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create output dir {cfg.output_dir}: {exc}",
              file=sys.stderr)
        return 2

    try:
        if emit & {"table1", "fig3"}:
            run_study(cfg)
        if "fig2" in emit:
            emit_fig2(cfg)
        if "matrices" in emit:
            emit_matrices(cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.self_check and not self_check(cfg):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
