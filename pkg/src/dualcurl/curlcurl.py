"""The two discrete curl-curl solvers on the reference square.

Neumann problem (primal): find the nodal dofs F of the scalar field from

    (E10^T M1 E10 + M0) F = -T^T Ehat ,

Dirichlet problem (dual): find the dual edge dofs Et of the vector field
from

    (E10 inv(M0) E10^T + inv(M1)) Et = -E10 inv(M0) T^T Ehat ,

where Ehat are the 4N boundary dofs obtained by integrating the
tangential trace n x E against the boundary loop basis, counter-clockwise
with positive arclength measure.  The two solutions are linked exactly by
Et = M1 E10 F, the discrete form of E = curl F, and carry equal
H(curl) norms.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .basis1d import gauss_rule, gll_nodes, lagrange_eval
from .galerkin import (
    GramSet,
    dual_psi1_table,
    dual_psi2_table,
    psi0_table,
    psi1_table,
    spd_solve,
)
from .operators2d import build_incidence, build_trace, side_dof_indices

__all__ = [
    "AnalyticField",
    "exponential_pair",
    "BoundaryData",
    "Solution",
    "Discretization",
    "project_boundary_data",
    "solve_neumann",
    "solve_dirichlet",
    "solve_both",
    "weak_curl",
    "norm_F",
    "norm_E",
    "reconstruct",
    "error_norms",
]

# outward normals of the four sides of [-1,1]^2
_NORMALS = {"S": (0.0, -1.0), "E": (1.0, 0.0), "N": (0.0, 1.0), "W": (-1.0, 0.0)}


@dataclass(frozen=True)
class AnalyticField:
    """A scalar field F with its curl E = (dF/dy, -dF/dx), or a bare
    vector field E with its scalar curl dEy/dx - dEx/dy.

    The vector part is what feeds the boundary data n x E; the scalar
    parts are used for error norms (curl E = -F for the homogeneous
    curl-curl equation).
    """

    Ex: Callable
    Ey: Callable
    scalar: Optional[Callable] = None        # F with curl F = (Ex, Ey)
    vector_curl: Optional[Callable] = None   # curl (Ex, Ey)

    def tangential_trace(self, side, x, y):
        """n x E = n_x Ey - n_y Ex on the given side."""
        nx, ny = _NORMALS[side]
        return nx * self.Ey(x, y) - ny * self.Ex(x, y)


def exponential_pair():
    """The exact pair F = e^x + e^y, E = curl F = (e^y, -e^x)."""
    return AnalyticField(
        Ex=lambda x, y: np.exp(y),
        Ey=lambda x, y: -np.exp(x),
        scalar=lambda x, y: np.exp(x) + np.exp(y),
        vector_curl=lambda x, y: -np.exp(x) - np.exp(y),
    )


@dataclass(frozen=True)
class BoundaryData:
    """4N boundary dofs in trace-row order."""

    degree: int
    dofs: np.ndarray


@dataclass(frozen=True)
class Solution:
    """Both discrete solutions for one boundary data set."""

    degree: int
    boundary: BoundaryData
    neumann: np.ndarray    # nodal dofs F, length (N+1)^2
    dirichlet: np.ndarray  # dual edge dofs Et, length 2N(N+1)


class Discretization:
    """Caches the operators for one degree N.

    `rule` selects the mass-matrix quadrature: the collocated "lobatto"
    rule (default) reproduces the published norm values; "gauss" gives
    exactly integrated masses.  The structural identities (equivalence of
    the two solves, equality of norms, E^h = curl F^h) hold for either.
    """

    def __init__(self, N, rule="lobatto"):
        self.degree = N
        self.rule = rule
        self.nodes = gll_nodes(N)
        self.E10 = build_incidence(N)
        self.T = build_trace(N)
        self.gram = GramSet(N, rule)


def _disc(disc_or_N):
    return disc_or_N if isinstance(disc_or_N, Discretization) else Discretization(disc_or_N)


def project_boundary_data(field, N, n_quad=None):
    """Project the tangential trace n x E onto the boundary loop basis.

    Ehat_k = closed-loop integral of psi_k(s) * (n x E)(s) ds, traversed
    counter-clockwise; corner dofs collect both adjacent sides.  The data
    is generally non-polynomial, so the per-side Gauss rule defaults to
    N+15 points.
    """
    disc = _disc(N)
    N = disc.degree
    q = gauss_rule(n_quad if n_quad is not None else N + 15)
    H = lagrange_eval(disc.nodes, q.points)  # (N+1, M)
    coords = {
        "S": (q.points, np.full_like(q.points, -1.0)),
        "E": (np.full_like(q.points, 1.0), q.points),
        "N": (q.points, np.full_like(q.points, 1.0)),
        "W": (np.full_like(q.points, -1.0), q.points),
    }
    dofs = np.zeros(4 * N)
    for side, side_dofs in side_dof_indices(N).items():
        x, y = coords[side]
        ehat = field.tangential_trace(side, x, y)
        dofs[side_dofs] += H @ (q.weights * ehat)
    return BoundaryData(degree=N, dofs=dofs)


def solve_neumann(bd, disc=None):
    """Primal solve: nodal dofs F from (E10^T M1 E10 + M0) F = -T^T Ehat."""
    disc = _disc(disc if disc is not None else bd.degree)
    A = disc.E10.T @ disc.gram.M1 @ disc.E10 + disc.gram.M0
    return spd_solve(A, -disc.T.T @ bd.dofs)


def solve_dirichlet(bd, disc=None):
    """Dual solve: edge dofs Et from
    (E10 inv(M0) E10^T + inv(M1)) Et = -E10 inv(M0) T^T Ehat."""
    disc = _disc(disc if disc is not None else bd.degree)
    M2d = disc.gram.M2_dual
    A = disc.E10 @ M2d @ disc.E10.T + disc.gram.M1_dual
    return spd_solve(A, -disc.E10 @ M2d @ (disc.T.T @ bd.dofs))


def solve_both(bd, disc=None):
    disc = _disc(disc if disc is not None else bd.degree)
    return Solution(
        degree=disc.degree,
        boundary=bd,
        neumann=solve_neumann(bd, disc),
        dirichlet=solve_dirichlet(bd, disc),
    )


def weak_curl(Et, bd, disc=None):
    """Dofs of the weak curl of the dual field: E10^T Et + T^T Ehat."""
    disc = _disc(disc if disc is not None else bd.degree)
    if Et.shape[0] != disc.E10.shape[0] or bd.dofs.shape[0] != disc.T.shape[0]:
        raise ValueError("dof vector lengths do not match the degree")
    return disc.E10.T @ Et + disc.T.T @ bd.dofs


def norm_F(F, disc):
    """H(curl) norm of the primal scalar field from its nodal dofs."""
    disc = _disc(disc)
    c = disc.E10 @ F
    return float(np.sqrt(F @ disc.gram.M0 @ F + c @ disc.gram.M1 @ c))


def norm_E(Et, bd, disc=None):
    """H(curl) norm of the dual vector field from its edge dofs."""
    disc = _disc(disc if disc is not None else bd.degree)
    w = weak_curl(Et, bd, disc)
    return float(
        np.sqrt(w @ disc.gram.solve_mass0(w) + Et @ disc.gram.solve_mass1(Et))
    )


def reconstruct(kind, dofs, x, y, disc):
    """Pointwise field values at scattered points.

    kind: "primal-scalar"  -> psi0 F                  (scalar)
          "primal-curl"    -> psi1 E10 F              (vector: xi, eta)
          "dual-vector"    -> psi1 inv(M1) Et         (vector: xi, eta)
          "dual-weak-curl" -> psi0 inv(M0) w          (scalar)
    """
    disc = _disc(disc)
    ns = disc.nodes
    dofs = np.asarray(dofs, dtype=float)
    if kind == "primal-scalar":
        return dofs @ psi0_table(ns, x, y)
    if kind == "primal-curl":
        Vxi, Veta = psi1_table(ns, x, y)
        c = disc.E10 @ dofs
        return c @ Vxi, c @ Veta
    if kind == "dual-vector":
        Vxi, Veta = dual_psi1_table(ns, disc.gram, x, y)
        return dofs @ Vxi, dofs @ Veta
    if kind == "dual-weak-curl":
        return dofs @ dual_psi2_table(ns, disc.gram, x, y)
    raise ValueError(f"unknown reconstruction kind {kind!r}")


def error_norms(sol, exact, disc=None, boost=15):
    """H(curl) errors (errF, errE) against the analytic pair.

    Uses a tensor Gauss grid with N+boost points per direction; the curl
    term of the dual error uses the weak-curl reconstruction and the
    analytic scalar curl of E.
    """
    disc = _disc(disc if disc is not None else sol.degree)
    N = disc.degree
    q = gauss_rule(N + boost)
    X, Y = np.meshgrid(q.points, q.points, indexing="ij")
    x, y = X.ravel(), Y.ravel()
    w2 = np.outer(q.weights, q.weights).ravel()

    Fh = reconstruct("primal-scalar", sol.neumann, x, y, disc)
    cFx, cFy = reconstruct("primal-curl", sol.neumann, x, y, disc)
    errF2 = w2 @ (
        (exact.scalar(x, y) - Fh) ** 2
        + (exact.Ex(x, y) - cFx) ** 2
        + (exact.Ey(x, y) - cFy) ** 2
    )

    Ehx, Ehy = reconstruct("dual-vector", sol.dirichlet, x, y, disc)
    w = weak_curl(sol.dirichlet, sol.boundary, disc)
    cEh = reconstruct("dual-weak-curl", w, x, y, disc)
    errE2 = w2 @ (
        (exact.Ex(x, y) - Ehx) ** 2
        + (exact.Ey(x, y) - Ehy) ** 2
        + (exact.vector_curl(x, y) - cEh) ** 2
    )
    return float(np.sqrt(errF2)), float(np.sqrt(errE2))
