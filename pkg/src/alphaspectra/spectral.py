"""Alpha-spectral radius, Perron vector and closed-form characteristic polynomials.

Every closed form here is an evaluator at a single point ``(x, alpha)``; the
determinant oracle in :mod:`alphaspectra.digraph` is what they are checked
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digraph import (
    Digraph,
    DigraphError,
    EvalPoint,
    alpha_matrix,
    charpoly_oracle,
    check_alpha,
    is_strongly_connected,
    lu_det,
    principal_minor,
    strong_components,
    submatrix_det,
)
from .families import FamilySpec, theta


# radius comparisons closer than this are reported as ties
TIE_MARGIN = 1e-9


class ConvergenceError(ArithmeticError):
    """Power iteration hit its cap; ``best`` carries the last estimate."""

    def __init__(self, message: str, best: "SpectralResult"):
        super().__init__(message)
        self.best = best


class ResamplePoint(ArithmeticError):
    """A denominator vanished at the evaluation point; pick another ``x``."""


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    perron: np.ndarray
    residual: float
    iterations: int
    method: str


def spectral_radius(g: Digraph, alpha: float, tol: float = 1e-12,
                    max_iter: int = 10**6) -> SpectralResult:
    """Power iteration on ``A_alpha + I`` from the all-ones vector.

    The unit shift makes the iteration matrix primitive, so periodic digraphs
    (a bare cycle at ``alpha = 0``) still converge. Convergence is declared on
    the eigen-residual ``||A x - rho x||_inf`` with ``||x||_1 = 1``. After a
    short warm-up the iteration is applied in blocks ``B**stride`` with
    doubling stride; ``iterations`` counts single power steps either way.
    """
    check_alpha(alpha)
    if tol <= 0:
        raise DigraphError("tol must be positive")
    if not is_strongly_connected(g):
        raise DigraphError("spectral_radius needs a strongly connected digraph; "
                           "use rho_any for the per-component radius")
    return _power(alpha_matrix(g, alpha), tol, max_iter)


def _power(M: np.ndarray, tol: float, max_iter: int) -> SpectralResult:
    n = M.shape[0]
    B = M + np.eye(n)
    x = np.full(n, 1.0 / n)
    stride, P = 1, B
    steps = 0
    warmup = 64
    best = None
    while steps < max_iter:
        y = B @ x
        lam = y.sum()
        resid = float(np.max(np.abs(y - lam * x)))
        best = (lam - 1.0, x, resid)
        if resid <= tol:
            return SpectralResult(lam - 1.0, x, resid, steps, "power")
        if steps >= warmup and stride < 1 << 20:
            stride *= 2
            P = P @ P
            P /= P.max()
        z = y if stride == 1 else P @ x
        x = z / z.sum()
        steps += stride
    rho, x, resid = best
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps",
                           SpectralResult(rho, x, resid, steps, "power"))


def rho_any(g: Digraph, alpha: float, tol: float = 1e-12) -> float:
    """Largest real eigenvalue of ``A_alpha(g)`` for any digraph.

    The spectrum is the union over strong components of the spectra of the
    corresponding principal blocks; single-vertex components contribute their
    diagonal entry ``alpha * outdegree``.
    """
    M = alpha_matrix(g, alpha)
    best = 0.0
    for comp in strong_components(g):
        if len(comp) == 1:
            best = max(best, M[comp[0], comp[0]])
            continue
        best = max(best, _power(M[np.ix_(comp, comp)], tol, 10**6).rho)
    return float(best)


def rho_bisect(g: Digraph, alpha: float, bracket: tuple[float, float] | None = None,
               tol: float = 1e-12) -> float:
    """Largest root of ``x -> det(x I - A_alpha)``, bisected on the determinant oracle.

    A plain sign scan can step over a pair of close roots, so the upper end is
    first pulled down with Newton steps ``x -= 1 / tr((x I - A)^-1)``. Above the
    largest real part every eigenvalue adds a positive amount to the trace, so
    these steps never pass the top root. The lower end is then found by
    doubling a small offset until the determinant is non-positive, and that
    cell is bisected to width ``tol``. The default bracket is
    ``[min outdegree - 0.5, max outdegree + 1]``.
    """
    check_alpha(alpha)
    if tol <= 0:
        raise DigraphError("tol must be positive")
    deg = g.out_degrees()
    if bracket is None:
        bracket = (float(deg.min()) - 0.5, float(deg.max()) + 1.0)
    lo, hi = map(float, bracket)
    M = alpha_matrix(g, alpha)
    eye = np.eye(g.n)

    def f(x):
        return lu_det(x * eye - M)

    if not f(hi) > 0:
        raise ArithmeticError(f"oracle is not positive at the bracket top {hi}")
    upper, lower = hi, None
    for _ in range(2000):
        try:
            step = 1.0 / np.trace(np.linalg.inv(upper * eye - M))
        except np.linalg.LinAlgError:
            break
        if not step > 0:
            break
        x = upper - step
        if x < lo or f(x) <= 0:
            # rounding carried the step onto or past the root
            lower = max(x, lo)
            break
        upper = x
        if step <= 2 * np.finfo(float).eps * abs(upper):
            break
    if lower is None or f(lower) > 0:
        # the radius is at least max(alpha * maxdeg, mindeg)
        floor = max(alpha * deg.max(), deg.min())
        delta = 4 * np.finfo(float).eps * abs(upper)
        while True:
            x = upper - delta
            if x < floor and upper - floor <= tol:
                # top root sits closer to the floor than double precision resolves
                lower = floor
                break
            if x < lo:
                raise ArithmeticError(f"no sign change in [{lo}, {hi}]")
            if f(x) <= 0:
                lower = x
                break
            upper, delta = x, 2 * delta
    while upper - lower > tol:
        mid = 0.5 * (lower + upper)
        if mid in (lower, upper):
            break
        if f(mid) > 0:
            upper = mid
        else:
            lower = mid
    return 0.5 * (lower + upper)


def random_eval_points(seed: int, count: int, x_range=(1.01, 3.0),
                       alpha_range=(0.0, 0.95)) -> list[EvalPoint]:
    rng = np.random.default_rng(seed)
    xs = rng.uniform(*x_range, size=count)
    alphas = rng.uniform(*alpha_range, size=count)
    return [EvalPoint(float(x), float(a)) for x, a in zip(xs, alphas)]


# ---------------------------------------------------------------------------
# closed forms


def F_value(K1: Sequence[int], K2: Sequence[int], p: EvalPoint) -> float:
    d = p.d
    return sum(d**k for k in K1) * sum(d**j for j in K2)


def cp_coalescence(parts: Sequence[tuple[float, float]], x: float) -> float:
    """Coalescence of ``k`` rooted digraphs, from ``(phi_i, psi_i)`` pairs."""
    k = len(parts)
    if any(psi == 0 for _, psi in parts):
        raise ResamplePoint("psi vanishes at this x")
    prod = math.prod(psi for _, psi in parts)
    return prod * ((1 - k) * x + sum(phi / psi for phi, psi in parts))


def cp_two_coalescence(phiG: float, psiGu: float, phiH: float, psiHv: float, x: float) -> float:
    return phiG * psiHv + psiGu * phiH - x * psiGu * psiHv


def cp_attach_cycles(g: Digraph, hub: int, lengths: Sequence[int], p: EvalPoint) -> float:
    """``g`` with directed cycles of the given lengths attached at ``hub``."""
    x, a = p.x, p.alpha
    phi_g = charpoly_oracle(g, p)
    if not lengths:
        return phi_g
    if any(n_i < 2 for n_i in lengths):
        raise DigraphError("attached cycles need length >= 2")
    if not 0 <= hub < g.n:
        raise DigraphError(f"hub {hub} out of range")
    k = len(lengths)
    n = sum(n_i - 1 for n_i in lengths)
    d = p.d
    phi_sub = principal_minor(g, a, [hub], x)
    return (x - a) ** n * (phi_g - phi_sub * (k * a + (1 - a) * sum(d ** (n_i - 1) for n_i in lengths)))


def _two_cycle_formula(f0, f1, f2, f3, s, t, x, a):
    return ((x - a) ** (s + t - 2) * (a * a * f3 - a * (f1 + f2) + f0)
            + (x - a) ** (t - 1) * (1 - a) ** s * (a * f3 - f1)
            + (x - a) ** (s - 1) * (1 - a) ** t * (a * f3 - f2)
            + (1 - a) ** (s + t) * f3)


def cp_two_cycles_two_vertices(g: Digraph, u: int, v: int, s: int, t: int, p: EvalPoint) -> float:
    """An ``s``-cycle attached at ``u`` and a ``t``-cycle at ``v``."""
    if u == v:
        raise DigraphError("u and v must differ")
    if s < 2 or t < 2:
        raise DigraphError("attached cycles need length >= 2")
    x, a = p.x, p.alpha
    f0 = charpoly_oracle(g, p)
    f1 = principal_minor(g, a, [u], x)
    f2 = principal_minor(g, a, [v], x)
    f3 = principal_minor(g, a, [u, v], x)
    return _two_cycle_formula(f0, f1, f2, f3, s, t, x, a)


def _cycles_through(g: Digraph, v: int) -> list[list[int]]:
    succ = g.successors()
    found = []
    path = [v]
    on_path = {v}

    def walk(a):
        for b in succ[a]:
            if b == v:
                found.append(list(path))
            elif b not in on_path:
                path.append(b)
                on_path.add(b)
                walk(b)
                path.pop()
                on_path.remove(b)

    walk(v)
    return found


def cp_schwenk_vertex(g: Digraph, v: int, p: EvalPoint, max_arcs: int = 25) -> float:
    """Expansion along the directed cycles through ``v``."""
    if g.m > max_arcs:
        raise DigraphError(f"cycle enumeration guarded to m <= {max_arcs}, got m = {g.m}")
    x, a = p.x, p.alpha
    dv = len(g.out_neighbors(v))
    total = (x - a * dv) * principal_minor(g, a, [v], x)
    for cyc in _cycles_through(g, v):
        total -= (1 - a) ** len(cyc) * principal_minor(g, a, cyc, x)
    return total


def cp_theta(K1: Sequence[int], K2: Sequence[int], p: EvalPoint) -> float:
    x, a = p.x, p.alpha
    s, t = len(K1), len(K2)
    n = 2 + sum(k - 1 for k in K1) + sum(j - 1 for j in K2)
    return (x - a) ** (n - 2) * (x - a * s) * (x - a * t) - (x - a) ** n * F_value(K1, K2, p)


def cp_theta_hat(n: int, p: EvalPoint) -> float:
    if n < 4:
        raise DigraphError("theta_hat needs n >= 4")
    x, a = p.x, p.alpha
    return ((x - 2 * a) ** 2 * (x - a) ** (n - 2)
            - (x - 2 * a) * (1 - a) ** (n - 1)
            - (x - a) * (1 - a) ** (n - 1)
            - (1 - a) ** n)


def cp_merged(g1: Digraph, u1: int, v1: int, g2: Digraph, u2: int, v2: int, p: EvalPoint) -> float:
    """Merge ``u1~u2`` and ``v1~v2`` where ``u1`` is a source/``v1`` a sink in ``g1`` and conversely in ``g2``."""
    ind1, outd1 = g1.in_degrees(), g1.out_degrees()
    ind2, outd2 = g2.in_degrees(), g2.out_degrees()
    if ind1[u1] or outd1[v1]:
        raise DigraphError("g1 needs indegree(u1) = outdegree(v1) = 0")
    if outd2[u2] or ind2[v2]:
        raise DigraphError("g2 needs outdegree(u2) = indegree(v2) = 0")
    x, a = p.x, p.alpha
    d1, d2 = outd1[u1], outd2[v2]
    det1 = principal_minor(g1, a, [u1, v1], x)
    det2 = principal_minor(g2, a, [u2, v2], x)
    cof1 = submatrix_det(g1, a, [v1], [u1], x)
    cof2 = submatrix_det(g2, a, [u2], [v2], x)
    return (x - a * d1) * (x - a * d2) * det1 * det2 - cof1 * cof2


def cp_cycle(n: int, p: EvalPoint) -> float:
    x, a = p.x, p.alpha
    return (x - a) ** n - (1 - a) ** n


def cp_rose(parts: Sequence[int], p: EvalPoint) -> float:
    x, a = p.x, p.alpha
    return cp_coalescence([(cp_cycle(k, p), (x - a) ** (k - 1)) for k in parts], x)


def cp_inf(p_len: int, q: int, s: int, p: EvalPoint) -> float:
    x, a = p.x, p.alpha
    f0 = cp_cycle(q, p)
    f1 = f2 = (x - a) ** (q - 1)
    f3 = (x - a) ** (q - 2)
    return _two_cycle_formula(f0, f1, f2, f3, p_len, s, x, a)


def closed_form(spec: FamilySpec, p: EvalPoint) -> float:
    """Characteristic polynomial of a family instance from its closed form."""
    t, a = spec.tag, spec.params
    if t == "C":
        return cp_cycle(a[0], p)
    if t == "R":
        return cp_rose(a[0], p)
    if t == "Inf":
        return cp_inf(*a, p)
    if t == "Th":
        return cp_theta(a[0], a[1], p)
    if t == "CnG":
        n, g = a
        return cp_theta((n + 1 - g, 1), (g - 1,), p)
    if t == "ThHat":
        return cp_theta_hat(a[0], p)
    # a path bundle is acyclic, so only the diagonal survives
    K = a[0]
    n = 2 + sum(k - 1 for k in K)
    return (p.x - p.alpha * len(K)) * (p.x - p.alpha) ** (n - 2) * p.x


def path_cofactor(K: Sequence[int], p: EvalPoint) -> float:
    """Cofactor of the ``(v, u)`` position of ``x I - A_alpha`` on a path bundle."""
    n = 2 + sum(k - 1 for k in K)
    return (p.x - p.alpha) ** (n - 1) * sum(p.d**k for k in K)


def rel_err(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def compare(r1: float, r2: float) -> int:
    """Sign of ``r1 - r2`` with ties inside :data:`TIE_MARGIN` mapped to 0."""
    if abs(r1 - r2) <= TIE_MARGIN:
        return 0
    return 1 if r1 > r2 else -1


__all__ = [
    "ConvergenceError", "ResamplePoint", "SpectralResult", "TIE_MARGIN",
    "spectral_radius", "rho_any", "rho_bisect", "random_eval_points",
    "F_value", "cp_coalescence", "cp_two_coalescence", "cp_attach_cycles",
    "cp_two_cycles_two_vertices", "cp_schwenk_vertex", "cp_theta", "cp_theta_hat",
    "cp_merged", "cp_cycle", "cp_rose", "cp_inf", "closed_form", "path_cofactor",
    "rel_err", "compare", "theta",
]
