"""Brute-force checks of extremal orderings over digraph families.

Each ``verify_*`` returns a :class:`TheoremReport`; rankings come back as
:class:`RankedFamily`. Strict inequalities closer than :data:`TIE_MARGIN` are
reported as ``tie`` counterexamples instead of being passed.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from . import exhaustive
from .digraph import Digraph, DigraphError, EvalPoint, charpoly_oracle, check_alpha, is_strongly_connected
from .families import (
    CnG,
    Cycle,
    FamilySpec,
    Inf,
    Rose,
    Theta,
    ThetaHat,
    attach_cycle,
)
from .majorization import (
    balanced,
    enum_S,
    enum_S_tilde,
    extremal_max_S,
    extremal_min_S,
    majorizes,
    zeta,
    zeta_flat,
)
from .spectral import TIE_MARGIN, ConvergenceError, cp_theta, cp_theta_hat, rho_bisect, spectral_radius

DEFAULT_ALPHAS = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


def _jsonable(obj):
    if isinstance(obj, FamilySpec):
        return str(obj)
    if isinstance(obj, (tuple, list)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj


@dataclass
class TheoremReport:
    theorem_id: str
    grid: dict
    counterexamples: list = field(default_factory=list)
    min_margin: float | None = None
    details: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.counterexamples and (self.min_margin is None or self.min_margin > TIE_MARGIN)

    def margin(self, gap: float) -> None:
        if self.min_margin is None or gap < self.min_margin:
            self.min_margin = float(gap)

    def strict(self, lower: float, upper: float, what: str) -> bool:
        """Record the claim ``lower < upper``; flags ties and reversals."""
        gap = upper - lower
        self.margin(gap)
        if gap <= TIE_MARGIN:
            kind = "tie" if abs(gap) <= TIE_MARGIN else "order"
            self.counterexamples.append({"kind": kind, "claim": what, "gap": float(gap)})
            return False
        return True

    def fail(self, kind: str, claim: str, **extra) -> None:
        self.counterexamples.append({"kind": kind, "claim": claim, **_jsonable(extra)})

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "grid": _jsonable(self.grid),
            "verified": self.verified,
            "counterexamples": _jsonable(self.counterexamples),
            "min_margin": _jsonable(self.min_margin),
            "details": _jsonable(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def merge_reports(theorem_id: str, reports: Sequence[TheoremReport], grid: dict) -> TheoremReport:
    out = TheoremReport(theorem_id, grid)
    for r in reports:
        for c in r.counterexamples:
            out.counterexamples.append({"grid": _jsonable(r.grid), **c})
        if r.min_margin is not None:
            out.margin(r.min_margin)
    out.details = {"runs": len(reports)}
    return out


@dataclass
class RankedFamily:
    alpha: float
    m: int
    entries: list
    ties: list
    count: int
    family: str = ""

    def to_rows(self, decimals: int = 6) -> list[list[str]]:
        return [[str(i + 1), str(spec), f"{rho:.{decimals}f}"] for i, (spec, rho) in enumerate(self.entries)]

    def to_csv(self, decimals: int = 6) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["rank", "spec", "rho"])
        w.writerows(self.to_rows(decimals))
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "alpha": self.alpha,
            "m": self.m,
            "count": self.count,
            "entries": [{"spec": str(s), "rho": r} for s, r in self.entries],
            "ties": [list(t) for t in self.ties],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# radii


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SPECTRA_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: Sequence) -> list:
    workers = _threads()
    if workers == 1 or len(items) < 32:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def radius(g: Digraph, alpha: float) -> float:
    """Alpha-spectral radius of a strongly connected digraph, checked against the oracle.

    The power-iteration value is accepted when the determinant changes sign
    across it; otherwise (nearly defective top eigenvalue, or no convergence)
    the bisection root is used.
    """
    try:
        r = spectral_radius(g, alpha).rho
    except ConvergenceError:
        return rho_bisect(g, alpha)
    eps = 1e-10 * max(1.0, r)
    above = charpoly_oracle(g, EvalPoint(r + eps, alpha))
    below = charpoly_oracle(g, EvalPoint(r - eps, alpha))
    if above > 0 and below <= 0:
        return r
    return rho_bisect(g, alpha)


@lru_cache(maxsize=200_000)
def spec_radius(spec: FamilySpec, alpha: float) -> float:
    return radius(spec.build(), alpha)


def _radii(specs: Sequence[FamilySpec], alpha: float) -> list[float]:
    return _map(lambda s: spec_radius(s, alpha), list(specs))


def _rank(specs: Sequence[FamilySpec], alpha: float, m: int, top: int | None, family: str) -> RankedFamily:
    rhos = _radii(specs, alpha)
    order = sorted(range(len(specs)), key=lambda i: (rhos[i], specs[i]))
    full = [(specs[i], rhos[i]) for i in order]
    keep = len(full) if top is None else max(0, top)
    ties = []
    for i in range(len(full)):
        for j in range(i + 1, len(full)):
            if full[j][1] - full[i][1] > TIE_MARGIN:
                break
            if i < keep:
                ties.append((i, j))
    return RankedFamily(alpha, m, full[:keep], ties, len(full), family)


def _extremes(report: TheoremReport, specs: Sequence[FamilySpec], rhos: Sequence[float],
              expect_max: FamilySpec | None, expect_min: FamilySpec | None) -> None:
    order = sorted(range(len(specs)), key=lambda i: rhos[i])
    lo, hi = order[0], order[-1]
    report.details["argmax"] = str(specs[hi])
    report.details["argmin"] = str(specs[lo])
    if len(specs) < 2:
        return
    if expect_max is not None:
        if specs[hi] != expect_max:
            report.fail("argmax", f"maximum at {expect_max}", found=specs[hi])
        else:
            report.strict(rhos[order[-2]], rhos[hi], f"{expect_max} is the unique maximum")
    if expect_min is not None:
        if specs[lo] != expect_min:
            report.fail("argmin", f"minimum at {expect_min}", found=specs[lo])
        else:
            report.strict(rhos[lo], rhos[order[1]], f"{expect_min} is the unique minimum")


# ---------------------------------------------------------------------------
# roses and tri-rings


def verify_rose_monotone(m: int, k: int, alpha: float) -> TheoremReport:
    check_alpha(alpha)
    if k < 1 or m < 2 * k:
        raise DigraphError(f"need m >= 2k, got m={m}, k={k}")
    rep = TheoremReport("rose_monotone", {"m": m, "k": k, "alpha": alpha})
    comps = enum_S(m, k)
    specs = [Rose(p) for p in comps]
    rhos = _radii(specs, alpha)
    for i, p in enumerate(comps):
        for j, q in enumerate(comps):
            if majorizes(q, p, strict=True):
                rep.strict(rhos[i], rhos[j], f"rho(R{p}) < rho(R{q})")
    _extremes(rep, specs, rhos, Rose(extremal_max_S(m, k)), Rose(extremal_min_S(m, k)))
    rep.details["members"] = len(specs)
    return rep


def inf_members(m: int, restrict_middle: bool = False) -> list[FamilySpec]:
    """Tri-rings with ``p <= s`` and ``p + q + s = m``.

    ``restrict_middle`` keeps only ``p <= q <= s``: the middle cycle has the
    median length, so each multiset of lengths appears once.
    """
    out = []
    for p in range(2, m):
        for s in range(p, m):
            q = m - p - s
            if q < 2:
                continue
            if restrict_middle and not p <= q <= s:
                continue
            out.append(Inf(p, q, s))
    return out


def verify_inf_max(m: int, alpha: float) -> TheoremReport:
    check_alpha(alpha)
    if m < 6:
        raise DigraphError("need m >= 6")
    rep = TheoremReport("inf_max", {"m": m, "alpha": alpha})
    specs = inf_members(m)
    _extremes(rep, specs, _radii(specs, alpha), Inf(2, 2, m - 4), None)
    rep.details["members"] = len(specs)
    return rep


def rank_inf(m: int, alpha: float, top: int | None = None, restrict_middle: bool = False) -> RankedFamily:
    check_alpha(alpha)
    if m < 6:
        raise DigraphError("need m >= 6")
    name = "INF_restricted" if restrict_middle else "INF"
    return _rank(inf_members(m, restrict_middle), alpha, m, top, name)


def cycle_chain(outer: int, middle: int, g: Digraph, u: int = 0) -> Digraph:
    """``C_outer . C_middle . g``: the middle cycle meets ``g`` at ``u`` and the outer cycle elsewhere."""
    h = attach_cycle(g, u, middle)
    # g.n is the first vertex of the middle cycle after u
    return attach_cycle(h, g.n, outer)


def verify_c_ordering(p: int, q: int, g_spec: FamilySpec, alpha: float) -> TheoremReport:
    check_alpha(alpha)
    if not p > q >= 2:
        raise DigraphError(f"need p > q >= 2, got p={p}, q={q}")
    g = g_spec.build()
    if not is_strongly_connected(g):
        raise DigraphError("base digraph must be strongly connected")
    rep = TheoremReport("c_ordering", {"p": p, "q": q, "G": str(g_spec), "alpha": alpha})
    r1 = radius(cycle_chain(p, q, g), alpha)
    r2 = radius(cycle_chain(q, p, g), alpha)
    rep.details.update(rho_H1=r1, rho_H2=r2)
    rep.strict(r2, r1, f"rho(C{p}.C{q}.G) > rho(C{q}.C{p}.G)")
    return rep


# ---------------------------------------------------------------------------
# generalized thetas


def _theta_key(K):
    return (sum(K), K)


def theta_members(m: int, s: int, t: int) -> list[FamilySpec]:
    """All thetas with ``s`` forward and ``t`` backward paths and ``m`` arcs, one per isomorphism class."""
    out = []
    for m1 in range(m - 1, 0, -1):
        for K1 in enum_S_tilde(m1, s):
            for K2 in enum_S_tilde(m - m1, t):
                # swapping u and v maps Th(K1;K2) onto Th(K2;K1)
                if s == t and _theta_key(K1) < _theta_key(K2):
                    continue
                out.append(Theta(K1, K2))
    return out


def theta_k_members(m: int, k: int, t_max: int | None = None) -> list[FamilySpec]:
    out = []
    for t in range(1, k // 2 + 1):
        if t_max is not None and t > t_max:
            continue
        out.extend(theta_members(m, k - t, t))
    return out


def verify_theta_block(m1: int, m2: int, s: int, t: int, alpha: float) -> TheoremReport:
    check_alpha(alpha)
    rep = TheoremReport("theta_block", {"m1": m1, "m2": m2, "s": s, "t": t, "alpha": alpha})
    side1, side2 = enum_S_tilde(m1, s), enum_S_tilde(m2, t)
    if not side1 or not side2:
        raise DigraphError("empty composition poset")
    pairs = [(a, b) for a in side1 for b in side2]
    specs = [Theta(a, b) for a, b in pairs]
    rhos = _radii(specs, alpha)
    for i, (a, b) in enumerate(pairs):
        for j, (c, d) in enumerate(pairs):
            if i != j and majorizes(c, a) and majorizes(d, b):
                rep.strict(rhos[i], rhos[j], f"rho({specs[i]}) < rho({specs[j]})")
    _extremes(rep, specs, rhos,
              Theta(zeta(m1, s), zeta(m2, t)),
              Theta(balanced(m1, s), balanced(m2, t)))
    rep.details["members"] = len(specs)
    return rep


def verify_theta_family(m: int, s: int, t: int, alpha: float) -> TheoremReport:
    check_alpha(alpha)
    k = s + t
    if not s >= t >= 1 or m < 2 * k - 2:
        raise DigraphError(f"need s >= t >= 1 and m >= 2(s+t)-2, got m={m}, s={s}, t={t}")
    rep = TheoremReport("theta_family", {"m": m, "s": s, "t": t, "alpha": alpha})
    if k == 2:
        rep.details["note"] = "every member is the m-cycle"
        return rep
    specs = theta_members(m, s, t)
    expect_min = Theta(zeta_flat(k - 1), (m - 2 * k + 3,)) if t == 1 else None
    _extremes(rep, specs, _radii(specs, alpha), Theta(zeta(m - 2 * t + 1, s), zeta_flat(t)), expect_min)
    rep.details["members"] = len(specs)
    return rep


def rank_theta(m: int, s: int, t: int, alpha: float, top: int | None = None) -> RankedFamily:
    check_alpha(alpha)
    return _rank(theta_members(m, s, t), alpha, m, top, f"Theta[{s},{t}]")


def verify_joint_extremal(m: int, k: int, alpha: float) -> TheoremReport:
    """Roses against thetas with the same number of arcs.

    For ``k >= 3`` the maximum over roses with ``k`` petals and thetas with
    ``k`` paths is ``Rose(gamma_1)``, and the minimum over the roses and the
    single-return thetas is ``Th(zeta_{k-1}; m-2k+3)``. For ``k = 2`` the
    thetas with three paths take part instead, since two-path thetas are cycles.
    """
    check_alpha(alpha)
    if k < 2 or m < 2 * k:
        raise DigraphError(f"need k >= 2 and m >= 2k, got m={m}, k={k}")
    rep = TheoremReport("joint_extremal", {"m": m, "k": k, "alpha": alpha})
    roses = [Rose(p) for p in enum_S(m, k)]
    if k == 2:
        upper = lower = roses + theta_members(m, 2, 1)
        expect_min = Theta((2, 1), (m - 3,))
    else:
        upper = roses + theta_k_members(m, k)
        lower = roses + theta_members(m, k - 1, 1)
        expect_min = Theta(zeta_flat(k - 1), (m - 2 * k + 3,))
    _extremes(rep, upper, _radii(upper, alpha), Rose(extremal_max_S(m, k)), None)
    hi = rep.details["argmax"]
    _extremes(rep, lower, _radii(lower, alpha), None, expect_min)
    rep.details["argmax"] = hi
    rep.details.update(max_pool=len(upper), min_pool=len(lower))
    return rep


def reassign_in_arcs(g: Digraph, u: int, v: int) -> Digraph:
    """Redirect every arc ``w -> u`` with ``w != v`` to ``w -> v``; the arc ``v -> u`` stays."""
    if u == v:
        raise DigraphError("u and v must differ")
    if (u, v) not in g.arcs:
        raise DigraphError(f"arc {(u, v)} is required")
    arcs = []
    for a, b in g.arcs:
        if b == u and a != v:
            arcs.append((a, v))
        else:
            arcs.append((a, b))
    return Digraph(g.n, tuple(arcs))


def reassign_all_arcs(g: Digraph, u: int, v: int) -> Digraph:
    """Move every arc at ``u`` onto ``v``; ``u`` ends up isolated, loops are dropped."""
    if u == v:
        raise DigraphError("u and v must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise DigraphError("vertex out of range")
    arcs = []
    for a, b in g.arcs:
        a2 = v if a == u else a
        b2 = v if b == u else b
        if a2 != b2:
            arcs.append((a2, b2))
    return Digraph(g.n, tuple(arcs))


# ---------------------------------------------------------------------------
# small radii: girth chain and the first four minima


def girth_candidates(n: int) -> list[FamilySpec]:
    return [CnG(n, g) for g in range(2, n)]


def verify_girth_chain(n: int, alpha: float, exhaustive_limit: int = exhaustive.MAX_N) -> TheoremReport:
    check_alpha(alpha)
    if n < 4:
        raise DigraphError("need n >= 4")
    rep = TheoremReport("girth_chain", {"n": n, "alpha": alpha})
    chain = [spec_radius(s, alpha) for s in girth_candidates(n)]
    rep.details["chain"] = chain
    for g in range(len(chain) - 1):
        rep.strict(chain[g + 1], chain[g], f"rho(C[{n},{g + 3}]) < rho(C[{n},{g + 2}])")
    rep.strict(1.0, chain[-1], f"rho(C[{n},{n - 1}]) > 1")
    if n <= exhaustive_limit:
        masks = exhaustive.strong_digraph_masks(n)
        radii = exhaustive.bulk_radii(masks, n, alpha)
        girths = exhaustive.bulk_girths(n)
        for g in range(2, n):
            target = chain[g - 2]
            cls = radii[girths == g]
            low = np.flatnonzero((girths == g) & (radii <= target + 1e-6))
            best = min(radius(exhaustive.mask_to_digraph(masks[i], n), alpha) for i in low) if len(low) else cls.min()
            if best < target - TIE_MARGIN:
                rep.fail("order", f"C[{n},{g}] minimal among girth {g}", found=best, expected=target)
        rep.details["exhaustive"] = len(masks)
    return rep


def first_four_candidates(n: int) -> list[FamilySpec]:
    return [Cycle(n), Theta((2, 1), (n - 2,)), Theta((2, 2), (n - 3,)), Theta((3, 1), (n - 3,))]


def _canon(spec_or_graph) -> int:
    g = spec_or_graph.build() if isinstance(spec_or_graph, FamilySpec) else spec_or_graph
    return exhaustive.canonical_mask(g)


def verify_first_four(n: int, alpha: float) -> TheoremReport:
    """Order of the four smallest radii among strongly connected digraphs on ``n`` vertices.

    Exhaustive for ``n <= 5``; above that the comparison runs over the
    candidate set of cycles with one chord, the named thetas and ``ThHat(n)``.
    The fourth place is only claimed for ``alpha <= 1/2``.
    """
    check_alpha(alpha)
    if n < 4:
        raise DigraphError("need n >= 4")
    places = 4 if alpha <= 0.5 else 3
    rep = TheoremReport("first_four", {"n": n, "alpha": alpha})
    rep.details["places_checked"] = places
    cands = first_four_candidates(n)
    expected = [spec_radius(s, alpha) for s in cands]
    rep.details["expected"] = {str(s): r for s, r in zip(cands, expected)}
    if n <= exhaustive.MAX_N:
        _first_four_exhaustive(rep, n, alpha, cands, expected, places)
    else:
        others = [ThetaHat(n)] + [CnG(n, g) for g in range(2, n - 2)]
        rest = [spec_radius(s, alpha) for s in others]
        for i in range(places - 1):
            rep.strict(expected[i], expected[i + 1], f"rho({cands[i]}) < rho({cands[i + 1]})")
        for s, r in zip(others + cands[places:], rest + expected[places:]):
            rep.strict(expected[places - 1], r, f"rho({cands[places - 1]}) < rho({s})")
        rep.details["candidates"] = len(cands) + len(others)
    return rep


def _first_four_exhaustive(rep, n, alpha, cands, expected, places):
    masks = exhaustive.strong_digraph_masks(n)
    radii = exhaustive.bulk_radii(masks, n, alpha)
    ceiling = expected[places - 1] + 1e-6
    low = np.flatnonzero(radii <= ceiling)
    # the dense eigensolver only shortlists; shortlisted radii are recomputed
    exact = sorted((radius(exhaustive.mask_to_digraph(masks[i], n), alpha), int(masks[i])) for i in low)
    classes: list[list] = []
    for r, mask in exact:
        if classes and r - classes[-1][0] <= TIE_MARGIN:
            classes[-1][1].append(mask)
        else:
            classes.append([r, [mask]])
    rep.details["exhaustive"] = len(masks)
    rep.details["subsets"] = exhaustive.subset_count(n)
    if len(classes) < places:
        rep.fail("order", f"at least {places} distinct small radii", found=len(classes))
        return
    witnesses = []
    for place in range(places):
        r, members = classes[place]
        want = _canon(cands[place])
        shapes = {exhaustive.canonical_mask(exhaustive.mask_to_digraph(x, n)) for x in members}
        witnesses.append({"rho": r, "labelled": len(members), "classes": len(shapes)})
        if shapes != {want}:
            rep.fail("witness", f"place {place + 1} held only by {cands[place]}",
                     classes=len(shapes), rho=r)
        if abs(r - expected[place]) > TIE_MARGIN:
            rep.fail("order", f"place {place + 1} radius equals rho({cands[place]})",
                     found=r, expected=expected[place])
        if place + 1 < len(classes):
            rep.margin(classes[place + 1][0] - r)
    rep.details["witnesses"] = witnesses


# ---------------------------------------------------------------------------
# scans


def _largest_root_mp(f, lo, hi, dps: int = 50, steps: int = 200):
    import mpmath as mp

    with mp.workdps(dps):
        a, b = mp.mpf(lo), mp.mpf(hi)
        fa = f(a)
        if fa >= 0 or f(b) <= 0:
            raise ArithmeticError("bracket does not straddle the root")
        for _ in range(steps):
            mid = (a + b) / 2
            if f(mid) > 0:
                b = mid
            else:
                a = mid
        return (a + b) / 2


def conjecture_pair_radii(n: int, alpha: float, dps: int = 50) -> tuple[float, float, float]:
    """High-precision radii of ``Th(3,1;n-3)`` and ``ThHat(n)`` and their gap, for ``alpha > 1/2``.

    Both characteristic polynomials are negative at ``2 alpha`` and positive for
    large ``x``, so bisection on ``[2 alpha, 2]`` in multiprecision isolates the
    top root even when it sits a hair above ``2 alpha``.
    """
    import mpmath as mp

    if not 0.5 < alpha < 1:
        raise DigraphError("scan needs 1/2 < alpha < 1")
    if n < 5:
        raise DigraphError("need n >= 5")
    with mp.workdps(dps):
        a = mp.mpf(alpha)

        class P:
            def __init__(self, x):
                self.x, self.alpha = x, a

            @property
            def d(self):
                return (1 - self.alpha) / (self.x - self.alpha)

        r31 = _largest_root_mp(lambda x: cp_theta((3, 1), (n - 3,), P(x)), 2 * a, 2, dps)
        rhat = _largest_root_mp(lambda x: cp_theta_hat(n, P(x)), 2 * a, 2, dps)
        return float(r31), float(rhat), float(rhat - r31)


@dataclass
class ConjectureReport:
    rows: list
    label: str = "numerical evidence, not proof"

    def boundary_rows(self):
        return [r for r in self.rows if r["boundary"]]

    def boundary_consistent(self, tol: float = TIE_MARGIN) -> bool:
        return all(r["gap"] >= -tol for r in self.boundary_rows())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["n", "alpha", "rho_theta31", "rho_theta_hat", "gap", "sign", "boundary"])
        for r in self.rows:
            w.writerow([r["n"], repr(r["alpha"]), f"{r['rho_theta31']:.15g}", f"{r['rho_theta_hat']:.15g}",
                        f"{r['gap']:.6e}", r["sign"], int(r["boundary"])])
        return buf.getvalue()


SCAN_ALPHAS = tuple(round(0.55 + 0.05 * i, 2) for i in range(9))
BOUNDARY_ALPHA = 0.5 + 1e-6


def conjecture_scan(n_range: Iterable[int] = range(5, 41), alpha_grid: Iterable[float] = SCAN_ALPHAS,
                    boundary: bool = True) -> ConjectureReport:
    """Sign of ``rho(ThHat(n)) - rho(Th(3,1;n-3))`` on a grid with ``1/2 < alpha < 1``."""
    grid = sorted(set(float(a) for a in alpha_grid))
    for a in grid:
        if not 0.5 < a < 1:
            raise DigraphError(f"alpha {a} outside (1/2, 1)")
    rows = []
    for n in n_range:
        alphas = ([(BOUNDARY_ALPHA, True)] if boundary else []) + [(a, False) for a in grid]
        for a, flag in alphas:
            r31, rhat, gap = conjecture_pair_radii(n, a)
            sign = "+" if gap > 0 else ("-" if gap < 0 else "0")
            rows.append({"n": n, "alpha": a, "rho_theta31": r31, "rho_theta_hat": rhat,
                         "gap": gap, "sign": sign, "boundary": flag})
    return ConjectureReport(rows)


DELTA_ALPHAS = (0.0, 0.01) + tuple(round(0.05 * i, 2) for i in range(1, 20)) + (0.99,)


def delta_patterns(m: int, k: int) -> tuple[FamilySpec, FamilySpec]:
    s2, t2 = (k + 1) // 2, k // 2
    low = Theta(zeta(m - 2 * t2 + 1, s2), zeta_flat(t2))
    high = Theta(zeta(m - 1, k - 1), (1,))
    return low, high


def scan_delta_threshold(m: int, k: int, alphas: Sequence[float] = DELTA_ALPHAS) -> TheoremReport:
    """Maximizer over all ``k``-path thetas with ``m`` arcs as ``alpha`` sweeps ``[0, 1)``."""
    if k < 3 or m < 2 * k - 2:
        raise DigraphError(f"need k >= 3 and m >= 2k-2, got m={m}, k={k}")
    alphas = sorted(check_alpha(a) for a in alphas)
    rep = TheoremReport("delta_threshold", {"m": m, "k": k, "alphas": list(alphas)})
    low, high = delta_patterns(m, k)
    specs = theta_k_members(m, k)
    sweep = []
    for a in alphas:
        rhos = _radii(specs, a)
        order = sorted(range(len(specs)), key=lambda i: rhos[i])
        best = specs[order[-1]]
        gap = rhos[order[-1]] - rhos[order[-2]] if len(order) > 1 else math.inf
        pattern = "low" if best == low else ("high" if best == high else "other")
        sweep.append({"alpha": a, "argmax": str(best), "s": len(best.params[0]), "t": len(best.params[1]),
                      "pattern": pattern, "gap": gap})
    rep.details.update(low_pattern=str(low), high_pattern=str(high), sweep=sweep,
                       coincide=low == high)
    first, last = sweep[0], sweep[-1]
    if first["argmax"] != str(low):
        rep.fail("regime", f"maximizer at alpha={first['alpha']} is {low}", found=first["argmax"])
    else:
        rep.margin(first["gap"])
    if last["argmax"] != str(high):
        rep.fail("regime", f"maximizer at alpha={last['alpha']} is {high}", found=last["argmax"])
    else:
        rep.margin(last["gap"])
    crossover = None
    if low != high:
        for prev, cur in zip(sweep, sweep[1:]):
            if prev["pattern"] == "low" and cur["pattern"] != "low":
                crossover = (prev["alpha"], cur["alpha"])
                break
    rep.details["crossover"] = crossover
    rep.details["crossover_found"] = crossover is not None or low == high
    return rep


def family_instances(max_m: int, min_m: int = 2) -> list[FamilySpec]:
    """Every cycle, rose, tri-ring, theta, chorded cycle and ``ThHat`` with ``min_m <= m <= max_m`` arcs."""
    out: list[FamilySpec] = []
    for m in range(min_m, max_m + 1):
        out.append(Cycle(m))
        for k in range(2, m // 2 + 1):
            out.extend(Rose(p) for p in enum_S(m, k))
        if m >= 6:
            out.extend(inf_members(m))
        for k in range(3, m + 1):
            for t in range(1, k // 2 + 1):
                s = k - t
                if m >= 2 * s - 1 + 2 * t - 1:
                    out.extend(theta_members(m, s, t))
        n = m - 1
        if n >= 4:
            out.extend(CnG(n, g) for g in range(2, n))
        if m - 2 >= 4:
            out.append(ThetaHat(m - 2))
    return out


__all__ = [name for name in dir() if not name.startswith("_")]
