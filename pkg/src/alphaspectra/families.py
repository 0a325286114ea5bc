"""Constructors for the digraph families, with fixed vertex labelings.

Labelings
---------
cycle(n)        ``0 -> 1 -> ... -> n-1 -> 0``.
rose(p)         hub ``0``; petals built in order, each ``0 -> a_1 -> ... -> 0``.
inf(p, q, s)    middle cycle on ``0..q-1`` with ``u = 0``, ``v = gap``; the
                ``p``-cycle hangs at ``u``, then the ``s``-cycle at ``v``.
path_bundle(K)  ``u = 0``, ``v = 1``; internal vertices path by path.
theta(K1, K2)   ``path_bundle(K1)`` from ``u = 0`` to ``v = 1``, then the ``K2``
                paths from ``v`` back to ``u`` with fresh internal vertices.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .digraph import Digraph, DigraphError


Composition = tuple[int, ...]


def _as_composition(parts: Sequence[int]) -> Composition:
    comp = tuple(int(x) for x in parts)
    if not comp:
        raise DigraphError("composition must have at least one part")
    if any(a < b for a, b in zip(comp, comp[1:])):
        raise DigraphError(f"composition {comp} is not nonincreasing")
    if comp[-1] < 1:
        raise DigraphError(f"composition {comp} has a non-positive part")
    return comp


def cycle(n: int) -> Digraph:
    if n < 2:
        raise DigraphError(f"a directed cycle needs n >= 2, got {n}")
    return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def _append_cycle(arcs: list, n: int, hub: int, length: int) -> int:
    verts = [hub] + list(range(n, n + length - 1))
    for i in range(length):
        arcs.append((verts[i], verts[(i + 1) % length]))
    return n + length - 1


def attach_cycle(g: Digraph, vertex: int, length: int) -> Digraph:
    """Coalesce a new directed ``length``-cycle with ``g`` at ``vertex``."""
    if length < 2:
        raise DigraphError(f"cycle length must be >= 2, got {length}")
    if not 0 <= vertex < g.n:
        raise DigraphError(f"vertex {vertex} out of range")
    arcs = list(g.arcs)
    n = _append_cycle(arcs, g.n, vertex, length)
    return Digraph(n, tuple(arcs))


def coalesce(g: Digraph, u: int, h: Digraph, w: int) -> Digraph:
    """Identify ``u`` of ``g`` with ``w`` of ``h``; ``h``'s other vertices follow ``g``'s."""
    if not (0 <= u < g.n and 0 <= w < h.n):
        raise DigraphError("coalescence vertex out of range")
    relabel = {}
    nxt = g.n
    for y in range(h.n):
        if y == w:
            relabel[y] = u
        else:
            relabel[y] = nxt
            nxt += 1
    arcs = g.arcs + tuple((relabel[i], relabel[j]) for i, j in h.arcs)
    return Digraph(nxt, arcs)


def rose(p: Sequence[int]) -> Digraph:
    p = _as_composition(p)
    if p[-1] < 2:
        raise DigraphError(f"rose petals must have length >= 2, got {p}")
    arcs: list = []
    n = 1
    for length in p:
        n = _append_cycle(arcs, n, 0, length)
    return Digraph(n, tuple(arcs))


def inf(p: int, q: int, s: int, gap: int = 1) -> Digraph:
    """Tri-ring digraph: pendant ``p``- and ``s``-cycles on a middle ``q``-cycle.

    ``gap`` is the distance from ``u`` to ``v`` along the middle cycle; the
    characteristic polynomial does not depend on it.
    """
    if min(p, q, s) < 2:
        raise DigraphError(f"all cycle lengths must be >= 2, got {(p, q, s)}")
    if not 1 <= gap < q:
        raise DigraphError(f"gap must lie in [1, {q - 1}], got {gap}")
    arcs = [(i, (i + 1) % q) for i in range(q)]
    n = _append_cycle(arcs, q, 0, p)
    n = _append_cycle(arcs, n, gap, s)
    return Digraph(n, tuple(arcs))


def _check_bundle(K: Sequence[int]) -> Composition:
    K = _as_composition(K)
    if K.count(1) > 1:
        raise DigraphError(f"at most one path of length 1 is allowed, got {K}")
    return K


def _append_paths(arcs: list, n: int, src: int, dst: int, K: Composition) -> int:
    for k in K:
        verts = [src] + list(range(n, n + k - 1)) + [dst]
        n += k - 1
        arcs.extend(zip(verts, verts[1:]))
    return n


def path_bundle(K: Sequence[int]) -> Digraph:
    """Internally disjoint paths of lengths ``K`` from ``u = 0`` to ``v = 1``."""
    K = _check_bundle(K)
    arcs: list = []
    n = _append_paths(arcs, 2, 0, 1, K)
    return Digraph(n, tuple(arcs))


def theta(K1: Sequence[int], K2: Sequence[int]) -> Digraph:
    K1 = _check_bundle(K1)
    K2 = _check_bundle(K2)
    arcs: list = []
    n = _append_paths(arcs, 2, 0, 1, K1)
    n = _append_paths(arcs, n, 1, 0, K2)
    return Digraph(n, tuple(arcs))


def c_n_g(n: int, g: int) -> Digraph:
    """``C_n`` plus one chord closing a ``g``-cycle, in theta labeling."""
    if not 2 <= g <= n - 1:
        raise DigraphError(f"girth must satisfy 2 <= g <= n-1, got n={n}, g={g}")
    return theta((n + 1 - g, 1), (g - 1,))


def c_n_g_chord(n: int, g: int) -> Digraph:
    """Same digraph as :func:`c_n_g`, built as the cycle ``u_1..u_n`` plus ``(u_g, u_1)``."""
    if not 2 <= g <= n - 1:
        raise DigraphError(f"girth must satisfy 2 <= g <= n-1, got n={n}, g={g}")
    return cycle(n).with_arcs([(g - 1, 0)])


def theta_hat(n: int) -> Digraph:
    if n < 4:
        raise DigraphError(f"theta_hat needs n >= 4, got {n}")
    # 2 and 3 are the midpoints of the two length-2 paths from u to v
    return theta((2, 2), (n - 3,)).with_arcs([(2, 3)])


def girth(g: Digraph) -> int:
    """Length of a shortest directed cycle; raises if ``g`` is acyclic."""
    succ = g.successors()
    best = None
    for v in range(g.n):
        dist = {v: 0}
        todo = deque([v])
        found = None
        while todo and found is None:
            a = todo.popleft()
            for b in succ[a]:
                if b == v:
                    found = dist[a] + 1
                    break
                if b not in dist:
                    dist[b] = dist[a] + 1
                    todo.append(b)
        if found is not None and (best is None or found < best):
            best = found
    if best is None:
        raise DigraphError("digraph has no directed cycle")
    return best


@dataclass(frozen=True, order=True)
class FamilySpec:
    """Tagged family instance.

    ``tag`` is one of ``C, R, Inf, Th, CnG, ThHat, P``; ``params`` holds ints for
    the scalar families, one composition for ``R``/``P`` and two for ``Th``.
    """

    tag: str
    params: tuple

    def __post_init__(self):
        if self.tag not in _BUILDERS:
            raise DigraphError(f"unknown family tag {self.tag!r}")

    def build(self) -> Digraph:
        return _BUILDERS[self.tag](*self.params)

    def size(self) -> int:
        t, a = self.tag, self.params
        if t == "C":
            return a[0]
        if t in ("R", "P"):
            return sum(a[0])
        if t == "Inf":
            return sum(a)
        if t == "Th":
            return sum(a[0]) + sum(a[1])
        if t == "CnG":
            return a[0] + 1
        return a[0] + 2

    def __str__(self) -> str:
        def join(c):
            return ",".join(str(x) for x in c)
        if self.tag in ("R", "P"):
            return f"{self.tag}({join(self.params[0])})"
        if self.tag == "Th":
            return f"Th({join(self.params[0])};{join(self.params[1])})"
        return f"{self.tag}({join(self.params)})"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        m = _SPEC_RE.fullmatch(text.strip())
        if not m:
            raise DigraphError(f"cannot parse family spec {text!r}")
        tag, body = m.group(1), m.group(2)
        try:
            if tag == "Th":
                left, sep, right = body.partition(";")
                if not sep:
                    raise DigraphError("theta spec needs ';' between the two sides")
                params = (_ints(left), _ints(right))
            elif tag in ("R", "P"):
                params = (_ints(body),)
            else:
                params = _ints(body)
        except ValueError as exc:
            raise DigraphError(f"cannot parse family spec {text!r}: {exc}") from None
        arity = {"C": 1, "Inf": 3, "CnG": 2, "ThHat": 1}
        if tag in arity and len(params) != arity[tag]:
            raise DigraphError(f"{tag} takes {arity[tag]} parameters, got {len(params)}")
        return cls(tag, params)


_SPEC_RE = re.compile(r"(C|R|Inf|Th|CnG|ThHat|P)\(([^()]*)\)")


def _ints(body: str) -> tuple[int, ...]:
    return tuple(int(x) for x in body.split(",") if x.strip() != "")


_BUILDERS = {
    "C": cycle,
    "R": rose,
    "Inf": inf,
    "Th": theta,
    "CnG": c_n_g,
    "ThHat": theta_hat,
    "P": path_bundle,
}


def Cycle(n: int) -> FamilySpec:
    return FamilySpec("C", (n,))


def Rose(p: Sequence[int]) -> FamilySpec:
    return FamilySpec("R", (tuple(p),))


def Inf(p: int, q: int, s: int) -> FamilySpec:
    return FamilySpec("Inf", (p, q, s))


def Theta(K1: Sequence[int], K2: Sequence[int]) -> FamilySpec:
    return FamilySpec("Th", (tuple(K1), tuple(K2)))


def CnG(n: int, g: int) -> FamilySpec:
    return FamilySpec("CnG", (n, g))


def ThetaHat(n: int) -> FamilySpec:
    return FamilySpec("ThHat", (n,))


def PathBundle(K: Sequence[int]) -> FamilySpec:
    return FamilySpec("P", (tuple(K),))
