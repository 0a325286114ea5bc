"""Simple digraphs, their alpha-matrices and the determinant oracle.

Vertices are the integers ``0..n-1``. Antiparallel arcs are allowed, loops and
repeated arcs are not.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.linalg import lu_factor


class DigraphError(ValueError):
    """Raised for malformed digraphs or invalid arguments on them."""


@dataclass(frozen=True)
class EvalPoint:
    """Evaluation abscissa ``x`` together with ``alpha``."""

    x: float
    alpha: float

    @property
    def d(self) -> float:
        if self.x == self.alpha:
            raise ZeroDivisionError("d is undefined at x == alpha")
        return (1.0 - self.alpha) / (self.x - self.alpha)


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DigraphError(f"vertex count must be positive, got {self.n}")
        clean = set()
        for arc in self.arcs:
            i, j = (int(a) for a in arc)
            if i == j:
                raise DigraphError(f"loop arc {(i, j)} is not allowed")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise DigraphError(f"arc {(i, j)} has an endpoint outside [0, {self.n})")
            clean.add((i, j))
        object.__setattr__(self, "arcs", tuple(sorted(clean)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_neighbors(self, v: int) -> list[int]:
        return [j for i, j in self.arcs if i == v]

    def in_neighbors(self, v: int) -> list[int]:
        return [i for i, j in self.arcs if j == v]

    def out_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for i, _ in self.arcs:
            deg[i] += 1
        return deg

    def in_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for _, j in self.arcs:
            deg[j] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for i, j in self.arcs:
            A[i, j] = 1.0
        return A

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.arcs:
            succ[i].append(j)
        return succ

    def with_arcs(self, extra: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph(self.n, self.arcs + tuple(extra))

    def without_arc(self, arc: tuple[int, int]) -> "Digraph":
        if arc not in self.arcs:
            raise DigraphError(f"arc {arc} not present")
        return Digraph(self.n, tuple(a for a in self.arcs if a != arc))

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        """Induced subdigraph, relabelled in the given vertex order."""
        index = {v: k for k, v in enumerate(vertices)}
        arcs = tuple((index[i], index[j]) for i, j in self.arcs if i in index and j in index)
        return Digraph(len(index), arcs)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "arcs": [list(a) for a in self.arcs]})

    @classmethod
    def from_json(cls, text: str) -> "Digraph":
        data = json.loads(text)
        return cls(int(data["n"]), tuple(tuple(a) for a in data["arcs"]))


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, tuple(tuple(a) for a in arcs))


def check_alpha(alpha: float) -> float:
    if not 0.0 <= alpha < 1.0:
        raise DigraphError(f"alpha must lie in [0, 1), got {alpha}")
    return float(alpha)


def alpha_matrix(g: Digraph, alpha: float) -> np.ndarray:
    """Dense ``alpha * D + (1 - alpha) * A`` with ``D`` the outdegree diagonal."""
    alpha = check_alpha(alpha)
    A = g.adjacency()
    M = (1.0 - alpha) * A
    M[np.diag_indices(g.n)] = alpha * A.sum(axis=1)
    return M


def strong_components(g: Digraph) -> list[list[int]]:
    """Strongly connected components, each sorted, ordered by least vertex.

    Iterative Tarjan, so deep path-like digraphs do not hit the recursion limit.
    """
    succ = g.successors()
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, k = work[-1]
            if k < len(succ[v]):
                work[-1] = (v, k + 1)
                w = succ[v][k]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return sorted(comps, key=lambda c: c[0])


def _reaches_all(succ: list[list[int]], n: int) -> bool:
    seen = [False] * n
    seen[0] = True
    todo = [0]
    while todo:
        v = todo.pop()
        for w in succ[v]:
            if not seen[w]:
                seen[w] = True
                todo.append(w)
    return all(seen)


def is_strongly_connected(g: Digraph) -> bool:
    if g.n == 1:
        return True
    pred: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.arcs:
        pred[j].append(i)
    return _reaches_all(g.successors(), g.n) and _reaches_all(pred, g.n)


def lu_det(M: np.ndarray) -> float:
    """Determinant from an LU factorization with partial pivoting."""
    if M.shape[0] == 0:
        return 1.0
    with warnings.catch_warnings():
        # exactly singular input is legitimate here; the zero pivot gives det 0
        warnings.simplefilter("ignore")
        lu, piv = lu_factor(M, check_finite=False)
    swaps = np.count_nonzero(piv != np.arange(len(piv)))
    sign = -1.0 if swaps % 2 else 1.0
    return sign * float(np.prod(np.diag(lu)))


def charpoly_oracle(g: Digraph, p: EvalPoint) -> float:
    """``det(x I - A_alpha(g))`` evaluated numerically."""
    M = p.x * np.eye(g.n) - alpha_matrix(g, p.alpha)
    return lu_det(M)


def submatrix_det(g: Digraph, alpha: float, delete_rows: Iterable[int],
                  delete_cols: Iterable[int], x: float) -> float:
    """Signed complementary minor of ``x I - A_alpha(g)``.

    Rows ``delete_rows`` and columns ``delete_cols`` are removed and the
    determinant of what is left is multiplied by ``(-1)**(sum(rows) + sum(cols))``.
    Principal deletions therefore give the plain principal minor, and a single
    row/column deletion gives the cofactor, which does not depend on labelling.
    """
    rows = sorted(set(delete_rows))
    cols = sorted(set(delete_cols))
    if len(rows) != len(cols):
        raise DigraphError("row and column deletion sets must have equal size")
    for v in rows + cols:
        if not 0 <= v < g.n:
            raise DigraphError(f"vertex {v} out of range")
    M = x * np.eye(g.n) - alpha_matrix(g, alpha)
    keep_r = [i for i in range(g.n) if i not in rows]
    keep_c = [j for j in range(g.n) if j not in cols]
    sub = M[np.ix_(keep_r, keep_c)]
    sign = -1.0 if (sum(rows) + sum(cols)) % 2 else 1.0
    return sign * lu_det(sub)


def principal_minor(g: Digraph, alpha: float, removed: Iterable[int], x: float) -> float:
    removed = list(removed)
    return submatrix_det(g, alpha, removed, removed, x)
