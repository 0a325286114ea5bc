"""Every strongly connected digraph on a handful of vertices, processed in bulk.

Arc subsets are bitmasks over the ``n(n-1)`` off-diagonal positions in
row-major order. All batch work is chunked numpy.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .digraph import Digraph, DigraphError, check_alpha

MAX_N = 5
_CHUNK = 1 << 16


def _positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def _masks_to_adj(masks: np.ndarray, n: int) -> np.ndarray:
    pos = _positions(n)
    bits = (masks[:, None] >> np.arange(len(pos))) & 1
    adj = np.zeros((len(masks), n, n), dtype=np.uint8)
    rows = np.array([i for i, _ in pos])
    cols = np.array([j for _, j in pos])
    adj[:, rows, cols] = bits
    return adj


def _strong_mask(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[1]
    reach = adj.astype(np.float32) + np.eye(n, dtype=np.float32)
    steps = 1
    while steps < n:
        reach = np.minimum(reach @ reach, 1.0)
        steps *= 2
    return reach.reshape(len(adj), -1).min(axis=1) > 0


@lru_cache(maxsize=None)
def strong_digraph_masks(n: int) -> np.ndarray:
    """Bitmasks of all strongly connected digraphs on ``n`` labelled vertices."""
    if not 2 <= n <= MAX_N:
        raise DigraphError(f"exhaustive enumeration supports 2 <= n <= {MAX_N}")
    total = 1 << (n * (n - 1))
    keep = []
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        keep.append(masks[_strong_mask(_masks_to_adj(masks, n))])
    out = np.concatenate(keep)
    out.setflags(write=False)
    return out


def subset_count(n: int) -> int:
    return 1 << (n * (n - 1))


def mask_to_digraph(mask: int, n: int) -> Digraph:
    pos = _positions(n)
    return Digraph(n, tuple(p for b, p in enumerate(pos) if (int(mask) >> b) & 1))


def digraph_to_mask(g: Digraph) -> int:
    index = {p: b for b, p in enumerate(_positions(g.n))}
    return sum(1 << index[a] for a in g.arcs)


def bulk_radii(masks: np.ndarray, n: int, alpha: float) -> np.ndarray:
    """Largest real part of the alpha-spectrum for each mask (dense eigensolver)."""
    alpha = check_alpha(alpha)
    out = np.empty(len(masks))
    for start in range(0, len(masks), _CHUNK):
        adj = _masks_to_adj(masks[start:start + _CHUNK], n).astype(float)
        M = (1.0 - alpha) * adj
        idx = np.arange(n)
        M[:, idx, idx] = alpha * adj.sum(axis=2)
        out[start:start + len(adj)] = np.linalg.eigvals(M).real.max(axis=1)
    return out


@lru_cache(maxsize=None)
def _girths(n: int) -> np.ndarray:
    masks = strong_digraph_masks(n)
    out = np.zeros(len(masks), dtype=int)
    for start in range(0, len(masks), _CHUNK):
        adj = _masks_to_adj(masks[start:start + _CHUNK], n).astype(np.float64)
        g = np.zeros(len(adj), dtype=int)
        P = adj.copy()
        for k in range(1, n + 1):
            hit = (g == 0) & (np.trace(P, axis1=1, axis2=2) > 0)
            g[hit] = k
            P = np.minimum(P @ adj, 1.0)
        out[start:start + len(adj)] = g
    out.setflags(write=False)
    return out


def bulk_girths(n: int) -> np.ndarray:
    """Girth of every digraph in :func:`strong_digraph_masks`, same order."""
    return _girths(n)


def canonical_mask(g: Digraph) -> int:
    """Smallest bitmask over all vertex relabellings; equal iff isomorphic."""
    best = None
    for perm in permutations(range(g.n)):
        h = Digraph(g.n, tuple((perm[i], perm[j]) for i, j in g.arcs))
        code = digraph_to_mask(h)
        if best is None or code < best:
            best = code
    return best
