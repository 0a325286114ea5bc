"""Integer-composition posets under (weak) majorization.

Compositions are nonincreasing tuples of positive integers. ``S(m, k)`` holds
the ones with ``k`` parts all at least 2; ``S~(m, t)`` allows a single part
equal to 1, in last position.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterator, Sequence

from .digraph import DigraphError

Composition = tuple[int, ...]


def _check_lengths(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise DigraphError(f"length mismatch: {len(x)} vs {len(y)}")


def weakly_majorizes(x: Sequence[int], y: Sequence[int], strict: bool = False) -> bool:
    """``x`` weakly majorizes ``y``: ascending partial sums of ``x`` never exceed ``y``'s.

    With ``strict=True`` the sorted vectors must also differ.
    """
    _check_lengths(x, y)
    xs, ys = sorted(x), sorted(y)
    ok = all(a <= b for a, b in zip(accumulate(xs), accumulate(ys)))
    if strict:
        return ok and xs != ys
    return ok


def majorizes(x: Sequence[int], y: Sequence[int], strict: bool = False) -> bool:
    """Equal-sum majorization, ``y`` precedes ``x``."""
    _check_lengths(x, y)
    return sum(x) == sum(y) and weakly_majorizes(x, y, strict=strict)


def submajorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """Descending partial sums of ``x`` dominate those of ``y`` (no equal-sum requirement).

    Agrees with :func:`weakly_majorizes` when the sums are equal.
    """
    _check_lengths(x, y)
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    return all(a >= b for a, b in zip(accumulate(xs), accumulate(ys)))


def covers(x: Sequence[int], y: Sequence[int]) -> bool:
    """``x`` covers ``y``: ``x = y + e_i - e_j`` with nothing strictly in between.

    On sorted vectors a unit transfer from ``j`` to ``i < j`` is a cover exactly
    when ``j = i + 1`` or ``y_i = y_j``.
    """
    _check_lengths(x, y)
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    if sum(xs) != sum(ys):
        return False
    diff = [a - b for a, b in zip(xs, ys)]
    plus = [i for i, v in enumerate(diff) if v == 1]
    minus = [i for i, v in enumerate(diff) if v == -1]
    if len(plus) != 1 or len(minus) != 1 or sum(abs(v) for v in diff) != 2:
        return False
    i, j = plus[0], minus[0]
    if i > j:
        return False
    return j == i + 1 or ys[i] == ys[j]


def cover_chain(a: Sequence[int], b: Sequence[int]) -> list[Composition]:
    """A saturated chain ``a = x_1 < x_2 < ... < x_l = b`` of covers.

    Greedy: each step takes the first unit transfer (lowest receiving index,
    farthest donor) that is a cover and stays majorized by ``b``.
    """
    cur = tuple(sorted(a, reverse=True))
    target = tuple(sorted(b, reverse=True))
    if not majorizes(target, cur):
        raise DigraphError(f"{tuple(a)} is not majorized by {tuple(b)}")
    chain = [cur]
    k = len(cur)
    while cur != target:
        step = None
        for i in range(k):
            for j in range(k - 1, i, -1):
                cand = list(cur)
                cand[i] += 1
                cand[j] -= 1
                cand = tuple(cand)
                if cand[j] < 1 or list(cand) != sorted(cand, reverse=True):
                    continue
                if covers(cand, cur) and majorizes(target, cand):
                    step = cand
                    break
            if step is not None:
                break
        if step is None:  # pragma: no cover - excluded by the existence of saturated chains
            raise DigraphError(f"no cover step from {cur} towards {target}")
        cur = step
        chain.append(cur)
    return chain


def extremal_max_S(m: int, k: int) -> Composition:
    if m < 2 * k or k < 1:
        raise DigraphError(f"S({m},{k}) is empty")
    return (m - 2 * k + 2,) + (2,) * (k - 1)


def extremal_min_S(m: int, k: int) -> Composition:
    if m < 2 * k or k < 1:
        raise DigraphError(f"S({m},{k}) is empty")
    q, r = divmod(m, k)
    return (q + 1,) * r + (q,) * (k - r)


def balanced(m: int, t: int) -> Composition:
    """Most even composition of ``m`` into ``t`` parts, the majorization minimum."""
    q, r = divmod(m, t)
    return (q + 1,) * r + (q,) * (t - r)


def zeta(m: int, t: int) -> Composition:
    """Majorization maximum of ``S~(m, t)``: ``(m-2t+3, 2, ..., 2, 1)``."""
    if t < 1 or m < 2 * t - 1:
        raise DigraphError(f"S~({m},{t}) is empty")
    if t == 1:
        return (m,)
    return (m - 2 * t + 3,) + (2,) * (t - 2) + (1,)


def zeta_flat(t: int) -> Composition:
    if t < 1:
        raise DigraphError("t must be positive")
    return (2,) * (t - 1) + (1,)


def _partitions(m: int, k: int, lo: int, hi: int) -> Iterator[Composition]:
    """Nonincreasing ``k``-tuples with parts in ``[lo, hi]`` summing to ``m``, lex descending."""
    if k == 0:
        if m == 0:
            yield ()
        return
    top = min(hi, m - lo * (k - 1))
    for first in range(top, lo - 1, -1):
        if first * k < m:
            break
        for rest in _partitions(m - first, k - 1, lo, first):
            yield (first,) + rest


def enum_S(m: int, k: int) -> list[Composition]:
    if k < 1:
        return []
    return list(_partitions(m, k, 2, m))


def enum_S_tilde(m: int, t: int) -> list[Composition]:
    if t < 1 or m < 1:
        return []
    return [c for c in _partitions(m, t, 1, m) if c.count(1) <= 1 and (t == 1 or c[t - 2] >= 2)]


def enum_Q(m: int, k: int) -> list[tuple[Composition, Composition]]:
    """All ``(K1, K2)`` with ``K1`` in ``S~(m1, s)``, ``K2`` in ``S~(m2, t)``, ``s + t = k``, ``s >= t``."""
    out = []
    for s in range(k - 1, 0, -1):
        t = k - s
        if s < t:
            break
        for m1 in range(m - 1, 0, -1):
            for K1 in enum_S_tilde(m1, s):
                for K2 in enum_S_tilde(m - m1, t):
                    out.append((K1, K2))
    return out


def in_S(x: Sequence[int], m: int | None = None) -> bool:
    x = tuple(x)
    ok = bool(x) and list(x) == sorted(x, reverse=True) and x[-1] >= 2
    return ok and (m is None or sum(x) == m)


def in_S_tilde(x: Sequence[int], m: int | None = None) -> bool:
    x = tuple(x)
    if not x or list(x) != sorted(x, reverse=True) or x[-1] < 1:
        return False
    if len(x) >= 2 and x[-2] < 2:
        return False
    return m is None or sum(x) == m
