"""Partition and GL-weight combinatorics.

Partitions are plain tuples of non-negative integers, weakly decreasing.
Generalized weights are tuples of integers (negative entries allowed), also
weakly decreasing; they index irreducible polynomial-or-rational
representations of GL(m) and, through the Borel-Weil-Bott machinery, the
irreducible homogeneous bundles built from tautological bundles.

Only the decomposition rules needed downstream are implemented:

* rank-2 Clebsch-Gordan,
* Pieri by the standard or dual-standard representation (arbitrary rank),
* Cauchy formula for exterior powers of a tensor product.

Anything else raises :class:`UnsupportedRule`.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

Weight = tuple[int, ...]


class InvalidWeight(ValueError):
    """A weight that is not weakly decreasing, or of the wrong length."""


class UnsupportedRule(ValueError):
    """Tensor decomposition outside the implemented rules."""


def normalize(parts: Sequence[int]) -> Weight:
    """Strip trailing zeros."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def check_partition(lam: Sequence[int]) -> None:
    if not is_dominant(lam) or (lam and lam[-1] < 0):
        raise InvalidWeight(f"{tuple(lam)} is not a partition")


def conjugate(lam: Sequence[int]) -> Weight:
    """Conjugate (transposed) partition, trailing zeros removed.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= m) for m in range(1, lam[0] + 1))


def partitions_in_box(size: int, k: int, l: int) -> list[Weight]:
    """All partitions of ``size`` with at most ``k`` parts, each at most ``l``.

    Returned in decreasing lexicographic order with trailing zeros stripped.
    """
    if k < 0 or l < 0:
        raise ValueError("box dimensions must be non-negative")
    return list(_box(size, k, l))


@lru_cache(maxsize=None)
def _box(size: int, k: int, l: int) -> tuple[Weight, ...]:
    if size == 0:
        return ((),)
    if k == 0 or size > k * l:
        return ()
    out = []
    for first in range(min(size, l), 0, -1):
        for rest in _box(size - first, k - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def box_counts(k: int, l: int) -> list[int]:
    """Number of partitions of each size 0..k*l inside the k x l box."""
    return [len(_box(s, k, l)) for s in range(k * l + 1)]


def weyl_dimension(w: Sequence[int], m: int | None = None) -> int:
    """Dimension of the irreducible GL(m)-module with highest weight ``w``.

    Uses the Weyl dimension formula
    ``prod_{i<j} (w_i - w_j + j - i) / (j - i)`` in exact integer arithmetic.
    """
    w = tuple(w)
    if m is None:
        m = len(w)
    if len(w) != m:
        raise InvalidWeight(f"weight {w} has length {len(w)}, expected {m}")
    if not is_dominant(w):
        raise InvalidWeight(f"weight {w} is not weakly decreasing")
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= w[i] - w[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def pad(lam: Sequence[int], m: int) -> Weight:
    """Pad a partition with zeros to length ``m``."""
    if len(lam) > m:
        raise InvalidWeight(f"{tuple(lam)} has more than {m} parts")
    return tuple(lam) + (0,) * (m - len(lam))


# -- decomposition rules ------------------------------------------------------


def clebsch_gordan(a: Sequence[int], b: Sequence[int]) -> Counter:
    """Decompose ``V_a (x) V_b`` for GL(2)."""
    if len(a) != 2 or len(b) != 2:
        raise UnsupportedRule("Clebsch-Gordan is only implemented for GL(2)")
    if not (is_dominant(a) and is_dominant(b)):
        raise InvalidWeight(f"{tuple(a)} or {tuple(b)} is not dominant")
    out: Counter = Counter()
    for j in range(min(a[0] - a[1], b[0] - b[1]) + 1):
        out[(a[0] + b[0] - j, a[1] + b[1] + j)] += 1
    return out


def pieri(w: Sequence[int], sign: int = 1) -> Counter:
    """Tensor with the standard (``sign=+1``) or dual standard (``sign=-1``) module.

    Adds ``sign`` to one entry of ``w`` in every way that keeps the weight
    weakly decreasing; each result has multiplicity one.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    w = tuple(w)
    if not is_dominant(w):
        raise InvalidWeight(f"weight {w} is not weakly decreasing")
    out: Counter = Counter()
    m = len(w)
    for i in range(m):
        v = list(w)
        v[i] += sign
        if is_dominant(v):
            out[tuple(v)] += 1
    return out


def _standard_shift(b: Weight) -> tuple[int, int] | None:
    """If ``b`` is (1,0,..,0)+c or (0,..,0,-1)+c, return (sign, c)."""
    m = len(b)
    if m == 0:
        return None
    c = b[-1]
    if b[0] == c + 1 and all(x == c for x in b[1:]):
        return 1, c
    c = b[0]
    if b[-1] == c - 1 and all(x == c for x in b[:-1]):
        return -1, c
    return None


def shift(w: Sequence[int], c: int) -> Weight:
    """Twist by the ``c``-th power of the determinant."""
    return tuple(x + c for x in w)


def tensor_decompose(a: Sequence[int], b: Sequence[int]) -> Counter:
    """Decompose the tensor product of two irreducible GL(m)-modules.

    Supported: ``m == 2`` (Clebsch-Gordan), or one factor a determinant twist
    of the standard or dual standard module (Pieri). One-dimensional factors
    are handled in any rank.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise InvalidWeight("weights of different lengths")
    for x in (a, b):
        if not is_dominant(x):
            raise InvalidWeight(f"weight {x} is not weakly decreasing")
    if len(a) == 0:
        return Counter({(): 1})
    if len(set(b)) == 1:
        return Counter({shift(a, b[0]): 1})
    if len(set(a)) == 1:
        return Counter({shift(b, a[0]): 1})
    if len(a) == 2:
        return clebsch_gordan(a, b)
    for x, y in ((a, b), (b, a)):
        std = _standard_shift(y)
        if std is not None:
            sign, c = std
            return Counter({shift(v, c): mult for v, mult in pieri(x, sign).items()})
    raise UnsupportedRule(f"no implemented rule for {a} (x) {b}")


def cauchy_exterior(q: int, rank_a: int, rank_b: int) -> list[tuple[Weight, Weight]]:
    """Cauchy formula: ``L^q(A (x) B) = sum_{|lam|=q} S_lam A (x) S_{lam^T} B``.

    Returns pairs ``(lam, lam^T)`` padded to lengths ``rank_a`` and ``rank_b``,
    for ``lam`` in the ``rank_a x rank_b`` box.
    """
    out = []
    for lam in partitions_in_box(q, rank_a, rank_b):
        out.append((pad(lam, rank_a), pad(conjugate(lam), rank_b)))
    return out


# -- oracles used by the test-suite and by demos ------------------------------


def semistandard_tableaux_count(lam: Sequence[int], m: int) -> int:
    """Brute-force count of semistandard tableaux of shape ``lam`` with entries 1..m."""
    lam = normalize(lam)
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    count = 0
    for filling in product(range(1, m + 1), repeat=len(cells)):
        t = dict(zip(cells, filling))
        ok = all(
            (c == 0 or t[(r, c - 1)] <= t[(r, c)]) and (r == 0 or t[(r - 1, c)] < t[(r, c)])
            for (r, c) in cells
        )
        count += ok
    return count


def iter_dominant(m: int, lo: int, hi: int) -> Iterator[Weight]:
    """All weakly decreasing weights of length ``m`` with entries in [lo, hi]."""
    if m == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in iter_dominant(m - 1, lo, first):
            yield (first,) + rest
