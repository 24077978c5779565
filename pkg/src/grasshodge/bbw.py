"""Borel-Weil-Bott for homogeneous bundles on GL(n) flag varieties.

Conventions
-----------
A flag variety ``Fl(k_1 < ... < k_{r-1}, V_n)`` is described by its block
sizes ``(k_1, k_2 - k_1, ..., n - k_{r-1})``. A homogeneous bundle is a
weight of length ``n`` that is weakly decreasing inside every block; the
``j``-th block is a Schur functor of ``(U_{k_j} / U_{k_{j-1}})^*``.

On ``Gr(k, n)`` (blocks ``(k, n-k)``) this gives

* ``O(1) = det U^*``  -> ``(1, ..., 1 | 0, ..., 0)``
* ``U``               -> ``(0, ..., 0, -1 | 0, ..., 0)``
* ``Q^*``             -> ``(0, ..., 0 | 1, 0, ..., 0)``
* ``Q``               -> ``(0, ..., 0 | 0, ..., 0, -1)``

Adding a constant to every entry does not change the bundle
(``det V`` is trivial).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .partitions import InvalidWeight, Weight, conjugate, is_dominant, pad, weyl_dimension


@dataclass(frozen=True)
class FlagAmbient:
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if not blocks or any(b <= 0 for b in blocks):
            raise ValueError(f"block sizes must be positive, got {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def grassmannian(cls, k: int, n: int) -> "FlagAmbient":
        if not 0 < k < n:
            raise ValueError(f"Gr({k},{n}) needs 0 < k < n")
        return cls((k, n - k))

    @classmethod
    def projective_space(cls, dim: int) -> "FlagAmbient":
        """``P^dim`` as ``Gr(1, dim + 1)``."""
        return cls.grassmannian(1, dim + 1)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def dim(self) -> int:
        b = self.blocks
        return sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))

    def slices(self) -> list[slice]:
        out, start = [], 0
        for b in self.blocks:
            out.append(slice(start, start + b))
            start += b
        return out

    def rho(self) -> Weight:
        n = self.n
        return tuple(range(n - 1, -1, -1))

    def canonical_weight(self) -> Weight:
        """Weight of the canonical bundle: entries of block j equal
        (#entries before block j) - (#entries after it)."""
        out: list[int] = []
        before = 0
        for b in self.blocks:
            after = self.n - before - b
            out.extend([before - after] * b)
            before += b
        return tuple(out)

    def __str__(self) -> str:
        if len(self.blocks) == 2:
            k, n = self.blocks[0], self.n
            return f"P^{n - 1}" if k == 1 else f"Gr({k},{n})"
        marks = []
        acc = 0
        for b in self.blocks[:-1]:
            acc += b
            marks.append(str(acc))
        return f"Fl({','.join(marks)};{self.n})"


@dataclass(frozen=True)
class HomogeneousBundle:
    ambient: FlagAmbient
    weight: Weight

    def __post_init__(self):
        w = tuple(int(x) for x in self.weight)
        if len(w) != self.ambient.n:
            raise InvalidWeight(f"weight {w} has length {len(w)}, ambient needs {self.ambient.n}")
        for sl in self.ambient.slices():
            if not is_dominant(w[sl]):
                raise InvalidWeight(f"weight {w} is not dominant on block {w[sl]}")
        object.__setattr__(self, "weight", w)

    @classmethod
    def from_blocks(cls, ambient: FlagAmbient, *blocks: Sequence[int]) -> "HomogeneousBundle":
        w: list[int] = []
        for b in blocks:
            w.extend(b)
        return cls(ambient, tuple(w))

    def blocks(self) -> list[Weight]:
        return [self.weight[sl] for sl in self.ambient.slices()]

    def dual(self) -> "HomogeneousBundle":
        w = []
        for part in self.blocks():
            w.extend(-x for x in reversed(part))
        return HomogeneousBundle(self.ambient, tuple(w))

    def tensor_line(self, line: Sequence[int]) -> "HomogeneousBundle":
        """Tensor with a line bundle given as a weight constant on each block."""
        return HomogeneousBundle(self.ambient, tuple(a + b for a, b in zip(self.weight, line)))

    def serre_dual(self) -> "HomogeneousBundle":
        return self.dual().tensor_line(self.ambient.canonical_weight())

    def rank(self) -> int:
        r = 1
        for part in self.blocks():
            r *= weyl_dimension(part)
        return r


class CohomologyTable(Mapping[int, int]):
    """Degree -> dimension, storing non-zero entries only; immutable."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | None = None):
        self._entries = {int(q): int(d) for q, d in sorted((entries or {}).items()) if d}

    def __getitem__(self, q: int) -> int:
        return self._entries[q]

    def get(self, q, default=0):
        return self._entries.get(q, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, CohomologyTable):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {q: d for q, d in other.items() if d}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"CohomologyTable({self._entries})"

    def __add__(self, other: "CohomologyTable") -> "CohomologyTable":
        out = dict(self._entries)
        for q, d in other.items():
            out[q] = out.get(q, 0) + d
        return CohomologyTable(out)

    def scaled(self, m: int) -> "CohomologyTable":
        return CohomologyTable({q: d * m for q, d in self._entries.items()})

    @property
    def is_acyclic(self) -> bool:
        return not self._entries

    def euler(self) -> int:
        return sum((-1) ** q * d for q, d in self._entries.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self._entries)


def _inversions(mu: Sequence[int]) -> int:
    # bubble sort into decreasing order, counting swaps
    arr = list(mu)
    swaps = 0
    for end in range(len(arr) - 1, 0, -1):
        for i in range(end):
            if arr[i] < arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps += 1
    return swaps


def bbw_cohomology(bundle: HomogeneousBundle) -> CohomologyTable:
    """Cohomology of an irreducible homogeneous bundle by the rho-shift rule."""
    rho = bundle.ambient.rho()
    mu = [w + r for w, r in zip(bundle.weight, rho)]
    if len(set(mu)) < len(mu):
        return CohomologyTable()
    degree = _inversions(mu)
    lam = tuple(m - r for m, r in zip(sorted(mu, reverse=True), rho))
    return CohomologyTable({degree: weyl_dimension(lam)})


def cohomology_of_weight(blocks: Sequence[int], weight: Sequence[int]) -> CohomologyTable:
    return bbw_cohomology(HomogeneousBundle(FlagAmbient(tuple(blocks)), tuple(weight)))


# -- twisted forms on Grassmannians ------------------------------------------


def form_summand_weight(alpha: Sequence[int], k: int, l: int, i: int) -> Weight:
    """Weight of ``S_alpha U (x) S_{alpha^T} Q^* (-i)`` on ``Gr(k, k + l)``."""
    a = pad(tuple(alpha), k)
    if a and (a[0] > l or any(x < 0 for x in a)):
        raise InvalidWeight(f"{tuple(alpha)} does not fit in the {k} x {l} box")
    first = tuple(-i - x for x in reversed(a))
    second = pad(conjugate(tuple(x for x in a if x)), l)
    return first + second


def snow_contributes(alpha: Sequence[int], k: int, l: int, i: int, j: int | None = None):
    """Contribution of one summand of ``Omega^j(-i)`` on ``Gr(k, k+l)``.

    Decided with the interval rule: writing ``A(i) = {alpha_r - r + i}`` the
    summand has cohomology exactly when the part of ``A(i)`` inside
    ``[-k, l-1]`` lies in ``A(0)``. The degree counts pairs ``a > b`` with
    ``a`` in ``A(i)`` and ``b`` in the complement of ``A(0)`` in the interval.

    Returns ``(degree, dimension)`` or ``None``.
    """
    a = pad(tuple(alpha), k)
    if any(a[r] < a[r + 1] for r in range(k - 1)) or (k and (a[0] > l or a[-1] < 0)):
        raise InvalidWeight(f"{tuple(alpha)} does not fit in the {k} x {l} box")
    if j is not None and sum(a) != j:
        raise ValueError(f"|alpha| = {sum(a)} but j = {j}")
    a0 = {a[r] - (r + 1) for r in range(k)}
    ai = [a[r] - (r + 1) + i for r in range(k)]
    interval = range(-k, l)
    if any(x in interval and x not in a0 for x in ai):
        return None
    b = [x for x in interval if x not in a0]
    degree = sum(1 for x in ai for y in b if x > y)
    values = sorted((l - 1 - x for x in ai + b), reverse=True)
    rho = range(k + l - 1, -1, -1)
    lam = tuple(v - r for v, r in zip(values, rho))
    return degree, weyl_dimension(lam)


# -- the four-condition lemma on Gr(2,10) --------------------------------------


def lemma_bbw_g210(p: int, q: int, i: int) -> bool:
    """Return True when ``S^p U (x) L^q Q (-i)`` on ``Gr(2,10)`` is certified
    acyclic, i.e. none of the four necessary conditions for cohomology holds.

    The conditions are necessary only: a False result does not imply
    cohomology. For ``p >= 9`` the list misses a family (e.g. ``S^9 U(-1)``),
    so True is trustworthy only for ``p <= 8``.
    """
    if not 0 <= q < 8:
        raise ValueError(f"q must satisfy 0 <= q < 8, got {q}")
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    conditions = (
        i >= 10,
        p + i <= 0,
        p + q + i == 9 and i <= 1,
        q + i == 10 and p + i >= 10,
    )
    return not any(conditions)


def g210_weight(p: int, q: int, i: int) -> Weight:
    """Weight of ``S^p U (x) L^q Q (-i)`` on ``Gr(2,10)``."""
    return (-i, -i - p) + (0,) * (8 - q) + (-1,) * q
