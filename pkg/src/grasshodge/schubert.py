"""Schubert calculus on Gr(2, n) and the congruence of lines T(2, n).

Classes are integer combinations of ``sigma_{a,b}`` with ``n-2 >= a >= b >= 0``.
All intersection numbers come from the Pieri rule and the box-complement
pairing; closed formulas are only ever compared against these numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SchubertExpr:
    n: int
    coeffs: tuple[tuple[tuple[int, int], int], ...] = ()

    @classmethod
    def make(cls, n: int, coeffs: dict[tuple[int, int], int]) -> "SchubertExpr":
        top = n - 2
        for (a, b), c in coeffs.items():
            if not top >= a >= b >= 0:
                raise ValueError(f"sigma_{{{a},{b}}} is outside the 2 x {top} box")
        return cls(n, tuple(sorted((k, c) for k, c in coeffs.items() if c)))

    @classmethod
    def sigma(cls, n: int, a: int, b: int = 0) -> "SchubertExpr":
        return cls.make(n, {(a, b): 1})

    @classmethod
    def one(cls, n: int) -> "SchubertExpr":
        return cls.sigma(n, 0, 0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    def degrees(self) -> set[int]:
        return {a + b for (a, b), _ in self.coeffs}

    def __add__(self, other: "SchubertExpr") -> "SchubertExpr":
        out = self.as_dict()
        for k, c in other.coeffs:
            out[k] = out.get(k, 0) + c
        return SchubertExpr.make(self.n, out)

    def scale(self, m: int) -> "SchubertExpr":
        return SchubertExpr.make(self.n, {k: m * c for k, c in self.coeffs})

    def times_special(self, j: int) -> "SchubertExpr":
        """Pieri: multiply by ``sigma_j``."""
        top = self.n - 2
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.coeffs:
            total = a + b + j
            for d in range(b, a + 1):
                e = total - d
                if a <= e <= top:
                    out[(e, d)] = out.get((e, d), 0) + c
        return SchubertExpr.make(self.n, out)

    def times_sigma11(self) -> "SchubertExpr":
        top = self.n - 2
        out = {(a + 1, b + 1): c for (a, b), c in self.coeffs if a + 1 <= top}
        return SchubertExpr.make(self.n, out)

    def times_h(self, power: int = 1) -> "SchubertExpr":
        out = self
        for _ in range(power):
            out = out.times_special(1)
        return out

    def times(self, other: "SchubertExpr") -> "SchubertExpr":
        """General product via ``sigma_{a,b} = sigma_{1,1}^b sigma_{a-b}``."""
        if other.n != self.n:
            raise ValueError("classes live on different Grassmannians")
        total = SchubertExpr(self.n)
        for (a, b), c in other.coeffs:
            term = self.times_special(a - b)
            for _ in range(b):
                term = term.times_sigma11()
            total = total + term.scale(c)
        return total

    def integral(self) -> int:
        """Coefficient of the point class ``sigma_{n-2,n-2}``."""
        return self.as_dict().get((self.n - 2, self.n - 2), 0)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in sorted(self.coeffs, key=lambda kc: (-kc[0][0], -kc[0][1])):
            name = f"s{a}{b}" if self.n <= 11 else f"s({a},{b})"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)


def h_power(n: int, e: int) -> SchubertExpr:
    return SchubertExpr.one(n).times_h(e)


@lru_cache(maxsize=None)
def fundamental_class_T2(n: int) -> SchubertExpr:
    """``[T(2,n)] = c_{n-2}(Q^*(1)) = sum_j (-1)^j sigma_j h^{n-2-j}``."""
    if n < 5:
        raise ValueError(f"n must be at least 5, got {n}")
    total = SchubertExpr(n)
    for j in range(n - 1):
        total = total + h_power(n, n - 2 - j).times_special(j).scale((-1) ** j)
    return total


def fundamental_class_T2_factored(n: int) -> SchubertExpr:
    """The same class written as ``sigma_{1,1} sum_i h^{n-2i-3} sigma_{2i-1}``
    plus ``sigma_{n-2}`` for even ``n``, keeping only ``n-2i-3 >= 0``."""
    total = SchubertExpr(n)
    i = 1
    while n - 2 * i - 3 >= 0:
        total = total + h_power(n, n - 2 * i - 3).times_special(2 * i - 1).times_sigma11()
        i += 1
    if n % 2 == 0:
        total = total + SchubertExpr.sigma(n, n - 2)
    return total


def pair(x: SchubertExpr, y: SchubertExpr) -> int:
    """``int x.y`` through the complement pairing ``(a,b) <-> (n-2-b, n-2-a)``."""
    top = x.n - 2
    ydict = y.as_dict()
    return sum(c * ydict.get((top - b, top - a), 0) for (a, b), c in x.coeffs)


def intersection_number(n: int, expr: SchubertExpr) -> int:
    """``int_{Gr(2,n)} [T(2,n)] . expr`` for ``expr`` of degree ``n-2``."""
    degrees = expr.degrees()
    if degrees and degrees != {n - 2}:
        raise DegreeMismatch(f"expected pure degree {n - 2}, got {sorted(degrees)}")
    return pair(fundamental_class_T2(n), expr)


def degree_T2(n: int) -> int:
    return intersection_number(n, h_power(n, n - 2))


# -- independent oracle: skew standard tableaux ------------------------------------


def skew_syt_count(outer: Iterable[int], inner: Iterable[int]) -> int:
    """Standard tableaux of skew shape ``outer / inner`` (Aitken determinant)."""
    lam = list(outer)
    mu = list(inner) + [0] * (len(lam) - len(list(inner)))
    size = sum(lam) - sum(mu)
    r = len(lam)
    mat = []
    for i in range(r):
        row = []
        for j in range(r):
            m = lam[i] - mu[j] - i + j
            row.append(Fraction(1, factorial(m)) if m >= 0 else Fraction(0))
        mat.append(row)
    det = _det(mat)
    value = det * factorial(size)
    assert value.denominator == 1
    return int(value)


def _det(mat: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in mat]
    size = len(m)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            for k in range(c, size):
                m[r][k] -= f * m[c][k]
    return det


def degree_by_tableaux(n: int) -> int:
    """``deg T(2,n)`` as ``sum_lambda [T]_lambda * f^{box / lambda}``."""
    top = n - 2
    return sum(c * skew_syt_count((top, top), (a, b)) for (a, b), c in fundamental_class_T2(n).coeffs)


# -- printed closed forms --------------------------------------------------------


def degree_closed_formula(n: int, range_policy: str = "as_printed") -> int | Fraction:
    """``sum_i 2i/(n-2) C(2n-2i-5, n-2i-2) + [n even]``.

    ``as_printed`` sums over every ``i >= 1`` with a non-zero binomial;
    ``restricted`` keeps only the ``i`` with ``n - 2i - 3 >= 0``.
    """
    if range_policy not in ("as_printed", "restricted"):
        raise ValueError(f"unknown range policy {range_policy!r}")
    if n < 5:
        raise ValueError(f"n must be at least 5, got {n}")
    total = Fraction(0)
    i = 1
    while n - 2 * i - 2 >= 0:
        if range_policy == "as_printed" or n - 2 * i - 3 >= 0:
            total += Fraction(2 * i, n - 2) * comb(2 * n - 2 * i - 5, n - 2 * i - 2)
        i += 1
    total += 1 if n % 2 == 0 else 0
    return int(total) if total.denominator == 1 else total


def a_n(n: int) -> int:
    """``int_T h sigma_{n-3}``."""
    return intersection_number(n, SchubertExpr.sigma(n, n - 3).times_h())


def b_n(n: int) -> int:
    """``int_T h^2 sigma_{n-4}``."""
    return intersection_number(n, SchubertExpr.sigma(n, n - 4).times_h(2))


def a_n_closed(n: int) -> Fraction:
    return Fraction(n + n % 2 - 4, 2)


def b_n_closed(n: int) -> Fraction:
    return Fraction(n * n - n % 2 - 12, 4)


def closed_form_report(n: int) -> dict[str, dict[str, object]]:
    """Oracle values next to the printed closed forms, with their differences."""
    deg = degree_T2(n)
    rows = {
        "degree(as_printed)": (degree_closed_formula(n, "as_printed"), deg),
        "degree(restricted)": (degree_closed_formula(n, "restricted"), deg),
        "a_n": (a_n_closed(n), a_n(n)),
        "b_n": (b_n_closed(n), b_n(n)),
    }
    return {
        name: {"closed": str(closed), "oracle": str(oracle), "delta": str(Fraction(closed) - oracle)}
        for name, (closed, oracle) in rows.items()
    }


# -- index ---------------------------------------------------------------------


@dataclass
class IndexCheck:
    n: int
    index_is_3: bool
    degree: int
    witnesses: dict[int, list[str]] = field(default_factory=dict)


def index_check(n: int) -> IndexCheck:
    """Show that the Plucker class on ``T(2,n)`` is not 2- or 3-divisible.

    ``h = mH`` would force ``m^{n-2} | deg`` and ``m | int h.sigma`` for every
    integral class ``sigma``; the degree bound ``deg < 4^{n-2}`` leaves only
    ``m = 2, 3`` to exclude.
    """
    if n < 7:
        raise ValueError(f"the Picard-rank-one range starts at n = 7, got {n}")
    deg = degree_T2(n)
    witnesses: dict[int, list[str]] = {}
    bounded = deg < 4 ** (n - 2)
    if not bounded:
        witnesses[0] = [f"degree {deg} is not below 4^{n - 2}"]
    for m in (2, 3):
        found = []
        if deg % m ** (n - 2):
            found.append(f"{m}^{n - 2} does not divide deg = {deg}")
        an = a_n(n)
        if an % m:
            found.append(f"{m} does not divide a_n = {an}")
        bn = b_n(n)
        if bn % (m * m):
            found.append(f"{m * m} does not divide b_n = {bn}")
        if not found:
            for a in range(n - 2, -1, -1):
                b = n - 3 - a
                if not 0 <= b <= a:
                    continue
                v = intersection_number(n, SchubertExpr.sigma(n, a, b).times_h())
                if v % m:
                    found.append(f"{m} does not divide int h.s({a},{b}) = {v}")
                    break
        witnesses[m] = found
    ok = bounded and all(witnesses[m] for m in (2, 3))
    return IndexCheck(n=n, index_is_3=ok, degree=deg, witnesses=witnesses)
