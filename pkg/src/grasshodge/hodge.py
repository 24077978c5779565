"""Bivariate Hodge-Poincare polynomials with exact integer coefficients.

A :class:`HodgePolynomial` stores ``sum h^{p,q} u^p v^q`` as a sparse dict.
Arithmetic is closed over Z (virtual classes may have negative entries);
diamond invariants are checked explicitly with :meth:`check_diamond`.
The Lefschetz class is ``L = uv``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class InexactDivision(ArithmeticError):
    """Polynomial division left a non-zero remainder."""


class DiamondError(ValueError):
    """A polynomial violates a Hodge-diamond invariant."""


class HodgePolynomial:
    __slots__ = ("coeffs", "dim")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None, dim: int | None = None):
        self.coeffs: dict[tuple[int, int], int] = {
            (int(p), int(q)): int(c) for (p, q), c in (coeffs or {}).items() if c
        }
        for p, q in self.coeffs:
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent ({p}, {q})")
        self.dim = dim

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_L(cls, coeffs: Iterable[int], dim: int | None = None) -> "HodgePolynomial":
        """Pure class ``sum c_i L^i``."""
        return cls({(i, i): c for i, c in enumerate(coeffs)}, dim)

    @classmethod
    def L(cls, power: int = 1) -> "HodgePolynomial":
        return cls({(power, power): 1})

    @classmethod
    def projective_space(cls, r: int) -> "HodgePolynomial":
        """``[P^r] = 1 + L + ... + L^r``; the empty class for ``r < 0``."""
        return cls.from_L([1] * (r + 1), dim=r if r >= 0 else None)

    @classmethod
    def from_diamond_rows(cls, rows: Mapping[int, Iterable[int]], dim: int) -> "HodgePolynomial":
        """Build from weight rows ``{w: [h^{w,0}, ..., ]}`` listing only the
        non-zero, central entries ``h^{p,w-p}`` with p decreasing.

        A row of length ``r`` is centred on the diagonal, as in a printed
        Hodge table; the lower half is completed by Poincare duality.
        """
        coeffs = {}
        for w, entries in rows.items():
            entries = list(entries)
            r = len(entries)
            if (w - (r - 1)) % 2:
                raise ValueError(f"row {w} of length {r} cannot be centred")
            top = (w + r - 1) // 2
            for i, h in enumerate(entries):
                p = top - i
                coeffs[(p, w - p)] = h
                coeffs[(dim - p, dim - (w - p))] = h
        return cls(coeffs, dim)

    # -- basic protocol -------------------------------------------------------

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.coeffs.get(pq, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "HodgePolynomial(0)"
        terms = []
        for (p, q), c in sorted(self.coeffs.items()):
            mono = "".join(s for s in (_pow("u", p), _pow("v", q)) if s) or "1"
            terms.append(f"{c}*{mono}" if c != 1 else mono)
        return "HodgePolynomial(" + " + ".join(terms) + ")"

    def __add__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return HodgePolynomial(out)

    def __neg__(self) -> "HodgePolynomial":
        return HodgePolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        return self + (-other)

    def __mul__(self, other: "HodgePolynomial | int") -> "HodgePolynomial":
        if isinstance(other, int):
            return HodgePolynomial({k: c * other for k, c in self.coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self.coeffs.items():
            for (p2, q2), c2 in other.coeffs.items():
                k = (p1 + p2, q1 + q2)
                out[k] = out.get(k, 0) + c1 * c2
        return HodgePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "HodgePolynomial":
        out = HodgePolynomial({(0, 0): 1})
        for _ in range(e):
            out = out * self
        return out

    def twist(self, s: int) -> "HodgePolynomial":
        """Multiply by ``L^s`` (Tate twist)."""
        dim = None if self.dim is None else self.dim
        return HodgePolynomial({(p + s, q + s): c for (p, q), c in self.coeffs.items()}, dim)

    def with_dim(self, dim: int) -> "HodgePolynomial":
        return HodgePolynomial(self.coeffs, dim)

    # -- division -------------------------------------------------------------

    def divide(self, divisor: "HodgePolynomial") -> "HodgePolynomial":
        """Exact division; raises :class:`InexactDivision` on a remainder.

        Long division in lexicographic order on ``(p, q)``. For divisors that are
        polynomials in ``L`` alone this is the same as dividing every
        ``u^a v^b``-stratum separately as a univariate polynomial in ``L``.
        """
        if not divisor.coeffs:
            raise ZeroDivisionError("division by the zero class")
        (lp, lq) = max(divisor.coeffs)
        lc = divisor.coeffs[(lp, lq)]
        rem = dict(self.coeffs)
        quot: dict[tuple[int, int], int] = {}
        while rem:
            (p, q) = max(rem)
            c = rem[(p, q)]
            if p < lp or q < lq or c % lc:
                raise InexactDivision(f"remainder term {c} u^{p} v^{q} not divisible by leading term")
            t = (p - lp, q - lq)
            f = c // lc
            quot[t] = quot.get(t, 0) + f
            for (dp, dq), dc in divisor.coeffs.items():
                k = (dp + t[0], dq + t[1])
                v = rem.get(k, 0) - f * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return HodgePolynomial(quot)

    def __floordiv__(self, divisor: "HodgePolynomial") -> "HodgePolynomial":
        return self.divide(divisor)

    # -- numerical invariants -------------------------------------------------

    def total(self) -> int:
        """Value at ``u = v = 1``."""
        return sum(self.coeffs.values())

    def euler(self) -> int:
        """Topological Euler characteristic, value at ``u = v = -1``."""
        return sum(c * (-1) ** (p + q) for (p, q), c in self.coeffs.items())

    def betti(self, w: int) -> int:
        return sum(c for (p, q), c in self.coeffs.items() if p + q == w)

    def row(self, w: int) -> list[int]:
        """``[h^{w,0}, h^{w-1,1}, ..., h^{0,w}]``."""
        return [self[(p, w - p)] for p in range(w, -1, -1)]

    def degree(self) -> int:
        return max((p + q for p, q in self.coeffs), default=-1)

    def is_pure(self) -> bool:
        return all(p == q for p, q in self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def is_hodge_symmetric(self) -> bool:
        return all(self[(q, p)] == c for (p, q), c in self.coeffs.items())

    def satisfies_duality(self, dim: int) -> bool:
        return all(
            p <= dim and q <= dim and self[(dim - p, dim - q)] == c for (p, q), c in self.coeffs.items()
        )

    def check_diamond(self, dim: int | None = None) -> "HodgePolynomial":
        """Raise :class:`DiamondError` unless this is a plausible Hodge diamond."""
        dim = self.dim if dim is None else dim
        if dim is None:
            raise DiamondError("dimension unknown")
        if not self.is_nonnegative():
            raise DiamondError(f"negative Hodge number in {self!r}")
        if not self.is_hodge_symmetric():
            raise DiamondError(f"Hodge symmetry fails for {self!r}")
        if not self.satisfies_duality(dim):
            raise DiamondError(f"Poincare duality fails in dimension {dim} for {self!r}")
        return self.with_dim(dim)

    def off_diagonal(self) -> "HodgePolynomial":
        return HodgePolynomial({k: c for k, c in self.coeffs.items() if k[0] != k[1]})

    def nontrivial_rows(self, dim: int | None = None) -> dict[int, list[int]]:
        """Lower-half weight rows with their non-zero entries, Table-style."""
        dim = self.dim if dim is None else dim
        top = dim if dim is not None else self.degree()
        out = {}
        for w in range(top + 1):
            row = [h for h in self.row(w) if h]
            if row:
                out[w] = row
        return out

    def items(self):
        return sorted(self.coeffs.items())


def _pow(x: str, e: int) -> str:
    if e == 0:
        return ""
    return x if e == 1 else f"{x}^{e}"


def gaussian_binomial(n: int, k: int) -> list[int]:
    """Coefficients of the Gaussian binomial ``[n choose k]_L`` by exact division
    of the product formula (independent of partition enumeration)."""
    if k < 0 or k > n:
        return [0]
    num = [1]
    den = [1]
    for i in range(1, k + 1):
        num = _umul(num, [1] + [0] * (n - k + i - 1) + [-1])
        den = _umul(den, [1] + [0] * (i - 1) + [-1])
    return _udiv(num, den)


def _umul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _udiv(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(a[i + len(b) - 1], b[-1])
        if r:
            raise InexactDivision("univariate remainder")
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    if any(a):
        raise InexactDivision("univariate remainder")
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q
