"""Exact univariate polynomial algebra over rationals.

Everything in the certification path (Sturm sequences, root counting,
isolation, refinement, resultants) is computed with `fractions.Fraction`;
floating point never enters. Intervals returned by the isolation routines
are certified by a Sturm count of one.

Conventions:
  * coefficients are stored densely in ascending order, no trailing zeros;
  * the zero polynomial has degree -1;
  * open-interval semantics everywhere: a root sitting exactly on a finite
    endpoint is divided out before counting, so it is never included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Optional, Sequence, Union

from .errors import IntegrityError

RatLike = Union[int, Fraction]


def _sign(v: Fraction) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[RatLike]):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, v: RatLike) -> "Polynomial":
        return cls((v,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._c)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self._c), len(other._c))
        return Polynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self._c), len(other._c))
        return Polynomial(self[i] - other[i] for i in range(n))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Polynomial(out)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, v: RatLike) -> "Polynomial":
        v = Fraction(v)
        return Polynomial(c * v for c in self._c)

    def __call__(self, x):
        """Horner evaluation; works for any value with field arithmetic."""
        acc = None
        for c in reversed(self._c):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self._c) if i > 0)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self._c)
        d, lead = other.degree, other.leading
        while len(r) - 1 >= d and any(v != 0 for v in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lead
            q[k] = f
            for i in range(d + 1):
                r[k + i] -= f * other._c[i]
        return Polynomial(q), Polynomial(r)

    def rem(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise IntegrityError("exact_div called on non-divisible polynomials")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def primitive(self) -> "Polynomial":
        """Integer-coefficient scalar multiple with content 1 and positive lead."""
        if self.is_zero:
            return self
        den = 1
        for c in self._c:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self._c]
        g = 0
        for v in ints:
            g = _int_gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return Polynomial(ints)

    def sign_at_pos_inf(self) -> int:
        return _sign(self.leading) if not self.is_zero else 0

    def sign_at_neg_inf(self) -> int:
        if self.is_zero:
            return 0
        s = _sign(self.leading)
        return s if self.degree % 2 == 0 else -s


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over the rationals (constant 1 for coprime inputs)."""
    while not b.is_zero:
        a, b = b, a.rem(b)
    if a.is_zero:
        return a
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """p with all multiplicities reduced to one, monic."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return Polynomial.constant(1)
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    return p.exact_div(g).monic()


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    """Sturm chain of the squarefree part of ``p``.

    S0 = p, S1 = p', S_{k+1} = -rem(S_{k-1}, S_k), ending at a nonzero
    constant. Squarefree reduction is applied first so that the chain has
    the sign-variation property even for inputs with repeated roots.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    sf = squarefree_part(p)
    chain = [sf]
    if sf.degree >= 1:
        chain.append(sf.derivative())
        while chain[-1].degree >= 1:
            nxt = -(chain[-2].rem(chain[-1]))
            if nxt.is_zero:
                break
            chain.append(nxt)
    return chain


def _variations(values: Sequence[Fraction]) -> int:
    signs = [_sign(v) for v in values]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(chain: Sequence[Polynomial], x: Optional[Fraction], *, neg_inf: bool = False) -> int:
    if x is None:
        vals = [Fraction(q.sign_at_neg_inf() if neg_inf else q.sign_at_pos_inf()) for q in chain]
    else:
        vals = [q(x) for q in chain]
    return _variations(vals)


def _deflate_endpoint_roots(p: Polynomial, lo: Optional[Fraction], hi: Optional[Fraction]) -> Polynomial:
    # Open-interval semantics: a root at a finite endpoint is excluded, so it
    # is divided out exactly rather than nudging the endpoint (nudging without
    # a separation bound can move interior roots across the endpoint).
    for pt in (lo, hi):
        if pt is None:
            continue
        while not p.is_zero and p.degree >= 1 and p(pt) == 0:
            p = p.exact_div(Polynomial((-pt, 1)))
    return p


def count_real_roots(p: Polynomial, lo: Optional[RatLike] = None, hi: Optional[RatLike] = None) -> int:
    """Number of distinct real roots of ``p`` in the open interval (lo, hi).

    ``None`` stands for the corresponding infinity.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    lo_f = Fraction(lo) if lo is not None else None
    hi_f = Fraction(hi) if hi is not None else None
    if lo_f is not None and hi_f is not None and not lo_f < hi_f:
        raise ValueError("degenerate interval: need lo < hi")
    sf = squarefree_part(p)
    sf = _deflate_endpoint_roots(sf, lo_f, hi_f)
    if sf.degree <= 0:
        return 0
    chain = sturm_sequence(sf)
    va = _variations_at(chain, lo_f, neg_inf=True)
    vb = _variations_at(chain, hi_f)
    return va - vb


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """All real roots of ``p`` lie in (-M, M) for the returned M."""
    if p.is_zero or p.degree < 1:
        return Fraction(1)
    lead = abs(p.leading)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])


@dataclass(frozen=True)
class IsolatingInterval:
    """Open rational interval certified to contain exactly one root of ``poly``."""

    lo: Fraction
    hi: Fraction
    poly: Polynomial

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, width: RatLike) -> "IsolatingInterval":
        return refine_root(self, width)

    def approx(self) -> float:
        return float(self.midpoint)


def _shrunk_interval_around(p: Polynomial, mid: Fraction, radius: Fraction) -> IsolatingInterval:
    # mid is an exact root hit during bisection; carve a certified interval
    # around it by denominator doubling until the endpoints are off-root.
    d = radius
    while True:
        d = d / 2
        lo, hi = mid - d, mid + d
        if p(lo) != 0 and p(hi) != 0 and count_real_roots(p, lo, hi) == 1:
            return IsolatingInterval(lo, hi, p)


def isolate_real_roots(p: Polynomial, lo: Optional[RatLike] = None, hi: Optional[RatLike] = None) -> list[IsolatingInterval]:
    """Pairwise-disjoint certified intervals, one per distinct root in (lo, hi)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    lo_f = Fraction(lo) if lo is not None else None
    hi_f = Fraction(hi) if hi is not None else None
    if lo_f is not None and hi_f is not None and not lo_f < hi_f:
        raise ValueError("degenerate interval: need lo < hi")
    sf = squarefree_part(p)
    sf = _deflate_endpoint_roots(sf, lo_f, hi_f)
    if sf.degree <= 0:
        return []
    bound = cauchy_root_bound(sf)
    a = lo_f if lo_f is not None else -bound
    b = hi_f if hi_f is not None else bound
    if not a < b:
        return []
    # the Cauchy bound itself is never a root; user endpoints were deflated
    total = count_real_roots(sf, a, b)
    out: list[IsolatingInterval] = []
    stack = [(a, b, total)]
    while stack:
        s, t, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(s, t, sf))
            continue
        mid = (s + t) / 2
        if sf(mid) == 0:
            iv = _shrunk_interval_around(sf, mid, min(mid - s, t - mid))
            out.append(iv)
            n_left = count_real_roots(sf, s, iv.lo)
            n_right = count_real_roots(sf, iv.hi, t)
            if n_left:
                stack.append((s, iv.lo, n_left))
            if n_right:
                stack.append((iv.hi, t, n_right))
        else:
            n_left = count_real_roots(sf, s, mid)
            stack.append((s, mid, n_left))
            stack.append((mid, t, n - n_left))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(iv: IsolatingInterval, width: RatLike) -> IsolatingInterval:
    """Deterministic bisection down to the requested width; output nests in input."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    p = iv.poly
    lo, hi = iv.lo, iv.hi
    s_lo = _sign(p(lo))
    if s_lo == 0 or _sign(p(hi)) == 0:
        raise IntegrityError("isolating interval endpoints must not be roots")
    if s_lo == _sign(p(hi)):
        raise IntegrityError("isolating interval endpoints must straddle the root")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign(p(mid))
        if s_mid == 0:
            # root hit exactly; shrink symmetrically by denominator doubling
            d = (hi - lo) / 4
            while True:
                a, b = mid - d, mid + d
                if b - a <= width and p(a) != 0 and p(b) != 0:
                    return IsolatingInterval(a, b, p)
                d = d / 2
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi, p)


# ---------------------------------------------------------------------------
# Thin bivariate layer: just enough for Sylvester-resultant elimination.
# ---------------------------------------------------------------------------


class BivarPolynomial:
    """Polynomial in (x, y) stored as coefficients of y-powers, each a Polynomial in x."""

    __slots__ = ("_cy",)

    def __init__(self, coeffs_y: Iterable[Polynomial]):
        cy = list(coeffs_y)
        while cy and cy[-1].is_zero:
            cy.pop()
        self._cy = tuple(cy)

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], RatLike]) -> "BivarPolynomial":
        """Keys are (x_power, y_power)."""
        if not d:
            return cls(())
        dy = max(j for (_, j) in d)
        rows = []
        for j in range(dy + 1):
            col: dict[int, RatLike] = {i: v for (i, jj), v in d.items() if jj == j}
            if col:
                n = max(col)
                rows.append(Polynomial(col.get(i, 0) for i in range(n + 1)))
            else:
                rows.append(Polynomial.zero())
        return cls(rows)

    @property
    def coeffs_y(self) -> tuple[Polynomial, ...]:
        return self._cy

    @property
    def degree_y(self) -> int:
        return len(self._cy) - 1

    @property
    def is_zero(self) -> bool:
        return not self._cy

    def y_coeff(self, j: int) -> Polynomial:
        return self._cy[j] if 0 <= j < len(self._cy) else Polynomial.zero()

    def transpose(self) -> "BivarPolynomial":
        """Swap the roles of x and y."""
        if self.is_zero:
            return self
        dx = max(p.degree for p in self._cy)
        rows = []
        for i in range(dx + 1):
            rows.append(Polynomial(self._cy[j][i] for j in range(len(self._cy))))
        return BivarPolynomial(rows)

    def eval_x(self, x: Fraction) -> Polynomial:
        """Univariate polynomial in y obtained by substituting x."""
        return Polynomial(p(x) for p in self._cy)

    def subtract(self, other: "BivarPolynomial") -> "BivarPolynomial":
        n = max(len(self._cy), len(other._cy))
        return BivarPolynomial(self.y_coeff(j) - other.y_coeff(j) for j in range(n))

    def scale(self, v: RatLike) -> "BivarPolynomial":
        return BivarPolynomial(p.scale(v) for p in self._cy)


def _poly_matrix_det(m: list[list[Polynomial]]) -> Polynomial:
    n = len(m)
    if n == 0:
        return Polynomial.constant(1)
    if n == 1:
        return m[0][0]
    acc = Polynomial.zero()
    for i in range(n):
        if m[i][0].is_zero:
            continue
        minor = [row[1:] for k, row in enumerate(m) if k != i]
        term = m[i][0] * _poly_matrix_det(minor)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def resultant(p: BivarPolynomial, q: BivarPolynomial, eliminate: str = "y") -> Polynomial:
    """Sylvester resultant eliminating one variable of a bivariate pair.

    Vanishes exactly at projections of common zeros, plus possibly at points
    where both leading coefficients vanish; callers must re-check candidates.
    """
    if eliminate not in ("x", "y"):
        raise ValueError("eliminate must be 'x' or 'y'")
    if eliminate == "x":
        p, q = p.transpose(), q.transpose()
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of the zero polynomial")
    m, n = p.degree_y, q.degree_y
    if m == 0 and n == 0:
        return Polynomial.constant(1)
    size = m + n
    rows: list[list[Polynomial]] = []
    for k in range(n):
        row = [Polynomial.zero()] * size
        for j in range(m + 1):
            row[k + j] = p.y_coeff(m - j)
        rows.append(row)
    for k in range(m):
        row = [Polynomial.zero()] * size
        for j in range(n + 1):
            row[k + j] = q.y_coeff(n - j)
        rows.append(row)
    return _poly_matrix_det(rows)
