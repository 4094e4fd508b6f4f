"""Classify diagonal invariant Einstein metrics for a coefficient triple.

A diagonal metric x1 <.,.>|p1 + x2 <.,.>|p2 + x3 <.,.>|p3 has Ricci
coefficients

    r_i = 1/(2 x_i) + (a_i / 2) (x_i/(x_j x_k) - x_k/(x_i x_j) - x_j/(x_i x_k))

and is Einstein iff r1 = r2 = r3. Clearing denominators (multiply by
2 x1 x2 x3) turns r_i into F_i = x_j x_k + a_i (x_i^2 - x_j^2 - x_k^2), so
the system is F1 = F2 = F3. Solutions are reported up to scaling,
normalized so x1 = 1.

Branches:
  * a1 = a2 = a3 = a: closed-form list; only the standard metric for
    a in {1/4, 1/2}, otherwise the four metrics
    (t,t,t), ((1-2a)t, 2at, 2at) and its two coordinate rotations.
  * exactly one equal pair a_i = a_j: the difference r_i - r_j factors as
    (x_j - x_i)(x_k - 2 a_i (x_i + x_j)) = 0, and each factor reduces the
    remaining equation to a quadratic solved in exact surds:
      x_i = x_j:                (1-2a_k) x_i^2 - x_i x_k + (a_i+a_k) x_k^2 = 0
      x_k = 2a_i (x_i + x_j):   (a_i+a_k)(1-4a_i^2)(x_i^2 + x_j^2)
                                   = (1 - 2a_i + 8a_i^2 (a_i+a_k)) x_i x_j
  * all distinct: set x1 = 1, cancel the x2^2 terms of F1-F3 and F2-F3 to
    get a relation x2 * den(x3) = num(x3) with den linear, eliminate x2 by
    a Sylvester resultant, isolate the positive real roots of the
    squarefree eliminant by Sturm bisection, and back-substitute through
    num/den. Roots where the pivot den vanishes (a single rational point)
    are handled by solving the two univariate quadratics there exactly.

All certification is exact; floating point appears only in display helpers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Union

from .cases import SpaceCase
from .coeffs import coefficients_for_case
from .errors import IntegrityError, NotApplicable, TrisymError
from .intervals import Interval, eval_poly_range
from .polysolve import (
    BivarPolynomial,
    IsolatingInterval,
    Polynomial,
    count_real_roots,
    isolate_real_roots,
    poly_gcd,
    resultant,
    squarefree_part,
)
from .surd import Exact, QuadraticSurd, exact_approx, exact_sign, roots_of_quadratic

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

BRANCH_STANDARD = "standard"
BRANCH_PAIR_LINEAR = "equal-pair-linear"
BRANCH_PAIR_SUM = "equal-pair-sum"
BRANCH_GENERIC = "generic"
_BRANCH_ORDER = {BRANCH_STANDARD: 0, BRANCH_PAIR_LINEAR: 1, BRANCH_PAIR_SUM: 2, BRANCH_GENERIC: 3}


@dataclass(frozen=True)
class RootCoordinate:
    """A coordinate known exactly as the unique root of a polynomial in an interval."""

    interval: IsolatingInterval

    def approx(self, prec: int = 40) -> Fraction:
        return self.interval.midpoint

    def enclosure(self) -> Interval:
        return Interval(self.interval.lo, self.interval.hi)


Coordinate = Union[Fraction, QuadraticSurd, RootCoordinate]


@dataclass(frozen=True)
class _GenericLink:
    """Back-substitution data tying the x2 and x3 coordinates of one solution."""

    a: tuple[Fraction, Fraction, Fraction]
    iv3: IsolatingInterval
    iv2: IsolatingInterval
    num: Polynomial  # x2 = num(x3) / den(x3)
    den: Polynomial


@dataclass(frozen=True)
class EinsteinSolution:
    """One invariant Einstein metric, normalized to x1 = 1."""

    x: tuple[Coordinate, Coordinate, Coordinate]
    branch: str
    einstein_constant_sign: str
    residual_bound: Fraction
    _link: Optional[_GenericLink] = None

    @property
    def is_exact(self) -> bool:
        return all(not isinstance(c, RootCoordinate) for c in self.x)

    def approx(self, prec: int = 40) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(_coord_approx(c, prec) for c in self.x)

    def __repr__(self) -> str:
        vals = ", ".join(f"{float(v):.6f}" for v in self.approx())
        return f"EinsteinSolution({self.branch}; x = ({vals}))"


def _coord_approx(c: Coordinate, prec: int = 40) -> Fraction:
    if isinstance(c, RootCoordinate):
        return c.interval.midpoint
    return exact_approx(c, prec)


def _coord_enclosure(c: Coordinate) -> Interval:
    if isinstance(c, RootCoordinate):
        return c.enclosure()
    return Interval.of(c)


def ricci_coefficients(a, x):
    """(r1, r2, r3) at metric x; exact for rational or quadratic-surd input."""
    a1, a2, a3 = a
    x1, x2, x3 = x
    for v in (x1, x2, x3):
        if exact_sign(v) <= 0:
            raise ValueError("metric coordinates must be positive")

    def r(ai, xi, xj, xk):
        return 1 / (2 * xi) + ai * HALF * (xi / (xj * xk) - xk / (xi * xj) - xj / (xi * xk))

    return (r(a1, x1, x2, x3), r(a2, x2, x1, x3), r(a3, x3, x1, x2))


def _validate_a(a) -> tuple[Fraction, Fraction, Fraction]:
    vals = tuple(Fraction(v) for v in a)
    for v in vals:
        if not (0 < v <= HALF):
            raise TrisymError(f"coefficient a = {v} outside (0, 1/2]")
    return vals


def _is_zero(v: Exact) -> bool:
    if isinstance(v, QuadraticSurd):
        return False  # canonical surds are irrational
    return v == 0


def _exact_solution(a, triple: list[Exact], branch: str) -> EinsteinSolution:
    t0 = triple[0]
    x = (Fraction(1), triple[1] / t0, triple[2] / t0)
    r1, r2, r3 = ricci_coefficients(a, x)
    if not (_is_zero(r1 - r2) and _is_zero(r1 - r3)):
        raise IntegrityError(f"branch {branch} produced a non-solution {x}")
    sign = exact_sign(r1)
    return EinsteinSolution(
        x=x,
        branch=branch,
        einstein_constant_sign={1: "positive", 0: "zero", -1: "negative"}[sign],
        residual_bound=Fraction(0),
    )


def _solutions_all_equal(a: Fraction) -> list[EinsteinSolution]:
    aa = (a, a, a)
    out = [_exact_solution(aa, [Fraction(1)] * 3, BRANCH_STANDARD)]
    if a in (QUARTER, HALF):
        return out
    big, small = 1 - 2 * a, 2 * a
    for pat in ([big, small, small], [small, big, small], [small, small, big]):
        out.append(_exact_solution(aa, pat, BRANCH_PAIR_LINEAR))
    return out


def _pair_odd_index(a) -> int:
    """0-based index of the unpaired coefficient; -1 when all distinct."""
    for k in range(3):
        i, j = [t for t in range(3) if t != k]
        if a[i] == a[j]:
            return k
    return -1


def _solutions_equal_pair(a, k: int) -> list[EinsteinSolution]:
    i, j = [t for t in range(3) if t != k]
    a_pair, a_odd = a[i], a[k]
    out: list[EinsteinSolution] = []

    # branch x_i = x_j: (1 - 2 a_odd) r^2 - r + (a_pair + a_odd) = 0, r = x_i / x_k
    lead = 1 - 2 * a_odd
    if lead == 0:
        roots: list[Exact] = [a_pair + a_odd]
    else:
        roots = roots_of_quadratic(lead, Fraction(-1), a_pair + a_odd)
    for r in roots:
        if exact_sign(r) <= 0:
            raise IntegrityError("equal-pair quadratic produced a nonpositive root")
        triple: list[Exact] = [Fraction(0)] * 3
        triple[i] = triple[j] = r
        triple[k] = Fraction(1)
        out.append(_exact_solution(a, triple, BRANCH_PAIR_LINEAR))

    # branch x_k = 2 a_pair (x_i + x_j): symmetric quadratic in q = x_i / x_j
    if a_pair != HALF:
        lead2 = (a_pair + a_odd) * (1 - 4 * a_pair * a_pair)
        mid2 = -(1 - 2 * a_pair + 8 * a_pair * a_pair * (a_pair + a_odd))
        for q in roots_of_quadratic(lead2, mid2, lead2):
            if exact_sign(q) <= 0:
                raise IntegrityError("equal-pair sum branch produced a nonpositive root")
            triple = [Fraction(0)] * 3
            triple[i] = q
            triple[j] = Fraction(1)
            triple[k] = 2 * a_pair * (q + 1)
            out.append(_exact_solution(a, triple, BRANCH_PAIR_SUM))

    return _dedupe_exact(out)


def _dedupe_exact(sols: list[EinsteinSolution]) -> list[EinsteinSolution]:
    kept: list[EinsteinSolution] = []
    for s in sols:
        if not any(all(x == y for x, y in zip(s.x, t.x)) for t in kept):
            kept.append(s)
    return kept


# -- generic branch (all coefficients distinct) ------------------------------

# F_i = x_j x_k + a_i (x_i^2 - x_j^2 - x_k^2) at x1 = 1, keys are (x3_pow, x2_pow)
def _cleared_forms(a) -> tuple[dict, dict, dict]:
    a1, a2, a3 = a
    f1 = {(1, 1): Fraction(1), (0, 0): a1, (0, 2): -a1, (2, 0): -a1}
    f2 = {(1, 0): Fraction(1), (0, 2): a2, (0, 0): -a2, (2, 0): -a2}
    f3 = {(0, 1): Fraction(1), (2, 0): a3, (0, 0): -a3, (0, 2): -a3}
    return f1, f2, f3


def _cleared_difference(a, i: int, j: int) -> BivarPolynomial:
    forms = _cleared_forms(a)
    diff: dict[tuple[int, int], Fraction] = {}
    for key, v in forms[i].items():
        diff[key] = diff.get(key, Fraction(0)) + v
    for key, v in forms[j].items():
        diff[key] = diff.get(key, Fraction(0)) - v
    return BivarPolynomial.from_dict({k: v for k, v in diff.items() if v != 0})


def _pivot_solutions_at(a, xi3: Fraction, p1: BivarPolynomial, p2: BivarPolynomial) -> list[EinsteinSolution]:
    """Exact solutions sitting at the rational pivot point x3 = xi3, if any."""
    q1, q2 = p1.eval_x(xi3), p2.eval_x(xi3)
    g = poly_gcd(q1, q2)
    if g.degree < 1:
        return []
    if g.degree == 1:
        roots: list[Exact] = [-g[0] / g[1]]
    else:
        roots = roots_of_quadratic(g[2], g[1], g[0])
    out = []
    for y in roots:
        if exact_sign(y) > 0:
            out.append(_exact_solution(a, [Fraction(1), y, xi3], BRANCH_GENERIC))
    return out


def _refine_until_positive(iv: IsolatingInterval) -> IsolatingInterval:
    while iv.lo <= 0:
        iv = iv.refine(iv.width / 4)
    return iv


def _link_x2_interval(
    eliminant2: Polynomial, iv3: IsolatingInterval, num: Polynomial, den: Polynomial
) -> tuple[IsolatingInterval, IsolatingInterval, bool]:
    """Refine x3 until num/den certifies one positive root of the x2 eliminant.

    Returns (x2 interval, refined x3 interval, positive) where positive is
    False when the back-substituted coordinate is certifiably nonpositive.
    """
    iv = iv3
    for _ in range(400):
        box = Interval(iv.lo, iv.hi)
        den_range = eval_poly_range(den, box)
        if not den_range.contains_zero():
            rng = eval_poly_range(num, box) / den_range
            if rng.strictly_negative() or rng.hi == 0:
                return iv, iv, False
            if rng.strictly_positive() and rng.width > 0:
                if (
                    eliminant2(rng.lo) != 0
                    and eliminant2(rng.hi) != 0
                    and count_real_roots(eliminant2, rng.lo, rng.hi) == 1
                ):
                    return IsolatingInterval(rng.lo, rng.hi, eliminant2), iv, True
        iv = iv.refine(iv.width / 4)
    raise IntegrityError("failed to certify the back-substituted coordinate")


def _solutions_generic(a) -> list[EinsteinSolution]:
    p1 = _cleared_difference(a, 0, 2)  # F1 - F3
    p2 = _cleared_difference(a, 1, 2)  # F2 - F3
    c1 = a[2] - a[0]  # x2^2 coefficient of p1 (nonzero: a's distinct)
    c2 = a[1] + a[2]  # x2^2 coefficient of p2 (always positive)
    # cancel x2^2: rel = c2*p1 - c1*p2 = den(x3) * x2 - num(x3), den linear
    rel = p1.scale(c2).subtract(p2.scale(c1))
    if rel.degree_y != 1:
        raise IntegrityError("x2-linear relation has unexpected degree")
    den = rel.y_coeff(1)
    num = -rel.y_coeff(0)
    if den.degree != 1:
        raise IntegrityError("pivot polynomial is not linear")

    elim3 = resultant(p2, rel, eliminate="y")
    if elim3.is_zero:
        raise IntegrityError("x3 eliminant vanished identically")
    elim3 = squarefree_part(elim3)

    # symmetric elimination (swap roles of x2 and x3) for the x2 certificates
    t1, t2 = p1.transpose(), p2.transpose()
    e1 = t1.y_coeff(2)[0]  # x3^2 coefficient of p1: -(a1+a3)
    e2 = t2.y_coeff(2)[0]  # x3^2 coefficient of p2: -(a2+a3)
    rel2 = t1.scale(e2).subtract(t2.scale(e1))
    elim2 = resultant(t2, rel2, eliminate="y")
    if elim2.is_zero:
        raise IntegrityError("x2 eliminant vanished identically")
    elim2 = squarefree_part(elim2)

    out: list[EinsteinSolution] = []

    # pivot point of the back-substitution: single rational root of den
    xi = -den[0] / den[1]
    remaining = elim3
    if xi > 0 and elim3(xi) == 0:
        out.extend(_pivot_solutions_at(a, xi, p1, p2))
        while remaining.degree >= 1 and remaining(xi) == 0:
            remaining = remaining.exact_div(Polynomial((-xi, 1)))

    if remaining.degree >= 1:
        zero_x2 = poly_gcd(remaining, num)
        for iv3 in isolate_real_roots(remaining, 0, None):
            if zero_x2.degree >= 1 and count_real_roots(zero_x2, iv3.lo, iv3.hi) == 1:
                continue  # back-substitution gives x2 = 0 exactly
            iv3 = _refine_until_positive(iv3)
            iv2, iv3, positive = _link_x2_interval(elim2, iv3, num, den)
            if not positive:
                continue
            x = (Fraction(1), RootCoordinate(iv2), RootCoordinate(iv3))
            link = _GenericLink(a=a, iv3=iv3, iv2=iv2, num=num, den=den)
            out.append(
                EinsteinSolution(
                    x=x,
                    branch=BRANCH_GENERIC,
                    einstein_constant_sign=_constant_sign_interval(a, x),
                    residual_bound=_residual_at_midpoint(a, x),
                    _link=link,
                )
            )
    return out


def _residual_at_midpoint(a, x) -> Fraction:
    mids = tuple(_coord_approx(c) for c in x)
    r1, r2, r3 = ricci_coefficients(a, mids)
    return max(abs(r1 - r2), abs(r1 - r3), abs(r2 - r3))


def _ricci_interval(a, boxes: tuple[Interval, Interval, Interval], i: int) -> Interval:
    j, k = [t for t in range(3) if t != i]
    xi, xj, xk = boxes[i], boxes[j], boxes[k]
    spread = xi / (xj * xk) - xk / (xi * xj) - xj / (xi * xk)
    return Interval.point(Fraction(1)) / (2 * xi) + Interval.point(a[i] * HALF) * spread


def _constant_sign_interval(a, x, max_refine: int = 60) -> str:
    xs = list(x)
    for _ in range(max_refine):
        boxes = tuple(_coord_enclosure(c) for c in xs)
        r1 = _ricci_interval(a, boxes, 0)
        if r1.strictly_positive():
            return "positive"
        if r1.strictly_negative():
            return "negative"
        xs = [
            RootCoordinate(c.interval.refine(c.interval.width / 4))
            if isinstance(c, RootCoordinate)
            else c
            for c in xs
        ]
    return "indeterminate"


def _sort_key(sol: EinsteinSolution):
    ax = sol.approx(40)
    return (_BRANCH_ORDER[sol.branch], ax[1], ax[2])


def solve_einstein(a) -> list[EinsteinSolution]:
    """All positive solutions of r1 = r2 = r3 up to scale, normalized to x1 = 1."""
    a = _validate_a(a)
    if a[0] == a[1] == a[2]:
        sols = _solutions_all_equal(a[0])
    else:
        k = _pair_odd_index(a)
        sols = _solutions_equal_pair(a, k) if k >= 0 else _solutions_generic(a)
    return sorted(sols, key=_sort_key)


def refine_solution(sol: EinsteinSolution, width) -> EinsteinSolution:
    """Shrink interval coordinates below ``width``; exact solutions pass through."""
    if sol.is_exact:
        return sol
    link = sol._link
    if link is None:
        raise IntegrityError("interval solution without refinement data")
    width = Fraction(width)
    iv3 = link.iv3
    if iv3.width > width:
        iv3 = iv3.refine(width)
    iv2 = link.iv2
    for _ in range(400):
        box = Interval(iv3.lo, iv3.hi)
        den_range = eval_poly_range(link.den, box)
        if not den_range.contains_zero():
            rng = eval_poly_range(link.num, box) / den_range
            lo, hi = max(rng.lo, iv2.lo), min(rng.hi, iv2.hi)
            if (
                lo < hi
                and hi - lo <= width
                and iv2.poly(lo) != 0
                and iv2.poly(hi) != 0
                and count_real_roots(iv2.poly, lo, hi) == 1
            ):
                iv2 = IsolatingInterval(lo, hi, iv2.poly)
                break
        iv3 = iv3.refine(iv3.width / 4)
    else:
        raise IntegrityError("failed to refine the back-substituted coordinate")
    x = (Fraction(1), RootCoordinate(iv2), RootCoordinate(iv3))
    return replace(
        sol,
        x=x,
        residual_bound=_residual_at_midpoint(link.a, x),
        _link=replace(link, iv2=iv2, iv3=iv3),
    )


def verify_solution(a, sol: EinsteinSolution, tol=Fraction(1, 10**20)) -> bool:
    """Certified check that ``sol`` solves the Einstein system to tolerance.

    Exact coordinates are checked by identity in their field; interval
    coordinates are refined until the residual enclosure lies inside
    (-tol, tol), or until it certifiably excludes zero (returns False).
    """
    a = _validate_a(a)
    tol = Fraction(tol)
    if sol.is_exact:
        r1, r2, r3 = ricci_coefficients(a, sol.x)
        return _is_zero(r1 - r2) and _is_zero(r1 - r3)
    current = sol
    for _ in range(200):
        boxes = tuple(_coord_enclosure(c) for c in current.x)
        rs = [_ricci_interval(a, boxes, i) for i in range(3)]
        diffs = [rs[0] - rs[1], rs[0] - rs[2], rs[1] - rs[2]]
        if any(not d.contains_zero() for d in diffs):
            return False
        if all(d.abs_bound() < tol for d in diffs):
            return True
        w = max(Interval(c.interval.lo, c.interval.hi).width for c in current.x if isinstance(c, RootCoordinate))
        current = refine_solution(current, w / 8)
    raise IntegrityError("verification did not converge")


@dataclass(frozen=True)
class CaseSolutions:
    """Solver output for one catalog entry."""

    case: SpaceCase
    a: tuple[Fraction, Fraction, Fraction]
    solutions: tuple[EinsteinSolution, ...]


def solve_case(case: SpaceCase) -> CaseSolutions:
    """Coefficients plus the full Einstein solution list for a catalog entry.

    Raises NotApplicable for the flagged cases whose summands are isomorphic
    (the diagonal ansatz does not exhaust their invariant metrics there).
    """
    if case.isomorphic_summands:
        raise NotApplicable(
            f"{case.describe()}: isotropy summands are isomorphic; the diagonal solver does not apply"
        )
    data = coefficients_for_case(case)
    sols = solve_einstein(data.a)
    return CaseSolutions(case=case, a=data.a, solutions=tuple(sols))
