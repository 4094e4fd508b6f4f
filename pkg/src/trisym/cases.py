"""Catalog of the classified spaces with three isotropy summands.

Each catalog entry records one homogeneous space G/H, where G is compact
simple and the isotropy complement splits into three summands p1, p2, p3
cut out by a commuting pair of order-2 automorphisms (theta, tau).

Eigenspace convention, fixed once and validated by the dimension tests:

    h  = (theta=+, tau=+)     p1 = (theta=+, tau=-)
    p2 = (theta=-, tau=+)     p3 = (theta=-, tau=-)

For pairs where both automorphisms are inner (given by diagram-node
markings), the summand dimensions are computed from root parities: a root
a = sum n_k a_k contributes its two real root dimensions to the block
selected by (e_H(a), e_H1(a)) = (sum of n_k over theta-marks mod 2, same
for tau-marks). For pairs with an outer ingredient, dimensions come from
the curated types of the fixed subalgebras k_i = h + p_i; the identity
dim h + d1 + d2 + d3 = dim g is enforced either way, as is
dim k_i = dim h + d_i for the recorded subalgebra types.

Families with a classical matrix model additionally carry a "sizes" triple
(s1, s2, s3): the space is G(s1+s2+s3)/G(s1)xG(s2)xG(s3) with p_i the
tensor product of the factors j, k != i, so d_i = kappa * s_j * s_k. The
flag `isomorphic_summands` marks the degenerate shapes whose summands
coincide as h-modules; the diagonal-metric solver is not applicable there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import IntegrityError, InvalidMarking, TrisymError
from .rootsys import RootSystem, build_root_system, dimension

# A subalgebra factor: ("T", k) is a k-dimensional torus, otherwise (family, rank).
Factor = tuple[str, int]

INP_TAGS = tuple(f"InP{i}" for i in range(1, 23))


def factor_dim(f: Factor) -> int:
    fam, r = f
    if fam == "T":
        return r
    if r == 0:
        return 0
    if fam == "A":
        return r * (r + 2)
    if fam in ("B", "C"):
        return r * (2 * r + 1)
    if fam == "D":
        return r * (2 * r - 1)
    return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[(fam, r)]


_CANONICAL_NAMES = {("B", 1): "A1", ("C", 1): "A1", ("C", 2): "B2", ("D", 1): "T", ("D", 3): "A3"}


def factor_name(f: Factor) -> str:
    fam, r = f
    if fam == "T":
        return "T" if r == 1 else f"T^{r}"
    if (fam, r) == ("D", 2):
        return "A1xA1"
    return _CANONICAL_NAMES.get((fam, r), f"{fam}{r}")


def factors_dim(factors: tuple[Factor, ...]) -> int:
    return sum(factor_dim(f) for f in factors)


def factors_name(factors: tuple[Factor, ...]) -> str:
    names = [factor_name(f) for f in factors if factor_dim(f) > 0]
    return "x".join(names) if names else "e"


@dataclass(frozen=True)
class InvolutionMarking:
    """Diagram-node data determining an involution pair.

    Marks are 1-based node indices of the ambient diagram; `outer` is a
    descriptor string when the second involution has a diagram-automorphism
    component (such pairs carry no usable parity data here).
    """

    h_marks: frozenset[int]
    h1_marks: frozenset[int]
    outer: Optional[str] = None

    @classmethod
    def inner(cls, h_marks, h1_marks) -> "InvolutionMarking":
        return cls(frozenset(h_marks), frozenset(h1_marks))


def inner_decomposition_dims(rs: RootSystem, marking: InvolutionMarking) -> tuple[int, int, int, int]:
    """(dim h, d1, d2, d3) from root parities of an inner involution pair."""
    if marking.outer is not None:
        raise InvalidMarking("marking has an outer component; parity rule does not apply")
    if not marking.h_marks or not marking.h1_marks:
        raise InvalidMarking("both mark sets must be nonempty")
    nodes = set(range(1, rs.rank + 1))
    bad = (marking.h_marks | marking.h1_marks) - nodes
    if bad:
        raise InvalidMarking(f"marks {sorted(bad)} outside diagram nodes 1..{rs.rank}")
    counts = {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 0}
    for root in rs.positive_roots:
        e_h = sum(root[k - 1] for k in marking.h_marks) % 2
        e_h1 = sum(root[k - 1] for k in marking.h1_marks) % 2
        counts[(e_h, e_h1)] += 1
    dim_h = rs.rank + 2 * counts[(0, 0)]
    d1, d2, d3 = 2 * counts[(0, 1)], 2 * counts[(1, 0)], 2 * counts[(1, 1)]
    if dim_h + d1 + d2 + d3 != dimension(rs):
        raise IntegrityError("parity blocks do not fill the algebra")
    return dim_h, d1, d2, d3


@dataclass(frozen=True)
class SpaceCase:
    """One catalog entry: a classified space with its construction metadata."""

    inp_tag: str
    type_label: str
    family: str
    rank: int
    params: tuple[tuple[str, int], ...]
    isotropy_factors: tuple[Factor, ...]
    fixed_subalgebra_types: tuple[tuple[Factor, ...], tuple[Factor, ...], tuple[Factor, ...]]
    marking: InvolutionMarking
    sizes: Optional[tuple[str, tuple[int, int, int]]] = None
    # gamma_mode: how coefficient data is anchored (see coeffs module)
    gamma_mode: str = "sizes"
    anchor_block: int = 0
    anchor_gamma: Optional[Fraction] = None
    isomorphic_summands: bool = False

    def param(self, name: str) -> int:
        for k, v in self.params:
            if k == name:
                return v
        raise KeyError(name)

    @property
    def isotropy_type(self) -> str:
        return factors_name(self.isotropy_factors)

    @property
    def ambient(self) -> tuple[str, int]:
        return (self.family, self.rank)

    @property
    def is_inner(self) -> bool:
        return self.marking.outer is None

    def describe(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.type_label}({ps})" if ps else self.type_label

    def __repr__(self) -> str:
        return f"SpaceCase({self.describe()})"


def ambient_dim(case: SpaceCase) -> int:
    return factor_dim((case.family, case.rank))


def isotropy_dim(case: SpaceCase) -> int:
    return factors_dim(case.isotropy_factors)


def case_dims(case: SpaceCase) -> tuple[int, int, int, int]:
    """(dim h, d1, d2, d3); parity-derived when inner, metadata-derived otherwise.

    Fails loudly when the bookkeeping identities do not close.
    """
    dim_g = ambient_dim(case)
    dim_h = isotropy_dim(case)
    if case.is_inner:
        rs = build_root_system(case.family, case.rank)
        h_from_roots, d1, d2, d3 = inner_decomposition_dims(rs, case.marking)
        if h_from_roots != dim_h:
            raise IntegrityError(
                f"{case.describe()}: isotropy metadata dim {dim_h} != parity dim {h_from_roots}"
            )
    else:
        ks = [factors_dim(kt) for kt in case.fixed_subalgebra_types]
        d1, d2, d3 = (k - dim_h for k in ks)
    if dim_h + d1 + d2 + d3 != dim_g:
        raise IntegrityError(
            f"{case.describe()}: dim h + sum(d) = {dim_h + d1 + d2 + d3} != dim g = {dim_g}"
        )
    if min(d1, d2, d3) <= 0:
        raise IntegrityError(f"{case.describe()}: nonpositive summand dimension {(d1, d2, d3)}")
    for idx, kt in enumerate(case.fixed_subalgebra_types):
        expected = dim_h + (d1, d2, d3)[idx]
        if factors_dim(kt) != expected:
            raise IntegrityError(
                f"{case.describe()}: dim k{idx + 1} = {factors_dim(kt)} != dim h + d{idx + 1} = {expected}"
            )
    if case.sizes is not None:
        kind, (s1, s2, s3) = case.sizes
        kappa = {"su": 2, "sp": 4, "so": 1}[kind]
        expect = (kappa * s2 * s3, kappa * s1 * s3, kappa * s1 * s2)
        if (d1, d2, d3) != expect:
            raise IntegrityError(f"{case.describe()}: sizes model dims {expect} != {(d1, d2, d3)}")
    return dim_h, d1, d2, d3


# ---------------------------------------------------------------------------
# Per-case constructors. Each validates its parameter ranges (the ranges of
# the classification), then assembles the entry and runs the integrity gate.
# ---------------------------------------------------------------------------


def _case(**kw) -> SpaceCase:
    case = SpaceCase(**kw)
    case_dims(case)
    return case


def _torus(k: int) -> Factor:
    return ("T", k)


def _check(cond: bool, label: str, msg: str):
    if not cond:
        raise TrisymError(f"{label}: parameter out of range ({msg})")


def a_i_case() -> SpaceCase:
    return _case(
        inp_tag="InP1",
        type_label="A-I",
        family="A",
        rank=1,
        params=(("l", 1),),
        isotropy_factors=(),
        fixed_subalgebra_types=((_torus(1),), (_torus(1),), (_torus(1),)),
        marking=InvolutionMarking(frozenset({1}), frozenset(), outer="center-negation"),
        gamma_mode="abelian",
    )


def a_ii_case(l: int) -> SpaceCase:
    _check(l >= 3 and l % 2 == 1, "A-II", "l must be odd and >= 3")
    k = (l + 1) // 2
    return _case(
        inp_tag="InP2",
        type_label="A-II",
        family="A",
        rank=l,
        params=(("l", l),),
        isotropy_factors=(_torus(1), ("A", k - 1)),
        fixed_subalgebra_types=(
            (("A", k - 1), ("A", k - 1), _torus(1)),
            (("C", k),),
            (("D", k),),
        ),
        marking=InvolutionMarking(frozenset({k}), frozenset(), outer="diagram-flip"),
        gamma_mode="anchor",
        anchor_block=2,
        anchor_gamma=Fraction(k + 1, 2 * k),
    )


def a_iii_case(l: int, i: int, j: int) -> SpaceCase:
    _check(l >= 2, "A-III", "l >= 2")
    _check(1 <= i <= (l + 1) // 3, "A-III", "1 <= i <= floor((l+1)/3)")
    _check(2 * i <= j <= (l + i + 1) // 2, "A-III", "2i <= j <= floor((l+i+1)/2)")
    n1, n2, n3 = i, j - i, l + 1 - j
    return _case(
        inp_tag="InP3",
        type_label="A-III",
        family="A",
        rank=l,
        params=(("l", l), ("i", i), ("j", j)),
        isotropy_factors=(_torus(2), ("A", i - 1), ("A", j - i - 1), ("A", l - j)),
        fixed_subalgebra_types=(
            (_torus(1), ("A", i - 1), ("A", l - i)),
            (_torus(1), ("A", j - 1), ("A", l - j)),
            (_torus(1), ("A", n1 + n3 - 1), ("A", n2 - 1)),
        ),
        marking=InvolutionMarking.inner({i}, {j}),
        sizes=("su", (n1, n3, n2)),
    )


def b_i_case(l: int, i: int, j: int) -> SpaceCase:
    _check(l >= 2, "B-I", "l >= 2")
    _check(2 < i <= l, "B-I", "2 < i <= l")
    _check(2 * j >= i and 2 <= j <= i - 1, "B-I", "i/2 <= j <= i-1")
    return _case(
        inp_tag="InP4",
        type_label="B-I",
        family="B",
        rank=l,
        params=(("l", l), ("i", i), ("j", j)),
        isotropy_factors=(("B", l - i), ("D", j), ("D", i - j)),
        fixed_subalgebra_types=(
            (("D", i), ("B", l - i)),
            (("D", j), ("B", l - j)),
            (("D", i - j), ("B", l - i + j)),
        ),
        marking=InvolutionMarking.inner({i}, {j}),
        sizes=("so", (2 * (l - i) + 1, 2 * j, 2 * (i - j))),
    )


def b_ii_case(l: int, i: int) -> SpaceCase:
    _check(l >= 2, "B-II", "l >= 2")
    _check(2 * i >= l + 1 and i <= l, "B-II", "(l+1)/2 <= i <= l")
    return _case(
        inp_tag="InP5",
        type_label="B-II",
        family="B",
        rank=l,
        params=(("l", l), ("i", i)),
        isotropy_factors=(("B", i - 1), ("B", l - i)),
        fixed_subalgebra_types=(
            (("D", i), ("B", l - i)),
            (("D", l),),
            (("B", i - 1), ("D", l - i + 1)),
        ),
        marking=InvolutionMarking(frozenset({i}), frozenset(), outer="extended-node-swap"),
        sizes=("so", (2 * (l - i) + 1, 1, 2 * i - 1)),
        isomorphic_summands=(i == l),
    )


def b_iii_case(l: int, i: int, j: int) -> SpaceCase:
    _check(l >= 2, "B-III", "l >= 2")
    _check((2 * l + 3) // 3 <= i <= l, "B-III", "floor((2l+3)/3) <= i <= l")
    _check((i + 2) // 2 <= j <= 2 * i - l and 2 <= j < i, "B-III", "floor((i+2)/2) <= j <= 2i-l, 2 <= j < i")
    return _case(
        inp_tag="InP6",
        type_label="B-III",
        family="B",
        rank=l,
        params=(("l", l), ("i", i), ("j", j)),
        isotropy_factors=(("B", j - 1), ("B", i - j), ("B", l - i)),
        fixed_subalgebra_types=(
            (("D", i), ("B", l - i)),
            (("B", j - 1), ("D", l - j + 1)),
            (("B", i - j), ("D", l - i + j)),
        ),
        marking=InvolutionMarking(frozenset({i}), frozenset({j}), outer="extended-node-swap"),
        sizes=("so", (2 * (l - i) + 1, 2 * j - 1, 2 * (i - j) + 1)),
    )


def c_i_case(l: int, i: int, j: int) -> SpaceCase:
    _check(l >= 3, "C-I", "l >= 3")
    _check(1 <= i <= l // 3, "C-I", "1 <= i <= floor(l/3)")
    _check(2 * i <= j <= (l + i) // 2, "C-I", "2i <= j <= floor((l+i)/2)")
    return _case(
        inp_tag="InP7",
        type_label="C-I",
        family="C",
        rank=l,
        params=(("l", l), ("i", i), ("j", j)),
        isotropy_factors=(("C", i), ("C", j - i), ("C", l - j)),
        fixed_subalgebra_types=(
            (("C", i), ("C", l - i)),
            (("C", j), ("C", l - j)),
            (("C", j - i), ("C", l - j + i)),
        ),
        marking=InvolutionMarking.inner({i}, {j}),
        sizes=("sp", (i, l - j, j - i)),
    )


def d_i_case(l: int, i: int, j: int) -> SpaceCase:
    _check(l >= 4, "D-I", "l >= 4")
    _check(1 <= i <= l // 3, "D-I", "1 <= i <= floor(l/3)")
    _check(2 * i <= j <= (l + i) // 2, "D-I", "2i <= j <= floor((l+i)/2)")
    return _case(
        inp_tag="InP8",
        type_label="D-I",
        family="D",
        rank=l,
        params=(("l", l), ("i", i), ("j", j)),
        isotropy_factors=(("D", i), ("D", j - i), ("D", l - j)),
        fixed_subalgebra_types=(
            (("D", i), ("D", l - i)),
            (("D", j), ("D", l - j)),
            (("D", j - i), ("D", l - j + i)),
        ),
        marking=InvolutionMarking.inner({i}, {j}),
        sizes=("so", (2 * i, 2 * (l - j), 2 * (j - i))),
    )


def d_ii_case(l: int, i: int) -> SpaceCase:
    _check(l >= 4, "D-II", "l >= 4")
    _check(1 <= i <= l - 2, "D-II", "1 <= i <= l-2")
    return _case(
        inp_tag="InP9",
        type_label="D-II",
        family="D",
        rank=l,
        params=(("l", l), ("i", i)),
        isotropy_factors=(("B", i - 1), ("D", l - i)),
        fixed_subalgebra_types=(
            (("D", i), ("D", l - i)),
            (("B", l - 1),),
            (("B", i - 1), ("B", l - i)),
        ),
        marking=InvolutionMarking(frozenset({i}), frozenset(), outer="fork-swap"),
        sizes=("so", (2 * (l - i), 1, 2 * i - 1)),
        isomorphic_summands=(i == 1),
    )


def d_iii_case(l: int, i: int, j: int) -> SpaceCase:
    _check(l >= 4, "D-III", "l >= 4")
    _check(1 <= i <= l - 2, "D-III", "1 <= i <= l-2")
    _check(i < j <= (l + i - 1) // 2, "D-III", "i < j <= floor((l+i-1)/2)")
    return _case(
        inp_tag="InP10",
        type_label="D-III",
        family="D",
        rank=l,
        params=(("l", l), ("i", i), ("j", j)),
        isotropy_factors=(("D", i), ("B", j - i), ("B", l - j - 1)),
        fixed_subalgebra_types=(
            (("D", i), ("D", l - i)),
            (("B", j), ("B", l - j - 1)),
            (("B", j - i), ("B", i + l - j - 1)),
        ),
        marking=InvolutionMarking(frozenset({i}), frozenset({j}), outer="fork-swap"),
        sizes=("so", (2 * i, 2 * (l - j) - 1, 2 * (j - i) + 1)),
    )


def d_iv_case(l: int) -> SpaceCase:
    _check(l >= 4, "D-IV", "l >= 4")
    return _case(
        inp_tag="InP11",
        type_label="D-IV",
        family="D",
        rank=l,
        params=(("l", l),),
        isotropy_factors=(("D", l - 1),),
        fixed_subalgebra_types=(
            (_torus(1), ("D", l - 1)),
            (("B", l - 1),),
            (("B", l - 1),),
        ),
        marking=InvolutionMarking(frozenset({1}), frozenset(), outer="center-negation"),
        sizes=("so", (2 * (l - 1), 1, 1)),
        isomorphic_summands=True,
    )


def d_v_case(l: int) -> SpaceCase:
    _check(l >= 4, "D-V", "l >= 4")
    return _case(
        inp_tag="InP12",
        type_label="D-V",
        family="D",
        rank=l,
        params=(("l", l),),
        isotropy_factors=(_torus(2), ("A", l - 2)),
        fixed_subalgebra_types=(
            (_torus(1), ("D", l - 1)),
            (_torus(1), ("A", l - 1)),
            (_torus(1), ("A", l - 1)),
        ),
        marking=InvolutionMarking.inner({1}, {l}),
        gamma_mode="anchor",
        anchor_block=1,
        anchor_gamma=Fraction(2 * l - 4, 2 * l - 2),
    )


def _exceptional(tag, label, family, rank, iso, ks, marking, anchor_block, anchor_gamma):
    return _case(
        inp_tag=tag,
        type_label=label,
        family=family,
        rank=rank,
        params=(),
        isotropy_factors=iso,
        fixed_subalgebra_types=ks,
        marking=marking,
        gamma_mode="anchor",
        anchor_block=anchor_block,
        anchor_gamma=anchor_gamma,
    )


def e6_i_case() -> SpaceCase:
    return _exceptional(
        "InP13", "E6-I", "E", 6, (_torus(2), ("D", 4)),
        ((_torus(1), ("D", 5)), (_torus(1), ("D", 5)), (_torus(1), ("D", 5))),
        InvolutionMarking.inner({1}, {5}), 1, Fraction(2, 3),
    )


def e6_ii_case() -> SpaceCase:
    return _exceptional(
        "InP14", "E6-II", "E", 6, (_torus(1), ("A", 1), ("A", 1), ("A", 3)),
        ((("A", 1), ("A", 5)), (("A", 1), ("A", 5)), (_torus(1), ("D", 5))),
        InvolutionMarking.inner({6}, {2}), 1, Fraction(1, 2),
    )


def e6_iii_case() -> SpaceCase:
    return _exceptional(
        "InP15", "E6-III", "E", 6, (("A", 1), ("C", 3)),
        ((("A", 1), ("A", 5)), (("F", 4),), (("C", 4),)),
        InvolutionMarking(frozenset({6}), frozenset(), outer="diagram-flip"),
        1, Fraction(1, 2),
    )


def e7_i_case() -> SpaceCase:
    return _exceptional(
        "InP16", "E7-I", "E", 7, (("A", 1), ("A", 1), ("A", 1), ("D", 4)),
        ((("A", 1), ("D", 6)), (("A", 1), ("D", 6)), (("A", 1), ("D", 6))),
        InvolutionMarking.inner({6}, {2}), 1, Fraction(5, 9),
    )


def e7_ii_case() -> SpaceCase:
    return _exceptional(
        "InP17", "E7-II", "E", 7, (_torus(1), ("A", 1), ("A", 5)),
        ((("A", 7),), (("A", 1), ("D", 6)), (_torus(1), ("E", 6))),
        InvolutionMarking.inner({7}, {2}), 2, Fraction(5, 9),
    )


def e7_iii_case() -> SpaceCase:
    return _exceptional(
        "InP18", "E7-III", "E", 7, (("D", 4),),
        ((("A", 7),), (("A", 7),), (("A", 7),)),
        InvolutionMarking(frozenset({7}), frozenset({4}), outer="diagram-flip+inner"),
        1, Fraction(4, 9),
    )


def e8_i_case() -> SpaceCase:
    return _exceptional(
        "InP19", "E8-I", "E", 8, (("A", 1), ("A", 1), ("D", 6)),
        ((("D", 8),), (("A", 1), ("E", 7)), (("A", 1), ("E", 7))),
        InvolutionMarking.inner({7}, {1}), 2, Fraction(3, 5),
    )


def e8_ii_case() -> SpaceCase:
    return _exceptional(
        "InP20", "E8-II", "E", 8, (("D", 4), ("D", 4)),
        ((("D", 8),), (("D", 8),), (("D", 8),)),
        InvolutionMarking.inner({7}, {3}), 1, Fraction(7, 15),
    )


def f4_i_case() -> SpaceCase:
    return _exceptional(
        "InP21", "F4-I", "F", 4, (("D", 4),),
        ((("B", 4),), (("B", 4),), (("B", 4),)),
        InvolutionMarking.inner({4}, {3}), 1, Fraction(7, 9),
    )


def f4_ii_case() -> SpaceCase:
    return _exceptional(
        "InP22", "F4-II", "F", 4, (("A", 1), ("A", 1), ("C", 2)),
        ((("B", 4),), (("A", 1), ("C", 3)), (("A", 1), ("C", 3))),
        InvolutionMarking.inner({4}, {1}), 1, Fraction(7, 9),
    )


# builders keyed by label: (constructor, parameter names)
CASE_BUILDERS = {
    "A-I": (a_i_case, ()),
    "A-II": (a_ii_case, ("l",)),
    "A-III": (a_iii_case, ("l", "i", "j")),
    "B-I": (b_i_case, ("l", "i", "j")),
    "B-II": (b_ii_case, ("l", "i")),
    "B-III": (b_iii_case, ("l", "i", "j")),
    "C-I": (c_i_case, ("l", "i", "j")),
    "D-I": (d_i_case, ("l", "i", "j")),
    "D-II": (d_ii_case, ("l", "i")),
    "D-III": (d_iii_case, ("l", "i", "j")),
    "D-IV": (d_iv_case, ("l",)),
    "D-V": (d_v_case, ("l",)),
    "E6-I": (e6_i_case, ()),
    "E6-II": (e6_ii_case, ()),
    "E6-III": (e6_iii_case, ()),
    "E7-I": (e7_i_case, ()),
    "E7-II": (e7_ii_case, ()),
    "E7-III": (e7_iii_case, ()),
    "E8-I": (e8_i_case, ()),
    "E8-II": (e8_ii_case, ()),
    "F4-I": (f4_i_case, ()),
    "F4-II": (f4_ii_case, ()),
}

_TAG_TO_LABEL = {
    "InP1": "A-I", "InP2": "A-II", "InP3": "A-III", "InP4": "B-I", "InP5": "B-II",
    "InP6": "B-III", "InP7": "C-I", "InP8": "D-I", "InP9": "D-II", "InP10": "D-III",
    "InP11": "D-IV", "InP12": "D-V", "InP13": "E6-I", "InP14": "E6-II", "InP15": "E6-III",
    "InP16": "E7-I", "InP17": "E7-II", "InP18": "E7-III", "InP19": "E8-I", "InP20": "E8-II",
    "InP21": "F4-I", "InP22": "F4-II",
}


def normalize_label(selector: str) -> str:
    """Resolve a type label or InP tag to the canonical type label."""
    key = selector.strip().replace("_", "-")
    for tag, label in _TAG_TO_LABEL.items():
        if key.lower() == tag.lower():
            return label
    for label in CASE_BUILDERS:
        if key.upper() == label.upper():
            return label
    raise TrisymError(f"unknown case selector {selector!r}")


def make_case(selector: str, **params: int) -> SpaceCase:
    """Construct a single catalog entry by label/tag and parameters.

    `k` is accepted as an alias for A-II's parameter via l = 2k - 1.
    """
    label = normalize_label(selector)
    builder, names = CASE_BUILDERS[label]
    params = {k: v for k, v in params.items() if v is not None}
    if label == "A-II" and "k" in params:
        if "l" in params and params["l"] != 2 * params["k"] - 1:
            raise TrisymError("A-II: inconsistent l and k (need l = 2k - 1)")
        params["l"] = 2 * params.pop("k") - 1
    missing = [n for n in names if n not in params]
    extra = [n for n in params if n not in names]
    if missing:
        raise TrisymError(f"{label}: missing parameter(s) {missing}")
    if extra:
        raise TrisymError(f"{label}: unexpected parameter(s) {extra}")
    return builder(**{n: params[n] for n in names})


def _iter_params(label: str, max_rank: int) -> Iterator[dict[str, int]]:
    if label == "A-I":
        if max_rank >= 1:
            yield {}
    elif label == "A-II":
        for l in range(3, max_rank + 1, 2):
            yield {"l": l}
    elif label == "A-III":
        for l in range(2, max_rank + 1):
            for i in range(1, (l + 1) // 3 + 1):
                for j in range(2 * i, (l + i + 1) // 2 + 1):
                    yield {"l": l, "i": i, "j": j}
    elif label == "B-I":
        for l in range(3, max_rank + 1):
            for i in range(3, l + 1):
                for j in range((i + 1) // 2, i):
                    if j >= 2:
                        yield {"l": l, "i": i, "j": j}
    elif label == "B-II":
        for l in range(2, max_rank + 1):
            for i in range((l + 2) // 2, l + 1):
                yield {"l": l, "i": i}
    elif label == "B-III":
        for l in range(2, max_rank + 1):
            for i in range((2 * l + 3) // 3, l + 1):
                hi = min(2 * i - l, i - 1)
                for j in range((i + 2) // 2, hi + 1):
                    if j >= 2:
                        yield {"l": l, "i": i, "j": j}
    elif label == "C-I":
        for l in range(3, max_rank + 1):
            for i in range(1, l // 3 + 1):
                for j in range(2 * i, (l + i) // 2 + 1):
                    yield {"l": l, "i": i, "j": j}
    elif label == "D-I":
        for l in range(4, max_rank + 1):
            for i in range(1, l // 3 + 1):
                for j in range(2 * i, (l + i) // 2 + 1):
                    yield {"l": l, "i": i, "j": j}
    elif label == "D-II":
        for l in range(4, max_rank + 1):
            for i in range(1, l - 1):
                yield {"l": l, "i": i}
    elif label == "D-III":
        for l in range(4, max_rank + 1):
            for i in range(1, l - 1):
                for j in range(i + 1, (l + i - 1) // 2 + 1):
                    yield {"l": l, "i": i, "j": j}
    elif label in ("D-IV", "D-V"):
        for l in range(4, max_rank + 1):
            yield {"l": l}
    else:  # exceptional: fixed rank
        rank = int(label[1]) if label[0] in ("E", "F") else 0
        if rank <= max_rank:
            yield {}


_LABEL_ORDER = {label: i for i, label in enumerate(CASE_BUILDERS)}


def enumerate_cases(max_rank: int) -> list[SpaceCase]:
    """Every catalog entry with ambient rank <= max_rank, each exactly once."""
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    out: list[SpaceCase] = []
    for label in CASE_BUILDERS:
        for params in _iter_params(label, max_rank):
            out.append(make_case(label, **params))
    out.sort(key=lambda c: (_LABEL_ORDER[c.type_label], c.rank, c.params))
    return out


def find_cases(selector: str, max_rank: int = 12, **params: int) -> list[SpaceCase]:
    """Catalog entries matching a label/tag, filtered by any given parameters."""
    label = normalize_label(selector)
    given = {k: v for k, v in params.items() if v is not None}
    if label == "A-II" and "k" in given:
        given["l"] = 2 * given.pop("k") - 1
    _, names = CASE_BUILDERS[label]
    if all(n in given for n in names):
        return [make_case(label, **given)]
    out = []
    for ps in _iter_params(label, max_rank):
        if all(ps.get(k) == v for k, v in given.items()):
            out.append(make_case(label, **ps))
    return out
