"""Exact coefficient data for the Einstein system of each case.

For each space the metric equations depend only on the summand dimensions
(d1, d2, d3) and the ratios gamma_i relating the Killing form of the
effective subalgebra of k_i = h + p_i to the restriction of the ambient
Killing form. The Casimir constants are c_i = gamma_i / 2, and the single
structure constant A obeys

    2A = d_i (1 - 2 c_i)        (independent of i),

so one anchored gamma determines the other two. Anchors are either a
dual-Coxeter-number ratio for a simple subalgebra, the closed-form ratios
of the classical matrix models, or zero for abelian k_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cases import Factor, SpaceCase, case_dims
from .errors import InconsistentData, TrisymError
from .rootsys import dual_coxeter_number

Triple = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class IsotropyData:
    """Dimensions and exact rational coefficients of one case."""

    dims: tuple[int, int, int]
    gammas: Triple
    casimirs: Triple
    A: Fraction
    a: Triple

    def __post_init__(self):
        d, g, c, a = self.dims, self.gammas, self.casimirs, self.a
        for i in range(3):
            if not (0 <= g[i] < 1):
                raise InconsistentData(f"gamma_{i + 1} = {g[i]} outside [0, 1)")
            if c[i] * 2 != g[i]:
                raise InconsistentData("casimir constants must be gamma/2")
            if a[i] != (1 - g[i]) / 2 or a[i] * d[i] != self.A:
                raise InconsistentData("a_i must equal (1 - gamma_i)/2 = A/d_i")
            if not (0 < a[i] <= Fraction(1, 2)):
                raise InconsistentData(f"a_{i + 1} = {a[i]} outside (0, 1/2]")
            if Fraction(d[i]) * (1 - 2 * c[i]) != 2 * self.A:
                raise InconsistentData("d_i (1 - 2 c_i) must equal 2A for all i")

    @property
    def boundary(self) -> bool:
        """True when some a_i = 1/2 (equivalently gamma_i = 0)."""
        return any(v == Fraction(1, 2) for v in self.a)


def _build(dims: tuple[int, int, int], gammas: Triple) -> IsotropyData:
    A_vals = {Fraction(d) * (1 - g) / 2 for d, g in zip(dims, gammas)}
    if len(A_vals) != 1:
        raise InconsistentData(f"gammas {gammas} inconsistent with dims {dims}")
    A = A_vals.pop()
    return IsotropyData(
        dims=dims,
        gammas=gammas,
        casimirs=tuple(g / 2 for g in gammas),
        A=A,
        a=tuple((1 - g) / 2 for g in gammas),
    )


def gamma_from_killing_ratio(sub: Factor, ambient: Factor, embedding_index: int = 1) -> Fraction:
    """Killing-form ratio h^vee(sub) / (index * h^vee(ambient)) for simple types."""
    for fam, rank in (sub, ambient):
        if fam == "T" or rank == 0:
            raise TrisymError(f"{fam}{rank} is not simple; derive this gamma from the others")
    if embedding_index < 1:
        raise ValueError("embedding index must be a positive integer")
    return Fraction(dual_coxeter_number(*sub), embedding_index * dual_coxeter_number(*ambient))


def derive_gammas(
    dims: tuple[int, int, int],
    anchor_index: int,
    anchor_gamma: Fraction,
    *,
    allow_boundary: bool = False,
) -> IsotropyData:
    """Full coefficient set from one anchored gamma via 2A = d_i(1 - 2c_i).

    Rejects anchors or derived values outside (0, 1); boundary values
    (gamma = 0, i.e. abelian effective subalgebras) only with consent.
    """
    if anchor_index not in (1, 2, 3):
        raise ValueError("anchor_index must be 1, 2 or 3")
    anchor_gamma = Fraction(anchor_gamma)
    lo_ok = anchor_gamma >= 0 if allow_boundary else anchor_gamma > 0
    if not (lo_ok and anchor_gamma < 1):
        raise InconsistentData(f"anchor gamma {anchor_gamma} outside the admissible range")
    if min(dims) <= 0:
        raise ValueError("dims must be positive")
    A = Fraction(dims[anchor_index - 1]) * (1 - anchor_gamma) / 2
    gammas = []
    for i, d in enumerate(dims):
        if i == anchor_index - 1:
            gammas.append(anchor_gamma)
            continue
        g = 1 - 2 * A / d
        lo_ok = g >= 0 if allow_boundary else g > 0
        if not (lo_ok and g < 1):
            raise InconsistentData(
                f"derived gamma_{i + 1} = {g} outside range (wrong anchor or dims?)"
            )
        gammas.append(g)
    return _build(tuple(dims), tuple(gammas))


_SIZES_GAMMA_SHIFT = {"su": 0, "sp": 1, "so": -2}
_SIZES_KAPPA = {"su": 2, "sp": 4, "so": 1}


def sizes_gammas(kind: str, sizes: tuple[int, int, int]) -> Triple:
    """Killing ratios of the classical models G(s1+s2+s3)/G(s1)xG(s2)xG(s3).

    gamma_i = g(s_j + s_k) / g(s1+s2+s3) with g(s) = s, s+1, s-2 for the
    unitary, symplectic and orthogonal families; the orthogonal form is the
    standard trace-form ratio and stays valid for s_j + s_k as small as 2
    (where it degenerates to zero for a torus).
    """
    shift = _SIZES_GAMMA_SHIFT[kind]
    n = sum(sizes) + shift
    out = []
    for i in range(3):
        j, k = {0: (1, 2), 1: (0, 2), 2: (0, 1)}[i]
        out.append(Fraction(sizes[j] + sizes[k] + shift, n))
    return tuple(out)


def coefficients_for_case(case: SpaceCase) -> IsotropyData:
    """IsotropyData for a catalog entry, via its recorded anchor strategy."""
    dim_h, d1, d2, d3 = case_dims(case)
    dims = (d1, d2, d3)
    if case.gamma_mode == "abelian":
        return _build(dims, (Fraction(0), Fraction(0), Fraction(0)))
    if case.gamma_mode == "anchor":
        data = derive_gammas(dims, case.anchor_block, case.anchor_gamma)
    elif case.gamma_mode == "sizes":
        kind, sizes = case.sizes
        gammas = sizes_gammas(kind, sizes)
        kappa = _SIZES_KAPPA[kind]
        expected = (kappa * sizes[1] * sizes[2], kappa * sizes[0] * sizes[2], kappa * sizes[0] * sizes[1])
        if dims != expected:
            raise InconsistentData(f"{case.describe()}: sizes dims {expected} != {dims}")
        data = _build(dims, gammas)
    else:
        raise TrisymError(f"unknown gamma mode {case.gamma_mode!r}")
    return data
