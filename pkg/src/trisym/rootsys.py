"""Simple root systems A..G with the node numbering used by the case catalog.

Roots are integer coefficient vectors over the simple-root basis; the Cartan
matrix supplies all pairings, so no floating-point coordinates exist anywhere.

Node numbering (nonstandard for the E series; fixed by the catalog's marking
data, do not renumber):

  A_l   a1 - a2 - ... - al                       (lowest root joins a1 and al)
  B_l   a1 - a2 - ... => al        al short      (lowest root joins a2)
  C_l   a1 - a2 - ... <= al        al long       (lowest root joins a1)
  D_l   a1 - ... - a_{l-2} < (a_{l-1}, al)       (lowest root joins a2)
  E6    chain a1..a5, a6 on a3                   (lowest root joins a6)
  E7    chain a1..a6, a7 on a4                   (lowest root joins a6)
  E8    chain a1..a7, a8 on a5                   (lowest root joins a1)
  F4    a1 - a2 => a3 - a4         a3, a4 short  (lowest root joins a1)
  G2    a1 <= a2                   a1 short

In the C family the node index i counts from the end carrying the lowest
root, so marking a_i fixes sp(i) + sp(l-i); this mapping is pinned by the
symplectic-family dimension tests (Sp(3)/Sp(1)^3 with blocks (4, 4, 4),
Sp(4)/Sp(1)Sp(1)Sp(2) with blocks (8, 4, 8)).

Low-rank coincidences are canonicalized before construction:
B1 = C1 = A1, C2 = B2, D3 = A3; D_2 and rank-0 types are rejected as
non-simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidRootSystem

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_DUAL_COXETER = {
    "E": {6: 12, 7: 18, 8: 30},
    "F": {4: 9},
    "G": {2: 4},
}

_EXPECTED_DIMS = {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}


def canonicalize_type(family: str, rank: int) -> tuple[str, int]:
    """Map a (family, rank) pair to its canonical simple type, or raise."""
    if family not in FAMILIES:
        raise InvalidRootSystem(f"unknown family {family!r}; expected one of {FAMILIES}")
    if rank < 1:
        raise InvalidRootSystem(f"{family}{rank}: rank must be >= 1")
    if family == "A":
        return "A", rank
    if family == "B":
        return ("A", 1) if rank == 1 else ("B", rank)
    if family == "C":
        if rank == 1:
            return "A", 1
        if rank == 2:
            return "B", 2
        return "C", rank
    if family == "D":
        if rank == 1:
            raise InvalidRootSystem("D1 is a torus, not a simple type")
        if rank == 2:
            raise InvalidRootSystem("D2 = A1 x A1 is not simple")
        if rank == 3:
            return "A", 3
        return "D", rank
    if family == "E":
        if rank not in (6, 7, 8):
            raise InvalidRootSystem(f"E{rank}: rank must be 6, 7 or 8")
        return "E", rank
    if family == "F":
        if rank != 4:
            raise InvalidRootSystem(f"F{rank}: rank must be 4")
        return "F", 4
    if rank != 2:
        raise InvalidRootSystem(f"G{rank}: rank must be 2")
    return "G", 2


def _edges(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Diagram edges (i, j, cij, cji) with c[i][j] = 2(ai,aj)/(ai,ai), 0-based nodes."""
    chain = [(k, k + 1, -1, -1) for k in range(rank - 1)]
    if family in ("A",):
        return chain
    if family == "B":
        chain[-1] = (rank - 2, rank - 1, -1, -2)
        return chain
    if family == "C":
        chain[-1] = (rank - 2, rank - 1, -2, -1)
        return chain
    if family == "D":
        chain = [(k, k + 1, -1, -1) for k in range(rank - 2)]
        chain.append((rank - 3, rank - 1, -1, -1))
        return chain
    if family == "E":
        branch = {6: 2, 7: 3, 8: 4}[rank]
        chain = [(k, k + 1, -1, -1) for k in range(rank - 2)]
        chain.append((branch, rank - 1, -1, -1))
        return chain
    if family == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    return [(0, 1, -3, -1)]  # G2, a1 short


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in _edges(family, rank):
        m[i][j] = cij
        m[j][i] = cji
    return tuple(tuple(row) for row in m)


def _generate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    rank = len(cartan)
    simples = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    known = set(simples)
    frontier = list(simples)
    while frontier:
        new: list[tuple[int, ...]] = []
        for beta in frontier:
            for i in range(rank):
                pairing = sum(cartan[i][j] * beta[j] for j in range(rank))
                # root string: beta + ai is a root iff p - <beta, ai^vee> >= 1,
                # where p is the number of steps the string extends below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in known:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        new.append(t)
        frontier = new
    return sorted(known, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootSystem:
    """A simple root system with positive roots in the simple-root basis."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    maximal_root: tuple[int, ...]
    dual_coxeter: int

    def __repr__(self) -> str:
        return f"RootSystem({self.family}{self.rank}, {len(self.positive_roots)} positive roots)"


def dual_coxeter_number(family: str, rank: int) -> int:
    """Dual Coxeter number of the canonical simple type."""
    family, rank = canonicalize_type(family, rank)
    if family == "A":
        return rank + 1
    if family == "B":
        return 2 * rank - 1
    if family == "C":
        return rank + 1
    if family == "D":
        return 2 * rank - 2
    return _DUAL_COXETER[family][rank]


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system, canonicalizing low-rank coincidences first."""
    family, rank = canonicalize_type(family, rank)
    cartan = _cartan_matrix(family, rank)
    roots = _generate_positive_roots(cartan)
    maximal = max(roots, key=sum)
    if not all(all(m >= r for m, r in zip(maximal, root)) for root in roots):
        raise InvalidRootSystem(f"{family}{rank}: generated maximal root is not dominant")
    rs = RootSystem(
        family=family,
        rank=rank,
        cartan=cartan,
        positive_roots=tuple(roots),
        maximal_root=maximal,
        dual_coxeter=dual_coxeter_number(family, rank),
    )
    label = f"{family}{rank}"
    if label in _EXPECTED_DIMS and dimension(rs) != _EXPECTED_DIMS[label]:
        raise InvalidRootSystem(f"{label}: dimension {dimension(rs)} != {_EXPECTED_DIMS[label]}")
    return rs


def dimension(rs: RootSystem) -> int:
    """dim g = rank + 2 * (number of positive roots)."""
    return rs.rank + 2 * len(rs.positive_roots)
