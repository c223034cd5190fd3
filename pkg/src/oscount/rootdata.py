"""ADE root-system data and the coned Catalan-type arrangement generator.

Realizations (recorded on each table entry, any exact one is acceptable
since only the matroid of the (m, root) vectors matters):
  A_l : e_i - e_j inside the sum-zero lattice, projected to the first l
        coordinates;
  D_l : e_i - e_j and e_i + e_j, i < j;
  E_6/7/8 : integer coordinates with respect to the simple roots, generated
        by height from the Cartan matrix (the even-lattice realization does
        not fit in l ambient coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .arrangement import Arrangement, build_arrangement
from .errors import InvalidInputError
from .fields import rational_field

__all__ = [
    "WeylTypeData",
    "CatalanSpec",
    "weyl_data",
    "parse_type_label",
    "catalan_arrangement",
    "affine_catalan",
    "SUPPORTED_LABELS",
]

SUPPORTED_LABELS = ("A", "D", "E")

_EXPONENTS_E = {6: (1, 4, 5, 7, 8, 11), 7: (1, 5, 7, 9, 11, 13, 17), 8: (1, 7, 11, 13, 17, 19, 23, 29)}


@dataclass(frozen=True)
class WeylTypeData:
    """Classical invariants of an ADE Weyl group, verified at construction."""

    label: str
    rank: int
    exponents: tuple[int, ...]
    coxeter_number: int
    positive_roots: tuple[tuple[int, ...], ...]
    weyl_order: int
    realization: str

    @property
    def full_label(self) -> str:
        return f"{self.label}{self.rank}"

    def __post_init__(self):
        ell, h = self.rank, self.coxeter_number
        if self.weyl_order != prod(e + 1 for e in self.exponents):
            raise InvalidInputError(f"{self.full_label}: order != prod(e_i + 1)")
        if len(self.positive_roots) != ell * h // 2:
            raise InvalidInputError(f"{self.full_label}: |R+| != l*h/2")
        if h != self.exponents[-1] + 1:
            raise InvalidInputError(f"{self.full_label}: h != e_l + 1")
        for i in range(ell):
            if self.exponents[i] + self.exponents[ell - 1 - i] != h:
                raise InvalidInputError(f"{self.full_label}: exponents not symmetric")


def parse_type_label(text: str) -> tuple[str, int]:
    """Split a combined label like 'A2' or 'E8' into (letter, rank)."""
    text = text.strip().upper()
    if len(text) < 2 or text[0] not in SUPPORTED_LABELS:
        raise InvalidInputError(f"unsupported type label {text!r}; expected A/D/E + rank")
    try:
        rank = int(text[1:])
    except ValueError:
        raise InvalidInputError(f"bad rank in type label {text!r}") from None
    return text[0], rank


def _cartan_matrix(label: str, rank: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def join(i, j):
        c[i][j] = c[j][i] = -1

    if label == "A":
        for i in range(rank - 1):
            join(i, i + 1)
    elif label == "D":
        for i in range(rank - 3):
            join(i, i + 1)
        join(rank - 3, rank - 2)
        join(rank - 3, rank - 1)
    else:  # E types, Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 on 4
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for a, b in zip(chain, chain[1:]):
            join(a, b)
        join(1, 3)
    return c


def _roots_by_height(label: str, rank: int) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, generated by height.

    In a simply laced system r + a_i is a root iff the pairing (r, a_i)
    equals -1, and every non-simple positive root arises this way.
    """
    cartan = _cartan_matrix(label, rank)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(rank):
                pairing = sum(r[j] * cartan[j][i] for j in range(rank))
                if pairing == -1:
                    new = tuple(r[j] + (1 if j == i else 0) for j in range(rank))
                    if new not in roots:
                        roots.add(new)
                        nxt.append(new)
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def weyl_data(label: str, rank: int) -> WeylTypeData:
    if label == "A":
        if rank < 1:
            raise InvalidInputError("A_l requires l >= 1")
        exponents = tuple(range(1, rank + 1))
        h = rank + 1
        roots = []
        for i in range(rank + 1):
            for j in range(i + 1, rank + 1):
                vec = [0] * rank
                if i < rank:
                    vec[i] = 1
                if j < rank:
                    vec[j] = -1
                roots.append(tuple(vec))
        realization = "e_i - e_j in the sum-zero lattice, projected to l coordinates"
    elif label == "D":
        if rank < 4:
            raise InvalidInputError("D_l requires l >= 4")
        exponents = tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
        h = 2 * rank - 2
        roots = []
        for i in range(rank):
            for j in range(i + 1, rank):
                for sign in (-1, 1):
                    vec = [0] * rank
                    vec[i] = 1
                    vec[j] = sign
                    roots.append(tuple(vec))
        realization = "e_i - e_j and e_i + e_j, i < j"
    elif label == "E":
        if rank not in (6, 7, 8):
            raise InvalidInputError("E types exist for rank 6, 7, 8 only")
        exponents = _EXPONENTS_E[rank]
        h = exponents[-1] + 1
        roots = _roots_by_height("E", rank)
        realization = "integer coordinates with respect to the simple roots"
    else:
        raise InvalidInputError(f"unsupported label {label!r}; expected A, D or E")
    return WeylTypeData(
        label=label,
        rank=rank,
        exponents=exponents,
        coxeter_number=h,
        positive_roots=tuple(roots),
        weyl_order=prod(e + 1 for e in exponents),
        realization=realization,
    )


@dataclass(frozen=True)
class CatalanSpec:
    type: WeylTypeData
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError("wreath parameter n must be >= 1")


def catalan_arrangement(spec: CatalanSpec) -> Arrangement:
    """Central arrangement over Q in l+1 coordinates (a, x_1..x_l):
    root . x + m a = 0 for positive roots and |m| <= n-1, plus a = 0;
    the hyperplane count is |R+| (2n - 1) + 1."""
    f = rational_field()
    ell = spec.type.rank
    raw = []
    for root in spec.type.positive_roots:
        for m in range(1 - spec.n, spec.n):
            normal = tuple(f.from_rational(c) for c in (m,) + root)
            raw.append((normal, f.zero()))
    alpha = tuple(f.from_rational(1 if i == 0 else 0) for i in range(ell + 1))
    raw.append((alpha, f.zero()))
    return build_arrangement(f, ell + 1, raw)


def affine_catalan(spec: CatalanSpec) -> Arrangement:
    """The affine arrangement root . x + m = 0 in l variables whose cone is
    catalan_arrangement(spec)."""
    f = rational_field()
    ell = spec.type.rank
    raw = []
    for root in spec.type.positive_roots:
        for m in range(1 - spec.n, spec.n):
            normal = tuple(f.from_rational(c) for c in root)
            raw.append((normal, f.from_rational(-m)))
    return build_arrangement(f, ell, raw)
