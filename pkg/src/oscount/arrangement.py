"""Hyperplane arrangements over an exact field.

Canonical hyperplanes, the intersection lattice of flats with its Moebius
function, characteristic and Poincare polynomials, Zaslavsky region counts,
coning, and deletion/restriction.

A flat is stored as the canonical rref of its defining affine system
[A | b] (offset in the last column), so the serialized rref is a true
dedup key.  `contains` sets are maximal, which makes the lattice the poset
of closed sets of the underlying matroid and keeps the Moebius recursion
well founded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ComputationCapError, InvalidInputError, MathematicalInconsistencyError
from .fields import FieldDescriptor, Scalar
from .linalg import Row, rank_of_rows, reduce_row
from .polynomial import IntegerPolynomial

__all__ = [
    "Hyperplane",
    "Arrangement",
    "Flat",
    "IntersectionLattice",
    "build_arrangement",
    "intersection_lattice",
    "characteristic_polynomial",
    "poincare_polynomial",
    "region_count",
    "cone",
    "deletion_restriction",
    "essential_rank",
    "DEFAULT_FLAT_CAP",
]

DEFAULT_FLAT_CAP = 2_000_000


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane {x : normal . x = offset}, in canonical scaling."""

    normal: tuple[Scalar, ...]
    offset: Scalar

    @staticmethod
    def canonical(normal: Sequence[Scalar], offset: Scalar) -> "Hyperplane":
        lead = next((x for x in normal if not x.is_zero()), None)
        if lead is None:
            raise InvalidInputError("hyperplane with zero normal")
        if lead.is_one():
            return Hyperplane(tuple(normal), offset)
        inv = lead.inverse()
        return Hyperplane(tuple(inv * x for x in normal), inv * offset)

    def row(self) -> Row:
        return self.normal + (self.offset,)

    def is_central(self) -> bool:
        return self.offset.is_zero()

    def is_real(self) -> bool:
        return all(x.is_real() for x in self.row())

    def key(self) -> str:
        return " ".join(str(x) for x in self.row())

    def __str__(self) -> str:
        return self.key()


@dataclass(frozen=True)
class Arrangement:
    field: FieldDescriptor
    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...]
    central: bool

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def key(self) -> str:
        head = f"N={self.field.conductor} l={self.ambient_dim}"
        return head + "|" + "|".join(h.key() for h in self.hyperplanes)

    def hyperplane_set(self) -> frozenset:
        return frozenset(h.row() for h in self.hyperplanes)

    def same_hyperplanes(self, other: "Arrangement") -> bool:
        return (
            self.field.conductor == other.field.conductor
            and self.ambient_dim == other.ambient_dim
            and self.hyperplane_set() == other.hyperplane_set()
        )


def build_arrangement(
    field: FieldDescriptor,
    ambient_dim: int,
    raw_hyperplanes: Iterable,
) -> Arrangement:
    """Canonicalize and deduplicate; order of first appearance is preserved
    (the order matters for broken circuits downstream)."""
    if ambient_dim < 0:
        raise InvalidInputError("ambient dimension must be >= 0")
    seen: dict[Row, None] = {}
    planes: list[Hyperplane] = []
    for item in raw_hyperplanes:
        if isinstance(item, Hyperplane):
            normal, offset = item.normal, item.offset
        else:
            normal, offset = item
            normal = tuple(normal)
            if offset is None:
                offset = field.zero()
        if len(normal) != ambient_dim:
            raise InvalidInputError(
                f"hyperplane normal of length {len(normal)}; ambient dimension is {ambient_dim}"
            )
        for x in tuple(normal) + (offset,):
            if x.field.conductor != field.conductor:
                raise InvalidInputError(
                    "hyperplane coefficients from a different field; promote explicitly"
                )
        h = Hyperplane.canonical(normal, offset)
        if h.row() not in seen:
            seen[h.row()] = None
            planes.append(h)
    central = all(h.is_central() for h in planes)
    return Arrangement(field, ambient_dim, tuple(planes), central)


@dataclass(frozen=True)
class Flat:
    """A nonempty intersection of hyperplanes: canonical rref equations,
    codimension, and the maximal set of hyperplane indices containing it."""

    rows: tuple[Row, ...]
    pivots: tuple[int, ...]
    codim: int
    contains: frozenset[int]
    key: str


def _flat_key(rows: tuple[Row, ...]) -> str:
    return ";".join(" ".join(str(x) for x in row) for row in rows)


def _insert_row(rows: tuple[Row, ...], pivots: tuple[int, ...], reduced: Row):
    """Add one already-reduced, nonzero row and restore canonical rref."""
    lead = next(i for i, x in enumerate(reduced) if not x.is_zero())
    head = reduced[lead]
    if not head.is_one():
        inv = head.inverse()
        reduced = tuple(inv * x for x in reduced)
    new_rows = []
    for row in rows:
        c = row[lead]
        if not c.is_zero():
            row = tuple(a - c * b for a, b in zip(row, reduced))
        new_rows.append(row)
    pos = 0
    while pos < len(pivots) and pivots[pos] < lead:
        pos += 1
    new_rows.insert(pos, reduced)
    new_pivots = pivots[:pos] + (lead,) + pivots[pos:]
    return tuple(new_rows), new_pivots


@dataclass
class IntersectionLattice:
    """Flats grouped by codimension (level 0 is the ambient space) with
    Moebius values mu(ambient, X)."""

    arrangement: Arrangement
    levels: list[list[Flat]]
    moebius: list[list[int]]

    def all_flats(self):
        for level, flats in enumerate(self.levels):
            for flat, mu in zip(flats, self.moebius[level]):
                yield flat, mu

    def flats_per_level(self) -> list[int]:
        return [len(level) for level in self.levels]

    def num_flats(self) -> int:
        return sum(len(level) for level in self.levels)

    def rank(self) -> int:
        return len(self.levels) - 1

    def whitney_numbers(self) -> list[int]:
        """Signed per-codimension Moebius sums (the chi coefficients)."""
        return [sum(mus) for mus in self.moebius]


def intersection_lattice(
    arrangement: Arrangement, flat_cap: int = DEFAULT_FLAT_CAP
) -> IntersectionLattice:
    """All nonempty intersections, computed levelwise with canonical dedup."""
    ell = arrangement.ambient_dim
    offset_col = ell
    rows_of = [h.row() for h in arrangement.hyperplanes]
    ambient = Flat(rows=(), pivots=(), codim=0, contains=frozenset(), key="")
    levels: list[list[Flat]] = [[ambient]]
    total = 1
    while levels[-1]:
        found: dict[str, Flat] = {}
        seen_unions: set[frozenset[int]] = set()
        for flat in levels[-1]:
            for h in range(len(rows_of)):
                if h in flat.contains:
                    continue
                union = flat.contains | {h}
                if union in seen_unions:
                    continue
                seen_unions.add(union)
                reduced = reduce_row(rows_of[h], flat.rows, flat.pivots)
                lead = next((i for i, x in enumerate(reduced) if not x.is_zero()), None)
                if lead is None or lead == offset_col:
                    # lead None cannot happen (contains is maximal); offset pivot
                    # means an empty affine intersection.
                    continue
                new_rows, new_pivots = _insert_row(flat.rows, flat.pivots, reduced)
                key = _flat_key(new_rows)
                if key in found:
                    continue
                contains = set(flat.contains)
                contains.add(h)
                for other in range(len(rows_of)):
                    if other in contains:
                        continue
                    rr = reduce_row(rows_of[other], new_rows, new_pivots)
                    if all(x.is_zero() for x in rr):
                        contains.add(other)
                found[key] = Flat(
                    rows=new_rows,
                    pivots=new_pivots,
                    codim=len(new_pivots),
                    contains=frozenset(contains),
                    key=key,
                )
                total += 1
                if total > flat_cap:
                    raise ComputationCapError(
                        f"flat cap {flat_cap} exceeded at codimension {len(levels)}",
                        partial={"flats_per_level": [len(lv) for lv in levels]},
                    )
        levels.append([found[k] for k in sorted(found)])
    levels.pop()

    # mu(ambient) = 1; mu(X) = -sum of mu over strictly larger flats, which are
    # exactly those whose `contains` set is strictly inside contains(X).
    moebius: list[list[int]] = [[1]]
    ordered: list[tuple[frozenset[int], int]] = [(frozenset(), 1)]
    for level in levels[1:]:
        mus = []
        for flat in level:
            acc = 0
            for contains_y, mu_y in ordered:
                if contains_y < flat.contains:
                    acc += mu_y
            mus.append(-acc)
        moebius.append(mus)
        ordered.extend((f.contains, m) for f, m in zip(level, mus))
    return IntersectionLattice(arrangement, levels, moebius)


def characteristic_polynomial(lattice: IntersectionLattice) -> IntegerPolynomial:
    """chi(A, t) = sum_X mu(X) t^{dim X}."""
    ell = lattice.arrangement.ambient_dim
    coeffs = [0] * (ell + 1)
    for flat, mu in lattice.all_flats():
        coeffs[ell - flat.codim] += mu
    return IntegerPolynomial(coeffs)


def poincare_polynomial(lattice: IntersectionLattice) -> IntegerPolynomial:
    """pi(A, t) = sum_X mu(X) (-t)^{codim X}; coefficients are Whitney numbers
    and must be nonnegative for a realizable arrangement."""
    coeffs = [0] * (lattice.rank() + 1)
    for flat, mu in lattice.all_flats():
        coeffs[flat.codim] += mu * (-1) ** flat.codim
    if any(c < 0 for c in coeffs):
        raise MathematicalInconsistencyError(
            f"negative Poincare coefficient in {coeffs}; lattice is not geometric"
        )
    return IntegerPolynomial(coeffs)


def essential_rank(arrangement: Arrangement) -> int:
    """Rank of the essentialized arrangement (rank of the stacked normals)."""
    return rank_of_rows([h.normal for h in arrangement.hyperplanes])


def region_count(
    arrangement: Arrangement,
    lattice: Optional[IntersectionLattice] = None,
    flat_cap: int = DEFAULT_FLAT_CAP,
) -> tuple[int, int]:
    """Zaslavsky counts for a real arrangement:
    regions = (-1)^l chi(-1), bounded = (-1)^rank chi(1)."""
    for i, h in enumerate(arrangement.hyperplanes):
        if not h.is_real():
            raise InvalidInputError(
                f"region count requires a real arrangement; hyperplane {i} ({h}) "
                "has coefficients not fixed by conjugation"
            )
    if lattice is None:
        lattice = intersection_lattice(arrangement, flat_cap)
    chi = characteristic_polynomial(lattice)
    ell = arrangement.ambient_dim
    regions = (-1) ** ell * chi(-1)
    bounded = (-1) ** essential_rank(arrangement) * chi(1)
    if regions < 0 or bounded < 0:
        raise MathematicalInconsistencyError(
            f"negative Zaslavsky count (regions={regions}, bounded={bounded})"
        )
    return regions, bounded


def cone(arrangement: Arrangement) -> Arrangement:
    """Central arrangement in l+1 coordinates: {f(x) = a} becomes
    {f(x) - a x0 = 0} with the new coordinate x0 first, plus {x0 = 0}."""
    f = arrangement.field
    zero, one = f.zero(), f.one()
    raw = []
    for h in arrangement.hyperplanes:
        raw.append(((-h.offset,) + h.normal, zero))
    raw.append(((one,) + (zero,) * arrangement.ambient_dim, zero))
    return build_arrangement(f, arrangement.ambient_dim + 1, raw)


def deletion_restriction(
    arrangement: Arrangement, h: int
) -> tuple[Arrangement, Arrangement]:
    """(A minus h, the arrangement induced on h).

    The restriction is parametrized by the non-pivot coordinates of h's
    rref, which is deterministic and exact.
    """
    n = len(arrangement.hyperplanes)
    if not 0 <= h < n:
        raise InvalidInputError(f"hyperplane index {h} out of range 0..{n - 1}")
    f = arrangement.field
    ell = arrangement.ambient_dim
    deleted = build_arrangement(
        f, ell, [p for i, p in enumerate(arrangement.hyperplanes) if i != h]
    )
    target = arrangement.hyperplanes[h]
    # Solve the pivot coordinate: x_p = offset - sum_{j != p} n_j x_j.
    p = next(i for i, x in enumerate(target.normal) if not x.is_zero())
    free = [j for j in range(ell) if j != p]
    raw = []
    for i, other in enumerate(arrangement.hyperplanes):
        if i == h:
            continue
        m_p = other.normal[p]
        coeffs = tuple(other.normal[j] - m_p * target.normal[j] for j in free)
        off = other.offset - m_p * target.offset
        if all(x.is_zero() for x in coeffs):
            continue  # parallel to h: empty trace
        raw.append((coeffs, off))
    restricted = build_arrangement(f, ell - 1, raw)
    return deleted, restricted
