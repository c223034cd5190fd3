"""Exact scalars over Q and cyclotomic fields Q(zeta_N).

A scalar is a coordinate vector over Q in the power basis
1, z, ..., z^{phi(N)-1} of Q[x]/Phi_N(x), stored in lowest terms, so
equality is literal coordinate equality and all arithmetic is exact.
The rational field is the case N = 1.  Mixed-field arithmetic is an
error; promotion Q -> Q(zeta_N) is the explicit operation `promote`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInputError

__all__ = [
    "FieldDescriptor",
    "Scalar",
    "rational_field",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "cyclotomic_reduce",
    "conjugate",
    "promote",
    "euler_phi",
    "parse_scalar",
]


def euler_phi(n: int) -> int:
    if n < 1:
        raise InvalidInputError(f"totient undefined for {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_mul_int(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _poly_divmod_int(num: tuple[int, ...], den: tuple[int, ...]):
    # den is monic; exact division over Z.
    num_l = list(num)
    d = len(den) - 1
    quot = [0] * max(len(num_l) - d, 0)
    for k in range(len(num_l) - 1, d - 1, -1):
        c = num_l[k]
        if c:
            quot[k - d] = c
            for j in range(d + 1):
                num_l[k - d + j] -= c * den[j]
    while num_l and num_l[-1] == 0:
        num_l.pop()
    return tuple(quot), tuple(num_l)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending.  Phi_1 = x - 1.

    Computed by the recursion x^n - 1 = prod_{d | n} Phi_d.
    """
    if n < 1:
        raise InvalidInputError(f"cyclotomic polynomial undefined for {n}")
    if n == 1:
        return (-1, 1)
    poly = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert rem == (), "cyclotomic recursion left a remainder"
    return poly


@functools.lru_cache(maxsize=None)
def _power_table(conductor: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta^k in the power basis mod Phi_N, for k up to
    max(N, 2*phi(N) - 1) exclusive (products need exponents to 2d - 2)."""
    phi = cyclotomic_polynomial(conductor)
    d = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    for k in range(d):
        rows.append(tuple(1 if i == k else 0 for i in range(d)))
    # zeta^d = -(phi_0 + phi_1 zeta + ... + phi_{d-1} zeta^{d-1})
    top = tuple(-phi[i] for i in range(d))
    for _ in range(d, max(conductor, 2 * d - 1)):
        prev = rows[-1]
        shifted = [0] + list(prev[: d - 1])
        carry = prev[d - 1]
        if carry:
            shifted = [s + carry * t for s, t in zip(shifted, top)]
        rows.append(tuple(shifted))
    return tuple(rows)


@dataclass(frozen=True)
class FieldDescriptor:
    """Coefficient field: Q (conductor 1) or Q(zeta_N)."""

    kind: str
    conductor: int
    degree: int

    def __post_init__(self):
        if self.kind not in ("rational", "cyclotomic"):
            raise InvalidInputError(f"unknown field kind {self.kind!r}")
        if self.conductor < 1:
            raise InvalidInputError("conductor must be >= 1")
        if self.degree != euler_phi(self.conductor):
            raise InvalidInputError("degree must equal the totient of the conductor")
        if self.kind == "rational" and self.conductor != 1:
            raise InvalidInputError("rational field has conductor 1")

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    def zero(self) -> "Scalar":
        return Scalar(self, (Fraction(0),) * self.degree)

    def one(self) -> "Scalar":
        return Scalar(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    def from_rational(self, value) -> "Scalar":
        c = Fraction(value)
        return Scalar(self, (c,) + (Fraction(0),) * (self.degree - 1))

    def scalar(self, coords: Iterable) -> "Scalar":
        """Canonical scalar from power-basis coordinates (length <= N)."""
        return cyclotomic_reduce(list(coords), self)

    def zeta(self) -> "Scalar":
        """A primitive N-th root of unity (the basis element z)."""
        if self.conductor == 1:
            return self.one()
        if self.conductor == 2:
            return self.from_rational(-1)
        return Scalar(self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.degree - 2))


def rational_field() -> FieldDescriptor:
    return FieldDescriptor("rational", 1, 1)


def cyclotomic_field(conductor: int) -> FieldDescriptor:
    if conductor == 1:
        return rational_field()
    return FieldDescriptor("cyclotomic", conductor, euler_phi(conductor))


class Scalar:
    """Exact element of a FieldDescriptor, immutable and hashable."""

    __slots__ = ("field", "coords")

    def __init__(self, field: FieldDescriptor, coords: tuple[Fraction, ...]):
        if len(coords) != field.degree:
            raise InvalidInputError(
                f"coordinate vector of length {len(coords)} for a degree-{field.degree} field"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    def _same_field(self, other: "Scalar"):
        if self.field.conductor != other.field.conductor:
            raise InvalidInputError(
                f"mixed-field arithmetic: conductor {self.field.conductor} vs "
                f"{other.field.conductor}; promote explicitly"
            )

    def __add__(self, other: "Scalar") -> "Scalar":
        self._same_field(other)
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._same_field(other)
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._same_field(other)
        a, b = self.coords, other.coords
        d = self.field.degree
        if d == 1:
            return Scalar(self.field, (a[0] * b[0],))
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        table = _power_table(self.field.conductor)
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = table[k]
                for i, ti in enumerate(row):
                    if ti:
                        out[i] += ck * ti
        return Scalar(self.field, tuple(out))

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        d = self.field.degree
        if d == 1:
            return Scalar(self.field, (Fraction(1) / self.coords[0],))
        # Extended Euclid in Q[x] against Phi_N (irreducible over Q).
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.field.conductor)]
        a = list(self.coords)
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul_frac(q, s1))
        # r0 is a nonzero constant multiple of gcd = 1.
        const = next(c for c in reversed(r0) if c)
        inv_coords = [c / const for c in s0]
        return cyclotomic_reduce(inv_coords, self.field)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._same_field(other)
        return self * other.inverse()

    def conjugate(self) -> "Scalar":
        """Complex conjugation, zeta -> zeta^{N-1}."""
        f = self.field
        if f.is_rational:
            return self
        table = _power_table(f.conductor)
        d = f.degree
        out = [Fraction(0)] * d
        for k, ck in enumerate(self.coords):
            if ck:
                row = table[(k * (f.conductor - 1)) % f.conductor]
                for i, ti in enumerate(row):
                    if ti:
                        out[i] += ck * ti
        return Scalar(f, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_one(self) -> bool:
        return self.coords[0] == 1 and not any(self.coords[1:])

    def is_real(self) -> bool:
        return self == self.conjugate()

    def rational_value(self) -> Fraction:
        if any(self.coords[1:]):
            raise InvalidInputError(f"scalar {self} is not rational")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scalar)
            and self.field.conductor == other.field.conductor
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field.conductor, self.coords))

    def __str__(self) -> str:
        # The scalar token syntax used by all file formats.
        if self.field.is_rational:
            return str(self.coords[0])
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Scalar[N={self.field.conductor}]({self})"


def _poly_divmod_frac(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    while num and not num[-1]:
        num.pop()
    den = list(den)
    while den and not den[-1]:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        while num and not num[-1]:
            num.pop()
    return q, num


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def cyclotomic_reduce(poly_coords: Sequence, field: FieldDescriptor) -> Scalar:
    """Canonical representative of a power-basis vector modulo Phi_N.

    Input length may be at most N; exponents >= phi(N) are folded through
    the reduction table, so two scalars are equal iff coords coincide.
    """
    coords = [Fraction(c) for c in poly_coords]
    n, d = field.conductor, field.degree
    if len(coords) > n:
        raise InvalidInputError(
            f"power-basis vector of length {len(coords)} exceeds conductor {n}"
        )
    out = coords[:d] + [Fraction(0)] * max(d - len(coords), 0)
    if len(coords) > d:
        table = _power_table(n)
        for k in range(d, len(coords)):
            ck = coords[k]
            if ck:
                row = table[k]
                for i, ti in enumerate(row):
                    if ti:
                        out[i] += ck * ti
    return Scalar(field, tuple(out))


def conjugate(x: Scalar) -> Scalar:
    return x.conjugate()


def promote(x: Scalar, field: FieldDescriptor) -> Scalar:
    """Explicit promotion Q -> Q(zeta_N); anything else is refused."""
    if x.field.conductor == field.conductor:
        return x
    if not x.field.is_rational:
        raise InvalidInputError(
            f"no promotion from conductor {x.field.conductor} to {field.conductor}"
        )
    return field.from_rational(x.coords[0])


def parse_scalar(token: str, field: FieldDescriptor) -> Scalar:
    """Parse a scalar token: `p/q`, `p`, or `(a0,a1,...)` per the field."""
    token = token.strip()
    if token.startswith("("):
        if field.is_rational:
            raise InvalidInputError(
                f"cyclotomic token {token!r} in a rational-field context"
            )
        if not token.endswith(")"):
            raise InvalidInputError(f"unterminated cyclotomic token {token!r}")
        parts = token[1:-1].split(",")
        try:
            coords = [Fraction(p.strip()) for p in parts]
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"bad cyclotomic token {token!r}: {exc}") from None
        if len(coords) > field.degree:
            raise InvalidInputError(
                f"token {token!r} has {len(coords)} coordinates; field degree is {field.degree}"
            )
        coords += [Fraction(0)] * (field.degree - len(coords))
        return Scalar(field, tuple(coords))
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"bad rational token {token!r}: {exc}") from None
    return field.from_rational(value)
