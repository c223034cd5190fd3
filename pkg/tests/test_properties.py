"""Randomized invariant suite over small rational arrangements.

A fixed, recorded seed drives every case, so failures are reproducible.
Covers: Whitney-oracle equality with the lattice route, the
deletion-restriction identity, the cone identity, Moebius row sums, the
Moebius sign pattern, and Zaslavsky's region count.
"""

import random

from conftest import rational_arrangement

from oscount.arrangement import (
    characteristic_polynomial,
    cone,
    deletion_restriction,
    intersection_lattice,
    poincare_polynomial,
    region_count,
)
from oscount.matroid import whitney_characteristic
from oscount.polynomial import IntegerPolynomial

SEED = 20250809
NUM_CASES = 120


def random_arrangements():
    rng = random.Random(SEED)
    for case in range(NUM_CASES):
        dim = rng.randint(1, 4)
        n = rng.randint(1, 8) if case % 5 else rng.randint(9, 12)
        affine = rng.random() < 0.4
        rows, offsets = [], []
        while len(rows) < n:
            row = [rng.randint(-2, 2) for _ in range(dim)]
            if any(row):
                rows.append(row)
                offsets.append(rng.randint(-1, 1) if affine else 0)
        yield case, rational_arrangement(dim, rows, offsets)


def test_randomized_invariant_suite():
    checked = 0
    for case, arr in random_arrangements():
        lattice = intersection_lattice(arr)
        chi = characteristic_polynomial(lattice)
        pi = poincare_polynomial(lattice)

        # Whitney oracle: subset expansion equals the lattice route exactly
        assert whitney_characteristic(arr) == chi, f"case {case}: Whitney oracle differs"

        # (t - 1) divides chi for a nonempty central arrangement
        if arr.central and arr.hyperplanes:
            assert chi(1) == 0, f"case {case}: chi(1) != 0 for central arrangement"

        # Moebius row sums vanish; signs alternate with codimension
        flats = list(lattice.all_flats())
        for f, mu in flats:
            assert mu != 0, f"case {case}: zero Moebius value"
            assert mu * (-1) ** f.codim > 0, f"case {case}: Moebius sign pattern"
            if f.codim > 0:
                total = sum(m for g, m in flats if g.contains <= f.contains)
                assert total == 0, f"case {case}: Moebius row sum"

        # Zaslavsky: regions equal the total OS dimension (rational => real)
        regions, bounded = region_count(arr, lattice)
        assert regions == pi(1), f"case {case}: Zaslavsky regions"
        assert bounded >= 0

        # deletion-restriction at one random hyperplane
        rng = random.Random(SEED + case)
        h = rng.randrange(len(arr.hyperplanes))
        deleted, restricted = deletion_restriction(arr, h)
        chi_d = characteristic_polynomial(intersection_lattice(deleted))
        chi_r = characteristic_polynomial(intersection_lattice(restricted))
        assert chi == chi_d - chi_r, f"case {case}: deletion-restriction at h={h}"

        # cone identity
        pi_cone = poincare_polynomial(intersection_lattice(cone(arr)))
        assert pi_cone == IntegerPolynomial((1, 1)) * pi, f"case {case}: cone identity"

        checked += 1
    assert checked == NUM_CASES
