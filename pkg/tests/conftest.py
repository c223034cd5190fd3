from __future__ import annotations

import pytest

from oscount.arrangement import Arrangement, build_arrangement
from oscount.fields import rational_field


def rational_arrangement(dim: int, rows, offsets=None) -> Arrangement:
    """Arrangement over Q from integer/fraction rows (offsets optional)."""
    f = rational_field()
    raw = []
    for i, row in enumerate(rows):
        normal = tuple(f.from_rational(x) for x in row)
        offset = f.from_rational(offsets[i]) if offsets else f.zero()
        raw.append((normal, offset))
    return build_arrangement(f, dim, raw)


@pytest.fixture
def boolean3():
    return rational_arrangement(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@pytest.fixture
def braid3():
    return rational_arrangement(3, [[1, -1, 0], [1, 0, -1], [0, 1, -1]])
