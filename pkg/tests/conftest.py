import random
from fractions import Fraction

import pytest

from magoglab import enumeration
from magoglab.polytope import RationalTrianglePoint


@pytest.fixture(scope="session")
def family():
    """Cached enumerations shared across the whole run."""
    cache = {}

    def get(kind, n):
        key = (kind, n)
        if key not in cache:
            cache[key] = list(enumeration.enumerate_objects(kind, n))
        return cache[key]

    return get


def random_membership_point(rng: random.Random, vertices, max_terms: int = 5) -> RationalTrianglePoint:
    """Exact rational convex combination of up to max_terms vertices."""
    m = rng.randint(1, max_terms)
    chosen = rng.sample(vertices, m)
    weights = [rng.randint(1, 12) for _ in chosen]
    total = sum(weights)
    n = chosen[0].n
    rows = [[Fraction(0)] * i for i in range(1, n)]
    for w, v in zip(weights, chosen):
        for i, r in enumerate(v.rows):
            for j, x in enumerate(r):
                rows[i][j] += Fraction(w, total) * x
    return RationalTrianglePoint.from_rows(n, rows)
