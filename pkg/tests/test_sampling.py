import random

from mopkit.families import build_all, family_keys
from mopkit.sampling import multi_indices, random_spec


def test_multi_indices():
    assert multi_indices(2, 2) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert multi_indices(3, 1, 1) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_random_specs_are_reproducible_and_admissible():
    for key in family_keys():
        a = random_spec(key, random.Random(4), 2, 3)
        b = random_spec(key, random.Random(4), 2, 3)
        assert a.params == b.params
        if a.info.representations:
            build_all(a, (1,) + (0,) * (a.m - 1))
