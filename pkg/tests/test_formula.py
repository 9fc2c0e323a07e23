"""Closed-form values, the reduction identity, and counting-form agreement.

Tower values marked below were derived by hand from the level
contribution table (and the larger ones are re-certified against the
brute-force oracle in the acceptance suite).
"""

from __future__ import annotations

import itertools
import random

import pytest

from wreathgen.formula import (
    AbelianProfile,
    CyclicTopError,
    abelianization,
    counting_profile,
    d_abelian_wreath,
    d_corollary,
    d_tower,
)
from wreathgen.wreath import GroupSpec, parse_tower


def test_abelian_profile_basics():
    a = AbelianProfile({2: 2, 3: 1, 5: 0})
    assert a.d == 2
    assert a.rank(2) == 2 and a.rank(5) == 0 and a.rank(7) == 0
    assert AbelianProfile({}).is_trivial() and AbelianProfile({}).d == 0
    assert a.to_json() == {"2": 2, "3": 1}


def test_abelianization_contributions():
    t = parse_tower("A5;C6;S4")
    assert abelianization(t, 2).ranks == {2: 2, 3: 1}
    assert abelianization(t, 1).ranks == {2: 2, 3: 1}  # A5 adds nothing
    assert abelianization(t, 3).ranks == {2: 1}
    assert abelianization(t, 4).is_trivial()
    with pytest.raises(ValueError):
        abelianization(t, 5)
    assert abelianization(parse_tower("A4;A4;C9"), 1).ranks == {3: 3}


def test_abelianization_counts_normalized_levels():
    # A3 and S2 contribute as C3 and C2
    assert abelianization(parse_tower("C2;A3;S2"), 1).ranks == {2: 2, 3: 1}


def test_d_abelian_wreath_cases():
    a = AbelianProfile({2: 2, 3: 1})
    assert d_abelian_wreath(a, GroupSpec("A", 4)) == 2
    assert d_abelian_wreath(a, GroupSpec("A", 7)) == 2
    assert d_abelian_wreath(a, GroupSpec("S", 3)) == 3
    assert d_abelian_wreath(a, GroupSpec("C", 5)) == 3
    # cyclic case has no outer clamp at 2: trivial A gives 1
    assert d_abelian_wreath(AbelianProfile({}), GroupSpec("C", 7)) == 1
    assert d_abelian_wreath(AbelianProfile({}), GroupSpec("A", 4)) == 2
    assert d_abelian_wreath(AbelianProfile({3: 3}), GroupSpec("A", 4)) == 4


@pytest.mark.parametrize("text,d,case", [
    ("C6", 1, "SingleLevel"),
    ("S3", 2, "SingleLevel"),
    ("A3", 1, "SingleLevel"),  # normalizes to C3
    ("A5;C3;C2;C2", 2, "An"),
    ("C3;C2;C2", 3, "Cyclic"),
    ("S3;C2;C2", 3, "Sn"),
    ("S3;C2", 2, "Sn"),
    ("A4;C3", 2, "A4"),
    ("A4;C3;C3", 3, "A4"),
    ("C3;A4", 2, "Cyclic"),
    ("C2;S3", 2, "Cyclic"),
    ("C2;C2", 2, "Cyclic"),
    ("C2;C2;C2", 3, "Cyclic"),
    ("C2;C2;C2;C2", 4, "Cyclic"),
    ("A5;A5;A5", 2, "An"),
    ("S4;S4;S4", 3, "Sn"),
    ("S4;C2;C2;S4", 4, "Sn"),
])
def test_d_tower_values(text, d, case):
    res = d_tower(parse_tower(text))
    assert (res.d, res.case) == (d, case)


def test_d_tower_floor_of_two():
    for text in ("A5;A6", "A4;A5", "S3;A5", "C2;A5"):
        assert d_tower(parse_tower(text)).d == 2


def test_counting_profile():
    prof = counting_profile(parse_tower("S5;C2;C6;A4;S3"))
    assert (prof.a4, prof.s) == (1, 2)
    assert prof.c == {2: 2, 3: 1}


def test_d_corollary_values():
    assert d_corollary(parse_tower("S5;C2;C6;A4;S3")) == 4
    assert d_corollary(parse_tower("A5;C3;C2;C2")) == 2
    assert d_corollary(parse_tower("S3;C2;C2")) == 3
    assert d_corollary(parse_tower("A4;C3;C3")) == 3
    with pytest.raises(CyclicTopError):
        d_corollary(parse_tower("C3;C2;C2"))
    with pytest.raises(CyclicTopError):
        d_corollary(parse_tower("A3;C2"))  # normalizes to cyclic top
    with pytest.raises(ValueError):
        d_corollary(parse_tower("S3"))


_POOL = ["A4", "A5", "S3", "S4", "S5", "C2", "C3", "C4", "C5", "C6"]
_NONCYC = ["A4", "A5", "S3", "S4", "S5"]


def test_corollary_agrees_with_case_split_exhaustively():
    # every tower, k = 2..4, non-cyclic top (k = 5 runs in acceptance)
    for k in (2, 3, 4):
        for rest in itertools.product(_POOL, repeat=k - 1):
            for top in _NONCYC:
                t = parse_tower(";".join((top,) + rest))
                assert d_corollary(t) == d_tower(t).d, t.text()


def test_reduction_identity_on_random_towers():
    rng = random.Random(2024)
    for _ in range(500):
        k = rng.randint(2, 8)
        t = parse_tower(";".join(rng.choice(_POOL) for _ in range(k)))
        res = d_tower(t)
        assert res.d == max(2, d_abelian_wreath(abelianization(t, 2), t.levels[0]))
        assert res.d >= 2


def test_monotonicity_in_tail():
    # appending levels below the top never lowers d
    rng = random.Random(99)
    for _ in range(200):
        k = rng.randint(2, 6)
        levels = [rng.choice(_POOL) for _ in range(k)]
        t = parse_tower(";".join(levels))
        t_ext = parse_tower(";".join(levels + [rng.choice(_POOL)]))
        assert d_tower(t_ext).d >= d_tower(t).d
