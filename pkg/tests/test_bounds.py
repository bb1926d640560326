from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_extremal
from torsym.bounds import (
    Mode, Signature, Surface, admissible, bound_table, enumerate_extremal, orbifold_euler, rh_genus,
)
from torsym.catalog import Tag, build, verify
from torsym.errors import GenusOutOfRange

PROPS = settings(max_examples=100, deadline=None)
EXTREMAL = Signature(0, (2, 2, 2, 3))


def test_signature_normalisation():
    assert Signature(0, (3, 1, 2)).indices == (2, 3)
    with pytest.raises(ValueError):
        Signature(-1)


def test_orbifold_euler_examples():
    assert orbifold_euler(EXTREMAL) == F(-1, 6)
    assert orbifold_euler(Signature(1)) == 0
    assert orbifold_euler(Signature(0, (2,) * 5)) == F(-1, 2)


def test_rh_genus_examples():
    assert rh_genus(24, EXTREMAL) == 3
    assert rh_genus(1, Signature(4)) == 4
    assert rh_genus(192, EXTREMAL) == 17


def test_rh_genus_integrality():
    for order in (12, 24, 36, 192):
        g = rh_genus(order, EXTREMAL)
        assert g.denominator == 1 and g == order // 12 + 1
    assert rh_genus(18, EXTREMAL).denominator != 1


def test_enumerate_examples():
    r = enumerate_extremal(Mode.EXCLUDE_SMALL_SPHERICAL)
    assert r.multiplier == 6 and r.extremal_signatures == (EXTREMAL,)
    r = enumerate_extremal(Mode.GENUS_ONE_ONLY)
    assert r.multiplier == 2 and r.extremal_signatures == (Signature(1, (2,)),)
    r = enumerate_extremal(Mode.UNRESTRICTED_HYPERBOLIC)
    assert r.multiplier == 42 and r.extremal_signatures == (Signature(0, (2, 3, 7)),)


@pytest.mark.parametrize("mode,side", [
    (Mode.EXCLUDE_SMALL_SPHERICAL, lambda g, k: g >= 1 or k >= 4),
    (Mode.GENUS_ONE_ONLY, lambda g, k: g == 1 and k >= 1),
    (Mode.UNRESTRICTED_HYPERBOLIC, lambda g, k: True),
])
def test_enumeration_matches_brute_force(mode, side):
    mult, winners = brute_force_extremal(side)
    r = enumerate_extremal(mode)
    assert r.multiplier == mult
    assert [(s.g_prime, s.indices) for s in r.extremal_signatures] == winners


def test_multiplier_monotone():
    assert enumerate_extremal(Mode.EXCLUDE_SMALL_SPHERICAL).multiplier < enumerate_extremal(
        Mode.UNRESTRICTED_HYPERBOLIC).multiplier


def test_bound_table_examples():
    assert bound_table(3).values() == (24, 48, 48, 96)
    assert bound_table(2, Surface.ORIENTABLE).values() == (12, 24, 24, 48)
    assert bound_table(4, "nonorientable").values() == (24, 48)
    with pytest.raises(GenusOutOfRange):
        bound_table(1)
    with pytest.raises(GenusOutOfRange):
        bound_table(2, Surface.NONORIENTABLE)


@pytest.mark.parametrize("tag,n,form", [(Tag.PCU, 2, "4n3"), (Tag.SRS27, 1, "2n3"), (Tag.HEX, 2, "3n2"),
                                        (Tag.DIA_C, 1, "4n3")])
def test_extremal_signature_reproduces_catalog_genus(tag, n, form):
    r = verify(build(tag, n, form))
    assert rh_genus(r.computed["order"], EXTREMAL) == r.computed["genus"]


signatures = st.builds(
    Signature, st.integers(0, 3), st.lists(st.integers(2, 60), max_size=7).map(tuple)
)


BEST = {mode: enumerate_extremal(mode).multiplier for mode in Mode}


@PROPS
@given(signatures)
def test_no_admissible_signature_beats_the_multiplier(s):
    for mode, best in BEST.items():
        if admissible(s, mode):
            assert -1 / orbifold_euler(s) <= best


@PROPS
@given(signatures)
def test_orbifold_euler_matches_direct_sum(s):
    direct = F(2 - 2 * s.g_prime) - sum(F(q - 1, q) for q in s.indices)
    assert orbifold_euler(s) == direct
    assert rh_genus(1, Signature(s.g_prime)) == s.g_prime
