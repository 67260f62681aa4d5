import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tourlink.digraph import Tournament, dual, relabel
from tourlink.isoenum import (
    CanonicalForm,
    UnsupportedSizeError,
    _class_keys,
    all_labelings,
    brute_force_canonical,
    brute_force_classes,
    canonical_form,
    canonical_labeling,
    enumerate_tournaments,
    is_isomorphic,
)

CLASS_COUNTS = {3: 2, 4: 4, 5: 12, 6: 56, 7: 456}


@st.composite
def tournaments(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return Tournament(n, draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)))


def test_three_vertex_examples():
    trans = Tournament.transitive(3)
    forms = {canonical_form(relabel(trans, s)) for s in itertools.permutations((1, 2, 3))}
    assert len(forms) == 1
    c3 = Tournament.from_arcs(3, [(1, 2), (2, 3), (3, 1)])
    assert canonical_form(c3) == canonical_form(dual(c3))
    assert canonical_form(c3) != canonical_form(trans)
    assert len(brute_force_classes(3)) == 2


@pytest.mark.parametrize("n", sorted(CLASS_COUNTS))
def test_class_counts(n):
    assert len(list(enumerate_tournaments(n))) == CLASS_COUNTS[n]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_matches_full_permutation_oracle(n):
    # every orientation of K_n, minimised over literally all n! relabellings
    m = n * (n - 1) // 2
    oracle = {brute_force_canonical(Tournament(n, bits)) for bits in range(1 << m)}
    emitted = [canonical_form(t) for t in enumerate_tournaments(n)]
    assert len(set(emitted)) == len(emitted)
    assert set(emitted) == oracle


def test_enumeration_matches_all_orientations_six():
    assert {canonical_form(t) for t in enumerate_tournaments(6)} == brute_force_classes(6)


@settings(max_examples=60, deadline=None)
@given(tournaments(max_n=6))
def test_fast_canonical_agrees_with_brute_force(t):
    assert canonical_form(t) == brute_force_canonical(t)


@settings(max_examples=200, deadline=None)
@given(tournaments(max_n=9), st.data())
def test_canonical_form_is_a_class_invariant(t, data):
    sigma = data.draw(st.permutations(range(1, t.n + 1)))
    assert canonical_form(relabel(t, sigma)) == canonical_form(t)
    lab = canonical_labeling(t)
    assert relabel(t, lab) == canonical_form(t).tournament()


def test_representatives_are_their_own_canonical_form():
    for t in enumerate_tournaments(6):
        cf = canonical_form(t)
        assert cf.tournament() == t
        assert len(cf.bitstring()) == 15


def test_dual_closure():
    for n in (5, 6, 7):
        forms = {canonical_form(t) for t in enumerate_tournaments(n)}
        assert {canonical_form(dual(t)) for t in enumerate_tournaments(n)} == forms


def test_output_is_sorted_and_independent_of_workers():
    _class_keys.cache_clear()
    serial = [t.bits for t in enumerate_tournaments(6, jobs=1)]
    parallel = [t.bits for t in enumerate_tournaments(6, jobs=2)]
    assert serial == parallel
    keys = [canonical_form(t) for t in enumerate_tournaments(6)]
    assert keys == sorted(keys)


def test_is_isomorphic():
    t = Tournament.from_arcs(4, [(1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (4, 3)])
    assert is_isomorphic(t, relabel(t, (4, 3, 2, 1)))
    assert not is_isomorphic(t, Tournament.transitive(4))
    assert not is_isomorphic(t, Tournament.transitive(5))


def test_all_labelings():
    for n in (3, 7, 8):
        assert sum(1 for _ in all_labelings(n)) == math.factorial(n)
    assert next(iter(all_labelings(4))) == (1, 2, 3, 4)


def test_size_limits():
    with pytest.raises(UnsupportedSizeError):
        list(enumerate_tournaments(9))
    with pytest.raises(UnsupportedSizeError):
        list(enumerate_tournaments(2))
    with pytest.raises(UnsupportedSizeError):
        canonical_form(Tournament.transitive(11))
    with pytest.raises(UnsupportedSizeError):
        all_labelings(9)


def test_canonical_form_order():
    assert CanonicalForm(3, 1) < CanonicalForm(3, 2)
    assert CanonicalForm(3, 0).tournament() == Tournament(3, 0)
