import hashlib
import itertools
import random

import pytest

from tourlink import constructions as C
from tourlink.catalogue import find_certificate, load_catalogue
from tourlink.digraph import DomainError, GlueConflictError, OrientedGraph, Tournament, glue, is_consistent
from tourlink.digraph import dumps
from tourlink.isoenum import canonical_form

SIZES = {
    "il8": 8, "ik12": 12, "l3-23": 23, "l4-66": 66, "l5-154": 154,
    "tprime8": 8, "nlinked": 72, "tprime14": 14, "linkknot107": 107, "dlp14": 14,
}

# regression digests of the completed tournaments (low->high completion)
GOLDEN = {
    "dlp14": "fe8e0ec32a2019f2",
    "ik12": "c8b92ac211aed1df",
    "il8": "5b03c85384dd9b19",
    "l3-23": "28d619a750a49f8a",
    "l4-66": "abbaac094a13a484",
    "l5-154": "3b152168ae308b68",
    "linkknot107": "eecfe72dec36cc79",
    "nlinked": "387597d0b36338fb",
    "tprime14": "5d648c3c8d91df4b",
    "tprime8": "24a5bcd4139ab69a",
}


@pytest.fixture(scope="module")
def built():
    return {name: C.build(name) for name in C.BUILDERS}


def digest(t):
    return hashlib.sha256(dumps(t).encode()).hexdigest()[:16]


@pytest.mark.parametrize("name", sorted(SIZES))
def test_size_validators_and_digest(built, name):
    con = built[name]
    assert con.graph.n == SIZES[name]
    checks = C.validate(con)
    assert all(checks.values()), {k: v for k, v in checks.items() if not v}
    assert checks["skeleton_preserved"]
    assert digest(con.graph) == GOLDEN[name]


@pytest.mark.parametrize("n,size", [(2, 8), (3, 72), (4, 200)])
def test_nlinked_sizes(n, size):
    con = C.build_nlinked(n)
    assert con.graph.n == size == 8 * (2 * n - 3) ** 2
    assert all(C.validate(con).values())


def test_nlinked_two_is_tprime8():
    assert canonical_form(C.build_nlinked(2).graph) == canonical_form(C.build_tprime8().graph)
    assert canonical_form(C.build_tprime8().graph).bitstring() == "0000000000000000000001111000"
    assert canonical_form(C.build_il8().graph).bitstring() == "0000000000000001110001110000"


def test_negative_controls():
    t8 = Tournament.transitive(8)
    assert not all(C.validate_il8(t8).values())
    assert not all(C.validate_tprime8(t8).values())
    assert not all(C.validate_ik12(Tournament.transitive(12)).values())
    assert not all(C.validate_dlp14(Tournament.transitive(14)).values())


def test_validators_detect_a_flipped_construction_arc(built):
    con = built["l3-23"]
    u, v = next(iter(sorted(con.skeleton.arcs)))
    flipped = Tournament.from_arcs(23, [(b, a) if (a, b) == (u, v) else (a, b) for a, b in con.graph.arcs()])
    assert not all(C.validate(con, flipped).values())


def test_il8_triangles(built):
    con = built["il8"]
    tris = C.il8_triangles(con.roles)
    assert len(tris) == 18 and all(is_consistent(con.graph, t) for t in tris)
    pairs = C.il8_disjoint_pairs(con.roles)
    assert len(pairs) == 36 and all(not set(a) & set(b) for a, b in pairs)


def test_ik12_d4_witnesses(built):
    con = built["ik12"]
    tuples = list(C.ik12_admissible_tuples(con))
    assert len(tuples) == 180
    for tris, connectors in tuples:
        g = C.build_d4_witness(con.graph, tris, connectors)
        assert C.is_d4_shape(g)


def test_d4_from_disjoint_triangles():
    # transitive ambient order 1 < 2 < ... < 12, except the closing connector 12 -> 1
    arcs = [(u, v) for u, v in itertools.combinations(range(1, 13), 2) if (u, v) != (1, 12)] + [(12, 1)]
    t = Tournament.from_arcs(12, arcs)
    tris = [(1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12)]
    g = C.build_d4_witness(t, tris, [(3, 4), (6, 7), (9, 10), (12, 1)])
    assert g.n == 8 and len(g.arcs) == 12 and C.is_d4_shape(g)


def test_d4_rejects_bad_inputs():
    arcs = [(u, v) for u, v in itertools.combinations(range(1, 13), 2) if (u, v) != (1, 12)] + [(12, 1)]
    t = Tournament.from_arcs(12, arcs)
    with pytest.raises(C.WitnessError):
        C.build_d4_witness(t, [(1, 2, 3), (3, 5, 6), (7, 8, 9), (10, 11, 12)], [(3, 5), (6, 7), (9, 10), (12, 1)])
    with pytest.raises(C.WitnessError):
        C.build_d4_witness(t, [(1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12)], [(3, 4), (6, 7), (9, 10), None])
    c3 = Tournament.from_arcs(3, [(1, 2), (2, 3), (3, 1)])
    with pytest.raises(C.WitnessError):
        C.triangle_ends(c3, (1, 2, 3))
    assert not C.is_d4_shape(OrientedGraph(8, frozenset()))


def test_d_and_d_hat_glue():
    d, roles = C.build_d()
    d_hat, _ = C.build_d_hat()
    d1, d2 = roles["d1"], roles["d2"]
    assert d.n == 9 and (d1, d2) in d.arcs and (d2, d1) in d_hat.arcs
    dd, _ = glue([d, d], [[(0, d1), (1, d1)], [(0, d2), (1, d2)]])
    assert dd.n == 16
    with pytest.raises(GlueConflictError):
        glue([d, d_hat], [[(0, d1), (1, d1)], [(0, d2), (1, d2)]])


def test_l3_23_skeleton(built):
    con = built["l3-23"]
    assert con.skeleton.n == 23
    assert con.meta["d1d2"]["D^"] == "d2->d1"
    pairs = [frozenset(a) for a in con.skeleton.arcs]
    assert len(pairs) == len(set(pairs))


def test_klinked_rings(built):
    for name, copies in (("l4-66", 3), ("l5-154", 7)):
        con = built[name]
        assert con.meta["copies"] == copies
        assert con.graph.n == 23 * copies - copies
        assert len(set(con.meta["ring"])) == copies
    with pytest.raises(DomainError):
        C.build_klinked(6)


def test_tprime14_alpha(built):
    con = built["tprime14"]
    alpha = con.roles["alpha"]
    assert {a for a in con.skeleton.arcs if alpha in a} == {(con.roles["y3"], alpha), (alpha, con.roles["y3p"])}


def test_linkknot107_structure(built):
    con = built["linkknot107"]
    checks = C.validate(con)
    assert checks and all(checks.values())


def test_dlp14_small_subsets_are_linkless(built):
    t = built["dlp14"].graph
    fm = load_catalogue("FMellorK7")
    rng = random.Random(14)
    for _ in range(20):
        sub = sorted(rng.sample(range(1, 15), 7))
        assert find_certificate(t.induced(sub), fm) is not None


def test_unknown_construction():
    with pytest.raises(DomainError):
        C.build("nope")
    with pytest.raises(DomainError):
        C.build_nlinked(1)


def test_roles_must_be_injective():
    with pytest.raises(DomainError):
        C.NamedConstruction("x", Tournament.transitive(3), {"a": 1, "b": 1}, OrientedGraph(3, frozenset()))
