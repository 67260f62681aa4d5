"""Acceptance criteria 1-10, one pass/fail line each.

Run under pytest (``pytest tests/test_acceptance.py -v``) or directly
(``python tests/test_acceptance.py``) for the bare summary.
"""

import itertools
import math
import os
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from test_digraph import contraction_lifts_cycles  # noqa: E402

from tourlink import constructions as C  # noqa: E402
from tourlink.catalogue import (  # noqa: E402
    AMT_PROOF_ARCS,
    VERIFY_COMMANDS,
    EmbeddingCatalogue,
    amt_proof_labeling,
    cg_certificate,
    find_certificate,
    is_certified_labeling,
    load_catalogue,
    residual_forms,
    validate_certificate,
    verify_class,
)
from tourlink.digraph import CyclePattern, Tournament, dual, is_consistent, killed_by_partial, relabel  # noqa: E402
from tourlink.isoenum import canonical_form, enumerate_tournaments  # noqa: E402
from tourlink.linking import (  # noqa: E402
    SIGNS_3LINK,
    Gf2Matrix,
    PigeonholeInstance,
    combine_rows,
    gap_table,
    homology_incidence,
    pigeonhole_select,
    random_linking_matrix,
    random_relation_table,
    select_index_set,
    select_rows,
    simulate_zcycle_linking,
)

JOBS = max(1, min(8, os.cpu_count() or 1))


def report(number, ok, detail, seconds):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {detail} ({seconds:.1f}s)"
    print(line, file=sys.__stdout__, flush=True)
    return line


def timed(fn):
    start = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - start


# ---- 1 -----------------------------------------------------------------------

def criterion_1():
    fm, amt, cg = (load_catalogue(n) for n in ("FMellorK7", "AMTK8", "CGK7"))
    ok = len(fm.links) == 21 and not fm.knots and len(amt.knots) == 29 and not amt.links
    ok &= all(not set(a.verts) & set(b.verts) for a, b in fm.links)
    for cat in (fm, amt, cg):
        ok &= all(1 <= v <= cat.n for e in cat.entries() for c in e for v in c.verts)
        ok &= all(len(set(c.verts)) == len(c.verts) for e in cat.entries() for c in e)
    return ok, f"FMellorK7 {len(fm.links)} links, AMTK8 {len(amt.knots)} knots, invariants hold"


# ---- 2 -----------------------------------------------------------------------

def criterion_2():
    n, name, policy = VERIFY_COMMANDS["k7-linkless"]
    assert policy.search_dual
    r = verify_class(n, load_catalogue(name), policy, jobs=JOBS)
    s = r.summary()
    ok = s["classes"] == 456 and s["unexplained"] == 0
    for t, o in zip(enumerate_tournaments(7), r.outcomes):
        if o["status"] == "leftover":
            ok &= canonical_form(t) in residual_forms()
        else:
            tt = dual(t) if o["dual"] else t
            ok &= is_certified_labeling(tt, o["certificate"]["labeling"], load_catalogue(name))
    return ok, (f"{s['classes']} classes, {s['certified']} FMellor certificates, "
                f"{s['leftovers']} leftovers ({len(residual_forms())} residual forms), {s['unexplained']} unexplained")


# ---- 3 -----------------------------------------------------------------------

def criterion_3():
    cg = load_catalogue("CGK7")
    r = verify_class(7, cg, VERIFY_COMMANDS["k7-knotless"][2], jobs=JOBS)
    two_step = 0
    for t in enumerate_tournaments(7):
        cert = cg_certificate(t)
        two_step += validate_certificate(t, cert, cg)
    s = r.summary()
    ok = s["classes"] == 456 and s["certified"] == 456 and two_step == 456
    return ok, f"{s['certified']}/456 CGK7 certificates, two-step placement on {two_step}/456"


# ---- 4 -----------------------------------------------------------------------

def criterion_4():
    amt, cg = load_catalogue("AMTK8"), load_catalogue("CGK7")
    r = verify_class(8, amt, VERIFY_COMMANDS["k8-knotless"][2], jobs=JOBS)
    s = r.summary()
    # re-check every certificate independently of the search
    reps = list(enumerate_tournaments(8))
    checked = 0
    for t, o in zip(reps, r.outcomes):
        if o["status"] == "leftover":
            continue
        cj = o["certificate"]
        tt = dual(t) if o.get("dual") else t
        if cj["kind"] == "apex-reduction":
            apex = cj["apex"]
            rest = tt.induced([v for v in range(1, 9) if v != apex])
            good = tt.out_degree(apex) in (0, 7) and is_certified_labeling(rest, cj["sub"]["labeling"], cg)
        else:
            good = is_certified_labeling(tt, cj["labeling"], amt)
        checked += good
    ok = s["classes"] == 6880 and s["leftovers"] == 0 and checked == 6880
    return ok, (f"{s['classes']} classes: {s['certified']} AMTK8 + {s['apex']} apex-reduction, "
                f"{s['leftovers']} leftovers, {checked} re-validated, {JOBS} worker(s)")


# ---- 5 -----------------------------------------------------------------------

def criterion_5():
    amt = load_catalogue("AMTK8")
    static = all(killed_by_partial(AMT_PROOF_ARCS, k) for k in amt.knots)
    applicable = good = 0
    for t in enumerate_tournaments(8):
        if max(t.in_degrees()) not in (4, 5, 6):
            continue
        applicable += 1
        sigma = amt_proof_labeling(t)
        image = [(sigma[a - 1], sigma[b - 1]) for a, b in AMT_PROOF_ARCS]
        good += all(t.has_arc(u, v) for u, v in image) and is_certified_labeling(t, sigma, amt)
    ok = static and applicable > 0 and good == applicable
    return ok, f"six arcs kill all 29 knots: {static}; proof labelling works on {good}/{applicable} classes"


# ---- 6 -----------------------------------------------------------------------

def criterion_6():
    expected = {"il8": 8, "ik12": 12, "l3-23": 23, "l4-66": 66, "l5-154": 154,
                "linkknot107": 107, "tprime14": 14, "dlp14": 14, "tprime8": 8}
    ok, bad = True, []
    for name, size in expected.items():
        con = C.build(name)
        good = con.graph.n == size and all(C.validate(con).values())
        ok &= good
        if not good:
            bad.append(name)
    for n in (2, 3, 4):
        con = C.build_nlinked(n)
        good = con.graph.n == 8 * (2 * n - 3) ** 2 and all(C.validate(con).values())
        ok &= good
        if not good:
            bad.append(f"nlinked-{n}")
    t8 = Tournament.transitive(8)
    negatives = not all(C.validate_il8(t8).values()) and not all(C.validate_tprime8(t8).values())
    ok &= negatives
    return ok, (f"sizes 8,12,23,66,154,107,14,14 and 8(2n-3)^2 for n=2..4; validators pass"
                f"{' except ' + ','.join(bad) if bad else ''}; negative controls fail: {negatives}")


# ---- 7 -----------------------------------------------------------------------

def criterion_7():
    exhaustive = 0
    ok = True
    for size in (1, 2, 3):
        need = math.isqrt(size - 1) + 1
        off = [(i, j) for i in range(size) for j in range(size) if i != j]
        for bits in range(1 << len(off)):
            rows = [1 << i for i in range(size)]
            for k, (i, j) in enumerate(off):
                if bits >> k & 1:
                    rows[i] |= 1 << j
            m = Gf2Matrix(tuple(rows), size)
            s = select_rows(m, need)
            ok &= s.weight >= need and combine_rows(m, s.indices) == s.vector
            exhaustive += 1
    random_count = 0
    for n in range(2, 7):
        rng = random.Random(7000 + n)
        size = (2 * n - 3) ** 2
        for _ in range(1000):
            m = random_linking_matrix(size, rng, rng.random())
            s = select_index_set(m, n)
            c = 0
            for j in rng.sample(range(size), rng.randint(0, n - 2)):
                c |= 1 << j
            linked = simulate_zcycle_linking(m, c, n)
            ok &= s.weight >= 2 * n - 3 and combine_rows(m, s.indices) == s.vector and len(linked) >= n - 1
            random_count += 1
    return ok, f"{exhaustive} unit-diagonal matrices up to 3x3, {random_count} random instances (n=2..6)"


# ---- 8 -----------------------------------------------------------------------

def _admissible_rows(nbins):
    return [row for row in itertools.product((False, True), repeat=nbins) if sum(row) >= 2]


def criterion_8():
    ok = True
    rows4 = _admissible_rows(4)
    exhaustive = 0
    for inc in itertools.product(rows4, repeat=3):
        b, hits = pigeonhole_select(PigeonholeInstance.from_matrix(inc), 3)
        ok &= len(hits) == 2 and all(inc[t][b] for t in hits)
        exhaustive += 1
    for nb, nt, need in ((5, 6, 4), (9, 14, 5)):
        rng = random.Random(8000 + nb)
        rows = _admissible_rows(nb)
        for _ in range(1000):
            inst = PigeonholeInstance.from_matrix([rng.choice(rows) for _ in range(nt)])
            b, hits = pigeonhole_select(inst, need)
            ok &= len(hits) == need - 1 and all(inst.incidence[t][b] for t in hits)
    rng = random.Random(8888)
    for _ in range(1000):
        table, partners = random_relation_table(3, SIGNS_3LINK, rng)
        inst = homology_incidence(table, partners, SIGNS_3LINK)
        ok &= all(sum(r) >= 2 for r in inst.incidence)
    return ok, f"{exhaustive} exhaustive (4,3,3) instances, 2x1000 random shapes, 1000 relation tables"


# ---- 9 -----------------------------------------------------------------------

def criterion_9():
    t = gap_table(12)
    ok = t.row(2).cg_lower == t.row(2).cg_upper == 2
    ok &= [t.row(n).cg_upper for n in (3, 4, 5)] == [13, 54, 139]
    ok &= all(t.row(n).cg_upper == 8 * (2 * n - 3) ** 2 - 3 * n for n in range(6, 13))
    return ok, "cg(2)=2, cg(3)<=13, cg(4)<=54, cg(5)<=139, cg(n)<=8(2n-3)^2-3n for n=6..12"


# ---- 10 ----------------------------------------------------------------------

def _probe_catalogues():
    tri5 = EmbeddingCatalogue("TRI5", 5, knots=tuple(CyclePattern(c) for c in itertools.combinations(range(1, 6), 3)))
    pairs6 = []
    for a in itertools.combinations(range(1, 7), 3):
        b = tuple(v for v in range(1, 7) if v not in a)
        if a < b:
            pairs6.append((CyclePattern(a), CyclePattern(b)))
    k6 = EmbeddingCatalogue("PAIRS6", 6, links=tuple(pairs6))
    return [load_catalogue("FMellorK7"), load_catalogue("CGK7"), load_catalogue("AMTK8"), tri5, k6]


def criterion_10():
    cats = _probe_catalogues()
    rng = random.Random(10_000)
    ok = True
    with_cert = without_cert = 0
    for i in range(10_000):
        cat = cats[i % len(cats)]
        n = cat.n
        t = Tournament(n, rng.getrandbits(n * (n - 1) // 2))
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        p = CyclePattern(tuple(rng.sample(range(1, n + 1), rng.randint(3, n))))
        moved, flipped = relabel(t, sigma), dual(t)
        c = is_consistent(t, p)
        ok &= c == is_consistent(flipped, p) == is_consistent(moved, p.mapped(sigma))
        cert = find_certificate(t, cat)
        others = [find_certificate(moved, cat), find_certificate(flipped, cat)]
        ok &= all((x is None) == (cert is None) for x in others)
        if cert is not None:
            with_cert += 1
            ok &= is_certified_labeling(moved, [sigma[v - 1] for v in cert.labeling], cat)
            ok &= is_certified_labeling(flipped, cert.labeling, cat)
        else:
            without_cert += 1
    lifts, checked = True, 0
    for n in (2, 3, 4):
        good, info = contraction_lifts_cycles(n)
        lifts &= good
        checked += info if good else 0
    ok &= lifts
    return ok, (f"10000 (T, sigma, p) triples ({with_cert} with / {without_cert} without certificates); "
                f"contraction safety on {checked} contractions of oriented graphs with <= 4 vertices")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number, capsys):
    ok, detail, seconds = timed(CRITERIA[number - 1])
    with capsys.disabled():
        print()
        report(number, ok, detail, seconds)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail, seconds = timed(fn)
        report(k, ok, detail, seconds)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
