"""Walk through the seven-vertex linkless check.

Every tournament on seven vertices can be placed into one fixed spatial
embedding of K7 so that each of its 21 non-split links has a component whose
cycle is not consistently oriented.  This script enumerates the 456
isomorphism classes, finds such a placement for each, and shows one of them.
"""

from tourlink import enumerate_tournaments, find_certificate, is_certified_labeling, load_catalogue
from tourlink.catalogue import fmellor_indegree5_labeling, format_compact, residual_family
from tourlink.digraph import is_consistent

fm = load_catalogue("FMellorK7")
classes = list(enumerate_tournaments(7))
print(f"{len(classes)} classes, {len(fm.links)} catalogued links")

certs = [find_certificate(t, fm) for t in classes]
print("classes with a placement:", sum(c is not None for c in certs))

# a class with a vertex of in-degree 5, the case handled by hand in the argument
t, cert = next((t, c) for t, c in zip(classes, certs) if max(t.in_degrees()) == 5)
print("in-degrees:", t.in_degrees())
print("placement (label -> vertex):", dict(enumerate(cert.labeling, 1)))
for a, b in fm.links[:4]:
    pa, pb = a.mapped(cert.labeling), b.mapped(cert.labeling)
    print(f"  link {format_compact((a, b))}: consistent components "
          f"{is_consistent(t, pa)}/{is_consistent(t, pb)}")
assert is_certified_labeling(t, cert.labeling, fm)

# the by-hand recipe: the in-degree-5 vertex at label 7, its one out-neighbour at 3
v = t.in_degrees().index(5) + 1
recipe = fmellor_indegree5_labeling(t, v)
print("recipe placement:", recipe, "certified:", is_certified_labeling(t, recipe, fm))

# the tournaments the by-hand argument routes to a second embedding
for r in residual_family():
    print("residual member, in-degrees", r.in_degrees(), "placement found:", find_certificate(r, fm) is not None)
