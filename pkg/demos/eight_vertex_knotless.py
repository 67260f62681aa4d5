"""Eight-vertex tournaments are never forced to contain a consistent knot.

Classes with a vertex that beats (or loses to) everyone reduce to seven
vertices, where a single Hamiltonian knot is avoided by at most one swap.
All other classes are placed so that six chosen arcs break every knotted
cycle of a fixed K8 embedding.
"""

import time

from tourlink import load_catalogue
from tourlink.catalogue import AMT_PROOF_ARCS, VERIFY_COMMANDS, amt_proof_labeling, verify_class
from tourlink.digraph import killed_by_partial
from tourlink.isoenum import enumerate_tournaments

amt = load_catalogue("AMTK8")
print("six arcs", AMT_PROOF_ARCS, "break all knots:",
      all(killed_by_partial(AMT_PROOF_ARCS, k) for k in amt.knots))

t = next(t for t in enumerate_tournaments(8) if max(t.in_degrees()) == 5)
sigma = amt_proof_labeling(t)
print("a class with max in-degree 5 placed as", sigma)

start = time.perf_counter()
n, name, policy = VERIFY_COMMANDS["k8-knotless"]
report = verify_class(n, amt, policy)
print(report.summary(), f"{time.perf_counter() - start:.0f}s")
