"""Generators and structural validators for the explicit tournaments.

Every generator returns a :class:`NamedConstruction`: the completed
tournament, the arcs the construction prescribes (``skeleton``), and a role
map so validators can address vertices as ``x``, ``a1``, ``d1``, ``alpha``...
Free pairs are completed low -> high by vertex number.

Validators take any tournament plus a role map and return a dict of named
boolean checks; they never raise on a well-formed input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .digraph import (
    ContractionError,
    DomainError,
    OrientedGraph,
    Tournament,
    complete_to_tournament,
    consistent_edge_contraction,
    glue,
    is_consistent,
    vertex_expansion,
)


class WitnessError(DomainError):
    """A D4 witness could not be assembled from the given pieces."""


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    graph: Tournament
    roles: Mapping[str, int]
    skeleton: OrientedGraph
    meta: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.roles.values())) != len(self.roles):
            raise DomainError(f"{self.name}: role map is not injective")

    def __getitem__(self, role: str) -> int:
        return self.roles[role]

    def labels(self) -> dict[int, str]:
        return {v: r for r, v in self.roles.items()}


def _from_roles(name: str, role_names: list[str], arcs: Iterable[tuple[str, str]], meta=None) -> NamedConstruction:
    roles = {r: i + 1 for i, r in enumerate(role_names)}
    skeleton = OrientedGraph(len(roles), frozenset((roles[a], roles[b]) for a, b in arcs))
    return NamedConstruction(name, complete_to_tournament(skeleton), roles, skeleton, meta or {})


def _names(prefix: str, k: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, k + 1)]


A3, B3 = _names("a", 3), _names("b", 3)
X3, Y3 = _names("x", 3), _names("y", 3)


def _arcs_all(tails, heads):
    return [(u, v) for u in tails for v in heads]


def _has_all(t: Tournament, roles, tails, heads) -> bool:
    return all(t.has_arc(roles[u], roles[v]) for u in tails for v in heads)


def skeleton_preserved(con: NamedConstruction) -> bool:
    """Completion kept every prescribed arc."""
    return all(con.graph.has_arc(u, v) for u, v in con.skeleton.arcs)


# -- two linked triangles on 8 vertices --------------------------------------

IL8_ROLES = A3 + B3 + ["x", "y"]


def build_il8() -> NamedConstruction:
    arcs = _arcs_all(["x", "y"], A3) + _arcs_all(B3, ["x", "y"]) + _arcs_all(A3, B3)
    return _from_roles("il8", IL8_ROLES, arcs)


def il8_triangles(roles: Mapping[str, int]) -> list[tuple[int, int, int]]:
    return [(roles[c], roles[a], roles[b]) for c in ("x", "y") for a in A3 for b in B3]


def il8_disjoint_pairs(roles: Mapping[str, int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Vertex-disjoint pairs (x a_i b_j, y a_k b_l), i != k and j != l."""
    return [
        ((roles["x"], roles[a], roles[b]), (roles["y"], roles[c], roles[d]))
        for a, b, c, d in itertools.product(A3, B3, A3, B3)
        if a != c and b != d
    ]


def validate_il8(t: Tournament, roles: Mapping[str, int] | None = None) -> dict[str, bool]:
    roles = roles or {r: i + 1 for i, r in enumerate(IL8_ROLES)}
    return {
        "size": t.n == 8,
        "x_y_to_a": _has_all(t, roles, ["x", "y"], A3),
        "b_to_x_y": _has_all(t, roles, B3, ["x", "y"]),
        "a_to_b": _has_all(t, roles, A3, B3),
        "triangles_consistent": all(is_consistent(t, tri) for tri in il8_triangles(roles)),
        "disjoint_pairs_36": len(il8_disjoint_pairs(roles)) == 36,
    }


# -- knotted tournament on 12 vertices ---------------------------------------

IK12_ROLES = X3 + Y3 + A3 + B3


def _ik12_arcs(with_y3_to_b: bool = True) -> list[tuple[str, str]]:
    arcs = _arcs_all(X3, Y3)
    arcs += [(X3[i], X3[j]) for i in range(3) for j in range(i + 1, 3)]
    arcs += [(Y3[i], Y3[j]) for i in range(3) for j in range(i + 1, 3)]
    arcs += _arcs_all(Y3, A3) + _arcs_all(["x3"], A3) + _arcs_all(A3, B3)
    arcs += _arcs_all(B3, X3) + _arcs_all(B3, ["y1"])
    if with_y3_to_b:
        arcs += _arcs_all(["y3"], B3)
    return arcs


def build_ik12() -> NamedConstruction:
    return _from_roles("ik12", IK12_ROLES, _ik12_arcs())


def _k6_checks(t: Tournament, roles) -> dict[str, bool]:
    k6 = [roles[r] for r in X3 + Y3]
    y3 = roles["y3"]
    return {
        "k6_triangles_have_source_and_sink": all(
            not is_consistent(t, tri) for tri in itertools.combinations(k6, 3)
        ),
        "y3_sink_in_k6": all(t.has_arc(v, y3) for v in k6 if v != y3),
    }


def validate_ik12(t: Tournament, roles: Mapping[str, int] | None = None) -> dict[str, bool]:
    roles = roles or {r: i + 1 for i, r in enumerate(IK12_ROLES)}
    checks = {"size": t.n == 12}
    checks["rules"] = all(t.has_arc(roles[u], roles[v]) for u, v in _ik12_arcs())
    checks.update(_k6_checks(t, roles))
    checks["b_to_x"] = _has_all(t, roles, B3, X3)
    checks["x3_y1_y2_to_a"] = _has_all(t, roles, ["x3", "y1", "y2"], A3)
    return checks


def triangle_ends(t: Tournament | OrientedGraph, tri) -> tuple[int, int, int]:
    """(source, middle, sink) of a transitive triangle."""
    for s, m, k in itertools.permutations(tri):
        if t.has_arc(s, m) and t.has_arc(m, k) and t.has_arc(s, k):
            return s, m, k
    raise WitnessError(f"triangle {tuple(tri)} has no source and sink")


def is_d4_shape(g: OrientedGraph) -> bool:
    """Four junctions in a ring, consecutive junctions joined by an arc and a 2-path."""
    if g.n != 8 or len(g.arcs) != 12:
        return False
    outs = {v: g.out_neighbors(v) for v in range(1, 9)}
    ins = {v: g.in_neighbors(v) for v in range(1, 9)}
    junctions = [v for v in outs if len(outs[v]) == 2 and len(ins[v]) == 2]
    middles = [v for v in outs if len(outs[v]) == 1 and len(ins[v]) == 1]
    if len(junctions) != 4 or len(middles) != 4:
        return False
    succ = {}
    for j in junctions:
        nxt = [u for u in outs[j] if u in junctions]
        mid = [u for u in outs[j] if u in middles]
        if len(nxt) != 1 or len(mid) != 1 or outs[mid[0]] != {nxt[0]}:
            return False
        succ[j] = nxt[0]
    seen, j = [], junctions[0]
    while j not in seen:
        seen.append(j)
        j = succ[j]
    return len(seen) == 4 and j == junctions[0]


def build_d4_witness(t: Tournament, triangles, connectors) -> OrientedGraph:
    """Assemble the ring of four triangles and contract it to a D4 shape.

    ``triangles[i]`` must be transitive in ``t``.  ``connectors[i]`` is the
    arc from the sink of triangle i to the source of triangle i+1 (mod 4), or
    ``None`` when those two vertices coincide.  All other arcs are dropped
    and every connector is removed by consistent edge contraction.
    """
    if len(triangles) != 4 or len(connectors) != 4:
        raise WitnessError("need four triangles and four connector slots")
    ends = [triangle_ends(t, tri) for tri in triangles]
    for i in range(4):
        sink, nxt_source = ends[i][2], ends[(i + 1) % 4][0]
        c = connectors[i]
        if c is None:
            if sink != nxt_source:
                raise WitnessError(f"no connector between triangles {i} and {(i + 1) % 4}")
        elif tuple(c) != (sink, nxt_source) or not t.has_arc(*c):
            raise WitnessError(f"connector {c} does not run sink -> next source")
    shared = {ends[i][2] for i in range(4) if connectors[i] is None}
    verts = [v for tri in triangles for v in tri]
    for v in set(verts):
        if verts.count(v) > (2 if v in shared else 1):
            raise WitnessError(f"vertex {v} is shared by triangles")
    order = sorted(set(verts))
    idx = {v: i + 1 for i, v in enumerate(order)}
    arcs = set()
    for s, m, k in ends:
        arcs |= {(idx[s], idx[m]), (idx[m], idx[k]), (idx[s], idx[k])}
    pending = [(idx[a], idx[b]) for a, b in (c for c in connectors if c is not None)]
    arcs |= set(pending)
    g = OrientedGraph(len(order), frozenset(arcs))
    while pending:
        e = pending.pop(0)
        try:
            g, mapping = consistent_edge_contraction(g, e)
        except ContractionError as exc:
            raise WitnessError(str(exc)) from exc
        pending = [(mapping[a], mapping[b]) for a, b in pending]
    if not is_d4_shape(g):
        raise WitnessError("contracted graph is not a D4 ring")
    return g


def ik12_admissible_tuples(con: NamedConstruction):
    """Every (T1, T2, T3, T4, connectors) choice the knotting argument can meet.

    T1/T3 split the x, y vertices with y3 in T3; T4 = y3 a_m b_n; T2 is one
    of the other a's with the two other b's.  Ring order is T1, T2, T3, T4
    and T3, T4 share y3.
    """
    t, r = con.graph, con.roles
    k6 = [r[v] for v in X3 + Y3]
    y3 = r["y3"]
    for pair in itertools.combinations([v for v in k6 if v != y3], 2):
        tri3 = (y3,) + pair
        tri1 = tuple(v for v in k6 if v not in tri3)
        for am, bn in itertools.product(A3, B3):
            tri4 = (y3, r[am], r[bn])
            bs = [r[b] for b in B3 if b != bn]
            for ai in (a for a in A3 if a != am):
                tri2 = (r[ai], bs[0], bs[1])
                tris = (tri1, tri2, tri3, tri4)
                ends = [triangle_ends(t, tri) for tri in tris]
                connectors = [
                    (ends[0][2], ends[1][0]),
                    (ends[1][2], ends[2][0]),
                    None,
                    (ends[3][2], ends[0][0]),
                ]
                yield tris, connectors


# -- 3-linked tournament on 23 vertices --------------------------------------

def _k332_d() -> tuple[OrientedGraph, dict[str, int]]:
    """K_{3,3,2} oriented A -> B -> C -> A with c1 expanded into d1 -> d2."""
    roles = {r: i + 1 for i, r in enumerate(A3 + B3 + ["c1", "c2"])}
    arcs = _arcs_all(A3, B3) + _arcs_all(B3, ["c1", "c2"]) + _arcs_all(["c1", "c2"], A3)
    k332 = OrientedGraph(8, frozenset((roles[a], roles[b]) for a, b in arcs))
    d, _, (d1, d2) = vertex_expansion(
        k332, roles["c1"], in_side=[roles[b] for b in B3], out_side=[roles[a] for a in A3]
    )
    roles = {r: v for r, v in roles.items() if r != "c1"}
    roles.update(d1=d1, d2=d2)
    return d, roles


def build_d() -> tuple[OrientedGraph, dict[str, int]]:
    return _k332_d()


def build_d_hat() -> tuple[OrientedGraph, dict[str, int]]:
    """Same as D but with the arc between d1 and d2 reversed."""
    d, roles = _k332_d()
    d1, d2 = roles["d1"], roles["d2"]
    return OrientedGraph(d.n, (d.arcs - {(d1, d2)}) | {(d2, d1)}), roles


COPIES_23 = ("D", "D'", "D^")


def _ddd() -> tuple[OrientedGraph, dict[str, int], dict]:
    d, droles = build_d()
    d_hat, _ = build_d_hat()
    d1, d2 = droles["d1"], droles["d2"]
    # the shared slot carries the D/D' direction d1 -> d2; D^'s own arc is dropped
    # before gluing and its reversed convention is kept in ``meta``
    d_hat_body = OrientedGraph(d_hat.n, d_hat.arcs - {(d2, d1)})
    g, label = glue([d, d, d_hat_body], [[(0, d1), (1, d1), (2, d1)], [(0, d2), (1, d2), (2, d2)]])
    roles = {"d1": label[(0, d1)], "d2": label[(0, d2)]}
    for ci, copy in enumerate(COPIES_23):
        for r, v in droles.items():
            if r not in ("d1", "d2"):
                roles[f"{copy}.{r}"] = label[(ci, v)]
    meta = {"d1d2": {"D": "d1->d2", "D'": "d1->d2", "D^": "d2->d1"}}
    return g, roles, meta


def build_3linked23() -> NamedConstruction:
    g, roles, meta = _ddd()
    return NamedConstruction("l3-23", complete_to_tournament(g), roles, g, meta)


def _copy_checks(t: Tournament, roles, prefix: str, d1: int, d2: int) -> bool:
    a = [roles[f"{prefix}.{x}"] for x in A3]
    b = [roles[f"{prefix}.{x}"] for x in B3]
    c2 = roles[f"{prefix}.c2"]
    return (
        all(t.has_arc(u, v) for u in a for v in b)
        and all(t.has_arc(u, d1) and t.has_arc(u, c2) for u in b)
        and all(t.has_arc(d2, v) and t.has_arc(c2, v) for v in a)
    )


def validate_3linked23(t: Tournament, roles: Mapping[str, int], skeleton: OrientedGraph | None = None,
                       meta: Mapping | None = None) -> dict[str, bool]:
    d1, d2 = roles["d1"], roles["d2"]
    checks = {"size": t.n == 23, "d1_to_d2": t.has_arc(d1, d2)}
    for copy in COPIES_23:
        checks[f"copy {copy}"] = _copy_checks(t, roles, copy, d1, d2)
    if skeleton is not None:
        pairs = [frozenset(a) for a in skeleton.arcs]
        checks["one_arc_per_pair"] = len(pairs) == len(set(pairs))
        checks["skeleton_in_tournament"] = all(t.has_arc(u, v) for u, v in skeleton.arcs)
    if meta is not None:
        checks["d_hat_reversed_convention"] = meta.get("d1d2", {}).get("D^") == "d2->d1"
    return checks


# -- 4- and 5-linked tournaments ---------------------------------------------

def build_klinked(k: int) -> NamedConstruction:
    """3 (k=4) or 7 (k=5) copies of the 23-vertex graph with d1 of copy i identified to d2 of copy i+1."""
    copies = {4: 3, 5: 7}.get(k)
    if copies is None:
        raise DomainError("build_klinked supports k = 4 or 5")
    h, hroles, _ = _ddd()
    d1, d2 = hroles["d1"], hroles["d2"]
    idents = [[(i, d1), ((i + 1) % copies, d2)] for i in range(copies)]
    g, label = glue([h] * copies, idents)
    roles = {}
    for i in range(copies):
        for r, v in hroles.items():
            roles[f"H{i + 1}.{r}"] = label[(i, v)]
    # d1 of H_i and d2 of H_{i+1} are one vertex; keep only the d1 role name
    roles = {r: v for r, v in roles.items() if not r.endswith(".d2")}
    meta = {"copies": copies, "ring": [label[(i, d1)] for i in range(copies)]}
    return NamedConstruction(f"l{k}-{g.n}", complete_to_tournament(g), roles, g, meta)


def validate_klinked(t: Tournament, roles: Mapping[str, int], copies: int) -> dict[str, bool]:
    checks = {"size": t.n == 23 * copies - copies}
    ring = [roles[f"H{i + 1}.d1"] for i in range(copies)]
    checks["ring_distinct"] = len(set(ring)) == copies
    # in H_i the arc d1 -> d2 runs from ring[i] to ring[i-1]
    for i in range(copies):
        d1, d2 = ring[i], ring[i - 1]
        checks[f"H{i + 1}"] = t.has_arc(d1, d2) and all(
            _copy_checks(t, {r.split(".", 1)[1]: v for r, v in roles.items() if r.startswith(f"H{i + 1}.")}, c, d1, d2)
            for c in COPIES_23
        )
    succ = {ring[i]: ring[i - 1] for i in range(copies)}
    seen, v = set(), ring[0]
    while v not in seen:
        seen.add(v)
        v = succ[v]
    checks["single_ring"] = len(seen) == copies
    return checks


# -- n-linked tournaments ----------------------------------------------------

TPRIME8_ROLES = A3 + B3 + ["c1", "c2"]


def _tprime8_arcs():
    return (
        _arcs_all(A3, B3) + _arcs_all(B3, ["c2"]) + _arcs_all(["c2"], A3)
        + _arcs_all(A3, ["c1"]) + _arcs_all(["c1"], B3)
    )


def build_tprime8() -> NamedConstruction:
    return _from_roles("tprime8", TPRIME8_ROLES, _tprime8_arcs())


def validate_tprime8(t: Tournament, roles: Mapping[str, int] | None = None) -> dict[str, bool]:
    roles = roles or {r: i + 1 for i, r in enumerate(TPRIME8_ROLES)}
    c1, c2 = roles["c1"], roles["c2"]
    linked = [(c2, roles[a], roles[b]) for a in A3 for b in B3]
    paths = [(roles[a], c1, roles[b]) for a in A3 for b in B3]
    return {
        "rules": all(t.has_arc(roles[u], roles[v]) for u, v in _tprime8_arcs()),
        "c2_triangles_consistent": len(linked) == 9 and all(is_consistent(t, tri) for tri in linked),
        "c1_triangles_split_into_paths": len(paths) == 9 and all(
            t.has_arc(a, b) and t.has_arc(a, c) and t.has_arc(c, b) for a, c, b in paths
        ),
    }


def build_nlinked(n: int) -> NamedConstruction:
    """(2n-3)^2 copies of T' with arcs b_{i,k} -> a_{i+1,j}, cyclically."""
    if n < 2:
        raise DomainError("build_nlinked needs n >= 2")
    copies = (2 * n - 3) ** 2
    base = build_tprime8()
    g, label = glue([base.graph] * copies)
    roles = {f"T{i + 1}.{r}": label[(i, v)] for i in range(copies) for r, v in base.roles.items()}
    extra = set()
    if copies > 1:
        for i in range(copies):
            j = (i + 1) % copies
            extra |= {(roles[f"T{i + 1}.{b}"], roles[f"T{j + 1}.{a}"]) for b in B3 for a in A3}
    skeleton = OrientedGraph(g.n, g.arcs | extra)
    return NamedConstruction(f"nlinked-{n}", complete_to_tournament(skeleton), roles, skeleton,
                             {"copies": copies, "n": n})


def validate_nlinked(t: Tournament, roles: Mapping[str, int], n: int) -> dict[str, bool]:
    copies = (2 * n - 3) ** 2
    checks = {"size": t.n == 8 * copies}
    ok_copies = True
    for i in range(copies):
        sub = {r.split(".", 1)[1]: v for r, v in roles.items() if r.startswith(f"T{i + 1}.")}
        ok_copies &= all(validate_tprime8(t, sub).values())
    checks["copies"] = ok_copies
    if copies > 1:
        checks["b_to_next_a"] = all(
            t.has_arc(roles[f"T{i + 1}.{b}"], roles[f"T{(i + 1) % copies + 1}.{a}"])
            for i in range(copies) for b in B3 for a in A3
        )
    return checks


# -- linked with a knotted component -----------------------------------------

TPRIME14_ROLES = X3 + Y3 + ["alpha", "y3p"] + A3 + B3


def _tprime14_arcs():
    arcs = [("y3", "alpha"), ("alpha", "y3p")] + _arcs_all(["y3p"], A3 + B3)
    return arcs + _ik12_arcs(with_y3_to_b=False)


def build_tprime14() -> NamedConstruction:
    return _from_roles("tprime14", TPRIME14_ROLES, _tprime14_arcs())


def validate_tprime14(t: Tournament, roles: Mapping[str, int] | None = None,
                      skeleton: OrientedGraph | None = None) -> dict[str, bool]:
    roles = roles or {r: i + 1 for i, r in enumerate(TPRIME14_ROLES)}
    checks = {"size": t.n == 14, "rules": all(t.has_arc(roles[u], roles[v]) for u, v in _tprime14_arcs())}
    checks.update(_k6_checks(t, roles))
    y3p = roles["y3p"]
    checks["y3p_source_of_ab_triangles"] = all(
        t.has_arc(y3p, roles[a]) and t.has_arc(y3p, roles[b]) and t.has_arc(roles[a], roles[b])
        for a in A3 for b in B3
    )
    if skeleton is not None:
        alpha = roles["alpha"]
        incident = {a for a in skeleton.arcs if alpha in a}
        checks["alpha_two_arcs"] = incident == {(roles["y3"], alpha), (alpha, y3p)}
    return checks


V_GROUPS = ((0, 1, 2), (3, 4, 5), (6, 7, 8))
W_GROUPS = ((0, 3, 6), (1, 4, 7), (2, 5, 8))


def build_linkknot107() -> NamedConstruction:
    base = build_tprime14()
    r = base.roles
    beta = OrientedGraph(1)
    idents = [[(i, r["alpha"]) for i in range(9)]]
    idents += [[(i, r["y3"]) for i in grp] for grp in V_GROUPS]
    idents += [[(i, r["y3p"]) for i in grp] for grp in W_GROUPS]
    g, label = glue([base.graph] * 9 + [beta], idents)
    roles = {"alpha": label[(0, r["alpha"])], "beta": label[(9, 1)]}
    for k in range(3):
        roles[f"v{k + 1}"] = label[(V_GROUPS[k][0], r["y3"])]
        roles[f"w{k + 1}"] = label[(W_GROUPS[k][0], r["y3p"])]
    for i in range(9):
        for role, v in r.items():
            if role not in ("alpha", "y3", "y3p"):
                roles[f"T{i + 1}.{role}"] = label[(i, v)]
    b = roles["beta"]
    extra = {(b, roles[f"w{k}"]) for k in (1, 2, 3)} | {(roles[f"v{k}"], b) for k in (1, 2, 3)}
    skeleton = OrientedGraph(g.n, g.arcs | extra)
    copy_of = {}
    for i in range(9):
        copy_of[i + 1] = {
            "y3": label[(i, r["y3"])],
            "y3p": label[(i, r["y3p"])],
            "body": sorted(label[(i, v)] for role, v in r.items() if role != "alpha"),
        }
    return NamedConstruction("linkknot107", complete_to_tournament(skeleton), roles, skeleton,
                             {"copies": copy_of})


def _reaches(t: Tournament, src: int, dst: int, allowed: set[int]) -> bool:
    seen, stack = {src}, [src]
    while stack:
        u = stack.pop()
        if u == dst:
            return True
        for v in allowed:
            if v not in seen and t.has_arc(u, v):
                seen.add(v)
                stack.append(v)
    return False


def validate_linkknot107(t: Tournament, roles: Mapping[str, int], meta: Mapping) -> dict[str, bool]:
    alpha, beta = roles["alpha"], roles["beta"]
    v = [roles[f"v{k}"] for k in (1, 2, 3)]
    w = [roles[f"w{k}"] for k in (1, 2, 3)]
    checks = {"size": t.n == 107}
    checks["k332_pattern"] = all(
        t.has_arc(alpha, wi) and t.has_arc(beta, wi) and t.has_arc(vi, alpha) and t.has_arc(vi, beta)
        for vi in v for wi in w
    )
    copies = meta["copies"]
    path_ok = True
    for wi in w:
        for vj in v:
            owners = [c for c in copies.values() if c["y3p"] == wi and c["y3"] == vj]
            path_ok &= len(owners) == 1 and _reaches(t, wi, vj, set(owners[0]["body"]))
    checks["alpha_w_path_v_triangles_consistent"] = path_ok
    checks["copies"] = all(
        ok
        for i, c in copies.items()
        for name, ok in validate_tprime14(t, _copy_roles(roles, i, c)).items()
        if name != "size"
    )
    return checks


def _copy_roles(roles, i, c):
    sub = {r.split(".", 1)[1]: x for r, x in roles.items() if r.startswith(f"T{i}.")}
    sub.update(alpha=roles["alpha"], y3=c["y3"], y3p=c["y3p"])
    return sub


# -- disjoint linking on 14 vertices -----------------------------------------

A5, B5, C4 = _names("a", 5), _names("b", 5), _names("c", 4)
DLP14_ROLES = A5 + B5 + C4


def build_dlp14() -> NamedConstruction:
    arcs = _arcs_all(C4, A5) + _arcs_all(A5, B5) + _arcs_all(B5, C4)
    return _from_roles("dlp14", DLP14_ROLES, arcs)


def _k332_ok(t: Tournament, a, b, c) -> bool:
    return all(is_consistent(t, (z, x, y)) and t.has_arc(z, x) for z in c for x in a for y in b)


def validate_dlp14(t: Tournament, roles: Mapping[str, int] | None = None) -> dict[str, bool]:
    """The first K_{3,3,2} is linked-triangle rich, and so is what survives
    deleting any disjoint pair of its (c, a, b) triangles."""
    roles = roles or {r: i + 1 for i, r in enumerate(DLP14_ROLES)}
    a = [roles[x] for x in A5]
    b = [roles[x] for x in B5]
    c = [roles[x] for x in C4]
    checks = {"size": t.n == 14, "first_k332": _k332_ok(t, a[:3], b[:3], c[:2])}
    removal_ok, pairs = True, 0
    for i, k in itertools.permutations(range(3), 2):
        for j, l in itertools.permutations(range(3), 2):
            pairs += 1
            gone = {a[i], a[k], b[j], b[l], c[0], c[1]}
            ra = [x for x in a if x not in gone]
            rb = [x for x in b if x not in gone]
            rc = [x for x in c if x not in gone]
            removal_ok &= len(ra) == 3 and len(rb) == 3 and len(rc) == 2 and _k332_ok(t, ra, rb, rc)
    checks["removal_leaves_k332"] = removal_ok and pairs == 36
    return checks


BUILDERS: dict[str, Callable[..., NamedConstruction]] = {
    "il8": build_il8,
    "ik12": build_ik12,
    "l3-23": build_3linked23,
    "l4-66": lambda: build_klinked(4),
    "l5-154": lambda: build_klinked(5),
    "tprime8": build_tprime8,
    "nlinked": build_nlinked,
    "tprime14": build_tprime14,
    "linkknot107": build_linkknot107,
    "dlp14": build_dlp14,
}


def build(name: str, n: int | None = None) -> NamedConstruction:
    if name not in BUILDERS:
        raise DomainError(f"unknown construction {name!r}; known: {sorted(BUILDERS)}")
    if name == "nlinked":
        return build_nlinked(n if n is not None else 3)
    return BUILDERS[name]()


def validate(con: NamedConstruction, graph: Tournament | None = None) -> dict[str, bool]:
    """Run the validator matching ``con.name`` against ``graph`` (default: its own tournament)."""
    t = graph if graph is not None else con.graph
    name = con.name
    if name == "il8":
        checks = validate_il8(t, con.roles)
    elif name == "ik12":
        checks = validate_ik12(t, con.roles)
    elif name == "l3-23":
        checks = validate_3linked23(t, con.roles, con.skeleton, con.meta)
    elif name.startswith("l4-") or name.startswith("l5-"):
        checks = validate_klinked(t, con.roles, con.meta["copies"])
    elif name == "tprime8":
        checks = validate_tprime8(t, con.roles)
    elif name.startswith("nlinked-"):
        checks = validate_nlinked(t, con.roles, con.meta["n"])
    elif name == "tprime14":
        checks = validate_tprime14(t, con.roles, con.skeleton)
    elif name == "linkknot107":
        checks = validate_linkknot107(t, con.roles, con.meta)
    elif name == "dlp14":
        checks = validate_dlp14(t, con.roles)
    else:
        raise DomainError(f"no validator for {name!r}")
    if graph is None:
        checks["skeleton_preserved"] = skeleton_preserved(con)
    return checks
