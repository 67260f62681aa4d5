"""Oriented graphs, tournaments and the surgeries used to build them.

Vertices are labelled ``1..n`` everywhere in the public API.  Internally a
tournament keeps one out-neighbour bitmask per vertex (bit ``v - 1`` set for
an arc to ``v``) which is what the hot loops in enumeration and certificate
search consume.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


class ContractionError(DomainError):
    """Consistent edge contraction was requested where it is not allowed."""


class GlueConflictError(DomainError):
    """Identifying vertices would put arcs in both directions on one pair."""


def pair_index(i: int, j: int) -> int:
    """Position of the unordered pair ``{i, j}`` (1-based) in column-major order.

    Pairs are ordered (1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ...
    """
    if i == j:
        raise DomainError("a pair needs two distinct vertices")
    if i > j:
        i, j = j, i
    return (j - 1) * (j - 2) // 2 + (i - 1)


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= n:
        raise DomainError(f"vertex {v!r} out of range 1..{n}")


@dataclass(frozen=True)
class Tournament:
    """A complete oriented graph.

    ``bits`` is the upper-triangular orientation matrix flattened in
    column-major pair order: bit ``pair_index(i, j)`` is set iff the arc runs
    ``i -> j`` (low to high).
    """

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"tournament size {self.n} must be positive")
        if self.bits < 0 or self.bits >> (self.n * (self.n - 1) // 2):
            raise DomainError("orientation bits exceed the number of vertex pairs")

    @classmethod
    def from_out_masks(cls, out: Sequence[int]) -> Tournament:
        n = len(out)
        bits = 0
        for j in range(1, n):
            for i in range(j):
                if out[i] >> j & 1:
                    bits |= 1 << pair_index(i + 1, j + 1)
        t = cls(n, bits)
        t.__dict__["out"] = tuple(out)
        return t

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
        """Build from an explicit arc list; every pair must appear exactly once."""
        out = [0] * n
        seen = set()
        for u, v in arcs:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise DomainError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DomainError(f"pair {key} listed twice")
            seen.add(key)
            out[u - 1] |= 1 << (v - 1)
        if len(seen) != n * (n - 1) // 2:
            raise DomainError("arc list does not cover every vertex pair")
        return cls.from_out_masks(out)

    @classmethod
    def transitive(cls, n: int) -> Tournament:
        """All arcs low -> high."""
        return cls(n, (1 << (n * (n - 1) // 2)) - 1)

    @cached_property
    def out(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for j in range(2, self.n + 1):
            for i in range(1, j):
                if self.bits >> pair_index(i, j) & 1:
                    masks[i - 1] |= 1 << (j - 1)
                else:
                    masks[j - 1] |= 1 << (i - 1)
        return tuple(masks)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u - 1] >> (v - 1) & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(1, self.n + 1)
            for v in range(1, self.n + 1)
            if self.out[u - 1] >> (v - 1) & 1
        ]

    def out_degree(self, v: int) -> int:
        return self.out[v - 1].bit_count()

    def in_degree(self, v: int) -> int:
        return self.n - 1 - self.out_degree(v)

    def in_degrees(self) -> tuple[int, ...]:
        return tuple(self.in_degree(v) for v in range(1, self.n + 1))

    def induced(self, vertices: Sequence[int]) -> Tournament:
        """Sub-tournament on ``vertices``, renumbered 1..k in the given order."""
        idx = [v - 1 for v in vertices]
        out = []
        for u in idx:
            m = 0
            for k, v in enumerate(idx):
                if self.out[u] >> v & 1:
                    m |= 1 << k
            out.append(m)
        return Tournament.from_out_masks(out)

    def to_oriented(self) -> OrientedGraph:
        return OrientedGraph(self.n, frozenset(self.arcs()))

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs()]}


@dataclass(frozen=True)
class OrientedGraph:
    """A partial tournament: at most one arc per unordered pair."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            _check_vertex(self.n, u)
            _check_vertex(self.n, v)
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if (v, u) in arcs:
                raise DomainError(f"both {u}->{v} and {v}->{u} present")

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, v: int) -> set[int]:
        return {b for a, b in self.arcs if a == v}

    def in_neighbors(self, v: int) -> set[int]:
        return {a for a, b in self.arcs if b == v}

    def neighbors(self, v: int) -> set[int]:
        return self.out_neighbors(v) | self.in_neighbors(v)

    def is_tournament(self) -> bool:
        return len(self.arcs) == self.n * (self.n - 1) // 2

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in sorted(self.arcs)]}


def from_json(data: Mapping) -> OrientedGraph | Tournament:
    """Inverse of ``to_json``; returns a Tournament when every pair is covered."""
    g = OrientedGraph(int(data["n"]), frozenset(tuple(a) for a in data["arcs"]))
    if g.is_tournament():
        return Tournament.from_arcs(g.n, g.arcs)
    return g


def dumps(g: OrientedGraph | Tournament) -> str:
    return json.dumps(g.to_json(), separators=(",", ":"))


def to_dot(g: OrientedGraph | Tournament, name: str = "G", labels: Mapping[int, str] | None = None) -> str:
    arcs = sorted(g.arcs()) if isinstance(g, Tournament) else sorted(g.arcs)
    lines = [f"digraph {name} {{"]
    for v in range(1, g.n + 1):
        label = labels.get(v, str(v)) if labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    lines.extend(f"  {u} -> {v};" for u, v in arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class CyclePattern:
    """An unoriented simple cycle, compared up to rotation and reflection."""

    verts: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(int(v) for v in self.verts)
        object.__setattr__(self, "verts", verts)
        if len(verts) < 3:
            raise DomainError(f"cycle {verts} has fewer than 3 vertices")
        if len(set(verts)) != len(verts):
            raise DomainError(f"cycle {verts} repeats a vertex")

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        """Least rotation/reflection, starting at the minimum label."""
        vs = self.verts
        k = vs.index(min(vs))
        fwd = vs[k:] + vs[:k]
        bwd = (fwd[0],) + tuple(reversed(fwd[1:]))
        return min(fwd, bwd)

    def __eq__(self, other):
        if not isinstance(other, CyclePattern):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __len__(self):
        return len(self.verts)

    def __repr__(self):
        return f"CyclePattern({''.join(map(str, self.verts)) if max(self.verts) < 10 else self.verts})"

    def edges(self) -> list[tuple[int, int]]:
        """Consecutive pairs in the forward traversal, closing the cycle."""
        vs = self.verts
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def mapped(self, sigma: Mapping[int, int] | Sequence[int]) -> CyclePattern:
        """Image under a labelling; a sequence is read as ``sigma[label - 1]``."""
        if isinstance(sigma, Mapping):
            return CyclePattern(tuple(sigma[v] for v in self.verts))
        return CyclePattern(tuple(sigma[v - 1] for v in self.verts))


@dataclass(frozen=True)
class DirectedCycle:
    """A cycle with a fixed traversal direction; each step must be an arc of ``host``."""

    verts: tuple[int, ...]
    host: Tournament | OrientedGraph = field(repr=False, compare=False)

    def __post_init__(self):
        pattern = CyclePattern(self.verts)
        for u, v in pattern.edges():
            if not self.host.has_arc(u, v):
                raise DomainError(f"{u}->{v} is not an arc of the host graph")


def arc_direction(t: Tournament, u: int, v: int) -> tuple[int, int]:
    """Return the arc between ``u`` and ``v`` as ``(tail, head)``."""
    _check_vertex(t.n, u)
    _check_vertex(t.n, v)
    if u == v:
        raise DomainError("arc_direction needs two distinct vertices")
    return (u, v) if t.has_arc(u, v) else (v, u)


def _as_pattern(p) -> CyclePattern:
    return p if isinstance(p, CyclePattern) else CyclePattern(tuple(p))


def is_consistent(t: Tournament, p) -> bool:
    """True iff one traversal direction of ``p`` follows arcs of ``t`` throughout."""
    p = _as_pattern(p)
    for v in p.verts:
        _check_vertex(t.n, v)
    edges = p.edges()
    if all(t.has_arc(u, v) for u, v in edges):
        return True
    return all(t.has_arc(v, u) for u, v in edges)


def killed_by_partial(arcs: Iterable[tuple[int, int]], p) -> bool:
    """True iff some arc contradicts each traversal direction of ``p``.

    Then no completion of the partial orientation makes ``p`` consistent.
    """
    arcs = set(arcs)
    for u, v in arcs:
        if (v, u) in arcs:
            raise DomainError(f"conflicting arcs {u}->{v} and {v}->{u}")
    edges = _as_pattern(p).edges()
    fwd_dead = any((v, u) in arcs for u, v in edges)
    bwd_dead = any((u, v) in arcs for u, v in edges)
    return fwd_dead and bwd_dead


def dual(t: Tournament) -> Tournament:
    """Reverse every arc."""
    return Tournament(t.n, t.bits ^ ((1 << (t.n * (t.n - 1) // 2)) - 1))


def _check_bijection(n: int, sigma: Sequence[int]) -> None:
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise DomainError(f"{tuple(sigma)} is not a permutation of 1..{n}")


def relabel(t: Tournament, sigma: Sequence[int] | Mapping[int, int]) -> Tournament:
    """Image of ``t`` under ``u -> sigma(u)``: arc(σu, σv) iff arc(u, v).

    ``sigma`` is a mapping or a sequence with ``sigma[u - 1]`` the image of u.
    """
    if isinstance(sigma, Mapping):
        sigma = [sigma.get(v) for v in range(1, t.n + 1)]
    _check_bijection(t.n, sigma)
    out = [0] * t.n
    for u in range(t.n):
        m = t.out[u]
        su = sigma[u] - 1
        while m:
            low = m & -m
            v = low.bit_length() - 1
            out[su] |= 1 << (sigma[v] - 1)
            m ^= low
    return Tournament.from_out_masks(out)


def consistent_edge_contraction(g: OrientedGraph, e: tuple[int, int]) -> tuple[OrientedGraph, dict[int, int]]:
    """Identify the ends of arc ``v -> w``.

    Allowed only when ``v`` is a sink or ``w`` a source once ``e`` is removed.
    The merged vertex takes the smaller of the two labels' position; vertices
    are renumbered ``1..n-1`` and the returned map sends old labels to new.
    """
    v, w = e
    if (v, w) not in g.arcs:
        raise DomainError(f"{v}->{w} is not an arc of the graph")
    rest = g.arcs - {(v, w)}
    v_sink = not any(a == v for a, _ in rest)
    w_source = not any(b == w for _, b in rest)
    if not (v_sink or w_source):
        raise ContractionError(f"{v} is not a sink and {w} is not a source after removing {v}->{w}")
    keep, gone = min(v, w), max(v, w)
    mapping = {}
    for x in range(1, g.n + 1):
        y = keep if x == gone else x
        mapping[x] = y if y < gone else y - 1
    merged = set()
    for a, b in rest:
        ma, mb = mapping[a], mapping[b]
        if (mb, ma) in merged:
            raise ContractionError(f"contraction would create both {ma}->{mb} and {mb}->{ma}")
        merged.add((ma, mb))
    return OrientedGraph(g.n - 1, frozenset(merged)), mapping


def vertex_expansion(
    g: OrientedGraph, v: int, in_side: Iterable[int], out_side: Iterable[int]
) -> tuple[OrientedGraph, dict[int, int], tuple[int, int]]:
    """Replace ``v`` by an arc ``d1 -> d2``.

    Neighbours in ``in_side`` become in-neighbours of ``d1``; neighbours in
    ``out_side`` become out-neighbours of ``d2``.  ``d1`` keeps the label of
    ``v``'s slot and ``d2`` is appended as vertex ``n + 1``.  Returns the new
    graph, the map old label -> new label, and ``(d1, d2)``.
    """
    _check_vertex(g.n, v)
    in_side, out_side = set(in_side), set(out_side)
    if in_side & out_side:
        raise DomainError("in_side and out_side overlap")
    if in_side | out_side != g.neighbors(v):
        raise DomainError(f"partition does not match the neighbourhood of {v}")
    d1, d2 = v, g.n + 1
    arcs = {(a, b) for a, b in g.arcs if v not in (a, b)}
    arcs |= {(u, d1) for u in in_side}
    arcs |= {(d2, u) for u in out_side}
    arcs.add((d1, d2))
    mapping = {x: x for x in range(1, g.n + 1)}
    return OrientedGraph(g.n + 1, frozenset(arcs)), mapping, (d1, d2)


def glue(
    graphs: Sequence[OrientedGraph | Tournament],
    identifications: Iterable[Iterable[tuple[int, int]]] = (),
) -> tuple[OrientedGraph, dict[tuple[int, int], int]]:
    """Disjoint union with the given vertex classes identified.

    Each identification class is a collection of ``(graph_index, vertex)``.
    New labels are handed out in order of first appearance, scanning graphs
    then vertices.  Returns the glued graph and the provenance map
    ``(graph_index, vertex) -> new label``.
    """
    rep: dict[tuple[int, int], tuple[int, int]] = {}
    for cls in identifications:
        members = sorted(set(cls))
        for gi, x in members:
            if not 0 <= gi < len(graphs):
                raise DomainError(f"graph index {gi} out of range")
            _check_vertex(graphs[gi].n, x)
            if (gi, x) in rep:
                raise DomainError(f"vertex {(gi, x)} appears in two identification classes")
            rep[(gi, x)] = members[0]
    label: dict[tuple[int, int], int] = {}
    by_rep: dict[tuple[int, int], int] = {}
    for gi, g in enumerate(graphs):
        for x in range(1, g.n + 1):
            r = rep.get((gi, x), (gi, x))
            if r not in by_rep:
                by_rep[r] = len(by_rep) + 1
            label[(gi, x)] = by_rep[r]
    arcs: set[tuple[int, int]] = set()
    for gi, g in enumerate(graphs):
        src = g.arcs() if isinstance(g, Tournament) else g.arcs
        for a, b in src:
            u, v = label[(gi, a)], label[(gi, b)]
            if u == v:
                raise GlueConflictError(f"arc {a}->{b} of graph {gi} collapses to a loop")
            if (v, u) in arcs:
                raise GlueConflictError(f"merged pair {{{u}, {v}}} would carry arcs both ways")
            arcs.add((u, v))
    return OrientedGraph(len(by_rep), frozenset(arcs)), label


def complete_to_tournament(g: OrientedGraph | Tournament, policy: str = "low-high") -> Tournament:
    """Orient every missing pair; existing arcs are kept.

    ``policy`` is ``"low-high"`` (default) or ``"high-low"``.
    """
    if isinstance(g, Tournament):
        return g
    if policy not in ("low-high", "high-low"):
        raise DomainError(f"unknown completion policy {policy!r}")
    out = [0] * g.n
    for a, b in g.arcs:
        out[a - 1] |= 1 << (b - 1)
    for i, j in itertools.combinations(range(g.n), 2):
        if not (out[i] >> j & 1 or out[j] >> i & 1):
            if policy == "low-high":
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return Tournament.from_out_masks(out)
