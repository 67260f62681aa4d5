"""Embedding catalogues and the search for linkless / knotless labellings.

A catalogue lists every non-split link (pair of cycles) and every knotted
cycle of one fixed spatial embedding of K_n, with cycles written over the
embedding's vertex labels 1..n.  Placing a tournament T into the embedding
means choosing a bijection ``sigma`` from embedding labels to vertices of T.
The placement is a *certificate* when every catalogued link has a component
whose image is inconsistently oriented in T and every catalogued knot is
inconsistently oriented.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .digraph import CyclePattern, DomainError, Tournament, dual, is_consistent
from .isoenum import canonical_form, enumerate_tournaments

log = logging.getLogger(__name__)

DATA_ENV = "TOURLINK_DATA_DIR"
CATALOGUE_FILES = {
    "FMellorK7": "fmellor_k7.json",
    "AMTK8": "amt_k8.json",
    "CGK7": "cg_k7.json",
}


class ParseError(DomainError):
    pass


def parse_compact(s: str) -> CyclePattern | tuple[CyclePattern, CyclePattern]:
    """Parse ``"457-236"`` into a link or ``"15862347"`` into a knot."""
    parts = s.strip().split("-")
    if len(parts) > 2 or not all(p.isdigit() and "0" not in p for p in parts):
        raise ParseError(f"{s!r} is not in compact digit notation")
    cycles = []
    for part in parts:
        if len(part) < 3:
            raise ParseError(f"component {part!r} of {s!r} is shorter than 3")
        if len(set(part)) != len(part):
            raise ParseError(f"component {part!r} of {s!r} repeats a vertex")
        cycles.append(CyclePattern(tuple(int(c) for c in part)))
    if len(cycles) == 1:
        return cycles[0]
    return cycles[0], cycles[1]


def format_compact(entry: CyclePattern | tuple[CyclePattern, CyclePattern]) -> str:
    if isinstance(entry, CyclePattern):
        return "".join(map(str, entry.verts))
    return "-".join("".join(map(str, c.verts)) for c in entry)


@dataclass(frozen=True)
class EmbeddingCatalogue:
    name: str
    n: int
    links: tuple[tuple[CyclePattern, CyclePattern], ...] = ()
    knots: tuple[CyclePattern, ...] = ()

    def __post_init__(self):
        links, seen = [], set()
        for a, b in self.links:
            if set(a.verts) & set(b.verts):
                raise DomainError(f"link {format_compact((a, b))} has overlapping components")
            key = frozenset((a, b))
            if key not in seen:
                seen.add(key)
                links.append((a, b))
        knots = list(dict.fromkeys(self.knots))
        for c in [c for pair in links for c in pair] + knots:
            if not all(1 <= v <= self.n for v in c.verts):
                raise DomainError(f"cycle {c} uses a label outside 1..{self.n}")
        object.__setattr__(self, "links", tuple(links))
        object.__setattr__(self, "knots", tuple(knots))

    @classmethod
    def from_json(cls, data: dict) -> EmbeddingCatalogue:
        return cls(
            name=data["name"],
            n=int(data["n"]),
            links=tuple(parse_compact(s) for s in data.get("links", ())),
            knots=tuple(parse_compact(s) for s in data.get("knots", ())),
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "links": [format_compact(e) for e in self.links],
            "knots": [format_compact(e) for e in self.knots],
        }

    def entries(self) -> list[tuple[CyclePattern, ...]]:
        """Links and knots alike, as tuples of cycles that must not all be consistent."""
        return [tuple(pair) for pair in self.links] + [(k,) for k in self.knots]


def data_path(filename: str) -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override) / filename
    return Path(str(resources.files("tourlink") / "data" / filename))


def load_catalogue(name: str) -> EmbeddingCatalogue:
    try:
        filename = CATALOGUE_FILES[name]
    except KeyError:
        raise DomainError(f"unknown catalogue {name!r}; known: {sorted(CATALOGUE_FILES)}") from None
    return _load_file(data_path(filename))


@lru_cache(maxsize=None)
def _load_file(path: Path) -> EmbeddingCatalogue:
    with open(path, encoding="utf-8") as fh:
        return EmbeddingCatalogue.from_json(json.load(fh))


@dataclass(frozen=True)
class Certificate:
    """``labeling[l - 1]`` is the tournament vertex placed at embedding label ``l``.

    For ``kind == "apex-reduction"`` the labelling lives in ``sub``, which is a
    certificate for ``T`` with ``apex`` deleted (vertices renumbered in order).
    """

    kind: str
    catalogue: str
    labeling: tuple[int, ...] = ()
    apex: int | None = None
    sub: Certificate | None = None

    def to_json(self) -> dict:
        d = {"kind": self.kind, "catalogue": self.catalogue}
        if self.kind == "embedding-labeling":
            d["labeling"] = list(self.labeling)
        else:
            d["apex"] = self.apex
            d["sub"] = self.sub.to_json()
        return d


def _check_size(t: Tournament, cat: EmbeddingCatalogue) -> None:
    if t.n != cat.n:
        raise DomainError(f"tournament has {t.n} vertices but {cat.name} embeds K_{cat.n}")


def is_certified_labeling(t: Tournament, sigma: Sequence[int], cat: EmbeddingCatalogue) -> bool:
    _check_size(t, cat)
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, t.n + 1)):
        raise DomainError(f"{sigma} is not a bijection onto 1..{t.n}")
    for entry in cat.entries():
        if all(is_consistent(t, c.mapped(sigma)) for c in entry):
            return False
    return True


def apex_vertex(t: Tournament) -> int | None:
    """Lowest vertex of in- or out-degree n-1; no consistent cycle passes through it."""
    for v in range(1, t.n + 1):
        if t.out_degree(v) in (0, t.n - 1):
            return v
    return None


def validate_certificate(t: Tournament, cert: Certificate, cat: EmbeddingCatalogue,
                         sub_cat: EmbeddingCatalogue | None = None) -> bool:
    if cert.kind == "embedding-labeling":
        return cert.catalogue == cat.name and is_certified_labeling(t, cert.labeling, cat)
    if cert.kind == "apex-reduction":
        if cert.apex is None or cert.sub is None or t.out_degree(cert.apex) not in (0, t.n - 1):
            return False
        rest = t.induced([v for v in range(1, t.n + 1) if v != cert.apex])
        return validate_certificate(rest, cert.sub, sub_cat or cat)
    return False


@lru_cache(maxsize=None)
def _plan(cat: EmbeddingCatalogue):
    entries = [tuple(tuple(v - 1 for v in c.verts) for c in e) for e in cat.entries()]
    weight = [0] * cat.n
    for e in entries:
        for v in {v for c in e for v in c}:
            weight[v] += 1
    # most constrained label first
    order = sorted(range(cat.n), key=lambda l: (-weight[l], l))
    depth_of = {l: d for d, l in enumerate(order)}
    checks: list[list] = [[] for _ in range(cat.n)]
    for e in entries:
        checks[max(depth_of[v] for c in e for v in c)].append(e)
    return tuple(order), tuple(tuple(c) for c in checks)


def _cycle_consistent(out, sigma, cyc) -> bool:
    fwd = bwd = True
    k = len(cyc)
    for i in range(k):
        a, b = sigma[cyc[i]], sigma[cyc[(i + 1) % k]]
        if out[a] >> b & 1:
            bwd = False
        else:
            fwd = False
        if not (fwd or bwd):
            return False
    return True


def _search(out: tuple[int, ...], n: int, plan) -> tuple[int, ...] | None:
    order, checks = plan
    sigma = [-1] * n

    def rec(d: int, used: int) -> bool:
        if d == n:
            return True
        label = order[d]
        for v in range(n):
            if used >> v & 1:
                continue
            sigma[label] = v
            if not any(all(_cycle_consistent(out, sigma, c) for c in e) for e in checks[d]):
                if rec(d + 1, used | 1 << v):
                    return True
        sigma[label] = -1
        return False

    if rec(0, 0):
        return tuple(v + 1 for v in sigma)
    return None


def find_certificate(
    t: Tournament,
    cat: EmbeddingCatalogue,
    allow_apex: bool = False,
    labelings: Iterable[Sequence[int]] | None = None,
    apex_catalogue: EmbeddingCatalogue | None = None,
) -> Certificate | None:
    """Search for a certificate placing ``t`` into ``cat``'s embedding.

    With ``allow_apex`` and a vertex of full in- or out-degree, the vertex is
    dropped and the rest is certified against ``apex_catalogue`` (default
    CGK7 for an 8-vertex input).  ``labelings`` restricts the search to the
    given candidate labellings.
    """
    if allow_apex:
        v = apex_vertex(t)
        sub_cat = apex_catalogue
        if sub_cat is None:
            if t.n == cat.n + 1:
                sub_cat = cat
            elif t.n == 8 and cat.name == "AMTK8":
                sub_cat = load_catalogue("CGK7")
        if v is not None and sub_cat is not None:
            rest = t.induced([u for u in range(1, t.n + 1) if u != v])
            if sub_cat.name == "CGK7":
                sub = cg_certificate(rest)
            else:
                sub = find_certificate(rest, sub_cat)
            if sub is not None:
                return Certificate("apex-reduction", cat.name, apex=v, sub=sub)
        if t.n == cat.n + 1:
            return None
    _check_size(t, cat)
    if labelings is not None:
        for sigma in labelings:
            if is_certified_labeling(t, sigma, cat):
                return Certificate("embedding-labeling", cat.name, tuple(sigma))
        return None
    sigma = _search(t.out, t.n, _plan(cat))
    if sigma is None:
        return None
    return Certificate("embedding-labeling", cat.name, sigma)


def cg_certificate(t: Tournament) -> Certificate:
    """Place a 7-vertex tournament so the knotted Hamiltonian cycle is inconsistent.

    The identity placement works unless 1..7 is a consistent cycle; then
    swapping the images of 6 and 7 breaks the forward direction at 7->6 and
    the backward direction at 5->4.
    """
    if t.n != 7:
        raise DomainError("cg_certificate needs a 7-vertex tournament")
    cat = load_catalogue("CGK7")
    for sigma in ((1, 2, 3, 4, 5, 6, 7), (1, 2, 3, 4, 5, 7, 6)):
        if is_certified_labeling(t, sigma, cat):
            return Certificate("embedding-labeling", cat.name, sigma)
    raise AssertionError("neither placement certifies; the swap argument is broken")


RESIDUAL_FIXED_ARCS = (
    (1, 7), (4, 7), (5, 7), (6, 7), (7, 2), (7, 3), (4, 2), (4, 3),
    (2, 1), (2, 5), (2, 6), (3, 1), (3, 5), (3, 6), (5, 4), (1, 4), (6, 4),
)


def residual_candidates() -> list[Tournament]:
    """The 16 seven-vertex tournaments left open by the in-degree-4 case.

    Every arc is pinned except the triangle {1, 5, 6} and the pair {2, 3}.
    """
    out = []
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        arcs = list(RESIDUAL_FIXED_ARCS)
        arcs.append((2, 3) if d else (3, 2))
        arcs.append((1, 5) if a else (5, 1))
        arcs.append((1, 6) if b else (6, 1))
        arcs.append((5, 6) if c else (6, 5))
        out.append(Tournament.from_arcs(7, arcs))
    return out


def residual_family() -> list[Tournament]:
    """One labelled representative per isomorphism class of ``residual_candidates``."""
    seen, family = set(), []
    for t in residual_candidates():
        cf = canonical_form(t)
        if cf not in seen:
            seen.add(cf)
            family.append(t)
    return family


def residual_forms(include_duals: bool = True) -> set:
    forms = set()
    for t in residual_family():
        forms.add(canonical_form(t))
        if include_duals:
            forms.add(canonical_form(dual(t)))
    return forms


def fmellor_indegree5_labeling(t: Tournament, v: int, two: int | None = None) -> tuple[int, ...]:
    """Placement of a 7-vertex tournament with ``in_degree(v) == 5`` into FMellorK7.

    ``v`` goes to label 7, its unique out-neighbour to 3, ``two`` (default:
    lowest remaining vertex) to 2, two vertices joined to ``two`` the same way
    to 4 and 5, and the rest to 1 and 6.
    """
    if t.n != 7 or t.in_degree(v) != 5:
        raise DomainError("needs a 7-vertex tournament and a vertex of in-degree 5")
    (w,) = [u for u in range(1, 8) if t.has_arc(v, u)]
    rest = [u for u in range(1, 8) if u not in (v, w)]
    if two is None:
        two = rest[0]
    if two not in rest:
        raise DomainError(f"vertex {two} cannot take label 2")
    others = [u for u in rest if u != two]
    outs = [u for u in others if t.has_arc(two, u)]
    ins = [u for u in others if t.has_arc(u, two)]
    same = outs if len(outs) >= 2 else ins
    four, five = same[0], same[1]
    one, six = [u for u in others if u not in (four, five)]
    sigma = {1: one, 2: two, 3: w, 4: four, 5: five, 6: six, 7: v}
    return tuple(sigma[l] for l in range(1, 8))


AMT_PROOF_ARCS = ((4, 1), (5, 1), (7, 1), (8, 1), (8, 5), (6, 4))


def amt_proof_labeling(t: Tournament) -> tuple[int, ...]:
    """Placement of an 8-vertex tournament into AMTK8 realising the six proof arcs.

    Needs maximum in-degree 4, 5 or 6.  The vertex of maximum in-degree goes
    to label 1 and the images satisfy 4->1, 5->1, 7->1, 8->1, 8->5, 6->4.
    """
    if t.n != 8:
        raise DomainError("amt_proof_labeling needs an 8-vertex tournament")
    degs = t.in_degrees()
    top = max(degs)
    if top not in (4, 5, 6):
        raise DomainError(f"maximum in-degree {top} is not 4, 5 or 6")
    one = degs.index(top) + 1
    six = next(u for u in range(1, 9) if t.has_arc(one, u))
    w = [u for u in range(1, 9) if t.has_arc(u, one)]
    four = next(u for u in w if t.has_arc(six, u))
    rest_w = [u for u in w if u != four]
    p, q = rest_w[0], rest_w[1]
    eight, five = (p, q) if t.has_arc(p, q) else (q, p)
    seven = rest_w[2]
    two, three = [u for u in range(1, 9) if u not in (one, four, five, six, seven, eight)]
    sigma = {1: one, 2: two, 3: three, 4: four, 5: five, 6: six, 7: seven, 8: eight}
    return tuple(sigma[l] for l in range(1, 9))


@dataclass
class VerificationReport:
    n: int
    catalogue: str
    command: str
    outcomes: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def leftovers(self) -> list[dict]:
        return [o for o in self.outcomes if o["status"] == "leftover"]

    @property
    def unexplained(self) -> list[dict]:
        return [o for o in self.leftovers if not o.get("residual")]

    @property
    def ok(self) -> bool:
        return not self.unexplained

    def summary(self) -> dict:
        statuses = [o["status"] for o in self.outcomes]
        return {
            "classes": len(self.outcomes),
            "certified": statuses.count("certified"),
            "apex": statuses.count("apex"),
            "leftovers": len(self.leftovers),
            "unexplained": len(self.unexplained),
        }

    def to_json(self) -> dict:
        # wall time is left out so that reports are byte-identical across runs
        return {
            "schema": "tourlink.verify/1",
            "command": self.command,
            "n": self.n,
            "catalogue": self.catalogue,
            "ok": self.ok,
            "summary": self.summary(),
            "leftover_forms": [o["form"] for o in self.leftovers],
            "outcomes": self.outcomes,
        }


@dataclass(frozen=True)
class VerifyPolicy:
    allow_apex: bool = False
    search_dual: bool = True
    residual_audit: bool = False


VERIFY_COMMANDS = {
    "k7-linkless": (7, "FMellorK7", VerifyPolicy(allow_apex=False, residual_audit=True)),
    "k7-knotless": (7, "CGK7", VerifyPolicy()),
    "k8-knotless": (8, "AMTK8", VerifyPolicy(allow_apex=True)),
}


def _verify_one(args) -> dict:
    t, cat, policy, forms = args
    cf = canonical_form(t)
    outcome = {"form": cf.bitstring()}
    candidates = [(t, False)] + ([(dual(t), True)] if policy.search_dual else [])
    for tt, is_dual in candidates:
        cert = find_certificate(tt, cat, allow_apex=policy.allow_apex)
        if cert is not None:
            outcome["status"] = "apex" if cert.kind == "apex-reduction" else "certified"
            outcome["dual"] = is_dual
            outcome["certificate"] = cert.to_json()
            return outcome
    outcome["status"] = "leftover"
    if policy.residual_audit:
        outcome["residual"] = cf in forms
    return outcome


def verify_class(n: int, cat: EmbeddingCatalogue, policy: VerifyPolicy = VerifyPolicy(),
                 jobs: int = 1, command: str = "") -> VerificationReport:
    """Certify every isomorphism class of ``n``-vertex tournaments.

    Outcomes come back in canonical-form order regardless of ``jobs``.
    """
    if n not in (7, 8):
        raise DomainError("verify_class covers n = 7 and n = 8")
    start = time.perf_counter()
    forms = residual_forms() if policy.residual_audit else set()
    tasks = [(t, cat, policy, forms) for t in enumerate_tournaments(n, jobs=jobs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_verify_one, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        outcomes = [_verify_one(task) for task in tasks]
    report = VerificationReport(n, cat.name, command or f"verify-{cat.name}", outcomes)
    report.seconds = time.perf_counter() - start
    log.info("verified %d classes against %s in %.1fs", len(outcomes), cat.name, report.seconds)
    return report
