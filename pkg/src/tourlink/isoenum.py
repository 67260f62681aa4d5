"""Canonical forms and isomorph-free enumeration of tournaments."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .digraph import DomainError, Tournament, relabel

MAX_CANONICAL_N = 10
MAX_ENUM_N = 8


class UnsupportedSizeError(DomainError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Least orientation bitstring over all relabellings.

    ``key`` reads the column-major pair sequence (1,2), (1,3), (2,3), ...
    as a binary number with the first pair most significant; a bit is 1 when
    the arc runs from the lower to the higher position.
    """

    n: int
    key: int

    def bitstring(self) -> str:
        m = self.n * (self.n - 1) // 2
        return format(self.key, f"0{m}b") if m else ""

    def tournament(self) -> Tournament:
        """The representative whose own bitstring is this form."""
        m = self.n * (self.n - 1) // 2
        bits = 0
        for k in range(m):
            if self.key >> (m - 1 - k) & 1:
                bits |= 1 << k
        return Tournament(self.n, bits)


def _canonical_search(n: int, out: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # Level-by-level lexicographic minimisation; every partial placement that
    # ties for the least prefix is kept, so the result is the exact minimum.
    partials = [((v,), 1 << v) for v in range(n)]
    key = 0
    for j in range(1, n):
        best = None
        nxt = []
        for perm, used in partials:
            for v in range(n):
                if used >> v & 1:
                    continue
                chunk = 0
                for u in perm:
                    chunk = chunk << 1 | (out[u] >> v & 1)
                if best is None or chunk < best:
                    best = chunk
                    nxt = [(perm + (v,), used | 1 << v)]
                elif chunk == best:
                    nxt.append((perm + (v,), used | 1 << v))
        key = key << j | best
        partials = nxt
    return key, partials[0][0]


def canonical_form(t: Tournament) -> CanonicalForm:
    if t.n > MAX_CANONICAL_N:
        raise UnsupportedSizeError(f"canonical_form supports n <= {MAX_CANONICAL_N}, got {t.n}")
    key, _ = _canonical_search(t.n, t.out)
    return CanonicalForm(t.n, key)


def canonical_labeling(t: Tournament) -> tuple[int, ...]:
    """A relabelling sigma (``sigma[u - 1]`` = new label of u) taking ``t`` to its canonical representative."""
    if t.n > MAX_CANONICAL_N:
        raise UnsupportedSizeError(f"canonical_labeling supports n <= {MAX_CANONICAL_N}, got {t.n}")
    _, order = _canonical_search(t.n, t.out)
    sigma = [0] * t.n
    for pos, v in enumerate(order):
        sigma[v] = pos + 1
    return tuple(sigma)


def is_isomorphic(s: Tournament, t: Tournament) -> bool:
    return s.n == t.n and canonical_form(s) == canonical_form(t)


def all_labelings(n: int) -> Iterator[tuple[int, ...]]:
    """All permutations of 1..n in lexicographic order."""
    if n > MAX_ENUM_N:
        raise UnsupportedSizeError(f"all_labelings supports n <= {MAX_ENUM_N}, got {n}")
    return itertools.permutations(range(1, n + 1))


def _extensions_key(args: tuple[int, tuple[int, ...]]) -> list[int]:
    n, out = args
    keys = []
    for mask in range(1 << n):
        # mask bit u set: old vertex u beats the new vertex
        new_out = [o | ((mask >> u & 1) << n) for u, o in enumerate(out)]
        new_out.append(~mask & ((1 << n) - 1))
        keys.append(_canonical_search(n + 1, tuple(new_out))[0])
    return keys


@lru_cache(maxsize=None)
def _class_keys(n: int, jobs: int = 1) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    smaller = [CanonicalForm(n - 1, k).tournament() for k in _class_keys(n - 1, jobs)]
    tasks = [(n - 1, t.out) for t in smaller]
    found: set[int] = set()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for keys in pool.map(_extensions_key, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                found.update(keys)
    else:
        for task in tasks:
            found.update(_extensions_key(task))
    return tuple(sorted(found))


def enumerate_tournaments(n: int, jobs: int = 1) -> Iterator[Tournament]:
    """One tournament per isomorphism class, in canonical-form order.

    Classes on ``n`` vertices come from extending each ``n - 1`` vertex
    representative by a new vertex in all ``2**(n-1)`` ways and deduplicating
    by canonical form.  Every representative is its own canonical form.
    """
    if not 3 <= n <= MAX_ENUM_N:
        raise UnsupportedSizeError(f"enumerate_tournaments supports 3 <= n <= {MAX_ENUM_N}, got {n}")
    for key in _class_keys(n, max(1, jobs)):
        yield CanonicalForm(n, key).tournament()


def brute_force_classes(n: int) -> set[CanonicalForm]:
    """Canonicalise every one of the ``2**(n(n-1)/2)`` orientations of K_n."""
    m = n * (n - 1) // 2
    return {canonical_form(Tournament(n, bits)) for bits in range(1 << m)}


def brute_force_canonical(t: Tournament) -> CanonicalForm:
    """Minimum over literally all n! relabellings; reference for small n."""
    m = t.n * (t.n - 1) // 2
    best = None
    for sigma in itertools.permutations(range(1, t.n + 1)):
        r = relabel(t, sigma)
        key = 0
        for k in range(m):
            key = key << 1 | (r.bits >> k & 1)
        if best is None or key < best:
            best = key
    return CanonicalForm(t.n, best)
