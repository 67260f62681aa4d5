"""GF(2) row reduction, linking-table simulations and the consistency gap.

Matrices are lists of int bitsets: bit ``j`` of ``rows[i]`` is entry (i, j).
Row and column indices are 0-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .digraph import DomainError


@dataclass(frozen=True)
class Gf2Matrix:
    rows: tuple[int, ...]
    ncols: int
    # oplog[i] is a bitset over original rows whose XOR gives rows[i]
    oplog: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if any(r < 0 or r >> self.ncols for r in self.rows):
            raise DomainError("row has bits beyond ncols")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> Gf2Matrix:
        ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise DomainError("ragged matrix")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(row)))
        return cls(tuple(rows), ncols)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.ncols)] for r in self.rows]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def __str__(self):
        return "\n".join("".join(str(x) for x in row) for row in self.to_lists())


def weight(v: int) -> int:
    return v.bit_count()


def rref(m: Gf2Matrix) -> tuple[Gf2Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form over GF(2), pivots taken left to right.

    Returns the reduced matrix (pivot rows first, zero rows last), the rank
    and the oplog expressing each output row as a XOR of input rows.
    """
    work = list(m.rows)
    ops = [1 << i for i in range(m.nrows)]
    r = 0
    for col in range(m.ncols):
        pivot = next((i for i in range(r, len(work)) if work[i] >> col & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        ops[r], ops[pivot] = ops[pivot], ops[r]
        for i in range(len(work)):
            if i != r and work[i] >> col & 1:
                work[i] ^= work[r]
                ops[i] ^= ops[r]
        r += 1
        if r == len(work):
            break
    return Gf2Matrix(tuple(work), m.ncols, tuple(ops)), r, tuple(ops)


def rank(m: Gf2Matrix) -> int:
    return rref(m)[1]


def combine_rows(m: Gf2Matrix, index_set) -> int:
    v = 0
    for i in index_set:
        v ^= m.rows[i]
    return v


@dataclass(frozen=True)
class IndexSelection:
    indices: frozenset[int]
    vector: int
    ncols: int
    branch: str = ""

    @property
    def weight(self) -> int:
        return weight(self.vector)

    def vector_list(self) -> list[int]:
        return [self.vector >> j & 1 for j in range(self.ncols)]


def _check_linking_matrix(m: Gf2Matrix, n: int) -> int:
    if n < 2:
        raise DomainError("n must be at least 2")
    size = (2 * n - 3) ** 2
    if m.nrows != size or m.ncols != size:
        raise DomainError(f"matrix must be {size}x{size} for n={n}")
    if any(not m.entry(i, i) for i in range(size)):
        raise DomainError("diagonal must be all ones")
    return size


def select_index_set(m: Gf2Matrix, n: int) -> IndexSelection:
    """Choose rows of the (2n-3)^2 square linking matrix whose XOR has at least ``2n - 3`` ones."""
    _check_linking_matrix(m, n)
    return select_rows(m, 2 * n - 3)


def select_rows(m: Gf2Matrix, need: int) -> IndexSelection:
    """Rows of a unit-diagonal square ``m`` whose XOR has at least ``need`` ones.

    With rank >= need the XOR of all nonzero reduced rows works, having a 1
    in every pivot column.  Otherwise every column still holds a 1 and there
    are fewer than ``need`` nonzero reduced rows, so one of them carries at
    least ``need`` ones whenever ``(need - 1)**2 < size``; the lowest such
    row is taken.
    """
    size = m.nrows
    if m.ncols != size or any(not m.entry(i, i) for i in range(size)):
        raise DomainError("matrix must be square with an all-ones diagonal")
    if (need - 1) ** 2 >= size:
        raise DomainError(f"need={need} is not guaranteed for a {size}x{size} matrix")
    reduced, r, ops = rref(m)
    if r >= need:
        v, idx = 0, 0
        for i in range(r):
            v ^= reduced.rows[i]
            idx ^= ops[i]
        branch = "full-rank"
    else:
        i = next((i for i in range(r) if weight(reduced.rows[i]) >= need), None)
        if i is None:
            raise AssertionError(f"no reduced row has {need} ones; counterexample:\n{m}")
        v, idx = reduced.rows[i], ops[i]
        branch = "heavy-row"
    indices = frozenset(k for k in range(m.nrows) if idx >> k & 1)
    return IndexSelection(indices, v, m.ncols, branch)


def simulate_zcycle_linking(m: Gf2Matrix, c: Sequence[int] | int, n: int) -> set[int]:
    """Targets j that the rerouted cycle links oddly: ``c_j xor V_j == 1``.

    ``c`` holds the parities of the original cycle's linking with each
    target and may flag at most ``n - 2`` of them.
    """
    size = _check_linking_matrix(m, n)
    if not isinstance(c, int):
        if len(c) != size:
            raise DomainError(f"c must have {size} entries")
        c = sum((int(x) & 1) << j for j, x in enumerate(c))
    if weight(c) > n - 2:
        raise DomainError(f"c has {weight(c)} odd entries; at most {n - 2} allowed")
    sel = select_index_set(m, n)
    z = c ^ sel.vector
    return {j for j in range(size) if z >> j & 1}


def random_linking_matrix(size: int, rng: random.Random, density: float = 0.5) -> Gf2Matrix:
    rows = []
    for i in range(size):
        r = 1 << i
        for j in range(size):
            if j != i and rng.random() < density:
                r |= 1 << j
        rows.append(r)
    return Gf2Matrix(tuple(rows), size)


@dataclass(frozen=True)
class PigeonholeInstance:
    """``incidence[t][b]``: target ``t`` links bin ``b`` (nonzero linking number)."""

    bins: tuple
    targets: tuple
    incidence: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.incidence) != len(self.targets) or any(len(r) != len(self.bins) for r in self.incidence):
            raise DomainError("incidence shape does not match bins x targets")
        for t, row in zip(self.targets, self.incidence):
            if sum(row) < 2:
                raise DomainError(f"target {t!r} links fewer than two bins")

    @classmethod
    def from_matrix(cls, incidence: Sequence[Sequence[bool]]) -> PigeonholeInstance:
        inc = tuple(tuple(bool(x) for x in row) for row in incidence)
        nbins = len(inc[0]) if inc else 0
        return cls(tuple(range(nbins)), tuple(range(len(inc))), inc)


def pigeonhole_select(inst: PigeonholeInstance, need: int):
    """A bin linked with at least ``need - 1`` targets, and ``need - 1`` of them.

    Each target links >= 2 bins, so the bins carry >= 2|targets| incidences;
    if that exceeds ``(need - 2)|bins|`` some bin carries ``need - 1``.
    """
    nb, nt = len(inst.bins), len(inst.targets)
    if 2 * nt <= (need - 2) * nb:
        raise DomainError(f"{nt} targets over {nb} bins do not force a bin with {need - 1} targets")
    for b in range(nb):
        hits = [inst.targets[t] for t in range(nt) if inst.incidence[t][b]]
        if len(hits) >= need - 1:
            return inst.bins[b], tuple(hits[: need - 1])
    raise AssertionError("counting bound violated; no qualifying bin")


# Bin order C1, C1', C1'+C1'', C1+C1'' with the alternating relation of the 3-link argument
SIGNS_3LINK = (1, -1, 1, -1)


def ring_signs(copies: int) -> tuple[int, ...]:
    """Signs for L_11..L_m1 (+) followed by Z and W (-) in the ring argument."""
    return (1,) * copies + (-1, -1)


def homology_incidence(link_values: Sequence[Sequence[int]], partners: Sequence[int],
                       signs: Sequence[int] = SIGNS_3LINK) -> PigeonholeInstance:
    """Turn a table of integer linking numbers into an incidence structure.

    Row t gives target t's linking numbers with each bin.  Each row must
    satisfy ``sum(sign_b * value_b) == 0`` and be nonzero at its partner bin;
    a zero sum with a nonzero term forces a second nonzero term.
    """
    nbins = len(signs)
    if len(partners) != len(link_values):
        raise DomainError("one partner bin per target required")
    incidence = []
    for t, (row, p) in enumerate(zip(link_values, partners)):
        if len(row) != nbins:
            raise DomainError(f"target {t} row has {len(row)} values, expected {nbins}")
        total = sum(s * v for s, v in zip(signs, row))
        if total != 0:
            raise DomainError(f"target {t}: signed sum {total} != 0")
        if row[p] == 0:
            raise DomainError(f"target {t}: zero linking with its partner bin {p}")
        incidence.append(tuple(v != 0 for v in row))
    return PigeonholeInstance(tuple(range(nbins)), tuple(range(len(incidence))), tuple(incidence))


def random_relation_table(ntargets: int, signs: Sequence[int], rng: random.Random,
                          bound: int = 8) -> tuple[list[list[int]], list[int]]:
    """Integer table satisfying the signed zero-sum, nonzero at a random partner bin.

    All values but one are drawn freely; the last solves the relation.  Rows
    whose solved value leaves ``[-bound, bound]`` are redrawn.
    """
    nb = len(signs)
    table, partners = [], []
    for _ in range(ntargets):
        while True:
            p = rng.randrange(nb)
            row = [rng.randint(-bound, bound) for _ in range(nb)]
            if row[p] == 0:
                row[p] = rng.choice((-1, 1)) * rng.randint(1, bound)
            solve = rng.choice([b for b in range(nb) if b != p])
            partial = sum(signs[b] * row[b] for b in range(nb) if b != solve)
            last = -partial * signs[solve]
            if abs(last) <= bound:
                row[solve] = last
                break
        table.append(row)
        partners.append(p)
    return table, partners


@dataclass(frozen=True)
class GapRow:
    n: int
    m_lower: int
    m_upper: int | None
    mprime_lower: int
    mprime_upper: int
    cg_lower: int
    cg_upper: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class GapTable:
    rows: tuple[GapRow, ...] = field(default_factory=tuple)

    def row(self, n: int) -> GapRow:
        return next(r for r in self.rows if r.n == n)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.rows]

    def to_markdown(self) -> str:
        head = "| n | m (K_m) | m' (tournament) | cg(n) |\n|---|---|---|---|"
        lines = [head]
        for r in self.rows:
            m = str(r.m_lower) if r.m_upper == r.m_lower else f">= {r.m_lower}"
            mp = str(r.mprime_lower) if r.mprime_lower == r.mprime_upper else f"{r.mprime_lower}..{r.mprime_upper}"
            cg = str(r.cg_upper) if r.cg_lower == r.cg_upper else f"<= {r.cg_upper}"
            lines.append(f"| {r.n} | {m} | {mp} | {cg} |")
        return "\n".join(lines) + "\n"


def tournament_upper_bound(n: int) -> int:
    """Order of the constructed intrinsically n-linked tournament."""
    return {2: 8, 3: 23, 4: 66, 5: 154}.get(n, 8 * (2 * n - 3) ** 2)


def gap_table(max_n: int) -> GapTable:
    """Known bounds on the consistency gap cg(n) = m' - m for 2 <= n <= max_n.

    m: order of the smallest intrinsically n-linked complete graph (6 for
    n = 2, 10 for n = 3, at least 3n beyond).  m': order of the smallest
    intrinsically n-linked tournament (exactly 8 for n = 2, at least 3n and
    at most the constructed tournament otherwise).
    """
    if max_n < 2:
        raise DomainError("max_n must be at least 2")
    rows = []
    for n in range(2, max_n + 1):
        if n == 2:
            rows.append(GapRow(2, 6, 6, 8, 8, 2, 2))
            continue
        m_lower = 10 if n == 3 else 3 * n
        m_upper = 10 if n == 3 else None
        mp_upper = tournament_upper_bound(n)
        rows.append(GapRow(n, m_lower, m_upper, 3 * n if n > 3 else 10, mp_upper, 0, mp_upper - m_lower))
    return GapTable(tuple(rows))
