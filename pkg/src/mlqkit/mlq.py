"""Multiline queues: words, labellings, pairings, statistics, enumeration.

A multiline queue on n columns is a tuple of subsets of {1..n}, one per row,
listed bottom row first.  Straight queues have weakly decreasing row sizes
(the conjugate of the shape); arbitrary row sizes give generalized queues,
which are the same thing as binary matrices.
"""

import json
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .core import conjugate, is_partition, sort_to_partition
from .errors import BadRowIndex, NotStraight, ParseError, TooNarrow
from .matching import match_brackets, wrap_pairs


@dataclass(frozen=True)
class MultilineQueue:
    n: int
    rows: tuple

    def __init__(self, n, rows):
        rows = tuple(tuple(sorted(set(r))) for r in rows)
        for row in rows:
            for c in row:
                if not 1 <= c <= n:
                    raise ParseError(f"ball column {c} outside 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    @property
    def num_rows(self):
        return len(self.rows)

    def row(self, r):
        """Row r, 1-based from the bottom."""
        return self.rows[r - 1]

    def row_sizes(self):
        return tuple(len(r) for r in self.rows)

    def is_straight(self):
        s = self.row_sizes()
        return all(s[i] >= s[i + 1] for i in range(len(s) - 1))

    def shape(self):
        """Partition whose conjugate gives the row sizes (straight queues)."""
        if not self.is_straight():
            raise NotStraight(f"row sizes {self.row_sizes()}")
        sizes = tuple(s for s in self.row_sizes() if s > 0)
        return conjugate(sizes)

    def column_content(self):
        counts = [0] * self.n
        for row in self.rows:
            for c in row:
                counts[c - 1] += 1
        return tuple(counts)

    def trimmed(self):
        """Drop empty rows from the top."""
        rows = list(self.rows)
        while rows and not rows[-1]:
            rows.pop()
        return MultilineQueue(self.n, rows)

    def with_rows(self, rows):
        return MultilineQueue(self.n, rows)

    def to_text(self):
        body = "|".join(",".join(str(c) for c in row) for row in self.rows)
        return f"n={self.n};{body}"

    def to_json(self):
        return json.dumps({"n": self.n, "rows": [list(r) for r in self.rows]})

    def __str__(self):
        return self.to_text()


def parse_mlq(text: str) -> MultilineQueue:
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
            return MultilineQueue(data["n"], data["rows"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad queue json {text!r}") from exc
    if not text.startswith("n=") or ";" not in text:
        raise ParseError(f"bad queue {text!r}")
    head, _, body = text.partition(";")
    try:
        n = int(head[2:])
        rows = [
            [int(c) for c in part.split(",") if c] for part in body.split("|")
        ] if body else [[]]
        return MultilineQueue(n, rows)
    except ValueError as exc:
        raise ParseError(f"bad queue {text!r}") from exc


def row_word(m: MultilineQueue):
    """Ball columns scanned bottom row to top, left to right in each row."""
    return tuple(c for row in m.rows for c in row)


def column_word(m: MultilineQueue):
    """Ball rows scanned column by column, top down within each column."""
    out = []
    for c in range(1, m.n + 1):
        for r in range(m.num_rows, 0, -1):
            if c in m.rows[r - 1]:
                out.append(r)
    return tuple(out)


def biwords(m: MultilineQueue):
    """Row biword (lexicographic) and column biword (antilexicographic)."""
    entries = [(r, c) for r in range(1, m.num_rows + 1) for c in m.row(r)]
    by_row = sorted(entries)
    by_col = sorted(entries, key=lambda rc: (rc[1], -rc[0]))
    row_bw = (tuple(r for r, _ in by_row), tuple(c for _, c in by_row))
    col_bw = (tuple(c for _, c in by_col), tuple(r for r, _ in by_col))
    return row_bw, col_bw


def _two_row_match(upper, lower, cyclic=False):
    """Match an upper row (opens) against a lower row (closes), column order.

    Within a column the upper symbol precedes the lower one, matching the
    top-down column reading.  Returns (pairs, unmatched_opens,
    unmatched_closes, wrapping_pairs) as column lists.
    """
    events = []
    for c in sorted(set(upper) | set(lower)):
        if c in upper:
            events.append((c, True))
        if c in lower:
            events.append((c, False))
    pairs, opens, closes = match_brackets(events)
    wrapping = []
    if cyclic:
        wrapping = wrap_pairs(opens, closes)
        k = len(wrapping)
        opens, closes = opens[: len(opens) - k], closes[k:]
    return pairs, opens, closes, wrapping


def _check_straight(m: MultilineQueue):
    if not m.is_straight():
        raise NotStraight(f"row sizes {m.row_sizes()}")


def _pair_target(candidates, col, direction):
    """First candidate weakly right (+1) or left (-1) of col, cyclically.

    Returns (target, wrapped).
    """
    if direction > 0:
        ahead = [c for c in candidates if c >= col]
        if ahead:
            return min(ahead), False
        return min(candidates), True
    behind = [c for c in candidates if c <= col]
    if behind:
        return max(behind), False
    return max(candidates), True


def label_mlq(m: MultilineQueue):
    """Queueing labels and pairings of a straight multiline queue.

    Starting from the top row, each ball pairs to the first unlabelled ball
    weakly to its right in the row below, wrapping cyclically; balls pair in
    order of decreasing label, left to right within a label.  Returns the
    label map {(row, col): label} and the pairing multiset of triples
    (origin row, label, wrapped).
    """
    _check_straight(m)
    labels = {}
    pairings = []
    for r in range(m.num_rows, 1, -1):
        for c in m.row(r):
            labels.setdefault((r, c), r)
        free = set(m.row(r - 1))
        sources = sorted(m.row(r), key=lambda c: (-labels[(r, c)], c))
        for c in sources:
            target, wrapped = _pair_target(free, c, +1)
            free.discard(target)
            labels[(r - 1, target)] = labels[(r, c)]
            pairings.append((r, labels[(r, c)], 1 if wrapped else 0))
    if m.num_rows >= 1:
        for c in m.row(1):
            labels.setdefault((1, c), 1)
    return labels, pairings


def label_mlq_by_matching(m: MultilineQueue):
    """The same labelling computed by iterated cylindrical matching.

    Returns the label map and the wrap counts {(label, row): count} of
    cylindrically-but-not-classically matched balls per label and row.
    """
    _check_straight(m)
    labels = {}
    wraps = {}
    for r in range(m.num_rows, 1, -1):
        for c in m.row(r):
            labels.setdefault((r, c), r)
        for lab in range(m.num_rows, r - 1, -1):
            upper = [c for c in m.row(r) if labels[(r, c)] == lab]
            lower = [c for c in m.row(r - 1) if (r - 1, c) not in labels]
            if not upper:
                continue
            pairs, opens, _, wrapping = _two_row_match(upper, lower, cyclic=True)
            assert not opens, "straight queue must match all balls"
            for _, c in pairs + wrapping:
                labels[(r - 1, c)] = lab
            if wrapping:
                wraps[(lab, r)] = len(wrapping)
    if m.num_rows:
        for c in m.row(1):
            labels.setdefault((1, c), 1)
    return labels, wraps


def maj(m: MultilineQueue) -> int:
    """Major index: each wrapping pairing of label l from row r adds l-r+1."""
    _, pairings = label_mlq(m)
    return sum(delta * (lab - r + 1) for r, lab, delta in pairings)


def is_nonwrapping(m: MultilineQueue) -> bool:
    if m.is_straight():
        return maj(m) == 0
    return maj_g(m) == 0


def canonical_mlq(nu, n: int) -> MultilineQueue:
    """The left-justified queue of shape nu: row j holds columns 1..nu'_j."""
    cols = conjugate(nu)
    if cols and cols[0] > n:
        raise TooNarrow(f"shape {nu} needs {cols[0]} columns, have {n}")
    return MultilineQueue(n, [range(1, k + 1) for k in cols])


def projection(m: MultilineQueue):
    """Bottom-row labels left to right; anti-particles read 0 in the straight
    case and their generalized label otherwise."""
    labels, _, _ = label_gmlq(m)
    return tuple(labels[(1, c)] for c in range(1, m.n + 1))


def label_gmlq(m: MultilineQueue):
    """Particle and anti-particle labels of a generalized multiline queue.

    Top row: particles get the row number, anti-particles one less.  Each
    lower row is labelled from the row above in two phases: the s = #particles
    highest-priority sites pair weakly right to particles, the rest pair
    weakly left to anti-particles with the label decremented; priority is
    decreasing label, ties left to right.  Returns (labels for every site,
    particle wrap list [(source row, label)], anti wrap list).
    """
    L, n = m.num_rows, m.n
    labels = {}
    particle_wraps = []
    anti_wraps = []
    if L == 0:
        return labels, particle_wraps, anti_wraps
    top = set(m.row(L))
    for c in range(1, n + 1):
        labels[(L, c)] = L if c in top else L - 1
    for r in range(L - 1, 0, -1):
        word = [labels[(r + 1, c)] for c in range(1, n + 1)]
        order = sorted(range(1, n + 1), key=lambda c: (-word[c - 1], c))
        here = set(m.row(r))
        free_particles = set(here)
        free_antis = set(range(1, n + 1)) - here
        s = len(here)
        for src in order[:s]:
            lab = word[src - 1]
            target, wrapped = _pair_target(free_particles, src, +1)
            free_particles.discard(target)
            labels[(r, target)] = lab
            if wrapped:
                particle_wraps.append((r + 1, lab))
        for src in reversed(order[s:]):
            lab = word[src - 1]
            target, wrapped = _pair_target(free_antis, src, -1)
            free_antis.discard(target)
            labels[(r, target)] = lab - 1
            if wrapped:
                anti_wraps.append((r + 1, lab))
    return labels, particle_wraps, anti_wraps


def maj_g(m: MultilineQueue) -> int:
    """Generalized major index: right wraps count positively, left wraps
    negatively, each weighted by label - source row + 1."""
    _, particle_wraps, anti_wraps = label_gmlq(m)
    plus = sum(lab - r + 1 for r, lab in particle_wraps)
    minus = sum(lab - r + 1 for r, lab in anti_wraps)
    return plus - minus


def sigma(m: MultilineQueue, i: int) -> MultilineQueue:
    """Row-swapping involution: rows i and i+1 exchange their cylindrically
    unmatched balls; the row-size vector picks up the transposition s_i."""
    if not 1 <= i < m.num_rows:
        raise BadRowIndex(f"i={i} with {m.num_rows} rows")
    upper, lower = set(m.row(i + 1)), set(m.row(i))
    if len(upper) == len(lower):
        return m
    _, opens, closes, _ = _two_row_match(upper, lower, cyclic=True)
    rows = [set(r) for r in m.rows]
    for c in opens:
        rows[i].remove(c)
        rows[i - 1].add(c)
    for c in closes:
        rows[i - 1].remove(c)
        rows[i].add(c)
    return m.with_rows(rows)


def _indicator_sets(word, top):
    """Nested supports {c : word_c >= j} for j = 1..top."""
    return [
        {c for c, v in enumerate(word, start=1) if v >= j} for j in range(1, top + 1)
    ]


def energy_levels(m: MultilineQueue):
    """Wrapping counts per adjacent row pair and indicator level.

    Entry (r, j) counts the wrapping pairings of the level-j indicator of the
    labels of row r against the queue at row r-1.
    """
    labels, _, _ = label_gmlq(m)
    L = m.num_rows
    table = {}
    for r in range(2, L + 1):
        word = [labels[(r, c)] for c in range(1, m.n + 1)]
        below = set(m.row(r - 1))
        for j, support in enumerate(_indicator_sets(word, L), start=1):
            _, _, _, wrapping = _two_row_match(support, below, cyclic=True)
            table[(r, j)] = len(wrapping)
    return table


def energy_h(m: MultilineQueue) -> int:
    """Total energy: sum of all wrapping counts in the level table."""
    return sum(energy_levels(m).values())


def enumerate_mlq(lam, n: int, shard=None):
    """All multiline queues of shape lam on n columns, lexicographically."""
    return enumerate_gmlq(conjugate(lam), n, shard)


def enumerate_gmlq(alpha, n: int, shard=None):
    """All queues with row sizes alpha on n columns, bottom row slowest."""
    if any(a > n for a in alpha):
        raise TooNarrow(f"row sizes {alpha} exceed {n} columns")
    per_row = [combinations(range(1, n + 1), a) for a in alpha]
    gen = product(*per_row)
    for idx, rows in enumerate(gen):
        if shard is not None and idx % shard[1] != shard[0]:
            continue
        yield MultilineQueue(n, rows)


def count_mlq(lam, n: int) -> int:
    return prod_binom(conjugate(lam), n)


def prod_binom(sizes, n: int) -> int:
    out = 1
    for a in sizes:
        out *= comb(n, a)
    return out


def stationary_counts(lam, n: int):
    """How many queues of shape lam project onto each bottom-row state."""
    if len(lam) > n:
        raise TooNarrow(f"{len(lam)} particle types on {n} sites")
    counts = {}
    for m in enumerate_mlq(lam, n):
        state = projection(m)
        counts[state] = counts.get(state, 0) + 1
    return counts


def gmlq_sizes(alpha, n: int) -> int:
    return prod_binom(alpha, n)


def all_binary_matrices(num_rows: int, n: int):
    """Every generalized queue on num_rows rows and n columns."""
    cells = [(r, c) for r in range(1, num_rows + 1) for c in range(1, n + 1)]
    for mask in range(1 << len(cells)):
        rows = [[] for _ in range(num_rows)]
        for k, (r, c) in enumerate(cells):
            if mask >> k & 1:
                rows[r - 1].append(c)
        yield MultilineQueue(n, rows)


def sort_alpha_check(alpha):
    """Partition obtained by sorting alpha; sanity helper for callers."""
    lam = sort_to_partition(alpha)
    assert is_partition(lam)
    return lam
