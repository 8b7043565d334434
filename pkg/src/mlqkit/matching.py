"""Parenthesis matching on words and the word operators it induces.

For a fixed letter i, every i+1 in a word is an open parenthesis and every i
a closed one; the signature rule matches open/close pairs that are adjacent
or separated only by matched pairs.  The cylindrical variant additionally
matches the remaining opens to the remaining closes around the circle.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class MatchData:
    """Outcome of matching letters i+1 (opens) against i (closes).

    All positions are 1-based word positions; letters other than i and i+1
    never appear.  In cyclic mode min(#unmatched opens, #unmatched closes)
    is zero and the extra pairs are recorded in wrapping_pairs.
    """

    positions_of_i: tuple
    positions_of_i_plus_1: tuple
    matched_pairs: tuple
    unmatched_opens: tuple
    unmatched_closes: tuple
    cyclic: bool = False
    wrapping_pairs: tuple = field(default=())


def match_brackets(events):
    """Run the signature rule over (position, is_open) events in word order.

    Returns (matched_pairs, unmatched_opens, unmatched_closes), each pair
    being (open_position, close_position).
    """
    stack = []
    pairs = []
    closes = []
    for pos, is_open in events:
        if is_open:
            stack.append(pos)
        elif stack:
            pairs.append((stack.pop(), pos))
        else:
            closes.append(pos)
    return pairs, stack, closes


def wrap_pairs(unmatched_opens, unmatched_closes):
    """Cyclic completion: pair trailing opens with leading closes, outside in."""
    k = min(len(unmatched_opens), len(unmatched_closes))
    return [(unmatched_opens[-1 - t], unmatched_closes[t]) for t in range(k)]


def bracket_match(w, i: int, cyclic: bool = False) -> MatchData:
    """Match the letters i+1 against the letters i of w."""
    events = []
    pos_i, pos_i1 = [], []
    for pos, letter in enumerate(w, start=1):
        if letter == i + 1:
            events.append((pos, True))
            pos_i1.append(pos)
        elif letter == i:
            events.append((pos, False))
            pos_i.append(pos)
    pairs, opens, closes = match_brackets(events)
    wrapping = []
    if cyclic:
        wrapping = wrap_pairs(opens, closes)
        k = len(wrapping)
        if k:
            opens = opens[: len(opens) - k]
            closes = closes[k:]
    return MatchData(
        positions_of_i=tuple(pos_i),
        positions_of_i_plus_1=tuple(pos_i1),
        matched_pairs=tuple(pairs),
        unmatched_opens=tuple(opens),
        unmatched_closes=tuple(closes),
        cyclic=cyclic,
        wrapping_pairs=tuple(wrapping),
    )


def _replace(w, position, letter):
    out = list(w)
    out[position - 1] = letter
    return tuple(out)


def raising(w, i: int):
    """Change the leftmost unmatched i+1 to an i (identity if none)."""
    m = bracket_match(w, i)
    if not m.unmatched_opens:
        return tuple(w)
    return _replace(w, m.unmatched_opens[0], i)


def lowering(w, i: int):
    """Change the rightmost unmatched i to an i+1 (identity if none)."""
    m = bracket_match(w, i)
    if not m.unmatched_closes:
        return tuple(w)
    return _replace(w, m.unmatched_closes[-1], i + 1)


def raise_all(w, i: int):
    """Change every unmatched i+1 to an i; idempotent."""
    m = bracket_match(w, i)
    out = list(w)
    for pos in m.unmatched_opens:
        out[pos - 1] = i
    return tuple(out)


def reflect(w, i: int):
    """Swap the roles of unmatched i's and i+1's (an involution).

    The a unmatched i's and b unmatched i+1's form, in position order, the
    pattern i^a (i+1)^b; it is replaced by i^b (i+1)^a.
    """
    m = bracket_match(w, i)
    slots = sorted(m.unmatched_closes + m.unmatched_opens)
    b = len(m.unmatched_opens)
    out = list(w)
    for k, pos in enumerate(slots):
        out[pos - 1] = i if k < b else i + 1
    return tuple(out)
