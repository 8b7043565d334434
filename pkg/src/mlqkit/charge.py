"""Charge and cocharge statistics on permutations and words."""

from .core import content, is_partition, n_stat, sort_to_partition
from .errors import NonPartitionContent, NotAPermutation
from .matching import bracket_match, reflect


def charge_permutation(perm) -> int:
    """Charge of a permutation of 1..n in one-line notation."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise NotAPermutation(f"{perm}")
    position = {v: k for k, v in enumerate(perm)}
    return sum(n - i for i in range(1, n) if position[i] < position[i + 1])


def _check_partition_content(w):
    c = content(w)
    if not is_partition(c):
        raise NonPartitionContent(f"content {c}")
    return c


def charge_subwords(w):
    """Split a partition-content word into its charge subwords.

    Each subword is extracted by scanning cyclically for the largest
    remaining letter, then the next smaller one, and so on down to 1; the
    scan resumes after each found letter and wraps around the word.
    """
    _check_partition_content(w)
    remaining = list(range(len(w)))
    subwords = []
    while remaining:
        largest = max(w[p] for p in remaining)
        chosen = []
        cursor = 0
        for needed in range(largest, 0, -1):
            for shift in range(len(remaining)):
                idx = (cursor + shift) % len(remaining)
                if w[remaining[idx]] == needed:
                    chosen.append(remaining[idx])
                    cursor = idx
                    break
            else:
                raise NonPartitionContent(f"content {content(w)}")
            remaining = [p for p in remaining if p != chosen[-1]]
            # keep scanning just past the removed position
            cursor = sum(1 for p in remaining if p < chosen[-1])
        subwords.append(tuple(w[p] for p in sorted(chosen)))
    return subwords


def charge(w) -> int:
    """Charge of a word with partition content."""
    return sum(charge_permutation(sub) for sub in charge_subwords(w))


def cocharge(w) -> int:
    """Cocharge: n(content) minus charge."""
    mu = _check_partition_content(w)
    return n_stat(mu) - charge(w)


def charge_by_matching(w) -> int:
    """Charge computed through classical and cylindrical matching alone.

    The word is peeled into layers: for r from the largest part of the
    content down to 1, the letters r of the current layer seed a subword
    which is grown downward one letter value at a time, keeping the letters
    k that match cylindrically against the already-selected k+1's.  Each
    letter that matches only by wrapping contributes r - k.
    """
    lam = _check_partition_content(w)
    if not lam:
        return 0
    total = 0
    layer = list(range(len(w)))  # positions still to be assigned
    for r in range(len(lam), 0, -1):  # subword lengths run down from max(w)
        selected = {p for p in layer if w[p] == r}
        for k in range(r - 1, 0, -1):
            # drop letters above k that were not selected for this layer
            sub = [p for p in layer if w[p] <= k or p in selected]
            word_k = tuple(w[p] for p in sub)
            m = bracket_match(word_k, k, cyclic=True)
            matched_closes = {c for _, c in m.matched_pairs}
            wrapped_closes = {c for _, c in m.wrapping_pairs}
            total += len(wrapped_closes) * (r - k)
            for pos1 in matched_closes | wrapped_closes:
                selected.add(sub[pos1 - 1])
        layer = [p for p in layer if p not in selected]
    return total


def sorting_reflections(alpha):
    """Indices i so that applying s_i right-to-left sorts alpha decreasingly.

    Stable selection sort pulling the largest part leftmost; transpositions
    between equal parts are skipped.  Returned in application order.
    """
    alpha = list(alpha)
    ops = []
    for start in range(len(alpha)):
        best = max(range(start, len(alpha)), key=lambda j: (alpha[j], -j))
        for j in range(best - 1, start - 1, -1):
            if alpha[j] != alpha[j + 1]:
                ops.append(j + 1)  # 1-based reflection index
                alpha[j], alpha[j + 1] = alpha[j + 1], alpha[j]
    return ops


def straighten_word(w):
    """Apply reflections until the content is a partition."""
    for i in sorting_reflections(content(w)):
        w = reflect(w, i)
    return tuple(w)


def charge_g(w) -> int:
    """Generalized charge: straighten the content, then take the charge."""
    if not w:
        return 0
    return charge(straighten_word(w))
