from itertools import product

from mlqkit.core import content
from mlqkit.matching import bracket_match, lowering, raise_all, raising, reflect

PAPER_WORD = (3, 1, 2, 2, 1, 4, 3, 4, 2, 1, 3, 1, 2, 3, 2)


def test_classical_match_paper_example():
    m = bracket_match(PAPER_WORD, 1)
    assert m.unmatched_closes == (2,)
    assert m.unmatched_opens == (13, 15)


def test_cyclic_match_paper_example():
    m = bracket_match(PAPER_WORD, 1, cyclic=True)
    assert m.wrapping_pairs == ((15, 2),)
    assert m.unmatched_opens == (13,)
    assert m.unmatched_closes == ()


def test_match_one_two():
    classical = bracket_match((1, 2), 1)
    assert classical.matched_pairs == ()
    assert classical.unmatched_opens == (2,)
    assert classical.unmatched_closes == (1,)
    cyclic = bracket_match((1, 2), 1, cyclic=True)
    assert cyclic.wrapping_pairs == ((2, 1),)


def test_raising():
    assert raising(PAPER_WORD, 1) == (3, 1, 2, 2, 1, 4, 3, 4, 2, 1, 3, 1, 1, 3, 2)
    assert raising((1, 1), 1) == (1, 1)
    # 2 followed by 1 is a matched pair, so nothing flips
    assert raising((2, 1), 1) == (2, 1)
    assert raising((1, 2), 1) == (1, 1)


def test_lowering():
    assert lowering(PAPER_WORD, 1) == (3, 2, 2, 2, 1, 4, 3, 4, 2, 1, 3, 1, 2, 3, 2)
    assert lowering((2, 2), 1) == (2, 2)


def test_raise_all():
    assert raise_all((2, 1, 2, 2), 1) == (2, 1, 1, 1)
    assert raise_all((1, 2), 1) == (1, 1)
    assert raise_all((2, 1), 1) == (2, 1)


def test_reflect_examples():
    assert reflect(PAPER_WORD, 1) == (3, 1, 2, 2, 1, 4, 3, 4, 2, 1, 3, 1, 1, 3, 2)
    assert reflect((1, 2), 1) == (1, 2)


def all_words(length, alphabet):
    return product(range(1, alphabet + 1), repeat=length)


def test_inverse_property_exhaustive():
    for length in range(1, 9):
        for w in all_words(length, 3):
            for i in (1, 2):
                up = raising(w, i)
                if up != w:
                    assert lowering(up, i) == w
                down = lowering(w, i)
                if down != w:
                    assert raising(down, i) == w


def test_reflect_involution_and_idempotence():
    for length in range(1, 8):
        for w in all_words(length, 3):
            for i in (1, 2):
                assert reflect(reflect(w, i), i) == w
                once = raise_all(w, i)
                assert raise_all(once, i) == once


def test_wrapping_count():
    for length in range(1, 8):
        for w in all_words(length, 3):
            classical = bracket_match(w, 1)
            cyclic = bracket_match(w, 1, cyclic=True)
            expected = min(
                len(classical.unmatched_opens), len(classical.unmatched_closes)
            )
            assert len(cyclic.wrapping_pairs) == expected
            assert not (cyclic.unmatched_opens and cyclic.unmatched_closes)


def test_reflect_is_cyclic_flip():
    for length in range(1, 8):
        for w in all_words(length, 3):
            for i in (1, 2):
                m = bracket_match(w, i, cyclic=True)
                flipped = list(w)
                for pos in m.unmatched_opens:
                    flipped[pos - 1] = i
                for pos in m.unmatched_closes:
                    flipped[pos - 1] = i + 1
                assert tuple(flipped) == reflect(w, i)


def test_reflect_content():
    def padded(w):
        c = list(content(w))
        return c + [0] * (5 - len(c))

    for length in range(1, 7):
        for w in all_words(length, 3):
            for i in (1, 2):
                before = padded(w)
                after = padded(reflect(w, i))
                before[i - 1], before[i] = before[i], before[i - 1]
                assert before == after
