"""The braid context: construction, divisibility convention, words."""

import itertools

import pytest

import garside as g
from garside.braid import WordParseError, parse_word, simple_to_word, word_from_element
from garside.errors import GarsideError, OracleSizeError
from garside.oracle import enumerate_simples

from conftest import eval_word, inversions, random_element


def test_two_strand_group(b2):
    assert b2.num_atoms == 1
    assert b2.delta == (1, 0)
    assert len(enumerate_simples(b2)) == 2
    # B_2 elements are powers of the single generator, i.e. of delta
    x = g.element_from_word(b2, parse_word("1 1 1"))
    assert (x.p, x.factors) == (3, ())


def test_three_strand_delta(b3):
    assert b3.delta == (2, 1, 0)
    assert b3.delta_norm == 3
    assert g.element_from_word(b3, parse_word("1 2 1")) == g.delta_power_element(b3, 1)


def test_simple_counts():
    for n, count in ((2, 2), (3, 6), (4, 24), (5, 120), (6, 720)):
        assert len(enumerate_simples(g.braid_context(n))) == count
    with pytest.raises(OracleSizeError):
        enumerate_simples(g.braid_context(7))


def test_rejects_too_few_strands():
    with pytest.raises(GarsideError):
        g.braid_context(1)


def _reduced_words(n, max_len):
    """Map each permutation to the set of its minimal-length positive words."""
    words = {}
    for length in range(max_len + 1):
        for word in itertools.product(range(1, n), repeat=length):
            table = eval_word(n, word)
            if inversions(table) == length:
                words.setdefault(table, set()).add(word)
    return words


@pytest.mark.parametrize("n", [3, 4])
def test_divisibility_matches_word_oracle(n):
    # an atom divides a simple on the left iff some minimal word starts
    # with it, and on the right iff some minimal word ends with it
    ctx = g.braid_context(n)
    reduced = _reduced_words(n, ctx.delta_norm)
    assert len(reduced) == len(enumerate_simples(ctx))
    for table, words in reduced.items():
        firsts = {w[0] for w in words if w}
        lasts = {w[-1] for w in words if w}
        for a in ctx.atoms:
            assert (ctx.divide_atom_left(a, table) is not None) == (a.index in firsts)
            assert (ctx.divide_atom_right(table, a) is not None) == (a.index in lasts)


def test_divisibility_poset_b3(b3):
    # frozen left-divisibility relation on the 6 simple elements
    order = enumerate_simples(b3)
    names = {
        (0, 1, 2): "1",
        (1, 0, 2): "a",
        (0, 2, 1): "b",
        (2, 0, 1): "ab",
        (1, 2, 0): "ba",
        (2, 1, 0): "D",
    }
    divisors = {
        name: {
            names[d]
            for d in order
            if g.left_divides(g.simple_element(b3, d), g.simple_element(b3, s))
        }
        for s, name in ((s, names[s]) for s in order)
    }
    assert divisors == {
        "1": {"1"},
        "a": {"1", "a"},
        "b": {"1", "b"},
        "ab": {"1", "a", "ab"},
        "ba": {"1", "b", "ba"},
        "D": {"1", "a", "b", "ab", "ba", "D"},
    }


def test_parse_examples(b3):
    assert parse_word("1 2 1") == g.BraidWord(0, (1, 2, 1))
    assert parse_word("D^-1 1") == g.BraidWord(-1, (1,))
    assert parse_word("d 2") == g.BraidWord(1, (2,))
    assert parse_word("") == g.BraidWord(0, ())
    assert parse_word("D^2 (1 2) . -1") == g.BraidWord(2, (1, 2, -1))
    x = g.element_from_word(b3, parse_word("D^-1 1"))
    assert (x.p, x.factors) == (-1, ((1, 0, 2),))


def test_parse_errors():
    with pytest.raises(WordParseError) as err:
        parse_word("1 x")
    assert err.value.position == 2
    with pytest.raises(WordParseError):
        parse_word("1 D")
    with pytest.raises(WordParseError):
        parse_word("0")
    with pytest.raises(WordParseError):
        g.element_from_word(g.braid_context(3), parse_word("3"))


def test_round_trips(b3, b5, rng):
    x = g.element_from_word(b3, parse_word("1 -2"))
    again = g.element_from_word(b3, parse_word(word_from_element(x)))
    assert again == x
    for _ in range(200):
        x = random_element(b5, rng, rng.randint(0, 9))
        assert g.element_from_word(b5, parse_word(word_from_element(x))) == x


def test_simple_words_evaluate_back(b5, rng):
    for _ in range(100):
        table = list(range(5))
        rng.shuffle(table)
        s = tuple(table)
        word = simple_to_word(b5, s)
        assert eval_word(5, word) == s
        assert len(word) == inversions(s)


def test_output_format(b3):
    x = g.element_from_word(b3, parse_word("1 2 1 1"))
    assert word_from_element(x) == "D^1 (1)"
    assert word_from_element(g.identity_element(b3)) == "D^0"
    assert word_from_element(g.delta_power_element(b3, -2)) == "D^-2"
