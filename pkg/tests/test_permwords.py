import itertools
import math

import pytest
from hypothesis import given, strategies as st

from yokonuma import permwords as pw


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


def avoids_321(p):
    return not any(p[a] > p[b] > p[c] for a, b, c in itertools.combinations(range(len(p)), 3))


def apply_letters(letters, n):
    # independent evaluation: the word s_a s_b ... as a function, rightmost first
    def f(j):
        for i in reversed(letters):
            if j == i:
                j = i + 1
            elif j == i + 1:
                j = i
        return j
    return tuple(f(j) for j in range(1, n + 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_word_spells_permutation(n):
    seen = set()
    for p in itertools.permutations(range(1, n + 1)):
        w = pw.canonical_word(p)
        lets = pw.letters(w)
        assert apply_letters(lets, n) == p
        assert len(lets) == pw.length(p)
        heads = [i for i, _ in w]
        assert heads == sorted(set(heads)) and all(h <= n - 1 for h in heads)
        seen.add(w)
    assert len(seen) == math.factorial(n)


@given(perms(6), perms(6), perms(6))
def test_group_laws(p, q, r):
    assert pw.compose(pw.compose(p, q), r) == pw.compose(p, pw.compose(q, r))
    assert pw.compose(p, pw.inverse(p)) == pw.identity(6)
    assert pw.times_s(p, 2) == pw.compose(p, pw.transposition(2, 6))
    assert pw.s_times(2, p) == pw.compose(pw.transposition(2, 6), p)


def test_identity_has_length_zero():
    assert pw.length(pw.identity(5)) == 0
    assert pw.canonical_word(pw.identity(5)) == ()


@pytest.mark.parametrize("n", range(0, 7))
def test_sigma_is_321_avoiding(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert pw.in_sigma(p) == avoids_321(p)


@pytest.mark.parametrize("d,n", [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3), (1, 5)])
def test_enumeration_sizes(d, n):
    S = list(pw.enumerate_S(d, n))
    sigma = list(pw.enumerate_Sigma(d, n))
    assert len(S) == len(set(S)) == d ** n * math.factorial(n)
    assert len(sigma) == len(set(sigma)) == d ** n * pw.catalan(n)
    as_words = {(f, pw.canonical_word(p)) for f, p in S}
    assert set(sigma) <= as_words


def test_catalan():
    assert [pw.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_order_is_stable():
    assert pw.perms_in_order(3)[:3] == ((1, 2, 3), (2, 1, 3), (1, 3, 2))
    assert list(pw.enumerate_S(2, 2))[:3] == [((0, 0), (1, 2)), ((0, 0), (2, 1)), ((0, 1), (1, 2))]


@given(perms(5), perms(5), st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_act_is_left_action(p, q, f):
    f = pw.framing(f, 4)
    assert pw.act(pw.compose(p, q), f) == pw.act(p, pw.act(q, f))
    assert sorted(pw.act(p, f)) == sorted(f)


def test_text_forms():
    assert pw.format_word(pw.canonical_word((3, 1, 2))) == "(s2 s1)"
    assert pw.format_word(pw.canonical_word((2, 3, 1))) == "(s1)(s2)"
    assert pw.format_framing((1, 0, 2)) == "[1,0,2]"


def test_resource_cap():
    with pytest.raises(pw.ResourceCapExceeded):
        list(pw.enumerate_S(2, 6, cap=100))
