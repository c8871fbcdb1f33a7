from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krvlab.free_assoc import BiDegree, InhomogeneousError, NcPoly, mul
from krvlab.trace_space import (TracePoly, canonical_rotation, cyclic_words,
                                euler_trace_check, least_rotation,
                                partial_trace, tr, trace_bidegree)

words = st.text(alphabet="xy", min_size=1, max_size=12)


def brute_least_rotation(word):
    rotations = [word[k:] + word[:k] for k in range(len(word))]
    return min(range(len(word)), key=lambda k: (rotations[k], k))


@given(words)
@settings(max_examples=150)
def test_least_rotation_matches_brute_force(word):
    k = least_rotation(word)
    best = min(word[i:] + word[:i] for i in range(len(word)))
    assert word[k:] + word[:k] == best
    assert canonical_rotation(word) == best


@given(words, words)
@settings(max_examples=80)
def test_trace_is_cyclic(u, v):
    a, b = NcPoly.from_word(u), NcPoly.from_word(v)
    assert tr(mul(a, b)) == tr(mul(b, a))


def test_canonical_representatives():
    assert str(tr(NcPoly.from_word("yx"))) == "tr(xy)"
    assert str(tr(NcPoly.one())) == "tr(1)"
    assert str(TracePoly.zero()) == "0"
    f = tr(NcPoly.from_word("xxyy")).scale(Fraction(2)) \
        - tr(NcPoly.from_word("xyxy")).scale(Fraction(2))
    assert str(f) == "2*tr(xxyy) - 2*tr(xyxy)"


def test_coeff_canonicalizes_lookups():
    f = tr(NcPoly.from_word("xyy"))
    assert f.coeff("yxy") == 1
    assert f.coeff("yyx") == 1
    assert f.coeff("xxy") == 0


def test_commutators_die_in_the_trace():
    a = NcPoly.from_word("xy")
    b = NcPoly.from_word("yxx")
    assert tr(mul(a, b) - mul(b, a)).is_zero()


def test_partial_trace_example():
    f = tr(NcPoly.from_word("xyxy"))
    assert partial_trace(f, "x") == NcPoly.from_word("yxy").scale(Fraction(2))
    assert partial_trace(f, "y") == NcPoly.from_word("xyx").scale(Fraction(2))
    assert partial_trace(tr(NcPoly.from_word("yy")), "x").is_zero()


@given(words)
@settings(max_examples=80)
def test_trace_euler_identity(word):
    f = tr(NcPoly.from_word(word))
    assert euler_trace_check(f) == BiDegree(word.count("x"), word.count("y"))


def test_euler_check_rejects_mixed_degrees():
    f = tr(NcPoly.from_word("x")) + tr(NcPoly.from_word("xy"))
    with pytest.raises(InhomogeneousError):
        euler_trace_check(f)


def test_trace_bidegree():
    assert trace_bidegree(tr(NcPoly.from_word("xxy"))) == BiDegree(2, 1)
    assert trace_bidegree(TracePoly.zero()) == BiDegree(0, 0)
    assert trace_bidegree(tr(NcPoly.from_word("x") + NcPoly.from_word("xy"))) \
        is None


def necklace_count(n):
    # standard orbit count for binary necklaces of length n
    from math import gcd
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            phi = sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)
            total += phi * 2 ** (n // d)
    return total // n


def test_cyclic_word_counts():
    assert cyclic_words(2, 2) == ("xxyy", "xyxy")
    assert cyclic_words(0, 0) == ("",)
    for n in range(1, 11):
        classes = sum(len(cyclic_words(i, n - i)) for i in range(n + 1))
        assert classes == necklace_count(n)


def test_cyclic_words_are_canonical_and_sorted():
    for (i, j) in [(2, 3), (3, 3), (1, 5)]:
        necklaces = cyclic_words(i, j)
        assert list(necklaces) == sorted(necklaces)
        for word in necklaces:
            assert canonical_rotation(word) == word
            assert word.count("x") == i and word.count("y") == j
