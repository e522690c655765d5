from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lehmer_norm import (
    CodeError,
    LehmerCode,
    Permutation,
    adjacent_transposition,
    all_permutations,
    check_code_inequalities,
    code_after_transposition,
    compose,
    decode,
    factorial_digits,
    identity,
    inverse,
    inverse_code,
    lehmer_code,
    lex_rank,
    lex_unrank,
    parse_code,
)


def P(*word):
    return Permutation(word)


def lex_position_oracle(word):
    """Position of ``word`` in the sorted list of all words of its degree."""
    return sorted(permutations(range(1, len(word) + 1))).index(tuple(word))


def factoradic_oracle(m, n):
    # greedy: largest digit k_i with k_i * i! <= remainder, from i = n-1 down
    digits = []
    for i in range(n - 1, -1, -1):
        k = m // factorial(i)
        digits.append(k)
        m -= k * factorial(i)
    return digits


@pytest.mark.parametrize(
    "word, code",
    [((1, 2, 3), (0, 0, 0)), ((3, 1, 2), (2, 0, 0)), ((3, 2, 1), (2, 1, 0))],
)
def test_lehmer_code(word, code):
    assert lehmer_code(P(*word)).digits == code


@pytest.mark.parametrize(
    "code, word",
    [((0, 0, 0), (1, 2, 3)), ((2, 0, 0), (3, 1, 2)), ((3, 0, 0, 0), (4, 1, 2, 3))],
)
def test_decode(code, word):
    assert decode(LehmerCode(code)).word == word


@pytest.mark.parametrize("digits", [(1, 1), (0, 3, 0), (0, 0, 1), (-1, 0)])
def test_code_digit_bounds(digits):
    with pytest.raises(CodeError):
        LehmerCode(digits)


def test_code_text_format():
    assert str(LehmerCode((2, 0, 0))) == "[2,0,0]"
    assert parse_code("[2,0,0]") == LehmerCode((2, 0, 0))
    with pytest.raises(CodeError):
        parse_code("[2,x]")


def test_reindexed_digits():
    code = LehmerCode((2, 1, 0))
    assert [code.k(i) for i in range(3)] == [0, 1, 2]
    assert code.c(1) == 2


@pytest.mark.parametrize("word, rank", [((1, 2, 3), 0), ((2, 3, 1), 3), ((3, 2, 1), 5)])
def test_lex_rank(word, rank):
    assert lex_position_oracle(word) == rank
    assert lex_rank(P(*word)) == rank


@pytest.mark.parametrize("rank, n, word", [(0, 3, (1, 2, 3)), (4, 3, (3, 1, 2))])
def test_lex_unrank(rank, n, word):
    assert lex_unrank(rank, n).word == word


@pytest.mark.parametrize("rank", [6, -1, 100])
def test_lex_unrank_out_of_range(rank):
    with pytest.raises(CodeError):
        lex_unrank(rank, 3)


@pytest.mark.parametrize("m, n, digits", [(4, 3, [2, 0, 0]), (0, 3, [0, 0, 0]), (5, 3, [2, 1, 0])])
def test_factorial_digits(m, n, digits):
    assert factoradic_oracle(m, n) == digits
    assert factorial_digits(m, n) == digits


def test_factorial_digits_bound_is_i_not_i_factorial():
    for n in range(1, 8):
        for m in range(factorial(n)):
            digits = factorial_digits(m, n)
            assert digits == factoradic_oracle(m, n)
            assert all(0 <= k <= i for k, i in zip(digits, range(n - 1, -1, -1)))
            assert sum(k * factorial(i) for k, i in zip(digits, range(n - 1, -1, -1))) == m
    with pytest.raises(CodeError):
        factorial_digits(6, 3)


@pytest.mark.parametrize(
    "word, code",
    [((1, 2, 3), (0, 0, 0)), ((3, 1, 2), (1, 1, 0)), ((3, 2, 1), (2, 1, 0))],
)
def test_inverse_code(word, code):
    assert inverse_code(P(*word)).digits == code


def test_code_after_transposition_examples():
    assert code_after_transposition(LehmerCode((0, 0, 0)), identity(3), 1).digits == (1, 0, 0)
    assert code_after_transposition(LehmerCode((2, 1, 0)), P(3, 2, 1), 2).digits == (2, 0, 0)
    with pytest.raises(ValueError):
        code_after_transposition(LehmerCode((0, 0, 0)), identity(3), 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_transposition_codes_are_kronecker_rows(n):
    for s in range(1, n):
        assert lehmer_code(adjacent_transposition(n, s)).digits == tuple(
            1 if i == s else 0 for i in range(1, n + 1)
        )


def test_code_inequalities_examples():
    assert check_code_inequalities(identity(3), identity(3)).passed
    assert check_code_inequalities(P(3, 1, 2), P(2, 3, 1)).passed
    with pytest.raises(ValueError):
        check_code_inequalities(identity(3), identity(4))


def test_code_inequalities_all_pairs_s4():
    perms = list(all_permutations(4))
    reports = [check_code_inequalities(a, b) for a, b in product(perms, repeat=2)]
    assert len(reports) == 576
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("n", range(1, 8))
def test_exhaustive_code_identities(n):
    for rank, sigma in enumerate(all_permutations(n)):
        code = lehmer_code(sigma)
        assert decode(code) == sigma
        assert lex_rank(sigma) == rank
        assert lex_unrank(rank, n) == sigma
        assert inverse_code(sigma) == lehmer_code(inverse(sigma))
        inv = lehmer_code(inverse(sigma)).digits
        for i in range(1, n + 1):
            assert i + code.c(i) == sigma(i) + inv[sigma(i) - 1]
        for s in range(1, n):
            assert code_after_transposition(code, sigma, s) == lehmer_code(
                compose(sigma, adjacent_transposition(n, s))
            )


@pytest.mark.parametrize("n", range(1, 7))
def test_rank_digits_are_the_code(n):
    for sigma in all_permutations(n):
        assert tuple(factorial_digits(lex_rank(sigma), n)) == lehmer_code(sigma).digits


@given(st.integers(8, 20).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_round_trips_beyond_exhaustive_range(word):
    sigma = Permutation(word)
    assert decode(lehmer_code(sigma)) == sigma
    assert lex_unrank(lex_rank(sigma), sigma.n) == sigma
    assert inverse_code(sigma) == lehmer_code(inverse(sigma))
