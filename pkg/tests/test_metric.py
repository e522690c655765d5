from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lehmer_norm import (
    MAX_DEGREE,
    Permutation,
    adjacent_transposition,
    all_permutations,
    compose,
    distance,
    identity,
    include_iota,
    inverse,
    norm,
    norm_bounds_check,
    norm_of_adjacent_transposition,
    norm_of_natural,
    reverse,
    transposition_delta,
)


def P(*word):
    return Permutation(word)


def norm_oracle(word):
    """Norm read off the lex position of ``word`` in the sorted word list.

    The position is written in factoradic by greedy division and each digit
    ``k_i`` contributes ``2**i - 2**(i - k_i)``.
    """
    n = len(word)
    m = sorted(permutations(range(1, n + 1))).index(tuple(word))
    total = 0
    for i in range(n - 1, -1, -1):
        f = 1
        for x in range(2, i + 1):
            f *= x
        k, m = divmod(m, f)
        total += 2**i - 2 ** (i - k)
    return total


TABLE1 = [
    ((1, 2, 3), 0),
    ((1, 3, 2), 1),
    ((2, 1, 3), 2),
    ((2, 3, 1), 3),
    ((3, 1, 2), 3),
    ((3, 2, 1), 4),
]


@pytest.mark.parametrize("word, value", TABLE1)
def test_norm_table(word, value):
    assert norm(P(*word)) == value


@pytest.mark.parametrize("n", range(1, 7))
def test_norm_matches_lex_position_oracle(n):
    for sigma in all_permutations(n):
        assert norm(sigma) == norm_oracle(sigma.word)


@pytest.mark.parametrize("m, n, value", [(0, 3, 0), (4, 3, 3), (5, 3, 4)])
def test_norm_of_natural(m, n, value):
    assert norm_of_natural(m, n) == value


def test_norm_of_natural_range():
    with pytest.raises(ValueError):
        norm_of_natural(6, 3)


def test_norm_at_degree_cap_is_exact():
    n = MAX_DEGREE
    assert norm(reverse(identity(n))) == 2**n - (n + 1)
    assert norm(reverse(identity(n))) < 2**64


def test_distance_examples():
    sigma = P(2, 3, 1)
    assert distance(sigma, sigma) == 0
    assert distance(identity(3), P(2, 1, 3)) == 2
    for n in range(2, 7):
        for s in range(1, n):
            e = identity(n)
            assert distance(e, compose(e, adjacent_transposition(n, s))) == 2 ** (n - 1 - s)


def test_distance_rejects_mismatch_and_unknown_invariance():
    with pytest.raises(ValueError):
        distance(identity(3), identity(2))
    with pytest.raises(ValueError):
        distance(identity(3), identity(3), invariance="both")


@pytest.mark.parametrize("n, s, value", [(3, 1, 2), (3, 2, 1), (10, 9, 1)])
def test_norm_of_adjacent_transposition(n, s, value):
    assert norm_of_adjacent_transposition(n, s) == value
    assert norm(adjacent_transposition(n, s)) == value


@pytest.mark.parametrize(
    "word, s, value", [((1, 3, 2), 1, 2), ((3, 2, 1), 2, -1)]
)
def test_transposition_delta(word, s, value):
    assert transposition_delta(P(*word), s) == value


def test_transposition_delta_from_identity():
    for n in range(2, 9):
        for s in range(1, n):
            assert transposition_delta(identity(n), s) == 2 ** (n - 1 - s)


@pytest.mark.parametrize(
    "word, relation, bound",
    [((1, 3, 2), "<=", 1), ((2, 1, 3), ">=", 2), ((1, 2, 3), "<=", 1)],
)
def test_bounds_check_examples(word, relation, bound):
    report = norm_bounds_check(P(*word))
    assert report.passed
    assert (report.relation, report.bound) == (relation, bound)


@pytest.mark.parametrize("n", range(1, 8))
def test_norm_theorem_unary_parts(n):
    e, rev = identity(n), reverse(identity(n))
    top = 2**n - (n + 1)
    for sigma in all_permutations(n):
        v = norm(sigma)
        assert (v == 0) == (sigma == e)
        assert v <= top and (v == top) == (sigma == rev)
        assert norm(include_iota(sigma)) == v
        assert norm(inverse(sigma)) == v
        assert norm_bounds_check(sigma).passed
        for s in range(1, n):
            assert transposition_delta(sigma, s) == norm(
                compose(sigma, adjacent_transposition(n, s))
            ) - v


def test_transposition_chain_strictly_decreasing():
    for n in range(2, 11):
        values = [norm(adjacent_transposition(n, s)) for s in range(1, n)]
        assert values == sorted(values, reverse=True)
        assert len(set(values)) == len(values)


def test_triangle_exhaustive_s5():
    perms = list(all_permutations(5))
    norms = {p: norm(p) for p in perms}
    for a, b in product(perms, repeat=2):
        assert norm(compose(a, b)) <= norms[a] + norms[b]


@pytest.mark.parametrize("n", [3, 4])
def test_metric_axioms_exhaustive(n):
    perms = list(all_permutations(n))
    d = {(a, b): distance(a, b) for a, b in product(perms, repeat=2)}
    for a, b in product(perms, repeat=2):
        assert (d[a, b] == 0) == (a == b)
        assert d[a, b] == d[b, a]
    for a, b, c in product(perms, repeat=3):
        assert d[a, c] <= d[a, b] + d[b, c]
        assert distance(compose(a, b), compose(a, c)) == d[b, c]


@pytest.mark.parametrize("n", range(2, 7))
def test_swap_cost_depends_only_on_position(n):
    for sigma in all_permutations(n):
        for s in range(1, n):
            assert distance(sigma, compose(sigma, adjacent_transposition(n, s))) == 2 ** (n - 1 - s)


def test_right_invariant_variant():
    perms = list(all_permutations(4))
    for a, b, c in product(perms, repeat=3):
        assert distance(compose(b, a), compose(c, a), "right") == distance(b, c, "right")
    # the right-invariant swap cost is not position-only
    costs = {distance(s, compose(s, adjacent_transposition(4, 1)), "right") for s in perms}
    assert len(costs) > 1


@settings(max_examples=300)
@given(
    st.integers(6, 12).flatmap(
        lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)))
    )
)
def test_triangle_random_degrees(pair):
    a, b = Permutation(pair[0]), Permutation(pair[1])
    assert norm(compose(a, b)) <= norm(a) + norm(b)
    assert distance(a, b) == distance(b, a)
