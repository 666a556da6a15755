"""Combinatorial objects and q-analogs."""

from itertools import permutations
from math import comb, factorial

import pytest

from supercoinv.combinatorics import (Partition, QZPolynomial, SignedPartition,
                                      SubsetOfN, TranslationSequence,
                                      all_translation_sequences, count_I,
                                      count_L, count_osp,
                                      count_signed_artin_product,
                                      enumerate_artin, enumerate_I,
                                      enumerate_osp, enumerate_signed_artin,
                                      enumerate_syt, enumerate_syt_all,
                                      fields1_formula, gale_leq, j_of_signed,
                                      kostka, mu_blocks, partitions,
                                      q_stirling, sequence_bound,
                                      signed_partitions, staircase, subsets)


def test_q_binomial_specializes_to_binomial():
    for n in range(8):
        for k in range(n + 1):
            assert QZPolynomial.q_binomial(n, k).eval_ones() == comb(n, k)


def test_q_binomial_symmetry():
    for n in range(8):
        for k in range(n + 1):
            assert QZPolynomial.q_binomial(n, k) \
                == QZPolynomial.q_binomial(n, n - k)


def test_q_factorial_specializes():
    for k in range(7):
        assert QZPolynomial.q_factorial(k).eval_ones() == factorial(k)


def _set_partition_count(n, k):
    """Stirling number oracle: ordered set partitions divided by k!."""
    return len(enumerate_osp(n, k=k)) // factorial(k)


def test_q_stirling_specializes_to_partition_counts():
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert q_stirling(n, k).eval_ones() == _set_partition_count(n, k)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 7)] == [1, 2, 3, 5, 7, 11]


def test_conjugate_is_an_involution():
    for n in range(1, 7):
        for lam in partitions(n):
            assert lam.conjugate().conjugate() == lam


def test_kostka_spot_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0


def test_syt_counts_match_involutions():
    # tableaux with n boxes are counted by involutions of S_n
    for n in range(1, 6):
        invol = sum(1 for w in permutations(range(n))
                    if all(w[w[i]] == i for i in range(n)))
        assert len(enumerate_syt_all(n)) == invol


def test_syt_maj_generating_function():
    gens = {}
    for t in enumerate_syt((2, 1)):
        gens[t.maj()] = gens.get(t.maj(), 0) + 1
    assert gens == {1: 1, 2: 1}


def test_staircase_example():
    J = SubsetOfN(8, (3, 5, 6))
    assert staircase(J) == (1, 2, 2, 3, 3, 3, 4, 5)


def test_staircase_starts_at_zero_iff_one_in_j():
    for n in range(1, 6):
        for J in subsets(n):
            st = staircase(J)
            assert (st[0] == 0) == (1 in J.elems)
            assert all(0 <= a <= b for a, b in zip(st, st[1:]))


def test_artin_sets_tile_the_quotient_count():
    for n in range(1, 6):
        total = sum(len(enumerate_artin(J)) for J in subsets(n))
        assert total == count_osp(n)


def test_artin_set_split_at_n_three():
    sizes = {J.elems: len(enumerate_artin(J)) for J in subsets(3)}
    assert sizes[()] == 6
    assert sizes[(3,)] == 4
    assert sizes[(2,)] == 2
    assert sizes[(2, 3)] == 1
    for elems, size in sizes.items():
        if 1 in elems:
            assert size == 0


def test_fields1_formula_totals():
    assert [fields1_formula(n).eval_ones() for n in range(1, 7)] \
        == [1, 3, 13, 75, 541, 4683]


def test_signed_artin_count_matches_product_formula():
    for n in range(1, 6):
        for sp in signed_partitions(n):
            assert len(enumerate_signed_artin(sp)) \
                == count_signed_artin_product(sp)


def test_signed_artin_chain_at_three_three_two():
    sp = SignedPartition((3, 3, 2), (1, 2, 0))
    assert count_signed_artin_product(sp) == 360
    blocks = []
    s_prev = 0
    for m, g in zip(sp.mu, sp.gamma):
        blocks.append(comb(s_prev + (m - g), m - g) * comb(s_prev + m - 1, g))
        s_prev += m - g
    assert blocks == [2, 18, 10]


def test_signed_artin_lies_under_its_staircase():
    for n in range(1, 6):
        for sp in signed_partitions(n):
            st = staircase(j_of_signed(sp))
            for a in enumerate_signed_artin(sp):
                assert all(x < s for x, s in zip(a, st))


def test_batch_osp_anchor():
    assert count_osp(3, mu=(3,)) == 4


def test_batch_osp_totals_match_antisymmetric_count():
    # mu = (1,..,1) imposes nothing
    for n in range(1, 6):
        assert count_osp(n, mu=(1,) * n) == count_osp(n)


def test_translation_sequences_count_and_shape():
    for mu in [(1,), (2,), (2, 1), (3, 3, 2)]:
        seqs = all_translation_sequences(mu)
        assert len(seqs) == 2 ** sum(mu)
        assert len(set(seqs)) == len(seqs)
        for tt in seqs:
            for block, T in zip(mu_blocks(mu), tt.sets):
                assert set(T) <= set(block)
            assert tt.gamma() == tuple(len(s) for s in tt.sets)


def test_translation_sequence_rejects_out_of_block_entries():
    with pytest.raises(ValueError):
        TranslationSequence((2, 1), ((3,), ()))


def test_gale_comparison_is_componentwise():
    a = SubsetOfN(5, (1, 3))
    b = SubsetOfN(5, (2, 5))
    assert gale_leq(a, b)
    assert not gale_leq(b, a)
    assert not gale_leq(SubsetOfN(5, (2, 3)), SubsetOfN(5, (1, 5)))


def test_j_of_signed_picks_block_tails():
    sp = SignedPartition((3, 3, 2), (1, 2, 0))
    assert j_of_signed(sp).elems == (3, 5, 6)


def test_sequence_bound_anchor():
    assert sequence_bound(5, 2, 2) == (2, 3, 4, 4, 4)


def test_sequence_counts_agree():
    for m in range(1, 7):
        for k in range(m + 1):
            for t in range(4):
                seqs = enumerate_I(m, k, t)
                assert len(seqs) == count_I(m, k, t) == count_L(m, k, t)
                bound = sequence_bound(m, k, t)
                for s in seqs:
                    assert all(0 <= a <= b for a, b in zip(s, bound))
    assert count_L(5, 2, 2) == 150
