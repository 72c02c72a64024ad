import pytest

from helpers import AB, ABCD, rng_for
from syncrel import automata as fa
from syncrel import oracle
from syncrel.autorel import fs_decomposition, from_sync_fsl
from syncrel.errors import NotFiniteShiftlag
from syncrel.resync import (build_dk, compatible, diff_of, filter_by_automatic,
                            filter_by_recognizable, full_gamma_lagged, to_canonical_fs,
                            to_canonical_fs_via_fsl, to_canonical_fsl)
from syncrel.syncword import (fs_canonical, fsl_canonical, gamma_bound, lag_bounded_tail,
                              word_metrics)


def test_diff_of_worked_pair():
    x, y = ABCD.word("a c a b"), ABCD.word("c a d c")
    assert compatible(x, y)
    assert diff_of(x, y) == (ABCD.word("d c"), ABCD.word("a b"))
    assert build_dk(2, ABCD).run_pair(x, y) == diff_of(x, y)


def test_incompatible_words():
    assert not compatible(ABCD.word("a c"), ABCD.word("b c"))
    assert build_dk(2, ABCD).run_pair(ABCD.word("a c"), ABCD.word("b c")) is None


def test_dk_matches_brute_force_diff():
    rng = rng_for(6)
    seen = 0
    while seen < 300:
        k = rng.randint(0, 3)
        n = rng.randint(0, 6)
        x = oracle.random_tagged_word(rng, ABCD, n)
        y = oracle.random_tagged_word(rng, ABCD, n)
        if not compatible(x, y) or max(word_metrics(x)[0], word_metrics(y)[0]) > k:
            continue
        seen += 1
        assert build_dk(k, ABCD).run_pair(x, y) == oracle.diff(x, y, k + 2)


def test_canonical_fsl_keeps_pairs():
    rng = rng_for(2)
    for trial in range(40):
        al = AB if trial % 2 else ABCD
        S = oracle.random_fsl(rng, al, core=rng.randint(1, 3), tail=rng.randint(0, 2))
        C = to_canonical_fsl(S, al)
        assert fa.subset(C, fsl_canonical(al))
        assert oracle.pairs(C, 6) == oracle.pairs(S, 6)


def test_canonical_fs_routes_agree():
    rng = rng_for(3)
    for trial in range(30):
        al = AB if trial % 2 else ABCD
        S = oracle.random_fs(rng, al, rng.randint(1, 4))
        C = to_canonical_fs(S, al)
        assert fa.equivalent(C, to_canonical_fs_via_fsl(S, al))
        assert fa.subset(C, fs_canonical(al))
        assert oracle.pairs(C, 6) == oracle.pairs(S, 6)


def test_canonical_fsl_rejects_infinite_shiftlag():
    with pytest.raises(NotFiniteShiftlag):
        to_canonical_fsl(AB.regex("(a+b)*"), AB)


def test_full_gamma_lagged_is_exact_on_lagged_words():
    rng = rng_for(4)
    for trial in range(20):
        al = AB if trial % 2 else ABCD
        S = oracle.random_fsl(rng, al, core=rng.randint(1, 3), tail=rng.randint(0, 2))
        g = gamma_bound(S) + 1
        F = full_gamma_lagged(S, g, al)
        L = lag_bounded_tail(al, g)
        assert fa.subset(F, L)
        for w in fa.enumerate_up_to(L, 5):
            u, v = oracle.pair_of(w)
            assert fa.member(F, w) == bool(oracle.syncs_in(S, u, v))


def test_filters_keep_exactly_the_related_syncs():
    T = ABCD.regex("(Σ+Γ)*")
    R = fs_decomposition(ABCD.regex("a* c Γ*"))
    F = filter_by_recognizable(T, R)
    for w in fa.enumerate_up_to(T, 5):
        u, v = oracle.pair_of(w)
        assert fa.member(F, w) == R.contains(u, v)

    S = ABCD.regex("(a c)* + a* d")
    R = from_sync_fsl(S, ABCD)
    L = lag_bounded_tail(ABCD, 1)
    G = filter_by_automatic(L, R, gamma=1)
    for w in fa.enumerate_up_to(L, 6):
        u, v = oracle.pair_of(w)
        assert fa.member(G, w) == R.contains(u, v)
