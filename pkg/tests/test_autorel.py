import pytest

from helpers import AB, ABCD, rng_for
from syncrel import automata as fa
from syncrel import oracle
from syncrel.autorel import (conv_to_sync, convolve, disjointify,
                             domain_of, equal_length_relation, fs_decomposition,
                             from_sync_fsl, full_relation, is_recognizable,
                             rec_to_automatic, relation_decide, relation_ops,
                             section_language, unconvolve)
from syncrel.errors import AlphabetMismatch, NotFiniteShiftlag
from syncrel.regex import parse_regex
from syncrel.syncword import TaggedAlphabet

ABC_DE = TaggedAlphabet(("a", "b", "c"), ("d", "e"))


def test_convolution_round_trip():
    for u, v in [((), ()), (("a",), ()), (("a", "b"), ("c",)), ((), ("d", "d"))]:
        assert unconvolve(convolve(u, v)) == (u, v)


def test_equal_length_relation_is_not_recognizable():
    assert not is_recognizable(equal_length_relation(ABCD))


def test_full_relation_is_recognizable():
    r = is_recognizable(full_relation(ABCD))
    assert r
    assert r.decomposition.is_disjoint()
    assert len(r.decomposition.parts) == 1


def test_fs_languages_give_recognizable_relations():
    rng = rng_for(8)
    for trial in range(25):
        al = AB if trial % 2 else ABCD
        S = oracle.random_fs(rng, al, rng.randint(1, 4))
        r = is_recognizable(from_sync_fsl(S, al))
        assert r
        D = r.decomposition
        assert D.is_disjoint()
        for u, v in oracle.pairs(S, 5):
            assert D.contains(u, v)
        assert relation_decide("equivalent", rec_to_automatic(D), from_sync_fsl(S, al))


def test_fs_decomposition_is_disjoint_and_exact():
    S = ABCD.regex("a* c + (a+b) b* d Γ*")
    D = fs_decomposition(S)
    assert D.is_disjoint()
    for w in fa.enumerate_up_to(ABCD.regex("Σ*Γ*"), 5):
        u, v = oracle.pair_of(w)
        assert D.contains(u, v) == fa.member(S, w)


def test_from_sync_matches_enumeration():
    rng = rng_for(5)
    for trial in range(40):
        al = AB if trial % 2 else ABCD
        S = oracle.random_fsl(rng, al, core=rng.randint(1, 3), tail=rng.randint(0, 2))
        R = from_sync_fsl(S, al)
        assert set(R.pairs(6)) == {p for p in oracle.pairs(S, 6)}


def test_from_sync_needs_finite_shiftlag():
    with pytest.raises(NotFiniteShiftlag):
        from_sync_fsl(AB.regex("(a+b)*"), AB)


def test_conv_to_sync_round_trip():
    R = from_sync_fsl(ABCD.regex("(a c)* (b + d)"), ABCD)
    back = from_sync_fsl(conv_to_sync(R), ABCD)
    assert relation_decide("equivalent", R, back)


def test_sections_of_r2():
    R = from_sync_fsl(ABC_DE.regex("o:d a*ba*(d+e)* + o:e a*ca*(d+e)*"), ABC_DE)
    assert fa.equivalent(domain_of(R), parse_regex("a*ba* + a*ca*", ABC_DE.inputs))
    V = section_language(R, ("a", "b", "a"))
    assert V.accepts(("d",)) and V.accepts(("d", "e", "e")) and not V.accepts(("e",))
    r = is_recognizable(R)
    assert r and len(r.decomposition.parts) == 2


def test_relation_ops():
    full = full_relation(ABCD)
    eq = equal_length_relation(ABCD)
    assert relation_decide("includes", eq, full)
    assert not relation_decide("includes", full, eq)
    diff = relation_ops("difference", full, eq)
    assert diff.contains(("a",), ()) and not diff.contains(("a",), ("c",))
    assert relation_decide("isEmpty", relation_ops("intersection", diff, eq))
    assert relation_decide("equivalent", relation_ops("complement", relation_ops("complement", eq)), eq)
    with pytest.raises(AlphabetMismatch):
        relation_ops("union", full, full_relation(AB))


def test_disjointify_merges_overlaps():
    a_star = parse_regex("a*", AB.inputs)
    aa = parse_regex("a a", AB.inputs)
    b_star = parse_regex("b*", AB.outputs)
    eps = parse_regex("ε", AB.outputs)
    D = disjointify(AB, [(a_star, eps), (aa, b_star)])
    assert D.is_disjoint()
    assert D.contains(("a", "a"), ("b", "b"))
    assert D.contains(("a",), ())
    assert not D.contains(("a",), ("b",))
