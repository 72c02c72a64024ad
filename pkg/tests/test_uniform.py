from pathlib import Path

import pytest

from helpers import AB_C, random_distance_automaton, rng_for
from syncrel import automata as fa
from syncrel import oracle
from syncrel.errors import Unsupported
from syncrel.formats import load_model
from syncrel.regex import parse_regex
from syncrel.syncword import TaggedAlphabet
from syncrel.uniform import (INF, DistanceAutomaton, SubseqTransducer, bounded_distance_value,
                             build_distance_automaton, distance_of_word, eval_subseq,
                             has_finite_shift_subseq_uniformization,
                             has_recognizable_uniformization, is_limited, is_t_controlled,
                             max_distance_by_length, relation_domain,
                             sync_language_of_transducer, synthesize_recognizable_uniformizer,
                             transducer_from_sync, uniformizer_to_subseq, verify_uniformizer)

ABC_DE = TaggedAlphabet(("a", "b", "c"), ("d", "e"))
R1 = "ac(ac+b)* + (a+bc)*bc"
R2 = "o:d a*ba*(d+e)* + o:e a*ca*(d+e)*"


def delayed_transducer():
    delta = {(0, "a"): ((), 0), (0, "b"): (("d",), 1), (0, "c"): (("e",), 1),
             (1, "a"): (("d",), 1)}
    return SubseqTransducer(ABC_DE.inputs, ABC_DE.outputs, 2, 0, delta, [1], {1: ()})


def test_r1_has_no_recognizable_uniformizer():
    S = AB_C.regex(R1)
    B = build_distance_automaton(fa.minimize(S), AB_C)
    expected_domain = parse_regex("a(a+b)* + (a+b)*b", AB_C.inputs)
    assert fa.equivalent(B.to_nfa(), expected_domain)
    assert not is_limited(B)
    profile = max_distance_by_length(B, 8)
    assert profile[-1] > profile[2]
    assert has_recognizable_uniformization(S).no


def test_r2_is_limited_by_one():
    S = ABC_DE.regex(R2)
    v = has_recognizable_uniformization(S)
    assert v.yes
    B = build_distance_automaton(fa.minimize(S), ABC_DE)
    assert is_limited(B)
    assert bounded_distance_value(B) == 1


def test_synthesized_uniformizer_for_r2():
    S = ABC_DE.regex(R2)
    dec = synthesize_recognizable_uniformizer(S)
    assert dec.is_disjoint()
    parts = {tuple(fa.enumerate_up_to(V, 2)): U for U, V in dec.parts}
    assert set(parts) == {(("d",),), (("e",),)}
    assert fa.equivalent(parts[(("d",),)], parse_regex("a*ba*", ABC_DE.inputs))
    assert fa.equivalent(parts[(("e",),)], parse_regex("a*ca*", ABC_DE.inputs))
    f = uniformizer_to_subseq(dec)
    assert eval_subseq(f, "aab") == ("d",)
    assert eval_subseq(f, "aca") == ("e",)
    assert eval_subseq(f, "aaa") is None
    assert verify_uniformizer(f, S)
    assert is_t_controlled(f, ABC_DE.regex("Σ*Γ*"))


def test_smallest_output_is_chosen():
    al = TaggedAlphabet(("a",), ("c", "d"))
    for text in ("a c + a c c", "a d + a c"):
        S = al.regex(text)
        dec = synthesize_recognizable_uniformizer(S)
        assert [tuple(fa.enumerate_up_to(V, 3)) for U, V in dec.parts] == [(("c",),)]


def test_delayed_transducer():
    f = delayed_transducer()
    assert eval_subseq(f, "aab") == ("d",)
    assert eval_subseq(f, "aca") == ("e", "d")
    L = sync_language_of_transducer(f)
    assert fa.equivalent(L, ABC_DE.regex("(i:a)*((i:b)(o:d) + (i:c)(o:e))((i:a)(o:d))*"))
    assert is_t_controlled(f, ABC_DE.regex("Σ*(ΣΓ)^+"))
    assert not is_t_controlled(f, ABC_DE.regex("(ΣΓ)*"))
    assert verify_uniformizer(f, ABC_DE.regex(R2))
    assert not verify_uniformizer(f, ABC_DE.regex("o:e a*ba*(d+e)* + o:d a*ca*(d+e)*"))


def test_delayed_fixture_loads_the_same_transducer():
    f = load_model(Path(__file__).parent / "fixtures" / "delayed.synt").value
    for u in ("", "b", "aab", "aca", "caa", "ab"):
        assert eval_subseq(f, u) == eval_subseq(delayed_transducer(), u)


def test_verify_rejects_missing_domain():
    S = ABC_DE.regex(R2)
    delta = {(0, "a"): ((), 0), (0, "b"): (("d",), 1), (1, "a"): ((), 1)}
    f = SubseqTransducer(ABC_DE.inputs, ABC_DE.outputs, 2, 0, delta, [1], {1: ()})
    assert not verify_uniformizer(f, S)


def test_verify_needs_a_tractable_source():
    with pytest.raises(Unsupported):
        verify_uniformizer(delayed_transducer(), ABC_DE.regex("(a+Γ)*(b+c)(a+Γ)*"))


def test_transducer_round_trip():
    S = AB_C.regex(R1)
    assert fa.equivalent(sync_language_of_transducer(transducer_from_sync(S)), S)


def test_relation_domain():
    assert fa.equivalent(relation_domain(ABC_DE.regex(R2)),
                         parse_regex("a*ba* + a*ca*", ABC_DE.inputs))


def test_finite_shift_subsequential_question():
    assert has_finite_shift_subseq_uniformization(ABC_DE.regex(R2)).yes
    assert has_finite_shift_subseq_uniformization(AB_C.regex(R1)).no


def test_distance_of_word_two_runs():
    B = load_model("tests/fixtures/two_runs.synd").value
    assert distance_of_word(B, ("a", "a")) == 1
    assert distance_of_word(B, ("a",)) == INF


def test_distance_of_word_matches_runs():
    rng = rng_for(5)
    for _ in range(150):
        B = random_distance_automaton(rng)
        for _ in range(2):
            w = tuple(rng.choice(B.alphabet) for _ in range(rng.randint(0, 6)))
            assert distance_of_word(B, w) == oracle.min_distance(B, w)


def test_limitedness_is_consistent_with_growth():
    rng = rng_for(15)
    for _ in range(150):
        B = random_distance_automaton(rng)
        values = [x for x in max_distance_by_length(B, 12) if x is not None]
        if is_limited(B):
            assert max(values, default=0) == bounded_distance_value(B)
        else:
            profile = max_distance_by_length(B, 12)
            late = [x for x in profile[7:] if x is not None]
            early = [x for x in profile[:4] if x is not None]
            assert late and max(late) > max(early + [0])


def test_infinite_weight_edges():
    # a word whose only accepting runs use an infinite edge has distance ∞
    B = DistanceAutomaton(("a",), 2, 0, [1], {(0, "a", 1): INF, (1, "a", 1): 0})
    assert distance_of_word(B, ("a",)) == INF
    assert not is_limited(B)
    # an infinite edge into a dead end does not matter
    cheap = DistanceAutomaton(("a",), 3, 0, [1], {(0, "a", 0): 0, (0, "a", 1): 1,
                                                  (0, "a", 2): INF})
    assert is_limited(cheap) and bounded_distance_value(cheap) == 1
    C = DistanceAutomaton(("a",), 1, 0, [0], {(0, "a", 0): 1})
    assert not is_limited(C)
    assert max_distance_by_length(C, 4) == [0, 1, 2, 3, 4]
