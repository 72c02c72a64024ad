"""One check per acceptance criterion.

Each test records a PASS/FAIL line in ``RESULTS``; the lines are printed at the
end of the pytest run and also when this file is run as a script.
"""

import itertools
import time

from helpers import AB, ABCD, AB_C, pumped_witnesses, random_distance_automaton, rng_for
from syncrel import automata as fa
from syncrel import oracle
from syncrel.autorel import (AutomaticRelation, conv_alphabet, empty_relation,
                             equal_length_relation, from_sync_fsl, full_relation,
                             is_recognizable, rec_to_automatic, relation_decide)
from syncrel.definability import (allsync_regular, ambiguity_witness, decide_definability,
                                  is_prefix_recognizable, is_unambiguous,
                                  maxsync_prefix_closed, maxsync_regular, minsync_regular,
                                  minsync_tt)
from syncrel.regex import parse_regex
from syncrel.resync import build_dk, compatible, diff_of, to_canonical_fs, to_canonical_fsl
from syncrel.syncword import (TaggedAlphabet, classify, finite_lag, finite_shift,
                              finite_shiftlag, fs_canonical, fsl_canonical,
                              tagged_alphabet_of, word_metrics)
from syncrel.uniform import (bounded_distance_value, build_distance_automaton,
                             distance_of_word, has_recognizable_uniformization, is_limited,
                             synthesize_recognizable_uniformizer, uniformizer_to_subseq,
                             verify_uniformizer)

RESULTS = {}
ABC_DE = TaggedAlphabet(("a", "b", "c"), ("d", "e"))
AA = TaggedAlphabet(("a", "b"), ("a", "b"))
ALT_S = "(ab)* + (ab)*(a a^+ + b b^+)"
ALT_T = "a*b* + (ab)*(a a^+ + b b^+)"


def record(n, title, failures, started):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {n:2d} {status}  {title} ({time.perf_counter() - started:.2f}s)"
    if failures:
        line += ": " + "; ".join(failures[:3])
    RESULTS[n] = line
    print(line)
    assert not failures, line


def expect(failures, cond, message):
    if not cond:
        failures.append(message)


def test_criterion_01_word_metrics():
    t, bad = time.perf_counter(), []
    expect(bad, word_metrics(AB.word("aabaabbbbbbbaaab")) == (4, 5, 2), "worked word")
    count = 0
    for n in range(11):
        for w in itertools.product(AB.letters, repeat=n):
            count += 1
            if word_metrics(w) != oracle.metrics(w):
                bad.append(f"metrics differ on {w}")
    expect(bad, count == 2047, "word count")
    record(1, "word metrics: (4,5,2) and 2047 words of length <= 10", bad, t)


def test_criterion_02_classification():
    t, bad = time.perf_counter(), []
    cls = lambda text: classify(ABCD.regex(text)).cls
    expect(bad, cls("Σ*Γ*") == "FS", "Σ*Γ*")
    expect(bad, cls("(ΣΓ)*(Σ*+Γ*)") == "FSL", "(ΣΓ)*(Σ*+Γ*)")
    expect(bad, cls("(Σ+Γ)*") == "ALL", "(Σ+Γ)*")
    aba = AB.regex("a*b*a*")
    expect(bad, not finite_lag(aba) and finite_shiftlag(aba), "a*b*a*")
    expect(bad, finite_shiftlag(AB.regex("a*b*a*b*")), "a*b*a*b*")
    rng = rng_for(7)
    for i in range(200):
        A = oracle.random_tagged_nfa(rng, AB, rng.randint(1, 5), density=0.6)
        m = max(fa.trim(fa.minimize(A)).n, 1)
        words = pumped_witnesses(A, 2 * m + 3)
        highest = [max((word_metrics(w)[j] for w in words), default=0) for j in range(3)]
        verdicts = (finite_lag(A), finite_shift(A), finite_shiftlag(A))
        for j, (finite, bound) in enumerate(zip(verdicts, (m, 2 * m, 2 * m))):
            if (highest[j] <= bound) != finite:
                bad.append(f"automaton {i}, metric {j}")
    record(2, "classification fixtures and 200-automaton pumped differential", bad, t)


def test_criterion_03_canonicalization():
    t, bad = time.perf_counter(), []
    rng = rng_for(30)
    for i in range(100):
        al = AB if i % 2 else ABCD
        S = oracle.random_fsl(rng, al, core=rng.randint(1, 3), tail=rng.randint(0, 2))
        C = to_canonical_fsl(S, al)
        expect(bad, fa.subset(C, fsl_canonical(al)), f"FSL {i} not controlled")
        expect(bad, relation_decide("equivalent", from_sync_fsl(C, al), from_sync_fsl(S, al)),
               f"FSL {i} relation changed")
    for i in range(100):
        al = AB if i % 2 else ABCD
        S = oracle.random_fs(rng, al, rng.randint(1, 4))
        C = to_canonical_fs(S, al)
        expect(bad, fa.subset(C, fs_canonical(al)), f"FS {i} not controlled")
        expect(bad, relation_decide("equivalent", from_sync_fsl(C, al), from_sync_fsl(S, al)),
               f"FS {i} relation changed")
    record(3, "canonical FSL/FS forms on 100 + 100 random languages", bad, t)


def test_criterion_04_difference_automaton():
    t, bad = time.perf_counter(), []
    x, y = ABCD.word("acab"), ABCD.word("cadc")
    expect(bad, diff_of(x, y) == (ABCD.word("dc"), ABCD.word("ab")), "diff(acab, cadc)")
    expect(bad, build_dk(2, ABCD).run_pair(x, y) == (ABCD.word("dc"), ABCD.word("ab")),
           "D_2 on (acab, cadc)")
    rng = rng_for(40)
    automata = {k: build_dk(k, ABCD) for k in range(4)}
    seen = 0
    while seen < 500:
        n = rng.randint(0, 7)
        x = oracle.random_tagged_word(rng, ABCD, n)
        y = oracle.random_tagged_word(rng, ABCD, n)
        lag = max(word_metrics(x)[0], word_metrics(y)[0])
        if lag > 3 or not compatible(x, y):
            continue
        seen += 1
        if automata[3].run_pair(x, y) != oracle.diff(x, y, 5):
            bad.append(f"pair {x} {y}")
    record(4, "D_k against brute-force diff on 500 compatible pairs", bad, t)


def test_criterion_05_recognizability():
    t, bad = time.perf_counter(), []
    expect(bad, not is_recognizable(equal_length_relation(ABCD)), "equal length")
    full = is_recognizable(full_relation(ABCD))
    expect(bad, bool(full) and full.decomposition.is_disjoint(), "full relation")
    if full:
        expect(bad, relation_decide("equivalent", rec_to_automatic(full.decomposition),
                                    full_relation(ABCD)), "full relation recombines")
    rng = rng_for(50)
    for i in range(50):
        al = AB if i % 2 else ABCD
        S = oracle.random_fs(rng, al, rng.randint(1, 4))
        R = from_sync_fsl(S, al)
        r = is_recognizable(R)
        if not r:
            bad.append(f"FS {i} not recognizable")
            continue
        expect(bad, r.decomposition.is_disjoint(), f"FS {i} not disjoint")
        expect(bad, relation_decide("equivalent", rec_to_automatic(r.decomposition), R),
               f"FS {i} decomposition differs")
    record(5, "recognizability fixtures and 50 random FS relations", bad, t)


def _fixture_battery():
    pairs = [(AB, ALT_S, ALT_T), (AB, "(ab)*", "(ab)* + a*b*"),
             (AB, "(ab)*(a a^+ + b b^+)", ALT_T), (AB, "a*b*", "(ab)*(a*+b*)"),
             (ABCD, "(ΣΓ)*", "(ΣΓ)* + Σ*Γ*"), (ABCD, "a* c", "(ΣΓ)*(Σ*+Γ*)")]
    return [(al.regex(s), al.regex(t)) for al, s, t in pairs]


def test_criterion_06_minsync_and_allsync():
    t, bad = time.perf_counter(), []
    rng = rng_for(60)
    for i in range(50):
        T = fa.minimize(oracle.random_fsl(rng, AB_C, core=3, tail=2))
        M = minsync_tt(T)
        expect(bad, fa.subset(M, T), f"T{i} minsync outside T")
        expect(bad, relation_decide("equivalent", from_sync_fsl(M, AB_C),
                                    from_sync_fsl(T, AB_C)), f"T{i} pairs lost")
        minimal = oracle.extremal_words(T, 6, "min")
        for w in oracle.words(T, 6):
            if fa.member(M, w) != (w in minimal):
                bad.append(f"T{i} word {w}")
        # survivors of one pair are minimal, hence pairwise ⪯-equivalent
        by_pair = {}
        for w in oracle.words(M, 6):
            by_pair.setdefault(oracle.pair_of(w), []).append(w)
        for ws in by_pair.values():
            for w1, w2 in itertools.combinations(ws, 2):
                if not (oracle.order_leq(T, w1, w2) and oracle.order_leq(T, w2, w1)):
                    bad.append(f"T{i} incomparable survivors {w1} {w2}")
    battery = _fixture_battery()
    for _ in range(20):
        battery.append((oracle.random_fsl(rng, AB_C, core=2, tail=2),
                        oracle.random_fsl(rng, AB_C, core=3, tail=2)))
    for i, (S, T) in enumerate(battery):
        if allsync_regular(S, T).yes != minsync_regular(S, T).yes:
            bad.append(f"battery {i}: allsync and minsync disagree")
    record(6, "minsync(T,T) on 50 random targets; minsync/allsync agreement", bad, t)


def test_criterion_07_maxsync():
    t, bad = time.perf_counter(), []
    T = ABCD.regex("(ΣΓ)* + Σ*Γ*")
    expect(bad, maxsync_regular(T, T).no, "max-not-reg fixture")
    rng = rng_for(70)
    pairs_ = [(s, g) for s in ABCD.sigma for g in ABCD.gamma]
    for i in range(10):
        B = oracle.random_nfa(rng, pairs_, 3, density=0.6, final_prob=1.0)
        B = fa.Nfa(B.alphabet, B.n, B.initial, range(B.n), B.delta)
        U = fa.morphism(B, ABCD.letters, lambda p: p)
        T = fa.concat(U, fs_canonical(ABCD))
        M = maxsync_prefix_closed(U, ABCD)
        v = maxsync_regular(T, T)
        expect(bad, v.yes, f"U{i}: maxsync(T,T) reported non-regular")
        if v.yes:
            expect(bad, fa.equivalent(v.witness, M), f"U{i}: closed form differs")
        maximal = oracle.extremal_words(T, 6, "max")
        for w in oracle.words(T, 6):
            if fa.member(M, w) != (w in maximal):
                bad.append(f"U{i} word {w}")
    record(7, "maxsync fixtures and prefix-closed closed form", bad, t)


def _reverifies(S, T, W, alphabet):
    return fa.subset(W, T) and relation_decide(
        "equivalent", from_sync_fsl(W, alphabet), from_sync_fsl(S, alphabet))


def test_criterion_08_router():
    t, bad = time.perf_counter(), []
    T = AB.regex(ALT_T)
    v = decide_definability(T, T)
    expect(bad, v.yes and _reverifies(T, T, v.witness, AB), "S = T")
    v = decide_definability(ABCD.regex("(ΣΓ)*"), ABCD.regex("Σ*Γ*"))
    expect(bad, v.no, "equal length into Σ*Γ*")
    v = decide_definability(AB.regex(ALT_S), T)
    expect(bad, v.answer == "unknown", "alternating pair verdict")
    for name in ("allsync", "minsync", "maxsync"):
        expect(bad, f"{name} regular: no" in v.checks, f"alternating pair {name} check")
    rng = rng_for(80)
    cases = _fixture_battery() + [
        (oracle.random_fsl(rng, AB_C, core=2, tail=1), oracle.random_fsl(rng, AB_C, core=3, tail=2))
        for _ in range(20)]
    yes = 0
    for i, (S, T) in enumerate(cases):
        v = decide_definability(S, T)
        if v.yes:
            yes += 1
            expect(bad, _reverifies(S, T, v.witness, tagged_alphabet_of(S)), f"case {i} witness")
    expect(bad, yes > 0, "no yes-witness exercised")
    record(8, f"definability router fixtures; {yes} yes-witnesses re-verified", bad, t)


def _conv_star(pairs):
    return fa.star(fa.letters_lang(conv_alphabet(AA), pairs))


def test_criterion_09_prefix_recognizability():
    t, bad = time.perf_counter(), []
    prefix = AutomaticRelation.from_automaton(
        AA, fa.concat(_conv_star([("a", "a"), ("b", "b")]), _conv_star([(None, "a"), (None, "b")])))
    expect(bad, is_prefix_recognizable(prefix).yes, "prefix relation")
    expect(bad, is_prefix_recognizable(equal_length_relation(AA)).no, "equal length")
    expect(bad, is_prefix_recognizable(empty_relation(AA)).yes, "empty relation")
    record(9, "prefix-recognizability fixtures", bad, t)


def test_criterion_10_uniformization():
    t, bad = time.perf_counter(), []
    R1 = AB_C.regex("ac(ac+b)* + (a+bc)*bc")
    expect(bad, has_recognizable_uniformization(R1).no, "R1")
    R2 = ABC_DE.regex("o:d a*ba*(d+e)* + o:e a*ca*(d+e)*")
    expect(bad, has_recognizable_uniformization(R2).yes, "R2")
    B = build_distance_automaton(fa.minimize(R2), ABC_DE)
    expect(bad, is_limited(B) and bounded_distance_value(B) == 1, "D(B) = 1")
    dec = synthesize_recognizable_uniformizer(R2)
    found = {tuple(fa.enumerate_up_to(V, 2)): U for U, V in dec.parts}
    expected = {(("d",),): "a*ba*", (("e",),): "a*ca*"}
    expect(bad, set(found) == set(expected), "uniformizer outputs")
    for v, text in expected.items():
        if v in found:
            expect(bad, fa.equivalent(found[v], parse_regex(text, ABC_DE.inputs)), text)
    expect(bad, verify_uniformizer(uniformizer_to_subseq(dec), R2), "transducer verifies")
    rng = rng_for(100)
    for i in range(300):
        B = random_distance_automaton(rng)
        w = tuple(rng.choice(B.alphabet) for _ in range(rng.randint(0, 7)))
        if distance_of_word(B, w) != oracle.min_distance(B, w):
            bad.append(f"instance {i}")
    record(10, "uniformization fixtures and 300 distance evaluations", bad, t)


def test_criterion_11_unambiguity():
    t, bad = time.perf_counter(), []
    expect(bad, is_unambiguous(ABCD.regex("(ΣΓ)*(Σ*+Γ*)")), "(ΣΓ)*(Σ*+Γ*)")
    expect(bad, is_unambiguous(ABCD.regex("Σ*Γ*")), "Σ*Γ*")
    T = ABCD.regex("(ΣΓ)* + Σ*Γ*")
    expect(bad, not is_unambiguous(T), "(ΣΓ)* + Σ*Γ*")
    pair = ambiguity_witness(T)
    expect(bad, pair is not None and {oracle.pair_of(w) for w in pair} == {(("a", "a"), ("c", "c"))},
           "witness pair is (aa, cc)")
    expect(bad, len(oracle.syncs_in(T, ("a", "a"), ("c", "c"))) >= 2, "enumeration of (aa, cc)")
    record(11, "unambiguity fixtures with the (aa, cc) counterexample", bad, t)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
