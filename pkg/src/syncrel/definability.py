"""Resynchronized definability.

Given synchronization languages ``S`` and ``T``, decide whether the relation
``⟦S⟧`` can be defined by a regular subset of ``T``.  The procedures here
work for finite-shiftlag targets and revolve around the synchronicity
preorder of ``T``: a synchronization is smaller when it reaches a
finite-shift residual of ``T`` earlier.

Notation used throughout:

* ``D``/``fs``: the minimal DFA of ``T`` and its finite-shift states.
* an *entry* ``y`` is a prefix whose run first reaches ``fs``.
* ``γ``: the largest lag of a prefix whose residual does not have finite shift.
"""

from __future__ import annotations

from . import automata as fa
from .autorel import (AutomaticRelation, RecognizableDecomposition, conv_to_sync,
                      from_sync_fsl, fs_decomposition, fs_skeletons, is_recognizable,
                      relation_decide, relation_ops, _alphabet_from_letters)
from .errors import (AlphabetShapeMismatch, NotAlternating, NotDisjoint, NotFiniteShiftlag,
                     NotPrefixClosed, NotSamePair, NotSubset)
from .resync import dk_step, filter_by_recognizable, full_gamma_lagged
from .syncword import (IN, OUT, Letter, TaggedAlphabet, canonical_dfa, classify,
                       decode_pair, finite_shift, finite_shiftlag, fs_canonical, fs_states,
                       gamma_bound)
from .verdict import NO, UNKNOWN, YES, Verdict


class _Target:
    """Cached analysis of a finite-shiftlag target language."""

    def __init__(self, T, what="target"):
        if not finite_shiftlag(T):
            raise NotFiniteShiftlag(f"{what} language must have finite shiftlag")
        self.T = T
        self.alphabet = _alphabet_from_letters(T.alphabet)
        self.D = canonical_dfa(T)
        self.fs = fs_states(self.D)
        self.gamma = gamma_bound(T)
        self._residual_rel = {}

    def entry_index(self, w):
        q = self.D.initial
        for i in range(len(w) + 1):
            if q in self.fs:
                return i
            if i == len(w):
                return None
            q = self.D.delta[q].get(w[i])
            if q is None:
                raise ValueError("word is not a prefix of the target language")
        return None

    def non_fs_part(self) -> fa.Dfa:
        """Target words whose run never reaches a finite-shift state."""
        D = self.D
        if D.initial in self.fs or not D.finals:
            return fa.empty_dfa(D.alphabet)
        keep = [q for q in range(D.n) if q not in self.fs]
        ren = {q: i for i, q in enumerate(keep)}
        delta = [{a: ren[r] for a, r in D.delta[q].items() if r in ren} for q in keep]
        finals = [ren[q] for q in keep if q in D.finals]
        return fa.trim(fa.Dfa(D.alphabet, len(keep), ren[D.initial], finals, delta))

    def residual(self, q) -> fa.Dfa:
        return fa.residual(self.D, q)

    def residual_relation(self, q) -> AutomaticRelation:
        if q not in self._residual_rel:
            self._residual_rel[q] = from_sync_fsl(self.residual(q), self.alphabet)
        return self._residual_rel[q]


def _entry_blocks(target: _Target, extra0, step):
    """Partition the entries of ``target`` by a deterministic annotation.

    ``step(extra, letter)`` updates the annotation along an entry (``None``
    prunes the branch).  Returns ``{(fs_state, extra): Dfa of those entries}``.
    """
    D, fs = target.D, target.fs
    letters = D.alphabet
    if not D.finals:
        return {}
    if D.initial in fs:
        return {(D.initial, extra0): fa.minimize(fa.epsilon(letters))}
    index = {("in", D.initial, extra0): 0}
    keys = [("in", D.initial, extra0)]
    delta = []
    i = 0
    while i < len(keys):
        kind, q, e = keys[i]
        row = {}
        if kind == "in":
            for a, q2 in D.delta[q].items():
                e2 = step(e, a)
                if e2 is None:
                    continue
                key = ("end" if q2 in fs else "in", q2, e2)
                j = index.get(key)
                if j is None:
                    j = len(keys)
                    index[key] = j
                    keys.append(key)
                row[a] = j
        delta.append(row)
        i += 1
    blocks = {}
    for j, (kind, q, e) in enumerate(keys):
        if kind == "end":
            M = fa.trim(fa.Dfa(letters, len(keys), 0, [j], delta))
            if M.finals:
                blocks[(q, e)] = M
    return blocks


def _lagged_source(S, target: _Target, gamma=None):
    """Full lagged representation of ``S`` with a margin covering entry words."""
    g = gamma if gamma is not None else max(gamma_bound(S), target.gamma) + 1
    return fa.minimize(full_gamma_lagged(S, g, target.alphabet)), g


# ---------------------------------------------------------------------------
# the synchronicity order


def sync_order_leq(T, w, w2) -> bool:
    """``w ⪯_T w2``: ``w`` reaches a finite-shift residual no later than ``w2``."""
    w, w2 = tuple(w), tuple(w2)
    if decode_pair(w) != decode_pair(w2):
        raise NotSamePair("the two words synchronize different pairs")
    target = _Target(T)
    if not (fa.member(target.D, w) and fa.member(target.D, w2)):
        raise ValueError("both words must belong to the target language")
    e, e2 = target.entry_index(w), target.entry_index(w2)
    if e2 is None:
        return True
    return e is not None and e <= e2


def larger_sync_set(T, T2) -> fa.Dfa:
    """Words of ``T`` strictly above (later entry than) some same-pair word of ``T2``."""
    target = _Target(T)
    if not fa.subset(T2, T):
        raise NotSubset("second language must be contained in the first")
    D, fs = target.D, target.fs
    D2 = canonical_dfa(T2)
    alphabet = target.alphabet
    letters = D.alphabet
    if D.initial in fs or not D.finals or not D2.finals:
        return fa.empty_dfa(letters)
    k = target.gamma + 1
    # x is read, y is guessed; node = (p, qy, q2, diff)
    start = (D.initial, D.initial, D2.initial, ((), ()))
    index = {("run",) + start: 0}
    keys = [("run",) + start]
    edges = []
    i = 0
    while i < len(keys):
        key = keys[i]
        if key[0] == "run":
            _, p, qy, q2, d = key
            for a, p2 in D.delta[p].items():
                if p2 in fs:
                    continue
                for b, qy2 in D.delta[qy].items():
                    q22 = D2.delta[q2].get(b)
                    if q22 is None:
                        continue
                    d2 = dk_step(d, a, b, k)
                    if d2 is None:
                        continue
                    nk = ("end", p2, q22, d2) if qy2 in fs else ("run", p2, qy2, q22, d2)
                    j = index.get(nk)
                    if j is None:
                        j = len(keys)
                        index[nk] = j
                        keys.append(nk)
                    edges.append((i, a, j))
        i += 1
    builder_edges = list(edges)
    n = len(keys)
    finals = []
    for j, key in enumerate(keys):
        if key[0] != "end":
            continue
        _, p, q2, (u, v) = key
        R = _shifted_fs_decomposition(D2, q2, u, v, alphabet)
        A = fa.as_nfa(filter_by_recognizable(target.residual(p), R))
        if fa.is_empty(A):
            continue
        builder_edges.append((j, fa.EPS, A.initial + n))
        for s, a, t in A.edges():
            builder_edges.append((s + n, a, t + n))
        finals.extend(f + n for f in A.finals)
        n += A.n
    N = fa.Nfa.from_edges(letters, n, 0, finals, builder_edges)
    return fa.minimize(N)


def _shifted_fs_decomposition(D2, q, u, v, alphabet) -> RecognizableDecomposition:
    """Decomposition of ``⟦v⟧⁻¹(⟦u⟧ ⟦L(D2_q)⟧)`` for a finite-shift residual."""
    parts = []
    u_in = tuple(l.sym for l in u if l.role == IN)
    u_out = tuple(l.sym for l in u if l.role == OUT)
    v_in = tuple(l.sym for l in v if l.role == IN)
    v_out = tuple(l.sym for l in v if l.role == OUT)
    for U, V in fs_skeletons(D2, q):
        if u_in:
            U = fa.concat(fa.from_word(alphabet.inputs, u_in), U)
        if u_out:
            V = fa.concat(fa.from_word(alphabet.outputs, u_out), V)
        if v_in:
            U = fa.left_quotient(v_in, U)
        if v_out:
            V = fa.left_quotient(v_out, V)
        if not fa.is_empty(U) and not fa.is_empty(V):
            parts.append((U, V))
    return RecognizableDecomposition(alphabet, tuple(parts))


def minsync_tt(T) -> fa.Dfa:
    """The ⪯-minimal synchronizations of ``T`` for each of its pairs."""
    return fa.minimize(fa.difference(T, larger_sync_set(T, T)))


# ---------------------------------------------------------------------------
# regularity of allsync / minsync / maxsync


def allsync_regular(S, T) -> Verdict:
    """Is ``{w in T | ⟦w⟧ in ⟦S⟧}`` regular?  On ``yes`` the witness is that set."""
    if not finite_shiftlag(S):
        raise NotFiniteShiftlag("source language must have finite shiftlag")
    target = _Target(T)
    DS, g = _lagged_source(S, target)
    blocks = _entry_blocks(target, DS.initial, lambda e, a: DS.delta[e].get(a))
    pieces = [fa.intersection(target.non_fs_part(), DS)]
    for (q, pS), M in sorted(blocks.items(), key=lambda kv: repr(kv[0])):
        K = relation_ops("intersection",
                         from_sync_fsl(fa.residual(DS, pS), target.alphabet),
                         target.residual_relation(q))
        verdict = is_recognizable(K)
        if not verdict:
            y = fa.shortest_word(M)
            return Verdict(NO, "allsync-entry-recognizability",
                           reason=f"after entry {_show(y)} the remaining pairs are not "
                                  f"a recognizable relation",
                           details={"entry": _show(y)})
        pieces.append(fa.concat(M, filter_by_recognizable(target.residual(q),
                                                          verdict.decomposition)))
    W = fa.minimize(fa.union(*pieces))
    return Verdict(YES, "allsync-entry-recognizability", witness=W,
                   reason=f"all {len(blocks)} entry classes have recognizable remainders",
                   details={"gamma": g, "entryClasses": len(blocks)})


def minsync_regular(S, T) -> Verdict:
    if not finite_shiftlag(S):
        raise NotFiniteShiftlag("source language must have finite shiftlag")
    Tmin = minsync_tt(T)
    v = allsync_regular(S, Tmin)
    v.method = "minsync-via-allsync"
    return v


def maxsync_regular(S, T) -> Verdict:
    """Is the set of ⪯-maximal ``T``-synchronizations of ``⟦S⟧`` regular?

    Entries are grouped by a profile: the source state, the target state and
    the set of (state, difference) pairs of competing same-length prefixes
    that have not yet reached finite shift.  A group contributes the target
    words whose pair is in the source and not realized later by a competitor.
    """
    if not finite_shiftlag(S):
        raise NotFiniteShiftlag("source language must have finite shiftlag")
    target = _Target(T)
    D, fs = target.D, target.fs
    DS, g = _lagged_source(S, target)
    k = target.gamma + 1
    letters = D.alphabet

    def step(extra, b):
        pS, G = extra
        pS2 = DS.delta[pS].get(b)
        if pS2 is None:
            return None
        G2 = set()
        for p, d in G:
            for a, p2 in D.delta[p].items():
                if p2 in fs:
                    continue
                d2 = dk_step(d, a, b, k)
                if d2 is not None:
                    G2.add((p2, d2))
        return pS2, frozenset(G2)

    G0 = frozenset() if D.initial in fs else frozenset({(D.initial, ((), ()))})
    blocks = _entry_blocks(target, (DS.initial, G0), step)
    quotient_cache = {}

    def competitor(p, u, v):
        key = (p, u, v)
        if key not in quotient_cache:
            X = fa.concat(fa.from_word(letters, v), target.residual(p))
            F = full_gamma_lagged(X, max(len(u), 1), target.alphabet)
            quotient_cache[key] = from_sync_fsl(fa.left_quotient(u, F), target.alphabet)
        return quotient_cache[key]

    pieces = [fa.intersection(target.non_fs_part(), DS)]
    recognizable_cache = {}
    for (q, (pS, G)), M in sorted(blocks.items(), key=lambda kv: repr(kv[0])):
        ck = (q, pS, G)
        if ck not in recognizable_cache:
            K = relation_ops("intersection",
                             from_sync_fsl(fa.residual(DS, pS), target.alphabet),
                             target.residual_relation(q))
            for p, (u, v) in sorted(G, key=repr):
                if relation_decide("isEmpty", K):
                    break
                K = relation_ops("difference", K, competitor(p, u, v))
            recognizable_cache[ck] = is_recognizable(K)
        verdict = recognizable_cache[ck]
        if not verdict:
            y = fa.shortest_word(M)
            return Verdict(NO, "maxsync-profiles",
                           reason=f"after entry {_show(y)} the maximal remainders are not "
                                  f"a recognizable relation",
                           details={"entry": _show(y)})
        pieces.append(fa.concat(M, filter_by_recognizable(target.residual(q),
                                                          verdict.decomposition)))
    W = fa.minimize(fa.union(*pieces))
    return Verdict(YES, "maxsync-profiles", witness=W,
                   reason=f"all {len(blocks)} profiles have recognizable remainders",
                   details={"gamma": g, "profiles": len(blocks)})


def _show(w):
    if w is None:
        return None
    return " ".join(str(l) for l in w) if w else "ε"


# ---------------------------------------------------------------------------
# unambiguity


def ambiguity_witness(T):
    """Two distinct words of ``T`` with the same pair, or ``None``.

    Two distinct synchronizations of one pair share a longest common prefix
    after which one continues with an input letter and the other with an
    output letter.  For every reachable state and every such letter pair the
    relations of the two continuations are automatic, so it suffices to test
    their intersection for emptiness.
    """
    if not finite_shiftlag(T):
        raise NotFiniteShiftlag("unambiguity is only decided for finite shiftlag")
    alphabet = _alphabet_from_letters(T.alphabet)
    D = canonical_dfa(T)
    letters = D.alphabet
    access = _access_words(D)
    rel_cache = {}

    def continuation(a, q):
        if (a, q) not in rel_cache:
            L = fa.concat(fa.from_word(letters, (a,)), fa.residual(D, q))
            rel_cache[(a, q)] = from_sync_fsl(L, alphabet)
        return rel_cache[(a, q)]

    for p in range(D.n):
        ins = [(a, q) for a, q in D.delta[p].items() if a.role == IN]
        outs = [(c, q) for c, q in D.delta[p].items() if c.role == OUT]
        for a, qa in ins:
            for c, qc in outs:
                common = relation_ops("intersection", continuation(a, qa), continuation(c, qc))
                if relation_decide("isEmpty", common):
                    continue
                u, v = _shortest_pair(common)
                y = access[p]
                w1 = _complete(D, y + (a,), u, v)
                w2 = _complete(D, y + (c,), u, v)
                return w1, w2
    return None


def _access_words(D):
    from collections import deque
    words = {D.initial: ()}
    queue = deque([D.initial])
    while queue:
        p = queue.popleft()
        for a in D.alphabet:
            q = D.delta[p].get(a)
            if q is not None and q not in words:
                words[q] = words[p] + (a,)
                queue.append(q)
    return words


def _shortest_pair(R: AutomaticRelation):
    from .autorel import unconvolve
    return unconvolve(fa.shortest_word(R.dfa))


def _complete(D, prefix, u, v):
    """A word of ``L(D)`` starting with ``prefix`` whose continuation after
    ``prefix[:-1]`` synchronizes ``(u, v)``."""
    from .oracle import interleavings
    head = prefix[:-1]
    first = prefix[-1]
    for w in interleavings(u, v):
        if w and w[0] == first and fa.member(D, head + w):
            return head + w
    raise AssertionError("no completion found for an ambiguity witness")


def is_unambiguous(T) -> bool:
    return ambiguity_witness(T) is None


# ---------------------------------------------------------------------------
# prefix-closed targets


def _alternating(alphabet: TaggedAlphabet):
    L = alphabet.letters
    return fa.star(fa.concat(fa.letters_lang(L, alphabet.sigma), fa.letters_lang(L, alphabet.gamma)))


def is_prefix_closed_even(U, alphabet: TaggedAlphabet | None = None) -> bool:
    """``U ⊆ (ΣΓ)*`` and removing the last two letters of a word stays in ``U``."""
    alphabet = alphabet or _alphabet_from_letters(U.alphabet)
    if not fa.subset(U, _alternating(alphabet)):
        raise NotAlternating("language is not contained in (ΣΓ)*")
    D = fa.minimize(U)
    # states from which a final state is reached in exactly two steps
    two = [p for p in range(D.n)
           if any(r in D.finals for q in D.delta[p].values() for r in D.delta[q].values())]
    stripped = fa.Dfa(D.alphabet, D.n, D.initial, two, D.delta)
    return fa.subset(stripped, D)


def maxsync_prefix_closed(U, alphabet: TaggedAlphabet | None = None) -> fa.Dfa:
    """Maximal synchronizations of ``T = U·Σ*Γ*`` for an even prefix-closed ``U``.

    These are the words ``u x y`` with ``u ∈ U``, ``x ∈ Σ*``, ``y ∈ Γ*`` such
    that ``x`` or ``y`` is empty, or ``u a b ∉ U`` for the first letters
    ``a`` of ``x`` and ``b`` of ``y``.
    """
    alphabet = alphabet or _alphabet_from_letters(U.alphabet)
    try:
        closed = is_prefix_closed_even(U, alphabet)
    except NotAlternating:
        closed = False
    if not closed:
        raise NotPrefixClosed("U must be contained in (ΣΓ)* and closed under even prefixes")
    D = fa.minimize(U)
    letters = alphabet.letters
    n = D.n
    edges = [(p, a, q) for p, a, q in D.edges()]
    index = {}

    def sid(key):
        nonlocal n
        if key not in index:
            index[key] = n
            n += 1
        return index[key]

    finals = set()
    y_state = sid(("y",))
    finals.add(y_state)
    for c in alphabet.gamma:
        edges.append((y_state, c, y_state))
    if D.finals:
        for s in D.finals:
            x0 = sid(("x0", s))
            edges.append((s, fa.EPS, x0))
            finals.add(x0)
            for c in alphabet.gamma:
                edges.append((x0, c, y_state))
            for a in alphabet.sigma:
                xa = sid(("x", s, a))
                edges.append((x0, a, xa))
                finals.add(xa)
        for (kind, *rest), j in list(index.items()):
            if kind != "x":
                continue
            s, a = rest
            for a2 in alphabet.sigma:
                edges.append((j, a2, j))
            mid = D.delta[s].get(a)
            for c in alphabet.gamma:
                back = D.delta[mid].get(c) if mid is not None else None
                if back is None or back not in D.finals:
                    edges.append((j, c, y_state))
    return fa.minimize(fa.Nfa.from_edges(letters, n, D.initial, finals, edges))


def identity_language(alphabet: TaggedAlphabet) -> fa.Nfa:
    """``Id_A = {(i:a)(o:a) | a ∈ A}*`` over a tagged alphabet with equal sides."""
    L = alphabet.letters
    pairs = [fa.from_word(L, (Letter(IN, a), Letter(OUT, a))) for a in alphabet.inputs]
    return fa.star(fa.union(*pairs)) if pairs else fa.epsilon(L)


def prefix_target(alphabet: TaggedAlphabet) -> fa.Nfa:
    """``Id_A · Σ*Γ*``"""
    return fa.concat(identity_language(alphabet), fs_canonical(alphabet))


def is_prefix_recognizable(R: AutomaticRelation) -> Verdict:
    alphabet = R.alphabet
    if tuple(alphabet.inputs) != tuple(alphabet.outputs):
        raise AlphabetShapeMismatch("input and output alphabets must be copies of one alphabet")
    S = fa.minimize(conv_to_sync(R))
    T = prefix_target(alphabet)
    v = maxsync_regular(S, T)
    answer = YES if v.yes else NO
    return Verdict(answer, "prefix-closed-target-maxsync", witness=v.witness,
                   reason=("maximal synchronizations in Id_A·Σ*Γ* are regular" if v.yes
                           else "maximal synchronizations in Id_A·Σ*Γ* are not regular: "
                           + v.reason),
                   details=v.details)


# ---------------------------------------------------------------------------
# the router


def _pair_contained(S, T, alphabet) -> bool:
    return relation_decide("includes", from_sync_fsl(S, alphabet), from_sync_fsl(T, alphabet))


def decide_definability(S, T) -> Verdict:
    """Is ``⟦S⟧`` definable by a regular subset of ``T``?"""
    fa.check_same_alphabet(S, T)
    alphabet = _alphabet_from_letters(T.alphabet)
    cs, ct = classify(S), classify(T)
    checks = []
    if cs.shiftlag_finite and ct.shiftlag_finite:
        if not _pair_contained(S, T, alphabet):
            return Verdict(NO, "pair-containment",
                           reason="some pair of the source has no synchronization in the target",
                           checks=["containment: fails"])
        checks.append("containment: holds")
        if cs.shift_finite:
            W = fa.minimize(filter_by_recognizable(T, fs_decomposition(S)))
            return Verdict(YES, "recognizable-source", witness=W,
                           reason="source relation is recognizable and contained in the target",
                           checks=checks)
        if ct.shift_finite:
            rec = is_recognizable(from_sync_fsl(S, alphabet))
            if not rec:
                return Verdict(NO, "recognizable-target",
                               reason="target defines only recognizable relations and the "
                                      "source relation is not recognizable",
                               checks=checks + ["source recognizable: no"])
            W = fa.minimize(filter_by_recognizable(T, rec.decomposition))
            return Verdict(YES, "recognizable-target", witness=W,
                           reason="source relation is recognizable and contained in the target",
                           checks=checks + ["source recognizable: yes"])
        if is_unambiguous(T):
            v = minsync_regular(S, T)
            checks.append(f"target unambiguous; minsync regular: {v.answer}")
            if v.yes:
                return Verdict(YES, "unambiguous-target", witness=v.witness,
                               reason="target is unambiguous and minsync is regular",
                               checks=checks)
            return Verdict(NO, "unambiguous-target",
                           reason="target is unambiguous and minsync is not regular: " + v.reason,
                           checks=checks)
        vtt = maxsync_regular(T, T)
        checks.append(f"maxsync(T,T) regular: {vtt.answer}")
        if vtt.yes:
            v = maxsync_regular(S, T)
            checks.append(f"maxsync(S,T) regular: {v.answer}")
            if v.yes:
                return Verdict(YES, "maxsync-target", witness=v.witness,
                               reason="maxsync(T,T) is regular and so is maxsync(S,T)",
                               checks=checks)
            return Verdict(NO, "maxsync-target",
                           reason="maxsync(T,T) is regular but maxsync(S,T) is not",
                           checks=checks)
        for name, proc in (("allsync", allsync_regular), ("minsync", minsync_regular),
                           ("maxsync", maxsync_regular)):
            v = proc(S, T)
            checks.append(f"{name} regular: {v.answer}")
            if v.yes:
                return Verdict(YES, "sufficient-checks", witness=v.witness,
                               reason=f"{name}(S,T) is regular and defines the source relation",
                               checks=checks)
        return Verdict(UNKNOWN, "sufficient-checks",
                       reason="no decidable case applies and allsync, minsync and maxsync "
                              "are all non-regular",
                       checks=checks)
    # at least one operand outside finite shiftlag
    if not cs.shiftlag_finite:
        checks.append("source has infinite shiftlag")
    if not ct.shiftlag_finite:
        checks.append("target has infinite shiftlag")
    if cs.shift_finite:
        W = fa.minimize(filter_by_recognizable(T, fs_decomposition(S)))
        if finite_shiftlag(W):
            if relation_decide("equivalent", from_sync_fsl(W, alphabet),
                               from_sync_fsl(S, alphabet)):
                return Verdict(YES, "sufficient-checks", witness=W,
                               reason="the target words with source pairs form an FSL "
                                      "language with exactly the source relation",
                               checks=checks + ["allsync regular and pair-equal: yes"])
            if ct.shiftlag_finite is False:
                checks.append("allsync pairs differ from the source pairs")
        else:
            checks.append("allsync witness has infinite shiftlag; containment undecided")
    return Verdict(UNKNOWN, "outside-fsl",
                   reason="an operand has infinite shiftlag; containment of rational relations "
                          "is undecidable in general",
                   checks=checks)


def separability_to_definability(R1: AutomaticRelation, R2: AutomaticRelation):
    """Build ``(S, T)`` with ``⟦S⟧ ∈ Rel(T)`` iff ``R1`` and ``R2`` are separable by a
    recognizable relation."""
    if not relation_decide("isEmpty", relation_ops("intersection", R1, R2)):
        raise NotDisjoint("the two relations intersect")
    alphabet = R1.alphabet
    c1 = relation_ops("complement", R1)
    c2 = relation_ops("complement", R2)
    S = fa.minimize(conv_to_sync(c2))
    M = conv_to_sync(relation_ops("intersection", c1, c2))
    T = fa.minimize(fa.union(fs_canonical(alphabet), M))
    return S, T
