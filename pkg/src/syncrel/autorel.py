"""Automatic relations (convolution automata) and recognizable decompositions.

A pair ``(u, v)`` is encoded by its convolution: the word of letter pairs
``(u[k], v[k])`` padded on the right with ``None`` (⊥) on the shorter side.
The letter ``(None, None)`` never occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import automata as fa
from .automata import EPS, Dfa, Nfa
from .errors import AlphabetMismatch, NotFiniteShift, NotFiniteShiftlag
from .syncword import (IN, OUT, Letter, TaggedAlphabet, canonical_dfa, finite_shift,
                       finite_shiftlag, fs_states, gamma_bound, tagged_alphabet_of)

PAD = None


def convolve(u, v) -> tuple:
    n = max(len(u), len(v))
    return tuple((u[k] if k < len(u) else PAD, v[k] if k < len(v) else PAD) for k in range(n))


def unconvolve(w) -> tuple:
    return (tuple(a for a, _ in w if a is not PAD), tuple(c for _, c in w if c is not PAD))


def conv_alphabet(alphabet: TaggedAlphabet) -> tuple:
    both = [(a, c) for a in alphabet.inputs for c in alphabet.outputs]
    left = [(a, PAD) for a in alphabet.inputs]
    right = [(PAD, c) for c in alphabet.outputs]
    return tuple(both + left + right)


@lru_cache(maxsize=None)
def well_formed(alphabet: TaggedAlphabet) -> Dfa:
    """Convolutions of arbitrary pairs: once a track is padded it stays padded."""
    letters = conv_alphabet(alphabet)
    delta = [{}, {}, {}]
    for l in letters:
        a, c = l
        if a is not PAD and c is not PAD:
            delta[0][l] = 0
        elif c is PAD:
            delta[0][l] = 1
            delta[1][l] = 1
        else:
            delta[0][l] = 2
            delta[2][l] = 2
    return Dfa(letters, 3, 0, (0, 1, 2), delta)


@dataclass(frozen=True)
class AutomaticRelation:
    """A binary relation given by a minimal DFA over convolution letters."""

    alphabet: TaggedAlphabet
    dfa: Dfa

    @classmethod
    def from_automaton(cls, alphabet, A):
        W = well_formed(alphabet)
        fa.check_same_alphabet(A, W)
        return cls(alphabet, fa.minimize(fa.intersection(A, W)))

    def contains(self, u, v) -> bool:
        return self.dfa.accepts(convolve(tuple(u), tuple(v)))

    def pairs(self, max_total: int):
        """All pairs with ``|u| + |v| <= max_total`` (sorted)."""
        out = []
        for w in fa.enumerate_up_to(self.dfa, max_total):
            u, v = unconvolve(w)
            if len(u) + len(v) <= max_total:
                out.append((u, v))
        return sorted(out, key=lambda p: (len(p[0]) + len(p[1]), p))


def _check(*rels):
    for r in rels[1:]:
        if r.alphabet != rels[0].alphabet:
            raise AlphabetMismatch("relations over different alphabets")


def full_relation(alphabet) -> AutomaticRelation:
    return AutomaticRelation(alphabet, fa.minimize(well_formed(alphabet)))


def empty_relation(alphabet) -> AutomaticRelation:
    return AutomaticRelation(alphabet, fa.empty_dfa(conv_alphabet(alphabet)))


def equal_length_relation(alphabet) -> AutomaticRelation:
    letters = conv_alphabet(alphabet)
    both = [l for l in letters if PAD not in l]
    return AutomaticRelation(alphabet, fa.minimize(fa.universal(letters, both)))


def relation_ops(op: str, *rels) -> AutomaticRelation:
    _check(*rels)
    alphabet = rels[0].alphabet
    if op == "complement":
        return AutomaticRelation.from_automaton(alphabet, fa.complement(rels[0].dfa))
    if op == "union":
        return AutomaticRelation(alphabet, fa.minimize(fa.union(*[r.dfa for r in rels])))
    if op == "intersection":
        return AutomaticRelation(alphabet, fa.minimize(fa.intersection(*[r.dfa for r in rels])))
    if op == "difference":
        return AutomaticRelation(alphabet, fa.minimize(fa.difference(rels[0].dfa, rels[1].dfa)))
    raise ValueError(f"unknown relation operation {op!r}")


def relation_decide(op: str, *args) -> bool:
    """``member(R, u, v)``, ``includes(R1, R2)`` (R1 ⊆ R2), ``equivalent``, ``isEmpty``."""
    if op == "member":
        R, u, v = args
        return R.contains(u, v)
    if op == "includes":
        _check(*args)
        return fa.subset(args[0].dfa, args[1].dfa)
    if op == "equivalent":
        _check(*args)
        return fa.equivalent(args[0].dfa, args[1].dfa)
    if op == "isEmpty":
        return fa.is_empty(args[0].dfa)
    raise ValueError(f"unknown relation decision {op!r}")


def domain_of(R: AutomaticRelation) -> Dfa:
    return fa.minimize(fa.morphism(R.dfa, R.alphabet.inputs,
                                   lambda l: () if l[0] is PAD else (l[0],)))


def range_of(R: AutomaticRelation) -> Dfa:
    return fa.minimize(fa.morphism(R.dfa, R.alphabet.outputs,
                                   lambda l: () if l[1] is PAD else (l[1],)))


def inverse_image(R: AutomaticRelation, V) -> Dfa:
    """``{u | exists v in L(V) with (u, v) in R}``."""
    return domain_of(intersect_range(R, V))


def intersect_range(R: AutomaticRelation, V) -> AutomaticRelation:
    return intersect_tracks(R, None, V)


def intersect_tracks(R: AutomaticRelation, U=None, V=None) -> AutomaticRelation:
    """Restrict ``R`` to pairs with ``u in L(U)`` and ``v in L(V)``."""
    parts = [R.dfa]
    if U is not None:
        parts.append(conv_product(R.alphabet, U, None))
    if V is not None:
        parts.append(conv_product(R.alphabet, None, V))
    return AutomaticRelation(R.alphabet, fa.minimize(fa.intersection(*parts)))


# ---------------------------------------------------------------------------
# products of regular languages as convolution automata


def conv_product(alphabet: TaggedAlphabet, U, V) -> Nfa:
    """Convolution automaton of ``L(U) x L(V)`` (``None`` stands for all words)."""
    letters = conv_alphabet(alphabet)
    DU = fa.complete(fa.as_dfa(U)) if U is not None else fa.universal(alphabet.inputs)
    DV = fa.complete(fa.as_dfa(V)) if V is not None else fa.universal(alphabet.outputs)
    DU = fa.as_dfa(DU)
    DV = fa.as_dfa(DV)
    # phase 0: both tracks running; 1: only u; 2: only v
    index = {}
    states = []
    delta = []

    def sid(key):
        j = index.get(key)
        if j is None:
            j = len(states)
            index[key] = j
            states.append(key)
            delta.append({})
        return j

    start = sid((DU.initial, DV.initial, 0))
    i = 0
    while i < len(states):
        p, q, phase = states[i]
        for l in letters:
            a, c = l
            if a is not PAD and c is not PAD:
                if phase != 0:
                    continue
                key = (DU.delta[p].get(a), DV.delta[q].get(c), 0)
            elif c is PAD:
                if phase == 2 or q not in DV.finals:
                    continue
                key = (DU.delta[p].get(a), q, 1)
            else:
                if phase == 1 or p not in DU.finals:
                    continue
                key = (p, DV.delta[q].get(c), 2)
            if key[0] is None or key[1] is None:
                continue
            delta[i][l] = sid(key)
        i += 1
    finals = [k for k, (p, q, _) in enumerate(states) if p in DU.finals and q in DV.finals]
    return fa.Dfa(letters, len(states), start, finals, delta).to_nfa()


def fix_track(R: AutomaticRelation, track: int, word) -> Nfa:
    """Automaton over the other track's alphabet for ``{x | conv(word, x) in R}`` (track 0)
    or ``{x | conv(x, word) in R}`` (track 1)."""
    word = tuple(word)
    D = R.dfa
    other = R.alphabet.outputs if track == 0 else R.alphabet.inputs
    n = len(word)
    # state (dfa state, position in word, other-track ended flag)
    index = {}
    states = []
    edges = []

    def sid(key):
        j = index.get(key)
        if j is None:
            j = len(states)
            index[key] = j
            states.append(key)
        return j

    def letter(fixed, free):
        return (fixed, free) if track == 0 else (free, fixed)

    sid((D.initial, 0, False))
    i = 0
    while i < len(states):
        q, k, ended = states[i]
        fixed = word[k] if k < n else PAD
        if not ended:
            for x in other:
                if fixed is PAD:
                    nq = D.delta[q].get(letter(PAD, x))
                    if nq is not None:
                        edges.append((i, x, sid((nq, k, False))))
                else:
                    nq = D.delta[q].get(letter(fixed, x))
                    if nq is not None:
                        edges.append((i, x, sid((nq, k + 1, False))))
        if fixed is not PAD:
            nq = D.delta[q].get(letter(fixed, PAD))
            if nq is not None:
                edges.append((i, EPS, sid((nq, k + 1, True))))
        i += 1
    finals = [j for j, (q, k, _) in enumerate(states) if k == n and q in D.finals]
    return fa.trim(Nfa.from_edges(other, len(states), 0, finals, edges))


def section_language(R: AutomaticRelation, u) -> Dfa:
    """``R_u = {v | (u, v) in R}``."""
    return fa.minimize(fix_track(R, 0, u))


# ---------------------------------------------------------------------------
# recognizable decompositions


@dataclass(frozen=True)
class RecognizableDecomposition:
    """A finite union of products ``U_i x V_i`` with pairwise disjoint ``U_i``."""

    alphabet: TaggedAlphabet
    parts: tuple

    def contains(self, u, v) -> bool:
        return any(U.accepts(tuple(u)) and V.accepts(tuple(v)) for U, V in self.parts)

    def is_disjoint(self) -> bool:
        for i in range(len(self.parts)):
            for j in range(i + 1, len(self.parts)):
                if not fa.is_empty(fa.intersection(self.parts[i][0], self.parts[j][0])):
                    return False
        return True

    def domain(self) -> Dfa:
        if not self.parts:
            return fa.empty_dfa(self.alphabet.inputs)
        return fa.minimize(fa.union(*[U for U, V in self.parts if not fa.is_empty(V)]
                                    or [fa.empty(self.alphabet.inputs)]))


def disjointify(alphabet: TaggedAlphabet, parts) -> RecognizableDecomposition:
    """Turn an arbitrary finite union of products into a disjoint one.

    Inputs are grouped by the set of parts whose ``U`` they belong to (a
    product-DFA construction); each group gets the union of those ``V``.
    Groups with identical ``V`` are merged.
    """
    parts = [(fa.minimize(U), fa.minimize(V)) for U, V in parts]
    parts = [(U, V) for U, V in parts if U.finals and V.finals]
    if not parts:
        return RecognizableDecomposition(alphabet, ())
    Us = [fa.complete(fa.with_alphabet(U, alphabet.inputs)) for U, _ in parts]
    start = tuple(U.initial for U in Us)
    index = {start: 0}
    tuples = [start]
    delta = []
    i = 0
    while i < len(tuples):
        t = tuples[i]
        row = {}
        for a in alphabet.inputs:
            nt = tuple(U.delta[s][a] for U, s in zip(Us, t))
            j = index.get(nt)
            if j is None:
                j = len(tuples)
                index[nt] = j
                tuples.append(nt)
            row[a] = j
        delta.append(row)
        i += 1
    groups = {}
    for k, t in enumerate(tuples):
        sig = frozenset(m for m, (U, s) in enumerate(zip(Us, t)) if s in U.finals)
        if sig:
            groups.setdefault(sig, []).append(k)
    by_v = {}
    for sig, members in groups.items():
        V = fa.minimize(fa.union(*[parts[m][1] for m in sorted(sig)]))
        key = _dfa_key(V)
        U = Dfa(alphabet.inputs, len(tuples), 0, members, delta)
        if key in by_v:
            by_v[key] = (fa.union(by_v[key][0], U), V)
        else:
            by_v[key] = (U, V)
    result = []
    for U, V in by_v.values():
        U = fa.minimize(U)
        if U.finals:
            result.append((U, V))
    result.sort(key=lambda p: _first_word(p[0]))
    return RecognizableDecomposition(alphabet, tuple(result))


def _dfa_key(D: Dfa):
    return (D.n, D.initial, tuple(sorted(D.finals)),
            tuple(tuple(sorted(((repr(a), q) for a, q in row.items()))) for row in D.delta))


def _first_word(D):
    w = fa.enumerate_up_to(D, 0)
    s = fa.shortest_word(D)
    return (len(s) if s is not None else 0, s or ()) if not w else (0, ())


def rec_to_automatic(D: RecognizableDecomposition) -> AutomaticRelation:
    if not D.parts:
        return empty_relation(D.alphabet)
    A = fa.union(*[conv_product(D.alphabet, U, V) for U, V in D.parts])
    return AutomaticRelation(D.alphabet, fa.minimize(A))


# ---------------------------------------------------------------------------
# the recognizability test


def _lift_pair(D: Dfa, tracks, letters3):
    """Run a complete 2-track DFA on the given two tracks of a 3-track word."""
    x, y = tracks
    delta = []
    for p in range(D.n):
        row = {}
        for l in letters3:
            pair = (l[x], l[y])
            row[l] = p if pair == (PAD, PAD) else D.delta[p][pair]
        delta.append(row)
    return Dfa(letters3, D.n, D.initial, D.finals, delta)


def _three_track_letters(alphabet):
    ins = list(alphabet.inputs) + [PAD]
    outs = list(alphabet.outputs) + [PAD]
    return tuple((a, b, c) for a in ins for b in ins for c in outs
                 if not (a is PAD and b is PAD and c is PAD))


def _input_pair_alphabet(alphabet):
    ins = list(alphabet.inputs) + [PAD]
    return tuple((a, b) for a in ins for b in ins if not (a is PAD and b is PAD))


def _well_formed_tracks(letters, k):
    """Well-formedness for ``k``-track convolutions: a padded track stays padded."""
    delta = []
    index = {0: 0}
    masks = [0]
    i = 0
    while i < len(masks):
        m = masks[i]
        row = {}
        for l in letters:
            if any((m >> t) & 1 and l[t] is not PAD for t in range(k)):
                continue
            nm = m
            for t in range(k):
                if l[t] is PAD:
                    nm |= 1 << t
            j = index.get(nm)
            if j is None:
                j = len(masks)
                index[nm] = j
                masks.append(nm)
            row[l] = j
        delta.append(row)
        i += 1
    return Dfa(letters, len(masks), 0, range(len(masks)), delta)


def equivalence_relation(R: AutomaticRelation) -> Dfa:
    """DFA over pairs of input letters for ``{(u, u') | R_u = R_u'}``."""
    alphabet = R.alphabet
    letters3 = _three_track_letters(alphabet)
    C = fa.complete(fa.with_alphabet(fa.minimize(R.dfa), conv_alphabet(alphabet)))
    A1 = _lift_pair(C, (0, 2), letters3)
    A2 = _lift_pair(C, (1, 2), letters3)
    W3 = _well_formed_tracks(letters3, 3)
    # X = well-formed triples where exactly one of (u, v), (u', v) is in R
    xor = fa._pair_product(A1.to_nfa(), A2.to_nfa(), lambda x, y: x != y)
    X = fa.intersection(xor, W3)
    letters2 = _input_pair_alphabet(alphabet)
    proj = fa.morphism(X, letters2,
                       lambda l: () if l[0] is PAD and l[1] is PAD else ((l[0], l[1]),))
    W2 = _well_formed_tracks(letters2, 2)
    return fa.minimize(fa.difference(W2, proj))


def _ranked(alphabet):
    order = {a: k for k, a in enumerate(alphabet.inputs)}

    def less(a, b):
        return order[a] < order[b]
    return less


def _llex_less_ranked(alphabet):
    letters2 = _input_pair_alphabet(alphabet)
    less = _ranked(alphabet)
    EQ, LT, GT, SHORTER, LONGER = range(5)
    delta = [{} for _ in range(5)]
    for l in letters2:
        a, b = l
        for s in (EQ, LT, GT):
            if a is not PAD and b is not PAD:
                if s == EQ:
                    delta[s][l] = EQ if a == b else (LT if less(b, a) else GT)
                else:
                    delta[s][l] = s
            elif b is PAD:
                delta[s][l] = SHORTER
            else:
                delta[s][l] = LONGER
        if b is PAD and a is not PAD:
            delta[SHORTER][l] = SHORTER
        if a is PAD and b is not PAD:
            delta[LONGER][l] = LONGER
    return Dfa(letters2, 5, EQ, (LT, SHORTER), delta)


@dataclass(frozen=True)
class RecognizabilityResult:
    recognizable: bool
    decomposition: RecognizableDecomposition | None
    representatives: tuple

    def __bool__(self):
        return self.recognizable


def is_recognizable(R: AutomaticRelation) -> RecognizabilityResult:
    """Decide whether ``R`` is a finite union of products.

    The inputs with the same section form an automatic equivalence; its
    length-lex least representatives form a regular set which is finite
    exactly when ``R`` is recognizable.  The representatives then give the
    decomposition: one part per class with a non-empty section.
    """
    alphabet = R.alphabet
    E = equivalence_relation(R)
    less = _llex_less_ranked(alphabet)
    not_min = fa.morphism(fa.intersection(E, less), alphabet.inputs,
                          lambda l: () if l[0] is PAD else (l[0],))
    minimal = fa.minimize(fa.difference(fa.universal(alphabet.inputs), not_min))
    if not fa.is_finite(minimal):
        return RecognizabilityResult(False, None, ())
    reps = tuple(fa.enumerate_up_to(minimal, minimal.n))
    parts = []
    for u in reps:
        V = section_language(R, u)
        if not V.finals:
            continue
        U = fa.minimize(_class_of(E, u, alphabet))
        parts.append((U, V))
    return RecognizabilityResult(True, RecognizableDecomposition(alphabet, tuple(parts)), reps)


def _class_of(E: Dfa, u, alphabet) -> Nfa:
    rel = AutomaticRelation(TaggedAlphabet(alphabet.inputs, alphabet.inputs), E)
    return fix_track(rel, 0, u)


# ---------------------------------------------------------------------------
# from synchronization languages to convolutions


def fs_skeletons(D: Dfa, q):
    """Decompose the finite-shift residual of ``D`` at ``q`` into products.

    A skeleton is a sequence of states joined by nonempty single-role blocks
    of alternating roles ending in a final state.  Each skeleton contributes
    the product of the concatenated input blocks and the concatenated output
    blocks.  Returns a list of ``(U, V)`` automata over raw symbols.
    """
    alphabet = tagged_alphabet_of(D)
    ins, outs = alphabet.inputs, alphabet.outputs
    reach = {}

    def targets(p, role):
        key = (p, role)
        if key not in reach:
            seen = set()
            stack = [p]
            while stack:
                s = stack.pop()
                for a, t in D.delta[s].items():
                    if a.role == role and t not in seen:
                        seen.add(t)
                        stack.append(t)
            reach[key] = sorted(seen)
        return reach[key]

    def block(p, t, role):
        letters = ins if role == IN else outs
        edges = [(s, a.sym, r) for s in range(D.n) for a, r in D.delta[s].items()
                 if a.role == role]
        B = fa.Nfa.from_edges(letters, D.n, p, [t], edges)
        # nonempty words only
        if p == t:
            B = fa.difference(B, fa.epsilon(letters))
        return B

    results = []
    sigma_eps = fa.epsilon(ins)
    gamma_eps = fa.epsilon(outs)

    def walk(p, last_role, u_parts, v_parts, depth):
        if depth > 4 * D.n + 4:
            raise NotFiniteShift("residual does not have finite shift")
        if p in D.finals:
            U = fa.concat(*u_parts) if u_parts else sigma_eps
            V = fa.concat(*v_parts) if v_parts else gamma_eps
            results.append((U, V))
        for role in (IN, OUT):
            if role == last_role:
                continue
            for t in targets(p, role):
                B = block(p, t, role)
                if fa.is_empty(B):
                    continue
                if role == IN:
                    walk(t, role, u_parts + [B], v_parts, depth + 1)
                else:
                    walk(t, role, u_parts, v_parts + [B], depth + 1)

    walk(q, None, [], [], 0)
    return results


def fs_decomposition(S) -> RecognizableDecomposition:
    """Recognizable decomposition of a finite-shift synchronization language."""
    if not finite_shift(S):
        raise NotFiniteShift("synchronization language has infinite shift")
    D = canonical_dfa(S)
    alphabet = _alphabet_from_letters(S.alphabet)
    if not D.finals:
        return RecognizableDecomposition(alphabet, ())
    return disjointify(alphabet, fs_skeletons(D, D.initial))


def _alphabet_from_letters(letters) -> TaggedAlphabet:
    return TaggedAlphabet(tuple(l.sym for l in letters if l.role == IN),
                          tuple(l.sym for l in letters if l.role == OUT))


class _ConvBuilder:
    """Incremental NFA over convolution letters."""

    def __init__(self, letters):
        self.letters = letters
        self.index = {}
        self.edges = []
        self.finals = set()
        self.n = 0

    def state(self, key):
        j = self.index.get(key)
        if j is None:
            j = self.n
            self.n += 1
            self.index[key] = j
            return j, True
        return j, False

    def fresh(self):
        j = self.n
        self.n += 1
        return j

    def embed(self, A: Nfa, start_state):
        """Copy ``A`` and link ``start_state`` to its initial state; returns nothing."""
        A = fa.as_nfa(A)
        off = self.n
        self.n += A.n
        for p, a, q in A.edges():
            self.edges.append((p + off, a, q + off))
        for f in A.finals:
            self.finals.add(f + off)
        self.edges.append((start_state, EPS, A.initial + off))

    def build(self, initial):
        return Nfa.from_edges(self.letters, self.n, initial, self.finals, self.edges)


def _pair_letter(x: Letter, y: Letter):
    return (x.sym, y.sym) if x.role == IN else (y.sym, x.sym)


def _pad_letter(x: Letter):
    return (x.sym, PAD) if x.role == IN else (PAD, x.sym)


def _buffer_step(buf, letter):
    """Advance a one-role buffer by a letter; returns (new buffer, emitted pair or None)."""
    if buf and buf[0].role != letter.role:
        return buf[1:], _pair_letter(buf[0], letter)
    return buf + (letter,), None


def sync_to_conv(S, alphabet: TaggedAlphabet | None = None) -> Nfa:
    """Convolution automaton of ``⟦S⟧`` for a finite-shiftlag ``S``."""
    if not finite_shiftlag(S):
        raise NotFiniteShiftlag("only finite-shiftlag languages have automatic relations")
    alphabet = alphabet or _alphabet_from_letters(S.alphabet)
    D = canonical_dfa(S)
    letters = conv_alphabet(alphabet)
    if not D.finals:
        return fa.empty(letters)
    fs = fs_states(D)
    gamma = gamma_bound(S)
    B = _ConvBuilder(letters)
    skeleton_cache = {}
    tail_cache = {}

    def tail_for(q, buf):
        key = (q, buf)
        if key in tail_cache:
            return tail_cache[key]
        if q not in skeleton_cache:
            skeleton_cache[q] = fs_skeletons(D, q)
        parts = []
        for U, V in skeleton_cache[q]:
            if buf and buf[0].role == IN:
                U = fa.concat(fa.from_word(alphabet.inputs, [l.sym for l in buf]), U)
            elif buf:
                V = fa.concat(fa.from_word(alphabet.outputs, [l.sym for l in buf]), V)
            parts.append(conv_product(alphabet, U, V))
        A = fa.union(*parts) if parts else fa.empty(letters)
        tail_cache[key] = A
        return A

    start, _ = B.state(("sim", D.initial, ()))
    if D.initial in fs:
        B.embed(tail_for(D.initial, ()), start)
        return fa.trim(B.build(start))
    work = [(D.initial, ())]
    seen = {(D.initial, ())}
    while work:
        p, buf = work.pop()
        src, _ = B.state(("sim", p, buf))
        if p in D.finals:
            # flush the pending buffer with padding
            cur = src
            for l in buf:
                nxt = B.fresh()
                B.edges.append((cur, _pad_letter(l), nxt))
                cur = nxt
            B.finals.add(cur)
        for a, q in D.delta[p].items():
            nbuf, emitted = _buffer_step(buf, a)
            if q in fs:
                key = ("entry", q, nbuf)
                dst, new = B.state(key)
                if new:
                    B.embed(tail_for(q, nbuf), dst)
            else:
                if len(nbuf) > gamma:
                    raise AssertionError("lag bound violated in the non-finite-shift region")
                dst, _ = B.state(("sim", q, nbuf))
                if (q, nbuf) not in seen:
                    seen.add((q, nbuf))
                    work.append((q, nbuf))
            B.edges.append((src, EPS if emitted is None else emitted, dst))
    return fa.trim(B.build(start))


def from_sync_fsl(S, alphabet: TaggedAlphabet | None = None) -> AutomaticRelation:
    alphabet = alphabet or _alphabet_from_letters(S.alphabet)
    return AutomaticRelation(alphabet, fa.minimize(sync_to_conv(S, alphabet)))


def conv_to_sync(R: AutomaticRelation) -> Nfa:
    """Canonical ``(ΣΓ)*(Σ*+Γ*)`` synchronization language of ``R``."""
    alphabet = R.alphabet

    def image(l):
        a, c = l
        out = []
        if a is not PAD:
            out.append(Letter(IN, a))
        if c is not PAD:
            out.append(Letter(OUT, c))
        return tuple(out)
    return fa.morphism(R.dfa, alphabet.letters, image)
