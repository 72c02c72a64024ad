"""Resynchronization: differences of synchronizations, relation filters and
canonical forms."""

from __future__ import annotations

from . import automata as fa
from .autorel import (PAD, AutomaticRelation, RecognizableDecomposition, conv_to_sync,
                      from_sync_fsl, fs_decomposition, is_recognizable, _alphabet_from_letters,
                      _buffer_step, _pad_letter)
from .errors import (Incompatible, LagBoundExceeded, NotFiniteShift, NotFiniteShiftlag,
                     NotRecognizableOnTarget)
from .syncword import (IN, OUT, Letter, TaggedAlphabet, finite_shift, finite_shiftlag,
                       lag_bounded_tail, project)


def _is_prefix(a, b):
    return len(a) <= len(b) and tuple(b[:len(a)]) == tuple(a)


def compatible(x, y) -> bool:
    if len(x) != len(y):
        return False
    for role in (IN, OUT):
        px, py = project(x, role), project(y, role)
        if not (_is_prefix(px, py) or _is_prefix(py, px)):
            return False
    return True


def diff_of(x, y) -> tuple:
    """Shortest ``(u, v)`` with ``⟦xu⟧ = ⟦yv⟧``; ``u`` completes ``x`` and ``v`` completes ``y``."""
    if not compatible(x, y):
        raise Incompatible("the two synchronizations are not compatible")
    u, v = [], []
    for role in (IN, OUT):
        px, py = project(x, role), project(y, role)
        if len(px) < len(py):
            u.extend(Letter(role, s) for s in py[len(px):])
        else:
            v.extend(Letter(role, s) for s in px[len(py):])
    return tuple(u), tuple(v)


def dk_step(state, a, b, k):
    """One step of the difference automaton; ``None`` when no transition exists.

    ``state = (u, v)``: ``u`` is what the first word still lacks, ``v`` what
    the second word lacks.  Each is a word of a single role.
    """
    u, v = state
    # letters the first word has in excess, and letters the second word has in excess
    x_extra, y_extra = list(v), list(u)
    for letter, mine, other in ((a, x_extra, y_extra), (b, y_extra, x_extra)):
        if other and other[0].role == letter.role:
            if other[0] != letter:
                return None
            other.pop(0)
        else:
            mine.append(letter)
    if len(x_extra) > k or len(y_extra) > k:
        return None
    if len({l.role for l in x_extra}) > 1 or len({l.role for l in y_extra}) > 1:
        return None
    return tuple(y_extra), tuple(x_extra)


def build_dk(k: int, alphabet: TaggedAlphabet) -> fa.Dfa:
    """Difference automaton over pairs of tagged letters; states are reported in ``labels``."""
    letters = alphabet.letters
    pairs = tuple((a, b) for a in letters for b in letters)
    start = ((), ())
    index = {start: 0}
    states = [start]
    delta = []
    i = 0
    while i < len(states):
        row = {}
        for a, b in pairs:
            nxt = dk_step(states[i], a, b, k)
            if nxt is None:
                continue
            j = index.get(nxt)
            if j is None:
                j = len(states)
                index[nxt] = j
                states.append(nxt)
            row[(a, b)] = j
        delta.append(row)
        i += 1
    D = DkAutomaton(pairs, len(states), 0, range(len(states)), delta)
    D.labels = tuple(states)
    return D


class DkAutomaton(fa.Dfa):
    __slots__ = ("labels",)

    def run_pair(self, x, y):
        """State label reached on ``x ⊗ y`` or ``None``."""
        q = self.run(tuple(zip(x, y)))
        return None if q is None else self.labels[q]


# ---------------------------------------------------------------------------
# filters


def lift_input(A, alphabet: TaggedAlphabet) -> fa.Nfa:
    """Synchronizations whose input projection lies in ``L(A)``."""
    return fa.inverse_morphism(A, alphabet.letters,
                               lambda l: l.sym if l.role == IN else fa.EPS)


def lift_output(A, alphabet: TaggedAlphabet) -> fa.Nfa:
    return fa.inverse_morphism(A, alphabet.letters,
                               lambda l: l.sym if l.role == OUT else fa.EPS)


def filter_by_recognizable(T, R: RecognizableDecomposition) -> fa.Nfa:
    """Words of ``T`` whose pair lies in the recognizable relation ``R``."""
    alphabet = R.alphabet
    fa.check_same_alphabet(T, fa.empty(alphabet.letters))
    pieces = []
    for U, V in R.parts:
        piece = fa.intersection(T, lift_input(U, alphabet), lift_output(V, alphabet))
        if not fa.is_empty(piece):
            pieces.append(piece)
    if not pieces:
        return fa.empty(alphabet.letters)
    return fa.trim(fa.remove_epsilon(fa.union(*pieces)))


def _buffered_filter(T, R: AutomaticRelation, gamma: int) -> fa.Nfa:
    """Product of ``T`` with ``R``'s convolution DFA for ``T ⊆ L_{≤γ}(Σ*+Γ*)``.

    Phase one pairs letters through a buffer of at most ``γ`` pending letters;
    a guessed switch starts the final single-role block, after which letters
    are paired with what is left in the buffer and then padded.
    """
    alphabet = R.alphabet
    A = fa.trim(fa.remove_epsilon(T))
    C = R.dfa
    letters = alphabet.letters

    def flush(r, buf):
        for l in buf:
            if r is None:
                return None
            r = C.delta[r].get(_pad_letter(l))
        return r

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

    sid((A.initial, C.initial, (), None))
    i = 0
    while i < len(states):
        t, r, buf, tail = states[i]
        if tail is None:
            # guess the start of the final block
            for role in (IN, OUT):
                if buf and buf[0].role == role:
                    r2 = flush(r, buf)
                    if r2 is not None:
                        edges.append((i, fa.EPS, sid((t, r2, (), role))))
                else:
                    edges.append((i, fa.EPS, sid((t, r, buf, role))))
            for l in letters:
                targets = A.delta[t].get(l)
                if not targets:
                    continue
                nbuf, emitted = _buffer_step(buf, l)
                if len(nbuf) > gamma:
                    continue
                r2 = r if emitted is None else C.delta[r].get(emitted)
                if r2 is None:
                    continue
                for t2 in targets:
                    edges.append((i, l, sid((t2, r2, nbuf, None))))
        else:
            for l in letters:
                if l.role != tail:
                    continue
                targets = A.delta[t].get(l)
                if not targets:
                    continue
                if buf:
                    r2 = C.delta[r].get((buf[0].sym, l.sym) if l.role == OUT else (l.sym, buf[0].sym))
                    nbuf = buf[1:]
                else:
                    r2 = C.delta[r].get(_pad_letter(l))
                    nbuf = ()
                if r2 is None:
                    continue
                for t2 in targets:
                    edges.append((i, l, sid((t2, r2, nbuf, tail))))
        i += 1
    finals = []
    for j, (t, r, buf, tail) in enumerate(states):
        if t in A.finals:
            r2 = flush(r, buf)
            if r2 is not None and r2 in C.finals:
                finals.append(j)
    return fa.trim(fa.remove_epsilon(fa.Nfa.from_edges(letters, len(states), 0, finals, edges)))


def filter_by_automatic(T, R: AutomaticRelation, gamma: int, m: int = 1) -> fa.Nfa:
    """Words of ``T ⊆ L_{≤γ}(Σ*+Γ*)^m`` whose pair lies in the automatic relation ``R``.

    For ``m <= 1`` the buffered product is exact.  For longer tails the result
    is only guaranteed regular when ``R`` restricted to ``⟦T⟧`` is
    recognizable, so that is checked first and the recognizable filter used.
    """
    alphabet = R.alphabet
    if m <= 1:
        shape = lag_bounded_tail(alphabet, gamma) if m == 1 else \
            fa.as_nfa(_lag_only(alphabet, gamma))
        if not fa.subset(T, shape):
            raise LagBoundExceeded(f"language is not contained in L_<={gamma}(Σ*+Γ*)^{m}")
        return _buffered_filter(T, R, gamma)
    target = R
    if finite_shiftlag(T):
        from .autorel import relation_ops
        target = relation_ops("intersection", R, from_sync_fsl(T, alphabet))
    verdict = is_recognizable(target)
    if not verdict:
        raise NotRecognizableOnTarget("relation is not recognizable on the target's pairs")
    return filter_by_recognizable(T, verdict.decomposition)


def _lag_only(alphabet, gamma):
    from .syncword import lag_bounded
    return lag_bounded(alphabet, gamma)


def full_gamma_lagged(S, gamma: int, alphabet: TaggedAlphabet | None = None) -> fa.Nfa:
    """All words of ``L_{≤γ}(Σ*+Γ*)`` synchronizing a pair of ``⟦S⟧``."""
    if not finite_shiftlag(S):
        raise NotFiniteShiftlag("full lagged representation needs finite shiftlag")
    alphabet = alphabet or _alphabet_from_letters(S.alphabet)
    R = from_sync_fsl(S, alphabet)
    return _buffered_filter(lag_bounded_tail(alphabet, gamma), R, gamma)


def to_canonical_fsl(S, alphabet: TaggedAlphabet | None = None) -> fa.Dfa:
    """``(ΣΓ)*(Σ*+Γ*)``-controlled language with the same relation."""
    if not finite_shiftlag(S):
        raise NotFiniteShiftlag("canonical FSL form needs finite shiftlag")
    return fa.minimize(conv_to_sync(from_sync_fsl(S, alphabet)))


def to_canonical_fs(S, alphabet: TaggedAlphabet | None = None) -> fa.Dfa:
    """``Σ*Γ*``-controlled language with the same relation."""
    if not finite_shift(S):
        raise NotFiniteShift("canonical FS form needs finite shift")
    D = fs_decomposition(S)
    if alphabet is not None:
        D = RecognizableDecomposition(alphabet, D.parts)
    return decomposition_to_fs(D)


def decomposition_to_fs(D: RecognizableDecomposition) -> fa.Dfa:
    alphabet = D.alphabet
    letters = alphabet.letters
    if not D.parts:
        return fa.empty_dfa(letters)
    pieces = []
    for U, V in D.parts:
        Ut = fa.morphism(U, letters, lambda a: (Letter(IN, a),))
        Vt = fa.morphism(V, letters, lambda c: (Letter(OUT, c),))
        pieces.append(fa.concat(Ut, Vt))
    return fa.minimize(fa.union(*pieces))


def to_canonical_fs_via_fsl(S, alphabet: TaggedAlphabet | None = None) -> fa.Dfa:
    """Same as :func:`to_canonical_fs`, going through the automatic relation."""
    if not finite_shift(S):
        raise NotFiniteShift("canonical FS form needs finite shift")
    verdict = is_recognizable(from_sync_fsl(S, alphabet))
    return decomposition_to_fs(verdict.decomposition)
