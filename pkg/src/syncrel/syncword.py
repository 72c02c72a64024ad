"""Tagged alphabets, synchronizations and the lag/shift/shiftlag metrics.

A synchronization is a word over the disjoint union of an input alphabet
(role ``"i"``) and an output alphabet (role ``"o"``).  Letters are
:class:`Letter` pairs, so the two alphabets stay disjoint even when raw
symbols coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from . import automata as fa
from .errors import AlphabetMismatch, NotFiniteShiftlag, UndeclaredLetter
from .regex import parse_regex

IN = "i"
OUT = "o"


class Letter(NamedTuple):
    role: str
    sym: str

    def __str__(self):
        return f"{self.role}:{self.sym}"

    def __repr__(self):
        return f"{self.role}:{self.sym}"


@dataclass(frozen=True)
class TaggedAlphabet:
    inputs: tuple
    outputs: tuple

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))

    @property
    def sigma(self):
        return tuple(Letter(IN, a) for a in self.inputs)

    @property
    def gamma(self):
        return tuple(Letter(OUT, c) for c in self.outputs)

    @property
    def letters(self):
        return self.sigma + self.gamma

    def resolve(self, token: str) -> Letter:
        """Map ``i:a`` / ``o:c`` (or an unambiguous bare symbol) to a letter."""
        if len(token) > 2 and token[1] == ":" and token[0] in (IN, OUT):
            role, sym = token[0], token[2:]
            pool = self.inputs if role == IN else self.outputs
            if sym not in pool:
                raise UndeclaredLetter(token)
            return Letter(role, sym)
        in_i = token in self.inputs
        in_o = token in self.outputs
        if in_i and not in_o:
            return Letter(IN, token)
        if in_o and not in_i:
            return Letter(OUT, token)
        raise UndeclaredLetter(token)

    def shortcuts(self):
        return {"Σ": self.sigma, "Γ": self.gamma, "Sigma": self.sigma, "Gamma": self.gamma}

    def regex(self, text: str) -> fa.Nfa:
        return parse_regex(text, self.letters, self.resolve, self.shortcuts())

    def word(self, text) -> tuple:
        """Parse a whitespace-separated tagged word (or an already-built tuple)."""
        if not isinstance(text, str):
            return tuple(text)
        tokens = text.split()
        if len(tokens) == 1 and tokens[0] not in ("eps", "ε"):
            try:
                return (self.resolve(tokens[0]),)
            except UndeclaredLetter:
                tokens = list(tokens[0])
        if tokens in (["eps"], ["ε"]):
            return ()
        return tuple(self.resolve(t) for t in tokens)

    def input_word(self, text) -> tuple:
        return tuple(text.split()) if " " in text else tuple(text)

    def output_word(self, text) -> tuple:
        return tuple(text.split()) if " " in text else tuple(text)


def check_tagged(A, alphabet: TaggedAlphabet):
    if set(A.alphabet) != set(alphabet.letters):
        raise AlphabetMismatch("automaton is not over the expected tagged alphabet")


def tagged_alphabet_of(A) -> TaggedAlphabet:
    ins = tuple(l.sym for l in A.alphabet if l.role == IN)
    outs = tuple(l.sym for l in A.alphabet if l.role == OUT)
    return TaggedAlphabet(ins, outs)


# ---------------------------------------------------------------------------
# words


def project(w, side: str) -> tuple:
    role = IN if side in (IN, "input") else OUT
    return tuple(l.sym for l in w if l.role == role)


def decode_pair(w) -> tuple:
    return project(w, IN), project(w, OUT)


def balance(letter) -> int:
    return 1 if letter.role == IN else -1


def word_metrics(w) -> tuple:
    """Return ``(lag, shift, shiftlag)`` of a synchronization."""
    bal = 0
    lag = 0
    shift_lags = []
    for i, l in enumerate(w):
        bal += balance(l)
        lag = max(lag, abs(bal))
        if i + 1 < len(w) and w[i + 1].role != l.role:
            shift_lags.append(abs(bal))
    # largest n with n consecutive shifts all at lag >= n: for each shift take
    # the widest window in which it is the smallest lag (stack sweep)
    best = 0
    stack = []
    values = shift_lags + [-1]
    for i, v in enumerate(values):
        start = i
        while stack and stack[-1][1] >= v:
            start, h = stack.pop()
            best = max(best, min(h, i - start))
        stack.append((start, v))
    return lag, len(shift_lags), best


def is_controlled(x, S) -> bool:
    """Word or language ``x`` is contained in ``L(S)``."""
    if isinstance(x, (fa.Nfa, fa.Dfa)):
        fa.check_same_alphabet(x, S)
        return fa.subset(x, S)
    return fa.member(S, tuple(x))


# ---------------------------------------------------------------------------
# structural deciders


def _trim_graph(S):
    T = fa.trim(fa.remove_epsilon(S))
    succ = [set() for _ in range(T.n)]
    labelled = [[] for _ in range(T.n)]
    for p, a, q in T.edges():
        succ[p].add(q)
        labelled[p].append((a, q))
    return T, succ, labelled


def _scc_info(S):
    """Per-SCC flags on the trimmed automaton: cyclic, mixed roles, nonzero balance."""
    T, succ, labelled = _trim_graph(S)
    comps = fa.sccs(T.n, succ)
    comp_of = [0] * T.n
    for k, comp in enumerate(comps):
        for q in comp:
            comp_of[q] = k
    info = []
    for k, comp in enumerate(comps):
        roles = set()
        cyclic = False
        potential = {comp[0]: 0}
        stack = [comp[0]]
        nonzero = False
        # potentials via DFS over intra-component edges
        while stack:
            p = stack.pop()
            for a, q in labelled[p]:
                if comp_of[q] != k:
                    continue
                cyclic = True
                roles.add(a.role)
                expected = potential[p] + balance(a)
                if q not in potential:
                    potential[q] = expected
                    stack.append(q)
                elif potential[q] != expected:
                    nonzero = True
        # second pass to catch inconsistencies on already-visited edges
        for p in comp:
            for a, q in labelled[p]:
                if comp_of[q] == k and potential[q] != potential[p] + balance(a):
                    nonzero = True
        info.append({"cyclic": cyclic, "mixed": len(roles) == 2, "nonzero": nonzero})
    comp_succ = [set() for _ in comps]
    for p in range(T.n):
        for q in succ[p]:
            if comp_of[p] != comp_of[q]:
                comp_succ[comp_of[p]].add(comp_of[q])
    return T, comps, comp_of, info, comp_succ


def _reaches(comp_succ, start, pred):
    seen = {start}
    stack = [start]
    while stack:
        k = stack.pop()
        if pred(k):
            return True
        for j in comp_succ[k]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return False


def finite_lag(S) -> bool:
    _, _, _, info, _ = _scc_info(S)
    return not any(c["nonzero"] for c in info)


def finite_shift(S) -> bool:
    _, _, _, info, _ = _scc_info(S)
    return not any(c["mixed"] for c in info)


def finite_shiftlag(S) -> bool:
    _, comps, _, info, comp_succ = _scc_info(S)
    for k, c in enumerate(info):
        if c["nonzero"] and _reaches(comp_succ, k, lambda j: info[j]["mixed"]):
            return False
    return True


def fs_states(A) -> frozenset:
    """States whose residual language has finite shift.

    ``A`` should be a trimmed DFA; states of other automata are analysed on
    their own structure after trimming.
    """
    A = fa.trim(A) if isinstance(A, fa.Dfa) else A
    succ = [set() for _ in range(A.n)]
    for p, a, q in A.edges():
        succ[p].add(q)
    comps = fa.sccs(A.n, succ)
    comp_of = [0] * A.n
    for k, comp in enumerate(comps):
        for q in comp:
            comp_of[q] = k
    mixed = []
    for k, comp in enumerate(comps):
        roles = {a.role for p in comp for a, q in _out(A, p) if comp_of[q] == k}
        mixed.append(len(roles) == 2)
    # comps come in reverse topological order: successors first
    bad = [False] * len(comps)
    for k, comp in enumerate(comps):
        b = mixed[k]
        if not b:
            for p in comp:
                if any(bad[comp_of[q]] for q in succ[p] if comp_of[q] != k):
                    b = True
                    break
        bad[k] = b
    return frozenset(q for q in range(A.n) if not bad[comp_of[q]])


def _out(A, p):
    if isinstance(A, fa.Dfa):
        return list(A.delta[p].items())
    return [(a, q) for a, ts in A.delta[p].items() for q in ts]


def canonical_dfa(T) -> fa.Dfa:
    return fa.minimize(T)


def fse_automaton(T) -> fa.Nfa:
    """Automaton for the first entries of ``T``'s prefixes into finite-shift residuals."""
    D = canonical_dfa(T)
    fs = fs_states(D)
    if not D.finals:
        return fa.empty(D.alphabet)
    if D.initial in fs:
        return fa.epsilon(D.alphabet)
    sink = D.n
    edges = []
    for p, a, q in D.edges():
        if p in fs:
            continue
        edges.append((p, a, sink if q in fs else q))
    return fa.trim(fa.Nfa.from_edges(D.alphabet, D.n + 1, D.initial, [sink], edges))


def fse_entries(T):
    """``(D, fs, entries)`` where entries maps each FS state to the fse language ending there."""
    D = canonical_dfa(T)
    fs = fs_states(D)
    entries = {}
    if not D.finals:
        return D, fs, entries
    if D.initial in fs:
        entries[D.initial] = fa.epsilon(D.alphabet)
        return D, fs, entries
    targets = {q for p, a, q in D.edges() if p not in fs and q in fs}
    for t in sorted(targets):
        sink = D.n
        edges = []
        for p, a, q in D.edges():
            if p in fs:
                continue
            if q in fs:
                if q == t:
                    edges.append((p, a, sink))
            else:
                edges.append((p, a, q))
        entries[t] = fa.trim(fa.Nfa.from_edges(D.alphabet, D.n + 1, D.initial, [sink], edges))
    return D, fs, entries


def _balance_extremes(D, region, start):
    """Max and min prefix balance over paths inside ``region`` from ``start``."""
    best_hi = {start: 0}
    best_lo = {start: 0}
    n = len(region)
    for _ in range(n + 1):
        changed = False
        for p in list(best_hi):
            for a, q in D.delta[p].items():
                if q not in region:
                    continue
                hi = best_hi[p] + balance(a)
                lo = best_lo[p] + balance(a)
                if hi > best_hi.get(q, -10 ** 9):
                    best_hi[q] = hi
                    changed = True
                if lo < best_lo.get(q, 10 ** 9):
                    best_lo[q] = lo
                    changed = True
        if not changed:
            return max(best_hi.values()), min(best_lo.values())
    raise AssertionError("unbounded balance in the non-finite-shift region")


def gamma_bound(T) -> int:
    """Largest lag of a prefix whose residual does not have finite shift."""
    if not finite_shiftlag(T):
        raise NotFiniteShiftlag("gamma bound needs a finite-shiftlag language")
    D = canonical_dfa(T)
    fs = fs_states(D)
    if not D.finals or D.initial in fs:
        return 0
    region = frozenset(q for q in range(D.n) if q not in fs)
    hi, lo = _balance_extremes(D, region, D.initial)
    return max(hi, -lo)


@dataclass(frozen=True)
class SyncClassification:
    lag_finite: bool
    shift_finite: bool
    shiftlag_finite: bool
    cls: str
    dfa: fa.Dfa = field(repr=False)
    fs_states: frozenset
    gamma: int | None

    def as_dict(self):
        return {
            "lag": "finite" if self.lag_finite else "infinite",
            "shift": "finite" if self.shift_finite else "infinite",
            "shiftlag": "finite" if self.shiftlag_finite else "infinite",
            "class": self.cls,
            "gamma": self.gamma,
            "states": self.dfa.n,
            "fsStates": sorted(self.fs_states),
        }


def classify(S) -> SyncClassification:
    lag = finite_lag(S)
    shift = finite_shift(S)
    shiftlag = finite_shiftlag(S)
    D = canonical_dfa(S)
    cls = "FS" if shift else ("FSL" if shiftlag else "ALL")
    gamma = gamma_bound(S) if shiftlag else None
    return SyncClassification(lag, shift, shiftlag, cls, D, fs_states(D), gamma)


def require_fsl(S, what="operation"):
    if not finite_shiftlag(S):
        raise NotFiniteShiftlag(f"{what} needs a finite-shiftlag synchronization language")


# ---------------------------------------------------------------------------
# standard languages


def fs_canonical(alphabet: TaggedAlphabet) -> fa.Nfa:
    """``Σ*Γ*``"""
    return fa.concat(fa.universal(alphabet.letters, alphabet.sigma),
                     fa.universal(alphabet.letters, alphabet.gamma))


def fsl_canonical(alphabet: TaggedAlphabet) -> fa.Nfa:
    """``(ΣΓ)*(Σ* + Γ*)``"""
    L = alphabet.letters
    pairs = fa.star(fa.concat(fa.letters_lang(L, alphabet.sigma),
                              fa.letters_lang(L, alphabet.gamma)))
    tail = fa.union(fa.universal(L, alphabet.sigma), fa.universal(L, alphabet.gamma))
    return fa.concat(pairs, tail)


def lag_bounded(alphabet: TaggedAlphabet, k: int) -> fa.Dfa:
    """All words whose prefixes are at most ``k``-lagged."""
    states = list(range(-k, k + 1))
    delta = []
    for b in states:
        row = {}
        for l in alphabet.letters:
            nb = b + balance(l)
            if -k <= nb <= k:
                row[l] = nb + k
        delta.append(row)
    return fa.Dfa(alphabet.letters, len(states), k, range(len(states)), delta)


def lag_bounded_tail(alphabet: TaggedAlphabet, k: int) -> fa.Nfa:
    """``L_{≤k} (Σ* + Γ*)``"""
    L = alphabet.letters
    tail = fa.union(fa.universal(L, alphabet.sigma), fa.universal(L, alphabet.gamma))
    return fa.concat(lag_bounded(alphabet, k), tail)
