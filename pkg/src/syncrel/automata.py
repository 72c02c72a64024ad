"""Finite automata over arbitrary hashable letters.

Automata are immutable.  States are the integers ``0 .. n-1``.  The alphabet
is an ordered tuple; its order drives the length-lexicographic order used
by :func:`enumerate_up_to` and by every tie-breaking rule in the package.

``EPS`` (``None``) labels epsilon transitions inside an :class:`Nfa`.
Letters themselves are never ``None``.
"""

from __future__ import annotations

from collections import deque
from itertools import product as _cartesian
from typing import Callable, Hashable, Iterable, Sequence

from .errors import AlphabetMismatch, UnknownState

EPS = None

Letter = Hashable
Word = tuple


class Nfa:
    """Nondeterministic automaton with optional epsilon transitions."""

    __slots__ = ("alphabet", "n", "initial", "finals", "delta", "eps", "_index")

    def __init__(self, alphabet, n, initial, finals, delta, eps=None):
        self.alphabet = tuple(alphabet)
        self.n = n
        self.initial = initial
        self.finals = frozenset(finals)
        self.delta = tuple(delta)
        if eps is None:
            eps = [frozenset()] * n
        self.eps = tuple(eps)
        self._index = None
        if not 0 <= initial < n:
            raise UnknownState(f"initial state {initial} out of range")

    @classmethod
    def from_edges(cls, alphabet, n, initial, finals, edges):
        """Build from ``(source, letter_or_EPS, target)`` triples."""
        alphabet = tuple(alphabet)
        known = set(alphabet)
        delta = [dict() for _ in range(n)]
        eps = [set() for _ in range(n)]
        for p, a, q in edges:
            if not (0 <= p < n and 0 <= q < n):
                raise UnknownState(f"edge {p}->{q} leaves the state range")
            if a is EPS:
                eps[p].add(q)
            else:
                if a not in known:
                    raise AlphabetMismatch(f"letter {a!r} is not in the alphabet")
                delta[p].setdefault(a, set()).add(q)
        delta = [{a: frozenset(t) for a, t in d.items()} for d in delta]
        return cls(alphabet, n, initial, finals, delta, [frozenset(e) for e in eps])

    @property
    def has_eps(self):
        return any(self.eps)

    def edges(self):
        for p in range(self.n):
            for a, targets in self.delta[p].items():
                for q in targets:
                    yield p, a, q
            for q in self.eps[p]:
                yield p, EPS, q

    def letter_index(self):
        if self._index is None:
            self._index = {a: i for i, a in enumerate(self.alphabet)}
        return self._index

    def num_transitions(self):
        return sum(1 for _ in self.edges())

    def __repr__(self):
        return (f"Nfa(states={self.n}, initial={self.initial}, "
                f"finals={sorted(self.finals)}, transitions={self.num_transitions()})")

    def accepts(self, word):
        return member(self, word)


class Dfa:
    """Deterministic automaton with a partial transition function."""

    __slots__ = ("alphabet", "n", "initial", "finals", "delta")

    def __init__(self, alphabet, n, initial, finals, delta):
        self.alphabet = tuple(alphabet)
        self.n = n
        self.initial = initial
        self.finals = frozenset(finals)
        self.delta = tuple(delta)
        if not 0 <= initial < n:
            raise UnknownState(f"initial state {initial} out of range")

    def step(self, q, a):
        return self.delta[q].get(a)

    def run(self, word, start=None):
        q = self.initial if start is None else start
        for a in word:
            q = self.delta[q].get(a)
            if q is None:
                return None
        return q

    def accepts(self, word):
        q = self.run(word)
        return q is not None and q in self.finals

    def edges(self):
        for p in range(self.n):
            for a, q in self.delta[p].items():
                yield p, a, q

    def to_nfa(self):
        delta = [{a: frozenset((q,)) for a, q in d.items()} for d in self.delta]
        return Nfa(self.alphabet, self.n, self.initial, self.finals, delta)

    def num_transitions(self):
        return sum(len(d) for d in self.delta)

    def __repr__(self):
        return (f"Dfa(states={self.n}, initial={self.initial}, "
                f"finals={sorted(self.finals)}, transitions={self.num_transitions()})")


def as_nfa(A) -> Nfa:
    return A.to_nfa() if isinstance(A, Dfa) else A


def as_dfa(A) -> Dfa:
    return A if isinstance(A, Dfa) else determinize(A)


# ---------------------------------------------------------------------------
# basic constructors


def empty(alphabet) -> Nfa:
    """The canonical automaton of the empty language: one non-final state."""
    return Nfa(alphabet, 1, 0, (), [{}])


def epsilon(alphabet) -> Nfa:
    return Nfa(alphabet, 1, 0, (0,), [{}])


def from_word(alphabet, word) -> Nfa:
    word = tuple(word)
    edges = [(i, a, i + 1) for i, a in enumerate(word)]
    return Nfa.from_edges(alphabet, len(word) + 1, 0, (len(word),), edges)


def from_words(alphabet, words) -> Nfa:
    """Automaton for a finite set of words (a trie)."""
    trie = [{}]
    finals = set()
    for w in words:
        q = 0
        for a in w:
            nxt = trie[q].get(a)
            if nxt is None:
                nxt = len(trie)
                trie.append({})
                trie[q][a] = nxt
            q = nxt
        finals.add(q)
    return Dfa(alphabet, len(trie), 0, finals, trie).to_nfa()


def letters_lang(alphabet, letters) -> Nfa:
    """Words consisting of a single letter taken from ``letters``."""
    return Nfa.from_edges(alphabet, 2, 0, (1,), [(0, a, 1) for a in letters])


def universal(alphabet, letters=None) -> Nfa:
    """``letters*`` (all words when ``letters`` is omitted)."""
    letters = alphabet if letters is None else letters
    return Nfa.from_edges(alphabet, 1, 0, (0,), [(0, a, 0) for a in letters])


def check_same_alphabet(*automata):
    if not automata:
        return
    first = set(automata[0].alphabet)
    for A in automata[1:]:
        if set(A.alphabet) != first:
            raise AlphabetMismatch(
                f"alphabets differ: {automata[0].alphabet!r} vs {A.alphabet!r}")


def with_alphabet(A, alphabet):
    """Reinterpret ``A`` over a larger alphabet (letters of A must be included)."""
    alphabet = tuple(alphabet)
    missing = set(A.alphabet) - set(alphabet)
    used = {a for _, a, _ in A.edges() if a is not EPS}
    if missing & used:
        raise AlphabetMismatch(f"letters {missing & used!r} missing from new alphabet")
    if isinstance(A, Dfa):
        return Dfa(alphabet, A.n, A.initial, A.finals, A.delta)
    return Nfa(alphabet, A.n, A.initial, A.finals, A.delta, A.eps)


# ---------------------------------------------------------------------------
# epsilon removal, determinization, minimization


def eps_closure(A: Nfa, states) -> frozenset:
    stack = list(states)
    seen = set(stack)
    while stack:
        p = stack.pop()
        for q in A.eps[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)


def remove_epsilon(A) -> Nfa:
    A = as_nfa(A)
    if not A.has_eps:
        return A
    closures = [eps_closure(A, (p,)) for p in range(A.n)]
    delta = []
    finals = set()
    for p in range(A.n):
        d = {}
        for r in closures[p]:
            if r in A.finals:
                finals.add(p)
            for a, targets in A.delta[r].items():
                acc = d.setdefault(a, set())
                for t in targets:
                    acc |= closures[t]
        delta.append({a: frozenset(t) for a, t in d.items()})
    return trim(Nfa(A.alphabet, A.n, A.initial, finals, delta))


def determinize(A) -> Dfa:
    """Subset construction restricted to reachable subsets.

    The empty subset is never materialized, so the result is partial.
    """
    if isinstance(A, Dfa):
        return A
    start = eps_closure(A, (A.initial,))
    index = {start: 0}
    subsets = [start]
    delta = []
    finals = set()
    use_eps = A.has_eps
    i = 0
    while i < len(subsets):
        S = subsets[i]
        if S & A.finals:
            finals.add(i)
        moves = {}
        for p in S:
            for a, targets in A.delta[p].items():
                moves.setdefault(a, set()).update(targets)
        row = {}
        for a in A.alphabet:
            T = moves.get(a)
            if not T:
                continue
            T = eps_closure(A, T) if use_eps else frozenset(T)
            j = index.get(T)
            if j is None:
                j = len(subsets)
                index[T] = j
                subsets.append(T)
            row[a] = j
        delta.append(row)
        i += 1
    return Dfa(A.alphabet, len(subsets), 0, finals, delta)


def _coreachable(n, finals, preds):
    seen = set(finals)
    stack = list(finals)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def trim(A):
    """Keep only states that are reachable and co-reachable.

    Returns the canonical empty automaton when the language is empty.
    Works for both kinds and preserves the kind.
    """
    succ = [set() for _ in range(A.n)]
    preds = [set() for _ in range(A.n)]
    for p, _, q in A.edges():
        succ[p].add(q)
        preds[q].add(p)
    reach = {A.initial}
    stack = [A.initial]
    while stack:
        p = stack.pop()
        for q in succ[p]:
            if q not in reach:
                reach.add(q)
                stack.append(q)
    co = _coreachable(A.n, [f for f in A.finals if f in reach], preds)
    keep = reach & co
    if A.initial not in keep:
        return empty_dfa(A.alphabet) if isinstance(A, Dfa) else empty(A.alphabet)
    order = sorted(keep)
    if len(order) == A.n:
        return A
    ren = {q: i for i, q in enumerate(order)}
    finals = [ren[q] for q in A.finals if q in keep]
    if isinstance(A, Dfa):
        delta = [{a: ren[q] for a, q in A.delta[p].items() if q in keep} for p in order]
        return Dfa(A.alphabet, len(order), ren[A.initial], finals, delta)
    delta = []
    eps = []
    for p in order:
        d = {}
        for a, targets in A.delta[p].items():
            t = frozenset(ren[q] for q in targets if q in keep)
            if t:
                d[a] = t
        delta.append(d)
        eps.append(frozenset(ren[q] for q in A.eps[p] if q in keep))
    return Nfa(A.alphabet, len(order), ren[A.initial], finals, delta, eps)


def empty_dfa(alphabet) -> Dfa:
    return Dfa(alphabet, 1, 0, (), [{}])


def minimize(A) -> Dfa:
    """Minimal trim partial DFA, numbered canonically.

    States are numbered in breadth-first order following the alphabet order,
    so two automata for the same language produce identical structures.
    """
    D = trim(as_dfa(A))
    if not D.finals:
        return empty_dfa(D.alphabet)
    n = D.n
    sink = n
    alphabet = D.alphabet
    table = [[D.delta[p].get(a, sink) for a in alphabet] for p in range(n)]
    table.append([sink] * len(alphabet))
    block = [1 if p in D.finals else 0 for p in range(n)] + [0]
    count = len(set(block))
    while True:
        sigs = {}
        new_block = []
        for p in range(n + 1):
            sig = (block[p], tuple(block[q] for q in table[p]))
            b = sigs.get(sig)
            if b is None:
                b = len(sigs)
                sigs[sig] = b
            new_block.append(b)
        block = new_block
        if len(sigs) == count:
            break
        count = len(sigs)
    sink_block = block[sink]
    # canonical BFS numbering, skipping the sink class
    order = {block[D.initial]: 0}
    rep = {block[p]: p for p in range(n)}
    queue = deque([block[D.initial]])
    delta = []
    finals = []
    while queue:
        b = queue.popleft()
        p = rep[b]
        if p in D.finals:
            finals.append(order[b])
        row = {}
        for a, q in zip(alphabet, table[p]):
            c = block[q]
            if c == sink_block:
                continue
            if c not in order:
                order[c] = len(order)
                queue.append(c)
            row[a] = order[c]
        delta.append(row)
    return Dfa(alphabet, len(order), 0, finals, delta)


def complete(A) -> Dfa:
    """Total DFA (adds a sink only when needed)."""
    D = as_dfa(A)
    if all(len(D.delta[p]) == len(D.alphabet) for p in range(D.n)):
        return D
    sink = D.n
    delta = [{a: D.delta[p].get(a, sink) for a in D.alphabet} for p in range(D.n)]
    delta.append({a: sink for a in D.alphabet})
    return Dfa(D.alphabet, D.n + 1, D.initial, D.finals, delta)


# ---------------------------------------------------------------------------
# boolean and rational operations


def _pair_product(A: Nfa, B: Nfa, final_rule) -> Nfa:
    """Reachable synchronous product of two epsilon-free automata."""
    start = (A.initial, B.initial)
    index = {start: 0}
    pairs = [start]
    delta = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        dA = A.delta[p]
        dB = B.delta[q]
        row = {}
        for a, tA in dA.items():
            tB = dB.get(a)
            if not tB:
                continue
            targets = set()
            for x in tA:
                for y in tB:
                    key = (x, y)
                    j = index.get(key)
                    if j is None:
                        j = len(pairs)
                        index[key] = j
                        pairs.append(key)
                    targets.add(j)
            row[a] = frozenset(targets)
        delta.append(row)
        i += 1
    finals = [i for i, (p, q) in enumerate(pairs) if final_rule(p in A.finals, q in B.finals)]
    return Nfa(A.alphabet, len(pairs), 0, finals, delta)


def intersection(*automata) -> Nfa:
    check_same_alphabet(*automata)
    result = remove_epsilon(automata[0])
    for B in automata[1:]:
        result = trim(_pair_product(result, remove_epsilon(B), lambda x, y: x and y))
    return trim(result)


def union(*automata) -> Nfa:
    """Disjoint union with a fresh initial state."""
    check_same_alphabet(*automata)
    alphabet = automata[0].alphabet
    edges = []
    finals = []
    offset = 1
    for A in automata:
        A = as_nfa(A)
        edges.append((0, EPS, A.initial + offset))
        for p, a, q in A.edges():
            edges.append((p + offset, a, q + offset))
        finals.extend(f + offset for f in A.finals)
        offset += A.n
    return Nfa.from_edges(alphabet, offset, 0, finals, edges)


def complement(A) -> Dfa:
    D = complete(as_dfa(A))
    finals = [p for p in range(D.n) if p not in D.finals]
    return Dfa(D.alphabet, D.n, D.initial, finals, D.delta)


def difference(A, B) -> Nfa:
    check_same_alphabet(A, B)
    return trim(_pair_product(remove_epsilon(A), complement(B).to_nfa(),
                              lambda x, y: x and y))


def concat(*automata) -> Nfa:
    check_same_alphabet(*automata)
    alphabet = automata[0].alphabet
    edges = []
    offset = 0
    prev_finals = None
    first_initial = None
    for A in automata:
        A = as_nfa(A)
        if first_initial is None:
            first_initial = A.initial
        for p, a, q in A.edges():
            edges.append((p + offset, a, q + offset))
        if prev_finals is not None:
            for f in prev_finals:
                edges.append((f, EPS, A.initial + offset))
        prev_finals = [f + offset for f in A.finals]
        offset += A.n
    return Nfa.from_edges(alphabet, offset, first_initial, prev_finals, edges)


def star(A) -> Nfa:
    A = as_nfa(A)
    edges = [(0, EPS, A.initial + 1)]
    for p, a, q in A.edges():
        edges.append((p + 1, a, q + 1))
    for f in A.finals:
        edges.append((f + 1, EPS, 0))
    return Nfa.from_edges(A.alphabet, A.n + 1, 0, [0], edges)


def plus(A) -> Nfa:
    return concat(A, star(A))


def combine(op: str, operands: Sequence) -> Nfa:
    """Apply a named boolean or rational operation."""
    operands = list(operands)
    if not operands:
        raise ValueError("combine needs at least one operand")
    if op == "complement":
        if len(operands) != 1:
            raise ValueError("complement takes exactly one operand")
        return complement(operands[0]).to_nfa()
    if op == "star":
        if len(operands) != 1:
            raise ValueError("star takes exactly one operand")
        return star(operands[0])
    if op == "union":
        return union(*operands)
    if op == "intersection":
        return intersection(*operands)
    if op == "concat":
        return concat(*operands)
    if op == "difference":
        if len(operands) != 2:
            raise ValueError("difference takes exactly two operands")
        return difference(*operands)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# decisions


def is_empty(A) -> bool:
    A = as_nfa(A)
    seen = {A.initial}
    stack = [A.initial]
    while stack:
        p = stack.pop()
        if p in A.finals:
            return False
        for targets in A.delta[p].values():
            for q in targets:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        for q in A.eps[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return True


def is_finite(A) -> bool:
    """True iff the trimmed automaton has no cycle (epsilon cycles excluded)."""
    T = trim(remove_epsilon(A))
    color = [0] * T.n
    succ = [sorted({q for ts in T.delta[p].values() for q in ts}) for p in range(T.n)]
    for root in range(T.n):
        if color[root]:
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            p, it = stack[-1]
            for q in it:
                if color[q] == 1:
                    return False
                if color[q] == 0:
                    color[q] = 1
                    stack.append((q, iter(succ[q])))
                    break
            else:
                color[p] = 2
                stack.pop()
    return True


def subset(A, B) -> bool:
    """L(A) is contained in L(B)."""
    return counterexample_subset(A, B) is None


def counterexample_subset(A, B):
    """A shortest word of L(A) \\ L(B), or ``None``."""
    check_same_alphabet(A, B)
    A = remove_epsilon(A)
    DB = as_dfa(B) if isinstance(B, Dfa) else None
    Bn = None if DB is not None else as_nfa(B)
    if DB is not None:
        def b_start():
            return DB.initial

        def b_step(s, a):
            if s is None:
                return None
            return DB.delta[s].get(a)

        def b_final(s):
            return s is not None and s in DB.finals
    else:
        def b_start():
            return eps_closure(Bn, (Bn.initial,))

        def b_step(s, a):
            acc = set()
            for p in s:
                t = Bn.delta[p].get(a)
                if t:
                    acc |= t
            return eps_closure(Bn, acc) if Bn.has_eps else frozenset(acc)

        def b_final(s):
            return bool(s & Bn.finals)
    start = (A.initial, b_start())
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        p, s = node
        if p in A.finals and not b_final(s):
            word = []
            while parent[node] is not None:
                node, a = parent[node]
                word.append(a)
            return tuple(reversed(word))
        for a in A.alphabet:
            tA = A.delta[p].get(a)
            if not tA:
                continue
            s2 = b_step(s, a)
            for q in tA:
                nxt = (q, s2)
                if nxt not in parent:
                    parent[nxt] = (node, a)
                    queue.append(nxt)
    return None


def equivalent(A, B) -> bool:
    return subset(A, B) and subset(B, A)


def member(A, word) -> bool:
    if isinstance(A, Dfa):
        return A.accepts(word)
    current = eps_closure(A, (A.initial,))
    for a in word:
        nxt = set()
        for p in current:
            t = A.delta[p].get(a)
            if t:
                nxt |= t
        if not nxt:
            return False
        current = eps_closure(A, nxt) if A.has_eps else nxt
    return bool(set(current) & A.finals)


def decide(op: str, *args) -> bool:
    """Named decision procedures: isEmpty, isFinite, includes, equivalent, member.

    ``includes(A, B)`` holds when L(A) is contained in L(B).
    """
    if op == "isEmpty":
        return is_empty(args[0])
    if op == "isFinite":
        return is_finite(args[0])
    if op == "includes":
        return subset(args[0], args[1])
    if op == "equivalent":
        check_same_alphabet(args[0], args[1])
        return equivalent(args[0], args[1])
    if op == "member":
        return member(args[0], tuple(args[1]))
    raise ValueError(f"unknown decision {op!r}")


# ---------------------------------------------------------------------------
# quotients, residuals, morphisms


def residual(A, q):
    """Same structure with initial state ``q``."""
    if not 0 <= q < A.n:
        raise UnknownState(f"state {q} does not exist")
    if isinstance(A, Dfa):
        return Dfa(A.alphabet, A.n, q, A.finals, A.delta)
    return Nfa(A.alphabet, A.n, q, A.finals, A.delta, A.eps)


def with_initial_set(A, states) -> Nfa:
    """Automaton whose runs may start in any of ``states``."""
    A = as_nfa(A)
    states = list(states)
    if len(states) == 1:
        return residual(A, states[0])
    if not states:
        return empty(A.alphabet)
    new = A.n
    delta = list(A.delta) + [{}]
    eps = list(A.eps) + [frozenset(states)]
    return Nfa(A.alphabet, A.n + 1, new, A.finals, delta, eps)


def reach_set(A, word, start=None) -> frozenset:
    A = as_nfa(A)
    current = eps_closure(A, (A.initial,) if start is None else start)
    for a in word:
        nxt = set()
        for p in current:
            t = A.delta[p].get(a)
            if t:
                nxt |= t
        current = eps_closure(A, nxt) if A.has_eps else frozenset(nxt)
        if not current:
            break
    return frozenset(current)


def left_quotient(u, A) -> Nfa:
    """Automaton for ``u^{-1} L(A)``."""
    return trim(with_initial_set(A, sorted(reach_set(A, tuple(u)))))


def morphism(A, alphabet, image: Callable) -> Nfa:
    """Image of L(A) under the morphism ``letter -> image(letter)`` (a tuple)."""
    A = as_nfa(A)
    edges = []
    n = A.n
    for p, a, q in A.edges():
        if a is EPS:
            edges.append((p, EPS, q))
            continue
        w = tuple(image(a))
        if not w:
            edges.append((p, EPS, q))
            continue
        cur = p
        for b in w[:-1]:
            edges.append((cur, b, n))
            cur = n
            n += 1
        edges.append((cur, w[-1], q))
    return Nfa.from_edges(alphabet, n, A.initial, A.finals, edges)


def inverse_morphism(A, alphabet, image: Callable) -> Nfa:
    """``{w over alphabet | image(w) in L(A)}`` for a letter-to-letter-or-erasing map.

    ``image(letter)`` returns a letter of A's alphabet or ``EPS`` (erased).
    """
    A = remove_epsilon(A)
    delta = []
    for p in range(A.n):
        row = {}
        for b in alphabet:
            a = image(b)
            if a is EPS:
                row[b] = frozenset((p,))
            else:
                t = A.delta[p].get(a)
                if t:
                    row[b] = t
        delta.append(row)
    return Nfa(alphabet, A.n, A.initial, A.finals, delta)


def reverse(A) -> Nfa:
    A = as_nfa(A)
    start = A.n
    edges = [(q, a, p) for p, a, q in A.edges()]
    edges += [(start, EPS, f) for f in A.finals]
    return Nfa.from_edges(A.alphabet, A.n + 1, start, [A.initial], edges)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_up_to(A, max_len: int) -> list:
    """All accepted words of length at most ``max_len`` in length-lex order."""
    if max_len < 0:
        return []
    D = minimize(A)
    if not D.finals:
        return []
    # can[r] = states from which some word of length exactly r is accepted
    can = [set(D.finals)]
    for _ in range(max_len):
        prev = can[-1]
        can.append({p for p in range(D.n) if any(q in prev for q in D.delta[p].values())})
    out = []
    for length in range(max_len + 1):
        if D.initial not in can[length]:
            continue
        stack = [(D.initial, ())]
        # depth-first in reverse alphabet order so pops come out lexicographically
        while stack:
            p, w = stack.pop()
            rest = length - len(w)
            if rest == 0:
                out.append(w)
                continue
            for a in reversed(D.alphabet):
                q = D.delta[p].get(a)
                if q is not None and q in can[rest - 1]:
                    stack.append((q, w + (a,)))
    return out


def iter_words(alphabet, max_len: int):
    """All words over ``alphabet`` of length at most ``max_len``, length-lex."""
    for n in range(max_len + 1):
        for w in _cartesian(alphabet, repeat=n):
            yield w


def shortest_word(A):
    A = as_nfa(A)
    start = A.initial
    parent = {start: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for q in A.eps[p]:
            if q not in parent:
                parent[q] = (p, EPS)
                queue.appendleft(q)
        if p in A.finals:
            word = []
            node = p
            while parent[node] is not None:
                node, a = parent[node]
                if a is not EPS:
                    word.append(a)
            return tuple(reversed(word))
        for a in A.alphabet:
            for q in A.delta[p].get(a, ()):
                if q not in parent:
                    parent[q] = (p, a)
                    queue.append(q)
    return None


def sccs(n: int, succ: Sequence[Iterable[int]]) -> list:
    """Strongly connected components (Tarjan, iterative), in reverse topological order."""
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    result = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] is None:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                result.append(comp)
    return result
