"""Brute-force reference computations at bounded scale.

Everything here works from the definitions by exhaustive enumeration and is
used to cross-check the symbolic procedures.  Nothing here is clever.
"""

from __future__ import annotations

import itertools
import random

from . import automata as fa
from .syncword import IN, OUT, Letter, TaggedAlphabet, finite_shift

MAX_ORACLE_LEN = 12


def metrics(w) -> tuple:
    """``(lag, shift, shiftlag)`` straight from the definitions."""
    n = len(w)

    def lag_of_prefix(j):
        ins = sum(1 for l in w[:j] if l.role == IN)
        return abs(ins - (j - ins))

    lag = max((lag_of_prefix(j) for j in range(n + 1)), default=0)
    shifts = [i for i in range(1, n) if w[i - 1].role != w[i].role]
    shiftlag = 0
    for size in range(1, len(shifts) + 1):
        for start in range(len(shifts) - size + 1):
            window = shifts[start:start + size]
            if all(lag_of_prefix(i) >= size for i in window):
                shiftlag = size
                break
    return lag, len(shifts), shiftlag


def pair_of(w) -> tuple:
    return (tuple(l.sym for l in w if l.role == IN), tuple(l.sym for l in w if l.role == OUT))


def words(S, max_len):
    return fa.enumerate_up_to(S, max_len)


def pairs(S, max_len) -> set:
    """Pairs synchronized by words of ``S`` of length at most ``max_len``."""
    return {pair_of(w) for w in fa.enumerate_up_to(S, max_len)}


def interleavings(u, v):
    """Every synchronization of the pair ``(u, v)``."""
    n, m = len(u), len(v)
    for positions in itertools.combinations(range(n + m), n):
        pos = set(positions)
        out = []
        i = j = 0
        for k in range(n + m):
            if k in pos:
                out.append(Letter(IN, u[i]))
                i += 1
            else:
                out.append(Letter(OUT, v[j]))
                j += 1
        yield tuple(out)


def syncs_in(T, u, v):
    return [w for w in interleavings(u, v) if fa.member(T, w)]


def diff(x, y, bound):
    """Shortest completions ``(u, v)`` with ``⟦xu⟧ = ⟦yv⟧`` by search over ``|u| <= bound``.

    Returns ``None`` when no completion exists within the bound.  Raises if the
    shortest completion is not unique.
    """
    letters = sorted(set(x) | set(y))
    px, py = pair_of(x), pair_of(y)
    best = None
    found = []
    for k in range(bound + 1):
        for u in itertools.product(letters, repeat=k):
            target = pair_of(tuple(x) + u)
            if target[0][:len(py[0])] != py[0] or target[1][:len(py[1])] != py[1]:
                continue
            ri = target[0][len(py[0]):]
            ro = target[1][len(py[1]):]
            cost = k + len(ri) + len(ro)
            if ri and ro:
                continue
            v = tuple(Letter(IN, s) for s in ri) + tuple(Letter(OUT, s) for s in ro)
            if best is None or cost < best:
                best = cost
                found = [(u, v)]
            elif cost == best:
                found.append((u, v))
    if not found:
        return None
    if len(set(found)) > 1:
        raise AssertionError(f"non-unique shortest difference: {found}")
    return found[0]


def residual_is_fs(T, x) -> bool:
    return finite_shift(fa.left_quotient(tuple(x), T))


def _fs_profile(T, w, cache=None):
    """For each prefix length of ``w``, whether the residual there has finite shift."""
    out = []
    for i in range(len(w) + 1):
        x = tuple(w[:i])
        if cache is None:
            out.append(residual_is_fs(T, x))
        else:
            if x not in cache:
                cache[x] = residual_is_fs(T, x)
            out.append(cache[x])
    return out


def _profile_leq(p, p2) -> bool:
    return all(a or not b for a, b in zip(p, p2))


def order_leq(T, w, w2) -> bool:
    """``w ⪯ w2``: wherever ``w2`` has entered finite shift, ``w`` has too."""
    return _profile_leq(_fs_profile(T, w), _fs_profile(T, w2))


def _profiles(T, u, v, cache=None):
    cache = {} if cache is None else cache
    ws = syncs_in(T, u, v)
    return ws, {w: _fs_profile(T, w, cache) for w in ws}


def minimal_syncs(T, u, v):
    ws, prof = _profiles(T, u, v)
    return [w for w in ws if all(_profile_leq(prof[w], prof[w2]) for w2 in ws)]


def maximal_syncs(T, u, v):
    ws, prof = _profiles(T, u, v)
    return [w for w in ws if all(_profile_leq(prof[w2], prof[w]) for w2 in ws)]


def is_maximal(T, w) -> bool:
    return tuple(w) in maximal_syncs(T, *pair_of(w))


def extremal_words(T, max_len, which="max"):
    """All words of ``T`` up to ``max_len`` that are maximal (or minimal) for their pair."""
    cache = {}
    out = set()
    for u, v in pairs(T, max_len):
        ws, prof = _profiles(T, u, v, cache)
        for w in ws:
            if which == "max":
                ok = all(_profile_leq(prof[w2], prof[w]) for w2 in ws)
            else:
                ok = all(_profile_leq(prof[w], prof[w2]) for w2 in ws)
            if ok:
                out.add(w)
    return out


def run_distances(B, w):
    """All distances of accepting runs of a distance automaton on ``w``."""
    results = []

    def go(p, k, acc):
        if k == len(w):
            if p in B.finals:
                results.append(acc)
            return
        for q, d in B.moves(p, w[k]):
            go(q, k + 1, acc + d)
    go(B.initial, 0, 0)
    return results


def min_distance(B, w):
    ds = run_distances(B, w)
    return min(ds) if ds else float("inf")


# ---------------------------------------------------------------------------
# random instances


def random_nfa(rng: random.Random, letters, n_states, density=0.35, final_prob=0.4):
    edges = []
    for p in range(n_states):
        for a in letters:
            for q in range(n_states):
                if rng.random() < density / max(1, n_states - 1):
                    edges.append((p, a, q))
    finals = [q for q in range(n_states) if rng.random() < final_prob] or [n_states - 1]
    return fa.Nfa.from_edges(letters, n_states, 0, finals, edges)


def random_tagged_nfa(rng, alphabet: TaggedAlphabet, n_states, density=0.5):
    return random_nfa(rng, alphabet.letters, n_states, density)


def random_tagged_word(rng, alphabet: TaggedAlphabet, length):
    return tuple(rng.choice(alphabet.letters) for _ in range(length))


def _word_with_balance(rng, alphabet: TaggedAlphabet, bal, max_len=3):
    for _ in range(200):
        n = rng.randint(max(abs(bal), 1), max_len)
        if (n - abs(bal)) % 2:
            continue
        ins = (n + bal) // 2
        roles = [IN] * ins + [OUT] * (n - ins)
        rng.shuffle(roles)
        return tuple(Letter(r, rng.choice(alphabet.inputs if r == IN else alphabet.outputs))
                     for r in roles)
    return ()


def _edges_for_word(edges, p, w, q, counter):
    cur = p
    for l in w[:-1]:
        nxt = counter[0]
        counter[0] += 1
        edges.append((cur, l, nxt))
        cur = nxt
    if w:
        edges.append((cur, w[-1], q))
    else:
        edges.append((cur, fa.EPS, q))


def random_fs(rng, alphabet: TaggedAlphabet, n_states=3, density=0.5):
    """Random finite-shift language: forward edges plus single-role self-loops."""
    edges = []
    counter = [n_states]
    for p in range(n_states):
        role = rng.choice((IN, OUT))
        pool = alphabet.sigma if role == IN else alphabet.gamma
        for l in pool:
            if rng.random() < density:
                edges.append((p, l, p))
        for q in range(p + 1, n_states):
            if rng.random() < density:
                w = tuple(rng.choice(alphabet.letters) for _ in range(rng.randint(1, 2)))
                _edges_for_word(edges, p, w, q, counter)
    finals = [q for q in range(n_states) if rng.random() < 0.5] or [n_states - 1]
    return fa.Nfa.from_edges(alphabet.letters, counter[0], 0, finals, edges)


def random_fsl(rng, alphabet: TaggedAlphabet, core=3, tail=2, density=0.5):
    """Random finite-shiftlag language.

    Core states carry a potential in ``{-1, 0, 1}`` and every core edge has
    balance equal to the potential difference, so core cycles are balanced.
    Tail states form a finite-shift region entered from the core.
    """
    pot = [0] + [rng.choice((-1, 0, 1)) for _ in range(core - 1)]
    edges = []
    n = core + tail
    counter = [n]
    for p in range(core):
        for q in range(core):
            if rng.random() < density:
                w = _word_with_balance(rng, alphabet, pot[q] - pot[p])
                if w:
                    _edges_for_word(edges, p, w, q, counter)
        for q in range(core, n):
            if rng.random() < density:
                w = tuple(rng.choice(alphabet.letters) for _ in range(rng.randint(1, 2)))
                _edges_for_word(edges, p, w, q, counter)
    for p in range(core, n):
        role = rng.choice((IN, OUT))
        pool = alphabet.sigma if role == IN else alphabet.gamma
        for l in pool:
            if rng.random() < density:
                edges.append((p, l, p))
        for q in range(p + 1, n):
            if rng.random() < density:
                edges.append((p, rng.choice(alphabet.letters), q))
    finals = [q for q in range(n) if rng.random() < 0.4] or [n - 1]
    return fa.Nfa.from_edges(alphabet.letters, counter[0], 0, finals, edges)
