"""Shared generators and reference checks for the test modules."""

import itertools
import random

from syncrel import automata as fa
from syncrel import oracle
from syncrel.resync import compatible
from syncrel.syncword import IN, OUT, Letter, TaggedAlphabet, word_metrics

AB = TaggedAlphabet(("a",), ("b",))
ABCD = TaggedAlphabet(("a", "b"), ("c", "d"))
AB_C = TaggedAlphabet(("a", "b"), ("c",))


def lag_of(w):
    return word_metrics(w)[0]


def random_compatible_pair(rng, alphabet, length, max_lag=3):
    """Two same-length synchronizations that extend to a common pair."""
    for _ in range(1000):
        n_in = rng.randint(0, length)
        u = tuple(rng.choice(alphabet.inputs) for _ in range(length))
        v = tuple(rng.choice(alphabet.outputs) for _ in range(length))

        def sync(k):
            roles = [IN] * k + [OUT] * (length - k)
            rng.shuffle(roles)
            i = j = 0
            out = []
            for r in roles:
                if r == IN:
                    out.append(Letter(IN, u[i]))
                    i += 1
                else:
                    out.append(Letter(OUT, v[j]))
                    j += 1
            return tuple(out)

        n2 = min(length, max(0, n_in + rng.randint(-max_lag, max_lag)))
        x, y = sync(n_in), sync(n2)
        if compatible(x, y) and lag_of(x) <= max_lag and lag_of(y) <= max_lag:
            return x, y
    raise RuntimeError("no compatible pair found")


def _shortest_paths(D, src):
    """Shortest word from ``src`` to every reachable state."""
    paths = {src: ()}
    frontier = [src]
    while frontier:
        nxt = []
        for p in frontier:
            for a, q in sorted(D.delta[p].items(), key=repr):
                if q not in paths:
                    paths[q] = paths[p] + (a,)
                    nxt.append(q)
        frontier = nxt
    return paths


def _closed_walks(D, comp, root, paths):
    """Closed walks through ``root`` that span the cycles of one SCC."""
    walks = []
    for p in comp:
        for a, q in D.delta[p].items():
            if q in comp:
                walks.append(paths[root][p] + (a,) + paths[q][root])
    for q in comp:
        walks.append(paths[root][q] + paths[q][root])
    return sorted({w for w in walks if w}, key=lambda w: (len(w), repr(w)))


def pumped_witnesses(A, k):
    """Words of ``L(A)`` built by pumping closed walks of the minimal DFA.

    Each strongly connected component contributes its closed walks pumped
    ``k`` times; a pair of components contributes a walk of the first pumped
    heavily, followed by a mixed walk of the second pumped ``k`` times.  The
    metrics of these words are lower bounds for the metrics of ``L(A)``.
    """
    D = fa.trim(fa.minimize(A))
    if not D.finals:
        return []
    succ = [set(D.delta[p].values()) for p in range(D.n)]
    paths = {p: _shortest_paths(D, p) for p in range(D.n)}
    to_final = {p: min((paths[p][f] for f in D.finals if f in paths[p]), key=len)
                for p in range(D.n)}
    roots = []
    for comp in fa.sccs(D.n, succ):
        comp = set(comp)
        root = min(comp)
        walks = _closed_walks(D, comp, root, paths)
        if walks:
            ins = [w for w in walks if any(l.role == IN for l in w)]
            outs = [w for w in walks if any(l.role == OUT for l in w)]
            if ins and outs:
                walks.append(ins[0] + outs[0])
            roots.append((root, walks))
    words = []
    for root, walks in roots:
        for c in walks:
            words.append(paths[D.initial][root] + c * k + to_final[root])
    for (r1, w1), (r2, w2) in itertools.product(roots, roots):
        if r2 not in paths[r1]:
            continue
        mixed = [c for c in w2 if len({l.role for l in c}) == 2]
        if not mixed:
            continue
        c2 = mixed[-1]
        for c1 in w1:
            if sum(1 if l.role == IN else -1 for l in c1) == 0:
                continue
            heavy = k * (len(c2) + 1) + k
            words.append(paths[D.initial][r1] + c1 * heavy + paths[r1][r2] + c2 * k
                         + to_final[r2])
    return words


def rng_for(seed):
    return random.Random(seed)


def show(w):
    return " ".join(str(l) for l in w)


def random_distance_automaton(rng, max_states=4, density=0.35):
    from syncrel.uniform import DistanceAutomaton
    n = rng.randint(1, max_states)
    letters = ("a", "b")[:rng.randint(1, 2)]
    weights = {}
    for p in range(n):
        for a in letters:
            for q in range(n):
                if rng.random() < density:
                    weights[(p, a, q)] = rng.choice((0, 0, 1))
    finals = [q for q in range(n) if rng.random() < 0.5] or [n - 1]
    return DistanceAutomaton(letters, n, 0, finals, weights)
