"""Text formats for automata (``.syna``), transducers (``.synt``) and distance
automata (``.synd``).

All three are line oriented; ``#`` starts a comment.  Directives look like
``name: values`` and every other line is a transition::

    input-alphabet: a b
    output-alphabet: c d
    states: q0 q1
    initial: q0
    final: q1
    q0 i:a q1

An automaton file may give ``regex: <expr>`` instead of states and
transitions.  Transducer transitions are ``q0 a / cc q1`` with
``finalout: q1 = c`` (a word of multi-character symbols is written with
dots, ``ab.cd``); distance-automaton transitions are ``q0 a q1 w=1``
under an ``alphabet:`` directive.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import automata as fa
from .errors import ParseError, RegexSyntaxError, SyncrelError, UndeclaredLetter
from .syncword import TaggedAlphabet
from .uniform import INF, DistanceAutomaton, Nft, SubseqTransducer

KINDS = ("automaton", "transducer", "distance-automaton", "relation")
_EXT_KIND = {".syna": "automaton", ".synt": "transducer", ".synd": "distance-automaton"}
_EPS_TOKENS = ("eps", "ε")


@dataclass
class Model:
    kind: str
    value: object
    alphabet: object
    state_names: tuple = ()


class _Lines:
    def __init__(self, text):
        self.items = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0]
            if not line.strip():
                continue
            col = len(line) - len(line.lstrip()) + 1
            self.items.append((lineno, col, line.strip()))


def _split_directive(line):
    head, sep, rest = line.partition(":")
    if sep and head.strip() and " " not in head.strip() and not head.strip() in ("i", "o"):
        return head.strip(), rest.strip()
    return None, None


def parse_model(text: str, kind: str | None = None) -> Model:
    lines = _Lines(text)
    directives = {}
    body = []
    for lineno, col, line in lines.items:
        name, value = _split_directive(line)
        if name is None:
            body.append((lineno, col, line))
            continue
        if name in directives and name not in ("final", "finalout"):
            raise ParseError(f"duplicate directive {name!r}", lineno, col)
        directives.setdefault(name, []).append((lineno, col, value))
    if "kind" in directives:
        lineno, col, value = directives.pop("kind")[0]
        if value not in KINDS:
            raise ParseError(f"unknown kind {value!r}", lineno, col)
        kind = value
    kind = kind or "automaton"
    if kind in ("automaton", "relation"):
        return _parse_automaton(kind, directives, body)
    if kind == "transducer":
        return _parse_transducer(directives, body)
    return _parse_distance(directives, body)


def _check_directives(directives, allowed):
    for name, entries in directives.items():
        if name not in allowed:
            lineno, col, _ = entries[0]
            raise ParseError(f"unknown directive {name!r}", lineno, col)


def _one(directives, name, required=True):
    entries = directives.get(name)
    if not entries:
        if required:
            raise ParseError(f"missing directive {name!r}")
        return None
    return entries[0]


def _states(directives, body_states):
    entry = _one(directives, "states", required=False)
    if entry is None:
        names = []
        for s in body_states:
            if s not in names:
                names.append(s)
        return names, None
    names = entry[2].split()
    if len(set(names)) != len(names):
        raise ParseError("duplicate state name", entry[0], entry[1])
    return names, entry


def _state_index(names, declared, name, lineno, col):
    if name not in names:
        if declared is not None:
            raise ParseError(f"undeclared state {name!r}", lineno, col)
        names.append(name)
    return names.index(name)


def _finals(directives, names, declared):
    out = []
    for lineno, col, value in directives.get("final", []):
        for s in value.split():
            out.append(_state_index(names, declared, s, lineno, col))
    return out


def _tagged_alphabet(directives):
    ins = _one(directives, "input-alphabet")
    outs = _one(directives, "output-alphabet")
    try:
        return TaggedAlphabet(tuple(ins[2].split()), tuple(outs[2].split()))
    except SyncrelError as exc:
        raise ParseError(str(exc), ins[0], ins[1]) from exc


def _parse_automaton(kind, directives, body):
    _check_directives(directives, ("input-alphabet", "output-alphabet", "states", "initial",
                                   "final", "regex"))
    alphabet = _tagged_alphabet(directives)
    regex = _one(directives, "regex", required=False)
    if regex is not None:
        if body or "states" in directives:
            raise ParseError("a regex file has no states or transitions", regex[0], regex[1])
        try:
            A = alphabet.regex(regex[2])
        except RegexSyntaxError as exc:
            raise ParseError(f"regex: {exc}", regex[0], regex[1] + len("regex: ") +
                             (exc.position or 0)) from exc
        except UndeclaredLetter as exc:
            raise ParseError(f"undeclared letter {exc}", regex[0], regex[1]) from exc
        return _finish(kind, A, alphabet)
    parsed = []
    for lineno, col, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("transition must be 'state letter state'", lineno, col)
        parsed.append((lineno, col, parts))
    names, declared = _states(directives, [s for _, _, p in parsed for s in (p[0], p[2])])
    init = _one(directives, "initial")
    initial = _state_index(names, declared, init[2], init[0], init[1])
    finals = _finals(directives, names, declared)
    edges = []
    for lineno, col, (p, tok, q) in parsed:
        if tok in _EPS_TOKENS:
            letter = fa.EPS
        else:
            try:
                letter = alphabet.resolve(tok)
            except UndeclaredLetter as exc:
                raise ParseError(f"undeclared letter {tok!r}", lineno, col) from exc
        edges.append((_state_index(names, declared, p, lineno, col), letter,
                      _state_index(names, declared, q, lineno, col)))
    A = fa.Nfa.from_edges(alphabet.letters, len(names), initial, finals, edges)
    return _finish(kind, A, alphabet, tuple(names))


def _finish(kind, A, alphabet, names=()):
    if kind == "relation":
        from .autorel import from_sync_fsl
        from .syncword import finite_shiftlag
        if not finite_shiftlag(A):
            raise ParseError("a relation file needs a language with finite shiftlag")
        return Model(kind, from_sync_fsl(A, alphabet), alphabet, names)
    return Model(kind, A, alphabet, names)


def _word(tok, allowed, lineno, col):
    if tok in _EPS_TOKENS or tok == "":
        return ()
    if tok in allowed:
        return (tok,)
    symbols = tuple(tok.split(".")) if "." in tok else tuple(tok)
    for s in symbols:
        if s not in allowed:
            raise ParseError(f"undeclared letter {s!r}", lineno, col)
    return symbols


def _parse_transducer(directives, body):
    _check_directives(directives, ("input-alphabet", "output-alphabet", "states", "initial",
                                   "final", "finalout"))
    alphabet = _tagged_alphabet(directives)
    parsed = []
    for lineno, col, line in body:
        left, sep, right = line.partition("/")
        lp, rp = left.split(), right.split()
        if not sep or len(lp) not in (1, 2) or len(rp) not in (1, 2):
            raise ParseError("transition must be 'state input / output state'", lineno, col)
        p, u = lp[0], (lp[1] if len(lp) == 2 else "")
        v, q = (rp[0], rp[1]) if len(rp) == 2 else ("", rp[0])
        parsed.append((lineno, col, p, _word(u, alphabet.inputs, lineno, col),
                       _word(v, alphabet.outputs, lineno, col), q))
    names, declared = _states(directives, [s for x in parsed for s in (x[2], x[5])])
    init = _one(directives, "initial")
    initial = _state_index(names, declared, init[2], init[0], init[1])
    finals = _finals(directives, names, declared)
    final_output = {q: () for q in finals}
    for lineno, col, value in directives.get("finalout", []):
        state, sep, word = value.partition("=")
        if not sep:
            raise ParseError("finalout must be 'state = word'", lineno, col)
        q = _state_index(names, declared, state.strip(), lineno, col)
        if q not in final_output:
            raise ParseError(f"final output on non-final state {state.strip()!r}", lineno, col)
        final_output[q] = _word(word.strip(), alphabet.outputs, lineno, col)
    trans = [(_state_index(names, declared, p, ln, c), u, v,
              _state_index(names, declared, q, ln, c)) for ln, c, p, u, v, q in parsed]
    subseq = all(len(u) == 1 for _, u, _, _ in trans) and \
        len({(p, u) for p, u, _, _ in trans}) == len(trans)
    if subseq:
        delta = {(p, u[0]): (v, q) for p, u, v, q in trans}
        value = SubseqTransducer(alphabet.inputs, alphabet.outputs, len(names), initial,
                                 delta, finals, final_output)
    else:
        value = Nft(alphabet.inputs, alphabet.outputs, len(names), initial, trans, finals,
                    final_output)
    return Model("transducer", value, alphabet, tuple(names))


def _parse_distance(directives, body):
    _check_directives(directives, ("alphabet", "states", "initial", "final"))
    entry = _one(directives, "alphabet")
    letters = tuple(entry[2].split())
    parsed = []
    for lineno, col, line in body:
        parts = line.split()
        if len(parts) != 4 or not parts[3].startswith("w="):
            raise ParseError("transition must be 'state letter state w=<0|1|inf>'", lineno, col)
        w = parts[3][2:]
        if w not in ("0", "1", "inf", "∞"):
            raise ParseError(f"bad distance {w!r}", lineno, col)
        if parts[1] not in letters:
            raise ParseError(f"undeclared letter {parts[1]!r}", lineno, col)
        parsed.append((lineno, col, parts[0], parts[1], parts[2], INF if w in ("inf", "∞") else int(w)))
    names, declared = _states(directives, [s for x in parsed for s in (x[2], x[4])])
    init = _one(directives, "initial")
    initial = _state_index(names, declared, init[2], init[0], init[1])
    finals = _finals(directives, names, declared)
    weights = {}
    for lineno, col, p, a, q, w in parsed:
        key = (_state_index(names, declared, p, lineno, col), a,
               _state_index(names, declared, q, lineno, col))
        if key in weights:
            raise ParseError("duplicate transition", lineno, col)
        weights[key] = w
    B = DistanceAutomaton(letters, len(names), initial, finals, weights)
    return Model("distance-automaton", B, letters, tuple(names))


def load_model(path, kind: str | None = None) -> Model:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_model(text, kind or _EXT_KIND.get(path.suffix))


# ---------------------------------------------------------------------------
# writers


def format_automaton(A, alphabet: TaggedAlphabet) -> str:
    A = fa.as_nfa(fa.trim(A))
    lines = [f"input-alphabet: {' '.join(alphabet.inputs)}",
             f"output-alphabet: {' '.join(alphabet.outputs)}",
             f"states: {' '.join(f'q{i}' for i in range(A.n))}",
             f"initial: q{A.initial}"]
    if A.finals:
        lines.append(f"final: {' '.join(f'q{q}' for q in sorted(A.finals))}")
    for p, l, q in A.edges():
        lines.append(f"q{p} {'eps' if l is fa.EPS else str(l)} q{q}")
    return "\n".join(lines) + "\n"


def _fmt_word(w):
    if not w:
        return "eps"
    return ".".join(w) if any(len(s) != 1 for s in w) else "".join(w)


def format_transducer(t) -> str:
    lines = [f"input-alphabet: {' '.join(t.inputs)}",
             f"output-alphabet: {' '.join(t.outputs)}",
             f"states: {' '.join(f'q{i}' for i in range(t.n))}",
             f"initial: q{t.initial}"]
    if t.finals:
        lines.append(f"final: {' '.join(f'q{q}' for q in sorted(t.finals))}")
    if isinstance(t, SubseqTransducer):
        trans = [(p, (a,), v, q) for (p, a), (v, q) in sorted(t.delta.items(), key=repr)]
    else:
        trans = t.transitions
    for p, u, v, q in trans:
        lines.append(f"q{p} {_fmt_word(u)} / {_fmt_word(v)} q{q}")
    for q in sorted(t.finals):
        if t.final_output.get(q):
            lines.append(f"finalout: q{q} = {_fmt_word(t.final_output[q])}")
    return "\n".join(lines) + "\n"


def format_distance(B: DistanceAutomaton) -> str:
    lines = [f"alphabet: {' '.join(B.alphabet)}",
             f"states: {' '.join(f'q{i}' for i in range(B.n))}",
             f"initial: q{B.initial}"]
    if B.finals:
        lines.append(f"final: {' '.join(f'q{q}' for q in sorted(B.finals))}")
    for (p, a, q), d in sorted(B.weights.items(), key=repr):
        lines.append(f"q{p} {a} q{q} w={'inf' if d == INF else d}")
    return "\n".join(lines) + "\n"


def parse_tagged_word(text: str, alphabet: TaggedAlphabet) -> tuple:
    """Whitespace-separated ``i:x``/``o:x`` tokens (bare symbols when unambiguous)."""
    try:
        return alphabet.word(text)
    except UndeclaredLetter as exc:
        raise ParseError(f"undeclared letter {exc}", 1, 1) from exc
