"""Regular-expression front end.

Grammar (whitespace is insignificant except as a token separator)::

    expr   := term (('+' | '|') term)*
    term   := factor*
    factor := atom ('*' | '^+' | '⁺')*
    atom   := '(' expr ')' | 'eps' | 'ε' | letter

A letter token is either resolved as a whole (``i:a``, ``o:c``, ``Σ``) or,
failing that, split into single characters (so ``ac`` reads as ``a c``).
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from . import automata as fa
from .errors import RegexSyntaxError, UndeclaredLetter

_SPECIAL = set("()+|*⁺")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in _SPECIAL:
            tokens.append((c, i))
            i += 1
        elif c == "^":
            if text[i + 1:i + 2] != "+":
                raise RegexSyntaxError("'^' must be followed by '+'", i)
            tokens.append(("^+", i))
            i += 2
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in _SPECIAL \
                    and text[j] != "^":
                j += 1
            tokens.append(("lit:" + text[i:j], i))
            i = j
    return tokens


class _Parser:
    def __init__(self, text, alphabet, resolve, shortcuts):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.alphabet = tuple(alphabet)
        self.resolve = resolve
        self.shortcuts = shortcuts
        self.length = len(text)

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def where(self):
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else self.length

    def parse(self):
        if not self.tokens:
            raise RegexSyntaxError("empty expression", 0)
        result = self.expr()
        if self.pos != len(self.tokens):
            raise RegexSyntaxError(f"unexpected token {self.peek()!r}", self.where())
        return result

    def expr(self):
        parts = [self.term()]
        while self.peek() in ("+", "|"):
            self.pos += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else fa.union(*parts)

    def term(self):
        parts = []
        while True:
            tok = self.peek()
            if tok is None or tok in ("+", "|", ")"):
                break
            parts.append(self.factor())
        if not parts:
            raise RegexSyntaxError("expected an expression", self.where())
        return parts[0] if len(parts) == 1 else fa.concat(*parts)

    def factor(self):
        node = self.atom()
        while self.peek() in ("*", "^+", "⁺"):
            tok = self.peek()
            self.pos += 1
            node = fa.star(node) if tok == "*" else fa.plus(node)
        return node

    def atom(self):
        tok = self.peek()
        at = self.where()
        if tok == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.where())
            self.pos += 1
            return node
        if tok is None or not tok.startswith("lit:"):
            raise RegexSyntaxError(f"unexpected token {tok!r}", at)
        self.pos += 1
        text = tok[4:]
        if text in ("eps", "ε"):
            return fa.epsilon(self.alphabet)
        if text in ("∅", "empty"):
            return fa.empty(self.alphabet)
        group = self._letters(text)
        if group is not None:
            return fa.letters_lang(self.alphabet, group)
        if len(text) == 1:
            raise RegexSyntaxError(f"undeclared letter {text!r}", at)
        # split into single characters; postfix operators bind to the last one
        self.pos -= 1
        self.tokens[self.pos:self.pos + 1] = [("lit:" + ch, at + k) for k, ch in enumerate(text)]
        return self.atom()

    def _letters(self, text):
        if text in self.shortcuts:
            return list(self.shortcuts[text])
        try:
            return [self.resolve(text)]
        except UndeclaredLetter:
            return None


def _default_resolver(alphabet):
    table = {str(a): a for a in alphabet}

    def resolve(token):
        if token in table:
            return table[token]
        raise UndeclaredLetter(token)
    return resolve


def parse_regex(text: str, alphabet: Sequence, resolve: Callable | None = None,
                shortcuts: Mapping | None = None) -> fa.Nfa:
    """Compile ``text`` into an Nfa over ``alphabet``.

    ``resolve`` maps a token to a letter (raising :class:`UndeclaredLetter`);
    by default letters are matched by their ``str``.  ``shortcuts`` maps names
    to groups of letters that stand for a one-letter union.
    """
    resolve = resolve or _default_resolver(alphabet)
    return _Parser(text, alphabet, resolve, dict(shortcuts or {})).parse()
