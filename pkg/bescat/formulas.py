r"""
Formulas of intuitionistic propositional logic.

Grammar (precedence & > | > ->, with -> right-associative):

    formula := impl
    impl    := disj ("->" impl)?
    disj    := conj ("|" conj)*
    conj    := unit ("&" unit)*
    unit    := atom | "bot" | "(" formula ")"
    atom    := [a-z][a-zA-Z0-9_]*

E.g.
  >>> parse_formula('p & q -> r | bot')
  Impl(left=Conj(left=Atom(name='p'), right=Atom(name='q')), right=Disj(left=Atom(name='r'), right=Bot()))
  >>> render_formula(parse_formula('p & (q | r)'))
  'p & (q | r)'
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import re
from dataclasses import dataclass

ATOM_PATTERN = re.compile(r'[a-z][a-zA-Z0-9_]*\Z')

_TOKEN = re.compile(r'\s*(?:(->)|([|&()~,])|([a-z][a-zA-Z0-9_]*)|(\S))')

# Binding strength used by the renderer
_PREC_IMPL = 1
_PREC_DISJ = 2
_PREC_CONJ = 3
_PREC_UNIT = 4


class FormulaSyntaxError(ValueError):
    """Malformed formula text.  *position* is a 0-based character offset."""

    def __init__(self, message, text, position):
        ValueError.__init__(self, '{} at position {} in {!r}'.format(message, position, text))
        self.message = message
        self.text = text
        self.position = position


class Formula(object):
    """Base class of the formula syntax tree."""

    __slots__ = ()

    def atoms(self):
        return atoms_of([self])

    def subformulas(self):
        return subformulas([self])

    def __str__(self):
        return render_formula(self)


@dataclass(frozen=True, order=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_PATTERN.match(self.name) or self.name == 'bot':
            raise ValueError('not an atom name: {!r}'.format(self.name))


@dataclass(frozen=True)
class Conj(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Impl(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Disj(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Bot(Formula):
    pass


BOT = Bot()


def neg(f):
    """~f, i.e. f -> bot"""
    return Impl(f, BOT)


def atom(name):
    return Atom(name)


def atoms(names):
    """Atoms from a comma separated string or an iterable of names."""
    if isinstance(names, str):
        names = [n.strip() for n in names.split(',') if n.strip()]
    return tuple(sorted(set(Atom(n) if not isinstance(n, Atom) else n for n in names)))


class FormulaSet(tuple):
    """
    Duplicate-free tuple of formulas in canonical order (sorted by rendered text).

    Used for contexts Gamma, Theta and subformula-closed sets Delta.
    """

    def __new__(cls, formulas=()):
        keyed = {}
        for f in formulas:
            if not isinstance(f, Formula):
                raise TypeError('not a Formula: {!r}'.format(f))
            keyed.setdefault(render_formula(f), f)
        return tuple.__new__(cls, [keyed[k] for k in sorted(keyed)])

    def union(self, other):
        return FormulaSet(tuple(self) + tuple(other))

    def __repr__(self):
        return 'FormulaSet([{}])'.format(', '.join(render_formula(f) for f in self))


def _children(f):
    if isinstance(f, (Conj, Impl, Disj)):
        return f.left, f.right
    return ()


def subformulas(fs):
    """Closure of *fs* under immediate subformulas, fs included."""
    seen = {}
    stack = list(fs)
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen[f] = True
        stack.extend(_children(f))
    return FormulaSet(seen)


def atoms_of(fs):
    found = set()
    for f in subformulas(fs):
        if isinstance(f, Atom):
            found.add(f)
    return frozenset(found)


def formula_size(f):
    return 1 + sum(formula_size(c) for c in _children(f))


###############################################################################
# Printing

def _prec(f):
    if isinstance(f, Impl):
        return _PREC_IMPL
    if isinstance(f, Disj):
        return _PREC_DISJ
    if isinstance(f, Conj):
        return _PREC_CONJ
    return _PREC_UNIT


def _wrap(f, min_prec):
    s = render_formula(f)
    if _prec(f) < min_prec:
        return '(' + s + ')'
    return s


def render_formula(f):
    """Minimal-parentheses text; parse_formula(render_formula(f)) == f."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bot):
        return 'bot'
    if isinstance(f, Impl):
        return '{} -> {}'.format(_wrap(f.left, _PREC_IMPL + 1), _wrap(f.right, _PREC_IMPL))
    if isinstance(f, Disj):
        # '|' associates to the left
        return '{} | {}'.format(_wrap(f.left, _PREC_DISJ), _wrap(f.right, _PREC_DISJ + 1))
    if isinstance(f, Conj):
        return '{} & {}'.format(_wrap(f.left, _PREC_CONJ), _wrap(f.right, _PREC_CONJ + 1))
    raise TypeError('not a Formula: {!r}'.format(f))


def render_sequent(gamma, phi):
    return '{} |- {}'.format(', '.join(render_formula(g) for g in gamma), render_formula(phi)).lstrip()


###############################################################################
# Parsing

def _tokenize(text, allow_negation):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(4) is not None:
            raise FormulaSyntaxError('unexpected character {!r}'.format(m.group(4)), text, start)
        tok = m.group(m.lastindex)
        if tok == '~' and not allow_negation:
            raise FormulaSyntaxError("negation '~' is not part of the formula grammar", text, start)
        if tok == ',':
            raise FormulaSyntaxError("unexpected ','", text, start)
        tokens.append((tok, start))
        pos = m.end()
    tokens.append((None, len(text)))
    return tokens


class _Parser(object):
    def __init__(self, text, allow_negation=False):
        self.text = text
        self.tokens = _tokenize(text, allow_negation)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][1]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            what = 'end of input' if tok is None else repr(tok)
            raise FormulaSyntaxError('expected {!r} but found {}'.format(expected, what), self.text, pos)
        self.i += 1
        return tok

    def formula(self):
        left = self.disj()
        if self.peek() == '->':
            self.take()
            return Impl(left, self.formula())
        return left

    def disj(self):
        f = self.conj()
        while self.peek() == '|':
            self.take()
            f = Disj(f, self.conj())
        return f

    def conj(self):
        f = self.unit()
        while self.peek() == '&':
            self.take()
            f = Conj(f, self.unit())
        return f

    def unit(self):
        tok = self.peek()
        if tok == '(':
            self.take()
            f = self.formula()
            self.take(')')
            return f
        if tok == '~':
            self.take()
            return neg(self.unit())
        if tok is None or tok in ('->', '|', '&', ')'):
            what = 'end of input' if tok is None else repr(tok)
            raise FormulaSyntaxError('expected a formula but found {}'.format(what), self.text, self.pos())
        self.take()
        if tok == 'bot':
            return BOT
        return Atom(tok)

    def parse(self):
        f = self.formula()
        if self.peek() is not None:
            raise FormulaSyntaxError('unexpected {!r}'.format(self.peek()), self.text, self.pos())
        return f


def parse_formula(text, allow_negation=False):
    """
    Parse *text* into a Formula.

    *allow_negation*: [True | False]
      accept '~f' as sugar for 'f -> bot'
    """
    return _Parser(text, allow_negation=allow_negation).parse()


def parse_sequent(text, allow_negation=False):
    """Parse 'g1, g2, ... |- phi' into (FormulaSet, Formula).  The context may be empty."""
    if text.count('|-') != 1:
        raise FormulaSyntaxError("a sequent needs exactly one '|-'", text, max(text.find('|-'), 0))
    split = text.index('|-')
    lhs, rhs = text[:split], text[split + 2:]
    gamma = []
    offset = 0
    if lhs.strip():
        for part in lhs.split(','):
            try:
                gamma.append(parse_formula(part, allow_negation=allow_negation))
            except FormulaSyntaxError as e:
                raise FormulaSyntaxError(e.message, text, offset + e.position)
            offset += len(part) + 1
    try:
        phi = parse_formula(rhs, allow_negation=allow_negation)
    except FormulaSyntaxError as e:
        raise FormulaSyntaxError(e.message, text, split + 2 + e.position)
    return FormulaSet(gamma), phi
