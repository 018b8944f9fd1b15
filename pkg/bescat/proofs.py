"""
NJ proof terms: the simply typed lambda calculus with products, sums and abort.

Every binder records its formula, so a term determines its typing derivation
and check_nj is type synthesis followed by a comparison.

E.g.
  >>> swap = Lam('x', parse_formula('p & q'), Pair(Snd(Var('x')), Fst(Var('x'))))
  >>> check_nj([], swap, parse_formula('p & q -> q & p'))
  True
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from .errors import SchemaError
from .formulas import (Bot, Conj, Disj, FormulaSyntaxError, Impl, parse_formula,
                       render_formula)


class NJTerm(object):
    """Base class; equality is alpha-equivalence."""
    __slots__ = ('_key',)

    def key(self):
        k = getattr(self, '_key', None)
        if k is None:
            k = _alpha_key(self, {}, 0)
            self._key = k
        return k

    def __eq__(self, other):
        return isinstance(other, NJTerm) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return '<{} {}>'.format(type(self).__name__, self)


class Var(NJTerm):
    __slots__ = ('name',)

    def __init__(self, name):
        self.name = name

    def __str__(self):
        return self.name


class Pair(NJTerm):
    __slots__ = ('left', 'right')

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __str__(self):
        return '<{}, {}>'.format(self.left, self.right)


class Fst(NJTerm):
    __slots__ = ('term',)

    def __init__(self, term):
        self.term = term

    def __str__(self):
        return 'fst({})'.format(self.term)


class Snd(NJTerm):
    __slots__ = ('term',)

    def __init__(self, term):
        self.term = term

    def __str__(self):
        return 'snd({})'.format(self.term)


class Lam(NJTerm):
    __slots__ = ('var', 'ty', 'body')

    def __init__(self, var, ty, body):
        self.var = var
        self.ty = ty
        self.body = body

    def __str__(self):
        return '(\\{}:{}. {})'.format(self.var, render_formula(self.ty), self.body)


class App(NJTerm):
    __slots__ = ('fun', 'arg')

    def __init__(self, fun, arg):
        self.fun = fun
        self.arg = arg

    def __str__(self):
        return '({} {})'.format(self.fun, self.arg)


class Inl(NJTerm):
    """Left injection; *other* is the right disjunct."""
    __slots__ = ('term', 'other')

    def __init__(self, term, other):
        self.term = term
        self.other = other

    def __str__(self):
        return 'inl({})'.format(self.term)


class Inr(NJTerm):
    """Right injection; *other* is the left disjunct."""
    __slots__ = ('term', 'other')

    def __init__(self, term, other):
        self.term = term
        self.other = other

    def __str__(self):
        return 'inr({})'.format(self.term)


class Case(NJTerm):
    __slots__ = ('term', 'lvar', 'lbody', 'rvar', 'rbody')

    def __init__(self, term, lvar, lbody, rvar, rbody):
        self.term = term
        self.lvar = lvar
        self.lbody = lbody
        self.rvar = rvar
        self.rbody = rbody

    def __str__(self):
        return 'case {} of inl {} => {} | inr {} => {}'.format(
            self.term, self.lvar, self.lbody, self.rvar, self.rbody)


class Abort(NJTerm):
    __slots__ = ('term', 'ty')

    def __init__(self, term, ty):
        self.term = term
        self.ty = ty

    def __str__(self):
        return 'abort({})'.format(self.term)


def _bind(env, name, level):
    inner = dict(env)
    inner[name] = level
    return inner


def _alpha_key(t, env, level):
    if isinstance(t, Var):
        return ('b', env[t.name]) if t.name in env else ('v', t.name)
    if isinstance(t, Pair):
        return 'pair', _alpha_key(t.left, env, level), _alpha_key(t.right, env, level)
    if isinstance(t, Fst):
        return 'fst', _alpha_key(t.term, env, level)
    if isinstance(t, Snd):
        return 'snd', _alpha_key(t.term, env, level)
    if isinstance(t, Lam):
        return 'lam', t.ty, _alpha_key(t.body, _bind(env, t.var, level), level + 1)
    if isinstance(t, App):
        return 'app', _alpha_key(t.fun, env, level), _alpha_key(t.arg, env, level)
    if isinstance(t, Inl):
        return 'inl', t.other, _alpha_key(t.term, env, level)
    if isinstance(t, Inr):
        return 'inr', t.other, _alpha_key(t.term, env, level)
    if isinstance(t, Case):
        return ('case', _alpha_key(t.term, env, level), _alpha_key(t.lbody, _bind(env, t.lvar, level), level + 1),
                _alpha_key(t.rbody, _bind(env, t.rvar, level), level + 1))
    if isinstance(t, Abort):
        return 'abort', t.ty, _alpha_key(t.term, env, level)
    raise TypeError('not an NJTerm: {!r}'.format(t))


def free_vars(t):
    if isinstance(t, Var):
        return frozenset([t.name])
    if isinstance(t, Lam):
        return free_vars(t.body) - {t.var}
    if isinstance(t, Case):
        return free_vars(t.term) | (free_vars(t.lbody) - {t.lvar}) | (free_vars(t.rbody) - {t.rvar})
    if isinstance(t, (Pair, App)):
        a, b = (t.left, t.right) if isinstance(t, Pair) else (t.fun, t.arg)
        return free_vars(a) | free_vars(b)
    return free_vars(t.term)


###############################################################################
# Typing

def infer(ctx, t):
    """The formula proved by *t* under the dict *ctx* (variable -> Formula), or None."""
    if isinstance(t, Var):
        return ctx.get(t.name)
    if isinstance(t, Pair):
        a, b = infer(ctx, t.left), infer(ctx, t.right)
        return Conj(a, b) if a is not None and b is not None else None
    if isinstance(t, (Fst, Snd)):
        a = infer(ctx, t.term)
        if not isinstance(a, Conj):
            return None
        return a.left if isinstance(t, Fst) else a.right
    if isinstance(t, Lam):
        inner = dict(ctx)
        inner[t.var] = t.ty
        b = infer(inner, t.body)
        return Impl(t.ty, b) if b is not None else None
    if isinstance(t, App):
        f, a = infer(ctx, t.fun), infer(ctx, t.arg)
        if isinstance(f, Impl) and a is not None and f.left == a:
            return f.right
        return None
    if isinstance(t, Inl):
        a = infer(ctx, t.term)
        return Disj(a, t.other) if a is not None else None
    if isinstance(t, Inr):
        a = infer(ctx, t.term)
        return Disj(t.other, a) if a is not None else None
    if isinstance(t, Case):
        d = infer(ctx, t.term)
        if not isinstance(d, Disj):
            return None
        left, right = dict(ctx), dict(ctx)
        left[t.lvar] = d.left
        right[t.rvar] = d.right
        a, b = infer(left, t.lbody), infer(right, t.rbody)
        return a if a is not None and a == b else None
    if isinstance(t, Abort):
        return t.ty if isinstance(infer(ctx, t.term), Bot) else None
    return None


def check_nj(ctx, t, phi):
    """
    True iff *t* encodes an NJ derivation of ctx |- phi.

    *ctx*:
      sequence of (variable, Formula); a later entry shadows an earlier one
    """
    return infer(dict(ctx), t) == phi


###############################################################################
# Substitution and normalization

def _fresh(name, taken):
    k = 1
    while '{}_{}'.format(name, k) in taken:
        k += 1
    return '{}_{}'.format(name, k)


def _under(var, body, subst):
    """Push *subst* under a binder for *var*, renaming it if it would capture."""
    inner = dict((k, v) for k, v in subst.items() if k != var)
    if not inner:
        return var, body
    avoid = set()
    for v in inner.values():
        avoid |= free_vars(v)
    if var in avoid:
        nv = _fresh(var, avoid | free_vars(body) | set(inner))
        body = substitute(body, {var: Var(nv)})
        var = nv
    return var, substitute(body, inner)


def substitute(t, subst):
    """Capture-avoiding simultaneous substitution."""
    if not subst:
        return t
    if isinstance(t, Var):
        return subst.get(t.name, t)
    if isinstance(t, Pair):
        return Pair(substitute(t.left, subst), substitute(t.right, subst))
    if isinstance(t, Fst):
        return Fst(substitute(t.term, subst))
    if isinstance(t, Snd):
        return Snd(substitute(t.term, subst))
    if isinstance(t, Lam):
        var, body = _under(t.var, t.body, subst)
        return Lam(var, t.ty, body)
    if isinstance(t, App):
        return App(substitute(t.fun, subst), substitute(t.arg, subst))
    if isinstance(t, Inl):
        return Inl(substitute(t.term, subst), t.other)
    if isinstance(t, Inr):
        return Inr(substitute(t.term, subst), t.other)
    if isinstance(t, Case):
        lv, lb = _under(t.lvar, t.lbody, subst)
        rv, rb = _under(t.rvar, t.rbody, subst)
        return Case(substitute(t.term, subst), lv, lb, rv, rb)
    if isinstance(t, Abort):
        return Abort(substitute(t.term, subst), t.ty)
    raise TypeError('not an NJTerm: {!r}'.format(t))


def normalize(t):
    """
    Beta normal form: removes every detour, i.e. an eliminator applied to the
    matching introducer (App of Lam, Fst/Snd of Pair, Case of Inl/Inr).
    """
    if isinstance(t, Var):
        return t
    if isinstance(t, Pair):
        return Pair(normalize(t.left), normalize(t.right))
    if isinstance(t, (Fst, Snd)):
        s = normalize(t.term)
        if isinstance(s, Pair):
            return s.left if isinstance(t, Fst) else s.right
        return type(t)(s)
    if isinstance(t, Lam):
        return Lam(t.var, t.ty, normalize(t.body))
    if isinstance(t, App):
        f = normalize(t.fun)
        a = normalize(t.arg)
        if isinstance(f, Lam):
            return normalize(substitute(f.body, {f.var: a}))
        return App(f, a)
    if isinstance(t, Inl):
        return Inl(normalize(t.term), t.other)
    if isinstance(t, Inr):
        return Inr(normalize(t.term), t.other)
    if isinstance(t, Case):
        s = normalize(t.term)
        if isinstance(s, Inl):
            return normalize(substitute(t.lbody, {t.lvar: s.term}))
        if isinstance(s, Inr):
            return normalize(substitute(t.rbody, {t.rvar: s.term}))
        return Case(s, t.lvar, normalize(t.lbody), t.rvar, normalize(t.rbody))
    if isinstance(t, Abort):
        return Abort(normalize(t.term), t.ty)
    raise TypeError('not an NJTerm: {!r}'.format(t))


def detours(t):
    """Number of eliminators applied directly to their matching introducer."""
    if isinstance(t, Var):
        return 0
    n = 0
    if isinstance(t, App) and isinstance(t.fun, Lam):
        n = 1
    elif isinstance(t, (Fst, Snd)) and isinstance(t.term, Pair):
        n = 1
    elif isinstance(t, Case) and isinstance(t.term, (Inl, Inr)):
        n = 1
    return n + sum(detours(c) for c in _subterms(t))


def _subterms(t):
    if isinstance(t, Pair):
        return t.left, t.right
    if isinstance(t, App):
        return t.fun, t.arg
    if isinstance(t, Lam):
        return t.body,
    if isinstance(t, Case):
        return t.term, t.lbody, t.rbody
    if isinstance(t, Var):
        return ()
    return t.term,


def term_size(t):
    return 1 + sum(term_size(c) for c in _subterms(t))


###############################################################################
# JSON

def term_to_json(t):
    if isinstance(t, Var):
        return {'var': t.name}
    if isinstance(t, Pair):
        return {'pair': [term_to_json(t.left), term_to_json(t.right)]}
    if isinstance(t, Fst):
        return {'fst': term_to_json(t.term)}
    if isinstance(t, Snd):
        return {'snd': term_to_json(t.term)}
    if isinstance(t, Lam):
        return {'lam': {'var': t.var, 'type': render_formula(t.ty), 'body': term_to_json(t.body)}}
    if isinstance(t, App):
        return {'app': [term_to_json(t.fun), term_to_json(t.arg)]}
    if isinstance(t, (Inl, Inr)):
        return {type(t).__name__.lower(): {'term': term_to_json(t.term), 'other': render_formula(t.other)}}
    if isinstance(t, Case):
        return {'case': {'term': term_to_json(t.term),
                         'left': {'var': t.lvar, 'body': term_to_json(t.lbody)},
                         'right': {'var': t.rvar, 'body': term_to_json(t.rbody)}}}
    if isinstance(t, Abort):
        return {'abort': {'term': term_to_json(t.term), 'type': render_formula(t.ty)}}
    raise TypeError('not an NJTerm: {!r}'.format(t))


def _formula(v, path):
    if not isinstance(v, str):
        raise SchemaError(path, 'expected formula text')
    try:
        return parse_formula(v)
    except FormulaSyntaxError as e:
        raise SchemaError(path, str(e))


def _field(obj, key, path):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(path, 'missing key {!r}'.format(key))
    return obj[key]


def _name(v, path):
    if not isinstance(v, str) or not v:
        raise SchemaError(path, 'expected a variable name')
    return v


def term_from_json(obj, path=''):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise SchemaError(path, 'expected an object with exactly one term constructor')
    (tag, v), = obj.items()
    p = '{}/{}'.format(path, tag)
    if tag == 'var':
        return Var(_name(v, p))
    if tag in ('pair', 'app'):
        if not isinstance(v, list) or len(v) != 2:
            raise SchemaError(p, 'expected a list of two terms')
        a, b = term_from_json(v[0], p + '/0'), term_from_json(v[1], p + '/1')
        return Pair(a, b) if tag == 'pair' else App(a, b)
    if tag in ('fst', 'snd'):
        return (Fst if tag == 'fst' else Snd)(term_from_json(v, p))
    if tag == 'lam':
        return Lam(_name(_field(v, 'var', p), p + '/var'), _formula(_field(v, 'type', p), p + '/type'),
                   term_from_json(_field(v, 'body', p), p + '/body'))
    if tag in ('inl', 'inr'):
        return (Inl if tag == 'inl' else Inr)(term_from_json(_field(v, 'term', p), p + '/term'),
                                              _formula(_field(v, 'other', p), p + '/other'))
    if tag == 'case':
        left, right = _field(v, 'left', p), _field(v, 'right', p)
        return Case(term_from_json(_field(v, 'term', p), p + '/term'),
                    _name(_field(left, 'var', p + '/left'), p + '/left/var'),
                    term_from_json(_field(left, 'body', p + '/left'), p + '/left/body'),
                    _name(_field(right, 'var', p + '/right'), p + '/right/var'),
                    term_from_json(_field(right, 'body', p + '/right'), p + '/right/body'))
    if tag == 'abort':
        return Abort(term_from_json(_field(v, 'term', p), p + '/term'), _formula(_field(v, 'type', p), p + '/type'))
    raise SchemaError(path, 'unknown term constructor {!r}'.format(tag))
