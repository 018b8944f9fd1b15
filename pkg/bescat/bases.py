"""
Atomic bases: second-level rules ((P1 => q1), ..., (Pn => qn)) => r, the
derivability relation P |-_B r with derivation terms, capture-avoiding
substitution, and bounded enumeration of base extensions.

E.g.
  >>> b = Base([rule('p'), rule('q', ([], 'p'))])
  >>> t = derives(b, [], Atom('q'), atoms('p,q'))
  >>> str(t)
  '[(=> p) => q]([=> p]())'
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

from .errors import CapExceeded, SchemaError, UniverseError
from .formulas import ATOM_PATTERN, Atom

logger = logging.getLogger(__name__)

DEFAULT_RULE_CAP = 20000
DEFAULT_EXTENSION_CAP = 100000
DEFAULT_CONTEXT_CAP = 1 << 16
DEFAULT_TERM_CAP = 100000


def _as_atom(a):
    return a if isinstance(a, Atom) else Atom(a)


def _as_atoms(names):
    if isinstance(names, (str, Atom)):
        names = [n.strip() for n in str(names if isinstance(names, str) else names.name).split(',') if n.strip()]
    return frozenset(_as_atom(n) for n in names)


def _names(atom_set):
    return tuple(sorted(a.name for a in atom_set))


@dataclass(frozen=True)
class Premise:
    """A premise (P => q): derive q with the extra hypotheses P."""
    hyps: frozenset
    concl: Atom

    def __post_init__(self):
        object.__setattr__(self, 'hyps', _as_atoms(self.hyps))
        object.__setattr__(self, 'concl', _as_atom(self.concl))

    def sort_key(self):
        return len(self.hyps), _names(self.hyps), self.concl.name

    def __str__(self):
        if self.hyps:
            return '({} => {})'.format(', '.join(_names(self.hyps)), self.concl.name)
        return '(=> {})'.format(self.concl.name)


@dataclass(frozen=True)
class AtomicRule:
    """
    An atomic rule.

    *premises*:
      collection of Premise (or (hyps, concl) pairs); duplicates collapse and the
      order is canonical, so App arguments line up with `premises`
    *conclusion*:
      the atom concluded
    *tag*:
      marks a distinguished copy of an otherwise identical rule
    """
    premises: tuple
    conclusion: Atom
    tag: Optional[str] = None

    def __post_init__(self):
        prems = set()
        for p in self.premises:
            prems.add(p if isinstance(p, Premise) else Premise(*p))
        object.__setattr__(self, 'premises', tuple(sorted(prems, key=Premise.sort_key)))
        object.__setattr__(self, 'conclusion', _as_atom(self.conclusion))

    def atoms(self):
        found = {self.conclusion}
        for p in self.premises:
            found.add(p.concl)
            found.update(p.hyps)
        return frozenset(found)

    def sort_key(self):
        return (len(self.premises), tuple(p.sort_key() for p in self.premises),
                self.conclusion.name, self.tag or '')

    def __str__(self):
        s = ', '.join(str(p) for p in self.premises)
        s = '{} => {}'.format(s, self.conclusion.name) if s else '=> {}'.format(self.conclusion.name)
        if self.tag:
            s += ' [{}]'.format(self.tag)
        return s


def rule(conclusion, *premises, **kwargs):
    """rule('s', (['q'], 'r')) is ((q => r)) => s; rule('p') is the axiom => p."""
    return AtomicRule(tuple(Premise(h, c) for h, c in premises), conclusion, tag=kwargs.get('tag'))


@dataclass(frozen=True)
class Base:
    """A finite set of atomic rules.  The name is a label only."""
    rules: frozenset = frozenset()
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'rules', frozenset(self.rules))

    def __iter__(self):
        return iter(sorted(self.rules, key=AtomicRule.sort_key))

    def __len__(self):
        return len(self.rules)

    def __contains__(self, r):
        return r in self.rules

    def __le__(self, other):
        return self.rules <= other.rules

    def issubset(self, other):
        return self.rules <= other.rules

    def union(self, rules):
        return Base(self.rules | frozenset(rules))

    def atoms(self):
        found = set()
        for r in self.rules:
            found |= r.atoms()
        return frozenset(found)

    def sort_key(self):
        return len(self.rules), tuple(r.sort_key() for r in self)

    def __str__(self):
        return '{' + '; '.join(str(r) for r in self) + '}'


def check_universe(base, universe, where=''):
    """Raise UniverseError for the first rule atom outside *universe*."""
    universe = frozenset(universe)
    for r in base:
        for a in sorted(r.atoms()):
            if a not in universe:
                raise UniverseError(a, where or 'rule {}'.format(r))


###############################################################################
# Derivation terms

class DerivTerm(object):
    """
    Derivation term: Var(x) or RuleApp(rule, args, binders).

    Equality is alpha-equivalence: the names of premise-bound variables do not matter.
    """
    __slots__ = ('_key',)

    def key(self):
        k = getattr(self, '_key', None)
        if k is None:
            k = _alpha_key(self, {}, 0)
            object.__setattr__(self, '_key', k)
        return k

    def __eq__(self, other):
        return isinstance(other, DerivTerm) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return '<{} {}>'.format(type(self).__name__, self)


class Var(DerivTerm):
    __slots__ = ('name',)

    def __init__(self, name):
        self.name = name

    def __str__(self):
        return self.name


class RuleApp(DerivTerm):
    """
    Application of *rule* to one argument per premise.

    binders[i] names the variables bound to the sorted hypotheses of premise i.
    """
    __slots__ = ('rule', 'args', 'binders')

    def __init__(self, rule_, args=(), binders=None):
        self.rule = rule_
        self.args = tuple(args)
        if binders is None:
            binders = [tuple(hyp_var(a) for a in sorted(p.hyps)) for p in rule_.premises]
        self.binders = tuple(tuple(b) for b in binders)

    def __str__(self):
        parts = []
        for bs, arg in zip(self.binders, self.args):
            prefix = ''.join('\\{}.'.format(b) for b in bs)
            parts.append(prefix + (' ' if prefix else '') + str(arg))
        return '[{}]({})'.format(self.rule, ', '.join(parts))


def hyp_var(a):
    """Canonical variable for hypothesis atom *a*."""
    return 'x_' + a.name


def _alpha_key(t, env, level):
    if isinstance(t, Var):
        if t.name in env:
            return 'b', env[t.name]
        return 'v', t.name
    parts = []
    for bs, arg in zip(t.binders, t.args):
        inner = dict(env)
        for j, b in enumerate(bs):
            inner[b] = level + j
        parts.append(_alpha_key(arg, inner, level + len(bs)))
    return 'a', t.rule, tuple(parts)


def free_vars(t):
    if isinstance(t, Var):
        return frozenset([t.name])
    found = set()
    for bs, arg in zip(t.binders, t.args):
        found |= free_vars(arg) - frozenset(bs)
    return frozenset(found)


def depth(t):
    """Var has depth 0; an application is one deeper than its deepest argument."""
    if isinstance(t, Var):
        return 0
    return 1 + max([depth(a) for a in t.args] or [0])


def _fresh(name, taken):
    k = 1
    while '{}_{}'.format(name, k) in taken:
        k += 1
    return '{}_{}'.format(name, k)


def substitute(t, subst):
    """
    Capture-avoiding simultaneous substitution t[subst[x]/x ...].

    Premise binders that would capture a free variable of a substituted term are renamed.
    """
    if isinstance(t, Var):
        return subst.get(t.name, t)
    if not subst:
        return t
    args, binders = [], []
    for bs, arg in zip(t.binders, t.args):
        fv = free_vars(arg)
        inner = dict((k, v) for k, v in subst.items() if k not in bs and k in fv)
        if not inner:
            args.append(arg)
            binders.append(bs)
            continue
        avoid = set()
        for v in inner.values():
            avoid |= free_vars(v)
        taken = avoid | fv | set(bs) | set(inner)
        renaming = {}
        new_bs = []
        for b in bs:
            if b in avoid:
                nb = _fresh(b, taken)
                taken.add(nb)
                renaming[b] = Var(nb)
                new_bs.append(nb)
            else:
                new_bs.append(b)
        if renaming:
            arg = substitute(arg, renaming)
        args.append(substitute(arg, inner))
        binders.append(tuple(new_bs))
    return RuleApp(t.rule, args, binders)


class VarContext(tuple):
    """Ordered (variable, atom) pairs with distinct variable names: the (X : P) of a world."""

    def __new__(cls, pairs=()):
        pairs = tuple((str(x), _as_atom(a)) for x, a in pairs)
        names = [x for x, _ in pairs]
        if len(set(names)) != len(names):
            raise ValueError('variable names must be distinct: {}'.format(names))
        return tuple.__new__(cls, pairs)

    @classmethod
    def of_atoms(cls, atom_set):
        """One canonical variable per atom, in atom order."""
        return cls((hyp_var(a), a) for a in sorted(_as_atoms(atom_set)))

    def names(self):
        return tuple(x for x, _ in self)

    def atoms(self):
        return frozenset(a for _, a in self)

    def lookup(self, name):
        for x, a in self:
            if x == name:
                return a
        return None

    def __str__(self):
        return '(' + ', '.join('{}:{}'.format(x, a.name) for x, a in self) + ')'


def _check(base, env, t, r):
    if isinstance(t, Var):
        return env.get(t.name) == r
    if not isinstance(t, RuleApp):
        return False
    rl = t.rule
    if rl not in base.rules or rl.conclusion != r:
        return False
    if not (len(t.args) == len(rl.premises) == len(t.binders)):
        return False
    for prem, bs, arg in zip(rl.premises, t.binders, t.args):
        if len(bs) != len(prem.hyps) or len(set(bs)) != len(bs):
            return False
        inner = dict(env)
        inner.update(zip(bs, sorted(prem.hyps)))
        if not _check(base, inner, arg, prem.concl):
            return False
    return True


def check_derivation(base, ctx, t, r):
    """True iff *t* is a well-formed derivation of atom *r* from *ctx* in *base*."""
    return _check(base, dict(VarContext(ctx)), t, _as_atom(r))


###############################################################################
# Saturation

class DerivTable(object):
    """Saturated derivability: (P, r) -> one witnessing derivation term."""

    def __init__(self, base, universe, entries, contexts):
        self.base = base
        self.universe = universe
        self.contexts = contexts
        self._entries = entries

    def get(self, hyps, r):
        return self._entries.get((_as_atoms(hyps), _as_atom(r)))

    def __contains__(self, judgment):
        hyps, r = judgment
        return (_as_atoms(hyps), _as_atom(r)) in self._entries

    def __len__(self):
        return len(self._entries)

    def judgments(self):
        return sorted(self._entries, key=lambda j: (len(j[0]), _names(j[0]), j[1].name))

    def derivable(self, hyps):
        hyps = _as_atoms(hyps)
        return frozenset(r for (P, r) in self._entries if P == hyps)


def _reachable_contexts(base, seeds):
    seen = set()
    todo = list(seeds)
    hyp_sets = set(p.hyps for r in base.rules for p in r.premises)
    while todo:
        P = todo.pop()
        if P in seen:
            continue
        seen.add(P)
        for H in hyp_sets:
            Q = P | H
            if Q not in seen:
                todo.append(Q)
    return seen


def saturate(base, universe, contexts=None, cap=DEFAULT_CONTEXT_CAP):
    """
    Least fixpoint of (Ref) and (App) over judgments P |- r, r in *universe*.

    *contexts*:
      None saturates over every P contained in the universe; otherwise only the
      hypothesis sets reachable from the given ones are considered
    """
    universe = frozenset(_as_atom(a) for a in universe)
    check_universe(base, universe)
    if contexts is None:
        if (1 << len(universe)) > cap:
            raise CapExceeded('saturation over {} atoms'.format(len(universe)), cap)
        ordered = sorted(universe)
        contexts = [frozenset(c) for k in range(len(ordered) + 1)
                    for c in itertools.combinations(ordered, k)]
    else:
        seeds = [_as_atoms(c) for c in contexts]
        for c in seeds:
            for a in c:
                if a not in universe:
                    raise UniverseError(a, 'hypotheses')
        contexts = _reachable_contexts(base, seeds)
        if len(contexts) > cap:
            raise CapExceeded('saturation contexts', cap)
    contexts = sorted(contexts, key=lambda c: (len(c), _names(c)))

    entries = {}
    for P in contexts:
        for a in sorted(P):
            entries[(P, a)] = Var(hyp_var(a))
    rules = list(base)
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        for P in contexts:
            for rl in rules:
                if (P, rl.conclusion) in entries:
                    continue
                args = []
                for prem in rl.premises:
                    sub = entries.get((P | prem.hyps, prem.concl))
                    if sub is None:
                        break
                    args.append(sub)
                else:
                    entries[(P, rl.conclusion)] = RuleApp(rl, args)
                    changed = True
    logger.debug('saturated {} rules over {} contexts in {} passes: {} judgments'.format(
        len(rules), len(contexts), passes, len(entries)))
    return DerivTable(base, universe, entries, tuple(contexts))


def derives(base, hyps, r, universe):
    """A derivation term of P |-_B r (context VarContext.of_atoms(P)), or None."""
    hyps = _as_atoms(hyps)
    r = _as_atom(r)
    if r not in frozenset(universe):
        raise UniverseError(r, 'conclusion')
    return saturate(base, universe, contexts=[hyps]).get(hyps, r)


def theorems(base, universe):
    """Atoms derivable from no hypotheses."""
    return saturate(base, universe, contexts=[frozenset()]).derivable(frozenset())


def derivations(base, ctx, goal, max_depth, cap=DEFAULT_TERM_CAP):
    """
    All derivation terms of *goal* from *ctx* in *base* up to *max_depth*, without
    alpha-duplicates.  Premise binders get fresh names y1, y2, ... so that terms
    using an outer hypothesis are kept apart from terms using a discharged one.
    """
    memo = {}
    rules = list(base)
    count = [0]

    def gen(env, goal, d):
        key = (env, goal, d)
        if key in memo:
            return memo[key]
        visible = dict(env)
        out = []
        seen = set()
        for name, _ in env:
            if visible[name] == goal and name not in seen:
                seen.add(name)
                out.append(Var(name))
        if d > 0:
            taken = set(visible)
            for rl in rules:
                if rl.conclusion != goal:
                    continue
                choices, binders = [], []
                for prem in rl.premises:
                    bs = []
                    k = 1
                    for _ in sorted(prem.hyps):
                        while 'y{}'.format(k) in taken:
                            k += 1
                        bs.append('y{}'.format(k))
                        k += 1
                    inner = env + tuple(zip(bs, sorted(prem.hyps)))
                    choices.append(gen(inner, prem.concl, d - 1))
                    binders.append(tuple(bs))
                for combo in itertools.product(*choices):
                    out.append(RuleApp(rl, combo, binders))
                    count[0] += 1
                    if count[0] > cap:
                        raise CapExceeded('derivation enumeration', cap)
        unique = []
        keys = set()
        for t in out:
            if t not in keys:
                keys.add(t)
                unique.append(t)
        memo[key] = tuple(unique)
        return memo[key]

    return gen(tuple(VarContext(ctx)), _as_atom(goal), max_depth)


###############################################################################
# Bounded extension enumeration

@dataclass(frozen=True)
class Bounds:
    """Enumeration bounds: premises per rule, hypotheses per premise, extra rules per base."""
    max_premises: int = 2
    max_hyps: int = 1
    max_extra_rules: int = 2

    def __post_init__(self):
        for name in ('max_premises', 'max_hyps', 'max_extra_rules'):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError('{} must be a non-negative int, not {!r}'.format(name, v))

    def admits(self, r):
        return len(r.premises) <= self.max_premises and all(len(p.hyps) <= self.max_hyps for p in r.premises)

    def to_json(self):
        return {'max_premises': self.max_premises,
                'max_hyps': self.max_hyps,
                'max_extra_rules': self.max_extra_rules}


def _binom_sum(n, m):
    total = 0
    c = 1
    for k in range(0, m + 1):
        if k > n:
            break
        if k > 0:
            c = c * (n - k + 1) // k
        total += c
    return total


def candidate_rules(universe, bounds, cap=DEFAULT_RULE_CAP):
    """
    Every rule over *universe* within *bounds*, in canonical order.

    Rules with a premise (P => q) where q is in P are left out: (Ref) discharges such a
    premise, so the rule duplicates the one without it.
    """
    ordered = sorted(frozenset(_as_atom(a) for a in universe))
    premises = []
    for k in range(bounds.max_hyps + 1):
        for hyps in itertools.combinations(ordered, k):
            for q in ordered:
                if q not in hyps:
                    premises.append(Premise(frozenset(hyps), q))
    count = _binom_sum(len(premises), bounds.max_premises) * len(ordered)
    if count > cap:
        raise CapExceeded('{} candidate rules over {} atoms'.format(count, len(ordered)), cap)
    found = []
    for k in range(bounds.max_premises + 1):
        for combo in itertools.combinations(premises, k):
            for r in ordered:
                found.append(AtomicRule(combo, r))
    return tuple(found)


class ExtensionSpace(object):
    """
    The bases root + S with S drawn from the candidate rules and |S| <= max_extra_rules.

    Every quantifier "for all C containing B" is read inside one space, so nested
    clauses never leave the finite set.  Bases are addressed by keys: frozensets of
    candidate indices.
    """

    def __init__(self, root, universe, bounds, rule_cap=DEFAULT_RULE_CAP,
                 extension_cap=DEFAULT_EXTENSION_CAP):
        self.root = root
        self.universe = tuple(sorted(frozenset(_as_atom(a) for a in universe)))
        self.bounds = bounds
        check_universe(root, self.universe)
        self.candidates = tuple(r for r in candidate_rules(self.universe, bounds, cap=rule_cap)
                                if r not in root.rules)
        self._index = dict((r, i) for i, r in enumerate(self.candidates))
        self.size = _binom_sum(len(self.candidates), bounds.max_extra_rules)
        if self.size > extension_cap:
            raise CapExceeded('{} extensions of a base with {} candidate rules'.format(
                self.size, len(self.candidates)), extension_cap)
        self._bases = {}
        self._above = {}
        logger.debug('extension space: {} candidates, {} bases'.format(len(self.candidates), self.size))

    def __len__(self):
        return self.size

    def keys(self):
        for k in range(self.bounds.max_extra_rules + 1):
            for combo in itertools.combinations(range(len(self.candidates)), k):
                yield frozenset(combo)

    def bases(self):
        for key in self.keys():
            yield self.base(key)

    def base(self, key):
        b = self._bases.get(key)
        if b is None:
            b = Base(self.root.rules | frozenset(self.candidates[i] for i in key))
            self._bases[key] = b
        return b

    def key_of(self, base):
        if not self.root.rules <= base.rules:
            raise ValueError('base {} does not extend the space root {}'.format(base, self.root))
        extra = base.rules - self.root.rules
        try:
            key = frozenset(self._index[r] for r in extra)
        except KeyError:
            raise ValueError('base {} has rules outside the candidate set'.format(base))
        if len(key) > self.bounds.max_extra_rules:
            raise ValueError('base {} has more than {} extra rules'.format(base, self.bounds.max_extra_rules))
        return key

    def above(self, key):
        """Keys of the bases in the space that contain base(key), key itself first."""
        found = self._above.get(key)
        if found is None:
            rest = [i for i in range(len(self.candidates)) if i not in key]
            room = self.bounds.max_extra_rules - len(key)
            found = [key | frozenset(combo) for k in range(room + 1)
                     for combo in itertools.combinations(rest, k)]
            self._above[key] = found
        return found


def enumerate_extensions(base, universe, bounds, cap=DEFAULT_EXTENSION_CAP):
    """Iterator over every C containing *base* within *bounds*; *base* itself comes first."""
    return ExtensionSpace(base, universe, bounds, extension_cap=cap).bases()


###############################################################################
# JSON

def rule_to_json(r):
    d = {'premises': [{'hyps': list(_names(p.hyps)), 'concl': p.concl.name} for p in r.premises],
         'concl': r.conclusion.name}
    if r.tag:
        d['tag'] = r.tag
    return d


def base_to_json(base, universe=None):
    if universe is None:
        universe = base.atoms()
    return {'universe': [a.name for a in sorted(_as_atoms(universe))],
            'rules': [rule_to_json(r) for r in base]}


def _json_atom(v, path, universe):
    if not isinstance(v, str) or not ATOM_PATTERN.match(v) or v == 'bot':
        raise SchemaError(path, 'not an atom name: {!r}'.format(v))
    if universe is not None and v not in universe:
        raise SchemaError(path, 'atom {!r} is outside the declared universe'.format(v))
    return Atom(v)


def _json_list(v, path):
    if not isinstance(v, list):
        raise SchemaError(path, 'expected a list')
    return v


def base_from_json(obj, path=''):
    """(Base, universe) from the base file format; every atom must be declared."""
    if not isinstance(obj, dict):
        raise SchemaError(path, 'expected an object')
    for k in ('universe', 'rules'):
        if k not in obj:
            raise SchemaError(path, 'missing key {!r}'.format(k))
    names = _json_list(obj['universe'], path + '/universe')
    universe = tuple(sorted(set(_json_atom(v, '{}/universe/{}'.format(path, i), None) for i, v in enumerate(names))))
    declared = set(a.name for a in universe)
    rules = []
    for i, r in enumerate(_json_list(obj['rules'], path + '/rules')):
        rp = '{}/rules/{}'.format(path, i)
        if not isinstance(r, dict) or 'concl' not in r:
            raise SchemaError(rp, "expected an object with 'concl'")
        prems = []
        for j, p in enumerate(_json_list(r.get('premises', []), rp + '/premises')):
            pp = '{}/premises/{}'.format(rp, j)
            if not isinstance(p, dict) or 'concl' not in p:
                raise SchemaError(pp, "expected an object with 'concl'")
            hyps = [_json_atom(h, '{}/hyps/{}'.format(pp, k), declared)
                    for k, h in enumerate(_json_list(p.get('hyps', []), pp + '/hyps'))]
            prems.append(Premise(frozenset(hyps), _json_atom(p['concl'], pp + '/concl', declared)))
        rules.append(AtomicRule(tuple(prems), _json_atom(r['concl'], rp + '/concl', declared), tag=r.get('tag')))
    return Base(rules), universe
