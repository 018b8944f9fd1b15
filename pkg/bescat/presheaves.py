"""
Presheaf denotations of formulas over a finite fragment of W.

A Denotation assigns a finite table of elements to every world and acts
contravariantly along morphisms: for f : u -> w it sends elements at w to
elements at u.

    atoms          derivations of depth <= frag.depth, acted on by substitution
    &              pointwise products
    ->             at w, the natural transformations hom(-, w) x [[phi]] -> [[psi]]
    |              products over the atoms s of ([[phi]] -> [[s]]) -> (([[psi]] -> [[s]]) -> [[s]])
    bot            the product over the atoms s of [[s]]
    | (coproduct)  tagged disjoint unions

Exponential tables are found by exhaustive search for natural transformations,
under a cap; nothing is silently truncated.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import itertools
import logging
from dataclasses import dataclass, field

from .bases import AtomicRule, Base, RuleApp, Var, derivations, substitute
from .errors import CapExceeded, TruncationError, UniverseError
from .formulas import (BOT, Atom, Bot, Conj, Disj, Impl, atoms_of,
                       render_formula)
from .locales import AtomInterp, Poset, Upset, vsem
from .worlds import FRAGMENT_BOUNDS, World, WMorphism, build_fragment, identity

logger = logging.getLogger(__name__)

DEFAULT_TABLE_CAP = 10 ** 6
FRESH_TAG = 'new'

_MISSING = object()


class Denotation(object):
    """A presheaf on a fragment, with tables computed on demand."""

    def __init__(self, frag, formula=None):
        self.frag = frag
        self.formula = formula
        self._tables = {}
        self._canon = {}
        self._acts = {}

    @property
    def label(self):
        return render_formula(self.formula) if self.formula is not None else type(self).__name__

    def table(self, w):
        t = self._tables.get(w)
        if t is None:
            t = tuple(self._build(w))
            self._tables[w] = t
            self._canon[w] = dict((x, x) for x in t)
        return t

    def find(self, w, x):
        """The table element at w equal to x, or None."""
        self.table(w)
        return self._canon[w].get(x)

    def canonical(self, w, x):
        found = self.find(w, x)
        if found is None:
            raise TruncationError('{}: the image {} at {} is not in the table'.format(
                self.label, x, self.frag.label(w)), self.frag.depth)
        return found

    def act(self, f, x):
        """The action of f : u -> w, taking x at w to an element at u."""
        key = (f, x)
        y = self._acts.get(key, _MISSING)
        if y is _MISSING:
            y = self.canonical(f.source, self._act(f, x))
            self._acts[key] = y
        return y

    def cardinalities(self):
        return dict((self.frag.label(w), len(self.table(w))) for w in self.frag.worlds)

    def to_json(self):
        return {'denotation': self.label, 'depth': self.frag.depth, 'cardinalities': self.cardinalities()}

    def _build(self, w):
        raise NotImplementedError

    def _act(self, f, x):
        raise NotImplementedError


class AtomDenotation(Denotation):

    def __init__(self, frag, atom):
        Denotation.__init__(self, frag, atom)
        self.atom = atom

    def _build(self, w):
        return derivations(w.base, w.ctx, self.atom, self.frag.depth)

    def _act(self, f, x):
        return substitute(x, f.substitution())


class Terminal(Denotation):

    def _build(self, w):
        return [()]

    def _act(self, f, x):
        return ()


class Product(Denotation):

    def __init__(self, frag, factors, formula=None):
        Denotation.__init__(self, frag, formula)
        self.factors = tuple(factors)

    def _build(self, w):
        return itertools.product(*[d.table(w) for d in self.factors])

    def _act(self, f, x):
        return tuple(d.act(f, xi) for d, xi in zip(self.factors, x))


class Coproduct(Denotation):
    """Elements (0, a) for a in left and (1, b) for b in right."""

    def __init__(self, frag, left, right, formula=None):
        Denotation.__init__(self, frag, formula)
        self.left = left
        self.right = right

    def _build(self, w):
        return [(0, a) for a in self.left.table(w)] + [(1, b) for b in self.right.table(w)]

    def _act(self, f, x):
        tag, y = x
        return tag, (self.left if tag == 0 else self.right).act(f, y)


class HomTimes(Denotation):
    """hom(-, w0) x A: elements (h, a) with h : w -> w0."""

    def __init__(self, frag, w0, factor):
        Denotation.__init__(self, frag)
        self.w0 = w0
        self.factor = factor

    @property
    def label(self):
        return 'hom(-, {}) x {}'.format(self.frag.label(self.w0), self.factor.label)

    def _build(self, w):
        return [(h, a) for h in self.frag.hom(w, self.w0) for a in self.factor.table(w)]

    def _act(self, f, x):
        h, a = x
        return self.frag.compose(f, h), self.factor.act(f, a)


class Exponential(Denotation):
    """(A -> B)(w) = natural transformations hom(-, w) x A -> B."""

    def __init__(self, frag, source, target, formula=None, cap=DEFAULT_TABLE_CAP):
        Denotation.__init__(self, frag, formula)
        self.source = source
        self.target = target
        self.cap = cap
        self._homtimes = {}

    def homtimes(self, w):
        d = self._homtimes.get(w)
        if d is None:
            d = HomTimes(self.frag, w, self.source)
            self._homtimes[w] = d
        return d

    def _build(self, w):
        return natural_transformations(self.homtimes(w), self.target, cap=self.cap)

    def _act(self, g, eta):
        hw = self.homtimes(g.source)
        mapping = {}
        for u in self.frag.worlds:
            for h, a in hw.table(u):
                mapping[(u, (h, a))] = eta(u, (self.frag.compose(h, g), a))
        return NatTrans(hw, self.target, mapping)


class NatTrans(object):
    """
    Components as one mapping (world, element) -> element.  Equal when the
    mappings are equal, so transformations can be table elements themselves.
    """
    __slots__ = ('source', 'target', 'mapping', '_hash')

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = mapping
        self._hash = None

    def __call__(self, w, x):
        return self.mapping[(w, x)]

    def component(self, w):
        return dict((x, self.mapping[(w, x)]) for x in self.source.table(w))

    def __eq__(self, other):
        return isinstance(other, NatTrans) and self.mapping == other.mapping

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.mapping.items()))
        return self._hash

    def __repr__(self):
        return '<NatTrans {} -> {} on {} elements>'.format(self.source.label, self.target.label, len(self.mapping))


def natural_transformations(source, target, limit=None, cap=DEFAULT_TABLE_CAP):
    """
    Every natural transformation source -> target over their fragment, in a
    deterministic order.  Backtracking over the components; assigning a component
    at w forces the components at the sources of the morphisms into w.
    """
    frag = source.frag
    variables = [(w, x) for w in frag.worlds for x in source.table(w)]
    for w in frag.worlds:
        if source.table(w) and not target.table(w):
            return
    steps = [0]

    def propagate(assign, w, x, y):
        assign = dict(assign)
        todo = [(w, x, y)]
        while todo:
            w, x, y = todo.pop()
            cur = assign.get((w, x), _MISSING)
            if cur is not _MISSING:
                if cur != y:
                    return None
                continue
            assign[(w, x)] = y
            steps[0] += 1
            if steps[0] > cap:
                raise CapExceeded('natural transformations {} -> {}'.format(source.label, target.label), cap)
            for f in frag.incoming(w):
                todo.append((f.source, source.act(f, x), target.act(f, y)))
        return assign

    def search(i, assign):
        while i < len(variables) and variables[i] in assign:
            i += 1
        if i == len(variables):
            yield NatTrans(source, target, assign)
            return
        w, x = variables[i]
        for y in target.table(w):
            nxt = propagate(assign, w, x, y)
            if nxt is not None:
                for found in search(i + 1, nxt):
                    yield found

    for k, eta in enumerate(search(0, {})):
        if limit is not None and k >= limit:
            return
        yield eta


def find_natural_transformation(source, target, cap=DEFAULT_TABLE_CAP):
    return next(natural_transformations(source, target, limit=1, cap=cap), None)


def check_naturality(eta, frag=None):
    """Every component is total into the target's table and every square commutes."""
    source, target = eta.source, eta.target
    frag = frag or source.frag
    for w in frag.worlds:
        for x in source.table(w):
            y = eta.mapping.get((w, x), _MISSING)
            if y is _MISSING or target.find(w, y) is None:
                return False
    for f in frag.morphisms:
        u, w = f.source, f.target
        for x in source.table(w):
            try:
                if eta(u, source.act(f, x)) != target.act(f, eta(w, x)):
                    return False
            except TruncationError:
                return False
    return True


def identity_nat(d):
    return NatTrans(d, d, dict(((w, x), x) for w in d.frag.worlds for x in d.table(w)))


def vertical(eta, theta):
    """theta after eta."""
    return NatTrans(eta.source, theta.target,
                    dict((k, theta(k[0], y)) for k, y in eta.mapping.items()))


def check_functor(d):
    """The action preserves identities and composites and stays inside the tables."""
    frag = d.frag
    try:
        for w in frag.worlds:
            idw = identity(w)
            for x in d.table(w):
                if d.act(idw, x) != x:
                    return False
        for f in frag.morphisms:
            for g in frag.morphisms:
                if f.target != g.source:
                    continue
                fg = frag.compose(f, g)
                for x in d.table(g.target):
                    if d.act(fg, x) != d.act(f, d.act(g, x)):
                        return False
    except TruncationError:
        return False
    return True


###############################################################################
# Interpretation

def _atoms(frag):
    return [a if isinstance(a, Atom) else Atom(a) for a in frag.universe]


def sigma(frag, left, right, cap=DEFAULT_TABLE_CAP, formula=None):
    """The second-order disjunction: product over atoms s of (A -> s) -> ((B -> s) -> s)."""
    factors = []
    for s in _atoms(frag):
        ds = AtomDenotation(frag, s)
        factors.append(Exponential(frag, Exponential(frag, left, ds, cap=cap),
                                   Exponential(frag, Exponential(frag, right, ds, cap=cap), ds, cap=cap),
                                   cap=cap))
    return Product(frag, factors, formula)


def interp(f, frag, coproduct=False, cap=DEFAULT_TABLE_CAP, _cache=None):
    """
    [[f]] over *frag*.  With *coproduct* every disjunction is a coproduct instead
    of the second-order disjunction.
    """
    universe = frozenset(_atoms(frag))
    for a in sorted(atoms_of([f])):
        if a not in universe:
            raise UniverseError(a, 'formula {}'.format(render_formula(f)))
    cache = {} if _cache is None else _cache
    d = cache.get(f)
    if d is not None:
        return d
    if isinstance(f, Atom):
        d = AtomDenotation(frag, f)
    elif isinstance(f, Bot):
        d = Product(frag, [interp(s, frag, coproduct, cap, cache) for s in _atoms(frag)], BOT)
    else:
        left = interp(f.left, frag, coproduct, cap, cache)
        right = interp(f.right, frag, coproduct, cap, cache)
        if isinstance(f, Conj):
            d = Product(frag, [left, right], f)
        elif isinstance(f, Impl):
            d = Exponential(frag, left, right, f, cap=cap)
        elif isinstance(f, Disj):
            d = Coproduct(frag, left, right, f) if coproduct else sigma(frag, left, right, cap, f)
        else:
            raise TypeError('not a Formula: {!r}'.format(f))
    cache[f] = d
    return d


def interp_coproduct(f, frag, cap=DEFAULT_TABLE_CAP):
    """[[phi]] + [[psi]] for f = phi | psi, disjunctions inside read as coproducts too."""
    if not isinstance(f, Disj):
        raise ValueError('not a disjunction: {}'.format(render_formula(f)))
    return interp(f, frag, coproduct=True, cap=cap)


def interp_context(gamma, frag, coproduct=False, cap=DEFAULT_TABLE_CAP):
    """The product of the denotations of gamma; terminal when gamma is empty."""
    cache = {}
    return Product(frag, [interp(g, frag, coproduct, cap, cache) for g in gamma])


def read_back(eta, world):
    """eta : [[P]] -> [[p]] applied to the identity (the context variables) at *world*."""
    ident = tuple(Var(x) for x in world.ctx.names())
    if isinstance(eta.source, AtomDenotation):
        ident = ident[0]
    return eta(world, eta.source.canonical(world, ident))


def supports_disjunction_check(frag, a, b, c, cap=DEFAULT_TABLE_CAP):
    """True iff some natural transformation sigma(A, B) x (A -> C) x (B -> C) -> C exists."""
    source = Product(frag, [sigma(frag, a, b, cap), Exponential(frag, a, c, cap=cap),
                            Exponential(frag, b, c, cap=cap)])
    return find_natural_transformation(source, c, cap=cap) is not None


###############################################################################
# Strong disjunction

def _plug(t, r, name):
    """t with every leaf application of the premise-free rule r replaced by Var(name)."""
    if isinstance(t, Var):
        return t
    if t.rule == r and not t.args:
        return Var(name)
    return RuleApp(t.rule, [_plug(a, r, name) for a in t.args], t.binders)


def coproduct_transformation(frag, p, q, r, tagged, cap=DEFAULT_TABLE_CAP):
    """
    eta : [[p -> q | r]] -> [[(p -> q) | (p -> r)]] with coproduct disjunction.

    At w, an element e is evaluated at w + tagged on the tagged axiom; the tag of
    the answer picks the summand, and the derivation found, with the axiom
    replaced by the argument, is the component of the resulting transformation.
    Returns None when some component falls outside its table.
    """
    src = interp(Impl(p, Disj(q, r)), frag, coproduct=True, cap=cap)
    tgt = interp(Disj(Impl(p, q), Impl(p, r)), frag, coproduct=True, cap=cap)
    pd = src.source
    axiom = RuleApp(tagged, ())
    hole = '_axiom'
    mapping = {}
    for w in frag.worlds:
        w2 = World(w.base.union([tagged]), w.ctx)
        iota = WMorphism(w2, w, tuple(Var(x) for x in w.ctx.names()))
        iota = next(h for h in frag.hom(w2, w) if h == iota)
        a = pd.canonical(w2, axiom)
        for e in src.table(w):
            tag, phi = e(w2, (iota, a))
            side = tgt.left if tag == 0 else tgt.right
            plugged = _plug(phi, tagged, hole)
            components = {}
            ht = side.homtimes(w)
            for u in frag.worlds:
                for f, b in ht.table(u):
                    s = f.substitution()
                    s[hole] = b
                    found = side.target.find(u, substitute(plugged, s))
                    if found is None:
                        return None
                    components[(u, (f, b))] = found
            lam = side.find(w, NatTrans(ht, side.target, components))
            if lam is None:
                return None
            mapping[(w, e)] = (tag, lam)
    return NatTrans(src, tgt, mapping)


@dataclass
class StrongDisjunctionReport:
    universe: tuple
    depth: int
    worlds: int
    morphisms: int
    degenerate: bool
    coproduct_constructed: bool
    coproduct_natural: bool
    forall_count: int
    forall_limit: object = None
    frame_separates: object = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {'universe': [a.name for a in self.universe],
                'depth': self.depth,
                'worlds': self.worlds,
                'morphisms': self.morphisms,
                'degenerate': self.degenerate,
                'coproduct': {'constructed': self.coproduct_constructed, 'natural': self.coproduct_natural},
                'forall': {'count': self.forall_count, 'limit': self.forall_limit},
                'frame_separates': self.frame_separates,
                'notes': list(self.notes)}


def fragment_frame(frag):
    """
    (Poset, AtomInterp) reading a fragment with empty contexts as a frame: worlds
    ordered by base inclusion, p holding where the table of p is nonempty.
    """
    if any(len(w.ctx) for w in frag.worlds):
        raise ValueError('only fragments with empty contexts read as frames')
    names = [frag.label(w) for w in frag.worlds]
    pairs = [(frag.label(v), frag.label(w)) for v in frag.worlds for w in frag.worlds
             if v != w and v.base.issubset(w.base)]
    poset = Poset(names, pairs)
    interp = AtomInterp(dict(
        (a, Upset(poset, [frag.label(w) for w in frag.worlds if AtomDenotation(frag, a).table(w)]))
        for a in _atoms(frag)))
    return poset, interp


def strong_disjunction_experiment(universe=('p', 'q', 'r'), bounds=FRAGMENT_BOUNDS, depth=1, ctx_cap=0,
                                  limit=None, cap=DEFAULT_TABLE_CAP):
    """
    p -> q | r  against  (p -> q) | (p -> r) on a fragment closed under a tagged
    copy of the axiom => p: (i) the transformation built from the coproduct reading
    and its naturality, (ii) the number of transformations under the second-order
    reading, up to *limit*.  Universes of fewer than three atoms reuse the last one.
    """
    names = sorted(set(a if isinstance(a, Atom) else Atom(a) for a in universe))
    degenerate = len(names) < 3
    p, q, r = (names + [names[-1]] * 2)[:3]
    tagged = AtomicRule((), p, tag=FRESH_TAG)
    frag = build_fragment(Base(), names, depth=depth, ctx_cap=ctx_cap, bounds=bounds, closed_under=(tagged,))

    source, target = Impl(p, Disj(q, r)), Disj(Impl(p, q), Impl(p, r))
    eta = coproduct_transformation(frag, p, q, r, tagged, cap=cap)
    natural = eta is not None and check_naturality(eta, frag)
    count = sum(1 for _ in natural_transformations(interp(source, frag, cap=cap),
                                                   interp(target, frag, cap=cap),
                                                   limit=limit, cap=cap))
    separates = None
    if ctx_cap == 0:
        _, atoms = fragment_frame(frag)
        separates = not vsem(source, atoms) <= vsem(target, atoms)
    notes = ['the second-order count is relative to this fragment: none found here does not mean none in W']
    if separates is False:
        notes.append('the worlds of this fragment, read as a frame, validate {} |- {}: transformations '
                     'found here are artifacts of the truncation and need not exist in W'.format(
                         render_formula(source), render_formula(target)))
    if degenerate:
        notes.append('degenerate universe: the disjuncts coincide')
    logger.debug('strong disjunction: coproduct natural={}, second-order count={}, frame separates={}'.format(
        natural, count, separates))
    return StrongDisjunctionReport(tuple(names), depth, len(frag.worlds), len(frag.morphisms), degenerate,
                                   eta is not None, natural, count, limit, separates, notes)
