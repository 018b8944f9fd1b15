"""
Finite fragments of the category W.

An object (world) is a base with an atomic context (X : P).  A morphism
(B, X:P) -> (C, Y:Q) exists only when C is contained in B, and consists of one
derivation X:P |-_B Phi_i : q_i for each y_i : q_i of Q.  Composition is
simultaneous substitution.

E.g.
  >>> frag = build_fragment(Base(), atoms('p'), depth=1, ctx_cap=1)
  >>> len(frag.worlds), check_category_laws(frag)
  (4, True)
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import itertools
import logging
from dataclasses import dataclass, field

from .bases import (Base, Bounds, ExtensionSpace, VarContext, Var, check_derivation,
                    derivations, substitute)
from .errors import CapExceeded

logger = logging.getLogger(__name__)

DEFAULT_MORPHISM_CAP = 5000
DEFAULT_WORLD_CAP = 500
FRAGMENT_BOUNDS = Bounds(0, 0, 1)


@dataclass(frozen=True)
class World:
    base: Base
    ctx: VarContext

    def __post_init__(self):
        object.__setattr__(self, 'ctx', VarContext(self.ctx))

    def sort_key(self):
        return self.base.sort_key(), len(self.ctx), tuple(a.name for _, a in self.ctx)

    def __str__(self):
        return '({}, {})'.format(self.base, self.ctx)


@dataclass(frozen=True)
class WMorphism:
    """One term per target variable, each deriving its atom from the source context."""
    source: World
    target: World
    terms: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(self.terms))

    def substitution(self):
        """target variable -> term"""
        return dict(zip(self.target.ctx.names(), self.terms))

    def is_well_formed(self):
        if not self.target.base.issubset(self.source.base) or len(self.terms) != len(self.target.ctx):
            return False
        return all(check_derivation(self.source.base, self.source.ctx, t, a)
                   for t, (_, a) in zip(self.terms, self.target.ctx))

    def __str__(self):
        return '({})'.format(', '.join(str(t) for t in self.terms))


def identity(w):
    return WMorphism(w, w, tuple(Var(x) for x in w.ctx.names()))


def compose(f, g):
    """f then g: f's terms substituted for the variables of g's terms."""
    if f.target != g.source:
        raise ValueError('cannot compose: {} does not end where {} starts'.format(f, g))
    s = f.substitution()
    return WMorphism(f.source, g.target, tuple(substitute(t, s) for t in g.terms))


class Fragment(object):
    """Finitely many worlds and the morphisms between them, closed under composition."""

    def __init__(self, worlds, morphisms, depth, universe):
        self.worlds = tuple(sorted(set(worlds), key=World.sort_key))
        self.depth = depth
        self.universe = tuple(universe)
        self._index = dict((w, i) for i, w in enumerate(self.worlds))
        self.morphisms = tuple(sorted(set(morphisms), key=self._morphism_key))
        self._hom = {}
        self._incoming = dict((w, []) for w in self.worlds)
        for f in self.morphisms:
            self._hom.setdefault((f.source, f.target), []).append(f)
            self._incoming[f.target].append(f)
        self._composite = {}

    def _morphism_key(self, f):
        return self._index[f.source], self._index[f.target], str(f)

    def label(self, w):
        return 'w{}'.format(self._index[w])

    def hom(self, w, v):
        return self._hom.get((w, v), [])

    def incoming(self, v):
        """Morphisms ending at v."""
        return self._incoming[v]

    def identity(self, w):
        return identity(w)

    def compose(self, f, g):
        """compose(f, g), returned as the listed morphism equal to it."""
        key = (f, g)
        h = self._composite.get(key)
        if h is None:
            c = compose(f, g)
            for h in self.hom(c.source, c.target):
                if h == c:
                    break
            else:
                raise ValueError('composite {} is not in the fragment'.format(c))
            self._composite[key] = h
        return h

    def to_json(self):
        return {'depth': self.depth,
                'universe': [a.name for a in self.universe],
                'worlds': [{'name': self.label(w), 'base': str(w.base), 'context': str(w.ctx)}
                           for w in self.worlds],
                'morphisms': [{'source': self.label(f.source), 'target': self.label(f.target),
                               'terms': [str(t) for t in f.terms]} for f in self.morphisms]}


def build_fragment(base, universe, depth=1, ctx_cap=1, bounds=FRAGMENT_BOUNDS, closed_under=(),
                   world_cap=DEFAULT_WORLD_CAP, morphism_cap=DEFAULT_MORPHISM_CAP):
    """
    Worlds (C, X:P) for C in the extension space of *base* under *bounds* and
    |P| <= ctx_cap; morphisms are all tuples of derivations of depth <= *depth*,
    closed under composition.

    *closed_under*:
      rules r such that with (C, X:P) the world (C + r, X:P) is included too
    """
    space = ExtensionSpace(base, universe, bounds)
    universe = space.universe
    bases = list(space.bases())
    for r in closed_under:
        bases.extend([b.union([r]) for b in bases])
    contexts = [VarContext.of_atoms(c) for k in range(ctx_cap + 1)
                for c in itertools.combinations(universe, k)]
    worlds = sorted(set(World(b, ctx) for b in bases for ctx in contexts), key=World.sort_key)
    if len(worlds) > world_cap:
        raise CapExceeded('{} worlds'.format(len(worlds)), world_cap)

    morphisms = set()
    for w in worlds:
        for v in worlds:
            if not v.base.issubset(w.base):
                continue
            choices = [derivations(w.base, w.ctx, a, depth) for _, a in v.ctx]
            for terms in itertools.product(*choices):
                morphisms.add(WMorphism(w, v, terms))
                if len(morphisms) > morphism_cap:
                    raise CapExceeded('fragment morphisms', morphism_cap)
    frontier = list(morphisms)
    while frontier:
        out, inc = _by_endpoint(morphisms)
        new = set()
        for f in frontier:
            new.update(compose(f, g) for g in out.get(f.target, ()))
            new.update(compose(e, f) for e in inc.get(f.source, ()))
        new -= morphisms
        morphisms |= new
        if len(morphisms) > morphism_cap:
            raise CapExceeded('fragment morphisms under composition', morphism_cap)
        frontier = list(new)
    logger.debug('fragment: {} worlds, {} morphisms'.format(len(worlds), len(morphisms)))
    return Fragment(worlds, morphisms, depth, universe)


def _by_endpoint(morphisms):
    out, inc = {}, {}
    for f in morphisms:
        out.setdefault(f.source, []).append(f)
        inc.setdefault(f.target, []).append(f)
    return out, inc


def check_category_laws(frag):
    """Identities are listed and neutral; composites are listed; composition is associative."""
    listed = set(frag.morphisms)
    out, _ = _by_endpoint(frag.morphisms)
    for w in frag.worlds:
        if identity(w) not in listed:
            return False
    for f in frag.morphisms:
        if compose(identity(f.source), f) != f or compose(f, identity(f.target)) != f:
            return False
        for g in out.get(f.target, ()):
            fg = compose(f, g)
            if fg not in listed:
                return False
            for h in out.get(g.target, ()):
                if compose(fg, h) != compose(f, compose(g, h)):
                    return False
    return True
