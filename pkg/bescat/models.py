"""
Kripke models of intuitionistic logic and the countermodel search used by decide.

Truth is evaluated on whole boolean masks over the worlds; the search evaluates a
whole batch of valuations at once.  Finite trees suffice as frames, and on a tree
a countermodel can always be taken to refute at its root.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import itertools
import logging

import numpy as np

from .formulas import BOT, Atom, Bot, Conj, Disj, FormulaSet, Impl, atoms_of
from .locales import AtomInterp, Poset, Upset, poset_from_json, poset_to_json

logger = logging.getLogger(__name__)

MAX_COUNTERMODEL_WORLDS = 6
DEFAULT_MODEL_CAP = 200000


class KripkeModel(object):
    """
    A finite poset of worlds with a monotone valuation.

    *valuation*:
      mapping atom -> worlds where it holds; each must be upward closed
    """

    def __init__(self, poset, valuation):
        self.poset = poset
        val = {}
        for a, ws in dict(valuation).items():
            a = a if isinstance(a, Atom) else Atom(a)
            val[a] = ws if isinstance(ws, Upset) else Upset(poset, ws)
        self.valuation = val
        self._truth = {}

    @property
    def worlds(self):
        return self.poset.elements

    def truth_set(self, f):
        """Boolean mask of the worlds forcing *f*."""
        found = self._truth.get(f)
        if found is None:
            found = _truth(f, self._atom_mask, self.poset, len(self.poset))
            self._truth[f] = found
        return found

    def _atom_mask(self, a):
        u = self.valuation.get(a)
        return u.mask if u is not None else np.zeros(len(self.poset), dtype=bool)

    def forces(self, w, f):
        return bool(self.truth_set(f)[self.poset.index(w)])

    def to_json(self):
        return poset_to_json(self.poset, AtomInterp(self.valuation))

    @classmethod
    def from_json(cls, obj, path=''):
        poset, interp = poset_from_json(obj, path)
        return cls(poset, dict(interp.items()))

    def __repr__(self):
        return '<KripkeModel of {} worlds>'.format(len(self.poset))


def _truth(f, atom_mask, poset, n, shape=None):
    if isinstance(f, Atom):
        return atom_mask(f)
    if isinstance(f, Bot):
        return np.zeros(shape or n, dtype=bool)
    a = _truth(f.left, atom_mask, poset, n, shape)
    b = _truth(f.right, atom_mask, poset, n, shape)
    if isinstance(f, Conj):
        return a & b
    if isinstance(f, Disj):
        return a | b
    if isinstance(f, Impl):
        return poset.implies_mask(a, b)
    raise TypeError('not a Formula: {!r}'.format(f))


def kripke_eval(model, w, f):
    """w forces f: -> and the order quantify over w' >= w, & and | pointwise, bot never."""
    return model.forces(w, f)


def satisfies(model, gamma, phi, world=None):
    """Gamma forces phi at *world*, or at every world when *world* is None."""
    held = np.ones(len(model.poset), dtype=bool)
    for g in gamma:
        held &= model.truth_set(g)
    ok = ~held | model.truth_set(phi)
    if world is None:
        return bool(ok.all())
    return bool(ok[model.poset.index(world)])


###############################################################################
# Frames

def _canonical(children, v):
    return '(' + ''.join(sorted(_canonical(children, c) for c in children[v])) + ')'


def rooted_trees(n):
    """
    Rooted trees on n nodes up to isomorphism, as parent tuples: entry i-1 is the
    parent of node i, and every parent precedes its child.
    """
    if n < 1:
        return []
    found = {}
    for parents in itertools.product(*[range(i) for i in range(1, n)]):
        children = [[] for _ in range(n)]
        for child, parent in enumerate(parents, 1):
            children[parent].append(child)
        found.setdefault(_canonical(children, 0), parents)
    return [found[k] for k in sorted(found, key=lambda k: (found[k], k))]


def tree_poset(parents):
    n = len(parents) + 1
    return Poset(['w{}'.format(i) for i in range(n)],
                 [('w{}'.format(p), 'w{}'.format(c)) for c, p in enumerate(parents, 1)])


def find_countermodel(gamma, phi, max_worlds=MAX_COUNTERMODEL_WORLDS, model_cap=DEFAULT_MODEL_CAP):
    """
    (KripkeModel, world) whose root forces every formula of *gamma* but not *phi*,
    searching trees of 1 .. max_worlds worlds; None when there is none in the bound.
    """
    gamma = FormulaSet(gamma)
    names = sorted(atoms_of(list(gamma) + [phi]))
    for n in range(1, max_worlds + 1):
        trees = rooted_trees(n)
        logger.debug('countermodel search: {} trees of {} worlds'.format(len(trees), n))
        for parents in trees:
            poset = tree_poset(parents)
            ups = poset.upset_masks()
            count = len(ups) ** len(names)
            if count > model_cap:
                logger.warning('skipping a frame of {} worlds: {} valuations exceed the cap {}'.format(
                    n, count, model_cap))
                continue
            choice = np.array(list(itertools.product(range(len(ups)), repeat=len(names))),
                              dtype=np.int64).reshape(count, len(names))
            batch = dict((a, ups[choice[:, j]]) for j, a in enumerate(names))
            shape = (count, n)
            hit = np.ones(count, dtype=bool)
            for g in gamma:
                hit &= _truth(g, batch.__getitem__, poset, n, shape)[:, 0]
            hit &= ~_truth(phi, batch.__getitem__, poset, n, shape)[:, 0]
            if hit.any():
                v = int(np.argmax(hit))
                model = KripkeModel(poset, dict((a, Upset._make(poset, batch[a][v])) for a in names))
                return model, poset.elements[0]
    return None


###############################################################################
# Random models

def random_model(atom_names, rng, max_worlds=5):
    """A random tree model: each atom holds on the upward closure of a random set."""
    n = int(rng.integers(1, max_worlds + 1))
    parents = tuple(int(rng.integers(0, i)) for i in range(1, n))
    poset = tree_poset(parents)
    val = {}
    for a in atom_names:
        seed = rng.random(n) < 0.4
        val[a] = Upset._make(poset, poset.up_image(seed))
    return KripkeModel(poset, val)


def random_formula(atom_names, rng, max_leaves=4, bot_rate=0.1):
    """A random formula over *atom_names* with 1 to *max_leaves* leaves."""
    names = sorted(set(a if isinstance(a, Atom) else Atom(a) for a in atom_names))
    if not names:
        raise ValueError('random formulas need at least one atom')

    def grow(leaves):
        if leaves == 1:
            if rng.random() < bot_rate:
                return BOT
            return names[int(rng.integers(len(names)))]
        k = int(rng.integers(1, leaves))
        op = (Conj, Disj, Impl)[int(rng.integers(3))]
        return op(grow(k), grow(leaves - k))

    return grow(int(rng.integers(1, max_leaves + 1)))


def soundness_crosscheck(gamma, phi, samples=1000, seed=0):
    """The first of *samples* random models where Gamma fails to force phi, or None."""
    rng = np.random.default_rng(seed)
    names = sorted(atoms_of(list(gamma) + [phi]))
    for _ in range(samples):
        model = random_model(names, rng)
        if not satisfies(model, gamma, phi):
            return model
    return None
