r"""
Validity-based semantics on finite posets.

Upsets of a finite poset form a Heyting algebra.  An interpretation of the atoms
as upsets determines the nucleus

    K(U) = meet over atoms p of ((U -> v[p]) -> v[p])

whose closed upsets form the sublocale Omega_K.  On the poset of bases ordered by
inclusion, the join of Omega_K is the second-order disjunction.

E.g.
  >>> poset = Poset(['w0', 'w1'], [('w0', 'w1')])
  >>> vp = Upset(poset, ['w1'])
  >>> ha = HeytingAlgebra(poset)
  >>> sorted(ha.implies(ha.implies(vp, ha.bottom), ha.bottom).members)
  ['w0', 'w1']
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .bases import DEFAULT_EXTENSION_CAP, Base, Bounds, ExtensionSpace, theorems
from .errors import CapExceeded, SchemaError, UniverseError
from .formulas import Atom, Bot, Conj, Disj, Impl

logger = logging.getLogger(__name__)

# Omega_K is found by filtering all 2**n subsets
MAX_POSET_SIZE = 16
DEFAULT_BASE_POSET_CAP = 4096


class Poset(object):
    """
    A finite partial order.

    *elements*:
      distinct names
    *leq_pairs*:
      pairs (a, b) meaning a <= b; the reflexive-transitive closure is taken
    """

    def __init__(self, elements, leq_pairs=()):
        elements = tuple(str(e) for e in elements)
        n = len(elements)
        if n == 0:
            raise ValueError('a poset needs at least one element')
        if len(set(elements)) != n:
            raise ValueError('duplicate poset elements: {}'.format(elements))
        index = dict((e, i) for i, e in enumerate(elements))
        adj = np.zeros((n, n))
        for a, b in leq_pairs:
            for e in (a, b):
                if str(e) not in index:
                    raise ValueError('unknown poset element {!r}'.format(e))
            adj[index[str(a)], index[str(b)]] = 1
        dist = shortest_path(csr_matrix(adj), directed=True, unweighted=True)
        self._init(elements, np.isfinite(dist))

    def _init(self, elements, leq):
        self.elements = elements
        self._index = dict((e, i) for i, e in enumerate(elements))
        cycle = np.argwhere(leq & leq.T & ~np.eye(len(elements), dtype=bool))
        if len(cycle):
            i, j = cycle[0]
            raise ValueError('order is not antisymmetric: {} <= {} <= {}'.format(
                elements[i], elements[j], elements[i]))
        leq = np.array(leq, dtype=bool)
        leq.setflags(write=False)
        self.leq = leq
        self._leq_int = leq.astype(np.int64)

    @classmethod
    def from_matrix(cls, elements, leq, check=True):
        """
        Poset from a boolean matrix with leq[i, j] meaning elements[i] <= elements[j].

        *check*: [True | False]
          verify reflexivity and transitivity (antisymmetry is always checked)
        """
        leq = np.asarray(leq, dtype=bool)
        elements = tuple(str(e) for e in elements)
        if leq.shape != (len(elements), len(elements)) or not elements:
            raise ValueError('leq must be a square matrix over the elements')
        if check:
            if not leq.diagonal().all():
                raise ValueError('order is not reflexive')
            li = leq.astype(np.int64)
            if ((li @ li > 0) & ~leq).any():
                raise ValueError('order is not transitive')
        poset = cls.__new__(cls)
        poset._init(elements, leq)
        return poset

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.elements == other.elements
                and np.array_equal(self.leq, other.leq))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.elements, self.leq.tobytes()))

    def __repr__(self):
        return '<{} of {} elements>'.format(type(self).__name__, len(self))

    def index(self, e):
        try:
            return self._index[str(e)]
        except KeyError:
            raise ValueError('unknown poset element {!r}'.format(e))

    def le(self, a, b):
        return bool(self.leq[self.index(a), self.index(b)])

    def mask(self, members):
        m = np.zeros(len(self), dtype=bool)
        for e in members:
            m[self.index(e)] = True
        return m

    def names(self, mask):
        return frozenset(e for e, keep in zip(self.elements, mask) if keep)

    def up_image(self, masks):
        """Elements above some member, for a mask or a (k, n) stack of masks."""
        return (np.asarray(masks).astype(np.int64) @ self._leq_int) > 0

    def upset_violation(self, mask):
        """A pair (a, b) with a <= b, a in mask and b not in mask, or None."""
        bad = np.argwhere(self.leq & mask[:, None] & ~mask[None, :])
        if len(bad):
            i, j = bad[0]
            return self.elements[i], self.elements[j]
        return None

    def implies_mask(self, a, b):
        """{w | every w' >= w in a is in b}, on boolean masks (stacks allowed)."""
        bad = np.asarray(a & ~b).astype(np.int64)
        return (bad @ self._leq_int.T) == 0

    def upset_masks(self, cap=MAX_POSET_SIZE):
        """All upsets as a (k, n) boolean array."""
        n = len(self)
        if n > cap:
            raise CapExceeded('enumerating the upsets of a poset with {} elements'.format(n), cap)
        masks = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).astype(bool)
        closed = ~(self.up_image(masks) & ~masks).any(axis=1)
        return masks[closed]

    def strict_pairs(self):
        return [(self.elements[i], self.elements[j])
                for i, j in np.argwhere(self.leq & ~np.eye(len(self), dtype=bool))]


class Upset(object):
    """An upward-closed subset of a poset."""
    __slots__ = ('poset', 'mask')

    def __init__(self, poset, members):
        if isinstance(members, np.ndarray):
            mask = np.array(members, dtype=bool)
        else:
            mask = poset.mask(members)
        pair = poset.upset_violation(mask)
        if pair is not None:
            raise ValueError('not upward closed: {} <= {} but only {} is a member'.format(
                pair[0], pair[1], pair[0]))
        self._set(poset, mask)

    def _set(self, poset, mask):
        mask.setflags(write=False)
        self.poset = poset
        self.mask = mask

    @classmethod
    def _make(cls, poset, mask):
        u = cls.__new__(cls)
        u._set(poset, np.array(mask, dtype=bool))
        return u

    @property
    def members(self):
        return self.poset.names(self.mask)

    def __contains__(self, e):
        return bool(self.mask[self.poset.index(e)])

    def __iter__(self):
        return (e for e, keep in zip(self.poset.elements, self.mask) if keep)

    def __len__(self):
        return int(self.mask.sum())

    def __eq__(self, other):
        return (isinstance(other, Upset) and self.poset == other.poset
                and np.array_equal(self.mask, other.mask))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.mask.tobytes())

    def __le__(self, other):
        return bool((self.mask <= other.mask).all())

    def __repr__(self):
        return 'Upset({{{}}})'.format(', '.join(self))


class HeytingAlgebra(object):
    """The complete Heyting algebra of upsets of *poset*."""

    def __init__(self, poset):
        self.poset = poset
        n = len(poset)
        self.top = Upset._make(poset, np.ones(n, dtype=bool))
        self.bottom = Upset._make(poset, np.zeros(n, dtype=bool))

    def _check(self, *us):
        for u in us:
            if u.poset is not self.poset and u.poset != self.poset:
                raise ValueError('upsets of different posets cannot be combined')

    def meet(self, u, v):
        self._check(u, v)
        return Upset._make(self.poset, u.mask & v.mask)

    def join(self, u, v):
        self._check(u, v)
        return Upset._make(self.poset, u.mask | v.mask)

    def implies(self, u, v):
        self._check(u, v)
        return Upset._make(self.poset, self.poset.implies_mask(u.mask, v.mask))

    def upsets(self, cap=MAX_POSET_SIZE):
        return [Upset._make(self.poset, m) for m in self.poset.upset_masks(cap)]


def heyting_ops(poset):
    return HeytingAlgebra(poset)


class AtomInterp(object):
    """Atoms interpreted as upsets of one poset."""

    def __init__(self, mapping):
        items = sorted(((a if isinstance(a, Atom) else Atom(a)), u) for a, u in dict(mapping).items())
        posets = set(u.poset for _, u in items)
        if len(posets) > 1:
            raise ValueError('atom interpretations over different posets')
        self._map = dict(items)
        self.atoms = tuple(a for a, _ in items)
        self.poset = items[0][1].poset if items else None

    def __getitem__(self, a):
        a = a if isinstance(a, Atom) else Atom(a)
        try:
            return self._map[a]
        except KeyError:
            raise UniverseError(a, 'atom interpretation')

    def __contains__(self, a):
        return (a if isinstance(a, Atom) else Atom(a)) in self._map

    def __len__(self):
        return len(self._map)

    def items(self):
        return [(a, self._map[a]) for a in self.atoms]


class Nucleus(object):
    """K(U) = meet over atoms p of ((U -> v[p]) -> v[p])."""

    def __init__(self, interp):
        if not len(interp):
            raise ValueError('a nucleus needs at least one atom; over none K is constantly top')
        self.interp = interp
        self.algebra = HeytingAlgebra(interp.poset)

    def __call__(self, u):
        ha = self.algebra
        k = ha.top
        for _, vp in self.interp.items():
            k = ha.meet(k, ha.implies(ha.implies(u, vp), vp))
        return k

    def is_closed(self, u):
        return self(u) == u

    def join(self, u, v):
        """The join of Omega_K: meet over p of ((U -> vp) -> ((V -> vp) -> vp))."""
        ha = self.algebra
        k = ha.top
        for _, vp in self.interp.items():
            k = ha.meet(k, ha.implies(ha.implies(u, vp), ha.implies(ha.implies(v, vp), vp)))
        return k


def nucleus_K(u, interp):
    return Nucleus(interp)(u)


class OmegaK(object):
    """The closed upsets of a nucleus, with their Heyting structure."""

    def __init__(self, nucleus, cap=MAX_POSET_SIZE):
        self.nucleus = nucleus
        self.algebra = nucleus.algebra
        self.closed = [u for u in self.algebra.upsets(cap) if nucleus.is_closed(u)]
        self.top = self.algebra.top
        self.bottom = nucleus(self.algebra.bottom)
        logger.debug('Omega_K: {} closed upsets'.format(len(self.closed)))

    def __iter__(self):
        return iter(self.closed)

    def __len__(self):
        return len(self.closed)

    def __contains__(self, u):
        return self.nucleus.is_closed(u)

    def meet(self, u, v):
        return self.algebra.meet(u, v)

    def implies(self, u, v):
        return self.algebra.implies(u, v)

    def join(self, u, v):
        return self.nucleus.join(u, v)

    def least_closed_above(self, u):
        """Brute force: the meet of every closed upset containing *u*."""
        found = self.top
        for c in self.closed:
            if u <= c:
                found = self.algebra.meet(found, c)
        return found


def omega_K(interp, cap=MAX_POSET_SIZE):
    return OmegaK(Nucleus(interp), cap=cap)


def vsem(f, interp, nucleus=None):
    """
    The upset of worlds validating *f*: meets for &, Heyting implication for ->,
    the join of Omega_K for |, and K(empty) for bot.
    """
    if nucleus is None:
        nucleus = Nucleus(interp)
    ha = nucleus.algebra
    if isinstance(f, Atom):
        return interp[f]
    if isinstance(f, Bot):
        return nucleus(ha.bottom)
    left = vsem(f.left, interp, nucleus)
    right = vsem(f.right, interp, nucleus)
    if isinstance(f, Conj):
        return ha.meet(left, right)
    if isinstance(f, Impl):
        return ha.implies(left, right)
    if isinstance(f, Disj):
        return nucleus.join(left, right)
    raise TypeError('not a Formula: {!r}'.format(f))


###############################################################################
# The poset of bases

class BasePoset(Poset):
    """Bases ordered by inclusion; element 'b<i>' names bases[i]."""

    @property
    def bases(self):
        return self._bases

    def base_of(self, e):
        return self._bases[self.index(e)]


def bes_poset(universe, bounds=Bounds(), cap=DEFAULT_BASE_POSET_CAP):
    """
    (BasePoset, AtomInterp): every base within *bounds* over *universe*, ordered
    by inclusion, with p interpreted as the bases deriving p.
    """
    space = ExtensionSpace(Base(), universe, bounds, extension_cap=min(cap, DEFAULT_EXTENSION_CAP))
    keys = list(space.keys())
    rules = np.zeros((len(keys), len(space.candidates)), dtype=bool)
    for i, key in enumerate(keys):
        rules[i, sorted(key)] = True
    ri = rules.astype(np.int64)
    leq = (ri @ (~rules).astype(np.int64).T) == 0
    poset = BasePoset.from_matrix(['b{}'.format(i) for i in range(len(keys))], leq, check=False)
    poset._bases = tuple(space.base(k) for k in keys)
    poset.space = space
    derived = [theorems(b, space.universe) for b in poset._bases]
    interp = AtomInterp(dict(
        (a, Upset._make(poset, np.array([a in th for th in derived], dtype=bool)))
        for a in space.universe))
    logger.debug('base poset over {}: {} bases'.format([a.name for a in space.universe], len(keys)))
    return poset, interp


###############################################################################
# JSON

def poset_to_json(poset, interp=None):
    d = {'elements': list(poset.elements),
         'leq': [list(p) for p in poset.strict_pairs()]}
    if interp is not None:
        d['atoms'] = dict((a.name, list(u)) for a, u in interp.items())
    return d


def poset_from_json(obj, path=''):
    """(Poset, AtomInterp) from the poset file format; leq is closed on load."""
    if not isinstance(obj, dict):
        raise SchemaError(path, 'expected an object')
    elements = obj.get('elements')
    if not isinstance(elements, list) or not elements or not all(isinstance(e, str) for e in elements):
        raise SchemaError(path + '/elements', 'expected a nonempty list of names')
    pairs = obj.get('leq', [])
    if not isinstance(pairs, list):
        raise SchemaError(path + '/leq', 'expected a list of pairs')
    for i, p in enumerate(pairs):
        if not (isinstance(p, list) and len(p) == 2 and all(e in elements for e in p)):
            raise SchemaError('{}/leq/{}'.format(path, i), 'expected a pair of known elements')
    try:
        poset = Poset(elements, [tuple(p) for p in pairs])
    except ValueError as e:
        raise SchemaError(path + '/leq', str(e))
    atoms = obj.get('atoms', {})
    if not isinstance(atoms, dict):
        raise SchemaError(path + '/atoms', 'expected an object')
    mapping = {}
    for name in sorted(atoms):
        ap = '{}/atoms/{}'.format(path, name)
        members = atoms[name]
        if not isinstance(members, list) or not all(e in elements for e in members):
            raise SchemaError(ap, 'expected a list of known elements')
        try:
            a = Atom(name)
        except ValueError as e:
            raise SchemaError(ap, str(e))
        mask = poset.mask(members)
        pair = poset.upset_violation(mask)
        if pair is not None:
            raise SchemaError(ap, 'not upward closed: {} <= {} and {} holds at {} but not at {}'.format(
                pair[0], pair[1], name, pair[0], pair[1]))
        mapping[a] = Upset._make(poset, mask)
    return poset, AtomInterp(mapping)
