"""
Deciding IPL derivability.

The proof search is the contraction-free sequent calculus G4ip: every rule
application makes the sequent smaller in a well-founded order, so the search
terminates without loop checking.  The context maps each formula to an NJ term
proving it from the hypotheses, so a successful search yields the NJ term
directly.  When the search fails, a Kripke countermodel is looked for to
corroborate the verdict.

E.g.
  >>> d = decide([], parse_formula('((p -> q) -> p) -> p'))
  >>> d.is_derivable, len(d.model.worlds)
  (False, 2)
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import itertools
import logging

from .formulas import (BOT, Atom, Bot, Conj, Disj, FormulaSet, Impl,
                       render_formula, render_sequent)
from .models import MAX_COUNTERMODEL_WORLDS, find_countermodel
from .proofs import (Abort, App, Case, Fst, Inl, Inr, Lam, Pair, Snd, Var,
                     check_nj, term_to_json)

logger = logging.getLogger(__name__)


class Decision(object):
    """The verdict on Gamma |- phi together with its certificate."""
    is_derivable = None

    def __init__(self, gamma, phi):
        self.gamma = FormulaSet(gamma)
        self.phi = phi

    @property
    def sequent(self):
        return render_sequent(self.gamma, self.phi)

    def __bool__(self):
        return bool(self.is_derivable)

    __nonzero__ = __bool__


class Derivable(Decision):
    """*term* proves phi from the hypotheses named in *context*."""
    is_derivable = True

    def __init__(self, gamma, phi, term, context):
        Decision.__init__(self, gamma, phi)
        self.term = term
        self.context = tuple(context)

    def check(self):
        return check_nj(self.context, self.term, self.phi)

    def to_json(self):
        return {'sequent': self.sequent,
                'verdict': 'derivable',
                'context': [[x, render_formula(g)] for x, g in self.context],
                'term': term_to_json(self.term)}


class Underivable(Decision):
    """
    *model* forces Gamma but not phi at *world*.  When the countermodel search
    exhausts its bound, model and world are None and *certified* is False.
    """
    is_derivable = False

    def __init__(self, gamma, phi, model=None, world=None, note=None):
        Decision.__init__(self, gamma, phi)
        self.model = model
        self.world = world
        self.note = note

    @property
    def certified(self):
        return self.model is not None

    def check(self):
        if self.model is None:
            return False
        m = self.model
        return (all(m.forces(self.world, g) for g in self.gamma)
                and not m.forces(self.world, self.phi))

    def to_json(self):
        d = {'sequent': self.sequent,
             'verdict': 'underivable',
             'certified': self.certified,
             'countermodel': self.model.to_json() if self.model is not None else None,
             'world': self.world}
        if self.note:
            d['note'] = self.note
        return d


def _sort_key(f):
    return render_formula(f)


class Prover(object):
    """G4ip proof search building NJ terms.  Binder names are v1, v2, ..."""

    def __init__(self):
        self._fresh = itertools.count(1)
        self._failed = set()
        self.steps = 0

    def fresh(self):
        return 'v{}'.format(next(self._fresh))

    def prove(self, ctx, goal):
        """An NJ term for *goal* from the dict *ctx* (formula -> term), or None."""
        key = (frozenset(ctx), goal)
        if key in self._failed:
            return None
        self.steps += 1
        t = self._prove(ctx, goal)
        if t is None:
            self._failed.add(key)
        return t

    def _prove(self, ctx, goal):
        if goal in ctx:
            return ctx[goal]
        if BOT in ctx:
            return Abort(ctx[BOT], goal)

        for f in sorted(ctx, key=_sort_key):
            t = ctx[f]
            if isinstance(f, Conj):
                return self.prove(_replace(ctx, f, [(f.left, Fst(t)), (f.right, Snd(t))]), goal)
            if isinstance(f, Disj):
                a, b = self.fresh(), self.fresh()
                left = self.prove(_replace(ctx, f, [(f.left, Var(a))]), goal)
                if left is None:
                    return None
                right = self.prove(_replace(ctx, f, [(f.right, Var(b))]), goal)
                if right is None:
                    return None
                return Case(t, a, left, b, right)
            if isinstance(f, Impl):
                ante = f.left
                if isinstance(ante, Atom) and ante in ctx:
                    return self.prove(_replace(ctx, f, [(f.right, App(t, ctx[ante]))]), goal)
                if isinstance(ante, Bot):
                    return self.prove(_replace(ctx, f, []), goal)
                if isinstance(ante, Conj):
                    c, d = self.fresh(), self.fresh()
                    curried = Lam(c, ante.left, Lam(d, ante.right, App(t, Pair(Var(c), Var(d)))))
                    return self.prove(_replace(ctx, f, [(Impl(ante.left, Impl(ante.right, f.right)), curried)]),
                                      goal)
                if isinstance(ante, Disj):
                    c, d = self.fresh(), self.fresh()
                    return self.prove(_replace(ctx, f, [
                        (Impl(ante.left, f.right), Lam(c, ante.left, App(t, Inl(Var(c), ante.right)))),
                        (Impl(ante.right, f.right), Lam(d, ante.right, App(t, Inr(Var(d), ante.left))))]), goal)

        if isinstance(goal, Conj):
            a = self.prove(ctx, goal.left)
            if a is None:
                return None
            b = self.prove(ctx, goal.right)
            return Pair(a, b) if b is not None else None
        if isinstance(goal, Impl):
            x = self.fresh()
            body = self.prove(_replace(ctx, None, [(goal.left, Var(x))]), goal.right)
            return Lam(x, goal.left, body) if body is not None else None

        if isinstance(goal, Disj):
            a = self.prove(ctx, goal.left)
            if a is not None:
                return Inl(a, goal.right)
            b = self.prove(ctx, goal.right)
            if b is not None:
                return Inr(b, goal.left)

        for f in sorted(ctx, key=_sort_key):
            if not (isinstance(f, Impl) and isinstance(f.left, Impl)):
                continue
            t = ctx[f]
            c_, d_, b_ = f.left.left, f.left.right, f.right
            d, c = self.fresh(), self.fresh()
            # (C -> D) -> B gives D -> B
            db = Lam(d, d_, App(t, Lam(c, c_, Var(d))))
            u = self.prove(_replace(ctx, f, [(Impl(d_, b_), db)]), f.left)
            if u is None:
                continue
            v = self.prove(_replace(ctx, f, [(b_, App(t, u))]), goal)
            if v is not None:
                return v
        return None


def _replace(ctx, old, new):
    out = dict(ctx)
    if old is not None:
        del out[old]
    for f, t in new:
        out.setdefault(f, t)
    return out


def decide(gamma, phi, max_worlds=MAX_COUNTERMODEL_WORLDS):
    """
    Derivable with an NJ term over hypotheses h1, h2, ... (Gamma in canonical
    order), or Underivable with a Kripke countermodel of at most *max_worlds* worlds.
    """
    gamma = FormulaSet(gamma)
    context = [('h{}'.format(i), g) for i, g in enumerate(gamma, 1)]
    prover = Prover()
    term = prover.prove(dict((g, Var(x)) for x, g in context), phi)
    logger.debug('{}: {} search steps'.format(render_sequent(gamma, phi), prover.steps))
    if term is not None:
        return Derivable(gamma, phi, term, context)
    found = find_countermodel(gamma, phi, max_worlds=max_worlds)
    if found is None:
        note = 'no countermodel within {} worlds'.format(max_worlds)
        logger.warning('{}: {}'.format(render_sequent(gamma, phi), note))
        return Underivable(gamma, phi, note=note)
    model, world = found
    return Underivable(gamma, phi, model=model, world=world)
