"""
Base-extension validity.

Clauses, for a base B inside a finite ExtensionSpace:

    (At)  |-_B p          p is derivable from no hypotheses in B
    (&)   both conjuncts
    (->)  every C >= B validating the antecedent validates the consequent
    (|)   Sandqvist: for every C >= B and atom s, if C validates phi -> s and
          psi -> s then s is derivable in C.  Kripke: one of the disjuncts.
    (bot) Sandqvist: every atom of the universe is derivable.  Kripke: never.

"Every C >= B" ranges over the bases of the space above B, so every verdict is
relative to the universe and the bounds, and reports say so.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional

from .bases import (DEFAULT_EXTENSION_CAP, Base, Bounds, ExtensionSpace,
                    base_from_json, rule_to_json, theorems)
from .errors import UniverseError
from .formulas import (Atom, Bot, Conj, Disj, FormulaSet, Impl, atoms_of,
                       parse_formula, render_formula)
from .provers import decide

logger = logging.getLogger(__name__)

INF_NOTE = ('(Inf) is read with the conclusion evaluated in the extension C: '
            'Theta |=_B phi iff every C >= B validating Theta validates phi')


class SemanticsMode(enum.Enum):
    SANDQVIST = 'sandqvist'
    KRIPKE = 'kripke'


class Engine(enum.Enum):
    BRUTE = 'brute'
    PROVER = 'prover'


@dataclass(frozen=True)
class ValidityConfig:
    """
    *universe*:
      atoms the extensions and the (|)/(bot) clauses range over
    *bounds*:
      the extension space: rules per base beyond the root and their shape
    *mode*: [SemanticsMode.SANDQVIST | SemanticsMode.KRIPKE]
    *engine*: [Engine.BRUTE | Engine.PROVER]
      the prover engine stands in for brute force only in Sandqvist mode
    """
    universe: tuple
    bounds: Bounds = Bounds()
    mode: SemanticsMode = SemanticsMode.SANDQVIST
    engine: Engine = Engine.BRUTE
    extension_cap: int = DEFAULT_EXTENSION_CAP

    def __post_init__(self):
        universe = self.universe
        if isinstance(universe, str):
            universe = [n.strip() for n in universe.split(',') if n.strip()]
        universe = tuple(sorted(set(a if isinstance(a, Atom) else Atom(a) for a in universe)))
        if not universe:
            raise ValueError('the universe must contain at least one atom')
        object.__setattr__(self, 'universe', universe)
        object.__setattr__(self, 'mode', SemanticsMode(self.mode))
        object.__setattr__(self, 'engine', Engine(self.engine))
        if self.engine is Engine.PROVER and self.mode is not SemanticsMode.SANDQVIST:
            raise ValueError('the prover engine is only available in sandqvist mode')

    def check_formulas(self, fs):
        universe = frozenset(self.universe)
        for a in sorted(atoms_of(fs)):
            if a not in universe:
                raise UniverseError(a, 'formula')


@dataclass
class ValidityReport:
    verdict: bool
    mode: SemanticsMode
    engine: Engine
    universe: tuple
    bounds: Bounds
    witness: Optional[dict] = None
    extensions_examined: int = 0
    notes: list = field(default_factory=list)

    def to_json(self):
        return {'verdict': self.verdict,
                'mode': self.mode.value,
                'engine': self.engine.value,
                'universe': [a.name for a in self.universe],
                'bounds': self.bounds.to_json(),
                'witness': self.witness,
                'extensions_examined': self.extensions_examined,
                'notes': list(self.notes)}


class Evaluator(object):
    """Memoized clause evaluation over the bases of one ExtensionSpace."""

    def __init__(self, space, mode=SemanticsMode.SANDQVIST):
        self.space = space
        self.mode = SemanticsMode(mode)
        self._memo = {}
        self._theorems = {}

    @property
    def visited(self):
        return len(self._theorems)

    def theorems(self, key):
        th = self._theorems.get(key)
        if th is None:
            th = theorems(self.space.base(key), self.space.universe)
            self._theorems[key] = th
        return th

    def holds(self, key, f):
        k = (key, f)
        v = self._memo.get(k)
        if v is None:
            v = self._eval(key, f)
            self._memo[k] = v
        return v

    def _eval(self, key, f):
        if isinstance(f, Atom):
            return f in self.theorems(key)
        if isinstance(f, Bot):
            if self.mode is SemanticsMode.KRIPKE:
                return False
            th = self.theorems(key)
            return all(a in th for a in self.space.universe)
        if isinstance(f, Conj):
            return self.holds(key, f.left) and self.holds(key, f.right)
        if isinstance(f, Impl):
            return self._implication_failure(key, f) is None
        if isinstance(f, Disj):
            if self.mode is SemanticsMode.KRIPKE:
                return self.holds(key, f.left) or self.holds(key, f.right)
            return self._disjunction_failure(key, f) is None
        raise TypeError('not a Formula: {!r}'.format(f))

    def _implication_failure(self, key, f):
        for c in self.space.above(key):
            if self.holds(c, f.left) and not self.holds(c, f.right):
                return c
        return None

    def _disjunction_failure(self, key, f):
        for c in self.space.above(key):
            th = self.theorems(c)
            for s in self.space.universe:
                if s in th:
                    continue
                if self.holds(c, Impl(f.left, s)) and self.holds(c, Impl(f.right, s)):
                    return c, s
        return None

    def entails(self, key, theta, phi):
        """The first C >= base(key) validating every formula of theta but not phi, or None."""
        for c in self.space.above(key):
            if all(self.holds(c, t) for t in theta) and not self.holds(c, phi):
                return c
        return None

    def refute(self, key, f):
        """The deepest failing clause below a failure of f at base(key): (key, formula, atom)."""
        if isinstance(f, Atom):
            return key, f, f
        if isinstance(f, Bot):
            if self.mode is SemanticsMode.KRIPKE:
                return key, f, None
            th = self.theorems(key)
            return key, f, next(a for a in self.space.universe if a not in th)
        if isinstance(f, Conj):
            side = f.left if not self.holds(key, f.left) else f.right
            return self.refute(key, side)
        if isinstance(f, Impl):
            return self.refute(self._implication_failure(key, f), f.right)
        if self.mode is SemanticsMode.KRIPKE:
            return key, f, None
        c, s = self._disjunction_failure(key, f)
        return c, f, s

    def witness(self, key, f):
        c, g, a = self.refute(key, f)
        return {'extension': [rule_to_json(r) for r in self.space.base(c)],
                'formula': render_formula(g),
                'atom': a.name if a is not None else None}


def _notes(cfg):
    return [INF_NOTE,
            'validity is relative to the universe {{{}}} and the bounds {}'.format(
                ', '.join(a.name for a in cfg.universe),
                ', '.join('{}={}'.format(k, v) for k, v in cfg.bounds.to_json().items()))]


def _space(base, cfg):
    return ExtensionSpace(base, cfg.universe, cfg.bounds, extension_cap=cfg.extension_cap)


def _report(cfg, verdict, witness, evaluator):
    return ValidityReport(verdict, cfg.mode, cfg.engine, cfg.universe, cfg.bounds, witness,
                          evaluator.visited if evaluator is not None else 0, _notes(cfg))


def _prover_report(cfg, gamma, phi):
    d = decide(gamma, phi)
    witness = None
    if not d.is_derivable:
        witness = {'countermodel': d.model.to_json() if d.model is not None else None,
                   'world': d.world}
    notes = ['verdict of the NJ decision procedure, standing in for validity over all bases']
    if not d.is_derivable and d.note:
        notes.append(d.note)
    return ValidityReport(d.is_derivable, cfg.mode, cfg.engine, cfg.universe, cfg.bounds, witness, 0, notes)


def _check_brute(base, cfg):
    if cfg.engine is Engine.PROVER and base.rules:
        raise ValueError('the prover engine decides validity over all bases; use the brute engine '
                         'for validity in a nonempty base')


def valid_in_base(base, phi, cfg):
    """|=_B phi."""
    cfg.check_formulas([phi])
    _check_brute(base, cfg)
    if cfg.engine is Engine.PROVER:
        return _prover_report(cfg, [], phi)
    ev = Evaluator(_space(base, cfg), cfg.mode)
    root = frozenset()
    verdict = ev.holds(root, phi)
    return _report(cfg, verdict, None if verdict else ev.witness(root, phi), ev)


def entails_in_base(base, theta, phi, cfg):
    """Theta |=_B phi; an empty Theta is valid_in_base."""
    theta = FormulaSet(theta)
    if not theta:
        return valid_in_base(base, phi, cfg)
    cfg.check_formulas(list(theta) + [phi])
    _check_brute(base, cfg)
    if cfg.engine is Engine.PROVER:
        return _prover_report(cfg, theta, phi)
    ev = Evaluator(_space(base, cfg), cfg.mode)
    c = ev.entails(frozenset(), theta, phi)
    return _report(cfg, c is None, None if c is None else ev.witness(c, phi), ev)


def valid(gamma, phi, cfg):
    """Gamma |= phi: every base validating Gamma validates phi."""
    gamma = FormulaSet(gamma)
    cfg.check_formulas(list(gamma) + [phi])
    if cfg.engine is Engine.PROVER:
        return _prover_report(cfg, gamma, phi)
    ev = Evaluator(_space(Base(), cfg), cfg.mode)
    for key in ev.space.keys():
        if all(ev.holds(key, g) for g in gamma) and not ev.holds(key, phi):
            return _report(cfg, False, ev.witness(key, phi), ev)
    return _report(cfg, True, None, ev)


def recheck_witness(witness, root, cfg):
    """
    True iff *witness* names a genuine failure: the formula fails at the extension
    and, when an atom is named, the atom is not derivable there.  For a Sandqvist
    disjunction the atom must also be a consequence of both disjuncts.
    """
    ev = Evaluator(_space(root, cfg), cfg.mode)
    base, _ = base_from_json({'universe': [a.name for a in cfg.universe], 'rules': witness['extension']})
    key = ev.space.key_of(base)
    f = parse_formula(witness['formula'])
    if ev.holds(key, f):
        return False
    if witness['atom'] is None:
        return isinstance(f, (Bot, Disj)) and ev.mode is SemanticsMode.KRIPKE
    s = Atom(witness['atom'])
    if s in ev.theorems(key):
        return False
    if isinstance(f, Disj) and ev.mode is SemanticsMode.SANDQVIST:
        return ev.holds(key, Impl(f.left, s)) and ev.holds(key, Impl(f.right, s))
    return isinstance(f, (Atom, Bot)) and (not isinstance(f, Atom) or f == s)
