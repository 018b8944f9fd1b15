"""
Flattening a subformula-closed set Delta into atoms, the base N that mirrors NJ
on the flattened atoms, and the completeness pipeline comparing derivability in
N with the NJ decision procedure.

E.g.
  >>> fm = flatten(subformulas([parse_formula('p & q')]))
  >>> fm.flat(parse_formula('p & q'))
  Atom(name='f1')
  >>> print(build_N(fm))
  {(=> f1) => p; (=> f1) => q; (=> p), (=> q) => f1}
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from dataclasses import dataclass, field

from .bases import AtomicRule, Base, Premise, derives
from .errors import UniverseError
from .formulas import (Atom, Bot, Conj, Disj, FormulaSet, Impl, atoms_of,
                       render_formula, render_sequent, subformulas)
from .provers import decide

logger = logging.getLogger(__name__)


class FlatMap(object):
    """
    flat: Delta -> atoms, identity on atoms and injective elsewhere; nat inverts it.
    """

    def __init__(self, domain, flat):
        self.domain = FormulaSet(domain)
        self._flat = dict(flat)
        self._nat = dict((a, f) for f, a in self._flat.items())
        self.fresh = tuple(sorted(a for f, a in self._flat.items() if not isinstance(f, Atom)))

    def flat(self, f):
        try:
            return self._flat[f]
        except KeyError:
            raise ValueError('{} is not in the flattened set'.format(render_formula(f)))

    def nat(self, a):
        return self._nat.get(a, a)

    def atoms(self):
        """The atoms of flattened Delta: Delta's atoms and the fresh ones."""
        return tuple(sorted(set(self._flat.values())))

    def items(self):
        return [(f, self._flat[f]) for f in self.domain]

    def check_base(self, base):
        """Reject a user base mentioning a reserved fresh atom."""
        reserved = frozenset(self.fresh)
        for r in base:
            for a in sorted(r.atoms()):
                if a in reserved:
                    raise UniverseError(a, 'rule {} uses an atom reserved by flattening'.format(r))

    def to_json(self):
        return dict((render_formula(f), a.name) for f, a in self.items())


def flatten(delta, avoid=()):
    """
    FlatMap for the subformula-closed *delta*.  Fresh atoms f1, f2, ... go to the
    non-atomic members in canonical order, skipping Delta's atoms and *avoid*.
    """
    delta = FormulaSet(delta)
    members = set(delta)
    missing = [f for f in subformulas(delta) if f not in members]
    if missing:
        raise ValueError('not closed under subformulas: missing {}'.format(render_formula(missing[0])))
    taken = set(a.name for a in atoms_of(delta))
    taken.update(a.name if isinstance(a, Atom) else str(a) for a in avoid)
    flat = {}
    k = 0
    for f in delta:
        if isinstance(f, Atom):
            flat[f] = f
            continue
        k += 1
        while 'f{}'.format(k) in taken:
            k += 1
        flat[f] = Atom('f{}'.format(k))
    return FlatMap(delta, flat)


def _rule(concl, *premises):
    return AtomicRule(tuple(Premise(frozenset(h), c) for h, c in premises), concl)


def build_N(fm):
    """The rules of N for every non-atomic member of the flattened set."""
    atoms = fm.atoms()
    rules = []
    for d in fm.domain:
        if isinstance(d, Atom):
            continue
        df = fm.flat(d)
        if isinstance(d, Bot):
            rules.extend(_rule(s, ([], df)) for s in atoms)
            continue
        a, b = fm.flat(d.left), fm.flat(d.right)
        if isinstance(d, Impl):
            rules.append(_rule(df, ([a], b)))
            rules.append(_rule(b, ([], df), ([], a)))
        elif isinstance(d, Conj):
            rules.append(_rule(df, ([], a), ([], b)))
            rules.append(_rule(a, ([], df)))
            rules.append(_rule(b, ([], df)))
        elif isinstance(d, Disj):
            rules.append(_rule(df, ([], a)))
            rules.append(_rule(df, ([], b)))
            rules.extend(_rule(s, ([], df), ([a], s), ([b], s)) for s in atoms)
    return Base(rules, name='N')


@dataclass
class CompletenessReport:
    sequent: str
    flattened: dict
    n_rules: int
    n_derivable: bool
    n_term: object = None
    decision: object = None
    notes: list = field(default_factory=list)

    @property
    def nj_derivable(self):
        return self.decision.is_derivable

    @property
    def agree(self):
        return self.n_derivable == self.nj_derivable

    def to_json(self):
        return {'sequent': self.sequent,
                'flattening': self.flattened,
                'n_rules': self.n_rules,
                'n_derivable': self.n_derivable,
                'n_term': str(self.n_term) if self.n_term is not None else None,
                'nj_derivable': self.nj_derivable,
                'agree': self.agree,
                'decision': self.decision.to_json(),
                'notes': list(self.notes)}


def completeness_check(gamma, phi):
    """
    Derivability of flat(Gamma) |- flat(phi) in N next to decide(Gamma, phi).
    """
    gamma = FormulaSet(gamma)
    fm = flatten(subformulas(list(gamma) + [phi]))
    n = build_N(fm)
    hyps = frozenset(fm.flat(g) for g in gamma)
    term = derives(n, hyps, fm.flat(phi), fm.atoms())
    decision = decide(gamma, phi)
    report = CompletenessReport(render_sequent(gamma, phi), fm.to_json(), len(n), term is not None,
                                term, decision)
    if not report.agree:
        logger.warning('{}: N says {}, NJ says {}'.format(report.sequent, report.n_derivable, report.nj_derivable))
        report.notes.append('verdicts disagree')
    return report
