"""
Finitary consequence relations over a finite set of formulas.

A relation holds between antecedents (subsets of the formula universe) and
formulas.  The relation generated from a validity is

    Gamma |~ psi   iff   psi is valid whenever every member of Gamma is valid

and it is the largest consequence relation with that validity.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import itertools

from .formulas import FormulaSet, render_formula


def consequence_from_validity(validity, gamma, phi):
    """
    *validity*:
      oracle (Gamma, phi) -> bool; only called with an empty Gamma
    """
    if all(validity(FormulaSet(), g) for g in gamma):
        return validity(FormulaSet(), phi)
    return True


class ConsequenceRelation(object):
    """
    *formulas*:
      the finite universe of formulas
    *judgments*:
      pairs (antecedent, formula) with the antecedent a subset of the universe
    """

    def __init__(self, formulas, judgments):
        self.formulas = FormulaSet(formulas)
        members = frozenset(self.formulas)
        found = set()
        for gamma, phi in judgments:
            gamma = frozenset(gamma)
            if not gamma <= members or phi not in members:
                raise ValueError('judgment outside the formula universe: {} |~ {}'.format(
                    ', '.join(render_formula(g) for g in gamma), render_formula(phi)))
            found.add((gamma, phi))
        self.judgments = frozenset(found)

    @classmethod
    def from_predicate(cls, formulas, holds):
        formulas = FormulaSet(formulas)
        return cls(formulas, [(g, phi) for g in _antecedents(formulas) for phi in formulas if holds(g, phi)])

    def holds(self, gamma, phi):
        return (frozenset(gamma), phi) in self.judgments

    def __len__(self):
        return len(self.judgments)

    def reflexive(self):
        """phi |~ phi for every formula."""
        return all(self.holds([f], f) for f in self.formulas)

    def monotone(self):
        """Gamma |~ phi implies Gamma, psi |~ phi."""
        return all(self.holds(gamma | {psi}, phi)
                   for gamma, phi in self.judgments for psi in self.formulas)

    def transitive(self):
        """Cut: Gamma |~ phi and Delta, phi |~ psi imply Gamma, Delta |~ psi."""
        by_formula = {}
        for delta, psi in self.judgments:
            by_formula.setdefault(psi, []).append(delta)
        for delta_phi, psi in self.judgments:
            for phi in delta_phi:
                delta = delta_phi - {phi}
                for gamma in by_formula.get(phi, ()):
                    if not self.holds(gamma | delta, psi):
                        return False
        return True

    def is_consequence_relation(self):
        return self.reflexive() and self.monotone() and self.transitive()

    def contained_in(self, other):
        return self.judgments <= other.judgments

    def validity(self):
        """The formulas following from no premises."""
        return FormulaSet(phi for gamma, phi in self.judgments if not gamma)


def _antecedents(formulas):
    return [frozenset(c) for k in range(len(formulas) + 1)
            for c in itertools.combinations(formulas, k)]


def relation_from_validity(formulas, validity):
    """The consequence relation generated from *validity*, restricted to *formulas*."""
    return ConsequenceRelation.from_predicate(
        formulas, lambda gamma, phi: consequence_from_validity(validity, gamma, phi))


def generated_relation(formulas, rules, theorems=()):
    """
    The least consequence relation over *formulas* containing each rule
    (antecedent, formula) and each theorem: Gamma |~ phi iff phi is in the closure
    of Gamma under the rules.
    """
    formulas = FormulaSet(formulas)
    rules = [(frozenset(g), phi) for g, phi in rules] + [(frozenset(), t) for t in theorems]
    judgments = []
    for gamma in _antecedents(formulas):
        closed = set(gamma)
        changed = True
        while changed:
            changed = False
            for prem, phi in rules:
                if phi not in closed and prem <= closed:
                    closed.add(phi)
                    changed = True
        judgments.extend((gamma, phi) for phi in closed)
    return ConsequenceRelation(formulas, judgments)


def validity_recovery(relation, validity):
    """True iff |~ psi from no premises coincides with *validity* on the universe."""
    return all(relation.holds([], psi) == bool(validity(FormulaSet(), psi)) for psi in relation.formulas)
