# -*- coding: utf-8 -*-
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

from hypothesis import given, settings, strategies as st

from .context import bescat
from bescat.consequence import (ConsequenceRelation, consequence_from_validity,
                                generated_relation, relation_from_validity,
                                validity_recovery)
from bescat.formulas import FormulaSet, parse_formula
from bescat.provers import decide

UNIVERSE = FormulaSet(parse_formula(t) for t in ('p', 'q', 'p & q', 'p | q', 'p -> p', 'bot'))

_decided = {}


def nj_validity(gamma, phi):
    key = (FormulaSet(gamma), phi)
    if key not in _decided:
        _decided[key] = decide(gamma, phi).is_derivable
    return _decided[key]


class GeneratedRelationTestSuite(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.relation = relation_from_validity(UNIVERSE, nj_validity)

    def test_axioms(self):
        self.assertTrue(self.relation.reflexive())
        self.assertTrue(self.relation.monotone())
        self.assertTrue(self.relation.transitive())

    def test_recovers_validity(self):
        self.assertTrue(validity_recovery(self.relation, nj_validity))
        self.assertEqual(self.relation.validity(), FormulaSet([parse_formula('p -> p')]))

    def test_nj_consequence_is_contained(self):
        nj = ConsequenceRelation.from_predicate(UNIVERSE, nj_validity)
        self.assertTrue(nj.is_consequence_relation())
        self.assertTrue(nj.contained_in(self.relation))
        self.assertFalse(self.relation.contained_in(nj))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.tuples(st.sets(st.sampled_from(UNIVERSE), min_size=1, max_size=2),
                              st.sampled_from(UNIVERSE)), max_size=4))
    def test_compatible_relations_are_contained(self, rules):
        smaller = generated_relation(UNIVERSE, rules, theorems=[parse_formula('p -> p')])
        self.assertTrue(smaller.is_consequence_relation())
        if smaller.validity() == self.relation.validity():
            self.assertTrue(smaller.contained_in(self.relation))


class RelationTestSuite(unittest.TestCase):

    def test_from_validity(self):
        p, q = parse_formula('p'), parse_formula('q')
        self.assertTrue(consequence_from_validity(nj_validity, [p], q))
        self.assertFalse(consequence_from_validity(nj_validity, [parse_formula('p -> p')], q))

    def test_missing_reflexivity(self):
        p = parse_formula('p')
        self.assertFalse(ConsequenceRelation([p], []).reflexive())

    def test_cut(self):
        p, q, r = parse_formula('p'), parse_formula('q'), parse_formula('r')
        rel = ConsequenceRelation([p, q, r], [({p}, q), ({q}, r)])
        self.assertFalse(rel.transitive())
        closed = generated_relation([p, q, r], [({p}, q), ({q}, r)])
        self.assertTrue(closed.holds([p], r))
        self.assertTrue(closed.is_consequence_relation())

    def test_judgments_stay_in_the_universe(self):
        with self.assertRaises(ValueError):
            ConsequenceRelation([parse_formula('p')], [([], parse_formula('q'))])


if __name__ == '__main__':
    unittest.main()
