# -*- coding: utf-8 -*-
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

import numpy as np

from .context import bescat
from bescat.formulas import atoms, parse_formula, parse_sequent
from bescat.locales import Poset
from bescat.models import (KripkeModel, find_countermodel, kripke_eval,
                           random_model, rooted_trees, satisfies,
                           soundness_crosscheck, tree_poset)

p, q = atoms('p,q')


def two_worlds():
    return KripkeModel(Poset(['w0', 'w1'], [('w0', 'w1')]), {'p': ['w1']})


class KripkeTestSuite(unittest.TestCase):

    def test_excluded_middle_fails_at_the_root(self):
        m = two_worlds()
        self.assertFalse(kripke_eval(m, 'w0', parse_formula('p | (p -> bot)')))
        self.assertTrue(kripke_eval(m, 'w1', parse_formula('p | (p -> bot)')))
        self.assertTrue(kripke_eval(m, 'w0', parse_formula('(p -> bot) -> bot')))

    def test_satisfies(self):
        m = two_worlds()
        gamma, phi = parse_sequent('(p -> bot) -> bot |- p')
        self.assertFalse(satisfies(m, gamma, phi, world='w0'))
        self.assertTrue(satisfies(m, gamma, phi, world='w1'))
        self.assertFalse(satisfies(m, gamma, phi))

    def test_valuation_must_be_monotone(self):
        with self.assertRaises(ValueError):
            KripkeModel(Poset(['w0', 'w1'], [('w0', 'w1')]), {'p': ['w0']})

    def test_json(self):
        m = two_worlds()
        again = KripkeModel.from_json(m.to_json())
        f = parse_formula('(p -> q) | (q -> p)')
        self.assertTrue(np.array_equal(again.truth_set(f), m.truth_set(f)))


class FrameTestSuite(unittest.TestCase):

    def test_rooted_tree_counts(self):
        self.assertEqual([len(rooted_trees(n)) for n in range(1, 7)], [1, 1, 2, 4, 9, 20])

    def test_tree_posets_are_rooted(self):
        for parents in rooted_trees(5):
            poset = tree_poset(parents)
            self.assertTrue(all(poset.le('w0', w) for w in poset.elements))


class CountermodelTestSuite(unittest.TestCase):

    def test_peirce(self):
        gamma, phi = parse_sequent('|- ((p -> q) -> p) -> p')
        model, world = find_countermodel(gamma, phi)
        self.assertEqual(world, 'w0')
        self.assertFalse(kripke_eval(model, world, phi))

    def test_none_for_derivable(self):
        gamma, phi = parse_sequent('p & q |- q')
        self.assertIsNone(find_countermodel(gamma, phi, max_worlds=3))

    def test_kreisel_putnam_needs_branching(self):
        gamma, phi = bescat.get_sequent('kreisel_putnam')
        self.assertIsNone(find_countermodel(gamma, phi, max_worlds=3))
        model, world = find_countermodel(gamma, phi, max_worlds=4)
        self.assertTrue(satisfies(model, gamma, phi, world=None) is False)


class CrosscheckTestSuite(unittest.TestCase):

    def test_derivable_sequents_hold_in_random_models(self):
        for e in bescat.get_corpus():
            if e.derivable:
                gamma, phi = parse_sequent(e.text)
                self.assertIsNone(soundness_crosscheck(gamma, phi, samples=200, seed=7))

    def test_finds_a_failure(self):
        gamma, phi = parse_sequent('|- p | (p -> bot)')
        self.assertIsNotNone(soundness_crosscheck(gamma, phi, samples=1000, seed=0))

    def test_seeded(self):
        a = random_model(['p', 'q'], np.random.default_rng(3))
        b = random_model(['p', 'q'], np.random.default_rng(3))
        self.assertEqual(a.to_json(), b.to_json())


if __name__ == '__main__':
    unittest.main()
