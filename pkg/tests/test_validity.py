# -*- coding: utf-8 -*-
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

import numpy as np

from .context import bescat
from bescat.bases import Base, Bounds, ExtensionSpace, rule
from bescat.errors import UniverseError
from bescat.formulas import atoms, atoms_of, parse_formula, parse_sequent
from bescat.models import random_formula
from bescat.provers import decide
from bescat.validity import (INF_NOTE, Engine, Evaluator, SemanticsMode,
                             ValidityConfig, entails_in_base, recheck_witness,
                             valid, valid_in_base)

p, q, r = atoms('p,q,r')

SMALL = Bounds(1, 0, 1)


class ConfigTestSuite(unittest.TestCase):

    def test_universe(self):
        self.assertEqual(ValidityConfig('q, p').universe, (p, q))
        self.assertEqual(ValidityConfig([q, 'p']).universe, (p, q))
        with self.assertRaises(ValueError):
            ValidityConfig('')

    def test_prover_only_for_sandqvist(self):
        with self.assertRaises(ValueError):
            ValidityConfig('p', mode='kripke', engine='prover')
        self.assertIs(ValidityConfig('p', mode='kripke').mode, SemanticsMode.KRIPKE)

    def test_atoms_outside_the_universe(self):
        with self.assertRaises(UniverseError):
            valid([], parse_formula('p -> q'), ValidityConfig('p'))


class ClauseTestSuite(unittest.TestCase):

    def test_atoms_are_derivability(self):
        base = Base([rule('p'), rule('q', ([], 'p'))])
        cfg = ValidityConfig('p,q', SMALL)
        self.assertTrue(valid_in_base(base, q, cfg).verdict)
        self.assertFalse(valid_in_base(Base(), q, cfg).verdict)

    def test_bot(self):
        space = ExtensionSpace(Base(), [p, q], Bounds(0, 0, 2))
        sandqvist = Evaluator(space)
        kripke = Evaluator(space, SemanticsMode.KRIPKE)
        both = space.key_of(Base([rule('p'), rule('q')]))
        self.assertTrue(sandqvist.holds(both, parse_formula('bot')))
        self.assertFalse(kripke.holds(both, parse_formula('bot')))
        self.assertTrue(sandqvist.holds(frozenset(), parse_formula('p & q -> bot')))

    def test_entails_in_base(self):
        base = Base([rule('p')])
        cfg = ValidityConfig('p,q', SMALL)
        self.assertTrue(entails_in_base(base, [q], parse_formula('p & q'), cfg).verdict)
        self.assertFalse(entails_in_base(base, [], parse_formula('p & q'), cfg).verdict)
        self.assertTrue(entails_in_base(base, [], parse_formula('q -> p & q'), cfg).verdict)

    def test_reports_name_their_bounds(self):
        report = valid(*parse_sequent('p |- p'), cfg=ValidityConfig('p', SMALL))
        self.assertIn(INF_NOTE, report.notes)
        self.assertEqual(report.to_json()['bounds'], SMALL.to_json())
        self.assertGreater(report.extensions_examined, 0)


class WitnessTestSuite(unittest.TestCase):

    def check_witness(self, text, cfg):
        report = valid(*parse_sequent(text), cfg=cfg)
        self.assertFalse(report.verdict)
        self.assertTrue(recheck_witness(report.witness, Base(), cfg))
        return report.witness

    def test_atom(self):
        w = self.check_witness('|- p', ValidityConfig('p,q', SMALL))
        self.assertEqual((w['formula'], w['atom']), ('p', 'p'))

    def test_sandqvist_disjunction(self):
        w = self.check_witness('|- p | q', ValidityConfig('p,q', SMALL))
        self.assertIsNotNone(w['atom'])

    def test_kripke_disjunction(self):
        w = self.check_witness('|- p | q', ValidityConfig('p,q', SMALL, mode='kripke'))
        self.assertIsNone(w['atom'])

    def test_implication_goes_to_the_extension(self):
        w = self.check_witness('p |- q', ValidityConfig('p,q', SMALL))
        self.assertEqual(w['atom'], 'q')
        self.assertIn({'premises': [], 'concl': 'p'}, w['extension'])

    def test_tampered_witness_is_rejected(self):
        cfg = ValidityConfig('p,q', SMALL)
        w = dict(valid(*parse_sequent('|- p'), cfg=cfg).witness)
        w['extension'] = [{'premises': [], 'concl': 'p'}]
        self.assertFalse(recheck_witness(w, Base(), cfg))


class EngineTestSuite(unittest.TestCase):

    def test_prover_engine(self):
        cfg = ValidityConfig('p,q,r', engine=Engine.PROVER)
        report = valid(*bescat.get_sequent('strong_disjunction'), cfg=cfg)
        self.assertFalse(report.verdict)
        self.assertIsNotNone(report.witness['countermodel'])

    def test_prover_engine_needs_the_empty_base(self):
        cfg = ValidityConfig('p', engine='prover')
        with self.assertRaises(ValueError):
            valid_in_base(Base([rule('p')]), p, cfg)


class DisjunctionDiscriminatorTestSuite(unittest.TestCase):
    """p -> q | r |= (p -> q) | (p -> r) separates the two readings of disjunction."""

    def test_kripke_disjunction_validates_it(self):
        cfg = ValidityConfig('p,q,r', Bounds(2, 1, 2), mode='kripke')
        self.assertTrue(valid(*bescat.get_sequent('strong_disjunction'), cfg=cfg).verdict)

    def test_sandqvist_disjunction_refutes_it(self):
        cfg = ValidityConfig('p,q,r', Bounds(2, 1, 2), engine='prover')
        self.assertFalse(valid(*bescat.get_sequent('strong_disjunction'), cfg=cfg).verdict)


class SoundnessTestSuite(unittest.TestCase):
    """Derivable sequents are valid in the bounded space."""

    def test_corpus(self):
        checked = 0
        for e in bescat.get_corpus():
            gamma, phi = parse_sequent(e.text)
            names = sorted(atoms_of(list(gamma) + [phi]))
            if not e.derivable or len(names) > 2:
                continue
            cfg = ValidityConfig(names or 'p', Bounds(2, 1, 2))
            report = valid(gamma, phi, cfg)
            if not report.verdict:
                self.assertTrue(recheck_witness(report.witness, Base(), cfg))
            self.assertTrue(report.verdict, e.name)
            checked += 1
        self.assertGreaterEqual(checked, 8)

    def test_three_atom_corpus(self):
        cfg = ValidityConfig('p,q,r', Bounds(2, 1, 2))
        for name in ('distrib', 'or_elim'):
            report = valid(*bescat.get_sequent(name), cfg=cfg)
            if not report.verdict:
                self.assertTrue(recheck_witness(report.witness, Base(), cfg))
            self.assertTrue(report.verdict, name)

    def test_random_derivable_sequents(self):
        space = ExtensionSpace(Base(), [p, q, r], Bounds(2, 1, 2))
        ev = Evaluator(space)
        rng = np.random.default_rng(11)
        checked = 0
        for _ in range(400):
            gamma = [random_formula([p, q, r], rng) for _ in range(int(rng.integers(0, 3)))]
            phi = random_formula([p, q, r], rng)
            d = decide(gamma, phi)
            if not d:
                continue
            for key in space.keys():
                if all(ev.holds(key, g) for g in d.gamma):
                    self.assertTrue(ev.holds(key, phi), (d.sequent, ev.witness(key, phi)))
            checked += 1
            if checked == 12:
                break
        self.assertEqual(checked, 12)


class WorkedExampleTestSuite(unittest.TestCase):

    def test_extension_count(self):
        self.assertEqual(len(ExtensionSpace(Base(), [p, q], Bounds(1, 1, 1))), 11)

    def test_axiom_validates_a_disjunction(self):
        cfg = ValidityConfig('p,q', Bounds(2, 1, 2))
        base = Base([rule('p')])
        self.assertTrue(valid_in_base(base, p, cfg).verdict)
        self.assertTrue(valid_in_base(base, parse_formula('p | q'), cfg).verdict)

    def test_hypothesis_does_not_give_another_atom(self):
        cfg = ValidityConfig('p,q', SMALL)
        report = entails_in_base(Base(), [p], q, cfg)
        self.assertFalse(report.verdict)
        self.assertEqual(report.witness['extension'], [{'premises': [], 'concl': 'p'}])
        self.assertEqual((report.witness['formula'], report.witness['atom']), ('q', 'q'))

    def test_conjunction_gives_its_conjunct(self):
        cfg = ValidityConfig('p,q', Bounds(2, 1, 2))
        self.assertTrue(entails_in_base(Base(), [parse_formula('p & q')], q, cfg).verdict)

    def test_bot_is_invalid_in_both_modes(self):
        verdicts = [valid([], parse_formula('bot'), ValidityConfig('p,q', SMALL, mode=m)).verdict
                    for m in ('sandqvist', 'kripke')]
        self.assertEqual(verdicts, [False, False])


if __name__ == '__main__':
    unittest.main()
