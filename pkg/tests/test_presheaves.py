# -*- coding: utf-8 -*-
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

from .context import bescat
from bescat.bases import Base, Bounds, RuleApp, Var, VarContext, check_derivation, rule
from bescat.errors import CapExceeded, UniverseError
from bescat.formulas import atoms, atoms_of, parse_formula, parse_sequent
from bescat.locales import vsem
from bescat.presheaves import (AtomDenotation, Coproduct, Product, Terminal,
                               check_functor, check_naturality,
                               find_natural_transformation, fragment_frame,
                               identity_nat, interp, interp_context,
                               interp_coproduct, natural_transformations,
                               read_back, strong_disjunction_experiment,
                               supports_disjunction_check, vertical)
from bescat.worlds import World, build_fragment

p, q, r = atoms('p,q,r')


def _world(base, *names):
    return World(base, VarContext.of_atoms(names))


class DenotationTestSuite(unittest.TestCase):

    def setUp(self):
        self.frag = build_fragment(Base(), [p], depth=1, ctx_cap=1)
        self.with_p = Base([rule('p')])

    def test_atom_tables(self):
        d = AtomDenotation(self.frag, p)
        self.assertEqual(len(d.table(_world(Base()))), 0)
        self.assertEqual(d.table(_world(Base(), p)), (Var('x_p'),))
        self.assertEqual(len(d.table(_world(self.with_p))), 1)
        self.assertEqual(len(d.table(_world(self.with_p, p))), 2)

    def test_action_substitutes(self):
        d = AtomDenotation(self.frag, p)
        w = _world(self.with_p, p)
        axiom = RuleApp(rule('p'), ())
        for f in self.frag.hom(w, w):
            self.assertIn(d.act(f, Var('x_p')), (Var('x_p'), axiom))
            self.assertEqual(d.act(f, axiom), axiom)

    def test_functors(self):
        for text in ('p', 'p & p', 'p -> p', 'bot', '(p -> p) -> p'):
            d = interp(parse_formula(text), self.frag)
            self.assertTrue(check_functor(d), text)
        self.assertTrue(check_functor(Terminal(self.frag)))
        self.assertTrue(check_functor(interp_coproduct(parse_formula('p | p'), self.frag)))

    def test_implication_has_the_projection(self):
        d = interp(parse_formula('p -> p'), self.frag)
        for w in self.frag.worlds:
            self.assertTrue(d.table(w))

    def test_coproduct_tables(self):
        d = interp_coproduct(parse_formula('p | p'), self.frag)
        self.assertIsInstance(d, Coproduct)
        self.assertEqual(len(d.table(_world(self.with_p, p))), 4)
        self.assertEqual(sorted(tag for tag, _ in d.table(_world(Base(), p))), [0, 1])

    def test_bottom_is_the_product_of_atoms(self):
        d = interp(parse_formula('bot'), self.frag)
        self.assertIsInstance(d, Product)
        self.assertEqual(d.cardinalities(), AtomDenotation(self.frag, p).cardinalities())

    def test_context(self):
        d = interp_context([p, p], self.frag)
        self.assertEqual(len(d.table(_world(self.with_p, p))), 4)
        self.assertEqual(len(interp_context([], self.frag).table(_world(Base()))), 1)

    def test_errors(self):
        with self.assertRaises(UniverseError):
            interp(q, self.frag)
        with self.assertRaises(ValueError):
            interp_coproduct(p, self.frag)

    def test_json(self):
        d = interp(p, self.frag).to_json()
        self.assertEqual(d['denotation'], 'p')
        self.assertEqual(sorted(d['cardinalities'].values()), [0, 1, 1, 2])


class NaturalityTestSuite(unittest.TestCase):

    def setUp(self):
        self.frag = build_fragment(Base(), [p], depth=1, ctx_cap=1)
        self.dp = AtomDenotation(self.frag, p)

    def test_identity(self):
        i = identity_nat(self.dp)
        self.assertTrue(check_naturality(i))
        self.assertEqual(vertical(i, i), i)

    def test_endomorphisms(self):
        etas = list(natural_transformations(self.dp, self.dp))
        self.assertEqual(len(etas), 2)
        self.assertIn(identity_nat(self.dp), etas)
        for eta in etas:
            self.assertTrue(check_naturality(eta))
            for theta in etas:
                self.assertIn(vertical(eta, theta), etas)

    def test_limit_and_cap(self):
        self.assertEqual(len(list(natural_transformations(self.dp, self.dp, limit=1))), 1)
        with self.assertRaises(CapExceeded):
            list(natural_transformations(self.dp, self.dp, cap=1))

    def test_empty_target(self):
        self.assertIsNone(find_natural_transformation(Terminal(self.frag), self.dp))

    def test_disjunction_eliminates(self):
        self.assertTrue(supports_disjunction_check(self.frag, self.dp, self.dp, self.dp))


class AlgebraicSoundnessTestSuite(unittest.TestCase):
    """Derivable sequents have a transformation [[Gamma]] -> [[phi]] on every fragment."""

    def test_corpus_on_a_two_atom_fragment(self):
        frag = build_fragment(Base(), [p, q], depth=1, ctx_cap=0)
        checked = 0
        for e in bescat.get_corpus():
            gamma, phi = parse_sequent(e.text)
            if not e.derivable or r in atoms_of(list(gamma) + [phi]):
                continue
            eta = find_natural_transformation(interp_context(gamma, frag), interp(phi, frag))
            self.assertIsNotNone(eta, e.name)
            self.assertTrue(check_naturality(eta, frag), e.name)
            checked += 1
        self.assertGreaterEqual(checked, 10)

    def test_fragment_with_contexts(self):
        frag = build_fragment(Base(), [p], depth=1, ctx_cap=1)
        for text in ('p |- p', 'p & p |- p', '|- p -> p', 'bot |- p', 'p |- p | p', 'p |- (p -> p) -> p'):
            gamma, phi = parse_sequent(text)
            eta = find_natural_transformation(interp_context(gamma, frag), interp(phi, frag))
            self.assertIsNotNone(eta, text)

    def test_underivable_without_transformation(self):
        frag = build_fragment(Base(), [p], depth=1, ctx_cap=1)
        for text in ('|- p', 'p -> p |- p'):
            gamma, phi = parse_sequent(text)
            self.assertIsNone(find_natural_transformation(interp_context(gamma, frag), interp(phi, frag)), text)


class DisjunctionSupportTestSuite(unittest.TestCase):
    """Terminal, products and formula denotations all support disjunction elimination."""

    def setUp(self):
        self.frag = build_fragment(Base(), [p, q], depth=1, ctx_cap=0)
        self.dp = AtomDenotation(self.frag, p)
        self.dq = AtomDenotation(self.frag, q)

    def check(self, c, frag=None, a=None, b=None):
        frag = frag or self.frag
        self.assertTrue(supports_disjunction_check(frag, a or self.dp, b or self.dq, c))

    def test_atoms(self):
        self.check(self.dp)
        self.check(self.dq)

    def test_terminal(self):
        self.check(Terminal(self.frag))

    def test_products(self):
        self.check(Product(self.frag, [self.dp, self.dq]))
        self.check(Product(self.frag, [Terminal(self.frag), self.dp]))

    def test_formula_denotations(self):
        for text in ('p -> q', 'q & p -> p', 'bot', 'p | q', '(p -> bot) -> q'):
            self.check(interp(parse_formula(text), self.frag))

    def test_fragment_with_contexts(self):
        frag = build_fragment(Base(), [p], depth=1, ctx_cap=1)
        dp = AtomDenotation(frag, p)
        for c in (Terminal(frag), Product(frag, [dp, dp]), interp(parse_formula('p -> p'), frag)):
            self.check(c, frag, dp, dp)


class ReadBackTestSuite(unittest.TestCase):

    def test_rule_application(self):
        r = rule('q', ([], 'p'))
        base = Base([r])
        frag = build_fragment(base, [p, q], depth=2, ctx_cap=1, bounds=Bounds(0, 0, 0))
        self.assertEqual(len(frag.worlds), 3)
        w = _world(base, p)
        etas = list(natural_transformations(AtomDenotation(frag, p), AtomDenotation(frag, q)))
        self.assertEqual(len(etas), 1)
        t = read_back(etas[0], w)
        self.assertEqual(t, RuleApp(r, [Var('x_p')]))
        self.assertTrue(check_derivation(base, w.ctx, t, q))


class StrongDisjunctionTestSuite(unittest.TestCase):

    def test_default_fragment(self):
        report = strong_disjunction_experiment()
        self.assertFalse(report.degenerate)
        self.assertEqual((report.worlds, report.morphisms), (8, 21))
        self.assertTrue(report.coproduct_constructed)
        self.assertTrue(report.coproduct_natural)
        # the eight bases validate the sequent as a frame, so one survives
        self.assertEqual(report.forall_count, 1)
        self.assertIs(report.frame_separates, False)
        self.assertTrue(any('artifacts of the truncation' in n for n in report.notes))
        d = report.to_json()
        self.assertEqual(d['universe'], ['p', 'q', 'r'])
        self.assertEqual(d['coproduct'], {'constructed': True, 'natural': True})
        self.assertEqual(d['forall'], {'count': 1, 'limit': None})
        self.assertIs(d['frame_separates'], False)

    def test_degenerate(self):
        report = strong_disjunction_experiment(universe=['p'], limit=1)
        self.assertTrue(report.degenerate)
        self.assertEqual(report.worlds, 4)
        self.assertIs(report.frame_separates, False)
        self.assertEqual(len(report.notes), 3)


class FragmentFrameTestSuite(unittest.TestCase):

    def test_default_fragment(self):
        tagged = rule('p', tag='new')
        frag = build_fragment(Base(), [p, q, r], depth=1, ctx_cap=0, bounds=Bounds(0, 0, 1),
                              closed_under=(tagged,))
        poset, interp_ = fragment_frame(frag)
        self.assertEqual(len(poset.elements), 8)
        bases = dict((frag.label(w), w.base) for w in frag.worlds)
        self.assertEqual(sorted(len(bases[e]) for e in interp_[p]), [1, 1, 2, 2, 2])
        self.assertEqual(sorted(len(bases[e]) for e in interp_[q]), [1, 2])
        self.assertTrue(all(tagged in bases[e] for e in interp_[p] if rule('p') not in bases[e]))
        source = vsem(parse_formula('p -> q | r'), interp_)
        target = vsem(parse_formula('(p -> q) | (p -> r)'), interp_)
        self.assertEqual(source, target)
        self.assertEqual(sorted(len(bases[e]) for e in source), [1, 1, 2, 2])

    def test_contexts_rejected(self):
        frag = build_fragment(Base(), [p], depth=1, ctx_cap=1)
        self.assertRaises(ValueError, fragment_frame, frag)


if __name__ == '__main__':
    unittest.main()
