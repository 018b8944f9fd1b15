# -*- coding: utf-8 -*-
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

from hypothesis import given, strategies as st

from .context import bescat
from bescat.formulas import (BOT, Atom, Conj, Disj, FormulaSet,
                             FormulaSyntaxError, Impl, atoms_of, formula_size,
                             neg, parse_formula, parse_sequent, render_formula,
                             render_sequent, subformulas)

p, q, r = Atom('p'), Atom('q'), Atom('r')

formulas = st.recursive(
    st.sampled_from([p, q, r, BOT]),
    lambda sub: st.builds(Conj, sub, sub) | st.builds(Impl, sub, sub) | st.builds(Disj, sub, sub),
    max_leaves=8)


class ParseTestSuite(unittest.TestCase):

    def test_precedence(self):
        self.assertEqual(parse_formula('p & q -> r | bot'), Impl(Conj(p, q), Disj(r, BOT)))
        self.assertEqual(parse_formula('p -> q -> r'), Impl(p, Impl(q, r)))
        self.assertEqual(parse_formula('p | q | r'), Disj(Disj(p, q), r))

    def test_render(self):
        self.assertEqual(render_formula(parse_formula('p & (q | r)')), 'p & (q | r)')
        self.assertEqual(render_formula(Impl(Impl(p, q), r)), '(p -> q) -> r')
        self.assertEqual(render_formula(Disj(p, Disj(q, r))), 'p | (q | r)')

    @given(formulas)
    def test_render_parses_back(self, f):
        self.assertEqual(parse_formula(render_formula(f)), f)

    def test_negation_is_opt_in(self):
        with self.assertRaises(FormulaSyntaxError):
            parse_formula('~p')
        self.assertEqual(parse_formula('~p', allow_negation=True), neg(p))

    def test_syntax_errors_carry_positions(self):
        with self.assertRaises(FormulaSyntaxError) as cm:
            parse_formula('p & ')
        self.assertEqual(cm.exception.text, 'p & ')
        with self.assertRaises(FormulaSyntaxError):
            parse_formula('p q')
        with self.assertRaises(FormulaSyntaxError):
            parse_formula('(p')

    def test_bot_is_not_an_atom(self):
        with self.assertRaises(ValueError):
            Atom('bot')
        with self.assertRaises(ValueError):
            Atom('P')


class SequentTestSuite(unittest.TestCase):

    def test_parse(self):
        gamma, phi = parse_sequent('q, p -> q |- q')
        self.assertEqual(phi, q)
        self.assertEqual(set(gamma), {q, Impl(p, q)})

    def test_empty_context(self):
        self.assertEqual(parse_sequent('|- p'), (FormulaSet(), p))
        self.assertEqual(render_sequent([], p), '|- p')

    def test_needs_one_turnstile(self):
        with self.assertRaises(FormulaSyntaxError):
            parse_sequent('p')
        with self.assertRaises(FormulaSyntaxError):
            parse_sequent('p |- q |- r')

    def test_formula_sets_are_canonical(self):
        self.assertEqual(FormulaSet([q, p, q]), FormulaSet([p, q]))
        self.assertEqual(len(FormulaSet([q, p, q])), 2)


class SubformulaTestSuite(unittest.TestCase):

    @given(formulas)
    def test_closed(self, f):
        sub = set(subformulas([f]))
        self.assertIn(f, sub)
        for g in sub:
            if isinstance(g, (Conj, Impl, Disj)):
                self.assertIn(g.left, sub)
                self.assertIn(g.right, sub)
        self.assertLessEqual(len(sub), formula_size(f))

    def test_atoms(self):
        self.assertEqual(atoms_of([parse_formula('p -> q | bot')]), frozenset([p, q]))


if __name__ == '__main__':
    unittest.main()
