# -*- coding: utf-8 -*-
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

from hypothesis import given, settings, strategies as st

from .context import bescat
from bescat.errors import SchemaError
from bescat.formulas import BOT, Conj, Disj, Impl, atoms, parse_formula
from bescat.proofs import (Abort, App, Case, Fst, Inl, Inr, Lam, Pair, Snd,
                           Var, check_nj, detours, free_vars, infer,
                           normalize, substitute, term_from_json, term_to_json)
from bescat.provers import decide

p, q, r = atoms('p,q,r')


def _wrap(t, phi, how):
    """t : phi inside one detour of the given kind, still of type phi."""
    if how == 0:
        return Fst(Pair(t, t))
    if how == 1:
        return App(Lam('z', phi, Var('z')), t)
    if how == 2:
        return Case(Inl(t, phi), 'z', Var('z'), 'z2', Var('z2'))
    return Snd(Pair(Var('unused'), t)) if how == 3 else App(Lam('w', q, t), Var('h0'))


class TypingTestSuite(unittest.TestCase):

    def test_swap(self):
        swap = Lam('x', Conj(p, q), Pair(Snd(Var('x')), Fst(Var('x'))))
        self.assertTrue(check_nj([], swap, parse_formula('p & q -> q & p')))
        self.assertFalse(check_nj([], swap, parse_formula('p & q -> p & q')))

    def test_ill_typed(self):
        self.assertIsNone(infer({}, Var('x')))
        self.assertIsNone(infer({'x': p}, Fst(Var('x'))))
        self.assertIsNone(infer({'f': Impl(p, q), 'x': q}, App(Var('f'), Var('x'))))
        case = Case(Var('d'), 'a', Var('a'), 'b', Var('b'))
        self.assertIsNone(infer({'d': Disj(p, q)}, case))
        self.assertEqual(infer({'d': Disj(p, p)}, case), p)

    def test_sums_and_abort(self):
        self.assertEqual(infer({'x': p}, Inr(Var('x'), q)), Disj(q, p))
        self.assertTrue(check_nj([('h', BOT)], Abort(Var('h'), r), r))
        self.assertIsNone(infer({'h': p}, Abort(Var('h'), r)))

    def test_later_context_entries_shadow(self):
        self.assertTrue(check_nj([('x', p), ('x', q)], Var('x'), q))


class SubstitutionTestSuite(unittest.TestCase):

    def test_capture_avoiding(self):
        t = substitute(Lam('y', p, Var('x')), {'x': Var('y')})
        self.assertEqual(free_vars(t), frozenset(['y']))
        self.assertNotEqual(t, Lam('y', p, Var('y')))

    def test_alpha_equivalence(self):
        self.assertEqual(Lam('a', p, Var('a')), Lam('b', p, Var('b')))
        self.assertNotEqual(Lam('a', p, Var('a')), Lam('a', q, Var('a')))


derivable = [e for e in bescat.get_corpus() if e.derivable]


class NormalizationTestSuite(unittest.TestCase):

    def test_beta(self):
        t = App(Lam('x', p, Pair(Var('x'), Var('x'))), Var('y'))
        self.assertEqual(detours(t), 1)
        self.assertEqual(normalize(t), Pair(Var('y'), Var('y')))

    def test_case_of_injection(self):
        t = Case(Inr(Var('y'), q), 'a', Inr(Var('a'), p), 'b', Inl(Var('b'), q))
        self.assertEqual(normalize(t), Inl(Var('y'), q))

    @settings(max_examples=150, deadline=None)
    @given(st.sampled_from(derivable), st.lists(st.integers(0, 4), min_size=1, max_size=5))
    def test_subject_reduction(self, entry, wraps):
        gamma, phi = bescat.parse_sequent(entry.text)
        d = decide(gamma, phi)
        ctx = list(d.context) + [('unused', phi), ('h0', q)]
        t = d.term
        for how in wraps:
            t = _wrap(t, phi, how)
        self.assertTrue(check_nj(ctx, t, phi))
        self.assertGreaterEqual(detours(t), len(wraps))
        nf = normalize(t)
        self.assertTrue(check_nj(ctx, nf, phi))
        self.assertEqual(detours(nf), 0)

    def test_normal_forms_are_fixed(self):
        for e in derivable:
            t = decide(*bescat.parse_sequent(e.text)).term
            nf = normalize(t)
            self.assertEqual(normalize(nf), nf)


class JsonTestSuite(unittest.TestCase):

    def test_load(self):
        obj = {'lam': {'var': 'x', 'type': 'p & q',
                       'body': {'pair': [{'snd': {'var': 'x'}}, {'fst': {'var': 'x'}}]}}}
        t = term_from_json(obj)
        self.assertTrue(check_nj([], t, parse_formula('p & q -> q & p')))
        self.assertEqual(term_to_json(t), obj)

    def test_schema_errors(self):
        with self.assertRaises(SchemaError) as cm:
            term_from_json({'lam': {'var': 'x', 'type': 'p &', 'body': {'var': 'x'}}})
        self.assertEqual(cm.exception.path, '/lam/type')
        with self.assertRaises(SchemaError):
            term_from_json({'pair': [{'var': 'x'}]})
        with self.assertRaises(SchemaError):
            term_from_json({'var': 'x', 'fst': {'var': 'y'}})


if __name__ == '__main__':
    unittest.main()
