
from __future__ import (absolute_import, division, print_function, unicode_literals)

from collections import namedtuple

from .formulas import parse_sequent

CorpusEntry = namedtuple('CorpusEntry', ['name', 'text', 'derivable'])

# Holds the generated sequents in order
_corpus = []


def get_corpus():
    """Return the list of CorpusEntry"""
    return list(_corpus)


def get_sequent_names():
    """Return the list of sequent names"""
    return [e.name for e in _corpus]


def get_sequent(name):
    """(Gamma, phi) of the named sequent"""
    for e in _corpus:
        if e.name == name:
            return parse_sequent(e.text)
    raise KeyError(name)


def _record_sequent(name, text, derivable):
    _corpus.append(CorpusEntry(name, text, derivable))


_record_sequent('identity', 'p |- p', True)
_record_sequent('k_combinator', '|- p -> q -> p', True)
_record_sequent('s_combinator', '|- (p -> q -> r) -> (p -> q) -> p -> r', True)
_record_sequent('and_comm', 'p & q |- q & p', True)
_record_sequent('or_comm', 'p | q |- q | p', True)
_record_sequent('curry', 'p & q -> r |- p -> q -> r', True)
_record_sequent('uncurry', 'p -> q -> r |- p & q -> r', True)
_record_sequent('distrib', 'p & (q | r) |- p & q | p & r', True)
_record_sequent('ex_falso', 'bot |- p', True)
_record_sequent('double_neg_intro', 'p |- (p -> bot) -> bot', True)
_record_sequent('triple_neg', '((p -> bot) -> bot) -> bot |- p -> bot', True)
_record_sequent('contraposition', 'p -> q |- (q -> bot) -> p -> bot', True)
_record_sequent('nn_excluded_middle', '|- ((p | (p -> bot)) -> bot) -> bot', True)
_record_sequent('or_elim', 'p -> r, q -> r |- p | q -> r', True)
_record_sequent('de_morgan_or', 'p | q -> bot |- (p -> bot) & (q -> bot)', True)
_record_sequent('excluded_middle', '|- p | (p -> bot)', False)
_record_sequent('double_neg_elim', '(p -> bot) -> bot |- p', False)
_record_sequent('peirce', '|- ((p -> q) -> p) -> p', False)
_record_sequent('strong_disjunction', 'p -> q | r |- (p -> q) | (p -> r)', False)
_record_sequent('weak_excluded_middle', '|- (p -> bot) | ((p -> bot) -> bot)', False)
_record_sequent('dummett', '|- (p -> q) | (q -> p)', False)
_record_sequent('de_morgan_and', 'p & q -> bot |- (p -> bot) | (q -> bot)', False)
_record_sequent('converse_contraposition', '(q -> bot) -> p -> bot |- p -> q', False)
_record_sequent('bare_atom', '|- p', False)
_record_sequent('or_to_and', 'p | q |- p & q', False)
_record_sequent('material_implication', 'p -> q |- (p -> bot) | q', False)
_record_sequent('converse', 'p -> q |- q -> p', False)
_record_sequent('half_or_elim', 'p | q, p -> r |- r', False)
_record_sequent('kreisel_putnam', '(p -> bot) -> q | r |- ((p -> bot) -> q) | ((p -> bot) -> r)', False)
_record_sequent('nn_stable_lem', '|- ((p -> bot) -> bot) -> p | (p -> bot)', False)
