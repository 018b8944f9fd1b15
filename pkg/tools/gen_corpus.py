from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import argparse
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from bescat.formulas import parse_sequent, render_sequent  # nopep8
from bescat.provers import decide  # nopep8

# Classic sequents of intuitionistic propositional logic; whether each is
# derivable is decided when the corpus is generated, not written down here.
_sequents = [
    ('identity', 'p |- p'),
    ('k_combinator', '|- p -> q -> p'),
    ('s_combinator', '|- (p -> q -> r) -> (p -> q) -> p -> r'),
    ('and_comm', 'p & q |- q & p'),
    ('or_comm', 'p | q |- q | p'),
    ('curry', 'p & q -> r |- p -> q -> r'),
    ('uncurry', 'p -> q -> r |- p & q -> r'),
    ('distrib', 'p & (q | r) |- p & q | p & r'),
    ('ex_falso', 'bot |- p'),
    ('double_neg_intro', 'p |- (p -> bot) -> bot'),
    ('triple_neg', '((p -> bot) -> bot) -> bot |- p -> bot'),
    ('contraposition', 'p -> q |- (q -> bot) -> p -> bot'),
    ('nn_excluded_middle', '|- ((p | (p -> bot)) -> bot) -> bot'),
    ('or_elim', 'p -> r, q -> r |- p | q -> r'),
    ('de_morgan_or', 'p | q -> bot |- (p -> bot) & (q -> bot)'),
    ('excluded_middle', '|- p | (p -> bot)'),
    ('double_neg_elim', '(p -> bot) -> bot |- p'),
    ('peirce', '|- ((p -> q) -> p) -> p'),
    ('strong_disjunction', 'p -> q | r |- (p -> q) | (p -> r)'),
    ('weak_excluded_middle', '|- (p -> bot) | ((p -> bot) -> bot)'),
    ('dummett', '|- (p -> q) | (q -> p)'),
    ('de_morgan_and', 'p & q -> bot |- (p -> bot) | (q -> bot)'),
    ('converse_contraposition', '(q -> bot) -> p -> bot |- p -> q'),
    ('bare_atom', '|- p'),
    ('or_to_and', 'p | q |- p & q'),
    ('material_implication', 'p -> q |- (p -> bot) | q'),
    ('converse', 'p -> q |- q -> p'),
    ('half_or_elim', 'p | q, p -> r |- r'),
    ('kreisel_putnam', '(p -> bot) -> q | r |- ((p -> bot) -> q) | ((p -> bot) -> r)'),
    ('nn_stable_lem', '|- ((p -> bot) -> bot) -> p | (p -> bot)'),
]

_TOP_TEMPLATE = '''
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

'''

_SEQUENT_TEMPLATE = '''_record_sequent({name!r}, {text!r}, {derivable!r})
'''


def generate_source(verbose=True):
    s = _TOP_TEMPLATE + '\n'
    n_derivable = 0
    for name, text in _sequents:
        gamma, phi = parse_sequent(text)
        d = decide(gamma, phi)
        if not d.is_derivable and not d.certified:
            raise ValueError('{}: no countermodel found, refusing to record it'.format(name))
        if verbose:
            print('{:24s} {:12s} {}'.format(name, 'derivable' if d else 'underivable', render_sequent(gamma, phi)))
        s += _SEQUENT_TEMPLATE.format(name=name, text=text, derivable=d.is_derivable)
        n_derivable += bool(d)
    return s, n_derivable


def create_corpus(fn, verbose=True):
    s, n_derivable = generate_source(verbose=verbose)
    with open(fn, 'wt') as f:
        f.write(s)
    print('Generated a corpus of {} sequents, {} derivable'.format(len(_sequents), n_derivable))
    return len(_sequents)


def parse_args():
    parser = argparse.ArgumentParser(
        prog='gen_corpus',
        description='Generate the py file of classified sequents used by the test suites')

    parser.add_argument('--out', help='name of generated output python file', default='corpus.py')
    parser.add_argument('--quiet', action='store_true', help='do not list the sequents')

    args = parser.parse_args()

    return args


if __name__ == '__main__':
    main_args = parse_args()
    create_corpus(main_args.out, verbose=not main_args.quiet)
