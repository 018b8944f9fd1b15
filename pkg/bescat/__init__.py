r"""
Base-extension semantics for intuitionistic propositional logic, with its
Kripke, locale and presheaf reconstructions.

E.g.
  >>> import bescat
  >>> gamma, phi = bescat.parse_sequent('p -> q | r |- (p -> q) | (p -> r)')
  >>> bool(bescat.decide(gamma, phi))
  False
  >>> cfg = bescat.ValidityConfig('p,q,r', mode='kripke')
  >>> bescat.valid(gamma, phi, cfg).verdict
  True

Validity over base extensions is computed by brute force in a finite extension
space, so every verdict names its universe and bounds.
"""

import logging
logging.getLogger(__name__).addHandler(logging.NullHandler())

from .bases import (AtomicRule, Base, Bounds, ExtensionSpace, Premise,  # nopep8
                    derivations, derives, rule, saturate, theorems)
from .corpus import get_corpus, get_sequent, get_sequent_names  # nopep8
from .errors import CapExceeded, SchemaError, TruncationError, UniverseError  # nopep8
from .flattening import build_N, completeness_check, flatten  # nopep8
from .formulas import (Atom, Bot, Conj, Disj, Impl, parse_formula,  # nopep8
                       parse_sequent, render_formula)
from .locales import bes_poset, nucleus_K, omega_K, vsem  # nopep8
from .models import find_countermodel, kripke_eval  # nopep8
from .presheaves import (interp, natural_transformations,  # nopep8
                         strong_disjunction_experiment)
from .provers import decide  # nopep8
from .validity import (Engine, SemanticsMode, ValidityConfig,  # nopep8
                       entails_in_base, valid, valid_in_base)
from .worlds import build_fragment, check_category_laws  # nopep8

__all__ = ['Atom', 'AtomicRule', 'Base', 'Bot', 'Bounds', 'CapExceeded', 'Conj', 'Disj', 'Engine',
           'ExtensionSpace', 'Impl', 'Premise', 'SchemaError', 'SemanticsMode', 'TruncationError',
           'UniverseError', 'ValidityConfig', 'bes_poset', 'build_N', 'build_fragment',
           'check_category_laws', 'completeness_check', 'decide', 'derivations', 'derives',
           'entails_in_base', 'find_countermodel', 'flatten', 'get_corpus', 'get_sequent',
           'get_sequent_names', 'interp', 'kripke_eval', 'natural_transformations', 'nucleus_K',
           'omega_K', 'parse_formula', 'parse_sequent', 'render_formula', 'rule', 'saturate',
           'strong_disjunction_experiment', 'theorems', 'valid', 'valid_in_base', 'vsem']
