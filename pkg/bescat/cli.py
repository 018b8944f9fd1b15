"""
Command line front door.

E.g.
  $ bescat decide "p -> p"
  $ bescat compare "p -> q | r |- (p -> q) | (p -> r)" --universe p,q,r --json
  $ bescat validate "p |- p & p" --base base.json

Exit status: 0 when a verdict was computed, whatever it is; 1 on a usage,
syntax or schema error; 2 when a cap or bound refuses the computation.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import argparse
import json
import logging
import sys

from .bases import Bounds, base_from_json
from .errors import CapExceeded, SchemaError
from .flattening import completeness_check
from .formulas import (FormulaSet, atoms_of, parse_formula, parse_sequent,
                       render_formula, render_sequent)
from .locales import bes_poset, omega_K, poset_from_json, poset_to_json, vsem
from .models import MAX_COUNTERMODEL_WORLDS, soundness_crosscheck
from .presheaves import check_functor, interp, strong_disjunction_experiment
from .proofs import check_nj, detours, infer, normalize, term_from_json, term_to_json
from .provers import decide
from .validity import (Engine, SemanticsMode, ValidityConfig, entails_in_base,
                       valid)
from .worlds import FRAGMENT_BOUNDS, build_fragment, check_category_laws

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting with argparse's status 2."""

    def error(self, message):
        raise UsageError('{}: {}'.format(self.prog, message))


###############################################################################
# Inputs

def read_json(path):
    with open(path, 'rt') as f:
        return json.load(f)


def load_inputs(base=None, poset=None, proof=None):
    """
    Parsed and validated input files; each argument is a path or None.

    Returns a dict with the keys given: 'base' -> (Base, universe),
    'poset' -> (Poset, AtomInterp), 'proof' -> (context, term, formula or None).
    """
    found = {}
    if base is not None:
        found['base'] = base_from_json(read_json(base))
    if poset is not None:
        found['poset'] = poset_from_json(read_json(poset))
    if proof is not None:
        found['proof'] = proof_from_json(read_json(proof))
    return found


def proof_from_json(obj, path=''):
    """{"context": [[var, formula], ...], "term": ..., "formula": ...}; formula is optional."""
    if not isinstance(obj, dict) or 'term' not in obj:
        raise SchemaError(path, "expected an object with 'term'")
    context = []
    for i, pair in enumerate(obj.get('context', [])):
        p = '{}/context/{}'.format(path, i)
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(v, str) for v in pair)):
            raise SchemaError(p, 'expected [variable, formula]')
        try:
            context.append((pair[0], parse_formula(pair[1])))
        except ValueError as e:
            raise SchemaError(p + '/1', str(e))
    phi = obj.get('formula')
    if phi is not None:
        try:
            phi = parse_formula(phi)
        except ValueError as e:
            raise SchemaError(path + '/formula', str(e))
    return context, term_from_json(obj['term'], path + '/term'), phi


def _sequent(text):
    """'Gamma |- phi', or a bare formula for an empty context."""
    if '|-' in text:
        return parse_sequent(text)
    return FormulaSet(), parse_formula(text)


def _bounds(args, d=Bounds()):
    return Bounds(d.max_premises if args.max_premises is None else args.max_premises,
                  d.max_hyps if args.max_hyps is None else args.max_hyps,
                  d.max_extra_rules if args.max_extra_rules is None else args.max_extra_rules)


def _universe(args, formulas, extra=()):
    if args.universe:
        return args.universe
    names = set(a.name for a in atoms_of(formulas)) | set(a.name for a in extra)
    return sorted(names) or ['p']


def _config(args, formulas, extra=(), mode=None, engine=None):
    return ValidityConfig(_universe(args, formulas, extra), _bounds(args),
                          mode=mode or args.mode, engine=engine or args.engine or Engine.BRUTE)


###############################################################################
# Commands

def cmd_decide(args):
    gamma, phi = _sequent(args.sequent)
    d = decide(gamma, phi, max_worlds=args.max_worlds)
    report = d.to_json()
    report['checked'] = d.check()
    if args.crosscheck and d.is_derivable:
        bad = soundness_crosscheck(gamma, phi, samples=args.crosscheck, seed=args.seed)
        report['crosscheck'] = {'samples': args.crosscheck, 'seed': args.seed,
                                'failure': bad.to_json() if bad is not None else None}
    return report


def cmd_validate(args):
    gamma, phi = _sequent(args.sequent)
    formulas = list(gamma) + [phi]
    if args.base:
        base, declared = load_inputs(base=args.base)['base']
        cfg = _config(args, formulas, declared)
        report = entails_in_base(base, gamma, phi, cfg).to_json()
        report['base'] = str(base)
    else:
        report = valid(gamma, phi, _config(args, formulas)).to_json()
    report['sequent'] = render_sequent(gamma, phi)
    return report


def cmd_complete(args):
    gamma, phi = _sequent(args.sequent)
    return completeness_check(gamma, phi).to_json()


def cmd_compare(args):
    """Kripke-style disjunction by brute force next to Sandqvist's clause."""
    gamma, phi = _sequent(args.sequent)
    formulas = list(gamma) + [phi]
    kripke = valid(gamma, phi, _config(args, formulas, mode=SemanticsMode.KRIPKE, engine=Engine.BRUTE))
    sandqvist = valid(gamma, phi, _config(args, formulas, mode=SemanticsMode.SANDQVIST,
                                          engine=args.engine or Engine.PROVER))
    return {'sequent': render_sequent(gamma, phi),
            'kripke': kripke.to_json(),
            'sandqvist': sandqvist.to_json(),
            'summary': {'kripke': 'valid' if kripke.verdict else 'invalid',
                        'sandqvist': 'valid' if sandqvist.verdict else 'invalid'}}


def cmd_locale(args):
    if args.poset:
        poset, atom_interp = load_inputs(poset=args.poset)['poset']
    else:
        poset, atom_interp = bes_poset(_universe(args, []), _bounds(args))
    omega = omega_K(atom_interp)
    report = {'poset': poset_to_json(poset, atom_interp),
              'closed_upsets': len(omega),
              'bottom': list(omega.bottom)}
    values = {}
    for text in args.formula or ():
        f = parse_formula(text)
        values[render_formula(f)] = list(vsem(f, atom_interp, omega.nucleus))
    report['values'] = values
    return report


def cmd_fragment(args):
    base, declared = load_inputs(base=args.base)['base']
    universe = _universe(args, [], declared)
    frag = build_fragment(base, universe, depth=args.depth, ctx_cap=args.ctx_cap,
                          bounds=_bounds(args, FRAGMENT_BOUNDS))
    report = frag.to_json()
    report['category_laws'] = check_category_laws(frag)
    denotations = {}
    for text in args.formula or ():
        d = interp(parse_formula(text), frag)
        denotations[d.label] = dict(d.to_json(), functor=check_functor(d))
    report['denotations'] = denotations
    return report


def cmd_check_proof(args):
    context, term, phi = load_inputs(proof=args.proof)['proof']
    inferred = infer(dict(context), term)
    report = {'context': [[x, render_formula(g)] for x, g in context],
              'inferred': render_formula(inferred) if inferred is not None else None,
              'accepted': inferred is not None and (phi is None or check_nj(context, term, phi)),
              'detours': detours(term)}
    if phi is not None:
        report['formula'] = render_formula(phi)
    if args.normalize and inferred is not None:
        nf = normalize(term)
        report['normal_form'] = {'term': term_to_json(nf),
                                 'accepted': check_nj(context, nf, inferred),
                                 'detours': detours(nf)}
    return report


def cmd_strong_disjunction(args):
    universe = args.universe or ['p', 'q', 'r']
    return strong_disjunction_experiment(universe, bounds=_bounds(args, FRAGMENT_BOUNDS),
                                         depth=args.depth, ctx_cap=args.ctx_cap, limit=args.limit).to_json()


###############################################################################
# Output

def _render_text(report, indent=0):
    lines = []
    pad = '  ' * indent
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append('{}{}:'.format(pad, k))
            lines.extend(_render_text(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append('{}{}:'.format(pad, k))
            for x in v:
                lines.extend(_render_text(x, indent + 1))
                lines.append('')
        else:
            lines.append('{}{}: {}'.format(pad, k, json.dumps(v, sort_keys=True)))
    return lines


def render(report, as_json):
    if as_json:
        return json.dumps(report, indent=2, sort_keys=True)
    return '\n'.join(_render_text(report))


###############################################################################
# Arguments

def _names(text):
    names = [n.strip() for n in text.split(',') if n.strip()]
    if not names:
        raise argparse.ArgumentTypeError('expected a comma separated list of atoms')
    return names


def _natural(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('expected a non-negative integer, got {!r}'.format(text))
    if n < 0:
        raise argparse.ArgumentTypeError('expected a non-negative integer, got {!r}'.format(text))
    return n


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--json', action='store_true', help='emit the report as JSON')
    common.add_argument('--universe', type=_names, help='atoms, comma separated: a,b,c')
    common.add_argument('--max-premises', type=_natural, help='premises per candidate rule')
    common.add_argument('--max-hyps', type=_natural, help='hypotheses per premise')
    common.add_argument('--max-extra-rules', type=_natural, help='rules added to the root base')
    common.add_argument('--depth', type=_natural, default=1, help='derivation depth in fragments')
    common.add_argument('--mode', type=SemanticsMode, default=SemanticsMode.SANDQVIST,
                        help='sandqvist | kripke')
    common.add_argument('--engine', type=Engine, default=None, help='brute | prover')
    common.add_argument('--seed', type=int, default=0, help='seed of any random sampling')
    common.add_argument('--verbose', '-v', action='count', default=0, help='log to stderr')

    parser = _Parser(prog='bescat',
                     description='Base-extension semantics for intuitionistic propositional logic')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('decide', parents=[common], help='NJ derivability with a certificate')
    p.add_argument('sequent')
    p.add_argument('--max-worlds', type=_natural, default=MAX_COUNTERMODEL_WORLDS)
    p.add_argument('--crosscheck', type=_natural, default=0,
                   help='random Kripke models to test a derivable sequent on')
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser('validate', parents=[common], help='validity over base extensions')
    p.add_argument('sequent')
    p.add_argument('--base', help='base file; validity in that base instead of over all bases')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('complete', parents=[common], help='derivability in the flattened base N against NJ')
    p.add_argument('sequent')
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser('compare', parents=[common], help='Kripke-style against Sandqvist disjunction')
    p.add_argument('sequent')
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser('locale', parents=[common], help='the nucleus K on a poset of bases or a poset file')
    p.add_argument('--poset', help='poset file; otherwise the bases within the bounds')
    p.add_argument('--formula', action='append', help='formula to evaluate; repeatable')
    p.set_defaults(func=cmd_locale)

    p = sub.add_parser('fragment', parents=[common], help='a finite fragment of the category of worlds')
    p.add_argument('--base', required=True, help='base file of the root')
    p.add_argument('--ctx-cap', type=_natural, default=1, help='atoms per world context')
    p.add_argument('--formula', action='append', help='formula to interpret as a presheaf; repeatable')
    p.set_defaults(func=cmd_fragment)

    p = sub.add_parser('check-proof', parents=[common], help='type check an NJ term')
    p.add_argument('proof', help='proof file')
    p.add_argument('--normalize', action='store_true', help='also normalize the term')
    p.set_defaults(func=cmd_check_proof)

    p = sub.add_parser('strong-disjunction', parents=[common],
                       help='p -> q | r against (p -> q) | (p -> r) as presheaves')
    p.add_argument('--ctx-cap', type=_natural, default=0)
    p.add_argument('--limit', type=_natural, default=None, help='stop counting transformations here')
    p.set_defaults(func=cmd_strong_disjunction)
    return parser


def run(argv=None, out=None, err=None):
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError('{}: a command is required'.format(parser.prog))
        if args.verbose:
            logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO,
                                format='%(name)s %(levelname)s: %(message)s')
        report = args.func(args)
    except CapExceeded as e:
        print('refused: {}'.format(e), file=err)
        return EXIT_CAP
    except (ValueError, OSError) as e:
        print('error: {}'.format(e), file=err)
        return EXIT_USAGE
    print(render(report, args.json), file=out)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
