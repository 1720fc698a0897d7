# +
"""
python -m sl2hat.cl <verb> [options]

Verbs: verify-identity, group-oracles, shapovalov, singular, continue-xy,
derham-ranks, derham-relations, chain-square.
Defaults come from the functions, then from an ARGS file in the working
directory, then from the flags. The JSON report goes to stdout (or -o),
logs go to stderr. Exit status: 0 all checks hold, 1 a check failed,
2 invalid options.
"""
import argparse
import sys
from sympy import SympifyError
from sl2hat.cl import campaign_args, emit
from sl2hat.cl.identity import identities, group_oracles
from sl2hat.cl.shapovalov import shapovalov, singular, continue_xy
from sl2hat.cl.derham import derham_ranks, derham_relations
from sl2hat.cl.chain import chain_square
from sl2hat.derham.complex import KappaZero
from sl2hat.util.parallel import mpi_init

VERBS = {'verify-identity': identities,
         'group-oracles': group_oracles,
         'shapovalov': shapovalov,
         'singular': singular,
         'continue-xy': continue_xy,
         'derham-ranks': derham_ranks,
         'derham-relations': derham_relations,
         'chain-square': chain_square}


def parser():
    p = argparse.ArgumentParser(prog='sl2hat.cl',
                                description='exact sl2-hat verification campaigns')
    p.add_argument('-o', '--output', type=str, default=None,
                   help='report path (default: stdout)')
    p.add_argument('--mpi', action='store_true',
                   help='split checks over an MPI process group')
    verbs = p.add_subparsers(dest='verb', required=True)

    v = verbs.add_parser('verify-identity')
    v.add_argument('--side', choices=['A', 'B'])
    v.add_argument('--a-max', dest='a_max', type=int)
    v.add_argument('--no-rho', dest='via_rho', action='store_const',
                   const=False, help='skip the chi* route for side B')

    v = verbs.add_parser('group-oracles')
    v.add_argument('--a-max', dest='a_max', type=int)

    v = verbs.add_parser('shapovalov')
    v.add_argument('--degree', type=str, help='p1,p2')
    v.add_argument('--points', type=int)
    v.add_argument('--seed', type=int)

    v = verbs.add_parser('singular')
    v.add_argument('--which', choices=['X', 'Y'])
    v.add_argument('--a', type=int)
    v.add_argument('--points', type=int)
    v.add_argument('--seed', type=int)

    v = verbs.add_parser('continue-xy')
    v.add_argument('--which', choices=['X', 'Y'])
    v.add_argument('--a', type=int)
    v.add_argument('--k0', type=str, help='rational, e.g. 2/7')

    v = verbs.add_parser('derham-ranks')
    v.add_argument('--n', type=int)
    v.add_argument('--A', type=int)
    v.add_argument('--seed', type=int)
    v.add_argument('--draws', type=int)
    v.add_argument('--config', type=str, help='MasterConfig JSON file')
    v.add_argument('--triplets', action='store_const', const=True,
                   help='include the differential matrix')

    v = verbs.add_parser('derham-relations')
    v.add_argument('--n', type=int)
    v.add_argument('--A', type=int)
    v.add_argument('--seed', type=int)
    v.add_argument('--config', type=str, help='MasterConfig JSON file')

    v = verbs.add_parser('chain-square')
    v.add_argument('--n', type=int)
    v.add_argument('--a-max', dest='a_max', type=int)
    v.add_argument('--draws', type=int)
    v.add_argument('--seed', type=int)
    v.add_argument('--config', type=str, help='MasterConfig JSON file')
    return p


def main(argv=None):
    p = parser()
    args = vars(p.parse_args(argv))
    verb, output, mpi = args.pop('verb'), args.pop('output'), args.pop('mpi')
    if mpi:
        mpi_init()
    func = VERBS[verb]
    kwargs = campaign_args(func, **args)
    try:
        report = func(**kwargs)
    except (ValueError, TypeError, SympifyError, OSError, KappaZero) as err:
        sys.stderr.write(f'{verb}: {err}\n')
        return 2
    return emit(report, output)


def test_main():
    assert main(['verify-identity', '--side', 'A', '--a-max', '2']) == 0
    assert main(['derham-ranks', '--n', '2', '--A', '2']) == 0
    assert main(['singular', '--a', '0']) == 2
    assert main(['continue-xy', '--k0', 'abc']) == 2
    assert main(['derham-ranks', '--config', 'no/such/config.json']) == 2
    try:
        main(['derham-ranks', '--n', 'x'])
        raise AssertionError('invalid flag accepted')
    except SystemExit as err:
        assert err.code == 2


if __name__ == '__main__':
    sys.exit(main())
