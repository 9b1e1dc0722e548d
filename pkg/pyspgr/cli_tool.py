#!/usr/bin/env python

# Copyright (c) 2026  pyspgr developers
#
# This library is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# This library is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this library; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA

import argparse
import csv
import json
import logging
import sys

import pyspgr
from pyspgr.combinat import IndexSet, FlagWord
from pyspgr.constants import (EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION,
        DEFAULT_SEED, DEFAULT_TRIALS, DEFAULT_TWO_N_MAX)
from pyspgr.errors import SpgrError, VerificationError

# pairs whose count disagrees with a printed value, see DESIGN.md
ERRATA = {
    ((1, 2, 3), (1, 3, 7), 8): 'erratum: a printed value of 2 is known for '
            'this pair; brute force and the closed form both give 1; '
            'see DESIGN.md',
}


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with :data:`EXIT_USAGE`."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def two_n(value):
    msg = None
    try:
        value = int(value, 10)
        if value < 2 or value % 2:
            msg = '%d is not a positive even number' % value
    except ValueError:
        msg = 'could not convert %r to a number' % value
    if msg is not None:
        raise argparse.ArgumentTypeError(msg)
    return value


def natural(value):
    msg = None
    try:
        value = int(value, 10)
        if value < 0:
            msg = '%d is negative' % value
    except ValueError:
        msg = 'could not convert %r to a number' % value
    if msg is not None:
        raise argparse.ArgumentTypeError(msg)
    return value


def int_list(value):
    """``1,3,7`` as a tuple; the empty string is the empty list."""
    try:
        return tuple(int(v, 10) for v in value.split(',') if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
                'could not convert %r to a comma separated list' % value)


def index_list(value):
    """Like :func:`int_list`, but the entries must be strictly ascending."""
    values = int_list(value)
    if any(a >= b for a, b in zip(values, values[1:])):
        raise argparse.ArgumentTypeError(
                '%r is not strictly ascending' % value)
    return values


def _index(values, size):
    return IndexSet(values, size)


def _config(args):
    return pyspgr.SampleConfig(seed=args.seed)


def _emit(args, out, data, header=None, rows=None, lines=None,
        default='json'):
    fmt = args.format or default
    if fmt == 'json':
        json.dump(data, out, indent=2, sort_keys=True)
        out.write('\n')
    elif fmt == 'csv':
        if rows is None:
            raise SpgrError(pyspgr.ERR_PARSE, 'no CSV form for this output')
        writer = csv.writer(out, lineterminator='\n')
        if header:
            writer.writerow(header)
        writer.writerows(rows)
    else:
        for line in (lines if lines is not None else [json.dumps(data)]):
            out.write('%s\n' % line)


def enumerate_cmd(args, out):
    if args.kind == 'flag':
        words = pyspgr.flag_enumerate(args.two_n // 2, args.symplectic,
                length=args.d)
        _emit(args, out, [list(w) for w in words], header=('word',),
                rows=[[str(w)] for w in words],
                lines=[str(w) for w in words])
        return
    if args.d is None:
        raise SpgrError(pyspgr.ERR_SHAPE_MISMATCH, '--d is required')
    below = _index(args.below, args.two_n) if args.below else None
    indices = pyspgr.enumerate_indices(args.d, args.two_n, args.symplectic,
            below)
    _emit(args, out, [list(i.entries) for i in indices], header=('index',),
            rows=[[str(i)] for i in indices], lines=[str(i) for i in indices])


def equation_cmd(args, out):
    ip = _index(args.i_prime, 2 * args.n)
    sec = pyspgr.build_E(ip, args.n, args.d)
    _emit(args, out, sec.to_json(), header=('index', 'coeff'),
            rows=[[item['index'], item['coeff']] for item in sec.to_json()],
            lines=[str(sec)])


def restrict_cmd(args, out):
    ip = _index(args.i_prime, args.two_n)
    i = _index(args.i, args.two_n)
    sec = pyspgr.restrict(pyspgr.build_E(ip, i.n), i)
    zero = pyspgr.restriction_zero(ip, i)
    data = dict(i_prime=list(ip.entries), index=list(i.entries), zero=zero,
            section=sec.to_json())
    _emit(args, out, data, lines=[str(sec)])


def count_cmd(args, out):
    j = _index(args.j, args.two_n)
    i = _index(args.i, args.two_n)
    data = dict(j=list(j.entries), i=list(i.entries),
            n=pyspgr.count_nonzero(j, i))
    note = ERRATA.get((j.entries, i.entries, args.two_n))
    if note:
        data['note'] = note
    _emit(args, out, data, lines=['N(%s; %s) = %d' % (j, i, data['n'])])


def classify_cmd(args, out):
    records = pyspgr.classify(args.d, args.two_n)
    _emit(args, out, [r.to_json() for r in records],
            header=pyspgr.ClassificationRecord.CSV_HEADER,
            rows=[r.row() for r in records],
            lines=[' '.join(r.row()) for r in records], default='csv')


def tangent_cmd(args, out):
    i = _index(args.i, args.two_n)
    data = dict(index=list(i.entries),
            tangent_dim_a=pyspgr.tangent_dim_a(i),
            tangent_codim_c=pyspgr.tangent_codim_c_direct(i),
            smooth_a=pyspgr.smooth_a(i),
            smooth_c=pyspgr.smooth_c(i),
            smooth_c_general=pyspgr.smooth_c_general(i),
            smooth_c_rectangle=pyspgr.smooth_c_rectangle(i),
            smooth_c_printed=pyspgr.smooth_c_trichotomy(i),
            lci=pyspgr.is_lci(i),
            lci_intrinsic=pyspgr.lci_intrinsic(i))
    _emit(args, out, data)


def flag_cmd(args, out):
    w = FlagWord(args.w, args.two_n)
    symplectic = pyspgr.is_symplectic(w)
    data = dict(word=list(w), symplectic=symplectic,
            lift_a=list(pyspgr.lift_a(w)))
    if symplectic:
        data['lift_c'] = list(pyspgr.lift_c(w))
        data['dim_a'], data['dim_c'] = pyspgr.flag_dims(w)
        if w.is_full:
            data['lci'] = pyspgr.flag_is_lci(w)
            data['lci_pattern'] = pyspgr.flag_lci_pattern(w)
    _emit(args, out, data)


def sample_cmd(args, out):
    cfg = _config(args)
    count = args.samples or 1
    points = []
    for draw in range(count):
        if args.kind == 'isotropic':
            if args.d is None:
                raise SpgrError(pyspgr.ERR_SHAPE_MISMATCH, '--d is required')
            v = pyspgr.sample_isotropic(args.d, args.two_n, cfg, draw)
        elif args.kind in ('schubert', 'schubert-a'):
            v = pyspgr.sample_schubert(_index(args.i, args.two_n),
                    args.kind == 'schubert', cfg, draw)
        else:
            v = pyspgr.sample_flag(FlagWord(args.w, args.two_n), True, cfg,
                    draw)
        points.append(v.to_json())
    _emit(args, out, points)


def verify_cmd(args, out):
    results = pyspgr.run_suites(args.suite or ['all'], args.two_n_max,
            args.samples or DEFAULT_TRIALS, _config(args))
    _emit(args, out, [r.to_json() for r in results],
            header=('suite', 'passed', 'checks', 'counterexample'),
            rows=[[r.name, r.passed, r.checks, r.counterexample or '']
                for r in results],
            lines=[r.line() for r in results], default='text')
    if not all(r.passed for r in results):
        return EXIT_VERIFICATION


def main(args=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('json', 'csv', 'text'),
            default=None, help='output format (default depends on command)')
    common.add_argument('--out', default=None, metavar='FILE',
            help='write output to FILE instead of stdout')
    common.add_argument('--seed', type=natural, default=DEFAULT_SEED,
            help='sampling seed')
    common.add_argument('--samples', type=natural, default=None,
            help='number of sampled points or trials')

    parser = ArgumentParser(
            description='Symplectic Plücker relations and Schubert '
            'varieties in exact arithmetic.')
    parser.add_argument('-v', action='store_true', dest='verbose',
            help='be more verbose')

    _sub = parser.add_subparsers(title='Commands')

    # enumerate sub command
    subparser = _sub.add_parser('enumerate', parents=[common],
            help='list index sets or flag words in lexicographic order')
    subparser.add_argument('--two-n', type=two_n, required=True)
    subparser.add_argument('--d', type=natural, default=None)
    subparser.add_argument('--symplectic', action='store_true',
            help='only symplectic ones')
    subparser.add_argument('--below', type=index_list, default=None,
            help='only index sets in the Bruhat interval below this one')
    subparser.add_argument('--kind', choices=('index', 'flag'),
            default='index')
    subparser.set_defaults(func=enumerate_cmd)

    # equation sub command
    subparser = _sub.add_parser('equation', parents=[common],
            help='the linear section E_{i\'}')
    subparser.add_argument('--i-prime', type=index_list, required=True,
            metavar='LIST')
    subparser.add_argument('--n', type=natural, required=True)
    subparser.add_argument('--d', type=natural, default=None)
    subparser.set_defaults(func=equation_cmd)

    # restrict sub command
    subparser = _sub.add_parser('restrict', parents=[common],
            help='restrict E_{i\'} to X^A(i)')
    subparser.add_argument('--i-prime', type=index_list, required=True,
            metavar='LIST')
    subparser.add_argument('--i', type=index_list, required=True,
            metavar='LIST')
    subparser.add_argument('--two-n', type=two_n, required=True)
    subparser.set_defaults(func=restrict_cmd)

    # count sub command
    subparser = _sub.add_parser('count', parents=[common],
            help='surviving local equations N(j, i)')
    subparser.add_argument('--j', type=index_list, required=True,
            metavar='LIST')
    subparser.add_argument('--i', type=index_list, required=True,
            metavar='LIST')
    subparser.add_argument('--two-n', type=two_n, required=True)
    subparser.set_defaults(func=count_cmd)

    # classify sub command
    subparser = _sub.add_parser('classify', parents=[common],
            help='classify every symplectic index set of Gr(d,2n)')
    subparser.add_argument('--d', type=natural, required=True)
    subparser.add_argument('--two-n', type=two_n, required=True)
    subparser.set_defaults(func=classify_cmd)

    # tangent sub command
    subparser = _sub.add_parser('tangent', parents=[common],
            help='tangent space and smoothness report')
    subparser.add_argument('--i', type=index_list, required=True,
            metavar='LIST')
    subparser.add_argument('--two-n', type=two_n, required=True)
    subparser.set_defaults(func=tangent_cmd)

    # flag sub command
    subparser = _sub.add_parser('flag', parents=[common],
            help='dimensions and lci test of a flag Schubert variety')
    subparser.add_argument('--w', type=int_list, required=True,
            metavar='LIST')
    subparser.add_argument('--two-n', type=two_n, required=True)
    subparser.set_defaults(func=flag_cmd)

    # sample sub command
    subparser = _sub.add_parser('sample', parents=[common],
            help='exact random points')
    subparser.add_argument('--kind', required=True,
            choices=('isotropic', 'schubert', 'schubert-a', 'flag'))
    subparser.add_argument('--two-n', type=two_n, required=True)
    subparser.add_argument('--d', type=natural, default=None)
    subparser.add_argument('--i', type=index_list, default=(),
            metavar='LIST')
    subparser.add_argument('--w', type=int_list, default=(),
            metavar='LIST')
    subparser.set_defaults(func=sample_cmd)

    # verify sub command
    subparser = _sub.add_parser('verify', parents=[common],
            help='run verification suites')
    subparser.add_argument('--suite', action='append',
            choices=pyspgr.SUITES + ('all',),
            help='suite to run, may be repeated (default: all)')
    subparser.add_argument('--two-n-max', type=two_n,
            default=DEFAULT_TWO_N_MAX)
    subparser.set_defaults(func=verify_cmd)

    args = parser.parse_args(args)

    if not hasattr(args, 'func'):
        parser.print_usage()
        return EXIT_USAGE

    logging.basicConfig()
    if args.verbose:
        logging.getLogger('pyspgr').setLevel(logging.DEBUG)

    out = None
    ret = EXIT_OK
    try:
        out = sys.stdout if args.out is None else open(args.out, 'w',
                encoding='utf-8', newline='\n')
        ret = args.func(args, out) or EXIT_OK
    except VerificationError as e:
        print(e, file=sys.stderr)
        ret = EXIT_VERIFICATION
    except (SpgrError, IOError) as e:
        print(e, file=sys.stderr)
        ret = EXIT_USAGE
    finally:
        if out is not None and out is not sys.stdout:
            out.close()

    return ret

if __name__ == '__main__':
    sys.exit(main())
