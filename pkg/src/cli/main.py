"""Command-line entry point: ``bounds``, ``sweep``, ``witness`` and ``validate``.

Exit codes: 0 success, 1 relation or property violation, 2 invalid input or any other
failure (tracking store, unexpected errors), 3 dimension mismatch.
"""
import argparse
import json
import logging as std_logging
import sys
from typing import List, Optional

import yaml

from src.bounds import hybrid_bound
from src.cli.files import (FileFormatError, dump_json, load_params, read_basis_file, read_state_file,
                           write_csv)
from src.cli.sweep import run_sweep
from src.cli.validate import Instance, random_instances, run_validation
from src.entropy import conditional_sum
from src.logger import configure_logger, logging
from src.multi import (MeasurementChain, chain_coefficients, multi_bound_opt, separable_frame,
                       witness as run_witness)
from src.qcore import (ConsistencyError, DimensionError, GuardError, RegistryError, UnsupportedError,
                       ValidationError, partial_trace, trusted_state)
from src.qcore.tolerances import DERIVED_TOL
from src.tracking import log_run

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_DIMENSION = 3


def cmd_bounds(args, params) -> int:
    state = read_state_file(args.state)
    bases = [read_basis_file(path) for path in args.basis]
    measured = 0 if args.memory_side == 'B' else 1
    lambdas = args.lambdas if args.lambdas else params['bounds']['lambdas']
    if len(bases) < 2:
        raise ValidationError("bounds needs at least two --basis files", amount=float(2 - len(bases)),
                              detail='N >= 2', invariant='parameter_range')

    if len(bases) == 2:
        report = hybrid_bound(state, bases[0], bases[1], lambdas=[float(x) for x in lambdas],
                              measured=measured)
        document = report.as_dict()
        satisfied = report.relation_satisfied
    else:
        chain = MeasurementChain(tuple(bases))
        best, ordering = multi_bound_opt(state, chain, measured=measured)
        coefficients = chain_coefficients(chain.reordered(ordering), partial_trace(state, [measured]))
        total = conditional_sum(state, bases, measured)
        satisfied = total >= best - DERIVED_TOL
        document = {'conditional_sum': total, 'multi_bound_opt': best, 'ordering': list(ordering),
                    'b_raw': coefficients.raw.tolist(), 'b_sorted': coefficients.sorted.tolist(),
                    'relation_satisfied': satisfied}
    document['memory_side'] = args.memory_side
    dump_json(document, args.out)
    return EXIT_OK if satisfied else EXIT_VIOLATION


def cmd_sweep(args, params) -> int:
    sweep = params['sweep']
    steps = args.steps
    if steps is None:
        steps = sweep['fig3_steps'] if args.scenario == 'fig3' else sweep['steps']
    grid = args.grid if args.grid is not None else sweep['grid']
    df = run_sweep(args.scenario, steps=steps, grid=grid)
    write_csv(df, args.out)
    log_run(params['tracking'], f'sweep_{args.scenario}', {'scenario': args.scenario, 'steps': steps, 'grid': grid},
            {'rows': len(df)}, [args.out])
    return EXIT_OK


def cmd_witness(args, params) -> int:
    config = params['witness']
    budget = args.budget if args.budget is not None else config['budget']
    seed = args.seed if args.seed is not None else config['seed']
    state = read_state_file(args.state)
    bases = [read_basis_file(path) for path in args.basis]
    split = [int(x) for x in args.split]
    if len(split) != 2 or min(split) < 2 or split[0] * split[1] != state.dim:
        raise UnsupportedError(f"split {split} is not a bipartition of a state of dimension {state.dim}")
    measured_state = state if list(state.dims) == split else trusted_state(state.matrix, split)

    chain = MeasurementChain(tuple(bases))
    frame = separable_frame(chain, split, budget=budget, seed=seed,
                            max_alternations=params['frame']['max_alternations'],
                            convergence=params['frame']['convergence'])
    verdict = run_witness(measured_state, chain, frame)
    document = verdict.as_dict()
    document.update({'seed': int(seed), 'budget': int(budget), 'split': split, 'heuristic_frame': frame.heuristic})
    dump_json(document, args.out)
    return EXIT_OK


def cmd_validate(args, params) -> int:
    config = params['validate']
    if args.state:
        if not args.basis or len(args.basis) < 2:
            raise ValidationError("replay needs the state file and at least two --basis files",
                                  detail='N >= 2', invariant='parameter_range')
        instances = [Instance(0, read_state_file(args.state), [read_basis_file(p) for p in args.basis])]
        run_params = {'replay': args.state}
    else:
        n = args.random if args.random is not None else config['n']
        if args.dims:
            dims = [int(d) for d in args.dims]
        elif args.dim:
            dims = [int(args.dim), int(args.dim)]
        else:
            dims = [int(d) for d in config['dims']]
        measurements = args.measurements if args.measurements is not None else config['measurements']
        seed = args.seed if args.seed is not None else config['seed']
        instances = random_instances(n, dims, measurements, seed)
        run_params = {'n': int(n), 'dims': dims, 'measurements': int(measurements), 'seed': int(seed)}

    summary = run_validation(instances, run_params, args.dump_dir)
    dump_json(summary, None)
    if args.summary:
        dump_json(summary, args.summary)
    log_run(params['tracking'], 'validate', run_params,
            {'violations': summary['violations'], 'checks': summary['checks']}, [args.summary])
    return EXIT_OK if summary['violations'] == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='eur', description="Entropic uncertainty bounds with quantum memory.")
    parser.add_argument('--params', type=str, default=None,
                        help="Path to params.yaml (defaults to the repository copy, then built-ins).")
    parser.add_argument('--log-level', type=str, default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help="Console log level.")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('bounds', help="Bound report for a state and two or more bases.")
    p.add_argument('--state', required=True, help="StateFile JSON.")
    p.add_argument('--basis', action='append', required=True, help="BasisFile JSON; repeat for each basis.")
    p.add_argument('--memory-side', choices=['A', 'B'], default='B', help="Subsystem acting as quantum memory.")
    p.add_argument('--lambda', dest='lambdas', type=float, action='append', default=None,
                   help="Weight for Q(lambda); repeatable.")
    p.add_argument('--out', default=None, help="Report path (stdout when omitted).")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser('sweep', help="Figure data as CSV.")
    p.add_argument('--scenario', required=True, help="fig1, fig2, fig3 or fig4.")
    p.add_argument('--steps', type=int, default=None, help="Grid points for fig1, fig2 and fig3.")
    p.add_argument('--grid', type=int, default=None, help="Points per axis for fig4.")
    p.add_argument('--out', default=None, help="CSV path (stdout when omitted).")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser('witness', help="Entanglement witness from a chain of bases.")
    p.add_argument('--state', required=True, help="StateFile JSON of the measured system.")
    p.add_argument('--basis', action='append', required=True, help="BasisFile JSON; repeat for each basis.")
    p.add_argument('--split', type=int, nargs=2, required=True, metavar=('DX', 'DY'),
                   help="Bipartition of the measured system.")
    p.add_argument('--budget', type=int, default=None, help="Random restarts per frame entry.")
    p.add_argument('--seed', type=int, default=None, help="Seed of the frame search.")
    p.add_argument('--out', default=None, help="Verdict path (stdout when omitted).")
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser('validate', help="Randomized property checks, or replay of one instance.")
    p.add_argument('--random', type=int, default=None, help="Number of random instances.")
    p.add_argument('--dim', type=int, default=None, help="Both subsystem dimensions.")
    p.add_argument('--dims', type=int, nargs=2, default=None, metavar=('DA', 'DB'))
    p.add_argument('--measurements', type=int, default=None, help="Bases per instance.")
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--summary', default=None, help="Also write the summary JSON here.")
    p.add_argument('--dump-dir', default=None, help="Directory for the worst failing instance.")
    p.add_argument('--state', default=None, help="Replay: StateFile JSON.")
    p.add_argument('--basis', action='append', default=None, help="Replay: BasisFile JSON; repeatable.")
    p.set_defaults(handler=cmd_validate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        configure_logger(getattr(std_logging, args.log_level))

    logging.info('Starting %s', args.command)
    try:
        params = load_params(args.params)
        code = args.handler(args, params)
    except DimensionError as e:
        logging.error('Dimension mismatch: %s', e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DIMENSION
    except ValidationError as e:
        logging.error('Invalid input: %s', e)
        sys.stderr.write(f"error: {e}\n{json.dumps(e.violations, default=str)}\n")
        return EXIT_INPUT
    except (GuardError, UnsupportedError, RegistryError, FileFormatError, OSError, yaml.YAMLError) as e:
        logging.error('Rejected input: %s', e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    except ConsistencyError as e:
        logging.error('Internal consistency check failed: %s', e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_VIOLATION
    except Exception as e:
        logging.error('Unexpected error during %s: %s', args.command, e)
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_INPUT
    logging.info('Finished %s with exit code %d', args.command, code)
    return code


if __name__ == '__main__':
    sys.exit(main())
