'''
Command-line interface for regmfg.

Subcommands: ``solve`` (single lambda), ``continue`` (lambda path),
``sweep-eps`` (epsilon sweep), ``verify`` (diagnostics of a stored solution),
``mms-convergence`` (manufactured-solution order study) and ``seed``
(print the constant lambda = 0 solution).

Exit codes: 0 success, 1 configuration error, 2 solver failure (stall,
positivity, certificate), 3 I/O error.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = ['cli_main', 'main']

import argparse
import logging
import os
import sys

#import exceptions
from .exceptions import(
	ArrayError,
	CertificateViolated,
	ConfigError,
	FileError,
	LengthError,
	LinearSolveFailed,
	NonpositiveDensity,
	ParameterError,
	SeedError,
	SolverError,
	)

#import helper functions
from .config import(
	load_config,
	resolve_output_dir,
	)

from .continuation import(
	continue_lambda,
	mms_convergence,
	seed_v0,
	sweep_epsilon,
	sweep_holder_fit,
	sweep_summary,
	)

from .diagnostics import(
	diagnose,
	)

from .grid import(
	PeriodicGrid,
	)

from .hamiltonian import(
	PowerHamiltonian,
	)

from .io_helper import(
	write_json,
	write_solution_csv,
	)

from .solver import(
	newton,
	)

from .system import(
	ProblemParams,
	State,
	)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_SOLVER = 2
EXIT_IO = 3


#create the output directory
def _outdir(config, args):

	path = resolve_output_dir(config, getattr(args, 'out', None))

	try:
		os.makedirs(path, exist_ok = True)

	except OSError as err:
		raise FileError('cannot create output directory %s: %s' % (path, err.strerror))

	return path

#frame -> json-safe records with NaN as null
def _records(frame):

	frame = frame.astype(object).where(frame.notna(), None)

	return frame.reset_index().to_dict(orient = 'records')

#write the files of one continuation trace
def _write_trace(trace, config, outdir):

	if config.emit_diagnostics:
		for i, step in enumerate(trace.steps):
			write_json(
				dict(step.diagnostics.to_dict(), iterations = step.iterations),
				os.path.join(outdir, 'step_%03d.json' % i))

	if config.emit_fields and trace.steps:
		params = config.params.with_epsilon(trace.epsilon).with_lambda(trace.reached_lambda)
		write_solution_csv(trace.final_state, params, os.path.join(outdir, 'solution.csv'))

	if config.emit_plot_data and trace.steps:
		trace.summary().to_csv(
			os.path.join(outdir, 'path.csv'),
			index = False,
			float_format = '%.17g',
			lineterminator = '\n')

	summary = {
		'epsilon' : trace.epsilon,
		'reached_lambda' : trace.reached_lambda,
		'stalled' : trace.stalled,
		'message' : trace.message,
		'accepted_steps' : len(trace.steps),
		'lambdas' : trace.lambdas.tolist(),
		'path_maxima' : trace.path_maxima().to_dict() if trace.steps else {},
		'path_lower_bound' : trace.path_lower_bound() if trace.steps else None,
		}

	write_json(summary, os.path.join(outdir, 'summary.json'))

	return summary

#solve at one lambda from the seed
def _cmd_solve(args):

	config = load_config(args.config)
	params = config.params
	outdir = _outdir(config, args)

	seed = seed_v0(params.with_lambda(0.0))
	rep = newton(seed, params, config.newton)
	diag = diagnose(rep.final_state, params, tol = config.newton.tol_residual)

	if config.emit_fields:
		write_solution_csv(rep.final_state, params, os.path.join(outdir, 'solution.csv'))

	if config.emit_diagnostics:
		write_json(
			dict(diag.to_dict(), iterations = rep.iterations),
			os.path.join(outdir, 'diagnostics.json'))

	print('converged in %d iterations, |F| = %.3e, min m = %.10g'
		% (rep.iterations, rep.final_residual, diag.m_min))

	return EXIT_OK

#lambda continuation
def _cmd_continue(args):

	config = load_config(args.config)
	outdir = _outdir(config, args)

	trace = continue_lambda(config.params, config.schedule, config.newton)
	_write_trace(trace, config, outdir)

	print('reached_lambda = %.10g after %d accepted steps'
		% (trace.reached_lambda, len(trace.steps)))

	if trace.stalled:
		print('stalled: %s' % trace.message, file = sys.stderr)
		return EXIT_SOLVER

	return EXIT_OK

#epsilon sweep
def _cmd_sweep(args):

	config = load_config(args.config)
	outdir = _outdir(config, args)

	traces = sweep_epsilon(config.params, config.schedule, config.newton, jobs = args.jobs)

	for tr in traces:
		sub = os.path.join(outdir, 'eps_%.6g' % tr.epsilon)
		os.makedirs(sub, exist_ok = True)
		_write_trace(tr, config, sub)

	table = sweep_summary(traces)
	done = [t for t in traces if t.completed]

	summary = {
		'members' : _records(table) if len(table) else [],
		'failed' : {'%.6g' % t.epsilon : t.message for t in traces if not t.completed},
		}

	if len(done) >= 2:
		summary['holder_fit'] = _records(sweep_holder_fit(traces).rename_axis('field'))

	write_json(summary, os.path.join(outdir, 'summary.json'))

	print(table.to_string())

	return EXIT_OK if len(done) == len(traces) else EXIT_SOLVER

#diagnostics of a stored solution
def _cmd_verify(args):

	config = load_config(args.config)
	outdir = _outdir(config, args)

	state = State.from_csv(args.solution)
	params = config.params.with_grid(PeriodicGrid(state.grid.n))

	diag = diagnose(state, params, tol = config.newton.tol_residual)
	write_json(diag.to_dict(), os.path.join(outdir, 'verify.json'))

	print(diag.to_series().to_string())

	return EXIT_OK

#manufactured-solution study
def _cmd_mms(args):

	config = load_config(args.config)
	outdir = _outdir(config, args)

	study = mms_convergence(config.params, levels = tuple(args.levels))

	study.to_csv(
		os.path.join(outdir, 'mms.csv'),
		index = False,
		float_format = '%.17g',
		lineterminator = '\n')

	write_json({'levels' : _records(study.set_index('n'))}, os.path.join(outdir, 'mms.json'))

	print(study.to_string(index = False))

	return EXIT_OK

#print the lambda = 0 seed
def _cmd_seed(args):

	params = ProblemParams(
		hamiltonian = PowerHamiltonian(args.gamma),
		alpha = args.alpha,
		epsilon = args.epsilon,
		lam = 0.0,
		grid = PeriodicGrid(args.n))

	state = seed_v0(params)

	print('m0 = %.17g' % state.m.values[0])
	print('u0 = %.17g' % state.u.values[0])

	return EXIT_OK

#build the argument parser
def _build_parser():

	p = argparse.ArgumentParser(
		prog = 'regmfg',
		description = 'Continuation solver and a-priori verification for the '
			'regularized stationary 1-D mean-field game system.')

	p.add_argument(
		'-v', '--verbose',
		action = 'count',
		default = 0,
		help = 'Increase logging verbosity (-v info, -vv debug).')

	sub = p.add_subparsers(dest = 'command', required = True)

	def with_config(name, helptext):
		sp = sub.add_parser(name, help = helptext)
		sp.add_argument('--config', required = True, help = 'Path to TOML config.')
		sp.add_argument('--out', default = None, help = 'Output directory override.')

		return sp

	with_config('solve', 'Solve at the configured lambda from the seed.')
	with_config('continue', 'Continue in lambda from 0 to 1.')

	sp = with_config('sweep-eps', 'Run the lambda path for each epsilon of the list.')
	sp.add_argument('--jobs', type = int, default = 1, help = 'Worker processes (default: 1).')

	sp = with_config('verify', 'Recompute diagnostics of a stored solution CSV.')
	sp.add_argument('--solution', required = True, help = 'Path to solution CSV.')

	sp = with_config('mms-convergence', 'Manufactured-solution convergence study.')
	sp.add_argument(
		'--levels',
		type = int,
		nargs = '+',
		default = [64, 128, 256, 512],
		help = 'Grid sizes (default: 64 128 256 512).')

	sp = sub.add_parser('seed', help = 'Print the constant lambda = 0 solution.')
	sp.add_argument('--epsilon', type = float, required = True)
	sp.add_argument('--gamma', type = float, required = True)
	sp.add_argument('--alpha', type = float, required = True)
	sp.add_argument('--n', type = int, default = 8, help = 'Grid size (default: 8).')

	return p

_COMMANDS = {
	'solve' : _cmd_solve,
	'continue' : _cmd_continue,
	'sweep-eps' : _cmd_sweep,
	'verify' : _cmd_verify,
	'mms-convergence' : _cmd_mms,
	'seed' : _cmd_seed,
	}

#define the command-line entry point
def cli_main(argv = None):
	'''
	Runs the command line and returns the exit code.

	Parameters
	----------
	argv : None or list
		Arguments without the program name. Defaults to ``sys.argv[1:]``.

	Returns
	-------
	code : int
		0 success, 1 configuration error, 2 solver failure, 3 I/O error.
	'''

	args = _build_parser().parse_args(argv)

	level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
	logging.basicConfig(level = level, format = '%(levelname)s %(name)s: %(message)s')

	try:
		return _COMMANDS[args.command](args)

	except (ConfigError, ParameterError) as err:
		print('regmfg: configuration error: %s' % err, file = sys.stderr)
		return EXIT_CONFIG

	except (
		SolverError,
		SeedError,
		CertificateViolated,
		LinearSolveFailed,
		NonpositiveDensity) as err:
		print('regmfg: solver failure: %s' % err, file = sys.stderr)
		return EXIT_SOLVER

	except (FileError, ArrayError, LengthError, OSError) as err:
		print('regmfg: I/O error: %s' % err, file = sys.stderr)
		return EXIT_IO

#console-script entry point
def main():
	sys.exit(cli_main())
