'''
This module contains the constant seed at lambda = 0, the adaptive lambda
continuation from that seed to the full potential, the epsilon sweep and the
manufactured-solution convergence study.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'ContinuationSchedule',
	'ContinuationStep',
	'ContinuationTrace',
	'continue_lambda',
	'mms_convergence',
	'seed_v0',
	'sweep_epsilon',
	'sweep_holder_fit',
	'sweep_summary',
	]

import logging
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import pickle
import warnings

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from scipy.optimize import bisect

#import exceptions
from .exceptions import(
	BisectionStall,
	BracketFailure,
	ContinuationStalled,
	LinearSolveFailed,
	NonpositiveDensity,
	ParameterError,
	SeedError,
	SmallnessWarning,
	SolverError,
	)

#import helper functions
from .diagnostics import(
	diagnose,
	fit_holder_growth,
	)

from .grid import(
	PeriodicGrid,
	)

from .plotting_helper import(
	_finish_axis,
	_plot_path,
	)

from .solver import(
	NewtonOptions,
	newton,
	)

from .summary_helper import(
	_calc_path_maxima,
	_calc_sweep_info,
	_calc_trace_info,
	)

from .system import(
	State,
	residual_norm,
	)

from .system_helper import(
	_mms_fields,
	_mms_sources,
	)

logger = logging.getLogger(__name__)

#root tolerance of the seed equation
SEED_TOL = 1e-14

#errors that make a corrector attempt fail without aborting the path
_CORRECTOR_ERRORS = (SolverError, LinearSolveFailed, NonpositiveDensity)


@dataclass
class ContinuationSchedule:
	'''
	Step control of the lambda continuation. The step grows by
	`growth_factor` after `success_streak` consecutive accepted steps and
	halves on every corrector failure.
	'''

	lambda_init_step: float = 0.1
	lambda_min_step: float = 1e-4
	growth_factor: float = 1.5
	success_streak: int = 2
	epsilon_list: tuple = ()

	def __post_init__(self):

		if not 0 < self.lambda_init_step <= 1:
			raise ParameterError(
				'lambda_init_step must lie in (0, 1], got %r' % self.lambda_init_step,
				field = 'lambda_init_step')

		if not 0 < self.lambda_min_step <= self.lambda_init_step:
			raise ParameterError(
				'need 0 < lambda_min_step <= lambda_init_step, got %r, %r'
				% (self.lambda_min_step, self.lambda_init_step),
				field = 'lambda_min_step')

		if not self.growth_factor >= 1:
			raise ParameterError(
				'growth_factor must be >= 1', field = 'growth_factor')

		if int(self.success_streak) != self.success_streak or self.success_streak < 1:
			raise ParameterError(
				'success_streak must be a positive integer', field = 'success_streak')

		eps = tuple(float(e) for e in self.epsilon_list)

		if any(not 0 < e <= 1 for e in eps):
			raise ParameterError(
				'epsilon_list entries must lie in (0, 1]', field = 'epsilon_list')

		if any(b >= a for a, b in zip(eps[:-1], eps[1:])):
			raise ParameterError(
				'epsilon_list must be strictly decreasing', field = 'epsilon_list')


		self.epsilon_list = eps


@dataclass
class ContinuationStep:
	'''
	One accepted step: lambda, converged state, diagnostics and the number of
	Newton iterations the corrector needed.
	'''

	lam: float
	state: State
	diagnostics: object
	iterations: int


class ContinuationTrace(object):
	__doc__='''
	Class for the ordered record of accepted lambda steps of one continuation
	run.

	Parameters
	----------
	epsilon : float
		Regularization of the run.

	steps : None or list
		Accepted ``rm.ContinuationStep`` instances, lambda strictly
		increasing. Defaults to an empty list.

	Examples
	--------
	Running the continuation and plotting the density along the path::

		#import modules
		import regmfg as rm
		import matplotlib.pyplot as plt

		params = rm.ProblemParams(
			hamiltonian = rm.PowerHamiltonian(1.5),
			alpha = 1.0,
			epsilon = 0.1,
			lam = 1.0,
			grid = rm.PeriodicGrid(256),
			potential = rm.TrigPotential(cos = [0.5]))

		trace = rm.continue_lambda(params)
		trace.summary()

		fig, ax = plt.subplots(1, 1)
		ax = trace.plot(ax = ax)

	**Attributes**

	steps : list
		Accepted steps.

	reached_lambda : float
		Lambda of the last accepted step.

	stalled : Boolean
		`True` if the step shrank below the minimum before lambda = 1, or if
		the run failed before its first step.

	message : str
		Failure description, empty on success.

	epsilon : float
		Regularization of the run.
	'''

	def __init__(self, epsilon, steps = None):

		self.epsilon = float(epsilon)
		self.steps = [] if steps is None else list(steps)
		self.stalled = False
		self.message = ''

	def __repr__(self):
		return 'ContinuationTrace(epsilon=%g, steps=%d, reached_lambda=%g)' \
			% (self.epsilon, len(self.steps), self.reached_lambda)

	@property
	def reached_lambda(self):
		return self.steps[-1].lam if self.steps else 0.0

	@property
	def lambdas(self):
		return np.array([s.lam for s in self.steps])

	@property
	def final_state(self):
		return self.steps[-1].state if self.steps else None

	@property
	def completed(self):
		return bool(self.steps) and self.reached_lambda == 1.0

	#define method for appending a step
	def append(self, step):
		'''
		Appends an accepted step. Lambda must increase strictly.
		'''

		if self.steps and not step.lam > self.steps[-1].lam:
			raise ParameterError(
				'lambda must increase strictly along a trace, %r after %r'
				% (step.lam, self.steps[-1].lam))

		self.steps.append(step)

	#define method for the per-step table
	def summary(self):
		'''
		Returns one row per accepted step as a ``pd.DataFrame``.
		'''

		return _calc_trace_info(self)

	#define method for the maxima along the path
	def path_maxima(self):
		'''
		Returns the maxima over the path of E1, E2, E3, the mass, I1 and I2,
		and the minima of m_min and the certificate, as a ``pd.Series``.
		'''

		return _calc_path_maxima(self)

	#define method for the uniform lower bound
	def path_lower_bound(self):
		'''
		Returns the smallest certificate over the accepted steps, a lower
		bound on m valid along the whole computed path.
		'''

		return float(min(s.diagnostics.m_lower_bound_certificate for s in self.steps))

	#define method for exporting the trace
	def to_dict(self):
		'''
		Returns the trace as nested built-in types (JSON-ready).
		'''

		return {
			'epsilon' : self.epsilon,
			'reached_lambda' : self.reached_lambda,
			'stalled' : self.stalled,
			'message' : self.message,
			'steps' : [
				{
					'lambda' : s.lam,
					'iterations' : s.iterations,
					'diagnostics' : s.diagnostics.to_dict(),
				} for s in self.steps],
			}

	#define plotting method
	def plot(self, ax = None, keys = ('m_min', 'certificate')):
		'''
		Method for plotting per-step quantities against lambda.

		Parameters
		----------
		ax : None or matplotlib.axis
			Axis to plot on. If `None`, automatically creates a
			``matplotlib.axis`` instance to return. Defaults to `None`.

		keys : tuple
			Columns of ``summary()`` to plot. Defaults to
			``('m_min', 'certificate')``.

		Returns
		-------
		ax : matplotlib.axis
			Updated axis instance with plotted data.
		'''

		#create axis if necessary
		if ax is None:
			_, ax = plt.subplots(1, 1)

		df = self.summary()
		ax = _plot_path(
			ax,
			df['lambda'].values,
			[df[k].values for k in keys],
			list(keys))

		return _finish_axis(ax, (r'$\lambda$', 'value'))


#define function for the constant seed
def seed_v0(params):
	'''
	Constant solution of the system at lambda = 0. The density solves

		g(m) = eps*m**alpha + (1 + eps**2)*m - 1 - eps*H(0) = 0

	on [0, 1 + eps*C] with ``C = |H(0)| + 1``, by bisection, and
	``u = (1 - m)/eps``.

	Parameters
	----------
	params : rm.ProblemParams
		Problem instance with ``lam = 0``.

	Returns
	-------
	state : rm.State
		The constant state (u0, m0) with ``|g(m0)| <= 1e-14``.

	Raises
	------
	ParameterError
		If ``params.lam != 0``.

	BracketFailure
		If ``g(0) >= 0`` or ``g(1 + eps*C) <= 0``.

	BisectionStall
		If bisection does not reach ``|g| <= 1e-14``.

	Examples
	--------
	For ``eps = 0.1``, ``alpha = 1`` and ``H(0) = 1``, g is linear and
	``m0 = 1.1/1.11``.
	'''

	if params.lam != 0:
		raise ParameterError('seed_v0 needs lambda = 0, got %r' % params.lam)

	eps = params.epsilon
	a = params.alpha
	H0 = float(params.hamiltonian.h_value(0.0))
	C = abs(H0) + 1

	def g(m):
		return eps*m**a + (1 + eps**2)*m - 1 - eps*H0

	lo, hi = 0.0, 1 + eps*C

	if not g(lo) < 0:
		raise BracketFailure(
			'g(0) = %r is not negative; epsilon = %g is too large for H(0) = %g'
			% (g(lo), eps, H0))

	if not g(hi) > 0:
		raise BracketFailure('g(%g) = %r is not positive' % (hi, g(hi)))

	try:
		m0 = bisect(g, lo, hi, xtol = 1e-15, maxiter = 200)

	except RuntimeError as err:
		raise BisectionStall('bisection of the seed equation failed: %s' % err)

	if not abs(g(m0)) <= SEED_TOL:
		raise BisectionStall('|g(m0)| = %r exceeds %g' % (abs(g(m0)), SEED_TOL))

	u0 = (1 - m0)/eps

	logger.debug('seed: m0 = %.17g, u0 = %.17g', m0, u0)

	return State.from_arrays(params.grid, u0, m0)

#secant predictor from the last two accepted steps
def _predict(trace, lam):

	last = trace.steps[-1]

	if len(trace.steps) < 2:
		return last.state

	prev = trace.steps[-2]
	t = (lam - last.lam)/(last.lam - prev.lam)

	x = last.state.stacked() + t*(last.state.stacked() - prev.state.stacked())
	n = last.state.grid.n

	if not np.all(x[n:] > 0):
		return last.state

	return State.from_stacked(last.state.grid, x)

#solve at one lambda and wrap as a step
def _accept(state, params, opts, iterations):

	d = diagnose(state, params, tol = opts.tol_residual)

	if d.eps_smallness >= 0.5:
		warnings.warn(
			'max|eps(u - u_xx)| = %.4g >= 1/2 at lambda = %g'
			% (d.eps_smallness, params.lam), SmallnessWarning)

	return ContinuationStep(
		lam = params.lam,
		state = state,
		diagnostics = d,
		iterations = iterations)

#define function for the lambda continuation
def continue_lambda(
	params,
	schedule = None,
	opts = None,
	warm_start = None,
	strict = False):
	'''
	Marches lambda from 0 to 1: the constant seed at lambda = 0, then for each
	step a secant predictor from the last two accepted states and a Newton
	corrector at lambda + dlambda. A failed corrector halves dlambda; after
	`success_streak` accepted steps dlambda grows by `growth_factor`. Every
	accepted step stores its full ``rm.DiagnosticsReport``.

	Parameters
	----------
	params : rm.ProblemParams
		Problem instance; its lambda is ignored.

	schedule : None or rm.ContinuationSchedule
		Step control. Defaults to ``rm.ContinuationSchedule()``.

	opts : None or rm.NewtonOptions
		Corrector options. Defaults to ``rm.NewtonOptions()``.

	warm_start : None or rm.State
		Guess for the lambda = 1 solution, e.g. from a neighbouring epsilon.
		If given, a direct corrector at lambda = 1 is tried right after the
		seed and the march is used only if it fails. Defaults to `None`.

	strict : Boolean
		If `True`, raise when the path stalls instead of returning a trace
		flagged ``stalled``. Defaults to `False`.

	Returns
	-------
	trace : rm.ContinuationTrace
		Accepted steps; ``reached_lambda == 1`` unless stalled.

	Raises
	------
	SeedError
		If the seed cannot be constructed.

	ContinuationStalled
		If ``strict = True`` and dlambda falls below `lambda_min_step`.
		Carries the partial trace as ``err.trace``.

	Warnings
	--------
	SmallnessWarning
		If ``max|eps(u - u_xx)| >= 1/2`` at an accepted step.

	Notes
	-----
	With a zero potential the seed solves the system at every lambda, so
	the path is a single step from 0 to 1.
	'''

	if schedule is None:
		schedule = ContinuationSchedule()

	if opts is None:
		opts = NewtonOptions()

	trace = ContinuationTrace(params.epsilon)

	#seed at lambda = 0
	p0 = params.with_lambda(0.0)
	rep = newton(seed_v0(p0), p0, opts)
	trace.append(_accept(rep.final_state, p0, opts, rep.iterations))

	dlam = 1.0 if params.potential.is_zero else schedule.lambda_init_step

	#direct attempt from the warm start
	if warm_start is not None and warm_start.grid == params.grid:
		p1 = params.with_lambda(1.0)

		try:
			rep = newton(warm_start, p1, opts)
			trace.append(_accept(rep.final_state, p1, opts, rep.iterations))
			logger.info(
				'epsilon = %g: warm start converged at lambda = 1 in %d iterations',
				params.epsilon, rep.iterations)

		except _CORRECTOR_ERRORS as err:
			logger.info('warm start failed (%s), marching from lambda = 0', err)

	streak = 0

	while trace.reached_lambda < 1.0:
		lam = trace.reached_lambda
		target = min(1.0, lam + dlam)
		pk = params.with_lambda(target)

		try:
			rep = newton(_predict(trace, target), pk, opts)

		except _CORRECTOR_ERRORS as err:
			dlam /= 2
			streak = 0

			logger.info(
				'step to lambda = %.6g rejected (%s: %s), dlambda -> %.3g',
				target, type(err).__name__, err, dlam)

			if dlam < schedule.lambda_min_step:
				trace.stalled = True
				trace.message = (
					'dlambda %.3g below lambda_min_step %.3g at lambda = %.6g'
					% (dlam, schedule.lambda_min_step, lam))
				break

			continue

		trace.append(_accept(rep.final_state, pk, opts, rep.iterations))
		streak += 1

		logger.info(
			'accepted lambda = %.6g in %d iterations, |F| = %.3e',
			target, rep.iterations, rep.final_residual)

		if streak >= schedule.success_streak:
			dlam = min(1.0, dlam*schedule.growth_factor)
			streak = 0

	its = [s.iterations for s in trace.steps[1:]]

	if its:
		logger.info(
			'epsilon = %g: reached lambda = %g, median iterations per step %g',
			params.epsilon, trace.reached_lambda, float(np.median(its)))

	if trace.stalled:
		logger.warning('continuation stalled: %s', trace.message)

		if strict:
			raise ContinuationStalled(trace.message, trace = trace)

	return trace

#run one sweep member, recording failures on the trace
def _sweep_member(params, schedule, opts, warm_start):

	try:
		return continue_lambda(params, schedule, opts, warm_start = warm_start)

	except (SeedError, SolverError, LinearSolveFailed) as err:
		logger.warning('epsilon = %g failed: %s', params.epsilon, err)

		trace = ContinuationTrace(params.epsilon)
		trace.stalled = True
		trace.message = '%s: %s' % (type(err).__name__, err)

		return trace

#whether a problem instance can be shipped to a worker process
def _picklable(params):

	try:
		pickle.dumps(params)

	except (pickle.PicklingError, AttributeError, TypeError):
		return False

	return True

#define function for the epsilon sweep
def sweep_epsilon(base_params, schedule = None, opts = None, jobs = 1):
	'''
	Runs ``continue_lambda`` for every epsilon of ``schedule.epsilon_list``.
	With ``jobs = 1`` members run in order and each is warm-started from the
	previous member's lambda = 1 solution. Failures are recorded on the
	member's trace and the sweep continues.

	Parameters
	----------
	base_params : rm.ProblemParams
		Problem instance; its epsilon is replaced per member.

	schedule : None or rm.ContinuationSchedule
		Step control and epsilon list. An empty list runs the base epsilon
		only. Defaults to ``rm.ContinuationSchedule()``.

	opts : None or rm.NewtonOptions
		Corrector options. Defaults to ``rm.NewtonOptions()``.

	jobs : int
		Worker processes. Members are cold-started when ``jobs > 1``.
		A problem that cannot be pickled, such as an rm.CustomHamiltonian
		built from lambdas, falls back to the sequential sweep.
		Defaults to `1`.

	Returns
	-------
	traces : list
		One ``rm.ContinuationTrace`` per epsilon, in sweep order.
	'''

	if schedule is None:
		schedule = ContinuationSchedule()

	eps_list = schedule.epsilon_list or (base_params.epsilon,)
	members = [base_params.with_epsilon(e) for e in eps_list]

	if jobs > 1 and not _picklable(base_params):
		logger.warning(
			'problem cannot be sent to worker processes, running the sweep '
			'sequentially')
		jobs = 1

	if jobs > 1:
		with ProcessPoolExecutor(max_workers = int(jobs)) as pool:
			futures = [
				pool.submit(_sweep_member, p, schedule, opts, None) for p in members]

			return [f.result() for f in futures]

	traces = []
	warm = None

	for p in members:
		trace = _sweep_member(p, schedule, opts, warm)
		traces.append(trace)

		warm = trace.final_state if trace.completed else None

	return traces

#define function for the sweep table
def sweep_summary(traces):
	'''
	Returns one row per sweep member (final step) as a ``pd.DataFrame``
	indexed by epsilon.
	'''

	return _calc_sweep_info([t for t in traces if t.steps])

#define function for the seminorm growth fit of a sweep
def sweep_holder_fit(traces):
	'''
	Fits the growth of each 1/2-Holder seminorm against epsilon over the
	completed members of a sweep. See ``rm.fit_holder_growth``.
	'''

	done = [t for t in traces if t.completed]

	eps = [t.epsilon for t in done]
	semi = [t.steps[-1].diagnostics.holder for t in done]

	return fit_holder_growth(eps, semi)

#observed convergence rates between successive levels
def _observed_rates(h, err):

	rates = [np.nan]

	for k in range(1, len(h)):
		if err[k] > 0 and err[k-1] > 0:
			rates.append(np.log(err[k-1]/err[k])/np.log(h[k-1]/h[k]))

		else:
			rates.append(np.nan)

	return rates

#define function for the manufactured-solution study
def mms_convergence(params, levels = (64, 128, 256, 512), opts = None):
	'''
	Manufactured-solution convergence study with the exact fields
	``u* = 0.1 sin(2 pi x)`` and ``m* = 1 + 0.2 cos(2 pi x)``. At each grid
	size the analytic sources are subtracted from the residual, Newton is
	started from the sampled exact fields, and the max-norm error of the
	discrete solution against them is recorded.

	Parameters
	----------
	params : rm.ProblemParams
		Problem instance; its grid is replaced per level.

	levels : tuple
		Grid sizes, increasing. Defaults to ``(64, 128, 256, 512)``.

	opts : None or rm.NewtonOptions
		Newton options. Defaults to ``rm.NewtonOptions(tol_residual = 1e-9)``,
		above the rounding floor of the finest default level.

	Returns
	-------
	study : pd.DataFrame
		Columns 'n', 'h', 'error_u', 'error_m', 'rate_u', 'rate_m',
		'truncation' (residual of the sampled exact fields) and
		'iterations'.
	'''

	if opts is None:
		opts = NewtonOptions(tol_residual = 1e-9)

	rows = []

	for n in levels:
		p = params.with_grid(PeriodicGrid(n))
		f = _mms_fields(p.grid.x)
		g = _mms_sources(p)

		exact = State.from_arrays(p.grid, f['u'], f['m'])
		rep = newton(exact, p, opts, sources = g)
		sol = rep.final_state

		rows.append({
			'n' : n,
			'h' : p.grid.h,
			'error_u' : float(np.max(np.abs(sol.u.values - f['u']))),
			'error_m' : float(np.max(np.abs(sol.m.values - f['m']))),
			'truncation' : residual_norm(exact, p, sources = g),
			'iterations' : rep.iterations,
			})

		logger.info(
			'mms n = %d: error_u = %.3e, error_m = %.3e',
			n, rows[-1]['error_u'], rows[-1]['error_m'])

	df = pd.DataFrame(rows)
	df['rate_u'] = _observed_rates(df['h'].values, df['error_u'].values)
	df['rate_m'] = _observed_rates(df['h'].values, df['error_m'].values)

	return df[['n', 'h', 'error_u', 'error_m', 'rate_u', 'rate_m',
		'truncation', 'iterations']]
