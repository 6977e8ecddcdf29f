'''
This module contains the direct linear solver for the Jacobian and the damped,
positivity-preserving Newton iteration.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'NewtonOptions',
	'NewtonReport',
	'newton',
	'solve_linear',
	]

import logging
import numpy as np
import scipy.linalg as la
import scipy.sparse.linalg as spla
import warnings

from dataclasses import dataclass, field

#import exceptions
from .exceptions import(
	IllConditionedWarning,
	LineSearchFailed,
	LinearSolveFailed,
	MaxIterExceeded,
	ParameterError,
	PositivityLost,
	SingularMatrix,
	SolverError,
	Stagnated,
	)

#import helper functions
from .core_functions import(
	assert_len,
	)

from .linearization import(
	_jacobian_arrays,
	)

from .system import(
	State,
	_check_grid,
	_source_values,
	)

from .system_helper import(
	_residual_arrays,
	)

logger = logging.getLogger(__name__)

#factorization thresholds
PIVOT_FLOOR = 1e-300
COND_CEILING = 1e14
BACKWARD_TOL = 1e-12
DENSE_MAX = 4096


@dataclass
class NewtonOptions:
	'''
	Stopping and damping parameters of the Newton iteration.
	'''

	tol_residual: float = 1e-10
	tol_step: float = 1e-12
	max_iters: int = 50
	backtrack_factor: float = 0.5
	min_step_scale: float = 1e-6

	def __post_init__(self):

		for name in ('tol_residual', 'tol_step', 'min_step_scale'):
			if not getattr(self, name) > 0:
				raise ParameterError('%s must be positive' % name, field = name)

		if int(self.max_iters) != self.max_iters or self.max_iters < 1:
			raise ParameterError(
				'max_iters must be a positive integer', field = 'max_iters')

		if not 0 < self.backtrack_factor < 1:
			raise ParameterError(
				'backtrack_factor must lie in (0, 1)', field = 'backtrack_factor')

		if not self.min_step_scale <= 1:
			raise ParameterError(
				'min_step_scale must not exceed 1', field = 'min_step_scale')


@dataclass
class NewtonReport:
	'''
	Record of one Newton run: convergence flag, iteration count, max-norm
	residual history (entry 0 is the initial residual), accepted step scales
	and the final iterate.
	'''

	converged: bool = False
	iterations: int = 0
	residual_history: list = field(default_factory = list)
	step_scales: list = field(default_factory = list)
	final_state: State = None

	@property
	def final_residual(self):
		return self.residual_history[-1] if self.residual_history else np.nan

	@property
	def quadratic_constants(self):
		'''
		Empirical constants ``r[k+1]/r[k]**2`` over the residual history.
		'''

		r = np.asarray(self.residual_history, dtype = float)

		with np.errstate(divide = 'ignore', invalid = 'ignore'):
			return (r[1:]/r[:-1]**2).tolist()


#estimate the 1-norm condition number of a factorized matrix
def _condition_estimate(A, lu):

	n = A.shape[0]
	inv = spla.LinearOperator(
		(n, n),
		matvec = lambda b: lu.solve(np.asarray(b, dtype = float).ravel()),
		rmatvec = lambda b: lu.solve(np.asarray(b, dtype = float).ravel(), trans = 'T'),
		dtype = float)

	anorm = float(np.max(np.asarray(abs(A).sum(axis = 0))))

	return anorm*spla.onenormest(inv)

#relative backward error of a candidate solution
def _backward_error(A, x, rhs, anorm):

	r = A.dot(x) - rhs
	den = anorm*np.max(np.abs(x)) + np.max(np.abs(rhs))

	if den == 0:
		return 0.0

	return float(np.max(np.abs(r))/den)

#define function for the direct linear solve
def solve_linear(J, rhs, check_condition = True):
	'''
	Solves ``J x = rhs`` by sparse LU factorization with partial pivoting,
	with one step of iterative refinement and a dense fallback.

	Parameters
	----------
	J : rm.BandedCyclicMatrix
		Assembled Jacobian.

	rhs : array-like
		Right-hand side, length 2n.

	check_condition : Boolean
		If `True`, estimate the 1-norm condition number and warn when it
		exceeds 1e14. Defaults to `True`.

	Returns
	-------
	x : np.ndarray
		Solution with relative backward error
		``|Jx - rhs| / (|J| |x| + |rhs|) <= 1e-12`` in the max norm.

	Raises
	------
	SingularMatrix
		If the factorization breaks down or a pivot falls below 1e-300.

	LinearSolveFailed
		If no factorization reaches the backward-error target.

	Warnings
	--------
	IllConditionedWarning
		If the condition estimate exceeds 1e14.
	'''

	A = J.matrix
	rhs = assert_len(rhs, A.shape[0])
	anorm = J.norm()

	try:
		lu = spla.splu(A)

	except RuntimeError as err:
		raise SingularMatrix('sparse LU failed: %s' % err)

	piv = np.min(np.abs(lu.U.diagonal()))

	if piv < PIVOT_FLOOR:
		raise SingularMatrix('pivot %r below %g' % (piv, PIVOT_FLOOR))

	x = lu.solve(rhs)
	be = _backward_error(A, x, rhs, anorm)

	#one step of iterative refinement
	if be > BACKWARD_TOL:
		x = x - lu.solve(A.dot(x) - rhs)
		be = _backward_error(A, x, rhs, anorm)

	#dense fallback
	if not be <= BACKWARD_TOL and A.shape[0] <= DENSE_MAX:
		logger.debug('sparse solve backward error %.3e, dense fallback', be)

		xd = la.lu_solve(la.lu_factor(A.toarray()), rhs)
		bed = _backward_error(A, xd, rhs, anorm)

		if bed < be or not np.isfinite(be):
			x, be = xd, bed

	if not np.all(np.isfinite(x)) or not be <= BACKWARD_TOL:
		raise LinearSolveFailed(
			'backward error %r exceeds %g' % (be, BACKWARD_TOL))

	if check_condition:
		cond = _condition_estimate(A, lu)

		if cond > COND_CEILING:
			warnings.warn(
				'Jacobian condition estimate %.3e exceeds %.0e' 
				% (cond, COND_CEILING), IllConditionedWarning)

	return x

#max norm of a residual pair
def _rnorm(F1, F2):
	return float(max(np.max(np.abs(F1)), np.max(np.abs(F2))))

#define function for the damped line search
def _line_search(u, m, du, dm, rnorm, params, opts, sources = None):
	'''
	Backtracks the step scale from 1 until the trial density is positive and
	the residual decreases sufficiently, ``|F_new| <= (1 - s/4)|F|``.

	Returns
	-------
	s : float
		Accepted step scale.

	u_new, m_new : np.ndarray
		Accepted iterate.

	F1, F2 : np.ndarray
		Residual at the accepted iterate.

	Raises
	------
	PositivityLost
		If the last trial above `min_step_scale` had a nonpositive density.

	LineSearchFailed
		If the last trial was positive but gave no sufficient decrease.
	'''

	s = 1.0
	last = None

	while s >= opts.min_step_scale:
		m_new = m + s*dm

		if np.all(m_new > 0):
			u_new = u + s*du
			F1, F2 = _residual_arrays(u_new, m_new, params)

			if sources is not None:
				F1 = F1 - sources[0]
				F2 = F2 - sources[1]

			if _rnorm(F1, F2) <= (1 - s/4)*rnorm:
				return s, u_new, m_new, F1, F2

			last = 'decrease'

		else:
			last = 'positivity'

		s *= opts.backtrack_factor

	if last == 'positivity':
		raise PositivityLost(
			'step scale fell below %g with min m = %r on the trial iterate'
			% (opts.min_step_scale, float(np.min(m_new))))

	raise LineSearchFailed(
		'no sufficient decrease of |F| = %.3e above step scale %g'
		% (rnorm, opts.min_step_scale))

#define function for the Newton iteration
def newton(state0, params, opts = None, sources = None):
	'''
	Damped Newton iteration for the discrete system, preserving m > 0.

	Each iteration solves ``J(x) d = -F(x)`` and updates ``x <- x + s*d``
	with the step scale s halved from 1 until the density stays positive and
	``|F(x + s*d)| <= (1 - s/4)*|F(x)|`` in the max norm.

	Parameters
	----------
	state0 : rm.State
		Admissible initial guess.

	params : rm.ProblemParams
		Problem instance.

	opts : None or rm.NewtonOptions
		Stopping and damping parameters. Defaults to ``rm.NewtonOptions()``.

	sources : None or tuple
		Optional sources ``(g1, g2)`` subtracted from the residual. Defaults
		to `None`.

	Returns
	-------
	report : rm.NewtonReport
		Converged report; ``final_state`` holds the solution.

	Raises
	------
	MaxIterExceeded
		If ``|F| > tol_residual`` after `max_iters` iterations.

	PositivityLost
		If damping cannot keep the density positive.

	LineSearchFailed
		If no sufficient decrease is possible above `min_step_scale`.

	Stagnated
		If an accepted step is below `tol_step` while ``|F| > tol_residual``.

	LinearSolveFailed
		Propagated from ``rm.solve_linear``.

	Notes
	-----
	Every solver error carries the partial report as ``err.report``.
	'''

	if opts is None:
		opts = NewtonOptions()

	_check_grid(state0, params)

	n = params.grid.n
	u = state0.u.values.copy()
	m = state0.m.values.copy()

	if sources is not None:
		sources = (_source_values(sources[0], n), _source_values(sources[1], n))

	F1, F2 = _residual_arrays(u, m, params)

	if sources is not None:
		F1 = F1 - sources[0]
		F2 = F2 - sources[1]

	r = _rnorm(F1, F2)
	report = NewtonReport(residual_history = [r])

	logger.debug('newton start: |F| = %.3e (lambda = %g)', r, params.lam)

	try:
		for k in range(opts.max_iters + 1):

			if r <= opts.tol_residual:
				report.converged = True
				break

			if k == opts.max_iters:
				raise MaxIterExceeded(
					'|F| = %.3e after %d iterations' % (r, opts.max_iters))

			J = _jacobian_arrays(u, m, params)
			d = solve_linear(J, -np.concatenate((F1, F2)))

			s, u, m, F1, F2 = _line_search(
				u, m, d[:n], d[n:], r, params, opts, sources = sources)

			r_old, r = r, _rnorm(F1, F2)
			report.iterations = k + 1
			report.residual_history.append(r)
			report.step_scales.append(s)

			logger.debug(
				'newton %d: |F| = %.3e, s = %g, r/r_old^2 = %.3g',
				k + 1, r, s, r/r_old**2)

			if s*np.max(np.abs(d)) <= opts.tol_step and r > opts.tol_residual:
				raise Stagnated(
					'step %.3e below tol_step with |F| = %.3e'
					% (s*np.max(np.abs(d)), r))

	except SolverError as err:
		report.final_state = State.from_arrays(params.grid, u, m)
		err.report = report
		raise

	report.final_state = State.from_arrays(params.grid, u, m)

	return report
