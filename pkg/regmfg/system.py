'''
This module contains the State and ProblemParams classes and the assembly of
the regularized stationary MFG residual, its source-augmented variant and
the second-derivative reconstruction formulas.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'ProblemParams',
	'State',
	'reconstruct_mxx',
	'reconstruct_uxx',
	'residual',
	'residual_norm',
	'residual_with_sources',
	]

import matplotlib.pyplot as plt
import numpy as np

from dataclasses import dataclass, field, replace

#import exceptions
from .exceptions import(
	LengthError,
	ParameterError,
	)

#import helper functions
from .core_functions import(
	assert_len,
	)

from .grid import(
	GridFunction,
	PeriodicGrid,
	)

from .hamiltonian import(
	Hamiltonian,
	)

from .potential import(
	TrigPotential,
	)

from .plotting_helper import(
	_finish_axis,
	_plot_fields,
	)

from .system_helper import(
	_assert_positive,
	_derivatives,
	_residual_arrays,
	)


class State(object):
	__doc__='''
	Class for a pair (u, m) of grid functions on a shared periodic grid, with
	strictly positive density m.

	Parameters
	----------
	u : rm.GridFunction
		Value function samples.

	m : rm.GridFunction
		Density samples, strictly positive.

	Raises
	------
	LengthError
		If `u` and `m` do not share a grid.

	NonpositiveDensity
		If any entry of `m` is not > 0.

	ParameterError
		If `u` or `m` is not an rm.GridFunction.

	Examples
	--------
	Creating the constant state and plotting it::

		#import modules
		import regmfg as rm
		import matplotlib.pyplot as plt

		grid = rm.PeriodicGrid(64)
		state = rm.State.from_arrays(grid, 0.09, 0.99)

		fig, ax = plt.subplots(1, 1)
		ax = state.plot(ax = ax)

	**Attributes**

	u : rm.GridFunction
		Value function samples.

	m : rm.GridFunction
		Density samples.

	grid : rm.PeriodicGrid
		Shared grid.
	'''

	def __init__(self, u, m):

		if not (isinstance(u, GridFunction) and isinstance(m, GridFunction)):
			raise ParameterError('u and m must be rm.GridFunction instances')

		if u.grid != m.grid:
			raise LengthError('u and m must share a grid')

		_assert_positive(m.values)

		self.u = u
		self.m = m
		self.grid = u.grid

	def __repr__(self):
		return 'State(n=%d, m_min=%.6g)' % (self.grid.n, self.m_min)

	#define class method for creating instance from bare arrays
	@classmethod
	def from_arrays(cls, grid, u, m):
		'''
		Creates a state from scalars or arrays on a grid.

		Parameters
		----------
		grid : rm.PeriodicGrid
			Grid of the state.

		u : scalar or array-like
			Value function samples, length ``grid.n``.

		m : scalar or array-like
			Density samples, length ``grid.n``.

		Returns
		-------
		state : rm.State
		'''

		return cls(GridFunction(grid, u), GridFunction(grid, m))

	#define class method for creating instance from a stacked vector
	@classmethod
	def from_stacked(cls, grid, x):
		'''
		Creates a state from the stacked vector ``[u; m]`` of length 2n.
		'''

		x = assert_len(x, 2*grid.n)

		return cls.from_arrays(grid, x[:grid.n], x[grid.n:])

	#define class method for creating instance from a solution CSV
	@classmethod
	def from_csv(cls, file):
		'''
		Reads a state from a solution CSV written by
		``rm.write_solution_csv``. Only the 'u' and 'm' columns are used; the
		grid size is the row count.

		Parameters
		----------
		file : str or path-like
			Path to the CSV.

		Returns
		-------
		state : rm.State

		Raises
		------
		FileError
			If the file is missing or has the wrong columns.
		'''

		#imported here, io_helper depends on this module
		from .io_helper import _read_solution_frame

		frame = _read_solution_frame(file)
		grid = PeriodicGrid(len(frame))

		return cls.from_arrays(grid, frame['u'].values, frame['m'].values)

	#define method for the stacked vector
	def stacked(self):
		'''
		Returns the stacked vector ``[u; m]`` of length 2n.
		'''

		return np.concatenate((self.u.values, self.m.values))

	@property
	def m_min(self):
		return float(np.min(self.m.values))

	#define method for returning an independent copy
	def copy(self):
		return State(self.u.copy(), self.m.copy())

	#define plotting method
	def plot(self, ax = None, label = None):
		'''
		Method for plotting the value function and density against x.

		Parameters
		----------
		ax : None or matplotlib.axis
			Axis to plot on. If `None`, automatically creates a
			``matplotlib.axis`` instance to return. Defaults to `None`.

		label : None or str
			Legend suffix, e.g. the lambda value. Defaults to `None`.

		Returns
		-------
		ax : matplotlib.axis
			Updated axis instance with plotted data.
		'''

		#create axis if necessary
		if ax is None:
			_, ax = plt.subplots(1, 1)

		ax = _plot_fields(
			ax,
			self.grid.x,
			self.u.values,
			self.m.values,
			label = label)

		return _finish_axis(ax, (r'$x$', r'$u$, $m$'))


@dataclass(frozen = True)
class ProblemParams:
	'''
	Everything that pins down one instance of the regularized system: the
	Hamiltonian, the congestion exponent ``alpha > 0``, the regularization
	``0 < epsilon <= 1``, the homotopy parameter ``0 <= lam <= 1``, the
	potential and the grid.

	The potential samples V, V' and V'' are computed once on construction
	and stored as `V`, `dV`, `d2V` (np.ndarray).
	'''

	hamiltonian: Hamiltonian
	alpha: float
	epsilon: float
	lam: float
	grid: PeriodicGrid
	potential: TrigPotential = field(default_factory = TrigPotential)

	def __post_init__(self):

		if not isinstance(self.hamiltonian, Hamiltonian):
			raise ParameterError('hamiltonian must be an rm.Hamiltonian')

		if not isinstance(self.grid, PeriodicGrid):
			raise ParameterError('grid must be an rm.PeriodicGrid')

		if not isinstance(self.potential, TrigPotential):
			raise ParameterError('potential must be an rm.TrigPotential')

		for name in ('alpha', 'epsilon', 'lam'):
			val = getattr(self, name)

			if isinstance(val, bool) or not np.isfinite(float(val)):
				raise ParameterError('%s must be a finite real, got %r' % (name, val))

			object.__setattr__(self, name, float(val))

		if not self.alpha > 0:
			raise ParameterError('alpha must be > 0, got %r' % self.alpha)

		if not 0 < self.epsilon <= 1:
			raise ParameterError(
				'epsilon must satisfy 0 < epsilon <= 1, got %r' % self.epsilon)

		if not 0 <= self.lam <= 1:
			raise ParameterError(
				'lambda must satisfy 0 <= lambda <= 1, got %r' % self.lam)

		#sample the potential once, raises NyquistViolation
		V, dV, d2V = self.potential.sample(self.grid)
		object.__setattr__(self, 'V', V.values)
		object.__setattr__(self, 'dV', dV.values)
		object.__setattr__(self, 'd2V', d2V.values)

	def with_lambda(self, lam):
		'''
		Returns a copy with the homotopy parameter replaced.
		'''

		return replace(self, lam = lam)

	def with_epsilon(self, epsilon):
		'''
		Returns a copy with the regularization replaced.
		'''

		return replace(self, epsilon = epsilon)

	def with_grid(self, grid):
		'''
		Returns a copy on another grid.
		'''

		return replace(self, grid = grid)

	def to_dict(self):
		'''
		Returns a JSON-friendly description of the parameters.
		'''

		return {
			'hamiltonian' : self.hamiltonian.to_dict(),
			'alpha' : self.alpha,
			'epsilon' : self.epsilon,
			'lambda' : self.lam,
			'n' : self.grid.n,
			'potential' : self.potential.to_dict(),
			}


#check a state against the parameter grid
def _check_grid(state, params):

	if state.grid != params.grid:
		raise LengthError(
			'state grid %r does not match parameter grid %r'
			% (state.grid, params.grid))

#coerce a source term to an array
def _source_values(g, n):

	if isinstance(g, GridFunction):
		g = g.values

	return assert_len(g, n)

#define function for the residual
def residual(state, params):
	'''
	Residual of the discrete regularized system,

		F1 = u - u_xx + H(u_x) + lam*V - m**alpha - eps*(m - m_xx)
		F2 = m - m_xx - (H'(u_x)*m)_x - 1 + eps*(u - u_xx)

	with all derivatives taken by ``diff1`` and ``diff2`` and the divergence
	taken by ``diff1`` of the collocated flux ``H'(u_x)*m``.

	Parameters
	----------
	state : rm.State
		Current iterate.

	params : rm.ProblemParams
		Problem instance.

	Returns
	-------
	F1, F2 : rm.GridFunction
		Both residual components.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.

	LengthError
		If the state and the parameters live on different grids.
	'''

	_check_grid(state, params)
	F1, F2 = _residual_arrays(state.u.values, state.m.values, params)

	return GridFunction(state.grid, F1), GridFunction(state.grid, F2)

#define function for the source-augmented residual
def residual_with_sources(state, params, g1, g2):
	'''
	Residual with prescribed sources subtracted, ``(F1 - g1, F2 - g2)``.
	Used for manufactured-solution studies.

	Parameters
	----------
	state : rm.State
		Current iterate.

	params : rm.ProblemParams
		Problem instance.

	g1, g2 : rm.GridFunction or array-like
		Sources for the first and second equation.

	Returns
	-------
	R1, R2 : rm.GridFunction
		Source-augmented residual components.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.
	'''

	F1, F2 = residual(state, params)
	n = state.grid.n

	return (
		GridFunction(state.grid, F1.values - _source_values(g1, n)),
		GridFunction(state.grid, F2.values - _source_values(g2, n)))

#define function for the max-norm of the stacked residual
def residual_norm(state, params, sources = None):
	'''
	Max norm of the stacked residual, with optional sources ``(g1, g2)``.
	'''

	if sources is None:
		F1, F2 = residual(state, params)

	else:
		F1, F2 = residual_with_sources(state, params, *sources)

	return float(max(np.max(np.abs(F1.values)), np.max(np.abs(F2.values))))

#define function for reconstructing u_xx from lower-order terms
def reconstruct_uxx(state, params):
	'''
	Solves the system algebraically for u_xx,

		u_xx = [(1 + eps**2)*u + H(u_x) - eps + lam*V - m**alpha
			- eps*H'(u_x)*m_x] / [1 + eps**2 + eps*H''(u_x)*m],

	evaluated with the discrete u_x and m_x. For a converged solution this
	matches ``diff2(u)`` up to solver tolerance and O(h**2).

	Parameters
	----------
	state : rm.State
		Admissible state.

	params : rm.ProblemParams
		Problem instance.

	Returns
	-------
	uxx : rm.GridFunction
		Reconstructed second derivative.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.

	Notes
	-----
	The denominator is at least ``1 + eps**2`` because H is convex and m > 0.
	'''

	_check_grid(state, params)

	u = state.u.values
	m = state.m.values
	_assert_positive(m)

	ham = params.hamiltonian
	eps = params.epsilon
	ux, _, mx, _ = _derivatives(u, m)

	num = (
		(1 + eps**2)*u + ham.h_value(ux) - eps + params.lam*params.V
		- m**params.alpha - eps*ham.h_prime(ux)*mx)

	den = 1 + eps**2 + eps*ham.h_second(ux)*m

	return GridFunction(state.grid, num/den)

#define function for reconstructing m_xx from lower-order terms
def reconstruct_mxx(state, params):
	'''
	Solves the second equation for m_xx,

		m_xx = m + eps*(u - u_xx) - 1 - H''(u_x)*m*u_xx - H'(u_x)*m_x,

	with every u_xx taken from ``reconstruct_uxx``.

	Parameters
	----------
	state : rm.State
		Admissible state.

	params : rm.ProblemParams
		Problem instance.

	Returns
	-------
	mxx : rm.GridFunction
		Reconstructed second derivative.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.
	'''

	uxx = reconstruct_uxx(state, params).values

	u = state.u.values
	m = state.m.values

	ham = params.hamiltonian
	ux, _, mx, _ = _derivatives(u, m)

	mxx = (
		m + params.epsilon*(u - uxx) - 1
		- ham.h_second(ux)*m*uxx - ham.h_prime(ux)*mx)

	return GridFunction(state.grid, mxx)
