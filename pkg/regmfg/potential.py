'''
This module contains the TrigPotential class, a zero-mean trigonometric
polynomial potential with analytic derivatives.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = ['TrigPotential']

import numpy as np

#import exceptions
from .exceptions import(
	ArrayError,
	NyquistViolation,
	)

#import helper functions
from .core_functions import(
	assert_len,
	)

from .grid import(
	GridFunction,
	)


class TrigPotential(object):
	__doc__='''
	Class for the periodic potential
	``V(x) = sum_k a_k cos(2 pi k x) + b_k sin(2 pi k x)``, k = 1..K.

	Parameters
	----------
	cos : array-like
		Cosine coefficients a_1, a_2, ... Defaults to empty (no cosine
		modes).

	sin : array-like
		Sine coefficients b_1, b_2, ... Defaults to empty (no sine modes).

	Raises
	------
	ArrayError
		If a coefficient is not a finite real number.

	Notes
	-----
	There is no k = 0 term, so V has zero mean. A constant in V only shifts u
	by a constant.

	Examples
	--------
	The default test potential ``V(x) = cos(2 pi x)/2``::

		#import modules
		import regmfg as rm

		pot = rm.TrigPotential(cos = [0.5])
		V, dV, d2V = pot.sample(rm.PeriodicGrid(64))

	**Attributes**

	a : np.ndarray
		Cosine coefficients, length `K`.

	b : np.ndarray
		Sine coefficients, length `K`.

	K : int
		Highest mode. Zero for the zero potential.
	'''

	def __init__(self, cos = (), sin = ()):

		a = np.atleast_1d(np.asarray(cos, dtype = float))
		b = np.atleast_1d(np.asarray(sin, dtype = float))

		if a.ndim != 1 or b.ndim != 1:
			raise ArrayError('potential coefficients must be 1-d lists')

		K = max(len(a), len(b))

		#pad to common length
		self.a = assert_len(np.pad(a, (0, K - len(a))), K)
		self.b = assert_len(np.pad(b, (0, K - len(b))), K)
		self.K = K

	def __repr__(self):
		return 'TrigPotential(cos=%r, sin=%r)' % (self.a.tolist(), self.b.tolist())

	@property
	def is_zero(self):
		return not (np.any(self.a) or np.any(self.b))

	#define method for sampling V, V' and V''
	def sample(self, grid):
		'''
		Samples V and its first two analytic derivatives on a grid.

		Parameters
		----------
		grid : rm.PeriodicGrid
			Grid to sample on.

		Returns
		-------
		V, dV, d2V : rm.GridFunction
			Exact samples of V, V' and V''.

		Raises
		------
		NyquistViolation
			If ``K >= grid.n/2``.
		'''

		if self.K > 0 and 2*self.K >= grid.n:
			raise NyquistViolation(
				'Highest potential mode %d is not below n/2 = %g'
				% (self.K, grid.n/2))

		V = np.zeros(grid.n)
		dV = np.zeros(grid.n)
		d2V = np.zeros(grid.n)

		for k in range(1, self.K + 1):
			w = 2*np.pi*k
			c = np.cos(w*grid.x)
			s = np.sin(w*grid.x)
			ak = self.a[k-1]
			bk = self.b[k-1]

			V += ak*c + bk*s
			dV += w*(bk*c - ak*s)
			d2V -= w**2*(ak*c + bk*s)

		return (
			GridFunction(grid, V),
			GridFunction(grid, dV),
			GridFunction(grid, d2V))

	#define method for the sup norms used in the estimate ledger
	def norms(self, grid):
		'''
		Sup norms of V and its derivatives on the grid nodes.

		Parameters
		----------
		grid : rm.PeriodicGrid
			Grid to sample on.

		Returns
		-------
		norms : dict
			Keys 'V_sup', 'dV_sup', 'd2V_sup' and 'V_C2' (their sum).
		'''

		V, dV, d2V = self.sample(grid)
		vals = [float(np.max(np.abs(f.values))) for f in (V, dV, d2V)]

		return {
			'V_sup' : vals[0],
			'dV_sup' : vals[1],
			'd2V_sup' : vals[2],
			'V_C2' : float(sum(vals)),
			}

	#define method for dictionary export
	def to_dict(self):
		'''
		Returns ``{'cos' : [...], 'sin' : [...]}``.
		'''

		return {'cos' : self.a.tolist(), 'sin' : self.b.tolist()}
