'''
This module contains the PeriodicGrid and GridFunction classes describing the
uniform discretization of the unit torus.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = ['GridFunction', 'PeriodicGrid']

import numpy as np
import scipy.sparse as sparse

#import exceptions
from .exceptions import(
	ParameterError,
	)

#import helper functions
from .core_functions import(
	assert_len,
	)


class PeriodicGrid(object):
	__doc__='''
	Class for a uniform grid of `n` nodes on the unit torus [0, 1).

	Parameters
	----------
	n : int
		Number of nodes. Must be at least 8.

	Raises
	------
	ParameterError
		If `n` is not an integer or is smaller than 8.

	Examples
	--------
	Creating a grid and sampling a function on it::

		#import modules
		import regmfg as rm
		import numpy as np

		grid = rm.PeriodicGrid(128)
		f = grid.sample(lambda x: np.cos(2*np.pi*x))

	**Attributes**

	n : int
		Number of nodes.

	h : float
		Grid spacing, ``1/n``.

	x : np.ndarray
		Node positions ``i*h`` for ``i = 0..n-1``. Length `n`.
	'''

	def __init__(self, n):

		if isinstance(n, bool) or int(n) != n:
			raise ParameterError('n must be an integer, got %r' % n)

		n = int(n)

		if n < 8:
			raise ParameterError('n must be at least 8, got %r' % n)

		self.n = n
		self.h = 1.0/n
		self.x = np.arange(n)/n

	def __eq__(self, other):
		return isinstance(other, PeriodicGrid) and other.n == self.n

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(('PeriodicGrid', self.n))

	def __repr__(self):
		return 'PeriodicGrid(n=%d)' % self.n

	#define method for sampling a callable on the nodes
	def sample(self, func):
		'''
		Samples a callable on the grid nodes.

		Parameters
		----------
		func : callable
			Vectorized function of x.

		Returns
		-------
		gf : rm.GridFunction
			The samples ``func(x)``.
		'''

		return GridFunction(self, func(self.x))

	#define method for the sparse first-difference matrix
	def d1_matrix(self):
		'''
		Sparse matrix of ``diff1``, including the periodic wrap entries.

		Returns
		-------
		D1 : scipy.sparse.csc_matrix
			Shape (n, n), antisymmetric.
		'''

		n = self.n
		c = n/2.0

		return sparse.diags(
			[c, -c, c, -c],
			[-(n - 1), -1, 1, n - 1],
			shape = (n, n),
			format = 'csc')

	#define method for the sparse second-difference matrix
	def d2_matrix(self):
		'''
		Sparse matrix of ``diff2``, including the periodic wrap entries.

		Returns
		-------
		D2 : scipy.sparse.csc_matrix
			Shape (n, n), symmetric.
		'''

		n = self.n
		c = float(n)**2

		return sparse.diags(
			[c, c, -2*c, c, c],
			[-(n - 1), -1, 0, 1, n - 1],
			shape = (n, n),
			format = 'csc')


class GridFunction(object):
	__doc__='''
	Class for the samples of a periodic function on a ``rm.PeriodicGrid``.

	Parameters
	----------
	grid : rm.PeriodicGrid
		The grid the samples live on.

	values : scalar or array-like
		Sample values. A scalar is broadcast to a constant function.

	Raises
	------
	ArrayError
		If `values` contains non-finite entries.

	LengthError
		If ``len(values) != grid.n``.

	ParameterError
		If `grid` is not an rm.PeriodicGrid.

	**Attributes**

	grid : rm.PeriodicGrid
		The grid the samples live on.

	values : np.ndarray
		Sample values. Length ``grid.n``.
	'''

	def __init__(self, grid, values):

		if not isinstance(grid, PeriodicGrid):
			raise ParameterError('grid must be an rm.PeriodicGrid instance')

		self.grid = grid
		self.values = assert_len(values, grid.n)

	def __array__(self, dtype = None, copy = None):

		if dtype is None:
			return self.values

		return self.values.astype(dtype)

	def __len__(self):
		return self.grid.n

	def __repr__(self):
		return 'GridFunction(n=%d)' % self.grid.n

	#define method for returning an independent copy
	def copy(self):
		'''
		Returns a copy with its own values array.
		'''

		return GridFunction(self.grid, self.values.copy())
