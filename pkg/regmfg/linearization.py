'''
This module contains the BandedCyclicMatrix class and the assembly of the
discrete linearized operator (the Newton Jacobian) together with its
coercivity form and the exact duality between them.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'BandedCyclicMatrix',
	'coercivity_form',
	'duality_check',
	'jacobian',
	]

import numpy as np
import scipy.sparse as sparse

#import exceptions
from .exceptions import(
	LengthError,
	)

#import helper functions
from .core_functions import(
	assert_len,
	diff1,
	integrate,
	)

from .system_helper import(
	_assert_positive,
	)


class BandedCyclicMatrix(object):
	__doc__='''
	Class for the 2n x 2n block matrix of the linearized operator. Each of the
	four n x n blocks is banded with bandwidth at most 2 plus the periodic
	wrap entries; storage is ``scipy.sparse`` CSC.

	Parameters
	----------
	matrix : scipy.sparse matrix
		Square matrix of even dimension 2n.

	Raises
	------
	LengthError
		If `matrix` is not square with even dimension.

	**Attributes**

	matrix : scipy.sparse.csc_matrix
		The assembled operator.

	n : int
		Number of grid nodes (half the dimension).
	'''

	def __init__(self, matrix):

		matrix = sparse.csc_matrix(matrix)
		r, c = matrix.shape

		if r != c or r % 2:
			raise LengthError(
				'matrix must be square with even dimension, got %r' % (matrix.shape,))

		self.matrix = matrix
		self.n = r//2

	def __repr__(self):
		return 'BandedCyclicMatrix(n=%d, nnz=%d)' % (self.n, self.matrix.nnz)

	#define class method for the identity fixture
	@classmethod
	def identity(cls, n):
		'''
		Returns the 2n x 2n identity.
		'''

		return cls(sparse.identity(2*n, format = 'csc'))

	@property
	def shape(self):
		return self.matrix.shape

	#define method for the matrix-vector product
	def dot(self, x):
		'''
		Applies the operator to a stacked vector of length 2n.
		'''

		x = assert_len(x, 2*self.n)

		return self.matrix.dot(x)

	#define method for the induced infinity norm
	def norm(self):
		'''
		Induced max-norm, the largest absolute row sum.
		'''

		return float(np.max(np.asarray(abs(self.matrix).sum(axis = 1))))

	def toarray(self):
		return self.matrix.toarray()


#define function to assemble the Jacobian
def jacobian(state, params):
	'''
	Assembles the discrete linearized operator at a state. Acting on the
	stacked direction ``[v; f]`` it returns

		v - v_xx + H'(u_x)*v_x - alpha*m**(alpha - 1)*f - eps*(f - f_xx)
		f - f_xx - (H''(u_x)*v_x*m + H'(u_x)*f)_x + eps*(v - v_xx)

	with every derivative replaced by its centered difference.

	Parameters
	----------
	state : rm.State
		Admissible state (m > 0).

	params : rm.ProblemParams
		Problem instance.

	Returns
	-------
	J : rm.BandedCyclicMatrix
		The Jacobian of ``rm.residual`` at `state`.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.

	Notes
	-----
	``m**(alpha - 1)`` is evaluated on the current iterate without clamping.
	'''

	return _jacobian_arrays(state.u.values, state.m.values, params)

#assemble the Jacobian from bare arrays
def _jacobian_arrays(u, m, params):

	_assert_positive(m)

	grid = params.grid
	ham = params.hamiltonian
	eps = params.epsilon
	alpha = params.alpha

	D1 = grid.d1_matrix()
	D2 = grid.d2_matrix()
	I = sparse.identity(grid.n, format = 'csc')

	ux = diff1(u)
	Hp = sparse.diags(ham.h_prime(ux))
	Hppm = sparse.diags(ham.h_second(ux)*m)

	#helmholtz-type block shared by all four entries
	A = I - D2

	J11 = A + Hp @ D1
	J12 = -sparse.diags(alpha*m**(alpha - 1)) - eps*A
	J21 = eps*A - D1 @ Hppm @ D1
	J22 = A - D1 @ Hp

	return BandedCyclicMatrix(sparse.bmat([[J11, J12], [J21, J22]], format = 'csc'))

#define function for the coercivity form
def coercivity_form(state, params, v, f):
	'''
	Discrete coercivity form of the linearized operator,

		h*sum[alpha*m**(alpha - 1)*f**2 + H''(u_x)*m*(diff1 v)**2
			+ eps*(v**2 + f**2) + eps*((D+ v)**2 + (D+ f)**2)],

	with D+ the forward difference. Always at least
	``eps*h1_norm_sq(v, f)``.

	Parameters
	----------
	state : rm.State
		Admissible state.

	params : rm.ProblemParams
		Problem instance.

	v, f : rm.GridFunction or array-like
		Direction components.

	Returns
	-------
	B : float
		Value of the form.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.
	'''

	n = state.grid.n
	v = assert_len(v, n)
	f = assert_len(f, n)

	u = state.u.values
	m = state.m.values
	_assert_positive(m)

	eps = params.epsilon
	alpha = params.alpha
	Hpp = params.hamiltonian.h_second(diff1(u))

	dv = (np.roll(v, -1) - v)*n
	df = (np.roll(f, -1) - f)*n

	integrand = (
		alpha*m**(alpha - 1)*f**2 + Hpp*m*diff1(v)**2
		+ eps*(v**2 + f**2) + eps*(dv**2 + df**2))

	return integrate(integrand)

#define function for the duality residual
def duality_check(state, params, v, f):
	'''
	Absolute deviation between the swap-pairing of the Jacobian action and
	the coercivity form,

		| h*sum[-(Jd)_1*f + (Jd)_2*v] - B((v, f), (v, f)) |,

	with ``d = [v; f]``. By antisymmetry of diff1 and symmetry of diff2 the
	two agree to rounding.

	Parameters
	----------
	state : rm.State
		Admissible state.

	params : rm.ProblemParams
		Problem instance.

	v, f : rm.GridFunction or array-like
		Direction components.

	Returns
	-------
	dev : float
		Absolute deviation.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.
	'''

	n = state.grid.n
	v = assert_len(v, n)
	f = assert_len(f, n)

	Jd = jacobian(state, params).dot(np.concatenate((v, f)))
	pairing = integrate(-Jd[:n]*f + Jd[n:]*v)

	return abs(pairing - coercivity_form(state, params, v, f))
