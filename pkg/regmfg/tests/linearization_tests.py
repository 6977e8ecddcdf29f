'''
This module contains linearization module tests,
'''

import numpy as np
import pytest
import scipy.sparse as sparse

import regmfg as rm

from numpy.testing import(
	assert_allclose,
	assert_array_equal,
	)

from regmfg.exceptions import(
	LengthError,
	NonpositiveDensity,
	)

from regmfg.linearization import(
	_jacobian_arrays,
	)

rng = np.random.default_rng(10)

#function to build a problem instance with a potential
def make_params(n = 64, alpha = 1.5, eps = 0.1):
	return rm.ProblemParams(
		hamiltonian = rm.PowerHamiltonian(1.5),
		alpha = alpha,
		epsilon = eps,
		lam = 0.7,
		grid = rm.PeriodicGrid(n),
		potential = rm.TrigPotential(cos = [0.5], sin = [0.0, 0.2]))

#function to draw a random admissible state
def random_state(grid):
	u = 0.2*rng.standard_normal(grid.n)
	m = 0.5 + rng.random(grid.n)
	return rm.State.from_arrays(grid, u, m)

#stacked residual as a flat vector
def stacked_residual(params, x):
	state = rm.State.from_stacked(params.grid, x)
	F1, F2 = rm.residual(state, params)
	return np.concatenate((F1.values, F2.values))

#test the banded cyclic matrix class
class test_banded_cyclic_matrix:

	def test_identity(self):
		I = rm.BandedCyclicMatrix.identity(8)
		x = rng.standard_normal(16)

		assert I.shape == (16, 16)
		assert I.n == 8
		assert I.norm() == 1.0
		assert_array_equal(I.dot(x), x)

	def test_input_shapes(self):
		#assert that it doesn't take an odd dimension
		with pytest.raises(LengthError):
			rm.BandedCyclicMatrix(sparse.identity(15))

		#assert that it doesn't take a non-square matrix
		with pytest.raises(LengthError):
			rm.BandedCyclicMatrix(sparse.csc_matrix((16, 8)))

		#assert that dot checks the vector length
		with pytest.raises(LengthError):
			rm.BandedCyclicMatrix.identity(8).dot(np.ones(15))

	def test_norm(self):
		A = rm.BandedCyclicMatrix(np.array([[1.0, -2.0], [0.5, 0.25]]))
		assert A.norm() == 3.0

#test the Jacobian assembly
class test_jacobian:

	params = make_params()

	def test_shape_and_sparsity(self):
		n = self.params.grid.n
		J = rm.jacobian(random_state(self.params.grid), self.params)

		assert J.shape == (2*n, 2*n)
		assert J.matrix.nnz <= 22*n

	def test_zero_direction(self):
		J = rm.jacobian(random_state(self.params.grid), self.params)
		assert_array_equal(J.dot(np.zeros(128)), np.zeros(128))

	def test_finite_differences(self):
		#assert J d matches central differences on 20 random states
		h_fd = 1e-5

		for _ in range(20):
			state = random_state(self.params.grid)
			x = state.stacked()
			d = rng.standard_normal(len(x))
			d[64:] *= 0.1

			Jd = rm.jacobian(state, self.params).dot(d)
			fd = (
				stacked_residual(self.params, x + h_fd*d)
				- stacked_residual(self.params, x - h_fd*d))/(2*h_fd)

			assert np.max(np.abs(fd - Jd))/np.max(np.abs(Jd)) <= 1e-6

	def test_nonpositive_density(self):
		m = np.ones(64)
		m[5] = 0.0

		with pytest.raises(NonpositiveDensity):
			_jacobian_arrays(np.zeros(64), m, self.params)

#test the coercivity form and discrete duality
class test_coercivity_duality:

	def test_zero_direction(self):
		params = make_params()
		state = random_state(params.grid)
		z = np.zeros(64)

		assert rm.coercivity_form(state, params, z, z) == 0
		assert rm.duality_check(state, params, z, z) == 0

	def test_constant_state_unit_v(self):
		#assert only eps*int v**2 survives
		params = make_params()
		state = rm.State.from_arrays(params.grid, 0.0, 1.0)

		assert_allclose(
			rm.coercivity_form(state, params, np.ones(64), np.zeros(64)),
			0.1,
			rtol = 1e-14)

	def test_constant_directions(self):
		#assert the form reduces to alpha*m**(alpha-1)*f**2 + eps*(v**2 + f**2)
		params = make_params()
		state = rm.State.from_arrays(params.grid, 0.0, 0.64)
		B = rm.coercivity_form(state, params, 2.0*np.ones(64), 3.0*np.ones(64))

		assert_allclose(B, 1.5*0.8*9 + 0.1*(4 + 9), rtol = 1e-14)
		assert rm.duality_check(
			state, params, 2.0*np.ones(64), 3.0*np.ones(64)) <= 1e-10*B

	def test_exact_duality(self):
		#assert swap-pairing == coercivity form on 50 random pairs
		for k in range(50):
			params = make_params(alpha = 0.5 + 1.5*rng.random())
			state = random_state(params.grid)
			v = rng.standard_normal(64)
			f = rng.standard_normal(64)

			B = rm.coercivity_form(state, params, v, f)
			dev = rm.duality_check(state, params, v, f)

			assert dev <= 1e-10*B

	def test_coercivity_lower_bound(self):
		#assert B >= eps*|(v, f)|_H1**2, strictly
		params = make_params()

		for _ in range(50):
			state = random_state(params.grid)
			v = rng.standard_normal(64)
			f = rng.standard_normal(64)

			assert rm.coercivity_form(state, params, v, f) > 0.1*rm.h1_norm_sq(v, f)
