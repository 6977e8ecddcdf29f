'''
This module contains potential module tests,
'''

import numpy as np
import pytest

import regmfg as rm

from numpy.testing import(
	assert_allclose,
	assert_array_equal,
	)

from regmfg.exceptions import(
	ArrayError,
	NyquistViolation,
	ParameterError,
	)

grid = rm.PeriodicGrid(64)

#test creating potential instances
class test_potential_creation:

	def test_default_is_zero(self):
		pot = rm.TrigPotential()

		assert pot.is_zero
		assert pot.K == 0

		for f in pot.sample(grid):
			assert_array_equal(f.values, np.zeros(64))

	def test_explicit_zeros(self):
		assert rm.TrigPotential(cos = [0, 0], sin = [0]).is_zero

	def test_padding(self):
		pot = rm.TrigPotential(cos = [1.0], sin = [0.0, 0.3])

		assert pot.K == 2
		assert_array_equal(pot.a, [1.0, 0.0])
		assert_array_equal(pot.b, [0.0, 0.3])
		assert not pot.is_zero

	def test_input_types(self):
		#assert that it doesn't take NaN coefficients
		with pytest.raises(ArrayError):
			rm.TrigPotential(cos = [np.nan])

		#assert that it doesn't take 2-d coefficients
		with pytest.raises(ArrayError):
			rm.TrigPotential(cos = [[1.0, 2.0]])

	def test_to_dict(self):
		pot = rm.TrigPotential(cos = [0.5])
		assert pot.to_dict() == {'cos' : [0.5], 'sin' : [0.0]}

#test sampling potentials
class test_potential_sample:

	pot = rm.TrigPotential(cos = [0.5])

	def test_analytic_derivatives(self):
		V, dV, d2V = self.pot.sample(grid)
		w = 2*np.pi*grid.x

		assert_allclose(V.values, 0.5*np.cos(w), atol = 1e-15)
		assert_allclose(dV.values, -np.pi*np.sin(w), atol = 1e-14)
		assert_allclose(d2V.values, -2*np.pi**2*np.cos(w), atol = 1e-13)

	def test_zero_mean(self):
		V, _, _ = rm.TrigPotential(cos = [0.5, 0.1], sin = [0.2]).sample(grid)
		assert abs(rm.integrate(V)) <= 1e-15

	def test_second_difference(self):
		#assert diff2 of the samples approaches V'' at second order
		V, _, d2V = self.pot.sample(grid)
		err = np.max(np.abs(rm.diff2(V).values - d2V.values))

		#leading term of the Fourier symbol error
		assert err <= 0.5*(2*np.pi)**4/12*grid.h**2

	def test_nyquist(self):
		#assert that the highest mode must lie below n/2
		small = rm.PeriodicGrid(8)

		with pytest.raises(NyquistViolation):
			rm.TrigPotential(cos = [0, 0, 0, 1]).sample(small)

		#assert that it is a parameter error
		with pytest.raises(ParameterError):
			rm.TrigPotential(sin = [0, 0, 0, 0, 1]).sample(small)

		#assert that K = 3 is fine on 8 nodes
		rm.TrigPotential(cos = [0, 0, 1]).sample(small)

	def test_norms(self):
		norms = self.pot.norms(grid)

		assert_allclose(norms['V_sup'], 0.5, rtol = 1e-15)
		assert_allclose(norms['dV_sup'], np.pi, rtol = 1e-14)
		assert_allclose(norms['d2V_sup'], 2*np.pi**2, rtol = 1e-14)
		assert_allclose(
			norms['V_C2'],
			norms['V_sup'] + norms['dV_sup'] + norms['d2V_sup'],
			rtol = 1e-15)
