'''
This module contains diagnostics module tests,
'''

import json
import numpy as np
import pandas as pd
import pytest
import warnings

import regmfg as rm

from numpy.testing import(
	assert_allclose,
	)

from regmfg.exceptions import(
	CertificateViolated,
	LengthError,
	NotConvergedWarning,
	)

from regmfg.diagnostics import(
	_coarse_lower_bound,
	_positivity_integrals,
	)

M0 = 1.1/1.11
U0 = (1 - M0)/0.1

#function to build the default problem instance
def make_params(n = 128, lam = 1.0, cos = (0.5,)):
	return rm.ProblemParams(
		hamiltonian = rm.PowerHamiltonian(1.5),
		alpha = 1.0,
		epsilon = 0.1,
		lam = lam,
		grid = rm.PeriodicGrid(n),
		potential = rm.TrigPotential(cos = cos))

#function to build the constant seed state
def seed_state(params):
	return rm.State.from_arrays(params.grid, U0, M0)

#lambda = 1 solutions of the default problem at three resolutions
@pytest.fixture(scope = 'module')
def solutions():
	sols = {}

	for n in (128, 256, 512):
		#rounding floor of the residual is near 1e-10 at n = 512
		tol = 1e-9 if n == 512 else 1e-10
		params = make_params(n = n)
		trace = rm.continue_lambda(params, opts = rm.NewtonOptions(tol_residual = tol))

		assert trace.completed
		sols[n] = (trace, params)

	return sols

#test the identities on constant states
class test_constant_state_identities:

	params = make_params(lam = 0.0, cos = ())
	state = seed_state(params)

	def test_energy(self):
		assert rm.energy_identity_residual(self.state, self.params) <= 1e-13

	def test_second_order(self):
		terms = rm.second_order_terms(self.state, self.params)

		assert all(v == 0 for v in terms.values())
		assert rm.second_order_identity_residual(self.state, self.params) == 0

	def test_mass(self):
		assert rm.mass_identity_residual(self.state, self.params) <= 1e-13

	def test_certificate_equality(self):
		#assert the certificate is attained at the seed
		cert = rm.m_lower_bound_certificate(self.state, self.params)
		assert_allclose(cert, M0, atol = 1e-12)

	def test_smallness(self):
		assert_allclose(
			rm.eps_smallness(self.state, self.params), 0.1*U0, rtol = 1e-12)
		assert rm.eps_smallness(
			rm.State.from_arrays(self.params.grid, 0.0, 1.0), self.params) == 0

	def test_holder_zero(self):
		rep = rm.holder_report(self.state, self.params)

		assert set(rep) == {'seminorms', 'sup_norms', 'l2_derivatives'}
		assert all(v == 0 for v in rep['seminorms'].values())
		assert_allclose(rep['sup_norms']['m'], M0, rtol = 1e-15)

	def test_energy_terms(self):
		E = rm.energy_terms(self.state, self.params)

		assert_allclose(E['E1'], M0**2, rtol = 1e-14)
		assert E['E2'] == 0
		assert_allclose(E['E3'], 0.1*(U0**2 + M0**2), rtol = 1e-14)

#test the positivity certificate
class test_certificate:

	#checkerboard density: I2 = 0 but min m sits far below 1/I1
	params = make_params(n = 64, lam = 0.0, cos = ())
	state = rm.State.from_arrays(
		params.grid,
		0.0,
		1 + 0.9*(-1.0)**np.arange(64))

	def test_checkerboard_violation(self):
		with pytest.raises(CertificateViolated):
			rm.m_lower_bound_certificate(self.state, self.params)

	def test_checkerboard_unchecked(self):
		I1, I2 = _positivity_integrals(self.state.m.values)
		cert = rm.m_lower_bound_certificate(self.state, self.params, check = False)

		assert I2 == 0
		assert_allclose(I1, (1/1.9 + 1/0.1)/2, rtol = 1e-14)
		assert_allclose(cert, 1/I1, rtol = 1e-14)

	def test_diagnose_raises(self):
		with pytest.raises(CertificateViolated):
			with warnings.catch_warnings():
				warnings.simplefilter('ignore', NotConvergedWarning)
				rm.diagnose(self.state, self.params)

	def test_coarse_bound(self):
		#assert the coarse bound uses C = max(I1, I2)
		assert_allclose(_coarse_lower_bound(2.0, 1.0), np.exp(-np.sqrt(2.0))/3.0)
		assert_allclose(_coarse_lower_bound(1.0, 4.0), np.exp(-2.0)/5.0)

#test the full report
class test_diagnose:

	params = make_params(lam = 0.0, cos = ())

	def test_seed_report(self):
		state = seed_state(self.params)

		with warnings.catch_warnings():
			warnings.simplefilter('error')
			rep = rm.diagnose(state, self.params)

		assert not rep.not_converged
		assert rep.residual <= 1e-12
		assert rep.n == 128
		assert_allclose(rep.m_lower_bound_certificate, M0, atol = 1e-12)
		assert rep.m_lower_bound_coarse < rep.m_lower_bound_certificate
		assert rep.uxx_reconstruction_error <= 1e-13
		assert rep.mxx_reconstruction_error <= 1e-13

	def test_not_converged(self):
		w = 2*np.pi*self.params.grid.x
		state = rm.State.from_arrays(
			self.params.grid, U0 + 0.01*np.sin(w), M0 + 0.01*np.cos(w))

		with pytest.warns(NotConvergedWarning):
			rep = rm.diagnose(state, self.params, check_certificate = False)

		assert rep.not_converged

	def test_exports(self):
		rep = rm.diagnose(seed_state(self.params), self.params)
		s = rep.to_series()

		assert isinstance(s, pd.Series)
		assert 'energy_terms.E1' in s.index
		assert 'holder.u_x' in s.index
		assert 'potential_norms.V_C2' in s.index

		#assert the dict export is JSON-ready
		d = json.loads(json.dumps(rep.to_dict()))
		assert d['m_lower_bound_coarse'] == rep.m_lower_bound_coarse

#test the Holder growth fit
class test_fit_holder_growth:

	def test_power_law(self):
		eps = np.array([0.2, 0.1, 0.05])
		fit = rm.fit_holder_growth(
			eps,
			{'u' : 3.0*eps**-0.5, 'm' : np.zeros(3)})

		assert list(fit.columns) == ['exponent', 'constant', 'bound_constant']
		assert_allclose(fit.loc['u', 'exponent'], -0.5, rtol = 1e-10)
		assert_allclose(fit.loc['u', 'constant'], 3.0, rtol = 1e-10)
		assert_allclose(fit.loc['u', 'bound_constant'], 3.0, rtol = 1e-12)
		assert fit.loc['m', 'exponent'] == 0

	def test_input_lengths(self):
		with pytest.raises(LengthError):
			rm.fit_holder_growth([0.1], {'u' : [1.0]})

		with pytest.raises(LengthError):
			rm.fit_holder_growth([0.2, 0.1], {'u' : [1.0, 2.0, 3.0]})

#test the identities on computed solutions
class test_solution_identities:

	def test_identity_orders(self, solutions):
		#assert every identity residual falls by about 4 when n doubles
		checks = (
			rm.energy_identity_residual,
			rm.second_order_identity_residual,
			rm.mass_identity_residual)

		for fn in checks:
			res = [fn(tr.final_state, p) for tr, p in (solutions[n] for n in (128, 256, 512))]
			ratios = np.array(res[:-1])/np.array(res[1:])

			assert np.all(ratios >= 3.2), (fn.__name__, res)
			assert np.all(ratios <= 4.8), (fn.__name__, res)

	def test_reconstruction_order(self, solutions):
		errs = []

		for n in (128, 256):
			trace, _ = solutions[n]
			errs.append(trace.steps[-1].diagnostics.uxx_reconstruction_error)

		assert errs[1] <= errs[0]/3

	def test_certificate_along_path(self, solutions):
		#assert the certificate holds on every stored state
		for n, (trace, _) in solutions.items():
			h = 1/n

			for step in trace.steps:
				d = step.diagnostics
				assert d.m_min >= d.m_lower_bound_certificate - 10*h**2
				assert d.m_lower_bound_certificate > 0

	def test_sign_constraints(self, solutions):
		trace, _ = solutions[256]

		for step in trace.steps:
			d = step.diagnostics
			t = d.second_order_terms

			assert t['hessian'] >= 0
			assert t['congestion'] >= 0
			assert t['regularization'] >= 0
			assert d.mass_young_slack >= -1e-12

	def test_potential_rearrangement(self, solutions):
		trace, _ = solutions[256]
		t = trace.steps[-1].diagnostics.second_order_terms

		assert_allclose(t['potential'], t['potential_rearranged'], rtol = 1e-3)

	def test_path_boundedness(self, solutions):
		#assert finite path maxima and a positive density throughout
		trace, _ = solutions[256]
		maxima = trace.path_maxima()

		for key in ('max E1', 'max E2', 'max E3', 'max mass', 'max I1'):
			assert np.isfinite(maxima[key])

		assert maxima['min m_min'] > 0
		assert trace.path_lower_bound() > 0

	def test_holder_report(self, solutions):
		trace, params = solutions[128]
		rep = rm.holder_report(trace.final_state, params)

		assert set(rep['seminorms']) == {'u', 'm', 'u_x', 'm_x'}
		assert all(v > 0 for v in rep['seminorms'].values())

	def test_holder_morrey_bound(self, solutions):
		#assert each seminorm sits below the L2 norm of its derivative
		trace, params = solutions[256]
		rep = rm.holder_report(trace.final_state, params)

		for key in ('u', 'm', 'u_x', 'm_x'):
			assert rep['seminorms'][key] <= 1.1*rep['l2_derivatives'][key]
