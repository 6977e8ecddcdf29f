'''
This module evaluates the a-priori quantities and integral identities of the
regularized system on a discrete state: the energy, second-order and mass
identities, the positivity certificate for the density, the smallness of
eps*(u - u_xx) and the 1/2-Holder seminorms.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'DiagnosticsReport',
	'diagnose',
	'energy_identity_residual',
	'energy_terms',
	'eps_smallness',
	'fit_holder_growth',
	'holder_report',
	'm_lower_bound_certificate',
	'mass_identity_residual',
	'second_order_identity_residual',
	'second_order_terms',
	]

import logging
import numpy as np
import pandas as pd
import warnings

from dataclasses import asdict, dataclass, field

#import exceptions
from .exceptions import(
	CertificateViolated,
	LengthError,
	NotConvergedWarning,
	)

#import helper functions
from .core_functions import(
	diff1,
	diff2,
	holder_half_seminorm,
	integrate,
	sup_norm,
	)

from .system import(
	_check_grid,
	reconstruct_mxx,
	reconstruct_uxx,
	residual_norm,
	)

from .system_helper import(
	_assert_positive,
	)

logger = logging.getLogger(__name__)

#tolerance factor on the certificate, in units of h**2
CERT_SLACK = 10.0

#residual factor above which a state is flagged as not converged
NOT_CONVERGED_FACTOR = 100.0


@dataclass
class DiagnosticsReport:
	'''
	All a-priori quantities and identity residuals of one state.

	Energy terms are ``E1 = int m**(alpha+1)``,
	``E2 = int |u_x|**gamma (1 + m)`` and
	``E3 = eps*int(u**2 + m**2 + u_x**2 + m_x**2)``. ``inv_mass`` is
	``I1 = int 1/m`` and ``log_grad`` is ``I2 = int ((ln m)_x)**2``.
	'''

	lam: float
	epsilon: float
	n: int
	residual: float
	not_converged: bool
	energy_terms: dict
	energy_identity_residual: float
	second_order_terms: dict
	second_order_identity_residual: float
	mass_identity_residual: float
	mass: float
	mass_young_slack: float
	inv_mass: float
	log_grad: float
	m_min: float
	m_lower_bound_certificate: float
	m_lower_bound_coarse: float
	eps_smallness: float
	holder: dict = field(default_factory = dict)
	sup_norms: dict = field(default_factory = dict)
	uxx_reconstruction_error: float = 0.0
	mxx_reconstruction_error: float = 0.0
	potential_norms: dict = field(default_factory = dict)

	def to_dict(self):
		'''
		Returns the report as nested built-in types (JSON-ready).
		'''

		return asdict(self)

	def to_series(self):
		'''
		Returns the report flattened to a ``pd.Series``, nested entries
		keyed as 'group.key'.
		'''

		flat = {}

		for key, val in self.to_dict().items():

			if isinstance(val, dict):
				for k, v in val.items():
					flat['%s.%s' % (key, k)] = v

			else:
				flat[key] = val

		return pd.Series(flat)


#pull the discrete fields needed by every identity
def _fields(state, params):

	_check_grid(state, params)

	u = state.u.values
	m = state.m.values
	_assert_positive(m)

	return u, m, diff1(u), diff2(u), diff1(m), diff2(m)

#define function for the energy terms
def energy_terms(state, params):
	'''
	Energy quantities E1, E2, E3 of a state.

	Returns
	-------
	terms : dict
		Keys 'E1', 'E2', 'E3'.
	'''

	u, m, ux, _, mx, _ = _fields(state, params)
	g = params.hamiltonian.gamma

	return {
		'E1' : integrate(m**(params.alpha + 1)),
		'E2' : integrate(np.abs(ux)**g*(1 + m)),
		'E3' : params.epsilon*integrate(u**2 + m**2 + ux**2 + mx**2),
		}

#define function for the energy identity
def energy_identity_residual(state, params):
	'''
	Residual of the energy identity obtained by testing the first equation
	against ``1 + eps - m`` and the second against u,

		LHS = int[(1 + eps)*H(u_x) + m*(u_x*H'(u_x) - H(u_x))]
			+ int m**(alpha + 1) + eps*int(u**2 + m**2 + u_x**2 + m_x**2)
		RHS = -eps*int u + int (m - 1 - eps)*lam*V
			+ (1 + eps)*int m**alpha + eps*(1 + eps)*int m

	Parameters
	----------
	state : rm.State
		Converged state.

	params : rm.ProblemParams
		Problem instance.

	Returns
	-------
	res : float
		``|LHS - RHS|``. O(h**2) for converged solutions and zero to rounding
		for constant solutions.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.
	'''

	u, m, ux, _, mx, _ = _fields(state, params)

	ham = params.hamiltonian
	eps = params.epsilon
	a = params.alpha

	H = ham.h_value(ux)
	Hp = ham.h_prime(ux)

	lhs = (
		integrate((1 + eps)*H + m*(ux*Hp - H))
		+ integrate(m**(a + 1))
		+ eps*integrate(u**2 + m**2 + ux**2 + mx**2))

	rhs = (
		-eps*integrate(u)
		+ integrate((m - 1 - eps)*params.lam*params.V)
		+ (1 + eps)*integrate(m**a)
		+ eps*(1 + eps)*integrate(m))

	return abs(lhs - rhs)

#define function for the second-order terms
def second_order_terms(state, params):
	'''
	Individual terms of the second-order identity obtained by testing the
	first equation against m_xx and the second against -u_xx.

	Returns
	-------
	terms : dict
		'hessian' ``int H''(u_x) m u_xx**2``,
		'congestion' ``int alpha m**(alpha-1) m_x**2``,
		'regularization' ``eps*int(m_x**2 + m_xx**2 + u_x**2 + u_xx**2)``,
		'potential' ``int lam V m_xx`` and
		'potential_rearranged' ``int lam V'' m`` (analytic V'').
		The first three are nonnegative by construction.
	'''

	u, m, ux, uxx, mx, mxx = _fields(state, params)

	ham = params.hamiltonian
	eps = params.epsilon
	a = params.alpha
	lam = params.lam

	return {
		'hessian' : integrate(ham.h_second(ux)*m*uxx**2),
		'congestion' : integrate(a*m**(a - 1)*mx**2),
		'regularization' : eps*integrate(mx**2 + mxx**2 + ux**2 + uxx**2),
		'potential' : integrate(lam*params.V*mxx),
		'potential_rearranged' : integrate(lam*params.d2V*m),
		}

#define function for the second-order identity
def second_order_identity_residual(state, params):
	'''
	Residual of the second-order identity,

		| int H''(u_x) m u_xx**2 + int alpha m**(alpha-1) m_x**2
		  + eps*int(m_x**2 + m_xx**2 + u_x**2 + u_xx**2) + int lam V m_xx |.

	Zero for constant states, O(h**2) for converged solutions.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.
	'''

	t = second_order_terms(state, params)

	return abs(t['hessian'] + t['congestion'] + t['regularization'] + t['potential'])

#define function for the mass identity
def mass_identity_residual(state, params):
	'''
	Residual of the identity obtained by dividing the second equation by m
	and integrating,

		| int(1/m + m_x**2/m**2) - 1 - eps*int (u - u_xx)/m
		  + int H'(u_x) m_x/m |.

	Raises
	------
	NonpositiveDensity
		If any entry of m is not > 0.

	Notes
	-----
	The flux term enters with a plus sign: integrating ``(H'(u_x) m)_x / m``
	by parts gives ``int H'(u_x) m_x / m``.
	'''

	u, m, ux, uxx, mx, _ = _fields(state, params)

	eps = params.epsilon
	Hp = params.hamiltonian.h_prime(ux)

	val = (
		integrate(1/m + mx**2/m**2) - 1
		- eps*integrate((u - uxx)/m)
		+ integrate(Hp*mx/m))

	return abs(val)

#define function for the positivity certificate
def m_lower_bound_certificate(state, params, check = True):
	'''
	A posteriori lower bound on the density,

		m_bar = exp(-sqrt(I2)) / I1,   I1 = int 1/m,   I2 = int (diff1(ln m))**2.

	Some node x0 has ``1/m(x0) <= I1``, and the oscillation of ln m is at
	most sqrt(I2) by the one-dimensional Morrey inequality.

	Parameters
	----------
	state : rm.State
		Admissible state.

	params : rm.ProblemParams
		Problem instance.

	check : Boolean
		If `True`, verify ``m_min >= m_bar - 10*h**2``. Defaults to `True`.

	Returns
	-------
	m_bar : float
		The certificate. Equal to m for constant states.

	Raises
	------
	CertificateViolated
		If ``check = True`` and the density dips below its certificate.

	NonpositiveDensity
		If any entry of m is not > 0.

	Notes
	-----
	This mean-value form is sharper than taking x0 with
	``1/m(x0) <= I1 + 1``; ``_coarse_lower_bound`` gives that weaker value.
	'''

	_, m, _, _, _, _ = _fields(state, params)

	I1, I2 = _positivity_integrals(m)
	cert = np.exp(-np.sqrt(I2))/I1

	if check:
		tol = CERT_SLACK*params.grid.h**2

		if np.min(m) < cert - tol:
			raise CertificateViolated(
				'min m = %.12g is below its certificate %.12g (tolerance %.3g)'
				% (np.min(m), cert, tol))

	return float(cert)

#inverse mass and log-gradient integrals
def _positivity_integrals(m):
	I1 = integrate(1/m)
	I2 = integrate(diff1(np.log(m))**2)

	return I1, I2

#weaker lower bound using C = max(I1, I2)
def _coarse_lower_bound(I1, I2):
	C = max(I1, I2)

	return float(np.exp(-np.sqrt(C) - np.log(C + 1)))

#define function for the smallness quantity
def eps_smallness(state, params):
	'''
	Returns ``max|eps*(u - diff2 u)|``. The continuation driver warns when it
	reaches 1/2 at an accepted step.
	'''

	_check_grid(state, params)
	u = state.u.values

	return float(params.epsilon*np.max(np.abs(u - diff2(u))))

#define function for the Holder report
def holder_report(state, params):
	'''
	1/2-Holder seminorms and sup norms of u, m, u_x and m_x, with the
	discrete L2 norm of each field's derivative (the Morrey bound for the
	seminorm).

	Parameters
	----------
	state : rm.State
		Admissible state.

	params : rm.ProblemParams
		Problem instance.

	Returns
	-------
	report : dict
		Keys 'seminorms', 'sup_norms', 'l2_derivatives', each a dict keyed
		'u', 'm', 'u_x', 'm_x'.
	'''

	u, m, ux, uxx, mx, mxx = _fields(state, params)

	fields = {'u' : (u, ux), 'm' : (m, mx), 'u_x' : (ux, uxx), 'm_x' : (mx, mxx)}

	return {
		'seminorms' : {k : holder_half_seminorm(f) for k, (f, _) in fields.items()},
		'sup_norms' : {k : sup_norm(f) for k, (f, _) in fields.items()},
		'l2_derivatives' : {
			k : float(np.sqrt(integrate(df**2))) for k, (_, df) in fields.items()},
		}

#define function to fit seminorm growth against epsilon
def fit_holder_growth(epsilons, seminorms):
	'''
	Fits ``seminorm ~ c*eps**p`` by least squares in log-log space for each
	field of an epsilon sweep.

	Parameters
	----------
	epsilons : array-like
		Regularization values, at least two.

	seminorms : pd.DataFrame or dict
		Seminorm values per field, one entry per epsilon.

	Returns
	-------
	fit : pd.DataFrame
		Index is the field name; columns 'exponent', 'constant' and
		'bound_constant', the smallest c with ``seminorm <= c*eps**-0.5`` on
		every sweep member.

	Raises
	------
	LengthError
		If fewer than two epsilons are given or the lengths differ.
	'''

	eps = np.asarray(epsilons, dtype = float)
	frame = pd.DataFrame(seminorms)

	if len(eps) < 2 or len(frame) != len(eps):
		raise LengthError('need at least two sweep members with one row each')

	rows = {}

	for key in frame.columns:
		s = frame[key].values.astype(float)

		#constant fields have zero seminorm, nothing to fit
		if np.any(s <= 0):
			rows[key] = [0.0, 0.0, 0.0]
			continue

		p, logc = np.polyfit(np.log(eps), np.log(s), 1)
		rows[key] = [float(p), float(np.exp(logc)), float(np.max(s*np.sqrt(eps)))]

	return pd.DataFrame.from_dict(
		rows,
		orient = 'index',
		columns = ['exponent', 'constant', 'bound_constant'])

#define function for the full report
def diagnose(state, params, tol = 1e-10, check_certificate = True):
	'''
	Computes the full ``rm.DiagnosticsReport`` of a state.

	Parameters
	----------
	state : rm.State
		Admissible state, ideally converged.

	params : rm.ProblemParams
		Problem instance.

	tol : float
		Residual tolerance the state was solved to. States with residual
		above ``100*tol`` are flagged. Defaults to `1e-10`.

	check_certificate : Boolean
		Passed to ``m_lower_bound_certificate``. Defaults to `True`.

	Returns
	-------
	report : rm.DiagnosticsReport

	Raises
	------
	CertificateViolated
		If the density dips below its own certificate.

	Warnings
	--------
	NotConvergedWarning
		If the residual exceeds ``100*tol``; identity residuals are then
		not meaningful.
	'''

	u, m, ux, uxx, mx, mxx = _fields(state, params)

	res = residual_norm(state, params)
	not_converged = res > NOT_CONVERGED_FACTOR*tol

	if not_converged:
		warnings.warn(
			'state residual %.3e exceeds %g x tol; identities are not meaningful'
			% (res, NOT_CONVERGED_FACTOR), NotConvergedWarning)

	E = energy_terms(state, params)
	I1, I2 = _positivity_integrals(m)
	a = params.alpha
	mass = integrate(m)

	hold = holder_report(state, params)

	report = DiagnosticsReport(
		lam = params.lam,
		epsilon = params.epsilon,
		n = params.grid.n,
		residual = res,
		not_converged = bool(not_converged),
		energy_terms = E,
		energy_identity_residual = energy_identity_residual(state, params),
		second_order_terms = second_order_terms(state, params),
		second_order_identity_residual = second_order_identity_residual(state, params),
		mass_identity_residual = mass_identity_residual(state, params),
		mass = mass,
		mass_young_slack = E['E1']/(a + 1) + a/(a + 1) - mass,
		inv_mass = I1,
		log_grad = I2,
		m_min = float(np.min(m)),
		m_lower_bound_certificate = m_lower_bound_certificate(
			state, params, check = check_certificate),
		m_lower_bound_coarse = _coarse_lower_bound(I1, I2),
		eps_smallness = eps_smallness(state, params),
		holder = hold['seminorms'],
		sup_norms = hold['sup_norms'],
		uxx_reconstruction_error = float(
			np.max(np.abs(reconstruct_uxx(state, params).values - uxx))),
		mxx_reconstruction_error = float(
			np.max(np.abs(reconstruct_mxx(state, params).values - mxx))),
		potential_norms = params.potential.norms(params.grid),
		)

	logger.debug(
		'diagnostics at lambda = %g: m_min = %.6g, certificate = %.6g',
		params.lam, report.m_min, report.m_lower_bound_certificate)

	return report
