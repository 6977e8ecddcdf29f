'''
This module contains the Hamiltonian superclass, the model power Hamiltonian,
a plug-in Hamiltonian built from callables, and the growth-assumption audit.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'CustomHamiltonian',
	'GrowthAudit',
	'Hamiltonian',
	'PowerHamiltonian',
	'audit_assumptions',
	]

import numpy as np
import pandas as pd
import warnings

from dataclasses import dataclass, field

#import exceptions
from .exceptions import(
	AssumptionViolation,
	AssumptionWarning,
	InvalidRange,
	ParameterError,
	)

#import helper functions
from .hamiltonian_helper import(
	_derive_growth_constants,
	_growth_checks,
	)


class Hamiltonian(object):
	'''
	Class to store a convex Hamiltonian H(p) with its first two derivatives.
	Intended for subclassing, do not call directly.

	Every other module consumes a Hamiltonian only through ``h_value``,
	``h_prime``, ``h_second`` and the growth exponent ``gamma``.
	'''

	def __init__(self, gamma):

		try:
			gamma = float(gamma)

		except (TypeError, ValueError):
			raise ParameterError('gamma must be a real scalar, got %r' % gamma)

		if not np.isfinite(gamma) or gamma <= 1:
			raise ParameterError('gamma must be finite and > 1, got %r' % gamma)

		self.gamma = gamma

	def h_value(self, p):
		raise NotImplementedError

	def h_prime(self, p):
		raise NotImplementedError

	def h_second(self, p):
		raise NotImplementedError

	#define method for the Lagrangian in momentum coordinates
	def lagrangian(self, p):
		'''
		Evaluates ``p*H'(p) - H(p)``.

		Parameters
		----------
		p : scalar or array-like
			Momenta.

		Returns
		-------
		L : np.ndarray
			Same shape as `p`.
		'''

		p = np.asarray(p, dtype = float)

		return p*self.h_prime(p) - self.h_value(p)

	#define method for dictionary export
	def to_dict(self):
		'''
		Returns a JSON-friendly description of the Hamiltonian.
		'''

		return {'type' : type(self).__name__, 'gamma' : self.gamma}


class PowerHamiltonian(Hamiltonian):
	__doc__='''
	Class for the model Hamiltonian ``H(p) = (1 + p**2)**(gamma/2)`` with
	subquadratic growth exponent ``1 < gamma < 2``.

	Parameters
	----------
	gamma : float
		Growth exponent.

	Raises
	------
	ParameterError
		If `gamma` is not strictly between 1 and 2.

	Examples
	--------
	Evaluating the Hamiltonian and its derivatives::

		#import modules
		import regmfg as rm

		ham = rm.PowerHamiltonian(1.5)
		ham.h_value(1.0) #2**0.75
		ham.h_second(0.0) #1.5

	**Attributes**

	gamma : float
		Growth exponent.
	'''

	def __init__(self, gamma):

		super(PowerHamiltonian, self).__init__(gamma)

		if not self.gamma < 2:
			raise ParameterError(
				'gamma must satisfy 1 < gamma < 2, got %r' % self.gamma)

	def __repr__(self):
		return 'PowerHamiltonian(gamma=%r)' % self.gamma

	def h_value(self, p):
		'''
		Evaluates ``(1 + p**2)**(gamma/2)``.
		'''

		p = np.asarray(p, dtype = float)

		return (1 + p**2)**(self.gamma/2)

	def h_prime(self, p):
		'''
		Evaluates ``gamma*p*(1 + p**2)**(gamma/2 - 1)``.
		'''

		p = np.asarray(p, dtype = float)
		g = self.gamma

		return g*p*(1 + p**2)**(g/2 - 1)

	def h_second(self, p):
		'''
		Evaluates ``gamma*(1 + p**2)**(gamma/2 - 2)*(1 + (gamma - 1)*p**2)``,
		strictly positive for every p.
		'''

		p = np.asarray(p, dtype = float)
		g = self.gamma

		return g*(1 + p**2)**(g/2 - 2)*(1 + (g - 1)*p**2)


class CustomHamiltonian(Hamiltonian):
	__doc__='''
	Class for a user-supplied Hamiltonian given by three vectorized callables.

	Parameters
	----------
	value : callable
		H(p).

	prime : callable
		H'(p).

	second : callable
		H''(p).

	gamma : float
		Growth exponent used by the growth audit. Must be > 1.

	name : None or str
		Label used in reports. Defaults to `None`.

	Raises
	------
	ParameterError
		If any of `value`, `prime`, `second` is not callable, or if `gamma`
		is not > 1.

	Notes
	-----
	No growth or convexity property is checked at construction; run
	``rm.audit_assumptions`` on the instance before solving with it.

	**Attributes**

	gamma : float
		Growth exponent.

	name : str
		Label used in reports.
	'''

	def __init__(self, value, prime, second, gamma, name = None):

		super(CustomHamiltonian, self).__init__(gamma)

		for fn in (value, prime, second):
			if not callable(fn):
				raise ParameterError('Hamiltonian components must be callable')

		self._value = value
		self._prime = prime
		self._second = second
		self.name = name or 'custom'

	def __repr__(self):
		return 'CustomHamiltonian(name=%r, gamma=%r)' % (self.name, self.gamma)

	def h_value(self, p):
		return np.asarray(self._value(np.asarray(p, dtype = float)), dtype = float)

	def h_prime(self, p):
		return np.asarray(self._prime(np.asarray(p, dtype = float)), dtype = float)

	def h_second(self, p):
		return np.asarray(self._second(np.asarray(p, dtype = float)), dtype = float)

	def to_dict(self):
		d = super(CustomHamiltonian, self).to_dict()
		d['name'] = self.name

		return d


@dataclass
class GrowthAudit:
	'''
	Result of ``audit_assumptions``: the sampled momentum interval, every
	violated inequality as ``(assumption id, p, lhs, rhs)`` and the constants
	used.
	'''

	p_range: tuple
	violations: list = field(default_factory = list)
	constants_used: dict = field(default_factory = dict)

	@property
	def passed(self):
		return len(self.violations) == 0

	def to_frame(self):
		'''
		Returns the violations as a ``pd.DataFrame`` with columns
		'assumption', 'p', 'lhs', 'rhs'.
		'''

		return pd.DataFrame(
			self.violations,
			columns = ['assumption', 'p', 'lhs', 'rhs'])


#define function to audit the growth assumptions on samples
def audit_assumptions(
	model,
	p_max,
	samples = 2001,
	constants = None,
	strict = False):
	'''
	Audits a Hamiltonian against the two-sided growth bounds on H and on
	``pH'(p) - H(p)``, convexity, the derivative bound
	``|H'(p)| <= Cbar*(1 + |p|**(gamma - 1))`` and the range
	``1 < gamma < 2``, on a symmetric sample of [-p_max, p_max].

	Parameters
	----------
	model : rm.Hamiltonian
		Hamiltonian to audit.

	p_max : float
		Half-width of the sampled interval.

	samples : int
		Number of samples, at least 100. Defaults to `2001`.

	constants : None or dict
		Constants to check against (keys 'C1', 'C2', 'C3', 'Ct1', 'Ct2',
		'Ct3', 'Cbar'). If `None`, derives them with the numerical
		minimization oracle. Defaults to `None`.

	strict : Boolean
		If `True`, raise on any violation instead of warning. Defaults to
		`False`.

	Returns
	-------
	audit : rm.GrowthAudit
		The audit record.

	Raises
	------
	InvalidRange
		If `p_max` is not positive or `samples` is smaller than 100.

	AssumptionViolation
		If ``strict = True`` and any inequality fails.

	Warnings
	--------
	AssumptionWarning
		If ``strict = False`` and any inequality fails.
	'''

	if not p_max > 0:
		raise InvalidRange('p_max must be positive, got %r' % p_max)

	if int(samples) < 100:
		raise InvalidRange('samples must be at least 100, got %r' % samples)

	p = np.linspace(-p_max, p_max, int(samples))

	if constants is None:
		constants = _derive_growth_constants(
			model,
			p_hi = max(1e6, 10*p_max),
			p_extra = p)

	violations = _growth_checks(model, p, constants)
	audit = GrowthAudit(
		p_range = (-float(p_max), float(p_max)),
		violations = violations,
		constants_used = dict(constants))

	if violations:
		ids = sorted(set(v[0] for v in violations))
		msg = (
			'Hamiltonian %r violates %d sampled inequalities (%s)'
			% (model, len(violations), ', '.join(ids)))

		if strict:
			raise AssumptionViolation(msg)

		warnings.warn(msg, AssumptionWarning)

	return audit
