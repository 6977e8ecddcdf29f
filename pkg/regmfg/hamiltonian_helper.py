'''
This module contains helper functions for deriving and checking the growth
constants of a Hamiltonian.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = ['_derive_growth_constants', '_growth_checks']

import numpy as np

#relative safety margin applied to every derived constant
_SAFETY = 1e-9

#define function to widen a lower-envelope constant
def _deflate(c):
	return c - _SAFETY*max(abs(c), 1.0)

#define function to widen an upper-envelope constant
def _inflate(c):
	return c + _SAFETY*max(abs(c), 1.0)

#define function to derive growth constants numerically
def _derive_growth_constants(
	model,
	p_hi = 1e6,
	p_lo = 1e-6,
	nsamp = 4001,
	p_extra = None):
	'''
	Derives the constants of the two-sided growth bounds on ``H`` and on
	``pH'(p) - H(p)`` and of the derivative bound, by minimizing and
	maximizing the relevant ratios over a log-spaced momentum grid.

	Parameters
	----------
	model : rm.Hamiltonian
		Hamiltonian to analyze.

	p_hi : float
		Largest sampled |p|. Defaults to `1e6`.

	p_lo : float
		Smallest nonzero sampled |p|. Defaults to `1e-6`.

	nsamp : int
		Number of log-spaced samples on each side of zero. Defaults to
		`4001`.

	p_extra : None or array-like
		Extra momenta to include in the search, e.g. the samples of an audit.
		Defaults to `None`.

	Returns
	-------
	constants : dict
		Keys 'C1', 'C2', 'C3', 'Ct1', 'Ct2', 'Ct3', 'Cbar'.

	Notes
	-----
	The additive constants are fixed first, ``C1 = Ct1 = 1 + |H(0)|``
	(``pH'(p) - H(p)`` equals ``-H(0)`` at the origin). The multiplicative
	constants are then the extreme ratios over the sampled grid, widened by a
	relative margin of 1e-9. For the model family ``(1 + p**2)**(gamma/2)``
	this gives ``C2, C3 -> 1`` and ``Ct2, Ct3 -> gamma - 1``.
	'''

	g = model.gamma

	#symmetric sample, zero included
	pos = np.logspace(np.log10(p_lo), np.log10(p_hi), nsamp)
	p = np.concatenate((-pos[::-1], [0.0], pos))

	if p_extra is not None:
		p = np.union1d(p, np.asarray(p_extra, dtype = float))

	H = model.h_value(p)
	L = model.lagrangian(p)
	Hp = model.h_prime(p)

	h0 = float(model.h_value(np.array([0.0]))[0])
	C1 = 1.0 + abs(h0)
	Ct1 = C1

	#ratios only where |p| > 0
	nz = p != 0
	ap = np.abs(p[nz])**g

	C2 = np.min((H[nz] + C1)/ap)
	C3 = np.max((H[nz] - C1)/ap)
	Ct2 = np.min((L[nz] + Ct1)/ap)
	Ct3 = np.max((L[nz] - Ct1)/ap)

	Cbar = np.max(np.abs(Hp)/(1 + np.abs(p)**(g - 1)))

	constants = {
		'C1' : C1,
		'C2' : _deflate(float(C2)),
		'C3' : _inflate(float(C3)),
		'Ct1' : Ct1,
		'Ct2' : _deflate(float(Ct2)),
		'Ct3' : _inflate(float(Ct3)),
		'Cbar' : _inflate(float(Cbar)),
		}

	return constants

#define function to evaluate every sampled inequality
def _growth_checks(model, p, constants):
	'''
	Evaluates the sampled growth, convexity and derivative inequalities.

	Parameters
	----------
	model : rm.Hamiltonian
		Hamiltonian to check.

	p : np.ndarray
		Sampled momenta.

	constants : dict
		Constants as returned by ``_derive_growth_constants``.

	Returns
	-------
	violations : list
		List of ``(assumption id, p, lhs, rhs)`` tuples for every sample at
		which ``lhs <= rhs`` fails (``lhs < rhs`` for convexity).
	'''

	g = model.gamma
	c = constants
	ap = np.abs(p)**g

	H = model.h_value(p)
	L = model.lagrangian(p)
	Hp = model.h_prime(p)
	Hpp = model.h_second(p)

	#(id, lhs, rhs, strict)
	checks = [
		('A1-lower', -c['C1'] + c['C2']*ap, H, False),
		('A1-upper', H, c['C1'] + c['C3']*ap, False),
		('A2-lower', -c['Ct1'] + c['Ct2']*ap, L, False),
		('A2-upper', L, c['Ct1'] + c['Ct3']*ap, False),
		('A4-convex', np.zeros_like(p), Hpp, True),
		('A7', np.abs(Hp), c['Cbar']*(1 + np.abs(p)**(g - 1)), False),
		]

	violations = []

	for aid, lhs, rhs, strict in checks:
		bad = lhs >= rhs if strict else lhs > rhs

		for i in np.where(bad)[0]:
			violations.append((aid, float(p[i]), float(lhs[i]), float(rhs[i])))

	#constant checks, positivity of every constant
	for key in ('C1', 'C2', 'C3', 'Ct1', 'Ct2', 'Ct3', 'Cbar'):
		if not c[key] > 0:
			violations.append(('constant-' + key, None, float(c[key]), 0.0))

	#subquadratic growth exponent
	if not 1 < g < 2:
		violations.append(('A6-gamma', None, float(g), 2.0))

	return violations
