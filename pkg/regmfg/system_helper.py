'''
This module contains array-level helper functions for assembling the
regularized MFG residual and the manufactured-solution sources.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'_assert_positive',
	'_derivatives',
	'_mms_fields',
	'_mms_sources',
	'_residual_arrays',
	]

import numpy as np

#import exceptions
from .exceptions import(
	NonpositiveDensity,
	)

#import helper functions
from .core_functions import(
	diff1,
	diff2,
	)

#manufactured fields u* = MMS_U sin(2 pi x), m* = 1 + MMS_M cos(2 pi x)
MMS_U = 0.1
MMS_M = 0.2

#define function to guard the density
def _assert_positive(m):
	'''
	Raises NonpositiveDensity if any entry of `m` is not > 0.
	'''

	m = np.asarray(m)

	if not np.all(m > 0):
		i = int(np.argmin(m))
		raise NonpositiveDensity(
			'density must be strictly positive, min m = %r at node %d'
			% (float(m[i]), i))

#define function to compute discrete derivatives
def _derivatives(u, m):
	'''
	Returns ``(u_x, u_xx, m_x, m_xx)`` from diff1 and diff2.
	'''

	return diff1(u), diff2(u), diff1(m), diff2(m)

#define function to assemble the residual from arrays
def _residual_arrays(u, m, params):
	'''
	Assembles both residual components from bare arrays.

	Parameters
	----------
	u : np.ndarray
		Value function samples.

	m : np.ndarray
		Density samples, strictly positive.

	params : rm.ProblemParams
		Problem instance.

	Returns
	-------
	F1 : np.ndarray
		``u - u_xx + H(u_x) + lam*V - m**alpha - eps*(m - m_xx)``.

	F2 : np.ndarray
		``m - m_xx - diff1(H'(u_x)*m) - 1 + eps*(u - u_xx)``.

	Raises
	------
	NonpositiveDensity
		If any entry of `m` is not > 0.
	'''

	_assert_positive(m)

	ham = params.hamiltonian
	eps = params.epsilon

	ux, uxx, mx, mxx = _derivatives(u, m)

	#collocated flux for the divergence term
	q = ham.h_prime(ux)*m

	F1 = (
		u - uxx + ham.h_value(ux) + params.lam*params.V
		- m**params.alpha - eps*(m - mxx))

	F2 = m - mxx - diff1(q) - 1 + eps*(u - uxx)

	return F1, F2

#define function to sample the manufactured fields
def _mms_fields(x):
	'''
	Analytic manufactured fields and derivatives at positions `x`.

	Returns
	-------
	fields : dict
		Keys 'u', 'ux', 'uxx', 'm', 'mx', 'mxx'.
	'''

	w = 2*np.pi
	s = np.sin(w*x)
	c = np.cos(w*x)

	return {
		'u' : MMS_U*s,
		'ux' : MMS_U*w*c,
		'uxx' : -MMS_U*w**2*s,
		'm' : 1 + MMS_M*c,
		'mx' : -MMS_M*w*s,
		'mxx' : -MMS_M*w**2*c,
		}

#define function to compute the manufactured sources
def _mms_sources(params):
	'''
	Continuum residual of the manufactured fields, evaluated analytically.
	Subtracting these sources makes the manufactured fields an exact solution
	of the continuum system.

	Parameters
	----------
	params : rm.ProblemParams
		Problem instance; its grid sets the sampling nodes.

	Returns
	-------
	g1, g2 : np.ndarray
		Sources for the first and second equation.
	'''

	f = _mms_fields(params.grid.x)
	ham = params.hamiltonian
	eps = params.epsilon

	Hp = ham.h_prime(f['ux'])
	Hpp = ham.h_second(f['ux'])

	#exact divergence of H'(u_x) m
	div = Hpp*f['uxx']*f['m'] + Hp*f['mx']

	g1 = (
		f['u'] - f['uxx'] + ham.h_value(f['ux']) + params.lam*params.V
		- f['m']**params.alpha - eps*(f['m'] - f['mxx']))

	g2 = f['m'] - f['mxx'] - div - 1 + eps*(f['u'] - f['uxx'])

	return g1, g2
