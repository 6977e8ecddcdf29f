'''
Module to store all the core functions for ``regmfg``: array validation and
the periodic discrete calculus (centered differences, quadrature, discrete
norms and seminorms) used by every other module.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'assert_len',
	'diff1',
	'diff2',
	'h1_norm_sq',
	'holder_half_seminorm',
	'integrate',
	'sup_norm',
	]

import numpy as np

from collections.abc import Sequence

#import exceptions
from .exceptions import(
	ArrayError,
	LengthError,
	)

#define function to assert length of array
def assert_len(data, n):
	'''
	Asserts that an array has length `n`, `float` datatypes and finite
	entries.

	Parameters
	----------
	data : scalar or array-like
		Array to assert has length n. If scalar, generates an np.ndarray
		with length n.

	n : int
		Length to assert

	Returns
	-------
	array : np.ndarray
		Updated array, now of class np.ndarray and with length n.

	Raises
	------
	ArrayError
		If inputted data not int or array-like (excluding string), or if any
		entry is NaN or infinite.

	LengthError
		If length of the array is not n.
	'''

	#assert that n is int
	n = int(n)

	#assert data is in the right form
	if isinstance(data, (int, float, np.number)):
		data = data*np.ones(n)
	
	elif isinstance(data, Sequence) or hasattr(data, '__array__'):
		
		if isinstance(data, str):
			raise ArrayError(
				'Data cannot be a string')

		elif len(data) != n:
			raise LengthError(
				'Cannot create array of length %r if n = %r' \
				% (len(data), n))

	else:
		raise ArrayError('data must be scalar or array-like')

	array = np.array(data, dtype = float)

	if not np.all(np.isfinite(array)):
		raise ArrayError('data must contain only finite values')

	return array

#unwrap a GridFunction or bare array into (values, wrapper)
def _unwrap(f):

	if hasattr(f, 'grid') and hasattr(f, 'values'):
		return f.values, lambda vals: type(f)(f.grid, vals)

	return np.asarray(f, dtype = float), lambda vals: vals

#define function for the centered first difference
def diff1(f):
	'''
	Centered first difference on the unit torus,
	(f[i+1] - f[i-1])/(2h), indices taken modulo n.

	Parameters
	----------
	f : rm.GridFunction or array-like
		Periodic samples. For a bare array the spacing is ``h = 1/len(f)``.

	Returns
	-------
	df : rm.GridFunction or np.ndarray
		Same type as `f`.

	Notes
	-----
	The operator is antisymmetric, ``sum(diff1(f)*g) == -sum(f*diff1(g))``
	to rounding, and annihilates constants exactly.
	'''

	vals, wrap = _unwrap(f)
	n = len(vals)

	return wrap((np.roll(vals, -1) - np.roll(vals, 1))*n/2)

#define function for the centered second difference
def diff2(f):
	'''
	Centered second difference on the unit torus,
	(f[i+1] - 2f[i] + f[i-1])/h**2, indices taken modulo n.

	Parameters
	----------
	f : rm.GridFunction or array-like
		Periodic samples. For a bare array the spacing is ``h = 1/len(f)``.

	Returns
	-------
	d2f : rm.GridFunction or np.ndarray
		Same type as `f`.

	Notes
	-----
	The operator is symmetric and satisfies the summation-by-parts identity
	``sum(f*diff2(f)) == -sum((f[i+1] - f[i])**2)/h**2``.
	'''

	vals, wrap = _unwrap(f)
	n = len(vals)

	return wrap((np.roll(vals, -1) - 2*vals + np.roll(vals, 1))*n**2)

#define function for the periodic rectangle rule
def integrate(f):
	'''
	Rectangle-rule quadrature ``h*sum(f)`` over the unit torus. Exact for
	trigonometric polynomials below the Nyquist index.

	Parameters
	----------
	f : rm.GridFunction or array-like
		Periodic samples.

	Returns
	-------
	val : float
		Approximation of the integral over [0, 1).
	'''

	vals, _ = _unwrap(f)

	return float(np.sum(vals)/len(vals))

#define function for the discrete H1 x H1 norm
def h1_norm_sq(v, f):
	'''
	Squared discrete H1 x H1 norm of a pair of grid functions, using forward
	differences for the gradient.

	Parameters
	----------
	v : rm.GridFunction or array-like
		First component.

	f : rm.GridFunction or array-like
		Second component, same length as `v`.

	Returns
	-------
	norm_sq : float
		``h*sum(v**2 + f**2 + (D+v)**2 + (D+f)**2)``.

	Raises
	------
	LengthError
		If `v` and `f` do not share a length.
	'''

	v, _ = _unwrap(v)
	f, _ = _unwrap(f)

	if len(v) != len(f):
		raise LengthError(
			'v and f must share a grid, got lengths %r and %r' \
			% (len(v), len(f)))

	n = len(v)
	dv = (np.roll(v, -1) - v)*n
	df = (np.roll(f, -1) - f)*n

	return float(np.sum(v**2 + f**2 + dv**2 + df**2)/n)

#define function for the discrete 1/2-Holder seminorm
def holder_half_seminorm(f):
	'''
	Discrete 1/2-Holder seminorm, the maximum over node pairs i != j of
	``|f[i] - f[j]| / d(x_i, x_j)**0.5`` with d the periodic distance.

	Parameters
	----------
	f : rm.GridFunction or array-like
		Periodic samples, at least two nodes.

	Returns
	-------
	seminorm : float
		The seminorm. Zero for constant `f`.

	Raises
	------
	LengthError
		If `f` has fewer than two nodes.

	Notes
	-----
	Exhaustive pair search; O(n**2) memory and time.
	'''

	vals, _ = _unwrap(f)
	n = len(vals)

	if n < 2:
		raise LengthError('Holder seminorm needs at least 2 nodes')

	#periodic index distance, exact in integers
	k = np.abs(np.subtract.outer(np.arange(n), np.arange(n)))
	k = np.minimum(k, n - k)

	jumps = np.abs(np.subtract.outer(vals, vals))
	off = k > 0

	return float(np.max(jumps[off]/np.sqrt(k[off]/n)))

#define function for the max norm
def sup_norm(f):
	'''
	Max norm ``max|f|`` of a grid function.
	'''

	vals, _ = _unwrap(f)

	return float(np.max(np.abs(vals)))
