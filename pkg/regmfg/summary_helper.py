'''
This module contains helper functions for generating regmfg summary tables.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'_calc_path_maxima',
	'_calc_sweep_info',
	'_calc_trace_info',
	]

import numpy as np
import pandas as pd

#columns of the per-step trace table
_TRACE_COLS = [
	'lambda',
	'iterations',
	'residual',
	'm_min',
	'certificate',
	'eps_smallness',
	'E1',
	'E2',
	'E3',
	'mass',
	'I1',
	'I2',
	'energy_res',
	'second_order_res',
	'mass_res',
	]

#define function to tabulate a continuation trace
def _calc_trace_info(trace):
	'''
	Tabulates the accepted steps of a ``rm.ContinuationTrace``.

	Parameters
	----------
	trace : rm.ContinuationTrace
		Trace to tabulate.

	Returns
	-------
	trace_info : pd.DataFrame
		One row per accepted step, columns as in `_TRACE_COLS`.
	'''

	rows = []

	for step in trace.steps:
		d = step.diagnostics

		rows.append([
			step.lam,
			step.iterations,
			d.residual,
			d.m_min,
			d.m_lower_bound_certificate,
			d.eps_smallness,
			d.energy_terms['E1'],
			d.energy_terms['E2'],
			d.energy_terms['E3'],
			d.mass,
			d.inv_mass,
			d.log_grad,
			d.energy_identity_residual,
			d.second_order_identity_residual,
			d.mass_identity_residual,
			])

	return pd.DataFrame(rows, columns = _TRACE_COLS)

#define function for maxima along the path
def _calc_path_maxima(trace):
	'''
	Maxima over the accepted steps of E1, E2, E3, the mass, I1 and I2, plus
	the minimum density and minimum certificate.

	Returns
	-------
	path_info : pd.Series
		Series of path extrema.
	'''

	df = _calc_trace_info(trace)
	keys = ['E1', 'E2', 'E3', 'mass', 'I1', 'I2']

	vals = [float(df[k].max()) for k in keys]
	vals += [float(df['m_min'].min()), float(df['certificate'].min())]

	ind = ['max ' + k for k in keys] + ['min m_min', 'min certificate']

	return pd.Series(vals, index = ind)

#define function to tabulate an epsilon sweep
def _calc_sweep_info(traces):
	'''
	Tabulates the final accepted step of every member of an epsilon sweep.

	Parameters
	----------
	traces : list
		List of ``rm.ContinuationTrace`` instances. Members that never left
		the seed still report their lambda = 0 step.

	Returns
	-------
	sweep_info : pd.DataFrame
		One row per member, indexed by epsilon.
	'''

	rows = []

	for tr in traces:
		d = tr.steps[-1].diagnostics

		rows.append({
			'epsilon' : tr.epsilon,
			'reached_lambda' : tr.reached_lambda,
			'stalled' : tr.stalled,
			'eps_smallness' : d.eps_smallness,
			'm_min' : d.m_min,
			'certificate' : d.m_lower_bound_certificate,
			'holder_u' : d.holder['u'],
			'holder_m' : d.holder['m'],
			'holder_u_x' : d.holder['u_x'],
			'holder_m_x' : d.holder['m_x'],
			})

	df = pd.DataFrame(rows)

	if len(df):
		df = df.set_index('epsilon')

	return df
