'''
This module contains helper functions for plotting regmfg states and
continuation traces.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'_finish_axis',
	'_plot_fields',
	'_plot_path',
	'_rem_dup_leg',
	]

import matplotlib.pyplot as plt
import numpy as np

#define function to plot u and m against x
def _plot_fields(ax, x, u, m, label = None):
	'''
	Plots the value function and density of one state on a shared axis. The
	periodic end point x = 1 is appended so each curve closes.

	Parameters
	----------
	ax : matplotlib.axis
		Axis to plot on.

	x : np.ndarray
		Node positions.

	u : np.ndarray
		Value function samples.

	m : np.ndarray
		Density samples.

	label : None or str
		Suffix added to the legend entries. Defaults to `None`.

	Returns
	-------
	ax : matplotlib.axis
		Updated axis.
	'''

	sfx = '' if label is None else ' (%s)' % label

	#close the periodic curves
	xc = np.append(x, 1.0)
	uc = np.append(u, u[0])
	mc = np.append(m, m[0])

	ax.plot(
		xc,
		uc,
		linewidth = 2,
		color = 'k',
		label = r'$u$' + sfx)

	ax.plot(
		xc,
		mc,
		linewidth = 2,
		color = [0.5, 0, 0.5],
		label = r'$m$' + sfx)

	return ax

#define function to plot path quantities against lambda
def _plot_path(ax, lam, cols, labels):
	'''
	Plots selected per-step quantities of a continuation trace against lambda.

	Parameters
	----------
	ax : matplotlib.axis
		Axis to plot on.

	lam : array-like
		Accepted lambda values.

	cols : list
		List of arrays, one per plotted quantity.

	labels : list
		Legend label per entry of `cols`.

	Returns
	-------
	ax : matplotlib.axis
		Updated axis.
	'''

	for y, lab in zip(cols, labels):
		ax.plot(
			lam,
			y,
			marker = 'o',
			markersize = 4,
			linewidth = 1.5,
			label = lab)

	return ax

#define function to label, de-duplicate legend and tighten an axis
def _finish_axis(ax, labs):
	'''
	Sets axis labels, removes duplicate legend entries and tightens layout.
	'''

	ax.set_xlabel(labs[0])
	ax.set_ylabel(labs[1])

	han_list, lab_list = _rem_dup_leg(ax)
	
	ax.legend(
		han_list,
		lab_list, 
		loc = 'best',
		frameon = False)

	plt.tight_layout()

	return ax

#define function to remove duplicate legend entries
def _rem_dup_leg(ax):
	'''
	Removes duplicate legend entries.

	Parameters
	----------
	ax : plt.axishandle
		Axis handle containing entries to remove.

	Returns
	-------
	han_list : list
		List of axis handles.

	lab_list : list
		List of axis handle labels.
	'''
	han, lab = ax.get_legend_handles_labels()
	han_list, lab_list = [], []
	
	for h, l in zip(han, lab):
		
		if l not in lab_list:
		
			han_list.append(h)
			lab_list.append(l)

	return han_list, lab_list
