'''
This module contains helper functions for writing and reading solution CSV
files and diagnostics JSON documents.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'_read_solution_frame',
	'read_solution_csv',
	'write_json',
	'write_solution_csv',
	]

import json
import numpy as np
import os
import pandas as pd

#import exceptions
from .exceptions import(
	FileError,
	LengthError,
	)

#import helper functions
from .core_functions import(
	diff1,
	diff2,
	)

SOLUTION_COLUMNS = ['x', 'u', 'm', 'u_x', 'm_x', 'u_xx', 'm_xx']

#define function for writing a solution CSV
def write_solution_csv(state, params, path):
	'''
	Writes a state to CSV with header ``x,u,m,u_x,m_x,u_xx,m_xx``, one row
	per node, derivatives from diff1 and diff2, 17 significant digits and LF
	line endings.

	Parameters
	----------
	state : rm.State
		Admissible state.

	params : rm.ProblemParams
		Problem instance; must share the state's grid.

	path : str or path-like
		Destination file.

	Raises
	------
	FileError
		If the file cannot be written.

	LengthError
		If the state and the parameters live on different grids.
	'''

	if state.grid != params.grid:
		raise LengthError('state and params must share a grid')

	u = state.u.values
	m = state.m.values

	frame = pd.DataFrame({
		'x' : state.grid.x,
		'u' : u,
		'm' : m,
		'u_x' : diff1(u),
		'm_x' : diff1(m),
		'u_xx' : diff2(u),
		'm_xx' : diff2(m),
		}, columns = SOLUTION_COLUMNS)

	try:
		frame.to_csv(
			path,
			index = False,
			float_format = '%.17g',
			lineterminator = '\n')

	except OSError as err:
		raise FileError('cannot write %s: %s' % (path, err.strerror))

#define function for reading a solution CSV into a frame
def _read_solution_frame(path):
	'''
	Reads a solution CSV with round-trip float parsing and checks its
	columns.
	'''

	if not os.path.isfile(path):
		raise FileError('solution file %s does not exist' % path)

	try:
		frame = pd.read_csv(path, float_precision = 'round_trip')

	except (OSError, ValueError, pd.errors.ParserError) as err:
		raise FileError('cannot read %s: %s' % (path, err))

	if list(frame.columns) != SOLUTION_COLUMNS:
		raise FileError(
			'%s has columns %r, expected %r'
			% (path, list(frame.columns), SOLUTION_COLUMNS))

	return frame

#define function for reading a solution CSV into a state
def read_solution_csv(path):
	'''
	Reads a state written by ``write_solution_csv``. Same as
	``rm.State.from_csv``.
	'''

	#imported here, system imports this module lazily
	from .system import State

	return State.from_csv(path)

#convert numpy scalars and arrays for json
def _json_default(obj):

	if isinstance(obj, np.generic):
		return obj.item()

	if isinstance(obj, np.ndarray):
		return obj.tolist()

	raise TypeError('%r is not JSON serializable' % type(obj).__name__)

#define function for writing one JSON document
def write_json(obj, path):
	'''
	Writes `obj` as one JSON document with sorted keys. Non-finite numbers
	are rejected.

	Raises
	------
	FileError
		If the file cannot be written.

	ValueError
		If `obj` contains NaN or infinite values.
	'''

	text = json.dumps(
		obj,
		sort_keys = True,
		indent = 2,
		allow_nan = False,
		default = _json_default)

	try:
		with open(path, 'w', encoding = 'utf-8', newline = '\n') as fh:
			fh.write(text + '\n')

	except OSError as err:
		raise FileError('cannot write %s: %s' % (path, err.strerror))
