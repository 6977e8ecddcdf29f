'''
This module parses and validates TOML run configurations into a RunConfig.
'''

from __future__ import(
	division,
	print_function,
	)

__docformat__ = 'restructuredtext en'
__all__ = [
	'RunConfig',
	'load_config',
	'parse_config',
	'resolve_output_dir',
	]

import os
import re

try:
	import tomllib
except ModuleNotFoundError:  # Python < 3.11
	import tomli as tomllib

from dataclasses import dataclass

#import exceptions
from .exceptions import(
	FileError,
	ParameterError,
	ParseError,
	UnknownKey,
	ValidationError,
	)

#import helper functions
from .continuation import(
	ContinuationSchedule,
	)

from .grid import(
	PeriodicGrid,
	)

from .hamiltonian import(
	PowerHamiltonian,
	)

from .potential import(
	TrigPotential,
	)

from .solver import(
	NewtonOptions,
	)

from .system import(
	ProblemParams,
	)

#environment fallback for the output directory
OUT_ENV = 'MFG_OUT_DIR'
DEFAULT_OUT = 'mfg_output'

#allowed keys per section: key -> (kind, required)
_SCHEMA = {
	'problem' : {
		'n' : ('int', True),
		'gamma' : ('real', True),
		'alpha' : ('real', True),
		'epsilon' : ('real', True),
		'lambda' : ('real', False),
		'potential' : ('table', False),
		},
	'newton' : {
		'tol_residual' : ('real', False),
		'tol_step' : ('real', False),
		'max_iters' : ('int', False),
		'backtrack_factor' : ('real', False),
		'min_step_scale' : ('real', False),
		},
	'continuation' : {
		'lambda_init_step' : ('real', False),
		'lambda_min_step' : ('real', False),
		'growth_factor' : ('real', False),
		'success_streak' : ('int', False),
		'epsilon_list' : ('reals', False),
		},
	'output' : {
		'directory' : ('str', False),
		'fields_csv' : ('bool', False),
		'diagnostics_json' : ('bool', False),
		'plot_data' : ('bool', False),
		},
	}

_POTENTIAL_KEYS = ('cos', 'sin')


@dataclass
class RunConfig:
	'''
	A fully validated run: problem parameters, Newton options, continuation
	schedule, the configured output directory (None if not set) and the emit
	flags.
	'''

	params: ProblemParams
	newton: NewtonOptions
	schedule: ContinuationSchedule
	output_dir: str = None
	emit_fields: bool = True
	emit_diagnostics: bool = True
	emit_plot_data: bool = True


#check one value against its kind
def _check_kind(key, val, kind):

	if kind == 'int':
		ok = isinstance(val, int) and not isinstance(val, bool)

	elif kind == 'real':
		ok = isinstance(val, (int, float)) and not isinstance(val, bool)

	elif kind == 'reals':
		ok = isinstance(val, list) and all(
			isinstance(v, (int, float)) and not isinstance(v, bool) for v in val)

	elif kind == 'bool':
		ok = isinstance(val, bool)

	elif kind == 'str':
		ok = isinstance(val, str)

	else:
		ok = isinstance(val, dict)

	if not ok:
		raise ValidationError(
			'%s must be of type %s, got %r' % (key, kind, val), key = key)

#line number of a TOML decode error
def _error_line(err):

	lineno = getattr(err, 'lineno', None)

	if lineno is None:
		match = re.search(r'line (\d+)', str(err))
		lineno = int(match.group(1)) if match else None

	return lineno

#raise ValidationError unless cond holds
def _require(cond, key, msg):

	if not cond:
		raise ValidationError('%s %s' % (key, msg), key = key)

#define function for parsing a configuration document
def parse_config(text):
	'''
	Parses and validates a TOML configuration document.

	Parameters
	----------
	text : str
		Document with sections [problem] (required), [newton],
		[continuation] and [output]. Potential coefficients are given as
		``potential.cos = [...]`` and ``potential.sin = [...]`` inside
		[problem].

	Returns
	-------
	config : rm.RunConfig
		Validated configuration with defaults filled in.

	Raises
	------
	ParseError
		If the document is not valid TOML; ``err.lineno`` holds the line.

	UnknownKey
		If a section or key is not recognized.

	ValidationError
		If a value has the wrong type or is out of range; ``err.key`` holds
		the dotted key.

	Examples
	--------
	A minimal configuration with the zero potential::

		config = rm.parse_config(
			'[problem]\\nn = 128\\ngamma = 1.5\\nalpha = 1.0\\nepsilon = 0.1\\n')
	'''

	try:
		doc = tomllib.loads(text)

	except tomllib.TOMLDecodeError as err:
		raise ParseError('malformed configuration: %s' % err, lineno = _error_line(err))

	#reject unknown sections and keys before any range check
	for section, body in doc.items():

		if section not in _SCHEMA:
			raise UnknownKey('unknown section [%s]' % section, key = section)

		if not isinstance(body, dict):
			raise ValidationError('%s must be a section' % section, key = section)

		for key, val in body.items():
			dotted = '%s.%s' % (section, key)

			if key not in _SCHEMA[section]:
				raise UnknownKey('unknown key %s' % dotted, key = dotted)

			_check_kind(dotted, val, _SCHEMA[section][key][0])

	if 'problem' not in doc:
		raise ValidationError('missing section [problem]', key = 'problem')

	prob = doc['problem']

	for key, (_, required) in _SCHEMA['problem'].items():
		if required and key not in prob:
			raise ValidationError(
				'missing required key problem.%s' % key, key = 'problem.' + key)

	pot = prob.get('potential', {})

	for key, val in pot.items():
		dotted = 'problem.potential.%s' % key

		if key not in _POTENTIAL_KEYS:
			raise UnknownKey('unknown key %s' % dotted, key = dotted)

		_check_kind(dotted, val, 'reals')

	#range rules of the problem
	n = prob['n']
	gamma = float(prob['gamma'])
	alpha = float(prob['alpha'])
	eps = float(prob['epsilon'])
	lam = float(prob.get('lambda', 1.0))

	_require(n >= 8, 'problem.n', 'must be at least 8, got %r' % n)
	_require(1 < gamma < 2, 'problem.gamma', 'must satisfy 1 < gamma < 2, got %r' % gamma)
	_require(alpha > 0, 'problem.alpha', 'must be > 0, got %r' % alpha)
	_require(0 < eps <= 1, 'problem.epsilon', 'must satisfy 0 < epsilon <= 1, got %r' % eps)
	_require(0 <= lam <= 1, 'problem.lambda', 'must satisfy 0 <= lambda <= 1, got %r' % lam)

	try:
		params = ProblemParams(
			hamiltonian = PowerHamiltonian(gamma),
			alpha = alpha,
			epsilon = eps,
			lam = lam,
			grid = PeriodicGrid(n),
			potential = TrigPotential(
				cos = pot.get('cos', []),
				sin = pot.get('sin', [])))

	except ParameterError as err:
		raise ValidationError(str(err), key = 'problem.potential')

	#remaining sections map onto their option classes
	sections = (
		('newton', NewtonOptions),
		('continuation', ContinuationSchedule))

	built = {}

	for section, cls in sections:
		kwargs = dict(doc.get(section, {}))

		if 'epsilon_list' in kwargs:
			kwargs['epsilon_list'] = tuple(float(e) for e in kwargs['epsilon_list'])

		try:
			built[section] = cls(**kwargs)

		except ParameterError as err:
			key = section if err.field is None else '%s.%s' % (section, err.field)
			raise ValidationError(str(err), key = key)

	out = doc.get('output', {})

	return RunConfig(
		params = params,
		newton = built['newton'],
		schedule = built['continuation'],
		output_dir = out.get('directory'),
		emit_fields = out.get('fields_csv', True),
		emit_diagnostics = out.get('diagnostics_json', True),
		emit_plot_data = out.get('plot_data', True))

#define function for loading a configuration file
def load_config(path):
	'''
	Reads and parses a configuration file.

	Raises
	------
	FileError
		If the file cannot be read.
	'''

	try:
		with open(path, 'r', encoding = 'utf-8') as fh:
			text = fh.read()

	except OSError as err:
		raise FileError('cannot read config file %s: %s' % (path, err.strerror))

	return parse_config(text)

#define function for choosing the output directory
def resolve_output_dir(config = None, override = None):
	'''
	Output directory by precedence: `override` (the ``--out`` flag), the
	[output] directory of `config`, the ``MFG_OUT_DIR`` environment variable,
	then ``./mfg_output``.
	'''

	if override:
		return override

	if config is not None and config.output_dir:
		return config.output_dir

	return os.environ.get(OUT_ENV) or DEFAULT_OUT
