'''
regmfg solves the regularized one-dimensional stationary mean-field game
system on the unit torus,

	u - u_xx + H(u_x) + lam*V(x) = m**alpha + eps*(m - m_xx)
	m - m_xx - (H'(u_x)*m)_x = 1 - eps*(u - u_xx),    m > 0,

by continuation in lam from an explicit constant solution at lam = 0, and
turns the a-priori estimates and integral identities of the system into
machine-checkable diagnostics.

Typical use::

	import regmfg as rm

	params = rm.ProblemParams(
		hamiltonian = rm.PowerHamiltonian(1.5),
		alpha = 1.0,
		epsilon = 0.1,
		lam = 1.0,
		grid = rm.PeriodicGrid(256),
		potential = rm.TrigPotential(cos = [0.5]))

	trace = rm.continue_lambda(params)
	trace.summary()

The same runs are available from the command line, ``regmfg --help``.
'''

from __future__ import(
	division,
	print_function,
	)

__version__ = '0.1.0'

__docformat__ = 'restructuredtext en'


#import grid classes
from .grid import(
	GridFunction,
	PeriodicGrid,
	)

#import hamiltonian classes
from .hamiltonian import(
	CustomHamiltonian,
	GrowthAudit,
	Hamiltonian,
	PowerHamiltonian,
	audit_assumptions,
	)

#import potential classes
from .potential import(
	TrigPotential,
	)

#import system classes and functions
from .system import(
	ProblemParams,
	State,
	reconstruct_mxx,
	reconstruct_uxx,
	residual,
	residual_norm,
	residual_with_sources,
	)

#import linearization classes and functions
from .linearization import(
	BandedCyclicMatrix,
	coercivity_form,
	duality_check,
	jacobian,
	)

#import solver classes and functions
from .solver import(
	NewtonOptions,
	NewtonReport,
	newton,
	solve_linear,
	)

#import diagnostics
from .diagnostics import(
	DiagnosticsReport,
	diagnose,
	energy_identity_residual,
	energy_terms,
	eps_smallness,
	fit_holder_growth,
	holder_report,
	m_lower_bound_certificate,
	mass_identity_residual,
	second_order_identity_residual,
	second_order_terms,
	)

#import continuation classes and functions
from .continuation import(
	ContinuationSchedule,
	ContinuationStep,
	ContinuationTrace,
	continue_lambda,
	mms_convergence,
	seed_v0,
	sweep_epsilon,
	sweep_holder_fit,
	sweep_summary,
	)

#import configuration and io
from .config import(
	RunConfig,
	load_config,
	parse_config,
	resolve_output_dir,
	)

from .io_helper import(
	read_solution_csv,
	write_json,
	write_solution_csv,
	)

#import package-level functions
from .core_functions import(
	assert_len,
	diff1,
	diff2,
	h1_norm_sq,
	holder_half_seminorm,
	integrate,
	sup_norm,
	)

from .cli import(
	cli_main,
	)
