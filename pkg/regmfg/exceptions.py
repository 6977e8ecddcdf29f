'''
This module contains all the exceptions and warning categories for the regmfg
package.
'''

#define a core exception class for subclassing
class rmException(Exception):
	'''
	Root Exception class for the regmfg package. Do not call directly.
	'''
	pass


class ArrayError(rmException):
	'''
	Array-like object is not in the right form (e.g. strings, non-finite
	entries).
	'''
	pass


class FileError(rmException):
	'''
	If a file does not exist or does not contain the correct data.
	'''
	pass


class LengthError(rmException):
	'''
	Length of array is not what it should be.
	'''
	pass


class ScalarError(rmException):
	'''
	If something is not a scalar.
	'''
	pass


class ParameterError(ScalarError):
	'''
	If a model parameter (gamma, alpha, epsilon, lambda, n) is out of range.
	Stores the offending field name as `field` (None if not tied to one).
	'''

	def __init__(self, message, field = None):
		super(ParameterError, self).__init__(message)
		self.field = field


class InvalidRange(ParameterError):
	'''
	If a sampling range is empty or negative.
	'''
	pass


class NyquistViolation(ParameterError):
	'''
	If a potential contains modes at or above the grid Nyquist index n/2.
	'''
	pass


class NonpositiveDensity(rmException):
	'''
	If a density array contains an entry that is not strictly positive.
	'''
	pass


class AssumptionViolation(rmException):
	'''
	If a Hamiltonian fails the growth audit and the audit runs in strict
	mode.
	'''
	pass


class LinearSolveFailed(rmException):
	'''
	If the direct factorization of a Jacobian fails.
	'''
	pass


class SingularMatrix(LinearSolveFailed):
	'''
	If a pivot of the factorization falls below 1e-300 in magnitude.
	'''
	pass


class SolverError(rmException):
	'''
	Base class for Newton failures. Carries the partial ``NewtonReport`` as
	`report` when one exists.
	'''

	def __init__(self, message, report = None):
		super(SolverError, self).__init__(message)
		self.report = report


class MaxIterExceeded(SolverError):
	'''
	If Newton does not reach the residual tolerance in `max_iters` steps.
	'''
	pass


class PositivityLost(SolverError):
	'''
	If damping the Newton step to `min_step_scale` still leaves a nonpositive
	density.
	'''
	pass


class LineSearchFailed(SolverError):
	'''
	If no step scale above `min_step_scale` gives sufficient decrease of the
	residual while keeping the density positive.
	'''
	pass


class Stagnated(SolverError):
	'''
	If an accepted Newton step is below `tol_step` while the residual is
	still above `tol_residual`.
	'''
	pass


class ContinuationStalled(SolverError):
	'''
	If the lambda step shrinks below `lambda_min_step`. Carries the partial
	``ContinuationTrace`` as `trace`.
	'''

	def __init__(self, message, trace = None):
		super(ContinuationStalled, self).__init__(message)
		self.trace = trace


class SeedError(rmException):
	'''
	Base class for failures of the constant seed construction.
	'''
	pass


class BracketFailure(SeedError):
	'''
	If the seed equation does not change sign over its bracket.
	'''
	pass


class BisectionStall(SeedError):
	'''
	If bisection of the seed equation does not reach the root tolerance.
	'''
	pass


class CertificateViolated(rmException):
	'''
	If a density drops below its own a posteriori lower-bound certificate.
	'''
	pass


class ConfigError(rmException):
	'''
	Base class for configuration document errors.
	'''
	pass


class ParseError(ConfigError):
	'''
	If a configuration document is not well-formed. Stores the offending line
	number as `lineno` (None if unknown).
	'''

	def __init__(self, message, lineno = None):
		super(ParseError, self).__init__(message)
		self.lineno = lineno


class ValidationError(ConfigError):
	'''
	If a configuration value has the wrong type or is out of range. Stores the
	dotted key as `key`.
	'''

	def __init__(self, message, key = None):
		super(ValidationError, self).__init__(message)
		self.key = key


class UnknownKey(ConfigError):
	'''
	If a configuration document contains a section or key that is not
	recognized. Stores the dotted key as `key`.
	'''

	def __init__(self, message, key = None):
		super(UnknownKey, self).__init__(message)
		self.key = key


#warning categories
class AssumptionWarning(UserWarning):
	'''
	Hamiltonian growth audit found violations (warn mode).
	'''
	pass


class IllConditionedWarning(UserWarning):
	'''
	Jacobian condition number estimate exceeds 1e14.
	'''
	pass


class NotConvergedWarning(UserWarning):
	'''
	Diagnostics requested on a state whose residual exceeds 100 x tolerance.
	'''
	pass


class SmallnessWarning(UserWarning):
	'''
	The quantity max|eps(u - u_xx)| reached 1/2 at an accepted step.
	'''
	pass
