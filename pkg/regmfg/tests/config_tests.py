'''
This module contains config module tests,
'''

import os
import pytest

import regmfg as rm

from regmfg.exceptions import(
	ConfigError,
	FileError,
	ParseError,
	UnknownKey,
	ValidationError,
	)

MINIMAL = '''[problem]
n = 128
gamma = 1.5
alpha = 1.0
epsilon = 0.1
'''

#function to append lines to the minimal document
def with_lines(*lines):
	return MINIMAL + '\n'.join(lines) + '\n'

#function to locate the shipped default configuration
def default_toml():
	return os.path.join(os.path.dirname(__file__), '..', '..', 'default.toml')

#test parsing valid documents
class test_parse_config:

	def test_minimal(self):
		#assert defaults for everything not given
		config = rm.parse_config(MINIMAL)

		assert config.params.grid.n == 128
		assert config.params.lam == 1.0
		assert config.params.potential.is_zero
		assert config.newton == rm.NewtonOptions()
		assert config.schedule == rm.ContinuationSchedule()
		assert config.output_dir is None
		assert config.emit_fields and config.emit_diagnostics and config.emit_plot_data

	def test_full(self):
		config = rm.parse_config(with_lines(
			'lambda = 0.5',
			'potential.cos = [0.5, 0.1]',
			'potential.sin = [0.2]',
			'[newton]',
			'tol_residual = 1e-9',
			'max_iters = 20',
			'[continuation]',
			'lambda_init_step = 0.2',
			'epsilon_list = [0.2, 0.1]',
			'[output]',
			'directory = "runs"',
			'plot_data = false'))

		assert config.params.lam == 0.5
		assert config.params.potential.to_dict() == {'cos' : [0.5, 0.1], 'sin' : [0.2, 0.0]}
		assert config.newton.tol_residual == 1e-9
		assert config.newton.max_iters == 20
		assert config.schedule.lambda_init_step == 0.2
		assert config.schedule.epsilon_list == (0.2, 0.1)
		assert config.output_dir == 'runs'
		assert not config.emit_plot_data

	def test_integer_reals(self):
		#assert that integers are accepted where reals are expected
		config = rm.parse_config(MINIMAL.replace('alpha = 1.0', 'alpha = 2'))
		assert config.params.alpha == 2.0

	def test_default_file(self):
		config = rm.load_config(default_toml())

		assert config.params.grid.n == 256
		assert config.schedule.epsilon_list == (0.2, 0.1, 0.05)

#test rejecting invalid documents
class test_parse_config_errors:

	def test_malformed(self):
		with pytest.raises(ParseError) as info:
			rm.parse_config('[problem]\nn = 128\ngamma = \n')

		assert info.value.lineno == 3
		assert isinstance(info.value, ConfigError)

	def test_unknown_key(self):
		with pytest.raises(UnknownKey) as info:
			rm.parse_config(with_lines('beta = 2.0'))

		assert info.value.key == 'problem.beta'

	def test_unknown_section(self):
		with pytest.raises(UnknownKey):
			rm.parse_config(with_lines('[plotting]', 'dpi = 300'))

	def test_unknown_potential_key(self):
		with pytest.raises(UnknownKey) as info:
			rm.parse_config(with_lines('potential.tan = [1.0]'))

		assert info.value.key == 'problem.potential.tan'

	def test_epsilon_range(self):
		with pytest.raises(ValidationError) as info:
			rm.parse_config(MINIMAL.replace('epsilon = 0.1', 'epsilon = 1.5'))

		assert info.value.key == 'problem.epsilon'
		assert 'epsilon' in str(info.value)

	def test_gamma_range(self):
		with pytest.raises(ValidationError) as info:
			rm.parse_config(MINIMAL.replace('gamma = 1.5', 'gamma = 2.0'))

		assert info.value.key == 'problem.gamma'

	def test_wrong_type(self):
		with pytest.raises(ValidationError) as info:
			rm.parse_config(MINIMAL.replace('n = 128', 'n = "many"'))

		assert info.value.key == 'problem.n'

		#assert that a Boolean is not a real
		with pytest.raises(ValidationError):
			rm.parse_config(MINIMAL.replace('alpha = 1.0', 'alpha = true'))

	def test_missing_key(self):
		with pytest.raises(ValidationError) as info:
			rm.parse_config(MINIMAL.replace('epsilon = 0.1\n', ''))

		assert info.value.key == 'problem.epsilon'

	def test_missing_section(self):
		with pytest.raises(ValidationError):
			rm.parse_config('[newton]\nmax_iters = 10\n')

	def test_schedule_rules(self):
		with pytest.raises(ValidationError) as info:
			rm.parse_config(with_lines('[continuation]', 'epsilon_list = [0.1, 0.2]'))

		assert info.value.key == 'continuation.epsilon_list'

	@pytest.mark.parametrize('section, line, key', [
		('newton', 'backtrack_factor = 1.5', 'newton.backtrack_factor'),
		('newton', 'max_iters = 0', 'newton.max_iters'),
		('newton', 'tol_residual = -1.0', 'newton.tol_residual'),
		('continuation', 'lambda_min_step = 0.5', 'continuation.lambda_min_step'),
		('continuation', 'lambda_init_step = 1.5', 'continuation.lambda_init_step'),
		('continuation', 'growth_factor = 0.5', 'continuation.growth_factor'),
		])
	def test_option_ranges_name_key(self, section, line, key):
		#assert out-of-range options name their dotted key
		with pytest.raises(ValidationError) as info:
			rm.parse_config(with_lines('[%s]' % section, line))

		assert info.value.key == key


	def test_nyquist(self):
		#assert a potential mode above n/2 is a validation error
		text = MINIMAL.replace('n = 128', 'n = 8')

		with pytest.raises(ValidationError) as info:
			rm.parse_config(text + 'potential.cos = [0, 0, 0, 1]\n')

		assert info.value.key == 'problem.potential'

#test reading configuration files
class test_load_config:

	def test_missing_file(self, tmp_path):
		path = str(tmp_path / 'absent.toml')

		with pytest.raises(FileError) as info:
			rm.load_config(path)

		assert path in str(info.value)

	def test_round_trip(self, tmp_path):
		path = tmp_path / 'run.toml'
		path.write_text(MINIMAL)

		assert rm.load_config(str(path)).params.epsilon == 0.1

#test the output directory precedence
class test_resolve_output_dir:

	config = rm.parse_config(with_lines('[output]', 'directory = "from_config"'))

	def test_override_first(self, monkeypatch):
		monkeypatch.setenv('MFG_OUT_DIR', 'from_env')
		assert rm.resolve_output_dir(self.config, 'from_flag') == 'from_flag'

	def test_config_second(self, monkeypatch):
		monkeypatch.setenv('MFG_OUT_DIR', 'from_env')
		assert rm.resolve_output_dir(self.config) == 'from_config'

	def test_env_third(self, monkeypatch):
		monkeypatch.setenv('MFG_OUT_DIR', 'from_env')
		assert rm.resolve_output_dir(rm.parse_config(MINIMAL)) == 'from_env'

	def test_default_last(self, monkeypatch):
		monkeypatch.delenv('MFG_OUT_DIR', raising = False)
		assert rm.resolve_output_dir() == 'mfg_output'
