'''
This module contains command-line interface tests,
'''

import json
import os
import pandas as pd
import pytest

import regmfg as rm

from regmfg.cli import(
	EXIT_CONFIG,
	EXIT_IO,
	EXIT_OK,
	EXIT_SOLVER,
	)

SMALL = '''[problem]
n = 32
gamma = 1.5
alpha = 1.0
epsilon = 0.1
lambda = 1.0
potential.cos = [0.5]
'''

#function to write a configuration file
def write_config(tmp_path, text = SMALL, name = 'run.toml'):
	path = tmp_path / name
	path.write_text(text)
	return str(path)

#function to load a JSON output
def load_json(*parts):
	with open(os.path.join(*parts)) as fh:
		return json.load(fh)

#test the seed subcommand
class test_cli_seed:

	def test_closed_form(self, capsys):
		code = rm.cli_main(['seed', '--epsilon', '0.1', '--gamma', '1.5', '--alpha', '1.0'])
		out = capsys.readouterr().out.splitlines()

		assert code == EXIT_OK
		assert out[0].startswith('m0 = ')
		assert float(out[0].split('=')[1]) == pytest.approx(1.1/1.11, abs = 1e-12)
		assert float(out[1].split('=')[1]) == pytest.approx(0.01/0.111, abs = 1e-11)

	def test_invalid_gamma(self, capsys):
		code = rm.cli_main(['seed', '--epsilon', '0.1', '--gamma', '2.5', '--alpha', '1.0'])

		assert code == EXIT_CONFIG
		assert 'gamma' in capsys.readouterr().err

#test the configured subcommands
class test_cli_runs:

	def test_continue(self, tmp_path):
		out = str(tmp_path / 'out')
		code = rm.cli_main(['continue', '--config', write_config(tmp_path), '--out', out])
		summary = load_json(out, 'summary.json')

		assert code == EXIT_OK
		assert summary['reached_lambda'] == 1.0
		assert not summary['stalled']
		assert os.path.isfile(os.path.join(out, 'step_000.json'))
		assert os.path.isfile(os.path.join(out, 'solution.csv'))
		assert len(pd.read_csv(os.path.join(out, 'path.csv'))) == summary['accepted_steps']

		#assert one diagnostics document per accepted step
		steps = [f for f in os.listdir(out) if f.startswith('step_')]
		assert len(steps) == summary['accepted_steps']

	def test_continue_then_verify(self, tmp_path):
		config = write_config(tmp_path)
		out = str(tmp_path / 'out')
		rm.cli_main(['continue', '--config', config, '--out', out])

		code = rm.cli_main([
			'verify',
			'--config', config,
			'--solution', os.path.join(out, 'solution.csv'),
			'--out', str(tmp_path / 'check')])
		report = load_json(str(tmp_path / 'check'), 'verify.json')

		assert code == EXIT_OK
		assert report['n'] == 32
		assert report['residual'] <= 1e-9
		assert not report['not_converged']

	def test_stall(self, tmp_path):
		text = SMALL + '[newton]\nmax_iters = 1\n[continuation]\nlambda_min_step = 0.05\n'
		out = str(tmp_path / 'out')
		code = rm.cli_main(['continue', '--config', write_config(tmp_path, text), '--out', out])

		assert code == EXIT_SOLVER
		assert load_json(out, 'summary.json')['stalled']

	def test_solve(self, tmp_path):
		text = SMALL.replace('lambda = 1.0', 'lambda = 0.2')
		out = str(tmp_path / 'out')
		code = rm.cli_main(['solve', '--config', write_config(tmp_path, text), '--out', out])

		assert code == EXIT_OK
		assert load_json(out, 'diagnostics.json')['lam'] == 0.2

	def test_sweep(self, tmp_path):
		text = SMALL + '[continuation]\nepsilon_list = [0.2, 0.1]\n'
		out = str(tmp_path / 'out')
		code = rm.cli_main(['sweep-eps', '--config', write_config(tmp_path, text), '--out', out])
		summary = load_json(out, 'summary.json')

		assert code == EXIT_OK
		assert os.path.isdir(os.path.join(out, 'eps_0.2'))
		assert os.path.isdir(os.path.join(out, 'eps_0.1'))
		assert [m['epsilon'] for m in summary['members']] == [0.2, 0.1]
		assert 'holder_fit' in summary

	def test_mms(self, tmp_path):
		out = str(tmp_path / 'out')
		code = rm.cli_main([
			'mms-convergence',
			'--config', write_config(tmp_path),
			'--levels', '32', '64',
			'--out', out])
		doc = load_json(out, 'mms.json')

		assert code == EXIT_OK
		assert [row['n'] for row in doc['levels']] == [32, 64]
		assert doc['levels'][0]['rate_u'] is None
		assert len(pd.read_csv(os.path.join(out, 'mms.csv'))) == 2

	def test_env_output(self, tmp_path, monkeypatch):
		#assert MFG_OUT_DIR is used without --out or [output] directory
		target = str(tmp_path / 'env_out')
		monkeypatch.setenv('MFG_OUT_DIR', target)
		code = rm.cli_main(['continue', '--config', write_config(tmp_path)])

		assert code == EXIT_OK
		assert os.path.isfile(os.path.join(target, 'summary.json'))

#test the error exit codes
class test_cli_errors:

	def test_missing_config(self, tmp_path, capsys):
		path = str(tmp_path / 'absent.toml')
		code = rm.cli_main(['continue', '--config', path])

		assert code == EXIT_IO
		assert path in capsys.readouterr().err

	def test_invalid_config(self, tmp_path, capsys):
		text = SMALL.replace('epsilon = 0.1', 'epsilon = 1.5')
		code = rm.cli_main([
			'continue',
			'--config', write_config(tmp_path, text),
			'--out', str(tmp_path / 'out')])

		assert code == EXIT_CONFIG
		assert 'epsilon' in capsys.readouterr().err

	def test_missing_solution(self, tmp_path):
		code = rm.cli_main([
			'verify',
			'--config', write_config(tmp_path),
			'--solution', str(tmp_path / 'absent.csv'),
			'--out', str(tmp_path / 'out')])

		assert code == EXIT_IO

	def test_usage(self):
		#assert argparse rejects a missing subcommand
		with pytest.raises(SystemExit):
			rm.cli_main([])
