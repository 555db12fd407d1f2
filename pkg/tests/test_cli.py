"""
Unit tests for the command-line front end and configuration
"""

import json
import os
import tempfile
import unittest
import sys
sys.path.append('..')

from src.cli import build_parser, load_config, run_command
from src.cli.config import CONFIG_ENV
from src.exceptions import ConfigurationError


class CliTestCase(unittest.TestCase):
    """Runs commands into a temporary report file."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.tmp.name, 'report')
        os.environ.pop(CONFIG_ENV, None)

    def tearDown(self):
        self.tmp.cleanup()

    def run_cli(self, *args):
        code = run_command(list(args) + ['--out', self.out])
        output = ''
        if os.path.exists(self.out):
            with open(self.out, 'r', encoding='utf-8') as fh:
                output = fh.read()
        return code, output

    def write_config(self, text):
        path = os.path.join(self.tmp.name, 'engine.yaml')
        with open(path, 'w', encoding='utf-8') as fh:
            fh.write(text)
        return path


class TestCommands(CliTestCase):
    """Test exit codes and report contents."""

    def test_verify_brst_passes(self):
        code, output = self.run_cli('verify-brst', '--gauge', 'linear', '--convention', 'leibniz')
        self.assertEqual(code, 0)
        self.assertTrue(output.startswith("=" * 60))
        self.assertTrue(output.splitlines()[-1].startswith("PASS ("))

    def test_verbatim_fails(self):
        code, output = self.run_cli('verify-brst', '--gauge', 'linear', '--convention', 'verbatim',
                                    '--format', 'json')
        self.assertEqual(code, 1)
        data = json.loads(output)
        self.assertEqual(data['status'], 'fail')
        self.assertEqual(data['convention'], 'verbatim')

    def test_no_algebra_fails(self):
        code, output = self.run_cli('verify-no-algebra', '--format', 'json')
        self.assertEqual(code, 1)
        names = [r['name'] for r in json.loads(output)['relations'] if r['status'] == 'fail']
        self.assertIn('[d1,d2] = -2*dFP', names)

    def test_calibrate(self):
        code, output = self.run_cli('calibrate', 'fp-scale', '--format', 'json')
        self.assertEqual(code, 0)
        code, output = self.run_cli('calibrate', 'fp-scale-cross', '--format', 'json')
        self.assertEqual(code, 1)
        self.assertIn('minimal_core', json.loads(output)['artifacts'])

    def test_eval(self):
        code, output = self.run_cli('eval', 's(c_L)', '--gauge', 'linear', '--convention', 'leibniz')
        self.assertEqual(code, 0)
        self.assertEqual(output, "-c_L*c_L\n")

    def test_json_is_deterministic(self):
        _, first = self.run_cli('verify-star', '--samples', '2', '--seed', '9', '--format', 'json')
        _, second = self.run_cli('verify-star', '--samples', '2', '--seed', '9', '--format', 'json')
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first)['seed'], 9)

    def test_usage_errors(self):
        self.assertEqual(run_command([]), 3)
        self.assertEqual(run_command(['verify-brst', '--gauge', 'axial']), 3)
        self.assertEqual(run_command(['verify-superspace', '--samples', '0']), 3)
        self.assertEqual(run_command(['eval', 'c_L +']), 3)

    def test_timing_is_opt_in(self):
        args = ('verify-star', '--samples', '1', '--seed', '3', '--format', 'json')
        _, plain = self.run_cli(*args)
        self.assertNotIn('duration_seconds', json.loads(plain))
        _, timed = self.run_cli(*args, '--timing')
        self.assertIn('duration_seconds', json.loads(timed))
        sub = build_parser()._subparsers._group_actions[0].choices['verify-star']
        help_text = [a.help for a in sub._actions if '--timing' in a.option_strings][0]
        self.assertIn('omitted by default', help_text)


class TestConfig(CliTestCase):
    """Test YAML configuration loading."""

    def test_defaults(self):
        config = load_config()
        self.assertEqual(config.convention, 'leibniz_consistent')
        self.assertEqual(config.seed, 42)
        self.assertIsNone(config.scalar_value('m2'))

    def test_file_values(self):
        path = self.write_config("seed: 7\nm2: '1/2'\ngauge: cf\nbounds:\n  derived_depth: 3\n")
        config = load_config(path)
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.gauge, 'curci_ferrari')
        self.assertEqual(config.bound('derived_depth'), 3)
        self.assertEqual(config.bound('exactness_word_length'), 4)
        self.assertIsNotNone(config.digest)

    def test_unknown_key(self):
        path = self.write_config("seeds: 7\n")
        with self.assertRaises(ConfigurationError):
            load_config(path)
        self.assertEqual(run_command(['verify-brst', '--config', path]), 3)

    def test_bad_yaml(self):
        path = self.write_config("seed: [1\n")
        with self.assertRaises(ConfigurationError):
            load_config(path)

    def test_deformation_section(self):
        path = self.write_config("deformation:\n  entries:\n    A_1_1: '2'\n  spacelike: true\n")
        tensor = load_config(path).deformation()
        self.assertEqual(tensor.to_dict()['A_1_1'], '2')
        self.assertEqual(tensor.to_dict()['A_1_0'], '0')

    def test_environment_fallback(self):
        path = self.write_config("samples: 5\n")
        os.environ[CONFIG_ENV] = path
        try:
            self.assertEqual(load_config().samples, 5)
        finally:
            os.environ.pop(CONFIG_ENV, None)


if __name__ == '__main__':
    unittest.main()
