import os
import tempfile
from pathlib import Path
from unittest import TestCase
from unittest.mock import patch

from model.verdict import SearchBudget
from onejoin.config import SETTINGS_DIR, budget_for, load_config, recursive_update, sub_env_vars
from onejoin.exceptions import ConfigurationError

BASE = """
profile: ${TEST_ONEJOIN_PROFILE:quick}
workers: 2
budgets:
  default: {max_nodes: 1000, max_seconds: 10}
  crossing_number: {max_nodes: 5000, max_seconds: 20}
  claims:
    'cr-K_{5,3}': {max_nodes: 7}
symmetry: {max_automorphisms: 100}
report: {output_dir: reports}
logging:
  root_path: ${TEST_ONEJOIN_LOG_DIR:}
"""


class TestConfigHelpers(TestCase):
    def test_sub_env_vars(self):
        d = {'a': '${TEST_ONEJOIN_X:fallback}', 'b': {'c': '${TEST_ONEJOIN_Y}'}, 'd': 3}
        with patch.dict(os.environ, {'TEST_ONEJOIN_Y': 'set'}):
            sub_env_vars(d)
        self.assertEqual(d, {'a': 'fallback', 'b': {'c': 'set'}, 'd': 3})

    def test_recursive_update(self):
        d = {'a': {'b': 1, 'c': 2}, 'e': 1}
        recursive_update(d, {'a': {'b': 3}, 'f': {'g': 1}})
        self.assertEqual(d, {'a': {'b': 3, 'c': 2}, 'e': 1, 'f': {'g': 1}})


class TestLoadConfig(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.settings = Path(self.tmp.name)
        (self.settings / 'config.yml').write_text(BASE)
        full = self.settings / 'project_settings' / 'full'
        full.mkdir(parents=True)
        (full / 'config.yml').write_text('workers: 8\nbudgets:\n  default:\n    max_nodes: 99\n')

    def tearDown(self):
        self.tmp.cleanup()

    def test_default_profile(self):
        config = load_config(settings_dir=self.settings)
        self.assertEqual(config['profile'], 'quick')
        self.assertEqual(config['workers'], 2)
        self.assertEqual(config['logging']['root_path'], '')

    def test_profile_from_environment(self):
        with patch.dict(os.environ, {'TEST_ONEJOIN_PROFILE': 'full'}):
            config = load_config(settings_dir=self.settings)
        self.assertEqual(config['profile'], 'full')
        self.assertEqual(config['workers'], 8)
        self.assertEqual(config['budgets']['default'], {'max_nodes': 99, 'max_seconds': 10})

    def test_unknown_profile(self):
        with self.assertRaises(ConfigurationError):
            load_config('huge', settings_dir=self.settings)

    def test_missing_key(self):
        (self.settings / 'config.yml').write_text('workers: 2\n')
        with self.assertRaises(ConfigurationError):
            load_config(settings_dir=self.settings)

    def test_budget_for(self):
        config = load_config(settings_dir=self.settings)
        self.assertEqual(budget_for(config), SearchBudget(1000, 10.0))
        self.assertEqual(budget_for(config, 'cr-K_{5,3}', 'crossing_number'), SearchBudget(7, 20.0))
        self.assertEqual(budget_for(config, 'cr-K_{6,3}', 'crossing_number'), SearchBudget(5000, 20.0))

    def test_shipped_settings(self):
        for profile in ('quick', 'full'):
            config = load_config(profile, settings_dir=SETTINGS_DIR)
            self.assertEqual(config['profile'], profile)
            self.assertIsInstance(budget_for(config), SearchBudget)
