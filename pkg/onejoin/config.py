import logging
import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from model.verdict import SearchBudget
from .exceptions import ConfigurationError

SETTINGS_DIR = Path(__file__).resolve().parent.parent / 'settings'
SYSTEM_CONFIG = Path('/etc/onejoin/config.yml')
PROFILES = ('quick', 'full')

log = logging.getLogger(__name__)


def sub_env_vars(d: dict):
    regex = re.compile(r'\${(\w+?)(?::(.*))?}')
    for k, v in d.items():
        if isinstance(v, str):
            m = regex.match(v)
            if m:
                d[k] = os.environ.get(*m.groups())
        elif isinstance(v, dict):
            sub_env_vars(v)


def validate_config(c: dict, required_keys: Dict[str, Any], prefix: str = ''):
    for key, value in required_keys.items():
        if key not in c or c[key] is None:
            raise ConfigurationError(f'Invalid configuration. Value for "{prefix}.{key}" is missing.')
        if isinstance(value, Dict):
            validate_config(c[key], value, f'{prefix}.{key}')


def recursive_update(d1: dict, d2: dict):
    for k, v in (d2 or {}).items():
        if k not in d1 or not isinstance(v, dict) or not isinstance(d1[k], dict):
            d1[k] = v
        else:
            recursive_update(d1[k], v)


def _read_yaml(filename: Path) -> dict:
    with filename.open('r') as f:
        return yaml.safe_load(f.read()) or {}


def load_config(profile: Optional[str] = None, settings_dir: Path = SETTINGS_DIR) -> dict:
    """Base settings, then the profile overrides, then the system-wide file"""
    config = _read_yaml(settings_dir / 'config.yml')
    sub_env_vars(config)
    profile = profile or config.get('profile') or 'quick'
    if profile not in PROFILES:
        raise ConfigurationError(f'unknown budget profile "{profile}", expected one of {", ".join(PROFILES)}')

    for filename in (settings_dir / 'project_settings' / profile / 'config.yml', SYSTEM_CONFIG):
        if not filename.exists():
            continue
        recursive_update(config, _read_yaml(filename))

    sub_env_vars(config)
    config['profile'] = profile
    validate_config(config, {'workers': True,
                             'budgets': {'default': {'max_nodes': True, 'max_seconds': True},
                                         'crossing_number': {'max_nodes': True, 'max_seconds': True}},
                             'symmetry': {'max_automorphisms': True},
                             'report': True})
    return config


def budget_for(config: dict, claim_id: Optional[str] = None, section: str = 'default') -> SearchBudget:
    budgets = config['budgets']
    budget_config = dict(budgets[section])
    claims = budgets.get('claims') or {}
    if claim_id is not None and claim_id in claims:
        budget_config.update(claims[claim_id])
    return SearchBudget.from_config(budget_config)


def setup_logging(logging_config: dict):
    path = logging_config['root_path'] if 'root_path' in logging_config else ''
    level = logging_config['base_level'] if 'base_level' in logging_config else 'INFO'

    full_formatter = logging.Formatter('[%(asctime)s %(name)-50s %(levelname)-8s] %(message)s')

    logging.basicConfig(level=level,
                        format='[%(name)-50s: %(levelname)-8s] %(message)s')

    # noinspection PyBroadException
    try:
        if not path:
            return

        logs_folder = Path(path).expanduser()
        os.makedirs(logs_folder, exist_ok=True)

        file_log_handler = logging.FileHandler(logs_folder / 'info.log')
        file_log_handler.setLevel(logging.INFO)
        file_log_handler.setFormatter(full_formatter)
        logging.getLogger('').addHandler(file_log_handler)

        err_log_handler = logging.FileHandler(logs_folder / 'error.log')
        err_log_handler.setLevel(logging.ERROR)
        err_log_handler.setFormatter(full_formatter)
        logging.getLogger('').addHandler(err_log_handler)

        log.info(f'storing file logs in {logs_folder.absolute()}')
    except Exception as e:
        logging.exception(f'not using file logging. Error: {e}')
