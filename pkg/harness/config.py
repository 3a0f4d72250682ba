"""
Experiment Configuration
YAML configuration with environment overrides, and the validated ExperimentConfig built from it
"""

import copy
import os
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional

import yaml
from robot.api import logger

from algorithms.policy_factory import PolicyFactory
from harness.errors import ConfigError

__all__ = ['ConfigLoader', 'ExperimentConfig', 'load_experiment_config']

DEFAULT_CONFIG_PATH = "config/config.yaml"

GENERATORS = ('clvb_zipf', 'clvb_expcutoff', 'clvb_uniform', 'molloy_reed', 'pref_attachment',
              'edge_list', 'undirected_edge_list', 'half_competitive')
PREDICTORS = ('expected', 'exact', 'subsample', 'random', 'type_graph')
OUTPUT_FORMATS = ('csv', 'json')


class ConfigLoader:
    """
    Loads config/config.yaml once per process and serves its sections.

    Environment variables (usually from a .env file):
        MATCHING_CONFIG: config file path
        MATCHING_SEED: master seed
        MATCHING_WORKERS: worker process count
        MATCHING_LOG_LEVEL: log level
    """

    _config: Dict[str, Any] = {}
    _path: Optional[str] = None

    @classmethod
    def load_config(cls, config_path: Optional[str] = None) -> dict:
        """
        Load configuration from a YAML file, merged over the defaults.

        Args:
            config_path: Path to config file (MATCHING_CONFIG or config/config.yaml if None)

        Returns:
            Configuration dictionary

        Raises:
            ConfigError: if the file exists but is not valid YAML mapping
        """
        path = config_path or os.environ.get('MATCHING_CONFIG') or DEFAULT_CONFIG_PATH
        defaults = cls._get_default_config()
        try:
            with open(path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
        except FileNotFoundError:
            logger.warn(f"Config file not found: {path}, using defaults")
            cls._config, cls._path = defaults, None
            return cls._config
        except yaml.YAMLError as e:
            logger.error(f"Error parsing config file: {e}")
            raise ConfigError(f"{path}: not valid YAML ({e})") from e
        if not isinstance(loaded, dict):
            raise ConfigError(f"{path}: top level must be a mapping of sections")

        for section, values in loaded.items():
            if values is None:
                continue
            if not isinstance(values, dict):
                raise ConfigError(f"{path}: section '{section}' must be a mapping")
            defaults.setdefault(section, {}).update(values)
        cls._config, cls._path = defaults, path
        logger.info(f"Configuration loaded from: {path}")
        return cls._config

    @classmethod
    def _get_default_config(cls) -> dict:
        """Get default configuration."""
        return {
            'experiment': {
                'trials': 100,
                'master_seed': 0,
                'shuffle_arrivals': True,
                'shuffle_offline': True,
                'hall_bound': True,
                'algorithms': ['mpd', 'ranking', 'greedy', 'mindegree'],
                'sweep': {'parameter': None, 'values': []},
            },
            'generator': {'name': 'clvb_zipf', 'n': 1000, 'm': 1000, 'alpha': 0.8, 'scale': None},
            'predictor': {'name': 'expected', 'fraction': 1.0},
            'analysis': {
                'mode': 'table',
                'alphas': [0.5, 1.0, 1.5, 2.0],
                'cutoffs': [10, 100, 1000, 10000, 100000],
                'tail_eps': 1e-9,
                'figure_alphas': [0.5, 0.8, 1.0, 1.5, 2.0],
                'figure_sizes': [10, 100, 1000],
            },
            'snapshot': {
                'first': None,
                'later': [],
                'undirected': True,
                'algorithms': ['mpd', 'mindegree', 'ranking'],
            },
            'output': {'path': 'robot-tests/results/experiment.csv', 'format': 'csv', 'report': None},
            'execution': {'workers': 1, 'log_level': 'INFO'},
        }

    @classmethod
    def get_config(cls) -> dict:
        """
        Get loaded configuration.

        Returns:
            Configuration dictionary
        """
        if not cls._config:
            cls.load_config()
        return cls._config

    @classmethod
    def get_section(cls, name: str) -> dict:
        """
        Get one configuration section with environment overrides applied.

        Args:
            name: Section name

        Returns:
            Copy of the section dictionary
        """
        section = copy.deepcopy(cls.get_config().get(name, {}))
        if name == 'experiment' and os.environ.get('MATCHING_SEED'):
            section['master_seed'] = _env_int('MATCHING_SEED')
        if name == 'execution':
            if os.environ.get('MATCHING_WORKERS'):
                section['workers'] = _env_int('MATCHING_WORKERS')
            if os.environ.get('MATCHING_LOG_LEVEL'):
                section['log_level'] = os.environ['MATCHING_LOG_LEVEL']
        return section

    @classmethod
    def experiment_config(cls, **overrides) -> 'ExperimentConfig':
        """
        Build the validated ExperimentConfig; keyword overrides (CLI flags) win.

        Returns:
            ExperimentConfig
        """
        experiment = cls.get_section('experiment')
        output = cls.get_section('output')
        cfg = ExperimentConfig(
            generator=cls.get_section('generator'),
            predictor=cls.get_section('predictor'),
            algorithms=list(experiment.get('algorithms', [])),
            trials=int(experiment.get('trials', 100)),
            master_seed=int(experiment.get('master_seed', 0)),
            shuffle_arrivals=bool(experiment.get('shuffle_arrivals', True)),
            shuffle_offline=bool(experiment.get('shuffle_offline', True)),
            hall_bound=bool(experiment.get('hall_bound', True)),
            sweep=experiment.get('sweep') or {},
            output_path=output.get('path'),
            output_format=output.get('format', 'csv'),
            workers=int(cls.get_section('execution').get('workers', 1)),
        )
        applied = {key: value for key, value in overrides.items() if value is not None}
        if applied:
            cfg = replace(cfg, **applied)
        cfg.validate()
        return cfg

    @classmethod
    def reset(cls) -> None:
        cls._config, cls._path = {}, None


def _env_int(name: str) -> int:
    try:
        return int(os.environ[name])
    except ValueError:
        raise ConfigError(f"Environment variable {name} must be an integer, "
                          f"got '{os.environ[name]}'") from None


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Everything needed to run one seeded batch of trials.
    """

    generator: Dict[str, Any]
    predictor: Dict[str, Any] = field(default_factory=lambda: {'name': 'expected'})
    algorithms: List[str] = field(default_factory=lambda: ['mpd', 'ranking'])
    trials: int = 100
    master_seed: int = 0
    shuffle_arrivals: bool = True
    shuffle_offline: bool = True
    hall_bound: bool = True
    sweep: Dict[str, Any] = field(default_factory=dict)
    output_path: Optional[str] = None
    output_format: str = 'csv'
    workers: int = 1

    def validate(self) -> None:
        """
        Check trial count, algorithm names, generator and predictor names.

        Raises:
            ConfigError: naming the first problem
        """
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if not self.algorithms:
            raise ConfigError("at least one algorithm is required")
        unknown = [name for name in self.algorithms if not PolicyFactory.is_known(name)]
        if unknown:
            raise ConfigError(f"unknown algorithm(s) {unknown}; known: {PolicyFactory.known_names()}")
        generator = self.generator.get('name')
        if generator not in GENERATORS:
            raise ConfigError(f"unknown generator '{generator}'; known: {list(GENERATORS)}")
        predictor = self.predictor.get('name')
        if predictor not in PREDICTORS:
            raise ConfigError(f"unknown predictor '{predictor}'; known: {list(PREDICTORS)}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {OUTPUT_FORMATS}, got '{self.output_format}'")

    def with_parameter(self, dotted: str, value: Any) -> 'ExperimentConfig':
        """
        Copy with one parameter replaced, e.g. "generator.alpha" or "predictor.fraction".

        Args:
            dotted: "<section>.<key>" with section generator or predictor, or a field name
            value: New value

        Returns:
            New ExperimentConfig
        """
        section, _, key = dotted.partition('.')
        if key and section in ('generator', 'predictor'):
            updated = dict(getattr(self, section))
            updated[key] = value
            return replace(self, **{section: updated})
        if not key and section in self.__dataclass_fields__:
            return replace(self, **{section: value})
        raise ConfigError(f"cannot sweep over '{dotted}'")


# ==================== Library Functions ====================

def load_experiment_config(config_path=None, **overrides):
    """
    Keyword: Load the config file and return a validated ExperimentConfig.

    Returns:
        ExperimentConfig
    """
    ConfigLoader.load_config(config_path)
    return ConfigLoader.experiment_config(**overrides)
