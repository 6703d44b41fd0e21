"""Experiment configuration.

A run is configured in layers: the ``TABSIM`` setting, an INI manifest,
dotted ``--section.key`` flags and finally the global ``--seed`` and
``--out`` flags.
"""

import configparser
import copy
import logging
import os
from dataclasses import dataclass, replace

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from baselines import LrConfig
from embeddings import STRATEGIES, SkipgramConfig
from metrics import GAINS
from siamese import ModelConfig, TrainConfig
from tablecore import ShapeConfig

logger = logging.getLogger(__name__)

METHODS = ('tabsim', 'tabsim_l', 'jaccard', 'cosine', 'fusion', 'lr')


def _text(value):
    return str(value).strip()


def _integer(value):
    return int(value)


def _real(value):
    return float(value)


def _boolean(value):
    if isinstance(value, bool):
        return value
    try:
        return configparser.ConfigParser.BOOLEAN_STATES[value.lower()]
    except (AttributeError, KeyError):
        raise ValueError(value)


def _names(value):
    if isinstance(value, str):
        return tuple(n.strip() for n in value.split(',') if n.strip())
    return tuple(value)


def _integers(value):
    return tuple(int(v) for v in _names(value))


SCHEMA = {
    'run': {'corpus': _text, 'seed': _integer, 'k_folds': _integer,
            'methods': _names, 'overlap': _names, 'out': _text},
    'embeddings': {'strategy': _text, 'path': _text, 'dimension': _integer},
    'shape': {'n_rows': _integer, 'n_cols': _integer,
              'tokens_per_cell': _integer, 'tokens_per_caption': _integer},
    'model': {'hidden_size': _integer, 'mlp_size': _integer,
              'margin': _real, 'use_caption': _boolean, 'variant': _text},
    'train': {'epochs': _integer, 'batch_size': _integer,
              'learning_rate': _real, 'rho': _real, 'epsilon': _real},
    'skipgram': {'window': _integer, 'negatives': _integer,
                 'epochs': _integer, 'permutations_per_column': _integer,
                 'learning_rate': _real},
    'lr': {'l2': _real, 'tolerance': _real, 'max_iterations': _integer},
    'metrics': {'gain': _text, 'ndcg_cutoffs': _integers},
}


def dotted_names():
    """Every configurable key as ``section.key``."""
    return ['{0}.{1}'.format(section, key)
            for section, keys in SCHEMA.items() for key in keys]


def _set(values, section, key, raw, source):
    try:
        convert = SCHEMA[section][key]
    except KeyError:
        raise ImproperlyConfigured(
            'Unknown setting {0}.{1} in {2}'.format(section, key, source))
    try:
        values[section][key] = convert(raw) if raw is not None else None
    except (TypeError, ValueError):
        raise ImproperlyConfigured(
            'Malformed value {0!r} for {1}.{2} in {3}'.format(
                raw, section, key, source))


def read_manifest(path):
    """Return the sections of the INI manifest at ``path``."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        if not parser.read(path, encoding='utf-8'):
            raise ImproperlyConfigured(
                'Cannot read the manifest {0}'.format(path))
    except configparser.Error as e:
        raise ImproperlyConfigured(
            'Malformed manifest {0}: {1}'.format(path, e))
    return {section: dict(parser.items(section))
            for section in parser.sections()}


def layered_values(manifest=None, overrides=None, seed=None, out=None):
    """Merge every configuration layer into one dict of sections."""
    values = copy.deepcopy(settings.TABSIM)
    for section in SCHEMA:
        values.setdefault(section, {})
    if manifest:
        for section, items in read_manifest(manifest).items():
            if section not in SCHEMA:
                raise ImproperlyConfigured(
                    'Unknown section [{0}] in {1}'.format(section, manifest))
            for key, raw in items.items():
                _set(values, section, key, raw, manifest)
    for name, raw in (overrides or {}).items():
        if raw is None:
            continue
        section, _, key = name.partition('.')
        if section not in SCHEMA:
            raise ImproperlyConfigured(
                'Unknown section in --{0}'.format(name))
        _set(values, section, key, raw, 'the command line')
    if seed is not None:
        values['run']['seed'] = int(seed)
    if out is not None:
        values['run']['out'] = out
    return values


@dataclass(frozen=True)
class RunConfig(object):
    """Everything a command needs, validated."""
    corpus: str
    seed: int
    k_folds: int
    methods: tuple
    overlap: tuple
    out: str
    strategy: str
    embeddings_path: str
    shape: ShapeConfig
    model: ModelConfig
    train: TrainConfig
    skipgram: SkipgramConfig
    lr: LrConfig
    gain: str
    ndcg_cutoffs: tuple

    def model_config(self, variant=None):
        if variant is None:
            return self.model
        return replace(self.model, variant=variant)

    def require_file(self, path, name):
        if not path or not os.path.isfile(path):
            raise ImproperlyConfigured(
                '{0} does not name a file: {1!r}'.format(name, path))
        return path

    def corpus_path(self):
        return self.require_file(self.corpus, 'run.corpus')

    def output_path(self, name):
        """Path of ``name`` inside the output directory, created on
        demand."""
        os.makedirs(self.out, exist_ok=True)
        return os.path.join(self.out, name)


def run_config(values):
    """Build a ``RunConfig`` from layered values."""
    run = values['run']
    embeddings = values['embeddings']
    if run.get('seed') is None:
        raise ImproperlyConfigured('run.seed is required')
    seed = run['seed']
    unknown = [m for m in _names(run['methods']) + _names(run['overlap'])
               if m not in METHODS]
    if unknown:
        raise ImproperlyConfigured(
            'Unknown methods {0}; choose among {1}'.format(
                ', '.join(unknown), ', '.join(METHODS)))
    if embeddings['strategy'] not in STRATEGIES:
        raise ImproperlyConfigured(
            'Unknown embedding strategy {0!r}; valid strategies are {1}'
            .format(embeddings['strategy'], ', '.join(STRATEGIES)))
    gain = values['metrics']['gain']
    if gain not in GAINS:
        raise ImproperlyConfigured(
            'metrics.gain must be one of {0}'.format(', '.join(GAINS)))
    dimension = embeddings['dimension']
    config = RunConfig(
        corpus=run['corpus'], seed=seed, k_folds=run['k_folds'],
        methods=_names(run['methods']), overlap=_names(run['overlap']),
        out=run['out'], strategy=embeddings['strategy'],
        embeddings_path=embeddings['path'],
        shape=ShapeConfig(**values['shape']),
        model=ModelConfig(embedding_dim=dimension, **values['model']),
        train=TrainConfig(seed=seed, **values['train']),
        skipgram=SkipgramConfig(dimension=dimension, seed=seed,
                                **values['skipgram']),
        lr=LrConfig(**values['lr']), gain=gain,
        ndcg_cutoffs=_integers(values['metrics']['ndcg_cutoffs']))
    logger.debug('Run configuration: %s', config)
    return config


def load_run_config(manifest=None, overrides=None, seed=None, out=None):
    return run_config(layered_values(manifest, overrides, seed, out))
