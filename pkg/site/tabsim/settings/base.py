"""The base settings for the tabsim project."""

import os

PROJECT_PATH = os.path.abspath(os.path.dirname(os.path.dirname(__file__)))

DEBUG = True

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.postgresql_psycopg2',
        'NAME': 'tabsim_data',
        'USER': 'tabsim',
        'PASSWORD': '',
        'HOST': '',
        'PORT': '',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

TIME_ZONE = 'Europe/Paris'

LANGUAGE_CODE = 'en-us'

USE_I18N = True

USE_TZ = True

# Make this unique, and don't share it with anybody.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'tabsim-local-only')

INSTALLED_APPS = (
    'experiments',
)

# Defaults of every experiment. Manifests and command-line flags override
# them key by key.
TABSIM = {
    'run': {
        'corpus': '',
        'seed': None,
        'k_folds': 5,
        'methods': ['tabsim', 'tabsim_l', 'jaccard', 'cosine', 'fusion',
                    'lr'],
        'overlap': ['tabsim', 'lr', 'cosine'],
        'out': '.',
    },
    'embeddings': {
        'strategy': 'random',
        'path': '',
        'dimension': 200,
    },
    'shape': {
        'n_rows': 9,
        'n_cols': 9,
        'tokens_per_cell': 4,
        'tokens_per_caption': 12,
    },
    'model': {
        'hidden_size': 100,
        'mlp_size': 100,
        'margin': 1.0,
        'use_caption': True,
        'variant': 'attention',
    },
    'train': {
        'epochs': 30,
        'batch_size': 32,
        'learning_rate': 0.001,
        'rho': 0.9,
        'epsilon': 1e-7,
    },
    'skipgram': {
        'window': 5,
        'negatives': 5,
        'epochs': 5,
        'permutations_per_column': 10,
        'learning_rate': 0.025,
    },
    'lr': {
        'l2': 1e-3,
        'tolerance': 1e-6,
        'max_iterations': 5000,
    },
    'metrics': {
        'gain': 'exponential',
        'ndcg_cutoffs': [5, 10],
    },
}

TOOLKIT_PACKAGES = ('tablecore', 'corpusio', 'tensorcore', 'neurallayers',
                    'siamese', 'embeddings', 'baselines', 'metrics',
                    'experiments')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(asctime)s %(module)s:'
            '%(lineno)d %(process)d %(thread)d %(message)s'
        },
        'simple': {
            'format': '%(levelname)s %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': 'INFO',
            'class': 'logging.StreamHandler',
            'formatter': 'simple'
        },
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': 'INFO',
        } for name in TOOLKIT_PACKAGES
    }
}
