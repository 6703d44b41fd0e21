"""The settings file used when working on the project locally.

Evaluation runs are stored in a SQLite file next to the project.
"""

import os
import tempfile
from tabsim.settings.base import *


DEBUG = True

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(PROJECT_PATH, 'tabsim.sqlite3'),
    }
}

LOGGING['handlers'].update({
    'file': {
        'level': 'DEBUG',
        'class': 'logging.FileHandler',
        'formatter': 'verbose',
        'filename': os.path.join(tempfile.gettempdir(), 'tabsim.log')
    },
})

LOGGING['loggers'] = {
    name: {
        'handlers': ['console', 'file'],
        'level': 'DEBUG'
    } for name in TOOLKIT_PACKAGES
}
