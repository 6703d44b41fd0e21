"""The settings file used on the shared experiment server.

"""

import os
from tabsim.settings.base import *

DEBUG = False

SECRET_KEY = os.environ['DJANGO_SECRET_KEY']

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.postgresql_psycopg2',
        'NAME': os.environ.get('DJANGO_DATABASE_NAME', 'tabsim_data'),
        'USER': os.environ.get('DJANGO_DATABASE_USER', 'tabsim'),
        'PASSWORD': os.environ.get('DJANGO_DATABASE_PASSWORD', ''),
        'HOST': os.environ['DJANGO_DATABASE_HOST'],
        'PORT': '',
        'CONN_MAX_AGE': 600,
    }
}
