"""Wire the Django test environment into pytest.

Mirrors ``./manage.py test --settings=tabsim.settings.tests``: settings are
loaded before collection and the test database is created once per session.
"""

import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tabsim.settings.tests')
django.setup()

import pytest  # noqa: E402
from django.test.utils import (setup_databases,  # noqa: E402
                               setup_test_environment,
                               teardown_databases,
                               teardown_test_environment)


@pytest.fixture(scope='session', autouse=True)
def django_test_environment():
    setup_test_environment()
    old_config = setup_databases(verbosity=0, interactive=False)
    yield
    teardown_databases(old_config, verbosity=0)
    teardown_test_environment()
