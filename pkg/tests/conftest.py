from fractions import Fraction

import pytest

from qmock.configuration import using_config
from qmock.testing import series_generator


def pytest_addoption(parser):
    parser.addoption(
        '--verify-cutoff',
        dest='verify-cutoff', default='10',
        help='cutoff used by the end-to-end verification tests')


@pytest.fixture(scope='session')
def verify_cutoff(request):
    return Fraction(request.config.getoption('verify-cutoff'))


@pytest.fixture(scope='function')
def disable_experimental_warning():
    with using_config('disable_experimental_feature_warning', True):
        yield


@pytest.fixture(scope='function')
def random_state():
    return series_generator.default_random_state(42)
