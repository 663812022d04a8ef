import unittest

import pytest

from qmock.qseries import RationalQSeries
from qmock.qseries import VectorQSeries


class SeriesTest(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def set_config(self, disable_experimental_warning):
        pass

    @pytest.fixture(autouse=True, scope='function')
    def set_cutoff(self, request, verify_cutoff):
        self.verify_cutoff = verify_cutoff

    def expect_series(self, actual, expected, cutoff=None):
        """Compare two series through ``cutoff``.

        The failure message names the first exponent (and component) at
        which the coefficients differ.

        Arguments:
            actual (RationalQSeries or VectorQSeries): Computed series.
            expected (RationalQSeries or VectorQSeries): Reference series.
            cutoff: Exponent through which both are compared. Defaults to
                the smaller cutoff of the two.
        """

        if cutoff is None:
            cutoff = min(actual.cutoff, expected.cutoff)
        witness = actual.first_difference(expected, cutoff)
        if witness is None:
            return
        if isinstance(actual, VectorQSeries):
            h, e = witness
            found = actual.component(h).coefficient(e)
            wanted = expected.component(h).coefficient(e)
            where = 'component {}, q^({})'.format(h, e)
        else:
            assert isinstance(actual, RationalQSeries)
            found = actual.coefficient(witness)
            wanted = expected.coefficient(witness)
            where = 'q^({})'.format(witness)
        pytest.fail('series differ at {}: {} != {}'.format(
            where, found, wanted))


def series(terms, cutoff):
    return RationalQSeries(terms, cutoff=cutoff)
