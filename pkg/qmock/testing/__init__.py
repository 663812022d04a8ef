from qmock.testing import oracles  # NOQA
from qmock.testing import series_generator  # NOQA
