from qmock.configuration import config  # NOQA
from qmock.configuration import using_config  # NOQA

from qmock.qseries import RationalQSeries  # NOQA
from qmock.qseries import VectorQSeries  # NOQA

from qmock.thetaeta import eta  # NOQA
from qmock.thetaeta import eta_power  # NOQA
from qmock.thetaeta import theta  # NOQA

from qmock.mockforms import hurwitz_ideal_series  # NOQA
from qmock.mockforms import mock_theta_weight_half  # NOQA
from qmock.mockforms import mock_theta_weight_half_alt  # NOQA
from qmock.mockforms import mock_theta_weight_threehalf  # NOQA
from qmock.mockforms import mock_theta_weight_threehalf_alt  # NOQA

from qmock.export import emit  # NOQA
from qmock.export import OutputDocument  # NOQA
from qmock.export import parse  # NOQA
from qmock.export import tool_version


__version__ = tool_version()
