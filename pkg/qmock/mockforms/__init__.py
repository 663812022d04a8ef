from qmock.mockforms.builder import MockFormSpec  # NOQA
from qmock.mockforms.builder import VARIANTS  # NOQA

from qmock.mockforms.ideal_sums import hurwitz_ideal_series  # NOQA
from qmock.mockforms.ramanujan import ramanujan_f  # NOQA
from qmock.mockforms.ramanujan import ramanujan_omega  # NOQA
from qmock.mockforms.ramanujan import ramanujan_vector  # NOQA
from qmock.mockforms.weight_half import mock_theta_weight_half  # NOQA
from qmock.mockforms.weight_half import mock_theta_weight_half_alt  # NOQA
from qmock.mockforms.weight_half import mock_theta_weight_half_square_alt  # NOQA
from qmock.mockforms.weight_threehalf import mock_theta_weight_threehalf  # NOQA
from qmock.mockforms.weight_threehalf import mock_theta_weight_threehalf_alt  # NOQA
