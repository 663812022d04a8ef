import contextlib
from fractions import Fraction
import warnings


class _Config(object):

    def __init__(self):
        self.default_cutoff = Fraction(10)
        self.unit_search_limit = 10 ** 6
        self.region_scan_widen = 1
        self.disable_experimental_feature_warning = False

    def __repr__(self):
        items = sorted(vars(self).items())
        return 'Config({})'.format(
            ', '.join('{}={!r}'.format(k, v) for k, v in items))


config = _Config()


@contextlib.contextmanager
def using_config(name, value):
    """Temporarily overrides one configuration entry.

    >>> with using_config('default_cutoff', 20):
    >>>     theta(1, 0)  # computed through q^20

    Args:
        name (str): Attribute of ``qmock.configuration.config``.
        value: New value, restored on exit.
    """
    if not hasattr(config, name):
        raise ValueError('Unknown configuration entry: {}'.format(name))
    old_value = getattr(config, name)
    setattr(config, name, value)
    try:
        yield
    finally:
        setattr(config, name, old_value)


def resolve_cutoff(cutoff):
    if cutoff is None:
        cutoff = config.default_cutoff
    return Fraction(cutoff)


def experimental(name):
    if config.disable_experimental_feature_warning:
        return
    warnings.warn(
        '{} is experimental: the combination is computed but its '
        'mathematical properties are not checked.'.format(name),
        FutureWarning)
