import functools

from qmock.arith import is_square


def requires(square_of, square=True):
    """Reject levels for which a construction does not apply.

    A construction that needs ``square_of * N`` to be a perfect square (or
    to be a non-square) is decorated like the below. The check runs before
    any series is computed.

    >>> @requires(2, square=True)
    >>> def construction(N, cutoff=None):
    >>>     ...
    >>>
    >>> construction(2)  # 2 * 2 = 4 is a square
    >>> construction(3)
    ValueError: ... needs 2N to be a perfect square ...(snip)

    Arguments:
        square_of (int): 2 or 6, the factor in front of ``N``.
        square (bool): Whether ``square_of * N`` must be a square.

    """

    def _wrapper(func):
        @functools.wraps(func)
        def _func_with_applicability(N, *args, **kwargs):
            N = int(N)
            if N < 1:
                raise ValueError(
                    '{} needs a positive level, but got N={}'.format(
                        func.__name__, N))
            if is_square(square_of * N) != square:
                raise ValueError(
                    '{} needs {}N to be {}a perfect square, but {}N = '
                    '{}'.format(func.__name__, square_of,
                                '' if square else 'not ', square_of,
                                square_of * N))
            return func(N, *args, **kwargs)
        _func_with_applicability.square_of = square_of
        _func_with_applicability.square = square
        return _func_with_applicability
    return _wrapper


def applies(func, N):
    return is_square(func.square_of * N) == func.square
