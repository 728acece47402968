"""Kummer's confluent hypergeometric function and repeated erfc integrals.

Only real arguments are supported. The parameter families that occur in the
similarity solutions are ``a`` in ``{-alpha/2, -alpha/2 + 1/2, alpha/2 + 1/2,
alpha/2 + 1, alpha/2 + 3/2}`` with ``b`` in ``{1/2, 3/2}``; for those, every
series is summed at a non-negative argument with non-negative ``a``, where
the terms do not alternate.
"""

import math

# exp(z) overflows a double just above this
_EXP_MAX = math.log(2.0**1023 * (2.0 - 2.0**-52))

_SERIES_RTOL = 1e-17
_SERIES_QUIET_TERMS = 3
_SERIES_MIN_TERMS = 500
# above this argument the plain recurrence drifts by a few ulp, and for
# a < 0 the leading terms alternate; both cases are summed in double-double
_COMPENSATED_FROM = 4.0

_SPLIT = 134217729.0  # 2^27 + 1


def _check_b(b):
    if b <= 0 and b == math.floor(b):
        raise ValueError(f"b must not be a non-positive integer, got b={b}")


def _two_sum(x, y):
    s = x + y
    v = s - x
    return s, (x - (s - v)) + (y - v)


def _two_prod(x, y):
    p = x * y
    c = _SPLIT * x
    xh = c - (c - x)
    xl = x - xh
    c = _SPLIT * y
    yh = c - (c - y)
    yl = y - yh
    return p, ((xh * yh - p) + xh * yl + xl * yh) + xl * yl


def _dd_mul(xh, xl, yh, yl):
    p, e = _two_prod(xh, yh)
    return _two_sum(p, e + xh * yl + xl * yh)


def _dd_div(xh, xl, yh, yl):
    q = xh / yh
    ph, pl = _dd_mul(q, 0.0, yh, yl)
    return _two_sum(q, ((xh - ph) - pl + xl) / yh)


def _series_compensated(a, b, z, max_terms):
    """Same series with terms and partial sums carried as double-doubles."""
    th, tl = 1.0, 0.0
    sh, sl = 1.0, 0.0
    quiet = 0
    for n in range(max_terms):
        nh, nl = _two_sum(a, float(n))
        nh, nl = _dd_mul(nh, nl, z, 0.0)
        dh, dl = _two_prod(b + n, float(n + 1))
        rh, rl = _dd_div(nh, nl, dh, dl)
        th, tl = _dd_mul(th, tl, rh, rl)
        sh, e = _two_sum(sh, th)
        sh, sl = _two_sum(sh, e + sl + tl)
        if math.isinf(sh):
            raise OverflowError(f"M({a}, {b}, {z}) overflows")
        if abs(th) <= _SERIES_RTOL * abs(sh):
            quiet += 1
            if quiet >= _SERIES_QUIET_TERMS:
                return sh + sl
        else:
            quiet = 0
    raise ArithmeticError(f"series for M({a}, {b}, {z}) did not converge in {max_terms} terms")


def _series(a, b, z):
    """Taylor series of M(a, b, z) summed term by term."""
    total = 1.0
    term = 1.0
    quiet = 0
    # enough terms to pass the peak term index ~ z
    max_terms = _SERIES_MIN_TERMS + int(2 * abs(z))
    if abs(z) >= _COMPENSATED_FROM or a < 0:
        return _series_compensated(a, b, z, max_terms)
    for n in range(max_terms):
        term *= (a + n) / (b + n) * z / (n + 1)
        total += term
        if math.isinf(total):
            raise OverflowError(f"M({a}, {b}, {z}) overflows")
        if abs(term) <= _SERIES_RTOL * abs(total):
            quiet += 1
            if quiet >= _SERIES_QUIET_TERMS:
                return total
        else:
            quiet = 0
    raise ArithmeticError(f"series for M({a}, {b}, {z}) did not converge in {max_terms} terms")


def kummer_m(a, b, z):
    """Confluent hypergeometric function of the first kind, M(a, b, z).

    Negative arguments go through Kummer's transformation
    ``M(a, b, z) = exp(z) M(b - a, b, -z)`` so the series is always summed
    at ``z >= 0``.

    Raises
    ------
    ValueError
        If ``b`` is zero or a negative integer.
    OverflowError
        If ``exp(|z|)`` (and with it the result) is not representable.
    """
    _check_b(b)
    a = float(a)
    b = float(b)
    z = float(z)
    if z == 0.0 or a == 0.0:
        return 1.0
    if abs(z) > _EXP_MAX:
        raise OverflowError(f"|z|={abs(z)} too large for M({a}, {b}, z)")
    if z < 0.0:
        return math.exp(z) * _series(b - a, b, -z)
    return _series(a, b, z)


def kummer_m_derivative(a, b, z):
    """d/dz M(a, b, z) = (a/b) M(a + 1, b + 1, z)."""
    _check_b(b)
    _check_b(b + 1)
    if a == 0:
        return 0.0
    return a / b * kummer_m(a + 1, b + 1, z)


_MILLER_EXTRA = 120
_FORWARD_LIMIT = 1.5


def inerfc(n, z):
    """n-th repeated integral of the complementary error function.

    ``i^0erfc = erfc`` and ``i^n erfc(z) = int_z^inf i^(n-1)erfc(t) dt``.
    Computed from the three-term recurrence
    ``i^n erfc(z) = -(z/n) i^(n-1)erfc(z) + i^(n-2)erfc(z) / (2n)``;
    upward for z < 1.5, where it is stable, and downward (Miller's algorithm
    normalised by erfc) above that, where the upward recurrence loses the
    minimal solution.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"order must be a non-negative integer, got {n}")
    n = int(n)
    z = float(z)
    if n == 0:
        return math.erfc(z)
    if z < _FORWARD_LIMIT:
        prev = 2.0 / math.sqrt(math.pi) * math.exp(-z * z)  # i^{-1}erfc
        cur = math.erfc(z)
        for k in range(1, n + 1):
            prev, cur = cur, -(z / k) * cur + prev / (2 * k)
        return cur

    top = n + _MILLER_EXTRA
    upper, lower = 0.0, 1.0  # proportional to i^{top+1}, i^{top}
    wanted = lower if top == n else 0.0
    for k in range(top + 1, 1, -1):
        # i^{k-2} = 2k i^k + 2z i^{k-1}
        upper, lower = lower, 2 * k * upper + 2 * z * lower
        if k - 2 == n:
            wanted = lower
        if lower > 1e250:
            upper /= 1e250
            lower /= 1e250
            wanted /= 1e250
    return wanted / lower * math.erfc(z)
