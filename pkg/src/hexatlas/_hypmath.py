"""Overflow- and cancellation-safe hyperbolic function helpers.

Lengths along degenerating families reach ``exp(40)`` and beyond, so cosh
and sinh are handled through their logarithms, and arccosh is evaluated
either from ``log(z)`` or from ``z - 1`` directly.
"""
import math

LN2 = math.log(2.0)
# Above this, arccosh(z) = log(2z) and arcsinh(z) = log(2z) to double precision.
_LARGE_LOG = 20.0


def log_cosh(x: float) -> float:
    x = abs(x)
    return x + math.log1p(math.exp(-2.0 * x)) - LN2


def log_sinh(x: float) -> float:
    """log(sinh x) for x > 0."""
    return x + math.log(-math.expm1(-2.0 * x)) - LN2


def log_coth(x: float) -> float:
    return log_cosh(x) - log_sinh(x)


def acosh1p_from_log(log_y: float) -> float:
    """arccosh(1 + y) given log(y)."""
    if log_y > 2 * _LARGE_LOG:
        # z = 1 + y; arccosh z = log(2z) - O(z^-2)
        return LN2 + log_y + math.log1p(math.exp(-log_y))
    y = math.exp(log_y)
    return math.log1p(y + math.sqrt(y * (y + 2.0)))


def acosh_from_log(log_z: float) -> float:
    """arccosh(z) given log(z); values a hair below z = 1 are rounding."""
    if log_z > _LARGE_LOG:
        return log_z + LN2 + math.log1p(-0.25 * math.exp(-2.0 * log_z))
    if log_z <= 0.0:
        if log_z < -1e-13:
            raise ValueError(f"arccosh argument below 1 (log z = {log_z})")
        return 0.0
    return acosh1p_from_log(math.log(math.expm1(log_z)))


def asinh_from_log(log_z: float) -> float:
    if log_z > _LARGE_LOG:
        return log_z + LN2 + math.log1p(0.25 * math.exp(-2.0 * log_z))
    return math.asinh(math.exp(log_z))


def logaddexp(x: float, y: float) -> float:
    if x < y:
        x, y = y, x
    return x + math.log1p(math.exp(y - x))


def log_coth_minus_1(x: float) -> float:
    """log(coth x - 1) = log(2 / (e^{2x} - 1)) for x > 0."""
    if x > _LARGE_LOG:
        return LN2 - 2.0 * x - math.log(-math.expm1(-2.0 * x))
    return LN2 - math.log(math.expm1(2.0 * x))


def log_coth_product_minus_1(u: float, v: float) -> float:
    """log(coth u coth v - 1), a sum of positive terms, for u, v > 0."""
    qu, qv = log_coth_minus_1(u), log_coth_minus_1(v)
    return logaddexp(logaddexp(qu, qv), qu + qv)


def log_cosh_over_sinh(u: float, v: float) -> float:
    """log(cosh u / sinh v) with the exponents combined before logging."""
    u = abs(u)
    return (u - v) + math.log1p(math.exp(-2.0 * u)) - math.log(-math.expm1(-2.0 * v))
