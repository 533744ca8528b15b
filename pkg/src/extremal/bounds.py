"""Closed-form extremal values Q(n,t) and Φ(β,t), plus the published base-case variants."""
import math
from src.models.errors import InvalidArgumentError
from src.models.reports import ExtremalBound


def bound_Q(n: int, t: int) -> ExtremalBound:
    """(n-2t-1)·sqrt((n-1)^2+1) + 2t·sqrt((n-1)^2+4) + 2·sqrt(2)·t"""
    if t < 0 or n < 2 * t + 1:
        raise InvalidArgumentError(f"Q(n,t) requires t >= 0 and n >= 2t+1, got n={n}, t={t}")
    s = (n - 1) ** 2
    value = (n - 2 * t - 1) * math.sqrt(s + 1) + 2 * t * math.sqrt(s + 4) + 2 * math.sqrt(2) * t
    return ExtremalBound(family="Q", params=(n, t), value=value)


def bound_Phi(beta: int, t: int) -> ExtremalBound:
    """(β+t-1)·sqrt((β+t)^2+4) + sqrt((β+t)^2+1) + sqrt(5)·(β-t-1) + 2·sqrt(2)·t"""
    if t < 0 or beta < t + 1:
        raise InvalidArgumentError(f"Φ(β,t) requires t >= 0 and β >= t+1, got β={beta}, t={t}")
    k = beta + t
    value = (
        (k - 1) * math.sqrt(k * k + 4)
        + math.sqrt(k * k + 1)
        + math.sqrt(5) * (beta - t - 1)
        + 2 * math.sqrt(2) * t
    )
    return ExtremalBound(family="Phi", params=(beta, t), value=value)


def published_tree_pm_bound(beta: int) -> float:
    """The t=0 perfect-matching bound exactly as printed in the literature.

    It disagrees with Φ(β,0) and with enumeration; kept only to record that.
    """
    if beta < 1:
        raise InvalidArgumentError(f"β must be >= 1, got {beta}")
    return (
        2 * (2 * beta - 1) * math.sqrt(beta ** 2 + 1)
        + math.sqrt(4 * beta ** 2 + 1)
        + math.sqrt(5) * (2 * beta - 1)
    )


def published_unicyclic_pm_bound(beta: int) -> float:
    """The t=1 perfect-matching bound exactly as printed; see published_tree_pm_bound."""
    if beta < 2:
        raise InvalidArgumentError(f"β must be >= 2 for one cycle, got {beta}")
    return (
        2 * beta * math.sqrt((2 * beta + 1) ** 2 + 4)
        + math.sqrt((2 * beta + 1) ** 2 + 1)
        + 2 * math.sqrt(5) * (beta - 1)
        + 2 * math.sqrt(2)
    )
