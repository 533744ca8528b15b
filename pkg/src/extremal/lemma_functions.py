"""Auxiliary real functions used by the extremal arguments, with their domains and printed claims.

Every evaluator accepts a float or a numpy array of x values.
"""
from dataclasses import dataclass
from typing import Callable, Dict, Tuple, Union
import numpy as np
from src.models.errors import InvalidArgumentError

ArrayLike = Union[float, np.ndarray]


def _first_violation(x: ArrayLike, bad: ArrayLike) -> float:
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    bad_arr = np.broadcast_to(np.atleast_1d(bad), x_arr.shape)
    return float(x_arr[np.argmax(bad_arr)])


def _result(values: np.ndarray, x: ArrayLike) -> ArrayLike:
    return float(values) if np.ndim(x) == 0 else values


def f1(x: ArrayLike, d: float, r: float) -> ArrayLike:
    """sqrt(x^2 + d^2) - sqrt(x^2 + (d-r)^2)"""
    if not (d > 0 and 0 < r <= d):
        raise InvalidArgumentError(f"f1 requires d > 0 and 0 < r <= d, got d={d}, r={r}")
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0):
        raise InvalidArgumentError(f"f1 requires x > 0, got x={_first_violation(x, xs <= 0)}")
    return _result(np.sqrt(xs ** 2 + d ** 2) - np.sqrt(xs ** 2 + (d - r) ** 2), x)


def f2(x: ArrayLike, r: float) -> ArrayLike:
    """r·sqrt(x^2+1) + (x-r)·sqrt(x^2+4) + (x-r)·sqrt((x-r)^2+4)"""
    if r < 0:
        raise InvalidArgumentError(f"f2 requires r >= 0, got r={r}")
    xs = np.asarray(x, dtype=float)
    if np.any(xs < r):
        raise InvalidArgumentError(f"f2 requires x >= r={r}, got x={_first_violation(x, xs < r)}")
    y = xs - r
    return _result(r * np.sqrt(xs ** 2 + 1) + y * np.sqrt(xs ** 2 + 4) + y * np.sqrt(y ** 2 + 4), x)


def f3(x: ArrayLike) -> ArrayLike:
    """x·sqrt(x^2+4) - (x-2)·sqrt((x-2)^2+4)"""
    xs = np.asarray(x, dtype=float)
    if np.any(xs < 2):
        raise InvalidArgumentError(f"f3 requires x >= 2, got x={_first_violation(x, xs < 2)}")
    y = xs - 2
    return _result(xs * np.sqrt(xs ** 2 + 4) - y * np.sqrt(y ** 2 + 4), x)


def f(x: ArrayLike) -> ArrayLike:
    """(x-1)·sqrt(x^2+4) + sqrt(x^2+1)"""
    xs = np.asarray(x, dtype=float)
    if np.any(xs < 1):
        raise InvalidArgumentError(f"f requires x >= 1, got x={_first_violation(x, xs < 1)}")
    return _result((xs - 1) * np.sqrt(xs ** 2 + 4) + np.sqrt(xs ** 2 + 1), x)


def g(x: ArrayLike) -> ArrayLike:
    """f(x) - f(x+1)"""
    xs = np.asarray(x, dtype=float)
    return _result(np.asarray(f(xs)) - np.asarray(f(xs + 1)), x)


@dataclass(frozen=True)
class LemmaFunction:
    function_id: str
    evaluate: Callable[..., ArrayLike]
    parameters: Tuple[str, ...]
    domain_min: Callable[[Dict[str, float]], float]
    open_at_min: bool
    claimed_direction: str
    claim: str


LEMMA_FUNCTIONS: Dict[str, LemmaFunction] = {
    "f1": LemmaFunction(
        "f1", f1, ("d", "r"), lambda b: 0.0, True, "strictly-decreasing",
        "f1(x) = sqrt(x^2+d^2) - sqrt(x^2+(d-r)^2) is a monotonically decreasing function",
    ),
    "f2": LemmaFunction(
        "f2", f2, ("r",), lambda b: b["r"], False, "strictly-increasing",
        "f2(x) = r sqrt(x^2+1) + (x-r) sqrt(x^2+4) + (x-r) sqrt((x-r)^2+4), x >= r, is a monotonically increasing function",
    ),
    "f3": LemmaFunction(
        "f3", f3, (), lambda b: 2.0, False, "strictly-increasing",
        "f3(x) = x sqrt(x^2+4) - (x-2) sqrt((x-2)^2+4) is a monotonically increasing function",
    ),
    "f": LemmaFunction(
        "f", f, (), lambda b: 1.0, False, "strictly-increasing",
        "f''(x) > 0 for f(x) = (x-1) sqrt(x^2+4) + sqrt(x^2+1)",
    ),
    "g": LemmaFunction(
        "g", g, (), lambda b: 1.0, False, "strictly-increasing",
        "g(x) = f(x) - f(x+1) is a monotonically increasing function",
    ),
}


def get_lemma_function(function_id: str) -> LemmaFunction:
    """Look up a registered function by id."""
    try:
        return LEMMA_FUNCTIONS[function_id]
    except KeyError:
        raise InvalidArgumentError(f"unknown function id {function_id!r}; known: {sorted(LEMMA_FUNCTIONS)}")


def evaluate(function_id: str, x: ArrayLike, bindings: Dict[str, float]) -> ArrayLike:
    """Evaluate a registered function with its parameter bindings."""
    lemma_fn = get_lemma_function(function_id)
    missing = [p for p in lemma_fn.parameters if p not in bindings]
    if missing:
        raise InvalidArgumentError(f"{function_id} needs parameter(s) {missing}")
    return lemma_fn.evaluate(x, **{p: bindings[p] for p in lemma_fn.parameters})
