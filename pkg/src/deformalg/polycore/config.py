"""Process-wide defaults for Groebner limits and the on-disk basis cache."""

from __future__ import annotations

from .groebner import DEFAULT_LIMITS, GBLimits

limits: GBLimits = DEFAULT_LIMITS
cache = None  # set to a GBCache by the CLI / tests


def set_limits(timeout_s=None, degree_cap=None):
    global limits
    limits = GBLimits(timeout_s=timeout_s, degree_cap=degree_cap)
    return limits


def set_cache(c):
    global cache
    cache = c
    return cache
