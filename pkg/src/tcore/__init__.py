"""t-core partition series and congruence sweeps."""

from .congruences import FamilyInstance, compile, default_suite, verify
from .generators import a2_closed, b_series, c_closed, c_series, das_series, tcore_series
from .partitions import Partition, a_t_bruteforce, enumerate_partitions, hook_numbers, is_t_core
from .series import EXACT, Mod, Ring, TruncatedSeries, div, euler_product, mul, reciprocal, reduce_mod

__all__ = [
    "EXACT",
    "FamilyInstance",
    "Mod",
    "Partition",
    "Ring",
    "TruncatedSeries",
    "a2_closed",
    "a_t_bruteforce",
    "b_series",
    "c_closed",
    "c_series",
    "compile",
    "das_series",
    "default_suite",
    "div",
    "enumerate_partitions",
    "euler_product",
    "hook_numbers",
    "is_t_core",
    "mul",
    "reciprocal",
    "reduce_mod",
    "tcore_series",
    "verify",
]
