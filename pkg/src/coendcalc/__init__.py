"""Finite (co)end calculus: ends, coends, Kan extensions, weighted
(co)limits, profunctors and Day convolution over small finite categories,
each construction paired with an independently computed check."""

from .coend import (
    coend,
    end,
    end_via_equalizer,
    fubini,
    nat_set,
    param_coend,
    param_end,
)
from .convolution import (
    MonoidalStructure,
    PromonoidalStructure,
    day_convolve,
    day_promonoidal,
    fourier,
    hom_kernel,
    kernel_check,
    parseval,
)
from .errors import CoendError
from .fincat import (
    FinCategory,
    FinFunctor,
    op_times,
    opposite,
    product,
    validate_category,
)
from .kanweighted import (
    isbell,
    lan,
    nerve_realization,
    ran,
    weighted_colimit,
    weighted_limit,
)
from .profunctor import Profunctor, collage, pro_compose
from .setfun import FinSet, SetValuedFunctor, representable
from .suites import run_all, run_suite

__all__ = [
    "CoendError", "FinCategory", "FinFunctor", "FinSet", "MonoidalStructure",
    "Profunctor", "PromonoidalStructure", "SetValuedFunctor", "coend", "collage",
    "day_convolve", "day_promonoidal", "end", "end_via_equalizer", "fourier", "fubini",
    "hom_kernel", "isbell", "kernel_check", "lan", "nat_set", "nerve_realization",
    "op_times", "opposite", "param_coend", "param_end", "parseval", "pro_compose",
    "product", "ran", "representable", "run_all", "run_suite", "validate_category",
    "weighted_colimit", "weighted_limit",
]
