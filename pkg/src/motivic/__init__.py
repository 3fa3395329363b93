"""Exact computations in a free model of the Grothendieck ring of varieties.

Submodules: ``ring`` (the model), ``kapranov`` (zeta series of curves),
``measures`` (motivic measures), ``polygons``, ``ffcurves`` (curves over finite
fields), ``hilbert`` (Hilbert schemes of points on surfaces), ``limits`` and
``cli``.
"""

from __future__ import annotations

from .errors import BudgetExceeded, CertificateError
from .ring import (
    L,
    ONE,
    ZERO,
    Generator,
    GeneratorRegistry,
    MeasureData,
    Monomial,
    RingElement,
    duality,
    from_json,
    gen,
    lefschetz_power,
    mod_l_power,
    projective_class,
    to_json,
    v_L,
    virtual_dim,
)
from .kapranov import SymbolicCurve, kapranov_series, numerator, sym_class

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CertificateError",
    "L",
    "ONE",
    "ZERO",
    "Generator",
    "GeneratorRegistry",
    "MeasureData",
    "Monomial",
    "RingElement",
    "duality",
    "from_json",
    "gen",
    "lefschetz_power",
    "mod_l_power",
    "projective_class",
    "to_json",
    "v_L",
    "virtual_dim",
    "SymbolicCurve",
    "kapranov_series",
    "numerator",
    "sym_class",
]
