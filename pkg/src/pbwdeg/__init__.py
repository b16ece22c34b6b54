"""Exact PBW-filtration degrees of simple highest-weight modules."""

__version__ = "0.1.0"

from .rootsys import LieType, RootSystem, build_root_system, root_system  # noqa: E402
from .hwmod import HWModule, construct_module, freudenthal, root_operator  # noqa: E402
from .pbwfilt import (  # noqa: E402
    GradedCharacter,
    PoincarePolynomial,
    additivity_check,
    brute_force_filtration,
    pbw_filtration,
)
from .kostant import kostant_table, mindeg  # noqa: E402

__all__ = [
    "LieType",
    "RootSystem",
    "build_root_system",
    "root_system",
    "HWModule",
    "construct_module",
    "freudenthal",
    "root_operator",
    "PoincarePolynomial",
    "GradedCharacter",
    "pbw_filtration",
    "brute_force_filtration",
    "additivity_check",
    "kostant_table",
    "mindeg",
]
