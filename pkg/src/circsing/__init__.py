"""Exact singularity tests and determinants for circulant graphs and digraphs."""

__version__ = "0.1.0"

from .circulant import (  # noqa: E402
    CirculantSpec,
    DetReport,
    SingularityReport,
    complement_row,
    exact_determinant,
    gamma_strip,
    representer,
    singularity,
    spectrum_numeric,
    two_value_determinant,
)
from .cyclotomic import cyclotomic, divisors, euler_phi, odlyzko_modulus_class, phi_divides  # noqa: E402
from .families import build, enumerate_valid, parse_family, predict  # noqa: E402
from .oracle import bareiss_det, sweep_family, sweep_random_rows  # noqa: E402
from .polycore import IntPoly  # noqa: E402
