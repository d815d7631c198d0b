"""wedgebench: a verification workbench for dispersion-relation causality,
relativistic direct-interaction scattering, factorizing S-matrices, the
Zamolodchikov-Faddeev wedge algebra, modular KMS/crossing identities and
localization-entropy scaling."""

from .numerics import GridFunction, AnalyticSampler, pv_integral, fourier_support_split
from .dispersion import (
    CausalityReport,
    kk_real_from_imag,
    causality_residual,
    dispersion_residual,
)
from . import scatfunc, zf, crossing, localization, unitarization, dpi

__version__ = "0.1.0"

__all__ = [
    "GridFunction",
    "AnalyticSampler",
    "pv_integral",
    "fourier_support_split",
    "CausalityReport",
    "kk_real_from_imag",
    "causality_residual",
    "dispersion_residual",
    "scatfunc",
    "zf",
    "crossing",
    "localization",
    "unitarization",
    "dpi",
    "__version__",
]
