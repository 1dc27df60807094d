"""Laplace transform of the Frechet distribution for rational shape
parameters via Meijer G functions evaluated by Mellin-Barnes contour
quadrature, the Frechet integral transform with its closed-form special
cases, and independent quadrature oracles cross-validating every closed form.
"""

from .distributions import (
    LevyIndex,
    RationalShape,
    Shape,
    find_maximum,
    frechet_cdf,
    frechet_moment,
    frechet_pdf,
    frechet_quantile,
    levy_asymptotic,
    levy_asymptotic_rescaled,
    levy_moment,
    levy_pdf_half,
)
from .errors import (
    ContourError,
    DivergentMoment,
    DomainError,
    FrechetLaplaceError,
    MissingLaplace,
    NonConvergence,
    PoleError,
)
from .ftransform import (
    FrechetKernelParams,
    TransformTarget,
    frechet_kernel,
    frechet_transform_frechet_half,
    frechet_transform_levy,
    frechet_transform_quadrature,
    frechet_transform_via_laplace,
)
from .laplace import (
    LaplaceQuery,
    Method,
    laplace_frechet,
    laplace_frechet_bessel,
    laplace_frechet_oracle,
    laplace_symmetry_check,
)
from .meijer import (
    LaplaceClosedForm,
    MeijerSpec,
    build_laplace_closed_form,
    meijer_g_m0,
    meijer_g_m0_derivative,
)
from .mellin import (
    ContourConfig,
    MellinFunction,
    delta_list,
    frechet_mellin_image,
    laplace_via_mellin,
    mellin_frechet,
)
from .numerics import (
    EvalResult,
    QuadratureConfig,
    bessel_k1,
    integrate_semi_infinite,
    log_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "Shape", "RationalShape", "LevyIndex",
    "frechet_pdf", "frechet_cdf", "frechet_quantile", "frechet_moment",
    "levy_pdf_half", "levy_moment", "levy_asymptotic", "levy_asymptotic_rescaled",
    "find_maximum",
    "QuadratureConfig", "EvalResult", "log_gamma", "integrate_semi_infinite",
    "bessel_k1",
    "ContourConfig", "MellinFunction", "mellin_frechet", "frechet_mellin_image",
    "delta_list", "laplace_via_mellin",
    "MeijerSpec", "LaplaceClosedForm", "meijer_g_m0", "meijer_g_m0_derivative",
    "build_laplace_closed_form",
    "Method", "LaplaceQuery", "laplace_frechet", "laplace_frechet_oracle",
    "laplace_symmetry_check", "laplace_frechet_bessel",
    "FrechetKernelParams", "TransformTarget", "frechet_kernel",
    "frechet_transform_quadrature", "frechet_transform_via_laplace",
    "frechet_transform_levy", "frechet_transform_frechet_half",
    "FrechetLaplaceError", "DomainError", "PoleError", "DivergentMoment",
    "NonConvergence", "ContourError", "MissingLaplace",
]
