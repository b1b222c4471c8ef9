"""Exact spectra of twisted Dirac operators on complex projective spaces.

The library computes eigenvalues and multiplicities of the square of the
Dirac operator of CP^d (Fubini-Study metric, holomorphic sectional
curvature 4) twisted by powers of the tautological bundle or by the spinor
bundle of the normal bundle of the canonical embedding CP^d -> CP^n, and
evaluates the associated upper/lower eigenvalue bounds.
"""

from cpdirac.bounds import (
    BoundsReport,
    SharpnessReport,
    Verdict,
    bounds_report,
    killing_spinor_count,
    kirchberg_lower_bound,
    re_spectrum_totally_geodesic,
    sharpness_report,
    type_rr1_bounds,
    upper_bound,
)
from cpdirac.core import (
    ConsistencyError,
    EmbeddingParams,
    Family,
    FamilyIndex,
    ParameterError,
    Spectrum,
    SpectrumEntry,
    binomial,
    rational_reduce,
)
from cpdirac.line_bundle import (
    enumerate_line_bundle,
    family_eigenvalue,
    family_highest_weight,
    family_multiplicity,
)
from cpdirac.normal import (
    decompose_normal_spinor,
    enumerate_normal,
    lowest_eigenvalue,
    merge_line_bundles,
)
from cpdirac.weyl import RootSystem, inner, root_system, weyl_dim

__version__ = "0.1.0"
