"""Generalized fractal strings, the spectral operator zeta(d/dt) on
weighted half-line spaces, and shift-search experiments around the
universality of the Riemann zeta function.

Everything numerical is deterministic: fixed evaluation policies, explicit
error bounds where the math gives one, and thread counts that never change
output bits.
"""

from .errors import (AssumptionViolated, BadAlpha, ComputationError,
                     DivergentTail, EmptyTruncation, FactorSingular,
                     InsufficientAtoms, PoleAtOne, PoleAtZero, PoleHit,
                     ProfileDiscontinuous, RadiusTooSmall,
                     ToleranceUnreachable, TruncationTooShort,
                     UnboundedOnSegment, UnsupportedKind, VanishingTarget,
                     WindowTooSmall)
from .zeta import (DirichletCharacter, EvalOptions, completed_xi, digamma,
                   dirichlet_l, euler_product_truncated, gamma,
                   hurwitz_finite_part_at_1, hurwitz_with_error,
                   hurwitz_zeta, inverse_zeta_series, zeta, zeta_with_error)
from .primes import is_prime, moebius_up_to, primes_up_to
from .strings import (ClosedFormZeta, GeneralizedString, SpectralZetaCheck,
                      builtin_string, counting_function, dimension,
                      geometric_zeta, mult_convolve, spectral_counting,
                      spectral_measure_atoms, spectral_zeta,
                      spectral_zeta_check, string_from_atoms)
from .dimensions import (ComplexDimension, ExplicitCompareReport,
                         compare_explicit_vs_direct, complex_dimensions,
                         counting_from_dimensions, density_geometric_states,
                         density_spectral_states, jump_midpoints,
                         residue_contour)
from .operators import (SampledFunction, SpectralSegment, TruncatedShift,
                        adjoint_norm_check, apply_euler_factor,
                        apply_spectral_operator, approx_eigenfunction,
                        cutoff_value, gaussian_packet, hc_norm,
                        nearest_sample_distance, op_function_norm,
                        sampled_from_callable, segment_spectrum, shift,
                        spectral_tail_cut, zeta_range_sample)
from .universality import (AlmostPeriodReport, CompactBox, ScanResult,
                           almost_period_scan, base_rows, base_scalar,
                           check_profile_continuity, density_estimate,
                           hurwitz_scan, quantized_sup,
                           quantized_sup_general, require_nonvanishing,
                           scan_continuous, scan_discrete, sup_distance,
                           target_values, taylor_coefficients,
                           taylor_translate_scan)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
