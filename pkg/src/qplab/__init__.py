"""Exact partition enumeration and q-series identity checking."""

from .bijections import BijectionImage, ImageError, invert, rho, rho_star
from .harness import (IdentityInstance, Mode, VerificationReport, list_identities, run_suite,
                      verify)
from .partitions import (InfiniteUniverseError, Partition, PartitionConstraints, PartitionStats,
                         conjugate, count, enumerate_partitions, gf_enumerated, stats)
from .qpoly import (DivisionError, Grading, GradingError, LaurentPoly, TruncatedSeries,
                    divide_exact, format_poly, gaussian_binomial, mono, parse_poly,
                    phi_terminating, pochhammer, pochhammer_inv, pochhammer_series, q_trinomial,
                    rogers_szego)

__all__ = [
    "BijectionImage", "DivisionError", "Grading", "GradingError", "IdentityInstance",
    "ImageError", "InfiniteUniverseError", "LaurentPoly", "Mode", "Partition",
    "PartitionConstraints", "PartitionStats", "TruncatedSeries", "VerificationReport",
    "conjugate", "count", "divide_exact", "enumerate_partitions", "format_poly",
    "gaussian_binomial", "gf_enumerated", "invert", "list_identities", "mono", "parse_poly",
    "phi_terminating", "pochhammer", "pochhammer_inv", "pochhammer_series", "q_trinomial",
    "rho", "rho_star", "rogers_szego", "run_suite", "stats", "verify",
]
