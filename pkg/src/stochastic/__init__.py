"""Geração pseudo e quase-aleatória, densidades e distribuições."""

from .streams import SeededStream, substream
from .distributions import DistKind, DistributionSpec, cdf, noise_matrix, pdf, sample
from .quasirandom import low_discrepancy_blocks, low_discrepancy_points

__all__ = [
    "SeededStream", "substream", "DistKind", "DistributionSpec", "cdf", "noise_matrix",
    "pdf", "sample", "low_discrepancy_blocks", "low_discrepancy_points",
]
