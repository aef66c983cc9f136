"""Estatísticas amostrais, ajustes de distribuição e testes de hipótese."""

from .models import FitResult, KsReport, MomentReport
from .statistics import (
    body_probability, histogram, moments, tail_probability, two_tail_probability,
)
from .fitting import fit_gaussian, fit_student_t
from .testing import cdf_intersection, ks_test

__all__ = [
    "FitResult", "KsReport", "MomentReport", "body_probability", "histogram", "moments",
    "tail_probability", "two_tail_probability", "fit_gaussian", "fit_student_t",
    "cdf_intersection", "ks_test",
]
