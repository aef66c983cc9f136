"""Otimização de estratégias: utilidades, amostragem, superfícies e descida projetada."""

from .models import (
    Budget, FrontierPoint, MapCell, Method, OptDiagnostics, OptResult, SamplingResult,
    UtilityEvaluation,
)
from .utility import UtilityEvaluator, evaluate_utility
from .sampling import sample_strategies
from .surface import PolySurface, fit_poly_surface, monomial_exponents
from .descent import minimize_surface, project_feasible, projected_gradient_descent
from .engine import ExecutionOptimizer, OptimizationRun, ac_analytic_optimum

__all__ = [
    "Budget", "FrontierPoint", "MapCell", "Method", "OptDiagnostics", "OptResult",
    "SamplingResult", "UtilityEvaluation", "UtilityEvaluator", "evaluate_utility",
    "sample_strategies", "PolySurface", "fit_poly_surface", "monomial_exponents",
    "minimize_surface", "project_feasible", "projected_gradient_descent",
    "ExecutionOptimizer", "OptimizationRun", "ac_analytic_optimum",
]
