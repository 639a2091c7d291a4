"""Information-disturbance tradeoff for eavesdropping on two nonorthogonal qubit signals.

Modules: ``matcore`` (small dense linear algebra, RNG), ``model`` (probe
interaction), ``channel`` (propagation and disturbance), ``infotheory``
(POVMs, mutual information), ``frontier`` (closed-form tradeoff curve),
``optimizer`` (numerical search, Davies experiment), ``scenario`` (the
Alice-Eve-Bob chain) and ``cli``.
"""
from .channel import propagate
from .frontier import (
    frontier_curve,
    information_at_disturbance,
    max_disturbance_d1,
    max_information,
    min_disturbance,
    theta_min,
)
from .infotheory import Ensemble, Povm, SymmetricPair, mutual_information
from .model import ProbeParams, SignalPair, interaction
from .optimizer import MeritConfig, davies_experiment, lambda_zero_study, maximize_merit
from .povm_search import optimize_povm
from .scenario import scenario_report

__version__ = "0.1.0"

__all__ = [
    "Ensemble", "MeritConfig", "Povm", "ProbeParams", "SignalPair", "SymmetricPair",
    "davies_experiment", "frontier_curve", "information_at_disturbance", "interaction",
    "lambda_zero_study", "max_disturbance_d1", "max_information", "maximize_merit",
    "min_disturbance", "mutual_information", "optimize_povm", "propagate",
    "scenario_report", "theta_min",
]
