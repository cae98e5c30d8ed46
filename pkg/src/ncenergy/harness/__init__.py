from .cases import CaseResult, compute_spectrum, hypothesis_params, run_case
from .report import emit_report, exit_code
from .sweep import DEFAULT_SWEEP, ConfigError, SweepConfig, planarity_survey, run_sweep

__all__ = [
    "DEFAULT_SWEEP",
    "CaseResult",
    "ConfigError",
    "SweepConfig",
    "compute_spectrum",
    "emit_report",
    "exit_code",
    "hypothesis_params",
    "planarity_survey",
    "run_case",
    "run_sweep",
]
