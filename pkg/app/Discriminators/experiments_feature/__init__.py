from .experiments import (
    ADVERSARIES,
    ExpressivityReport,
    SensitivityReport,
    UcExperimentRow,
    expressivity_experiment,
    sensitivity_experiment,
    statement_bound,
    sup_deviation,
    uc_bound,
    uc_experiment,
)
from .reports import (
    EXPRESSIVITY_COLUMNS,
    SENSITIVITY_COLUMNS,
    UC_COLUMNS,
    render_json,
    rows_to_frame,
    write_report,
)

__all__ = [
    "ADVERSARIES",
    "EXPRESSIVITY_COLUMNS",
    "ExpressivityReport",
    "SENSITIVITY_COLUMNS",
    "SensitivityReport",
    "UC_COLUMNS",
    "UcExperimentRow",
    "expressivity_experiment",
    "render_json",
    "rows_to_frame",
    "sensitivity_experiment",
    "statement_bound",
    "sup_deviation",
    "uc_bound",
    "uc_experiment",
    "write_report",
]
