"""
Report writers for experiment rows.

CSV goes through pandas with a fixed column order per record type; JSON is
written with sorted keys and a trailing newline so reruns are byte-identical.
"""

import json
import logging
from pathlib import Path

import pandas as pd

logger = logging.getLogger(__name__)

UC_COLUMNS = [
    "m",
    "k",
    "rho",
    "empirical_expectation",
    "bound",
    "statement_bound",
    "replicates",
    "seed",
    "holds",
]
SENSITIVITY_COLUMNS = ["m", "k", "trials", "max_difference", "bound", "violations", "seed", "holds"]
EXPRESSIVITY_COLUMNS = [
    "ell",
    "k",
    "epsilon",
    "method",
    "adversary",
    "seed",
    "pair_ipm",
    "adversary_ipm",
    "edge_prob_p1",
    "edge_prob_p2",
    "subset_gap",
    "required_gap",
    "holds",
]


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def rows_to_frame(rows, columns: list[str]) -> pd.DataFrame:
    """Builds a DataFrame from records with `to_dict`, in the given column order."""
    return pd.DataFrame([row.to_dict() for row in rows], columns=columns)


def write_report(rows, columns: list[str], out: str | Path | None) -> str:
    """
    Serializes rows as CSV (for a .csv path) or JSON (anything else, or stdout).

    Args:
        rows (list): Records exposing `to_dict()`.
        columns (list[str]): CSV column order.
        out (str | Path | None): Destination file; None returns the JSON text only.

    Returns:
        str: The serialized report.
    """
    if out is not None and Path(out).suffix.lower() == ".csv":
        text = rows_to_frame(rows, columns).to_csv(index=False, lineterminator="\n")
    else:
        text = render_json([row.to_dict() for row in rows])
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("wrote %d rows to %s", len(rows), out)
    return text
