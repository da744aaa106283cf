"""Python access to the rinf core: twisted conjugacy computations."""

import json

from ._rinf import (
    BudgetExceeded,
    InputError,
    class_of,
    is_R_infinite,
    reidemeister_number,
    unit_disk_root_count,
    witness_poly,
)
from ._rinf import run_cli as _run_cli


def run(*args):
    """Run a CLI command in-process. Returns (exit_code, document) where the
    document is the parsed JSON output (or the help text)."""
    code, text = _run_cli([str(a) for a in args])
    try:
        return code, json.loads(text)
    except json.JSONDecodeError:
        return code, text


__all__ = [
    "BudgetExceeded",
    "InputError",
    "class_of",
    "is_R_infinite",
    "reidemeister_number",
    "run",
    "unit_disk_root_count",
    "witness_poly",
]
