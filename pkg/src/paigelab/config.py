"""Run-wide defaults: seeds and size caps."""

import os

DEFAULT_SEED = 1729
DEFAULT_CLOSURE_CAP = 10**6
# largest group E(p) the brute-force lattice oracle will enumerate (p = 13)
DEFAULT_LATTICE_BUDGET = 3 * 13**2
# exhaustive Moufang checks tabulate the loop; keep the table modest
MAX_TABLE = 4096


def closure_cap() -> int:
    """Closure cap, overridable through the ZORN_BUDGET environment variable."""
    value = os.environ.get("ZORN_BUDGET")
    return int(value) if value else DEFAULT_CLOSURE_CAP
