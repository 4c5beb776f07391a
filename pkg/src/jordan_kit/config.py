"""Size caps. Exceeding any of them raises CapExceededError, never truncates."""
import os

DEFAULT_CLOSURE_CAP = 10_000
VALIDATION_CAP = 512
LATTICE_CAP = 1024
NORMAL_LATTICE_CAP = 10_000
AUTOMORPHISM_CAP = 128
SEARCH_BUDGET = 2_000_000
SAMPLED_TRIPLES = 100_000
DEFAULT_SEED = 0


def closure_cap() -> int:
    """Closure cap, overridable through the JORDAN_KIT_CAP environment variable."""
    raw = os.environ.get("JORDAN_KIT_CAP")
    if raw is None:
        return DEFAULT_CLOSURE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"JORDAN_KIT_CAP must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("JORDAN_KIT_CAP must be positive")
    return value
