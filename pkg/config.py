"""Configuration settings for the cubic edge-coloring toolkit."""

import os
from dotenv import load_dotenv

load_dotenv()

TOOLKIT_VERSION = "1.0.0"

# Worker pool (0 means one worker per CPU)
CUBIC_JOBS = int(os.getenv("CUBIC_JOBS", "0"))

# Enumeration caps (vertex counts)
PERFECT_MATCHING_CAP = int(os.getenv("PERFECT_MATCHING_CAP", "16"))
MAXIMAL_MATCHING_CAP = int(os.getenv("MAXIMAL_MATCHING_CAP", "12"))
COMPLEMENT_CAP = int(os.getenv("COMPLEMENT_CAP", "12"))
CONJECTURE_CAP = int(os.getenv("CONJECTURE_CAP", "10"))
EXHAUSTIVE_CAP = int(os.getenv("EXHAUSTIVE_CAP", "12"))
EXTREMAL_CAP = int(os.getenv("EXTREMAL_CAP", "12"))

# Extension loops abort after EXTENSION_CAP_FACTOR * m iterations
EXTENSION_CAP_FACTOR = int(os.getenv("EXTENSION_CAP_FACTOR", "10"))

# Oldest action log entries are dropped past this many
ACTION_LOG_LIMIT = int(os.getenv("ACTION_LOG_LIMIT", "10000"))


def default_jobs() -> int:
    """Worker count used when no --jobs flag is given."""
    return CUBIC_JOBS if CUBIC_JOBS > 0 else (os.cpu_count() or 1)
