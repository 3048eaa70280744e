"""
Default settings for projline.

Override any of these in a module named by the environment variable
`PROJLINE_SETTINGS_MODULE`, or through the individual environment overrides
listed in `projline.settings.settings`.
"""
import os

# Hard cap on interval bisections performed while refining one exact comparison.
MAX_BISECTIONS = 10000

# Significant digits for decimal renderings (CSV samples, human summaries).
DIGITS = 12

# Tolerance used by the flow module when comparing float matrices.
FLOW_TOLERANCE = 1e-10

# Exponent bound |m|, |n| for the multiplicative relation search s_f^m s_g^n = 1.
UNIT_SEARCH_BOUND = 64

# Seed for randomized checks when none is given.
DEFAULT_SEED = 0

# Worker threads used by the verification suites.
WORKERS = 4

# Silence all console logs.
SILENT = False

# Log full tracebacks instead of one-line exception summaries.
VERBOSE_LOGGING = False

# Also write logs to files in LOGGING_DIR.
LOG_TO_FILE = False

LOGGING_DIR = os.path.join(os.path.expanduser("~"), ".projline", "logs")

LOG_FILE_FORMAT = "{year}-{month}-{day}_{hours}-{minutes}-{seconds}"
