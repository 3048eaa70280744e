"""
Named verification suites.
"""
from projline.suites import core, flows, lodha_moore

SUITES = {
    "paper-core": core.checks,
    "lodha-moore": lodha_moore.checks,
    "flows": flows.checks,
}
