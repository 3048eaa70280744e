"""
Named bundles of verification checks, run on a worker pool.

Example:

```py
from projline.suites import run_suite

report = run_suite("flows")
report.all_passed()  # True
```
"""
from projline.suites.registry import SUITES
from projline.suites.runner import CheckResult, SuiteReport, get_suite, run_checks, run_suite
