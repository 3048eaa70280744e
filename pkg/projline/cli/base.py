"""
Base class of the command classes.
"""
import sys

import colorama

from projline.exceptions.all import ProjlineError
from projline.logging import console


class BaseCommand:
    """
    Commands compute, write JSON or CSV to standard output and exit with

    - 0 on success,
    - 1 when a checked statement turns out false,
    - 2 on a library error.
    """

    @classmethod
    def setup(cls):
        # ANSI colors on Windows terminals
        colorama.just_fix_windows_console()

    @classmethod
    def exit_with(cls, func, *args, **kwargs):
        """Runs func and exits with the code it returns (None counts as 0)."""
        try:
            code = func(*args, **kwargs)
        except ProjlineError as e:
            console.log(f"Error: {e}", level=console.ERROR)
            sys.exit(2)
        sys.exit(code or 0)


def verdict(holds: bool) -> int:
    return 0 if holds else 1
