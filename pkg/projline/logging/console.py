"""
Console messages for the command line.

Standard output carries JSON and CSV, so everything printed here goes to stderr and the
level only picks the color. Unlike `projline.logging.logger`, these functions ignore the
SILENT and VERBOSE_LOGGING settings: they are for messages the user asked for, such as a
suite's result table or the reason a command failed.

Example:
    log("Unknown preset 'x'.", level=ERROR)
    log_raw(report.table())
"""
import sys

from colorama import Fore, Style

CRITICAL = 50
ERROR = 40
WARNING = 30
INFO = 20
DEBUG = 10

LEVEL_COLORS = {
    CRITICAL: Fore.RED,
    ERROR: Fore.RED,
    WARNING: Fore.YELLOW,
    DEBUG: Fore.CYAN,
}


def log_raw(msg: str, level: int = INFO, use_colors: bool = True, custom_color: str = None, end: str = "\n"):
    """
    Prints msg to stderr as it is.

    Args:
        msg (str): The message.
        level (int): Picks the color when no custom_color is given.
        use_colors (bool): Whether to color the message at all.
        custom_color (str): A colorama color, e.g. `Fore.GREEN`.
        end (str): The suffix, a newline by default.
    """
    if not use_colors:
        print(msg, file=sys.stderr, end=end)
        return
    color = custom_color or LEVEL_COLORS.get(level, Style.RESET_ALL)
    print(f"{color}{msg}{Style.RESET_ALL}", file=sys.stderr, end=end)


def log(msg: str, prefix: str = "[ * ]", level: int = INFO, use_colors: bool = True, custom_color: str = None, end: str = "\n"):
    """Prints msg to stderr after a prefix."""
    log_raw(f"{prefix} {msg}", level=level, use_colors=use_colors, custom_color=custom_color, end=end)
