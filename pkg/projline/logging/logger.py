"""
Logging module for projline library code.

Library modules report through `log` with a level: DEBUG for the details of a failed check
(a relation that does not hold, a flow defect above tolerance), WARNING for suite failures.
Messages go to stderr through the console module, so stdout stays free for JSON output.

Settings used:
    SILENT: Nothing is printed.
    VERBOSE_LOGGING: DEBUG messages are printed and exceptions come with their traceback.
    LOG_TO_FILE: Every message is also appended to a file in LOGGING_DIR, named after
        LOG_FILE_FORMAT and the start time of the process.
"""
import os
import re
import atexit
import datetime
import threading
import traceback

from projline.logging import console
from projline.settings import SETTINGS

DEBUG = console.DEBUG
INFO = console.INFO
WARNING = console.WARNING
ERROR = console.ERROR
CRITICAL = console.CRITICAL

ANSI_ESCAPE = re.compile(r"\x1b\[[0-9;]*[A-Za-z]")

_file_lock = threading.Lock()
_log_file = {}


def current_log_file() -> str:
    """
    Path of this process's log file. The directory is created on first use.
    """
    if "path" not in _log_file:
        os.makedirs(SETTINGS["LOGGING_DIR"], exist_ok=True)
        now = datetime.datetime.now(datetime.timezone.utc)
        name = SETTINGS["LOG_FILE_FORMAT"].format(
            year=now.year,
            month=now.month,
            day=now.day,
            hours=now.hour,
            minutes=now.minute,
            seconds=now.second,
        )
        _log_file["path"] = os.path.join(SETTINGS["LOGGING_DIR"], name + ".log")
    return _log_file["path"]


def log_to_file(msg: str, end: str = "\n"):
    """Appends msg, stripped of colors, to the current log file."""
    data = (ANSI_ESCAPE.sub("", msg) + end).encode("utf-8")
    with _file_lock:
        if "fd" not in _log_file:
            _log_file["fd"] = open(current_log_file(), "ab")
            atexit.register(_log_file["fd"].close)
        _log_file["fd"].write(data)
        _log_file["fd"].flush()


def log_raw(msg: str, level: int = INFO, custom_color: str = None, end: str = "\n"):
    """
    Logs msg without a prefix, honouring SILENT, VERBOSE_LOGGING and LOG_TO_FILE.
    """
    if SETTINGS["LOG_TO_FILE"]:
        log_to_file(msg, end=end)
    if SETTINGS["SILENT"]:
        return
    if level == DEBUG and not SETTINGS["VERBOSE_LOGGING"]:
        return
    console.log_raw(msg, level=level, custom_color=custom_color, end=end)


def log(msg: str, prefix: str = "[ * ]", level: int = INFO, custom_color: str = None, end: str = "\n"):
    """
    Logs a message with a prefix.

    Args:
        msg (str): The message to log.
        prefix (str): Prepended to the message.
        level (int): One of DEBUG, INFO, WARNING, ERROR, CRITICAL.
        custom_color (str): A colorama color replacing the level's color.
        end (str): The log suffix.
    """
    log_raw(f"{prefix} {msg}", level=level, custom_color=custom_color, end=end)


def log_exception(e: Exception):
    """
    Logs an unexpected exception: its message, or its full traceback with VERBOSE_LOGGING.
    """
    if SETTINGS["VERBOSE_LOGGING"]:
        text = "".join(traceback.format_exception(type(e), e, e.__traceback__))
    else:
        text = f"{type(e).__name__}: {e}"
    log_raw(text, level=ERROR)
