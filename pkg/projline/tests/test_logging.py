"""
Test cases for settings overrides and logging.
"""
import io
import os
import tempfile
import unittest

from contextlib import redirect_stderr
from unittest import mock

from projline.exceptions.all import SettingsError
from projline.logging import console, logger
from projline.settings import SETTINGS
from projline.settings.settings import env_overrides


class TestEnvOverrides(unittest.TestCase):
    """
    Settings read straight from the environment.
    """

    def test_overrides(self):
        overrides = env_overrides({"PROJLINE_MAX_BISECTIONS": "50", "PROJLINE_SILENT": "yes", "PROJLINE_VERBOSE": "0"})
        self.assertEqual(overrides, {"MAX_BISECTIONS": 50, "SILENT": True, "VERBOSE_LOGGING": False})
        self.assertEqual(env_overrides({}), {})

    def test_bad_bisection_cap(self):
        for value in ("0", "-3", "many"):
            with self.assertRaises(SettingsError):
                env_overrides({"PROJLINE_MAX_BISECTIONS": value})


class TestLogger(unittest.TestCase):
    """
    Logger levels, silence and file output.
    """

    def capture(self, func, *args, **kwargs) -> str:
        stream = io.StringIO()
        with redirect_stderr(stream):
            func(*args, **kwargs)
        return stream.getvalue()

    def test_debug_needs_verbose(self):
        with mock.patch.dict(SETTINGS, {"SILENT": False, "VERBOSE_LOGGING": False, "LOG_TO_FILE": False}):
            self.assertEqual(self.capture(logger.log, "hidden", level=logger.DEBUG), "")
            self.assertIn("[ * ] shown", self.capture(logger.log, "shown", level=logger.WARNING))
        with mock.patch.dict(SETTINGS, {"SILENT": False, "VERBOSE_LOGGING": True, "LOG_TO_FILE": False}):
            self.assertIn("hidden", self.capture(logger.log, "hidden", level=logger.DEBUG))

    def test_silent(self):
        with mock.patch.dict(SETTINGS, {"SILENT": True, "LOG_TO_FILE": False}):
            self.assertEqual(self.capture(logger.log, "nothing", level=logger.ERROR), "")

    def test_log_exception(self):
        with mock.patch.dict(SETTINGS, {"SILENT": False, "VERBOSE_LOGGING": False, "LOG_TO_FILE": False}):
            out = self.capture(logger.log_exception, ValueError("bad input"))
        self.assertIn("ValueError: bad input", out)

    def test_log_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            patched = {"SILENT": True, "LOG_TO_FILE": True, "LOGGING_DIR": tmp}
            with mock.patch.dict(SETTINGS, patched), mock.patch.dict(logger._log_file, clear=True):
                logger.log("kept", custom_color=console.Fore.GREEN)
                logger._log_file["fd"].close()
                with open(logger._log_file["path"], encoding="utf-8") as fd:
                    self.assertEqual(fd.read(), "[ * ] kept\n")
                self.assertEqual(os.path.dirname(logger._log_file["path"]), tmp)


class TestConsole(unittest.TestCase):
    """
    Console messages go to stderr whatever the settings.
    """

    def test_plain(self):
        stream = io.StringIO()
        with redirect_stderr(stream), mock.patch.dict(SETTINGS, {"SILENT": True}):
            console.log("done", use_colors=False)
        self.assertEqual(stream.getvalue(), "[ * ] done\n")


if __name__ == "__main__":
    unittest.main()
