"""
Module containing runtests command class.
"""
import os
import subprocess
import sys

from projline.cli.base import BaseCommand
from projline.storage import projline_storage


class RuntestsCommand(BaseCommand):
    # runtests command

    @classmethod
    def main(cls):
        cls.setup()
        cls.exit_with(cls.runtests)

    @classmethod
    def runtests(cls):
        """
        Runs the test suite with the package parent as top level directory, so test
        modules import as `projline.tests.*` and their package imports resolve.
        """
        tests_dir = os.path.join(projline_storage, "tests")
        top_dir = os.path.dirname(projline_storage)
        return subprocess.call([
            sys.executable, "-m", "unittest", "discover", "-s",
            tests_dir, "-p", "test_*.py", "-t", top_dir,
        ])
