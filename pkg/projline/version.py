"""Version module for projline"""
import sys

version_num = (0, 3, 0)
version = "%d.%d.%d" % version_num
version_name = "projline"

pyversion = sys.version.split(" ")[0]
cli_version = "{}/{} {}/{}".format(version_name, version, "Python",
                                   pyversion)

__version__ = version
