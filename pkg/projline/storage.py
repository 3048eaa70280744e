"""
Defines and provides the storage directory for projline package data.
"""

from os import path


def get_projline_storage():
    """
    Returns the absolute path of the projline package directory.

    The bundled tests and worked examples are resolved relative to this path.

    Returns:
        str: The absolute path to the projline storage directory.
    """
    return path.abspath(path.dirname(__file__))


projline_storage = get_projline_storage()
