"""
Provides access to projline settings.

Defaults live in `projline.etc.settings`. A user module named by the environment
variable `PROJLINE_SETTINGS_MODULE` may override any of them, and a few settings
can be overridden directly from the environment:

- `PROJLINE_MAX_BISECTIONS`: refinement cap (positive integer).
- `PROJLINE_SILENT`: "1"/"true" silences console logs.
- `PROJLINE_VERBOSE`: "1"/"true" logs full tracebacks.
"""
import os
import importlib

from projline.exceptions.all import SettingsError

SETTINGS_MODULE = os.environ.get("PROJLINE_SETTINGS_MODULE")

TRUTHY = {"1", "true", "yes", "on"}


class Settings(dict):
    """
    A class for managing projline settings.

    This class extends the built-in `dict` to store settings in a dictionary-like format.
    It also provides a custom representation of the settings for debugging and logging.
    """
    source = None

    def __repr__(self):
        return (
           "<" + f"{self.__class__.__name__} "
            f"source={repr(self.source)}".replace('<', "[").replace('>', "]") + ">"
        )


def settings_to_dict(settings_module: str) -> Settings:
    """Converts a settings module to a dictionary.

    Args:
            settings_module (str): The dotted path to the settings module.

    Returns:
            Settings: Settings object holding every uppercase name of the module.

    Raises:
            ImportError: If the settings module cannot be imported.
    """
    settings_mod = importlib.import_module(settings_module)
    settings = Settings({})
    settings.source = settings_mod

    for var in dir(settings_mod):
        if var.isupper():
            settings[var] = getattr(settings_mod, var)

    return settings


def env_overrides(environ=None) -> dict:
    """
    Reads the settings that may be overridden straight from the environment.

    Args:
        environ (dict): Mapping to read from, defaults to `os.environ`.

    Returns:
        dict: The overridden settings only.

    Raises:
        SettingsError: If `PROJLINE_MAX_BISECTIONS` is not a positive integer.
    """
    environ = os.environ if environ is None else environ
    overrides = {}
    cap = environ.get("PROJLINE_MAX_BISECTIONS")

    if cap is not None:
        try:
            cap = int(cap)
        except ValueError:
            cap = 0
        if cap <= 0:
            raise SettingsError(
                f"PROJLINE_MAX_BISECTIONS must be a positive integer, got {environ['PROJLINE_MAX_BISECTIONS']!r}."
            )
        overrides["MAX_BISECTIONS"] = cap

    if "PROJLINE_SILENT" in environ:
        overrides["SILENT"] = environ["PROJLINE_SILENT"].strip().lower() in TRUTHY

    if "PROJLINE_VERBOSE" in environ:
        overrides["VERBOSE_LOGGING"] = environ["PROJLINE_VERBOSE"].strip().lower() in TRUTHY
    return overrides


def get_combined_settings() -> Settings:
    """Combines default, user and environment settings into a single dictionary.

    Returns:
            Settings: Settings object derived from a dictionary containing the settings.

    Raises:
            SettingsError: If the user settings module cannot be loaded.
    """
    settings = settings_to_dict("projline.etc.settings")

    if SETTINGS_MODULE:
        try:
            user_settings = settings_to_dict(SETTINGS_MODULE)
        except Exception as e:
            raise SettingsError(
                f"Error loading projline settings module, ensure environment variable PROJLINE_SETTINGS_MODULE is set correctly: {e}."
            ) from e
        settings.update(user_settings)
        settings.source = user_settings.source

    settings.update(env_overrides())
    return settings


# Read once; never mutated afterwards.
SETTINGS: Settings = get_combined_settings()
