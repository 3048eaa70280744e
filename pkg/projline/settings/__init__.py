from projline.settings.settings import SETTINGS

__all__ = ["SETTINGS"]
