"""Error classes for projline, see `projline.exceptions.all`."""
