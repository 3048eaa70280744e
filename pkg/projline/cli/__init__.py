"""
Command line interface: input readers, the command base class and one module per
subcommand under `projline.cli.commands`.
"""
