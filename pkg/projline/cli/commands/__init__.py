"""
Subcommands of the projline command line tool, one module per command.
"""
