"""
This provides the projline banner shown by the bare `projline` command.
"""

projline_art_small = r"""
      .-~~~-.
    /    ∞    \
   |  -1 . 1   |   RP¹
    \    0    /
      `-...-'
"""
