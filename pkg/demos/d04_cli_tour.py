"""
A tour of the command line
==========================

The ``hypoly`` command prints exact coefficient tables, evaluates polynomials,
expands generating functions and runs identity suites.  Here we call it in
process so that the output appears inline.
"""

from hypoly.cli import main

# Coefficients in ascending powers, one CSV row per (l, nu).
main(["table", "--family", "laguerre", "--l", "2", "--nu", "0..2", "--format", "csv"])

# The same ladder rendered as LaTeX, ready to paste.
main(["table", "--family", "jacobi", "--a", "1/2", "--b", "1/2", "--l", "3", "--format", "latex"])

# Exact values at a rational point.
main(["eval", "--family", "hermite", "--l", "3", "--x", "-2/3", "--format", "csv"])

# Generating-function coefficients from the series and the closed form, side by side.
main(["genfun", "--family", "laguerre", "--l", "2", "--x", "0", "--order", "2"])

# A focused identity run; the exit code is 0 when nothing fails.
code = main(["verify", "--suite", "parity,sturm_liouville", "--family", "laguerre", "--l", "2"])
print("exit code:", code)
