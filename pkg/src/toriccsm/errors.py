"""Exception types shared across the package.

The CLI maps these onto exit codes: validation problems (bad fans, bad
files, non-complete fans) exit with 2, internal contract violations with 3.
"""


class ValidationError(ValueError):
    """Input data violates a documented precondition (bad fan, bad file)."""


class InternalError(RuntimeError):
    """An internal invariant failed; indicates a bug, not a bad input."""
