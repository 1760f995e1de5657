"""Error classes shared across the package.

The CLI maps these onto its exit codes, so everything user-triggerable
should raise one of the classes below rather than a bare ValueError.
"""


class KneserlabError(Exception):
    """Base class for all package errors."""


class UsageError(KneserlabError):
    """Invalid arguments at an API or CLI boundary (exit code 2)."""


class DegenerateFormError(KneserlabError):
    """Perp requested for a form whose polar form has a nonzero radical."""

    def __init__(self, radical_dim):
        self.radical_dim = radical_dim
        super().__init__(
            "polar form is degenerate (radical dimension %d)" % radical_dim
        )


class FixtureIntegrityError(KneserlabError):
    """A counterexample fixture failed an assertion it is guaranteed to pass.

    This always signals a bug in the geometry kernel (or a corrupted
    fixture), never a mathematical discovery. Exit code 4.
    """


class CrossValidationError(KneserlabError):
    """Geometric apartment and coset-level graph disagree (exit code 5)."""

    def __init__(self, detail):
        self.detail = detail
        super().__init__(str(detail))


class SearchBudgetExceeded(KneserlabError):
    """Exact search ran out of its node budget; only bounds are available."""

    def __init__(self, lower, upper):
        self.lower = lower
        self.upper = upper
        super().__init__("search budget exceeded: bounds [%d, %d]" % (lower, upper))
