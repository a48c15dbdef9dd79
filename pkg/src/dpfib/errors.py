"""Exception hierarchy.

Everything raised on bad input derives from :class:`DpfibError`; the CLI maps
those to exit code 1.
"""


class DpfibError(ValueError):
    """Base class for invalid-input errors."""


class InvalidArgument(DpfibError):
    pass


class InvalidRank(DpfibError):
    pass


class MixedBundles(DpfibError):
    pass


class NotACurveClass(DpfibError):
    pass


class ProductCase(DpfibError):
    """b = 0: the total space is a product, not a Mori fibration."""


class NotRealizable(DpfibError):
    """Parameters violate a structural constraint.

    ``clause`` names the violated constraint.
    """

    def __init__(self, clause, message=None):
        self.clause = clause
        super().__init__(message or f"not realizable: {clause}")


class NotApplicable(DpfibError):
    pass


class InvalidSystem(DpfibError):
    pass


class Undetermined(DpfibError):
    """The question is not decided by the available results."""
