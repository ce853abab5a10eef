"""Error taxonomy shared by the library and the CLI.

Exit-code mapping: ok = 0, validation_error = 1, input_error = 2,
budget_exceeded = 3.
"""


class UnileibError(Exception):
    status = "validation_error"
    exit_code = 1


class ValidationError(UnileibError):
    """A mathematically invalid object or a failed precondition."""


class FieldMismatchError(ValidationError):
    """Two operands live over different fields (or field kinds)."""


class GridMismatchError(ValidationError):
    """Two polynomials live on different variable grids."""


class InputError(UnileibError):
    """Malformed file, unknown name, or bad CLI argument."""

    status = "input_error"
    exit_code = 2


class BudgetExceededError(UnileibError):
    """An exhaustive enumeration would exceed the candidate budget."""

    status = "budget_exceeded"
    exit_code = 3

    def __init__(self, needed, budget):
        super().__init__(
            f"enumeration needs {needed} candidates, budget is {budget} "
            f"(set UAL_BUDGET to raise it)"
        )
        self.needed = needed
        self.budget = budget
