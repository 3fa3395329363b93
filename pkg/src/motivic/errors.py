class CertificateError(Exception):
    """A mathematical certificate failed; ``witness`` carries the offending value."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(Exception):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} field elements but the budget is {budget}"
            " (raise it with MOTIVIC_BUDGET)"
        )
        self.required = required
        self.budget = budget
