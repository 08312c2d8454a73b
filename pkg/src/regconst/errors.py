"""Shared exception types."""


class InputError(ValueError):
    """Invalid user-supplied input: descriptors, selectors, files, parameters."""


class FactorizationError(ArithmeticError):
    """An integer resisted factorization within the trial-division bound."""


class PhiSearchExhausted(RuntimeError):
    """No injective equivariant map found within the search budget."""

    def __init__(self, tried: int, budget: int):
        super().__init__(
            f"no injective equivariant map found after trying {tried} "
            f"candidate combinations (budget {budget})"
        )
        self.tried = tried
        self.budget = budget
