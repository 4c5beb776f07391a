"""Exception hierarchy. Every failure mode the library can report has its own type."""


class JordanKitError(Exception):
    pass


class CapExceededError(JordanKitError):
    """A computation would pass a configured size or search cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds cap {cap}")
        self.what = what
        self.cap = cap


class InvalidGroupError(JordanKitError, ValueError):
    """A Cayley table or element list does not satisfy the group axioms."""


class DegreeMismatchError(JordanKitError, ValueError):
    pass


class NotInvertibleError(JordanKitError, ValueError):
    pass


class NotSubgroupError(JordanKitError, ValueError):
    pass


class NotNormalError(JordanKitError, ValueError):
    pass


class NotAbelianError(JordanKitError, ValueError):
    pass


class ActionNotHomomorphismError(JordanKitError, ValueError):
    pass


class ActionNotAutomorphismError(JordanKitError, ValueError):
    pass


class CenterNotTrivialError(JordanKitError, ValueError):
    pass


class NotTabulatedError(JordanKitError, LookupError):
    """The requested value is not printed in the source tables."""


class NotApplicableError(JordanKitError, ValueError):
    pass


class SpecError(JordanKitError, ValueError):
    """A group spec or file failed validation; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
