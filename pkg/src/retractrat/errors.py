"""Exception types shared across the package."""


class UserInputError(ValueError):
    """Malformed or invalid input document/argument."""


class ResourceBoundError(RuntimeError):
    """A configured size bound was exceeded."""


class InternalCheckError(AssertionError):
    """A hard postcondition failed; indicates a bug, not a user error."""
