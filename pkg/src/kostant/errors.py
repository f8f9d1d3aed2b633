"""Exception types shared across the package."""


class CapExceededError(RuntimeError):
    """A configured resource cap (group order, module dimension, nilradical size) was exceeded."""


class InvariantError(RuntimeError):
    """An internal consistency check failed (e.g. the differential does not square to zero)."""


class DecompositionError(Exception):
    """A character is not a nonnegative integral sum of Levi simple characters.

    This is a meaningful verification signal, not a usage error: it falsifies
    complete reducibility of whatever produced the character.
    """
