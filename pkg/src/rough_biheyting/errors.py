"""Exception hierarchy shared by every module of the package."""


class RoughSetError(Exception):
    """Base class for all errors raised by rough_biheyting."""


class SpaceError(RoughSetError, ValueError):
    """The universe/partition description does not define a valid space."""


class DuplicateAtom(SpaceError):
    pass


class NotAPartition(SpaceError):
    pass


class EmptyUniverse(SpaceError):
    pass


class EmptyClass(SpaceError):
    pass


class InvalidAtomName(SpaceError):
    pass


class UnknownAtom(RoughSetError, ValueError):
    def __init__(self, name):
        super().__init__(f"unknown atom {name!r}")
        self.name = name


class SpaceMismatch(RoughSetError, ValueError):
    pass


class SizeLimitExceeded(RoughSetError):
    def __init__(self, size, cap):
        super().__init__(f"|T| = {size} exceeds the enumeration cap {cap}")
        self.size = size
        self.cap = cap


class NoExtremum(RoughSetError):
    pass


class FormulaSyntaxError(RoughSetError, ValueError):
    """Raised by the formula parser; ``position`` is a 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
