"""Exception hierarchy shared by all modules."""


class BVError(Exception):
    """Base class for library errors."""


class AddressError(BVError):
    pass


class CaretError(BVError):
    pass


class ArityError(BVError):
    pass


class RangeError(BVError, ValueError):
    pass


class StrandError(BVError):
    pass


class NotACable(BVError):
    pass


class ValidationError(BVError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class MoveError(BVError):
    pass


class NotAnElement(BVError):
    pass


class DepthError(BVError):
    pass


class SubgroupError(BVError):
    pass


class ParseError(BVError, ValueError):
    def __init__(self, message: str, text: str = "", offset: int = 0):
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.column = col
