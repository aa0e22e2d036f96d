"""Exception types raised across the package."""


class PresentationSyntaxError(ValueError):
    """Malformed presentation text. ``position`` is a 0-based character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class UnknownGenerator(ValueError):
    def __init__(self, symbol, position=None):
        where = "" if position is None else f" (at position {position})"
        super().__init__(f"unknown generator {symbol!r}{where}")
        self.symbol = symbol
        self.position = position


class InvalidParams(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class OrderMismatch(RuntimeError):
    def __init__(self, found, expected):
        super().__init__(f"enumerated group has order {found}, expected {expected}")
        self.found = found
        self.expected = expected


class PartitionMismatch(ValueError):
    pass


class ArityMismatch(ValueError):
    pass


class NotCliqueJoin(ValueError):
    pass


class NotInCatalog(LookupError):
    pass
