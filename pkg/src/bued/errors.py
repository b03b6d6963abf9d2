"""Exception hierarchy shared by every stage of the engine."""


class BuedError(Exception):
    pass


class ParseError(BuedError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class IndexSchemeError(BuedError):
    """Two non-free indices of different schemes met in one combination."""


class InstantiationError(BuedError):
    pass


class EvaluationError(BuedError):
    pass


class DepthExceeded(BuedError):
    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"inline solver exceeded {bound} resolution steps")


class ScanError(BuedError):
    pass


class BudgetExceeded(BuedError):
    def __init__(self, message, stats=None):
        self.stats = dict(stats or {})
        super().__init__(message)
