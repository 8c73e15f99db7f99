class AxicoverError(Exception):
    """Base class for every error raised by this package."""


class InvalidMetric(AxicoverError, ValueError):
    pass


class InvalidAlpha(AxicoverError, ValueError):
    pass


class NonUniqueBisector(AxicoverError, ValueError):
    pass


class EmptyInput(AxicoverError, ValueError):
    pass


class NonMonotoneInsertion(AxicoverError, ValueError):
    pass


class EmptyStructure(AxicoverError, ValueError):
    pass


class TooLarge(AxicoverError, ValueError):
    pass


class ParseError(AxicoverError, ValueError):
    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)
        self.line = line
        self.field = field


class NonFiniteCoordinate(ParseError):
    pass
