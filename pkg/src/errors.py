class OdlError(Exception):
    pass


class ConfigError(OdlError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class DomainError(OdlError):
    pass


class ConsistencyError(OdlError):
    pass
