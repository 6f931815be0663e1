class DomainError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ConstructionError(ValueError):
    pass


class UnknownFamilyError(ValueError):
    def __init__(self, name: str, known=()):
        message = f'unknown family or graph name "{name}"'
        if known:
            message += f'. Known: {", ".join(known)}'
        super(UnknownFamilyError, self).__init__(message)
        self.name = name


class ConfigurationError(ValueError):
    pass
