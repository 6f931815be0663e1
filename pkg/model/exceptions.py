class GraphConstructionError(ValueError):
    pass


class PlanError(ValueError):
    pass


class InvalidEmbeddingError(ValueError):
    pass


class GraphParseError(ValueError):
    def __init__(self, message: str, offset: int = 0):
        super(GraphParseError, self).__init__(f'{message} (at byte {offset})')
        self.offset = offset
