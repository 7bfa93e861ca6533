class FlexbookError(Exception):
    """Base class of every error raised by flexbook."""

class StructuralError(FlexbookError, ValueError):

    message = """
    Structural error: {detail}
    The inputs do not have the shape or the properties this operation needs. This is not a failure of the mathematics.
    """

    def __init__(self, detail = None):
        if detail is None:
            detail = 'incompatible inputs (sorry, I cannot figure out which ones)'

        self.detail = detail
        message = self.message.format(detail=detail)
        super().__init__(message)

class InputError(FlexbookError, ValueError):

    message = """
    Invalid problem description at '{location}': {detail}
    """

    def __init__(self, location: str = '<root>', detail = None):
        if detail is None:
            detail = 'malformed value'

        self.location = location
        self.detail = detail
        message = self.message.format(location=location, detail=detail)
        super().__init__(message)

    def at(self, prefix: str) -> 'InputError':
        """
        Returns the same error with its location nested under prefix.
        """
        location = prefix if self.location == '<root>' else f'{prefix}.{self.location}'
        return InputError(location, self.detail)

class InternalInvariantError(FlexbookError, RuntimeError):

    message = """
    Internal invariant violated: {detail}
    Witness: {witness}
    This indicates a bug: an identity that must hold for every valid input has failed.
    """

    def __init__(self, detail: str, witness = None):
        self.detail = detail
        self.witness = witness
        message = self.message.format(detail=detail, witness=witness)
        super().__init__(message)
