from .flexbook_errors import FlexbookError, StructuralError, InputError, InternalInvariantError
