import atexit
import logging

from ..errors import InputError, StructuralError, InternalInvariantError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

class ExitHandler:
    """Cleanup callbacks run once at interpreter exit, in list order (e.g. removing half-written reports)."""

    def __init__(self):
        self.callbacks: list[tuple] = []

    def add(self, func, *args, first: bool = False, **kwargs):
        self.callbacks.insert(0 if first else len(self.callbacks), (func, args, kwargs))

    def remove(self, func):
        self.callbacks = [c for c in self.callbacks if c[0] is not func]

    def run(self):
        # one failing cleanup does not stop the others
        callbacks, self.callbacks = self.callbacks, []
        for func, args, kwargs in callbacks:
            try:
                func(*args, **kwargs)
            except Exception as err:
                logger.warning(f'cleanup {getattr(func, "__name__", func)} failed: {err}')

exit_handler = ExitHandler()
atexit.register(exit_handler.run)

def register_first(func, *args, **kwargs):
    exit_handler.add(func, *args, first = True, **kwargs)

def register(func, *args, **kwargs):
    exit_handler.add(func, *args, **kwargs)

def unregister(func):
    exit_handler.remove(func)

def exit_code_for(error: BaseException | None) -> int:
    """
    0 on success, 2 for malformed or invalid input, 3 for a broken internal invariant or anything unexpected.
    """
    if error is None:
        return EXIT_OK
    if isinstance(error, InternalInvariantError):
        return EXIT_INTERNAL
    if isinstance(error, (InputError, StructuralError)):
        return EXIT_INPUT
    return EXIT_INTERNAL
