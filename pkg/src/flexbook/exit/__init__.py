from .exit_handler import register, register_first, unregister, exit_handler, exit_code_for, EXIT_OK, EXIT_INPUT, EXIT_INTERNAL
