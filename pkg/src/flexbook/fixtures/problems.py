"""
The problem files shipped with the package. Each carries an "expected" block checked by the selftest.
"""
import glob
import os

from ..config import Options
from ..errors import InputError

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

def bundled_problem_paths() -> list[str]:
    return sorted(glob.glob(os.path.join(DATA_DIR, '*.json')))

def bundled_problem_names() -> list[str]:
    return [os.path.splitext(os.path.basename(p))[0] for p in bundled_problem_paths()]

def bundled_problem_path(name: str) -> str:
    path = os.path.join(DATA_DIR, name if name.endswith('.json') else f'{name}.json')
    if not os.path.isfile(path):
        raise InputError(detail = f'no bundled problem named {name!r}, available: {bundled_problem_names()}')
    return path

def load_bundled(name: str, **tags) -> Options:
    """The bundled problem as Options, with tags substituted (keyword arguments override the file's tags)."""
    return Options.load(bundled_problem_path(name), **tags)
