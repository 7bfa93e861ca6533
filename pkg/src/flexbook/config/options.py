from ..parse import flatten_dict, substitute_values
from ..errors import InputError

import json
import os

TAGS_KEY = 'tags'

class Options(dict):
    """
    A problem file as nested dicts. Sub-objects are Options too, also inside lists.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        for key, value in self.items():
            self[key] = _wrap(value)

    def __getattr__(self, item):
        """
        options.turns finds the key turns at any depth. Several keys with different values are ambiguous.
        """
        values = []
        for key_path in self.find_keys(item, get_all = True):
            current = self
            for key in key_path:
                current = current[key]
            if current not in values:
                values.append(current)

        if len(values) == 1:
            return values[0]
        elif len(values) > 1:
            raise ValueError(f"'{item}' is ambiguous, found the values {values}")
        raise AttributeError(f"'Options' object has no attribute '{item}'")

    def find_keys(self, key: str, get_all = False) -> list:
        """
        The key paths (lists of keys) that end with key, searching nested objects but not lists.
        e.g. {'page': {'q': 1}}, 'q' -> ['page', 'q']
        Without get_all a single path is returned ([] when absent); more than one is a ValueError.
        """
        def search(node, path):
            found = []
            for k, v in node.items():
                if k == key:
                    found.append(path + [k])
                elif isinstance(v, dict):
                    found.extend(search(v, path + [k]))
            return found

        paths = search(self, [])
        if get_all:
            return paths
        if len(paths) > 1:
            raise ValueError(f"several keys '{key}' found: {paths}")
        return paths[0] if paths else []

    @classmethod
    def load(cls, path: str, **kwargs) -> 'Options':
        """
        Load a problem file, substituting the {tags}.
        Keyword arguments override the values in the file's tags block.
        """
        name = os.path.basename(path)
        _, ext = os.path.splitext(name)
        if ext.lower() != '.json':
            raise InputError(detail = f"unsupported file format: {ext or name}. Problem files should be in JSON format.")

        try:
            with open(path, 'r', encoding = 'utf-8') as file:
                document = json.load(file)
        except UnicodeDecodeError as err:
            raise InputError(detail = f'{name} is not UTF-8 text: byte {err.object[err.start]:#04x} at offset {err.start}')
        except json.JSONDecodeError as err:
            raise InputError(detail = f'{name} is not valid JSON: {err.msg} (line {err.lineno}, column {err.colno})')
        except OSError as err:
            raise InputError(detail = f'cannot read {path}: {err.strerror}')

        if not isinstance(document, dict):
            raise InputError(detail = 'the top level of a problem file must be an object')
        return cls(document).parse(**kwargs)

    def tag_values(self, **overrides) -> dict:
        """
        The flattened tags block with overrides applied, tags referring to other tags already resolved.
        Nested tags get dotted names, e.g. {twist.turns}.
        """
        tags, _ = self.get(TAGS_KEY, {}, ignore_case = True, get_key = True)
        if not isinstance(tags, dict):
            raise InputError(TAGS_KEY, 'expected an object')
        tags = flatten_dict(dict(tags))
        tags.update(overrides)
        return substitute_values(tags, tags, rec=True)

    def parse(self, **kwargs) -> 'Options':
        """Substitute the tags everywhere. The tags block itself is replaced by the resolved tags."""
        tags = self.tag_values(**kwargs)
        _, tag_key = self.get(TAGS_KEY, None, ignore_case = True, get_key = True)

        parsed = {key: tags if key == tag_key else substitute_values(value, tags, rec=True)
                  for key, value in self.items()}
        return Options(parsed)

    def get(self, key: str, default = None, ignore_case = False, get_key = False):
        """
        The value under key. With ignore_case, 'TAGS' and 'tags' are the same key.
        With get_key, also returns the key as it appears in the file (None when absent).
        """
        found, value = None, default
        for k, v in self.items():
            same = k.lower() == key.lower() if ignore_case and isinstance(k, str) else k == key
            if same:
                found, value = k, v
                break

        return (value, found) if get_key else value

    def to_dict(self) -> dict:
        """Plain dicts and lists all the way down."""
        def plain(value):
            if isinstance(value, dict):
                return {k: plain(v) for k, v in value.items()}
            elif isinstance(value, list):
                return [plain(v) for v in value]
            return value
        return plain(self)

def _wrap(value):
    if isinstance(value, Options):
        return value
    if isinstance(value, dict):
        return Options(value)
    if isinstance(value, list):
        return [_wrap(v) for v in value]
    return value
