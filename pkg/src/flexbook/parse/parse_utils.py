import re

from ..errors import InputError

# {name} or {name:format}, names may be dotted
TAG_PATTERN = re.compile(r'{([\w.]+)(?::(.*?))?}')

def substitute_values(structure, tag_dict: dict, rec: bool = False):
    """
    replace the {tags} in every string of a JSON-like structure (keys included) with the values in the tag_dict
    """
    if isinstance(structure, str):
        return substitute_string(structure, tag_dict, rec)
    if isinstance(structure, list):
        return [substitute_values(v, tag_dict, rec) for v in structure]
    if isinstance(structure, dict):
        return {substitute_values(k, tag_dict, rec): substitute_values(v, tag_dict, rec) for k, v in structure.items()}
    return structure

def substitute_string(string, tag_dict: dict, rec: bool = False, _expanding: frozenset = frozenset()):
    """
    Replace the {tags} in the string with the values in the tag_dict.
    A string that is exactly one tag (no format spec) becomes the tag value itself, so numbers stay numbers.
    With rec=True, tag values that contain tags are substituted too; a tag that reaches itself is an InputError.
    Unknown tags are left in place.
    """
    if not isinstance(string, str):
        return string

    def resolve(name: str):
        if name in _expanding:
            raise InputError('tags', f'tag {{{name}}} refers to itself through {sorted(_expanding)}')
        value = tag_dict[name]
        if rec and isinstance(value, str):
            return substitute_string(value, tag_dict, rec, _expanding | {name})
        return value

    whole = TAG_PATTERN.fullmatch(string)
    if whole and whole.group(2) is None and whole.group(1) in tag_dict:
        return resolve(whole.group(1))

    def render(match: re.Match) -> str:
        name, fmt = match.groups()
        if tag_dict.get(name) is None:
            return match.group(0)
        value = resolve(name)
        try:
            return format(value, fmt or '')
        except (ValueError, TypeError) as err:
            raise InputError('tags', f'cannot format tag {{{name}}} = {value!r} with "{fmt}": {err}')

    return TAG_PATTERN.sub(render, string)

def flatten_dict(nested_dict: dict, sep: str = '.', parent_key: str = '') -> dict:
    """
    Flatten the tags block into a single level.
    Nested keys are reachable both with their full dotted path and with their own name.
    e.g. {'twist': {'turns': 2}} -> {'twist.turns': 2, 'turns': 2}
    Conflicting values for the same short name are collected in a list.
    """
    flat = {}

    def add(key, value):
        if key not in flat:
            flat[key] = value
        elif flat[key] != value:
            if not isinstance(flat[key], list):
                flat[key] = [flat[key]]
            if value not in flat[key]:
                flat[key].append(value)

    for key, value in nested_dict.items():
        path = f'{parent_key}{sep}{key}' if parent_key else key
        if not isinstance(value, dict):
            add(path, value)
            continue
        for pair in list(flatten_dict(value, sep, path).items()) + list(flatten_dict(value, sep).items()):
            add(*pair)

    return flat

def parse_tag_assignments(assignments: list[str]) -> dict:
    """
    'name=value' strings from the command line to a tag dictionary; integer values are converted.
    """
    tags = {}
    for assignment in assignments or []:
        key, eq, value = assignment.partition('=')
        if not eq:
            raise ValueError(f'tag assignment "{assignment}" is not of the form name=value')
        value = value.strip()
        tags[key.strip()] = int(value) if re.fullmatch(r'[+-]?\d+', value) else value
    return tags
