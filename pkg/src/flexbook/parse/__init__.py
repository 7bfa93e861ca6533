from .parse_utils import substitute_values, substitute_string, flatten_dict, parse_tag_assignments
