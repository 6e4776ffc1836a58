from .definition import AlgebraDefinition, bundled_fixture, list_fixtures, load_definition
from .parser import parse_expr, parse_poly

__all__ = [
    "AlgebraDefinition",
    "bundled_fixture",
    "list_fixtures",
    "load_definition",
    "parse_expr",
    "parse_poly",
]
