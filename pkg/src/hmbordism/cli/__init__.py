from .main import main, run
from .parser import parse_expression, to_source

__all__ = ["main", "run", "parse_expression", "to_source"]
