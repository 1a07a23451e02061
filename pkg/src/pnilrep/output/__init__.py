"""
Output formatters package.
"""

from .console import ConsoleOutput
from .csv_output import CsvOutput
from .json_output import SCHEMA, JsonOutput

__all__ = [
    "ConsoleOutput",
    "CsvOutput",
    "JsonOutput",
    "SCHEMA",
]
