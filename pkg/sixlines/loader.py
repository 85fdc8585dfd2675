"""
loader.py – JSON5 reading for the data tables and for requests.

constants.py reads data/defaults.json5 and data/closed_forms.json5 once at
import; the CLI hands request text from stdin or --input to loads_json5.
Plain JSON requests parse unchanged, JSON5 only adds comments and trailing
commas.
"""
from pathlib import Path

import json5

from errors import InputError, SixLinesError


def load_json5(path):
    """Read one data table; a broken table is a SixLinesError naming the file."""
    path = Path(path)
    try:
        with open(path, encoding='utf-8') as f:
            return json5.load(f)
    except ValueError as exc:
        raise SixLinesError(f'data table {path.name} is not valid JSON5: {exc}') from None


def loads_json5(text):
    """Parse request text into Python objects; malformed text is an InputError."""
    try:
        return json5.loads(text)
    except ValueError as exc:
        raise InputError(f'malformed JSON: {exc}') from None
