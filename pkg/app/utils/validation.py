"""
Input validation utilities for command-line arguments
"""

import argparse
import json
from typing import Tuple

from pydantic import ValidationError

from app.schemas.genus import GenusSymbol
from app.schemas.lattice import GramLattice
from app.utils.errors import UsageError


def parse_pair(text: str) -> Tuple[int, int]:
    """'3,19' -> (3, 19)"""
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma separated integers, got '{text}'")
    try:
        first, second = (int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma separated integers, got '{text}'")
    return first, second


def parse_eps(text: str) -> int:
    """Accept +1, -1, + or -"""
    normalized = text.strip()
    if normalized in ("+", "+1", "1"):
        return 1
    if normalized in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"eps must be +1 or -1, got '{text}'")


def parse_genus(text: str) -> GenusSymbol:
    try:
        return GenusSymbol.parse(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(f"invalid genus symbol '{text}': {exc.errors()[0]['msg']}")


def parse_gram(text: str) -> GramLattice:
    """A Gram matrix as a JSON array of rows"""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        raise argparse.ArgumentTypeError(f"Gram matrix must be a JSON array of rows, got '{text}'")
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise argparse.ArgumentTypeError("Gram matrix must be a JSON array of rows")
    if not all(isinstance(x, int) and not isinstance(x, bool) for row in rows for x in row):
        raise argparse.ArgumentTypeError("Gram matrix entries must be integers")
    try:
        return GramLattice(gram=rows)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(f"invalid Gram matrix: {exc.errors()[0]['msg']}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value
