import json
import logging
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

import yaml

logger = logging.getLogger(__name__)


def load_yaml_or_empty_dict(path: Path) -> dict:
    if path.exists():
        with path.open("r") as f:
            return yaml.safe_load(f) or {}
    return {}


def format_fraction(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


def to_jsonable(obj):
    """Dataclasses, enums, sets and fractions as plain JSON values; numbers stay exact"""
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else format_fraction(obj)
    if isinstance(obj, dict):
        return {format_fraction(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return sorted(to_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)
