"""
Text codecs.

Addressing file: first line ``n t``, then n lines of t characters over {0,a,b}.
Biclique list: one biclique per line, ``left | right`` with space separated vertices.
"""
from typing import List, Sequence

from graph_addressing.addressing.core import (
    Addressing,
    AddressingError,
    Biclique,
    BicliqueError,
    Symbol,
)


def format_addressing(addressing: Addressing) -> str:
    return "\n".join([f"{addressing.n} {addressing.t}", *addressing.to_strings()])


def parse_addressing(text: str, allow_zero_columns: bool = False) -> Addressing:
    """
    Columns without both an a and a b encode no distance and are rejected
    unless ``allow_zero_columns``; such columns do not survive a round trip
    through ``addressing_to_bicliques``.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise AddressingError("Empty addressing text")
    try:
        n, t = (int(x) for x in lines[0].split())
    except ValueError:
        raise AddressingError(f"Header must be 'n t', got '{lines[0]}'")
    # zero-length rows are blank lines, which were filtered above
    rows = lines[1:] if t else [""] * n
    if len(rows) != n:
        raise AddressingError(f"Header announces {n} rows, found {len(rows)}")
    addressing = Addressing.from_strings(rows) if n else Addressing(0, t, ())
    if addressing.t != t:
        raise AddressingError(f"Header announces length {t}, rows have {addressing.t}")
    if n and not allow_zero_columns:
        for j, column in enumerate(addressing.columns()):
            if all(s is Symbol.ZERO for s in column):
                raise AddressingError(f"Column {j} is all zero")
            if Symbol.A not in column or Symbol.B not in column:
                raise AddressingError(f"Column {j} is one-sided and encodes no distance")
    return addressing


def format_bicliques(parts: Sequence[Biclique]) -> str:
    return "\n".join(
        " ".join(map(str, sorted(p.left))) + " | " + " ".join(map(str, sorted(p.right)))
        for p in parts
    )


def parse_bicliques(text: str) -> List[Biclique]:
    parts = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.count("|") != 1:
            raise BicliqueError(f"Line {number}: expected 'left | right', got '{line}'")
        left, right = line.split("|")
        try:
            parts.append(Biclique.of(map(int, left.split()), map(int, right.split())))
        except ValueError:
            raise BicliqueError(f"Line {number}: vertices must be integers")
    return parts
