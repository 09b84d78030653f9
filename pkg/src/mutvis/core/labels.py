"""
@file: labels.py
@description: Метки вершин: битовая строка Q_d, пары [l,x] для CCC_d и [l,c] для BF(d), простые имена
@dependencies: dataclasses, re
@created: 2026-10-18
"""

import re
from dataclasses import dataclass
from typing import Union

from .errors import LabelParseError

_BITS_RE = re.compile(r"^[01]+$")
_PAIR_RE = re.compile(r"^\[(\d+),([01]+)\]$")


def _check_bits(bits: str, d: int) -> None:
    if len(bits) != d or not _BITS_RE.match(bits):
        raise LabelParseError(f"expected a binary string of length {d}, got {bits!r}")


def flip_bit(bits: str, position: int) -> str:
    """x(i): дополнение бита в позиции i (0 - самый левый)"""
    flipped = "1" if bits[position] == "0" else "0"
    return bits[:position] + flipped + bits[position + 1:]


def to_bits(value: int, d: int) -> str:
    """Число -> строка из d бит, старший бит слева"""
    return format(value, f"0{d}b") if d > 0 else ""


@dataclass(frozen=True, order=True)
class HypercubeLabel:
    """Вершина Q_d: строка из d бит"""
    bits: str

    @property
    def value(self) -> int:
        return int(self.bits, 2)

    @property
    def weight(self) -> int:
        """Число единиц (хэммингов вес)"""
        return self.bits.count("1")

    def __str__(self) -> str:
        return self.bits


@dataclass(frozen=True, order=True)
class CCCLabel:
    """Вершина CCC_d: [l, x], l - позиция на цикле-супервершине"""
    level: int
    bits: str

    def __str__(self) -> str:
        return f"[{self.level},{self.bits}]"


@dataclass(frozen=True, order=True)
class BFLabel:
    """Вершина BF(d): [l, c], l - уровень, c - столбец"""
    level: int
    column: str

    @property
    def column_value(self) -> int:
        return int(self.column, 2)

    def __str__(self) -> str:
        return f"[{self.level},{self.column}]"


@dataclass(frozen=True, order=True)
class PlainLabel:
    """Метка вершины произвольного графа"""
    name: str

    def __str__(self) -> str:
        return self.name


VertexLabel = Union[HypercubeLabel, CCCLabel, BFLabel, PlainLabel]


def parse_hypercube_label(text: str, d: int) -> HypercubeLabel:
    """Разобрать метку вида "0110" (строго d бит)"""
    _check_bits(text, d)
    return HypercubeLabel(text)


def parse_ccc_label(text: str, d: int) -> CCCLabel:
    """Разобрать метку вида "[2,0110]", уровень в [0, d)"""
    match = _PAIR_RE.match(text)
    if not match:
        raise LabelParseError(f"expected a CCC label like [l,bits], got {text!r}")
    level, bits = int(match.group(1)), match.group(2)
    _check_bits(bits, d)
    if not 0 <= level < d:
        raise LabelParseError(f"CCC level must lie in [0,{d - 1}], got {level}")
    return CCCLabel(level, bits)


def parse_bf_label(text: str, d: int) -> BFLabel:
    """Разобрать метку вида "[2,0110]", уровень в [0, d]"""
    match = _PAIR_RE.match(text)
    if not match:
        raise LabelParseError(f"expected a butterfly label like [l,bits], got {text!r}")
    level, column = int(match.group(1)), match.group(2)
    _check_bits(column, d)
    if not 0 <= level <= d:
        raise LabelParseError(f"butterfly level must lie in [0,{d}], got {level}")
    return BFLabel(level, column)
