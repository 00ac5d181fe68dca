'''Utility functions.
'''

import os
from fractions import Fraction
from typing import Optional

from lark.lexer import Token

from factum.types import SrcPosition


def get_abs_path(filename: str):
    '''Get the absolute path for a file within the package.'''
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), filename)


def get_token_position(token: Token) -> SrcPosition:
    '''Get the start position of a Lark Token as SrcPosition.'''
    return SrcPosition(token.line, token.column)


def to_float(value: Optional[Fraction]) -> Optional[float]:
    return None if value is None else float(value)


def percent(value: Optional[Fraction]) -> str:
    '''Render a ratio as a percentage with two decimals, or '-' when undefined.'''
    if value is None:
        return '-'
    return '{:.2f}'.format(float(value * 100))


def parse_beta(text: str) -> Fraction:
    '''Read a rational like '0.5', '1/2' or '2'.'''
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError("'{}' is not a rational number".format(text))
