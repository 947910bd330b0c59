"""
Generators u[a,b] and words over them.

A word is a plain tuple of :class:`Generator` in *application order*: the
first entry acts first.  Printed products read the other way, so the text
format puts the first-applied factor on the right::

    u[3,4] u[2,3] u[4,5] u[1,4]   ==   (Generator(1,4), Generator(4,5), Generator(2,3), Generator(3,4))
"""

from __future__ import annotations

import json
import re
from typing import NamedTuple, Sequence

__all__ = ["Generator", "Word", "gen", "word", "format_word", "parse_word",
           "word_to_json", "word_from_json", "letters"]


class Generator(NamedTuple):
    alpha: int
    beta: int

    def __str__(self):
        return f"u[{self.alpha},{self.beta}]"


Word = tuple  # tuple[Generator, ...] in application order


def gen(alpha: int, beta: int) -> Generator:
    if not 0 < alpha < beta:
        raise ValueError(f"generator needs 0 < alpha < beta, got ({alpha},{beta})")
    return Generator(alpha, beta)


def word(*pairs: Sequence[int]) -> tuple[Generator, ...]:
    """Build a word from ``(alpha, beta)`` pairs given in application order."""
    return tuple(gen(a, b) for a, b in pairs)


def letters(x: Sequence[Generator]) -> frozenset[int]:
    return frozenset(v for g in x for v in g)


def format_word(x: Sequence[Generator], order: str = "paper") -> str:
    """``order="paper"`` prints the last-applied factor first."""
    if order not in ("paper", "application"):
        raise ValueError(f"unknown order {order!r}")
    gens = reversed(x) if order == "paper" else x
    s = " ".join(str(g) for g in gens)
    return s if s else "1"


_FACTOR = re.compile(r"u\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_word(text: str, order: str = "paper") -> tuple[Generator, ...]:
    """Inverse of :func:`format_word`; ``1`` or an empty string is the empty word."""
    text = text.strip()
    if text.startswith("{"):
        return word_from_json(text)
    if text in ("", "1"):
        return ()
    pos = 0
    pairs = []
    for m in _FACTOR.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse word {text!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if text[pos:].strip() or not pairs:
        raise ValueError(f"cannot parse word {text!r}")
    if order == "paper":
        pairs.reverse()
    elif order != "application":
        raise ValueError(f"unknown order {order!r}")
    return word(*pairs)


def word_to_json(x: Sequence[Generator]) -> dict:
    return {"gens": [[g.alpha, g.beta] for g in x], "order": "application"}


def word_from_json(data) -> tuple[Generator, ...]:
    if isinstance(data, str):
        data = json.loads(data)
    pairs = [tuple(p) for p in data["gens"]]
    order = data.get("order", "application")
    if order == "paper":
        pairs.reverse()
    elif order != "application":
        raise ValueError(f"unknown order {order!r}")
    return word(*pairs)
