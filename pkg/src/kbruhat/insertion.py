"""
Schensted-like insertion from H_{(1,n)}(z) to H_{(n,1)}(z).

The six transformations act on three consecutive factors.  Patterns are
written in printed order (last-applied factor first), each factor a pair of
letter variables; a variable that appears twice must take the same value.
The driver scans triples from the right end of the printed word, which is
the start of the application-order tuple, and applies the first rule that
matches at the first matching position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .constants import weakly_fits
from .errors import DomainError, InvariantError, NonTerminationError
from .umonoid import ZERO, evaluate_word
from .words import Generator

__all__ = ["TransformRule", "RULES", "match_rule", "apply_rule", "insert",
           "insert_trace", "TraceStep", "ITERATION_FACTOR"]

ITERATION_FACTOR = 4

Pattern = tuple[tuple[str, str], tuple[str, str], tuple[str, str]]


@dataclass(frozen=True)
class TransformRule:
    tag: str
    lhs: Pattern
    rhs: Pattern
    guard: Callable[[dict], bool]

    def bind(self, triple: Sequence[Generator]) -> dict | None:
        """Variable bindings if ``triple`` (printed order) matches the left side."""
        env: dict[str, int] = {}
        for (x, y), g in zip(self.lhs, triple):
            for var, val in ((x, g.alpha), (y, g.beta)):
                if env.setdefault(var, val) != val:
                    return None
        return env if self.guard(env) else None

    def build(self, env: dict) -> tuple[Generator, ...]:
        return tuple(Generator(env[x], env[y]) for x, y in self.rhs)


def _disjoint(*groups):
    def check(env):
        a, b = groups
        return not {env[v] for v in a} & {env[v] for v in b}
    return check


def _chain(*names):
    def check(env):
        vals = [env[v] for v in names]
        return all(p < q for p, q in zip(vals, vals[1:]))
    return check


def _both(*checks):
    return lambda env: all(c(env) for c in checks)


RULES: tuple[TransformRule, ...] = (
    TransformRule("A", (("c", "g"), ("a", "al"), ("b", "be")),
                  (("a", "al"), ("c", "g"), ("b", "be")),
                  _both(_disjoint(("a", "al"), ("c", "g")), _chain("a", "b", "c"))),
    TransformRule("B", (("be", "g"), ("al", "be"), ("be", "d")),
                  (("al", "g"), ("g", "d"), ("be", "g")),
                  _chain("al", "be", "g", "d")),
    TransformRule("C", (("be", "d"), ("al", "be"), ("be", "g")),
                  (("be", "g"), ("g", "d"), ("al", "g")),
                  _chain("al", "be", "g", "d")),
    TransformRule("D", (("c", "g"), ("a", "c"), ("b", "be")),
                  (("b", "be"), ("c", "g"), ("a", "c")),
                  _both(_disjoint(("a", "c", "g"), ("b", "be")), _chain("a", "b", "c"))),
    TransformRule("E", (("b", "be"), ("a", "c"), ("c", "g")),
                  (("a", "c"), ("c", "g"), ("b", "be")),
                  _both(_disjoint(("a", "c", "g"), ("b", "be")), _chain("a", "b", "c"))),
    TransformRule("F", (("b", "be"), ("a", "al"), ("c", "g")),
                  (("b", "be"), ("c", "g"), ("a", "al")),
                  _both(_disjoint(("a", "al"), ("c", "g")), _chain("a", "b", "c"))),
)


def _printed_triple(x: Sequence[Generator], pos: int) -> tuple[Generator, ...]:
    # pos indexes application order; the printed triple reads right to left
    return tuple(reversed(x[pos:pos + 3]))


def match_rule(x: Sequence[Generator], pos: int) -> TransformRule | None:
    """First rule (in A..F order) whose pattern fits the factors ``pos..pos+2``."""
    if not 0 <= pos <= len(x) - 3:
        return None
    triple = _printed_triple(x, pos)
    for rule in RULES:
        if rule.bind(triple) is not None:
            return rule
    return None


def apply_rule(x: Sequence[Generator], pos: int) -> tuple[Generator, ...] | None:
    """
    Rewrite the factors at application positions ``pos..pos+2``; ``None`` if
    no rule matches.  The value of the word must not change.
    """
    x = tuple(x)
    rule = match_rule(x, pos)
    if rule is None:
        return None
    env = rule.bind(_printed_triple(x, pos))
    new = rule.build(env)[::-1]
    y = x[:pos] + new + x[pos + 3:]
    before, after = evaluate_word(x), evaluate_word(y)
    if after is ZERO or after != before:
        raise InvariantError(f"rule {rule.tag} at {pos} changed {before} into {after}")
    return y


@dataclass(frozen=True)
class TraceStep:
    pos: int
    rule: str
    before: tuple[Generator, ...]
    after: tuple[Generator, ...]


def insert_trace(x: Sequence[Generator]) -> tuple[tuple[Generator, ...], list[TraceStep]]:
    """Run the insertion and return the final word with every rewriting step."""
    x = tuple(x)
    n = len(x) - 1
    if n < 0:
        raise DomainError("cannot insert into the empty word")
    if evaluate_word(x) is ZERO:
        raise DomainError("insertion needs a u-reduced word")
    if not weakly_fits(x, (1, n)):
        raise DomainError("insertion needs a word in H_(1,n)")
    cap = ITERATION_FACTOR * max(n, 2) ** 3
    trace: list[TraceStep] = []
    while True:
        for pos in range(len(x) - 2):
            rule = match_rule(x, pos)
            if rule is not None:
                y = apply_rule(x, pos)
                trace.append(TraceStep(pos, rule.tag, x, y))
                x = y
                break
        else:
            break
        if len(trace) > cap:
            raise NonTerminationError(f"insertion did not stop within {cap} steps")
    if not weakly_fits(x, (n, 1)):
        raise InvariantError(f"insertion stopped outside H_({n},1): {x}")
    return x, trace


def insert(x: Sequence[Generator]) -> tuple[Generator, ...]:
    return insert_trace(x)[0]
