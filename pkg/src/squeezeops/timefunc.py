"""A small expression language over the time variable t.

Coefficient schedules are written once as text, e.g. ``"1 + 0.1*sin(t)"``,
parsed to an immutable tree, and differentiated symbolically, so the
pipeline gets first and second derivatives without finite-difference
noise.

Grammar (whitespace insignificant, identifiers case-sensitive)::

    expr   := term { ("+" | "-") term }
    term   := factor { ("*" | "/") factor }
    factor := base [ "^" integer ]
    base   := number | "t" | ident "(" expr ")" | "(" expr ")" | "-" base
    ident  := sin | cos | exp | sinh | cosh | tanh | sqrt | ln

Exponents must be literal non-negative integers, which keeps
differentiation total.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = [
    "TimeFunction",
    "Constant",
    "TimeVar",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Pow",
    "Call",
    "ParseError",
    "EvalDomainError",
    "parse",
    "evaluate",
    "derivative",
    "render",
]


class ParseError(ValueError):
    """Syntax error with the offending position in the source text."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvalDomainError(ValueError):
    """Domain violation naming the subexpression and the time value."""

    def __init__(self, message, expression, t):
        super().__init__(f"{message} in '{render(expression)}' at t = {t!r}")
        self.expression = expression
        self.t = t


class TimeFunction:
    """Base class of expression-tree nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Constant(TimeFunction):
    value: float


@dataclass(frozen=True)
class TimeVar(TimeFunction):
    pass


@dataclass(frozen=True)
class Neg(TimeFunction):
    operand: TimeFunction


@dataclass(frozen=True)
class Add(TimeFunction):
    left: TimeFunction
    right: TimeFunction


@dataclass(frozen=True)
class Sub(TimeFunction):
    left: TimeFunction
    right: TimeFunction


@dataclass(frozen=True)
class Mul(TimeFunction):
    left: TimeFunction
    right: TimeFunction


@dataclass(frozen=True)
class Div(TimeFunction):
    left: TimeFunction
    right: TimeFunction


@dataclass(frozen=True)
class Pow(TimeFunction):
    base: TimeFunction
    exponent: int

    def __post_init__(self):
        if not (isinstance(self.exponent, int) and self.exponent >= 0):
            raise ValueError(f"power exponent must be an integer >= 0, got {self.exponent!r}")


@dataclass(frozen=True)
class Call(TimeFunction):
    name: str
    argument: TimeFunction

    def __post_init__(self):
        if self.name not in _FUNCTIONS:
            raise ValueError(f"unknown function {self.name!r}")


_FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "tanh": math.tanh,
    "sqrt": math.sqrt,
    "ln": math.log,
}

_TOKEN_RE = re.compile(
    r"(?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[+\-*/^()])"
)


def _tokenize(src):
    tokens = []
    pos = 0
    length = len(src)
    while pos < length:
        if src[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        tokens.append((match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", length))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect_op(self, op):
        kind, text, pos = self.peek()
        if kind != "op" or text != op:
            raise ParseError(f"expected {op!r}, found {text or 'end of input'!r}", pos)
        return self.advance()

    def expr(self):
        node = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                right = self.term()
                node = Add(node, right) if text == "+" else Sub(node, right)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "*/":
                self.advance()
                right = self.factor()
                node = Mul(node, right) if text == "*" else Div(node, right)
            else:
                return node

    def factor(self):
        node = self.base()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            num_kind, num_text, num_pos = self.peek()
            if num_kind != "number" or not num_text.isdigit():
                raise ParseError(
                    f"expected a literal non-negative integer exponent, found {num_text or 'end of input'!r}",
                    num_pos,
                )
            self.advance()
            node = Pow(node, int(num_text))
        return node

    def base(self):
        kind, text, pos = self.advance()
        if kind == "number":
            return Constant(float(text))
        if kind == "ident":
            if text == "t":
                return TimeVar()
            if text not in _FUNCTIONS:
                raise ParseError(f"unknown identifier {text!r}", pos)
            self.expect_op("(")
            argument = self.expr()
            self.expect_op(")")
            return Call(text, argument)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "op" and text == "-":
            return Neg(self.base())
        raise ParseError(f"expected a value, found {text or 'end of input'!r}", pos)


def parse(src):
    """Parse source text into a :class:`TimeFunction` tree.

    Raises
    ------
    ParseError
        On empty input, unknown identifiers, or any syntax error, with
        the character position.
    """
    if not src or src.isspace():
        raise ParseError("empty expression", 0)
    parser = _Parser(_tokenize(src))
    node = parser.expr()
    kind, text, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected trailing input {text!r}", pos)
    return node


def evaluate(f, t):
    """Evaluate a tree at time t.

    Raises
    ------
    EvalDomainError
        On division by zero, sqrt of a negative, ln of a non-positive
        value, or overflow, naming the subexpression and t.
    """
    if isinstance(f, Constant):
        return f.value
    if isinstance(f, TimeVar):
        return float(t)
    if isinstance(f, Neg):
        return -evaluate(f.operand, t)
    if isinstance(f, (Add, Sub, Mul, Div)):
        left = evaluate(f.left, t)
        right = evaluate(f.right, t)
        if isinstance(f, Add):
            value = left + right
        elif isinstance(f, Sub):
            value = left - right
        elif isinstance(f, Mul):
            value = left * right
        else:
            if right == 0.0:
                raise EvalDomainError("division by zero", f, t)
            value = left / right
    elif isinstance(f, Pow):
        value = evaluate(f.base, t) ** f.exponent
    elif isinstance(f, Call):
        argument = evaluate(f.argument, t)
        if f.name == "sqrt" and argument < 0.0:
            raise EvalDomainError(f"sqrt of negative value {argument!r}", f, t)
        if f.name == "ln" and argument <= 0.0:
            raise EvalDomainError(f"ln of non-positive value {argument!r}", f, t)
        try:
            value = _FUNCTIONS[f.name](argument)
        except OverflowError:
            raise EvalDomainError("overflow", f, t) from None
    else:
        raise TypeError(f"not a TimeFunction node: {f!r}")
    if not math.isfinite(value):
        raise EvalDomainError("result is not finite", f, t)
    return value


def derivative(f):
    """Exact symbolic derivative of a tree.

    Total over all well-formed trees; the result may be unreduced.
    Applying it twice gives the second derivative.
    """
    if isinstance(f, Constant):
        return Constant(0.0)
    if isinstance(f, TimeVar):
        return Constant(1.0)
    if isinstance(f, Neg):
        return Neg(derivative(f.operand))
    if isinstance(f, Add):
        return Add(derivative(f.left), derivative(f.right))
    if isinstance(f, Sub):
        return Sub(derivative(f.left), derivative(f.right))
    if isinstance(f, Mul):
        return Add(Mul(derivative(f.left), f.right), Mul(f.left, derivative(f.right)))
    if isinstance(f, Div):
        numerator = Sub(Mul(derivative(f.left), f.right), Mul(f.left, derivative(f.right)))
        return Div(numerator, Pow(f.right, 2))
    if isinstance(f, Pow):
        if f.exponent == 0:
            return Constant(0.0)
        if f.exponent == 1:
            return derivative(f.base)
        scaled = Mul(Constant(float(f.exponent)), Pow(f.base, f.exponent - 1))
        return Mul(scaled, derivative(f.base))
    if isinstance(f, Call):
        inner = derivative(f.argument)
        u = f.argument
        if f.name == "sin":
            return Mul(Call("cos", u), inner)
        if f.name == "cos":
            return Neg(Mul(Call("sin", u), inner))
        if f.name == "exp":
            return Mul(Call("exp", u), inner)
        if f.name == "sinh":
            return Mul(Call("cosh", u), inner)
        if f.name == "cosh":
            return Mul(Call("sinh", u), inner)
        if f.name == "tanh":
            return Div(inner, Pow(Call("cosh", u), 2))
        if f.name == "sqrt":
            return Div(inner, Mul(Constant(2.0), Call("sqrt", u)))
        if f.name == "ln":
            return Div(inner, u)
    raise TypeError(f"not a TimeFunction node: {f!r}")


def render(f):
    """Render a tree to parseable text; parse(render(f)) evaluates like f."""
    if isinstance(f, Constant):
        if f.value < 0.0:
            return f"(0 - {-f.value!r})"
        return repr(f.value)
    if isinstance(f, TimeVar):
        return "t"
    if isinstance(f, Neg):
        return f"(-{render(f.operand)})"
    if isinstance(f, Add):
        return f"({render(f.left)} + {render(f.right)})"
    if isinstance(f, Sub):
        return f"({render(f.left)} - {render(f.right)})"
    if isinstance(f, Mul):
        return f"({render(f.left)} * {render(f.right)})"
    if isinstance(f, Div):
        return f"({render(f.left)} / {render(f.right)})"
    if isinstance(f, Pow):
        return f"({render(f.base)})^{f.exponent}"
    if isinstance(f, Call):
        return f"{f.name}({render(f.argument)})"
    raise TypeError(f"not a TimeFunction node: {f!r}")
