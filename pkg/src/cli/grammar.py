"""원소 텍스트 문법

    expr     := ["-"] term (("+" | "-") term)*
    term     := rational ["*" power] | power
    power    := "t" ["^" exponent]
    exponent := rational | "(" rational ("," rational)* ")"
    rational := ["-"] digits ["/" digits]

공백은 무시합니다. 결과가 모델 M 밖이면(음수, 정수가 아닌 상수항)
Element 불변식 검사에서 InvariantViolation이 납니다.
"""

import re
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional

from src.core.exceptions import ParseError
from src.series import Element, Exponent, Series

_TOKENS = {
    "num": r"\d+",
    "var": r"t",
    "caret": r"\^",
    "lpar": r"\(",
    "rpar": r"\)",
    "comma": r",",
    "slash": r"/",
    "star": r"\*",
    "plus": r"\+",
    "minus": r"-",
    "skip": r"\s+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))


class Token(NamedTuple):
    type: str
    value: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    for mo in _REGEX.finditer(text):
        kind = str(mo.lastgroup)
        if kind == "skip":
            continue
        if kind == "error":
            raise ParseError(f"unknown symbol '{mo.group()}'", mo.start(), "term")
        yield Token(kind, mo.group(), mo.start())


class _Parser:
    def __init__(self, text: str, dim: int):
        self.text = text
        self.dim = dim
        self.tokens: List[Token] = list(tokenize(text))
        self.index = 0

    # --- 토큰 다루기 ---

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _position(self) -> int:
        token = self._peek()
        return token.position if token else len(self.text)

    def _error(self, expected: str) -> ParseError:
        token = self._peek()
        found = f"'{token.value}'" if token else "end of input"
        return ParseError(f"expected {expected}, found {found}", self._position(), expected)

    def _accept(self, kind: str) -> Optional[Token]:
        token = self._peek()
        if token is not None and token.type == kind:
            self.index += 1
            return token
        return None

    def _expect(self, kind: str, expected: str) -> Token:
        token = self._accept(kind)
        if token is None:
            raise self._error(expected)
        return token

    # --- 문법 규칙 ---

    def parse(self) -> Series:
        if not self.tokens:
            raise self._error("term")
        sign = -1 if self._accept("minus") else 1
        mapping = {}
        while True:
            exponent, coeff = self._term()
            mapping[exponent] = mapping.get(exponent, Fraction(0)) + sign * coeff
            if self._accept("plus"):
                sign = 1
            elif self._accept("minus"):
                sign = -1
            elif self._peek() is None:
                break
            else:
                raise self._error("'+' or '-'")
        return Series.from_mapping(mapping, self.dim)

    def _rational(self, signed: bool = False) -> Fraction:
        negative = signed and self._accept("minus") is not None
        numerator = int(self._expect("num", "number").value)
        value = Fraction(numerator)
        if self._accept("slash"):
            denominator = int(self._expect("num", "denominator").value)
            if denominator == 0:
                self.index -= 1
                raise ParseError("zero denominator", self._position(), "nonzero denominator")
            value = Fraction(numerator, denominator)
        return -value if negative else value

    def _term(self):
        token = self._peek()
        if token is not None and token.type == "num":
            coeff = self._rational()
            if self._accept("star"):
                return self._power(), coeff
            return Exponent.zero(self.dim), coeff
        if token is not None and token.type == "var":
            return self._power(), Fraction(1)
        raise self._error("term")

    def _power(self) -> Exponent:
        self._expect("var", "'t'")
        if not self._accept("caret"):
            return Exponent.of(*([1] + [0] * (self.dim - 1)))
        if self._peek() is not None and self._peek().type == "lpar":
            start = self._position()
            self._accept("lpar")
            components = [self._rational(signed=True)]
            while self._accept("comma"):
                components.append(self._rational(signed=True))
            self._expect("rpar", "')'")
        else:
            start = self._position()
            components = [self._rational()]
        if len(components) != self.dim:
            raise ParseError(
                f"exponent has {len(components)} components, model dimension is {self.dim}",
                start,
                f"{self.dim} exponent component(s)",
            )
        return Exponent.of(*components)


def parse_series(text: str, dim: int) -> Series:
    return _Parser(text, dim).parse()


def parse_element(text: str, dim: int) -> Element:
    """텍스트를 원소로. 문법 오류는 ParseError, 모델 밖이면 InvariantViolation"""
    return Element.of(parse_series(text, dim))


def _format_exponent(exponent: Exponent) -> str:
    if exponent.dim == 1:
        value = exponent.components[0]
        if value == 1:
            return "t"
        if value.denominator == 1:
            return f"t^{value}"
        return f"t^({value})"
    return "t^(" + ",".join(str(x) for x in exponent.components) + ")"


def format_series(series: Series) -> str:
    """내림차순 정규 표기: 't^2 + 3*t + 1', '0', 't^(1,1)'"""
    if series.is_zero():
        return "0"
    parts: List[str] = []
    for index, term in enumerate(series.terms):
        magnitude = abs(term.coeff)
        if term.exponent.is_zero():
            body = str(magnitude)
        elif magnitude == 1:
            body = _format_exponent(term.exponent)
        else:
            body = f"{magnitude}*{_format_exponent(term.exponent)}"
        if index == 0:
            parts.append(f"-{body}" if term.coeff < 0 else body)
        else:
            parts.append(f"{'-' if term.coeff < 0 else '+'} {body}")
    return " ".join(parts)


def format_element(element: Element) -> str:
    return format_series(element)
