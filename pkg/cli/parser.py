"""
Expression Parser

Recursive-descent parser for the ideal expression language. Whitespace between
tokens is ignored.

    expr     := term ('+' term)*
    term     := atom | 'cap' '(' expr (',' expr)* ')'
    atom     := 'I' '[' bounds ';' flags ']'
              | 'J' '[' bounds ';' flags ']'
              | 'Jp' '[' index ',' bound ',' flag ']'
              | 'gen' '(' monomial (',' monomial)* ')'
    bounds   := bound (',' bound)*        bound := rational | 'inf'
    flags    := flag (',' flag)*          flag  := '0' | '1'
    monomial := '1' | factor ('*' factor)*
    factor   := 'X' index ('^' rational)?
    rational := digits ('/' digits)?

At most MAX_NESTING cap levels may nest. Every failure raises an ExprError
carrying the byte offset of the fault:
ExprSyntaxError for malformed text, ExprDimensionError when the arity of a
literal or a variable index does not fit the ambient dimension.
"""
from fractions import Fraction
from typing import List, NoReturn, Tuple, Type

from cli.expr import BoxLiteral, CapExpr, Expr, GensLiteral, IrrLiteral, PurePowerLiteral, SumExpr
from core.errors import ExprDimensionError, ExprError, ExprSyntaxError
from core.exponent import INF, INF_TEXT, ExtExp, Flag, Ray
from core.ideal import BoxIdeal, FiniteGeneratorSet, IrreducibleIdeal, PurePowerIdeal
from core.monomial import Monomial

DIGITS = "0123456789"
LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
WHITESPACE = " \t\r\n"

# parse and elaborate both recurse once per cap level; must stay well below sys.getrecursionlimit()
MAX_NESTING = 200


class Parser:
    def __init__(self, text: str, dim: int):
        if dim < 1:
            raise ValueError("Dimension must be positive")
        self.text = text
        self.dim = dim
        self.pos = 0
        self.depth = 0

    # --- scanning helpers ---

    def offset(self, pos: int) -> int:
        return len(self.text[:pos].encode("utf-8", "surrogatepass"))

    def fail(self, message: str, pos: int = -1, kind: Type[ExprError] = ExprSyntaxError) -> NoReturn:
        raise kind(message, self.offset(self.pos if pos < 0 else pos), self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in WHITESPACE:
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            self.fail(f"expected {char!r}, found {found!r}")
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in LETTERS:
            self.pos += 1
        return self.text[start:self.pos]

    def digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in DIGITS:
            self.pos += 1
        if start == self.pos:
            if self.peek() == "-":
                self.fail("negative rationals are not allowed")
            self.fail(f"expected a number, found {self.peek() or 'end of input'!r}")
        try:
            return int(self.text[start:self.pos])
        except ValueError:
            self.fail("number too long", start)

    # --- grammar ---

    def parse(self) -> Expr:
        expr = self.expr()
        if self.peek():
            self.fail(f"unexpected {self.peek()!r} after expression")
        return expr

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else SumExpr(tuple(terms))

    def term(self) -> Expr:
        self.skip_ws()
        start = self.pos
        name = self.word()
        if name == "cap":
            if self.depth == MAX_NESTING:
                self.fail(f"expression nested too deeply (more than {MAX_NESTING} cap levels)", start)
            self.depth += 1
            self.expect("(")
            terms = [self.expr()]
            while self.peek() == ",":
                self.pos += 1
                terms.append(self.expr())
            self.expect(")")
            self.depth -= 1
            return CapExpr(tuple(terms))
        if name in ("I", "J"):
            return self.ray_literal(name, start)
        if name == "Jp":
            return self.pure_power_literal(start)
        if name == "gen":
            return self.gens_literal()
        if not name:
            self.fail(f"expected an ideal, found {self.peek() or 'end of input'!r}")
        self.fail(f"unknown ideal constructor {name!r}", start)

    def rational(self) -> Fraction:
        start = self.pos
        numerator = self.digits()
        if self.peek() == "/":
            self.pos += 1
            denominator = self.digits()
            if denominator == 0:
                self.fail("zero denominator", start)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def bound(self) -> ExtExp:
        self.skip_ws()
        if self.text.startswith(INF_TEXT, self.pos):
            self.pos += len(INF_TEXT)
            return INF
        return ExtExp(self.rational())

    def flag(self) -> Flag:
        self.skip_ws()
        start = self.pos
        char = self.text[start:start + 1]
        if not char or char not in DIGITS:
            self.fail(f"expected a flag, found {char or 'end of input'!r}")
        following = self.text[start + 1:start + 2]
        if char not in ("0", "1") or (following and following in DIGITS + "/"):
            self.fail("flags must be 0 or 1", start)
        self.pos += 1
        return Flag(int(char))

    def separated(self, item, separator: str) -> List:
        items = [item()]
        while self.peek() == separator:
            self.pos += 1
            items.append(item())
        return items

    def ray_literal(self, name: str, start: int) -> Expr:
        self.expect("[")
        bounds = self.separated(self.bound, ",")
        self.expect(";")
        flags = self.separated(self.flag, ",")
        self.expect("]")
        if len(bounds) != len(flags):
            self.fail(f"{len(bounds)} bounds but {len(flags)} flags", start, ExprDimensionError)
        if len(bounds) != self.dim:
            self.fail(f"{name}[...] has {len(bounds)} coordinates, expected {self.dim}", start, ExprDimensionError)
        rays = tuple(Ray(b, f) for b, f in zip(bounds, flags))
        if name == "I":
            return BoxLiteral(BoxIdeal(rays))
        return IrrLiteral(IrreducibleIdeal(rays))

    def variable_index(self) -> int:
        self.skip_ws()
        start = self.pos
        index = self.digits()
        if not 1 <= index <= self.dim:
            self.fail(f"variable index {index} outside 1..{self.dim}", start, ExprDimensionError)
        return index

    def pure_power_literal(self, start: int) -> Expr:
        self.expect("[")
        var = self.variable_index()
        self.expect(",")
        alpha = self.bound()
        self.expect(",")
        eps = self.flag()
        self.expect("]")
        return PurePowerLiteral(PurePowerIdeal(self.dim, var, Ray(alpha, eps)))

    def monomial(self) -> Monomial:
        exps = [Fraction(0)] * self.dim
        if self.peek() == "1":
            self.pos += 1
            return Monomial(tuple(exps))
        for var, exp in self.separated(self.factor, "*"):
            exps[var - 1] += exp
        return Monomial(tuple(exps))

    def factor(self) -> Tuple[int, Fraction]:
        if self.peek() != "X":
            self.fail(f"expected a variable X<i>, found {self.peek() or 'end of input'!r}")
        self.pos += 1
        var = self.variable_index()
        exp = Fraction(1)
        if self.peek() == "^":
            self.pos += 1
            exp = self.rational()
        return var, exp

    def gens_literal(self) -> Expr:
        self.expect("(")
        gens = self.separated(self.monomial, ",")
        self.expect(")")
        return GensLiteral(FiniteGeneratorSet(self.dim, tuple(gens)))


def parse_expr(text: str, dim: int) -> Expr:
    """
    Parse expression text for the ambient ring of dimension dim.
    """
    return Parser(text, dim).parse()


def parse_monomial(text: str, dim: int) -> Monomial:
    """Parse a single monomial such as "X1^3/2*X2^2" or "1"."""
    parser = Parser(text, dim)
    monomial = parser.monomial()
    if parser.peek():
        parser.fail(f"unexpected {parser.peek()!r} after monomial")
    return monomial
