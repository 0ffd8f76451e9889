"""Expression front end.

Grammar (whitespace-insensitive between tokens):

    element  := term { ('+'|'-') term }
    term     := [ rational '*' ] monomial
    rational := integer [ '/' posinteger ]
    monomial := 'vac'
              | gen '(' integer ')' monomial          right-normed prefix
              | gen                                   generator leaf
              | '(' monomial '[' integer ']' monomial ')'
    gen      := identifier from the signature

The canonical printer emits right-normed words as `a(-2)a(-1)vac`, so parse
and print round-trip.
"""

from __future__ import annotations

from fractions import Fraction

from .signature import Signature, SignatureError
from .words import FreeElement, Gen, Prod, Vac, ZERO, evaluate


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position


_PUNCT = {"(": "LPAREN", ")": "RPAREN", "[": "LBRACK", "]": "RBRACK",
          "+": "PLUS", "-": "MINUS", "*": "STAR", "/": "SLASH"}


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            tokens.append(("VAC" if word == "vac" else "IDENT", word, i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", None, n))
    return tokens


class _Parser:
    def __init__(self, sig: Signature, text: str):
        self.sig = sig
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2])
        return tok

    def integer(self) -> int:
        tok = self.next()
        if tok[0] == "MINUS":
            tok2 = self.expect("INT", "an integer")
            return -tok2[1]
        if tok[0] == "INT":
            return tok[1]
        raise ParseError("expected an integer", tok[2])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek()[0] == "SLASH":
            self.next()
            tok = self.expect("INT", "a positive denominator")
            if tok[1] == 0:
                raise ParseError("zero denominator", tok[2])
            return Fraction(num, tok[1])
        return Fraction(num)

    def gen_index(self, tok) -> int:
        try:
            return self.sig.index(tok[1])
        except SignatureError:
            raise ParseError(f"unknown generator {tok[1]!r}", tok[2]) from None

    def monomial(self):
        tok = self.next()
        if tok[0] == "VAC":
            return Vac()
        if tok[0] == "IDENT":
            g = self.gen_index(tok)
            if self.peek()[0] == "LPAREN":
                self.next()
                mode = self.integer()
                self.expect("RPAREN", "')'")
                rest = self.monomial()
                return Prod(Gen(g), mode, rest)
            return Gen(g)
        if tok[0] == "LPAREN":
            left = self.monomial()
            self.expect("LBRACK", "'['")
            mode = self.integer()
            self.expect("RBRACK", "']'")
            right = self.monomial()
            self.expect("RPAREN", "')'")
            return Prod(left, mode, right)
        raise ParseError("expected a monomial", tok[2])

    def term(self):
        kind = self.peek()[0]
        coeff = Fraction(1)
        if kind in ("INT", "MINUS"):
            coeff = self.rational()
            self.expect("STAR", "'*'")
        return coeff, self.monomial()

    def element(self):
        terms = [self.term()]
        while self.peek()[0] in ("PLUS", "MINUS"):
            op = self.next()
            coeff, mono = self.term()
            if op[0] == "MINUS":
                coeff = -coeff
            terms.append((coeff, mono))
        self.expect("EOF", "end of input")
        return terms


def parse_expr(sig: Signature, text: str):
    """Parse a single monomial into an expression tree."""
    parser = _Parser(sig, text)
    expr = parser.monomial()
    parser.expect("EOF", "end of input")
    return expr


def parse_element(sig: Signature, text: str) -> FreeElement:
    """Parse a full element (signed sum of scaled monomials) and evaluate it."""
    parser = _Parser(sig, text)
    out = ZERO
    for coeff, mono in parser.element():
        out = out + evaluate(sig, mono).scale(coeff)
    return out


def parse_weight(sig: Signature, text: str):
    """Parse a weight like `2a`, `a+b`, `-a+2b` or `0`."""
    tokens = _tokenize(text)
    counts = [0] * sig.size
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    sign = 1
    tok = peek()
    if tok[0] == "MINUS":
        advance()
        sign = -1
    if peek()[0] == "INT" and peek()[1] == 0 and tokens[pos + 1][0] == "EOF" and sign == 1:
        return sig.zero_weight()
    while True:
        mult = 1
        if peek()[0] == "INT":
            mult = advance()[1]
        tok = advance()
        if tok[0] != "IDENT":
            raise ParseError("expected a generator name", tok[2])
        try:
            g = sig.index(tok[1])
        except SignatureError:
            raise ParseError(f"unknown generator {tok[1]!r}", tok[2]) from None
        counts[g] += sign * mult
        tok = advance()
        if tok[0] == "EOF":
            return tuple(counts)
        if tok[0] == "PLUS":
            sign = 1
        elif tok[0] == "MINUS":
            sign = -1
        else:
            raise ParseError("expected '+', '-' or end of weight", tok[2])
