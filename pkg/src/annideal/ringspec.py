"""Parser for the textual ring-spec language.

Grammar (whitespace-insensitive)::

    ringspec := term ( 'x' term )*
    term     := 'Z' nat | 'Z' nat '[x]/(' poly (',' poly)* ')'
    poly     := sum of terms c, c*x^k, c x^k, x^k, x   (integer c, k >= 1)

Polynomials are stored as coefficient tuples, lowest degree first, with
trailing zeros stripped.
"""

from __future__ import annotations

from dataclasses import dataclass


class RingSpecError(ValueError):
    """Raised for malformed or semantically invalid ring specs."""

    def __init__(self, message, text=None, pos=None):
        self.message = message
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


@dataclass(frozen=True)
class Zn:
    n: int

    def __str__(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class QuotientPoly:
    base: Zn
    relators: tuple

    def __str__(self):
        rels = ", ".join(format_poly(r) for r in self.relators)
        return f"{self.base}[x]/({rels})"


def strip_poly(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def format_poly(coeffs):
    """Render coefficients (lowest degree first) as e.g. ``x^2+x+1``."""
    out = ""
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if c < 0:
            out += "-" + body
        else:
            out += ("+" if out else "") + body
    return out or "0"


def is_monic_mod(coeffs, n):
    reduced = strip_poly(c % n for c in coeffs)
    return len(reduced) >= 2 and reduced[-1] == 1


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise RingSpecError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            self.error(f"expected {ch!r}, got {got!r}")
        self.pos += 1

    def nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            got = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.error(f"expected a number, got {got!r}")
        return int(self.text[start:self.pos]), start

    def ringspec(self):
        factors = [self.term()]
        while self.peek() == "x":
            self.pos += 1
            factors.append(self.term())
        if self.peek():
            ch = self.peek()
            if ch == ")":
                self.error("unbalanced ')'")
            self.error(f"unexpected character {ch!r}")
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def term(self):
        self.expect("Z")
        n, npos = self.nat()
        if n < 2:
            self.error(f"modulus must be at least 2, got {n}", npos)
        base = Zn(n)
        if self.peek() != "[":
            return base
        self.pos += 1
        var_pos = self.pos
        var = self.peek()
        if var != "x":
            if var.isalpha():
                self.error(f"polynomial variable must be 'x', got {var!r}", var_pos)
            self.error("expected 'x'")
        self.pos += 1
        self.expect("]")
        self.expect("/")
        open_pos = self.pos
        if self.peek() != "(":
            self.expect("(")
        self.pos += 1
        relators = [self.poly()]
        while self.peek() == ",":
            self.pos += 1
            relators.append(self.poly())
        if self.peek() != ")":
            if not self.peek():
                self.error("unbalanced '(': missing ')'", open_pos)
            self.expect(")")
        self.pos += 1
        if not any(is_monic_mod(r, n) for r in relators):
            self.error(f"no relator is monic of degree >= 1 modulo {n}", open_pos)
        return QuotientPoly(base, tuple(relators))

    def poly(self):
        coeffs = {}
        first = True
        while True:
            sign = 1
            ch = self.peek()
            if ch in "+-":
                sign = -1 if ch == "-" else 1
                self.pos += 1
            elif not first:
                break
            c, k = self.mono()
            coeffs[k] = coeffs.get(k, 0) + sign * c
            first = False
            if self.peek() not in ("+", "-"):
                break
        if not coeffs:
            self.error("empty polynomial")
        deg = max(coeffs)
        return strip_poly(coeffs.get(k, 0) for k in range(deg + 1))

    def mono(self):
        ch = self.peek()
        c = None
        if ch.isdigit():
            c, _ = self.nat()
            if self.peek() == "*":
                self.pos += 1
                if self.peek() != "x":
                    self._bad_var()
            elif self.peek() != "x":
                if self.peek().isalpha():
                    self._bad_var()
                return c, 0
        if self.peek() != "x":
            self._bad_var()
        self.pos += 1
        k = 1
        if self.peek() == "^":
            self.pos += 1
            k, kpos = self.nat()
            if k < 1:
                self.error("exponent must be at least 1", kpos)
        return (1 if c is None else c), k

    def _bad_var(self):
        ch = self.peek()
        if ch.isalpha():
            self.error(f"polynomial variable must be 'x', got {ch!r}")
        self.error(f"expected a polynomial term, got {ch or 'end of input'!r}")


def parse_ring_spec(text):
    """Parse ``text`` into a :class:`Zn`, :class:`Product` or :class:`QuotientPoly`."""
    if not text or not text.strip():
        raise RingSpecError("empty ring spec", text, 0)
    return _Parser(text).ringspec()
