"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a map from monomials to nonzero Fraction coefficients.  A
monomial is an exponent tuple of fixed length n (the ambient variable
count), entry i holding the exponent of x_{i+1}.  The zero polynomial has
an empty term map, and two polynomials are equal iff their term maps are
equal, so every value is in canonical form by construction.

The canonical monomial order is graded lexicographic with x1 > x2 > ...:
compare total degree first, then the exponent tuples lexicographically.
It drives printing, single-divisor division and the column order of the
graded linear algebra.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Monomial = tuple[int, ...]


def grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    """Sort key realizing the graded-lex order (bigger key = bigger monomial)."""
    return (sum(mono), mono)


def monomials_of_degree(n_vars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given total degree, in descending lex order."""
    if degree < 0:
        return
    if n_vars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(n_vars - 1, degree - e):
            yield (e,) + rest


def count_monomials(n_vars: int, degree: int) -> int:
    """Dimension of the space of degree-d forms in n variables."""
    if degree < 0:
        return 0
    return math.comb(degree + n_vars - 1, n_vars - 1)


class Poly:
    """Immutable sparse polynomial over Q in a fixed number of variables.

    Do not mutate `terms` after construction; all operations return new
    objects, which is what makes concurrent use safe.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n_vars: int, terms: dict[Monomial, Fraction] | None = None):
        self.n = n_vars
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int) -> Poly:
        return cls(n_vars)

    @classmethod
    def const(cls, n_vars: int, value) -> Poly:
        c = Fraction(value)
        if c == 0:
            return cls(n_vars)
        return cls(n_vars, {(0,) * n_vars: c})

    @classmethod
    def var(cls, n_vars: int, index: int) -> Poly:
        """The variable x_index (1-based)."""
        if not 1 <= index <= n_vars:
            raise ValueError(f"variable index {index} out of range 1..{n_vars}")
        exps = [0] * n_vars
        exps[index - 1] = 1
        return cls(n_vars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, n_vars: int, exps: Sequence[int], coeff=1) -> Poly:
        exps = tuple(exps)
        if len(exps) != n_vars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps} for {n_vars} variables")
        c = Fraction(coeff)
        return cls(n_vars, {exps: c}) if c else cls(n_vars)

    # -- basic structure -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial (documented sentinel)."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict[int, Poly]:
        comp: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            comp.setdefault(sum(m), {})[m] = c
        return {d: Poly(self.n, t) for d, t in sorted(comp.items())}

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- arithmetic ------------------------------------------------------

    def _require_same_ambient(self, other: Poly) -> None:
        if self.n != other.n:
            raise ValueError(f"variable-count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: Poly) -> Poly:
        self._require_same_ambient(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Poly(self.n, out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            self._require_same_ambient(other)
            out: dict[Monomial, Fraction] = {}
            for ma, ca in self.terms.items():
                for mb, cb in other.terms.items():
                    m = tuple(a + b for a, b in zip(ma, mb))
                    s = out.get(m, 0) + ca * cb
                    if s:
                        out[m] = s
                    elif m in out:
                        del out[m]
            return Poly(self.n, out)
        c = Fraction(other)
        if c == 0:
            return Poly(self.n)
        return Poly(self.n, {m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def shift(self, mono: Monomial) -> Poly:
        """Multiply by the given monomial."""
        return Poly(
            self.n,
            {tuple(a + b for a, b in zip(m, mono)): c for m, c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly) and self.n == other.n and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({self.n}, {format_poly(self)!r})"

    def sign_normalized(self) -> Poly:
        """Scale by -1 if needed so the graded-lex leading coefficient is positive.

        Used to deduplicate generator orbits up to sign.
        """
        if not self.terms:
            return self
        if self.terms[self.leading_monomial()] < 0:
            return -self
        return self

    # -- evaluation and substitution --------------------------------------

    def eval(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.n:
            raise ValueError(f"point length {len(point)} != {self.n}")
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for e, v in zip(m, vals):
                if e:
                    term *= v**e
            total += term
        return total

    def eval_float(self, point: Sequence[float]) -> float:
        if len(point) != self.n:
            raise ValueError(f"point length {len(point)} != {self.n}")
        total = 0.0
        for m, c in self.terms.items():
            term = float(c)
            for e, v in zip(m, point):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute_squares(self) -> Poly:
        """f(x1^2, ..., xn^2): every exponent doubled."""
        return Poly(
            self.n, {tuple(2 * e for e in m): c for m, c in self.terms.items()}
        )

    def derivative(self, index: int) -> Poly:
        """Partial derivative with respect to x_index (1-based)."""
        i = index - 1
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            if m[i]:
                dm = m[:i] + (m[i] - 1,) + m[i + 1 :]
                out[dm] = out.get(dm, 0) + c * m[i]
        return Poly(self.n, out)


def divides(g: Poly, f: Poly) -> tuple[bool, Poly | None]:
    """Exact single-divisor division: True plus quotient iff f = q*g.

    Long division under graded-lex; the first leading term not divisible by
    the leading term of g certifies non-divisibility.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    g._require_same_ambient(f)
    lg = g.leading_monomial()
    cg = g.terms[lg]
    rem = f
    quot: dict[Monomial, Fraction] = {}
    while not rem.is_zero():
        lm = rem.leading_monomial()
        if any(a < b for a, b in zip(lm, lg)):
            return False, None
        m = tuple(a - b for a, b in zip(lm, lg))
        c = rem.terms[lm] / cg
        quot[m] = c
        rem = rem - g.shift(m) * c
    return True, Poly(f.n, quot)


def _single_variable(f: Poly) -> int | None:
    """Index (1-based) of the one variable f uses, or None if f is constant."""
    used = {i for m in f.terms for i, e in enumerate(m) if e}
    if not used:
        return None
    if len(used) > 1:
        raise ValueError("polynomial is not univariate")
    return used.pop() + 1


def _univariate_coeffs(f: Poly) -> list[Fraction]:
    """Dense coefficient list [c0, c1, ...] of a univariate polynomial."""
    i = _single_variable(f)
    if i is None:
        return [next(iter(f.terms.values()))] if f.terms else []
    coeffs = [Fraction(0)] * (f.degree() + 1)
    for m, c in f.terms.items():
        coeffs[m[i - 1]] = c
    return coeffs


def _poly_gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    """Degree of gcd(a, b) by the Euclidean algorithm over Q[x]."""

    def deg(p):
        return len(p) - 1

    def rem(p, q):
        p = p[:]
        while deg(p) >= deg(q) and any(p):
            k = deg(p) - deg(q)
            c = p[-1] / q[-1]
            for i, qc in enumerate(q):
                p[i + k] -= c * qc
            while p and p[-1] == 0:
                p.pop()
            if not p:
                break
        return p

    while b and any(b):
        a, b = b, rem(a, b)
    return deg(a)


def univariate_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is constant (f nonzero, in one variable)."""
    if f.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    i = _single_variable(f)
    if i is None:
        return True
    fp = f.derivative(i)
    return _poly_gcd_degree(_univariate_coeffs(f), _univariate_coeffs(fp)) == 0


def bivariate_squarefree(f: Poly) -> bool:
    """Squarefreeness of a homogeneous bivariate polynomial.

    Factor out y^a; a homogeneous f is squarefree iff a <= 1 and the
    dehomogenization of the cofactor at y = 1 is squarefree (the x^deg
    coefficient of the cofactor is nonzero, so no degree is lost).
    """
    if f.n != 2:
        raise ValueError("expected a bivariate polynomial")
    if f.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if not f.is_homogeneous():
        raise ValueError("expected a homogeneous polynomial")
    a = min(m[1] for m in f.terms)
    if a > 1:
        return False
    # f = y^a * h with y not dividing h; h(x, 1) = f(x, 1) keeps full degree
    # because the y^a exponent drop does not collide homogeneous x-exponents.
    terms: dict[Monomial, Fraction] = {}
    for (ex, _), c in f.terms.items():
        terms[(ex,)] = terms.get((ex,), Fraction(0)) + c
    return univariate_squarefree(Poly(1, terms))


# -- text grammar ---------------------------------------------------------
#
# poly   := ('+'|'-')? term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := coeff | var ('^' uint)? | '(' poly ')'
# var    := 'x' uint          (1-based)
# coeff  := uint ('/' uint)?
#
# Printing emits terms in descending graded-lex order, suppresses the
# coefficient 1 and folds '-' into the separating operator, so parse/print
# round-trips bit-exactly on canonical forms.


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the byte position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.i += 1
        return ch

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            raise PolyParseError(f"expected {ch!r}, found {got!r}", self.i)
        self.i += 1

    def uint(self) -> int:
        self._skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise PolyParseError("expected an unsigned integer", start)
        return int(self.text[start : self.i])


def parse_poly(text: str, n_vars: int | None = None) -> Poly:
    """Parse the CLI polynomial grammar into canonical form.

    If n_vars is None the ambient count is the largest variable index used
    (at least 1).
    """
    if n_vars is None:
        import re

        indices = [int(s) for s in re.findall(r"x\s*(\d+)", text)]
        n_vars = max(indices, default=1)

    toks = _Tokens(text)

    def parse_factor() -> Poly:
        ch = toks.peek()
        if ch == "(":
            toks.take()
            inner = parse_sum()
            toks.expect(")")
            return inner
        if ch == "x":
            pos = toks.i
            toks.take()
            idx = toks.uint()
            if not 1 <= idx <= n_vars:
                raise PolyParseError(f"variable x{idx} out of range 1..{n_vars}", pos)
            p = Poly.var(n_vars, idx)
            if toks.peek() == "^":
                toks.take()
                p = p ** toks.uint()
            return p
        if ch.isdigit():
            num = toks.uint()
            if toks.peek() == "/":
                toks.take()
                den = toks.uint()
                if den == 0:
                    raise PolyParseError("zero denominator", toks.i)
                return Poly.const(n_vars, Fraction(num, den))
            return Poly.const(n_vars, num)
        raise PolyParseError(f"unexpected character {ch!r}", toks.i)

    def parse_term() -> Poly:
        p = parse_factor()
        while toks.peek() == "*":
            toks.take()
            p = p * parse_factor()
        return p

    def parse_sum() -> Poly:
        sign = 1
        if toks.peek() in "+-":
            sign = -1 if toks.take() == "-" else 1
        total = parse_term() * sign
        while toks.peek() in "+-":
            op = toks.take()
            term = parse_term()
            total = total - term if op == "-" else total + term
        return total

    result = parse_sum()
    if toks.peek():
        raise PolyParseError(f"trailing input {toks.peek()!r}", toks.i)
    return result


def _format_term(mono: Monomial, coeff: Fraction) -> str:
    factors = []
    for i, e in enumerate(mono):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    if not factors:
        return str(coeff)
    if coeff == 1:
        return "*".join(factors)
    return "*".join([str(coeff)] + factors)


def format_poly(p: Poly) -> str:
    """Canonical text form: descending graded-lex, '-' folded into operators."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for mono, coeff in p.sorted_terms():
        body = _format_term(mono, abs(coeff))
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)
