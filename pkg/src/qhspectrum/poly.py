"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero :class:`Fraction`
coefficients, together with the ordered tuple of variable names it lives
over.  Instances are treated as immutable.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from types import MappingProxyType

from .errors import VariableMismatch

Rational = Fraction


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


class Polynomial:
    __slots__ = ("_terms", "_vars", "_hash")

    def __init__(self, terms=None, variables=()):
        self._vars = tuple(variables)
        nv = len(self._vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nv}")
            if any((not isinstance(e, int)) or e < 0 for e in exp):
                raise ValueError(f"exponents must be nonnegative integers: {exp}")
            c = _as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms, variables):
        # trusted constructor: keys valid, no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._vars = variables
        p._hash = None
        return p

    @classmethod
    def zero(cls, variables):
        return cls._raw({}, tuple(variables))

    @classmethod
    def constant(cls, c, variables):
        variables = tuple(variables)
        c = _as_fraction(c)
        return cls._raw({(0,) * len(variables): c} if c else {}, variables)

    @classmethod
    def variable(cls, name, variables):
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(int(j == i) for j in range(len(variables)))
        return cls._raw({exp: Fraction(1)}, variables)

    @classmethod
    def monomial(cls, exp, variables, coeff=1):
        return cls({tuple(exp): coeff}, variables)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def variables(self):
        return self._vars

    @property
    def nvars(self):
        return len(self._vars)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def monomials(self):
        return list(self._terms)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._vars != self._vars:
                raise VariableMismatch(
                    f"variable lists differ: {list(self._vars)} vs {list(other._vars)}")
            return other
        if isinstance(other, (int, _RationalABC)):
            return Polynomial.constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self._vars)
        return Polynomial._raw({e: c * v for e, v in self._terms.items()}, self._vars)

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c}, self._vars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, _RationalABC)):
            return self == Polynomial.constant(other, self._vars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def partial_derivative(self, i):
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[d] = c * e[i]
        return Polynomial._raw(out, self._vars)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, {list(self._vars)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, key=lambda e: (sum(e), e), reverse=True):
            c = self._terms[exp]
            mono = format_monomial(exp, self._vars)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def format_monomial(exp, variables):
    factors = []
    for name, e in zip(variables, exp):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def partial_derivative(f, i):
    return f.partial_derivative(i)


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def negate(f):
    return -f


def scale(c, f):
    return f.scale(c)
