"""Spectra of quasi-homogeneous isolated singularities.

Spectral numbers use the +1-shifted normalization, so they lie in (0, n+1)
and are symmetric about (n+1)/2.  A basis monomial ``z^alpha`` of the Milnor
algebra contributes the spectral number ``sum (alpha_i + 1) * a_i / d``.
"""

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import LengthMismatch, MassViolation, SpectrumRangeViolation, SymmetryViolation


@dataclass(frozen=True)
class Spectrum:
    """Sorted ``(alpha, multiplicity)`` pairs plus the singularity dimension n."""

    entries: tuple
    n: int

    @classmethod
    def from_values(cls, values, n):
        counts = Counter(Fraction(v) for v in values)
        return cls(tuple(sorted(counts.items())), n)

    @classmethod
    def from_mapping(cls, mapping, n):
        return cls(tuple(sorted((Fraction(a), int(m)) for a, m in mapping.items() if m)), n)

    def as_dict(self):
        return dict(self.entries)

    def multiplicity(self, alpha):
        return self.as_dict().get(Fraction(alpha), 0)

    @property
    def mass(self):
        return sum(m for _, m in self.entries)

    @property
    def support(self):
        return [a for a, _ in self.entries]

    def minimum(self):
        return self.entries[0][0] if self.entries else None

    def maximum(self):
        return self.entries[-1][0] if self.entries else None

    def check(self, mu=None):
        """Assert range, symmetry and (optionally) total mass; raise on failure."""
        top = self.n + 1
        for a, m in self.entries:
            if not 0 < a < top:
                raise SpectrumRangeViolation(f"spectral number {a} outside (0, {top})")
            if m <= 0:
                raise SpectrumRangeViolation(f"nonpositive multiplicity {m} at {a}")
        d = self.as_dict()
        for a, m in self.entries:
            if d.get(top - a, 0) != m:
                raise SymmetryViolation(
                    f"m({a}) = {m} but m({top - a}) = {d.get(top - a, 0)}")
        if mu is not None and self.mass != mu:
            raise MassViolation(f"spectrum mass {self.mass} != mu = {mu}")
        return self

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "{" + ", ".join(f"{a}: {m}" for a, m in self.entries) + "}"


def spectral_number(alpha, ws):
    """sum (alpha_i + 1) * w_i for the monomial with exponent vector ``alpha``."""
    if len(alpha) != ws.nvars:
        raise LengthMismatch(f"exponent {tuple(alpha)} has length {len(alpha)}, "
                             f"weight system has {ws.nvars} weights")
    return Fraction(sum((e + 1) * x for e, x in zip(alpha, ws.a)), ws.d)


def compute_spectrum(md):
    spec = Spectrum.from_values((spectral_number(m, md.ws) for m in md.basis), md.ws.n)
    return spec.check(md.mu)


def spectrum_oracle_brieskorn_pham(c, n=None):
    """Enumerate sum (alpha_i + 1)/c_i over 0 <= alpha_i <= c_i - 2."""
    c = [int(x) for x in c]
    if n is None:
        n = len(c) - 1
    if len(c) != n + 1:
        raise ValueError(f"need n+1 = {n + 1} exponents, got {len(c)}")
    if any(x < 2 for x in c):
        raise ValueError(f"Brieskorn-Pham exponents must be >= 2, got {c}")
    values = (sum(Fraction(e + 1, ci) for e, ci in zip(alpha, c))
              for alpha in itertools.product(*(range(ci - 1) for ci in c)))
    return Spectrum.from_values(values, n)


def brieskorn_pham_weights(c):
    from .singularity import WeightSystem

    d = math.lcm(*c)
    return WeightSystem(tuple(d // x for x in c), d)


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    # integer long division; den has leading coefficient +-1
    num = list(num)
    lead = den[-1]
    qlen = len(num) - len(den) + 1
    if qlen <= 0:
        if any(num):
            raise ValueError("generating function is not a polynomial")
        return [0]
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ValueError("generating function is not a polynomial")
        c //= lead
        quot[k] = c
        if c:
            for j, y in enumerate(den):
                num[k + j] -= c * y
    if any(num):
        raise ValueError("generating function is not a polynomial: weights cannot "
                         "come from an isolated singularity")
    return quot


def spectrum_oracle_product(ws):
    """Spectrum from the generating function prod (t - t^w_i)/(t^w_i - 1).

    With u = t^(1/d) the product is u^(sum a_i) * prod (1 - u^(d-a_i)) /
    prod (1 - u^(a_i)), expanded with exact integer arithmetic.
    """
    d = ws.d
    num = [0] * sum(ws.a) + [1]
    for a in ws.a:
        factor = [0] * (d - a + 1)
        factor[0] += 1
        factor[d - a] -= 1
        num = _poly_mul(num, factor)
    for a in ws.a:
        den = [0] * (a + 1)
        den[0] = 1
        den[a] = -1
        num = _poly_divexact(num, den)
    if any(c < 0 for c in num):
        raise ValueError(f"negative multiplicity from weights {ws}: not an isolated singularity")
    return Spectrum.from_mapping({Fraction(k, d): c for k, c in enumerate(num) if c}, ws.n)
