"""Weight systems, the Jacobian ideal and the Milnor algebra."""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (AmbiguousWeights, ConstantTerm, InputError, MilnorOrlikMismatch,
                     NonIsolatedSingularity, NonZeroDimensional, NotQuasiHomogeneous)
from .groebner import GroebnerBasis, MonomialOrder, StaircaseBasis, buchberger, staircase
from .poly import Polynomial, format_monomial


@dataclass(frozen=True)
class WeightSystem:
    """Integer weights ``a`` and degree ``d``; normalized so gcd(a, d) = 1.

    ``a_i = d`` is allowed: it means ``f`` is linear in that variable, so the
    origin is a smooth point and the pipeline reports mu = 0.
    """

    a: tuple
    d: int

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        d = int(self.d)
        if not a:
            raise InputError("weight system needs at least one weight")
        if d <= 0 or any(x <= 0 for x in a):
            raise InputError(f"weights and degree must be positive: a={a}, d={d}")
        if any(x > d for x in a):
            raise InputError(f"every weight must satisfy a_i <= d: a={a}, d={d}")
        g = math.gcd(d, *a)
        object.__setattr__(self, "a", tuple(x // g for x in a))
        object.__setattr__(self, "d", d // g)

    @property
    def w(self):
        return tuple(Fraction(x, self.d) for x in self.a)

    @property
    def nvars(self):
        return len(self.a)

    @property
    def n(self):
        return len(self.a) - 1

    def degree_of(self, exp):
        return sum(x * e for x, e in zip(self.a, exp))

    def milnor_orlik(self):
        """prod (d - a_i)/a_i: the Milnor number predicted by the weights alone."""
        mu = Fraction(1)
        for x in self.a:
            mu *= Fraction(self.d - x, x)
        return mu

    def order(self):
        return MonomialOrder(self.a)

    def __str__(self):
        return f"({','.join(map(str, self.a))};{self.d})"


@dataclass(frozen=True)
class MilnorData:
    f: Polynomial
    ws: WeightSystem
    groebner: GroebnerBasis
    basis: StaircaseBasis
    mu: int

    @property
    def smooth(self):
        return self.mu == 0


def _check_nonconstant(f):
    if f.is_zero():
        raise InputError("the zero polynomial does not define a hypersurface")
    if f.constant_term():
        raise ConstantTerm(f"f(0) = {f.constant_term()} != 0: the origin is not on the hypersurface")


def check_quasi_homogeneous(f, ws):
    """Return ``ws.d`` if every monomial of ``f`` has weighted degree ``d``."""
    _check_nonconstant(f)
    if f.nvars != ws.nvars:
        raise InputError(f"{f.nvars} variables but {ws.nvars} weights")
    for exp in sorted(f.terms, key=_diagnosis_key):
        deg = ws.degree_of(exp)
        if deg != ws.d:
            mono = format_monomial(exp, f.variables)
            raise NotQuasiHomogeneous(
                f"not quasi-homogeneous: monomial {mono} has weighted degree {deg}, "
                f"expected {ws.d} for weights {ws}", mono, deg)
    return ws.d


def _nullspace(rows, ncols):
    """Basis of the rational nullspace of ``rows`` (Gauss-Jordan)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                fac = m[i][c]
                m[i] = [x - fac * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def _diagnosis_key(exp):
    # pure powers first: they pin the weights, so a later misfit is named
    return (sum(1 for e in exp if e), -sum(exp), exp)


def _weight_rows(monomials):
    # unknowns (a_1, ..., a_{n+1}, d): sum alpha_i a_i - d = 0
    return [list(e) + [-1] for e in monomials]


def _integral_positive(v):
    """Scale a rational vector to primitive integers; None unless all positive."""
    if all(x < 0 for x in v):
        v = [-x for x in v]
    if not all(x > 0 for x in v):
        return None
    lcm = math.lcm(*(x.denominator for x in v))
    ints = [int(x * lcm) for x in v]
    g = math.gcd(*ints)
    return [x // g for x in ints]


def infer_weights(f):
    """Unique normalized weight system making ``f`` quasi-homogeneous."""
    _check_nonconstant(f)
    nv = f.nvars
    monomials = sorted(f.terms, key=_diagnosis_key)
    ns = _nullspace(_weight_rows(monomials), nv + 1)
    if len(ns) == 1:
        ints = _integral_positive(ns[0])
        if ints is not None:
            return WeightSystem(tuple(ints[:-1]), ints[-1])
    elif len(ns) >= 2:
        raise AmbiguousWeights(
            f"weights are not determined by the monomials of f "
            f"({len(ns)}-dimensional solution space); supply --weights and --degree")
    _raise_offender(f, monomials)


def _raise_offender(f, monomials):
    # find the first monomial after which no positive weight system fits
    prefix = []
    last_ws = None
    for exp in monomials:
        prefix.append(exp)
        ns = _nullspace(_weight_rows(prefix), f.nvars + 1)
        fits = len(ns) >= 2 or (len(ns) == 1 and _integral_positive(ns[0]) is not None)
        if not fits:
            mono = format_monomial(exp, f.variables)
            if last_ws is not None:
                deg = last_ws.degree_of(exp)
                raise NotQuasiHomogeneous(
                    f"not quasi-homogeneous: monomial {mono} has weighted degree {deg}, "
                    f"expected {last_ws.d} for weights {last_ws} fitted to the other monomials",
                    mono, deg)
            raise NotQuasiHomogeneous(
                f"not quasi-homogeneous: no positive weights fit monomial {mono} "
                f"together with the preceding ones", mono)
        if len(ns) == 1:
            ints = _integral_positive(ns[0])
            last_ws = WeightSystem(tuple(ints[:-1]), ints[-1])
    raise NotQuasiHomogeneous("not quasi-homogeneous: no positive weight system exists")


def jacobian_ideal(f):
    return [f.partial_derivative(i) for i in range(f.nvars)]


def milnor_data(f, ws):
    """Groebner basis, staircase basis and Milnor number of ``f``."""
    check_quasi_homogeneous(f, ws)
    gens = jacobian_ideal(f)
    G = buchberger(gens, ws.order())
    try:
        basis = staircase(G)
    except NonZeroDimensional as exc:
        raise NonIsolatedSingularity(exc.missing, exc.names) from None
    mu = basis.dimension
    expected = ws.milnor_orlik()
    if mu != expected:
        raise MilnorOrlikMismatch(
            f"staircase has {mu} monomials but prod (d-a_i)/a_i = {expected} for weights {ws}")
    return MilnorData(f, ws, G, basis, mu)
