"""Buchberger's algorithm over Q with a weighted degree-reverse-lex order.

Internally polynomials are plain ``{exponent_tuple: Fraction}`` dicts; the
public functions accept and return :class:`~qhspectrum.poly.Polynomial`.
"""

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LengthMismatch, NonZeroDimensional, VariableMismatch, ZeroIdeal
from .poly import Polynomial


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degree first, ties broken by graded reverse lex.

    The tie-break compares total degree, then declares the monomial with the
    smaller exponent in the last differing variable to be the larger one.
    """

    weights: tuple

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if not w or any(a <= 0 for a in w):
            raise ValueError(f"order weights must be positive integers, got {self.weights}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def standard(cls, nvars):
        return cls((1,) * nvars)

    def degree(self, exp):
        return sum(a * e for a, e in zip(self.weights, exp))

    def key(self, exp):
        if len(exp) != len(self.weights):
            raise LengthMismatch(f"exponent {tuple(exp)} has length {len(exp)}, "
                                 f"order has {len(self.weights)} weights")
        return (self.degree(exp), sum(exp), tuple(-e for e in reversed(exp)))

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def compare(order, a, b):
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise LengthMismatch(f"cannot compare exponents of lengths {len(a)} and {len(b)}")
    return order.compare(a, b)


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: MonomialOrder
    variables: tuple = field(default=())

    def leading_terms(self):
        return [leading_monomial(g, self.order) for g in self.generators]

    def is_unit(self):
        return any(sum(lt) == 0 for lt in self.leading_terms())

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


@dataclass(frozen=True)
class StaircaseBasis:
    monomials: tuple

    @property
    def dimension(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __len__(self):
        return len(self.monomials)


def leading_monomial(f, order):
    terms = f.terms if isinstance(f, Polynomial) else f
    return max(terms, key=order.key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p, lt):
    c = p[lt]
    if c == 1:
        return p
    inv = 1 / c
    return {e: v * inv for e, v in p.items()}


def _sub_multiple(p, g, shift, c):
    # p -= c * x^shift * g, in place
    for e, v in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        s = p.get(m, 0) - c * v
        if s:
            p[m] = s
        else:
            p.pop(m, None)


def _reduce(f, basis, lts, key):
    """Full normal form of dict ``f`` modulo monic dicts ``basis``."""
    p = dict(f)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g, lt in zip(basis, lts):
            if _divides(lt, m):
                _sub_multiple(p, g, tuple(x - y for x, y in zip(m, lt)), c)
                break
        else:
            r[m] = c
            del p[m]
    return r


def _spoly(f, g, lf, lg):
    L = _lcm(lf, lg)
    p = {}
    _sub_multiple(p, f, tuple(x - y for x, y in zip(L, lf)), -1)
    _sub_multiple(p, g, tuple(x - y for x, y in zip(L, lg)), 1)
    return p


def _check_vars(polys, variables=None):
    vs = variables if variables is not None else polys[0].variables
    for p in polys:
        if p.variables != tuple(vs):
            raise VariableMismatch(f"variable lists differ: {list(p.variables)} vs {list(vs)}")
    return tuple(vs)


def normal_form(f, G):
    """Reduce ``f`` completely modulo the Groebner basis ``G``."""
    if G.variables and f.variables != G.variables:
        raise VariableMismatch(f"variable lists differ: {list(f.variables)} vs {list(G.variables)}")
    if f.nvars != len(G.order.weights):
        raise VariableMismatch(f"{f.nvars} variables but order has {len(G.order.weights)} weights")
    basis = [dict(g.terms) for g in G.generators]
    lts = [leading_monomial(g, G.order) for g in basis]
    return Polynomial._raw(_reduce(f.terms, basis, lts, G.order.key), f.variables)


def s_polynomial(f, g, order):
    lf, lg = leading_monomial(f, order), leading_monomial(g, order)
    fm = _monic(dict(f.terms), lf)
    gm = _monic(dict(g.terms), lg)
    return Polynomial._raw(_spoly(fm, gm, lf, lg), f.variables)


def buchberger(generators, order):
    """Reduced Groebner basis of the ideal spanned by ``generators``.

    Pairs are processed by the normal strategy (smallest weighted degree of
    the lcm, then insertion order) with Buchberger's product and chain
    criteria.  The output is fully inter-reduced, monic, and sorted by
    ascending leading monomial.
    """
    generators = list(generators)
    if not generators:
        raise ZeroIdeal("empty generator list")
    variables = _check_vars(generators)
    if len(variables) != len(order.weights):
        raise VariableMismatch(f"{len(variables)} variables but order has "
                               f"{len(order.weights)} weights")
    key = order.key
    nonzero = [dict(g.terms) for g in generators if g]
    if not nonzero:
        raise ZeroIdeal("all generators are zero")

    G, LT = [], []
    pairs, pending = [], set()
    counter = itertools.count()

    def insert(h):
        lt = max(h, key=key)
        h = _monic(h, lt)
        j = len(G)
        G.append(h)
        LT.append(lt)
        for i in range(j):
            pending.add((i, j))
            heapq.heappush(pairs, (order.degree(_lcm(LT[i], lt)), next(counter), i, j))
        return sum(lt) == 0

    unit = False
    for g in nonzero:
        h = _reduce(g, G, LT, key)
        if h and insert(h):
            unit = True
            break

    while pairs and not unit:
        _, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        li, lj = LT[i], LT[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        L = _lcm(li, lj)
        if any(k != i and k != j and _divides(LT[k], L)
               and (min(i, k), max(i, k)) not in pending
               and (min(j, k), max(j, k)) not in pending
               for k in range(len(G))):
            continue
        h = _reduce(_spoly(G[i], G[j], li, lj), G, LT, key)
        if h and insert(h):
            unit = True

    if unit:
        one = {(0,) * len(variables): Fraction(1)}
        return GroebnerBasis((Polynomial._raw(one, variables),), order, variables)

    # minimalize: drop generators whose leading monomial is divisible by another's
    keep = []
    for i, lt in enumerate(LT):
        if any(_divides(LT[k], lt) and (LT[k] != lt or k < i) for k in range(len(G)) if k != i):
            continue
        keep.append(i)
    basis = [G[i] for i in keep]
    lts = [LT[i] for i in keep]
    reduced = []
    for idx, g in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        other_lts = lts[:idx] + lts[idx + 1:]
        h = _reduce(g, others, other_lts, key)
        reduced.append(_monic(h, lts[idx]))
    order_idx = sorted(range(len(reduced)), key=lambda t: key(lts[t]))
    gens = tuple(Polynomial._raw(reduced[t], variables) for t in order_idx)
    return GroebnerBasis(gens, order, variables)


def is_groebner_basis(G):
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gens = list(G.generators)
    for f, g in itertools.combinations(gens, 2):
        if normal_form(s_polynomial(f, g, G.order), G):
            return False
    return True


def is_reduced(G):
    lts = G.leading_terms()
    for i, g in enumerate(G.generators):
        if g.coefficient(lts[i]) != 1:
            return False
        for m in g.terms:
            for k, lt in enumerate(lts):
                if k != i and _divides(lt, m):
                    return False
    return True


def staircase(G):
    """Standard monomials of a zero-dimensional ideal, ascending in the order.

    Raises :class:`NonZeroDimensional` naming every variable that has no pure
    power among the leading monomials.
    """
    lts = G.leading_terms()
    nv = len(G.order.weights)
    if any(sum(lt) == 0 for lt in lts):
        return StaircaseBasis(())
    bounds = [None] * nv
    for lt in lts:
        support = [i for i, e in enumerate(lt) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lt[i] < bounds[i]:
                bounds[i] = lt[i]
    missing = [i for i, b in enumerate(bounds) if b is None]
    if missing:
        names = [G.variables[i] for i in missing] if G.variables else None
        raise NonZeroDimensional(missing, names)
    mixed = [lt for lt in lts if sum(1 for e in lt if e) > 1]
    mons = [m for m in itertools.product(*(range(b) for b in bounds))
            if not any(_divides(lt, m) for lt in mixed)]
    mons.sort(key=G.order.key)
    return StaircaseBasis(tuple(mons))
