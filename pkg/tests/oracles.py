"""Independent oracles for the test-suite.

Nothing here touches the Groebner engine: quotient dimensions come from
sympy's exact rank of Macaulay-style matrices.
"""

import itertools

import sympy


def monomials_of_weighted_degree(weights, D):
    """All exponent vectors with sum a_i * e_i == D (brute force)."""
    ranges = [range(D // a + 1) for a in weights]
    return [e for e in itertools.product(*ranges)
            if sum(a * x for a, x in zip(weights, e)) == D]


def monomials_up_to_degree(nvars, D):
    return [e for e in itertools.product(range(D + 1), repeat=nvars) if sum(e) <= D]


def _rank(rows, columns):
    if not rows or not columns:
        return 0
    index = {m: j for j, m in enumerate(columns)}
    mat = sympy.zeros(len(rows), len(columns))
    for i, row in enumerate(rows):
        for m, c in row.items():
            mat[i, index[m]] = sympy.Rational(c.numerator, c.denominator)
    return mat.rank()


def _shift(poly_terms, shift):
    return {tuple(x + y for x, y in zip(e, shift)): c for e, c in poly_terms.items()}


def graded_quotient_dimension(generators, weights):
    """dim_Q of Q[z]/I for an ideal generated by weighted-homogeneous polynomials.

    Sums the dimension of every graded piece.  Stops once max(weights)
    consecutive pieces vanish: every monomial of larger degree is then a
    multiple of one in that window.  Returns None if the quotient looks
    infinite (no vanishing window below a safety cap).
    """
    gens = [dict(g.terms) for g in generators if g]
    gdeg = [sum(a * x for a, x in zip(weights, next(iter(g)))) for g in gens]
    window = max(weights)
    total, zeros, D = 0, 0, 0
    cap = 40 * window + max(gdeg, default=0)
    while zeros < window:
        if D > cap:
            return None
        cols = monomials_of_weighted_degree(weights, D)
        rows = []
        for g, dg in zip(gens, gdeg):
            if dg <= D:
                for m in monomials_of_weighted_degree(weights, D - dg):
                    rows.append(_shift(g, m))
        piece = len(cols) - _rank(rows, cols)
        total += piece
        zeros = zeros + 1 if piece == 0 else 0
        D += 1
    return total


def truncated_quotient_dimension(generators, nvars, D):
    """dim R_{<=D} - rank of {m*g : total degree <= D}."""
    gens = [dict(g.terms) for g in generators if g]
    cols = monomials_up_to_degree(nvars, D)
    rows = []
    for g in gens:
        dg = max(sum(e) for e in g)
        for m in monomials_up_to_degree(nvars, D - dg):
            rows.append(_shift(g, m))
    return len(cols) - _rank(rows, cols)
