"""End-to-end analysis: polynomial -> Milnor data -> spectrum -> report."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbiguousWeights, NotQuasiHomogeneous
from .invariants import classify, property_suite
from .parser import parse_polynomial
from .singularity import (WeightSystem, _integral_positive, check_quasi_homogeneous,
                          infer_weights, milnor_data)
from .spectrum import compute_spectrum


@dataclass(frozen=True)
class Analysis:
    milnor: object
    spectrum: object
    report: object
    checks: tuple

    @property
    def ws(self):
        return self.milnor.ws

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def positive_weight_witness(f):
    """Some positive weight system for ``f``, or None if none exists.

    Used only when the weights are not unique.  The LP solution is a search
    hint; the returned system is verified in exact arithmetic.
    """
    import numpy as np
    from scipy.optimize import linprog

    nv = f.nvars
    monos = list(f.terms)
    A = np.array([list(e) + [-1] for e in monos], dtype=float)
    res = linprog(c=np.ones(nv + 1), A_eq=A, b_eq=np.zeros(len(monos)),
                  bounds=[(1, None)] * (nv + 1), method="highs")
    if res.status == 2:
        return None
    if res.status != 0:
        raise AmbiguousWeights("could not determine a weight system; supply weights explicitly")
    v = [Fraction(x).limit_denominator(10**6) for x in res.x]
    ints = _integral_positive(v)
    if ints is None:
        raise AmbiguousWeights("could not determine a weight system; supply weights explicitly")
    try:
        ws = WeightSystem(tuple(ints[:-1]), ints[-1])
        check_quasi_homogeneous(f, ws)
    except (NotQuasiHomogeneous, ValueError):
        raise AmbiguousWeights("could not determine a weight system; supply weights explicitly")
    return ws


def resolve_weights(f, ws=None):
    """Return (weight system, whether it is the unique one)."""
    if ws is not None:
        check_quasi_homogeneous(f, ws)
        return ws, True
    try:
        return infer_weights(f), True
    except AmbiguousWeights as exc:
        witness = positive_weight_witness(f)
        if witness is None:
            raise NotQuasiHomogeneous(
                "not quasi-homogeneous: no positive weight system exists") from exc
        return witness, False


def analyze(f, ws=None):
    """Run the full pipeline on polynomial ``f`` (weights inferred if omitted).

    When the weights are not unique, a positive witness is still enough to
    decide isolatedness (the Jacobian ideal is graded for it); a non-isolated
    singularity is then reported as such, and an isolated one as ambiguous
    unless it is actually smooth.
    """
    ws, unique = resolve_weights(f, ws)
    md = milnor_data(f, ws)
    if not unique and not md.smooth:
        raise AmbiguousWeights(
            "weights are not determined by the monomials of f; supply --weights and --degree")
    spec = compute_spectrum(md)
    report = classify(spec, md.mu, ws.n)
    return Analysis(md, spec, report, tuple(property_suite(report, spec)))


def analyze_text(text, variables, weights=None, degree=None):
    if (weights is None) != (degree is None):
        raise ValueError("weights and degree must be given together")
    f = parse_polynomial(text, variables)
    ws = WeightSystem(tuple(weights), degree) if weights is not None else None
    return analyze(f, ws)
