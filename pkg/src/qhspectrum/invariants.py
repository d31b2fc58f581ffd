"""Hodge numbers s_p, the minimal exponent, and the k-Du Bois / k-rational
classification of an isolated quasi-homogeneous hypersurface singularity.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalInvariantError, SmoothPoint


@dataclass(frozen=True)
class InvariantReport:
    mu: int
    n: int
    alpha_tilde: Fraction | None
    s: tuple
    max_du_bois: int | None
    max_rational: int | None
    liminal_k: int | None
    flags: frozenset = field(default_factory=frozenset)

    @property
    def smooth(self):
        return "smooth" in self.flags

    @property
    def odp(self):
        return "odp" in self.flags

    def describe(self):
        if self.smooth:
            return "smooth point"
        parts = []
        parts.append("not Du Bois" if self.max_du_bois < 0 else f"{self.max_du_bois}-Du Bois")
        parts.append("not rational" if self.max_rational < 0 else f"{self.max_rational}-rational")
        if self.liminal_k is not None:
            parts.append(f"{self.liminal_k}-liminal")
        if self.odp:
            parts.append("ordinary double point")
        return ", ".join(parts)


@dataclass(frozen=True)
class PropertyOutcome:
    check_id: str
    passed: bool
    detail: str


def _s_from_left_buckets(spec):
    s = [0] * (spec.n + 1)
    for a, m in spec:
        p = math.floor(a)  # a in [p, p+1)
        s[p] += m
    return s


def _s_from_right_buckets(spec):
    # s_{n-p} = sum over alpha in (p, p+1]
    s = [0] * (spec.n + 1)
    for a, m in spec:
        p = math.ceil(a) - 1  # a in (p, p+1]
        s[spec.n - p] += m
    return s


def s_invariants(spec):
    """(s_0, ..., s_n) as bucket sums of the spectrum over [p, p+1).

    The mirrored (p, p+1] bucketing is computed as well and must agree.
    """
    left = _s_from_left_buckets(spec)
    right = _s_from_right_buckets(spec)
    if left != right:
        raise InternalInvariantError(
            f"s via [p,p+1) buckets {left} differs from s via (p,p+1] buckets {right}")
    return tuple(left)


def minimal_exponent(spec):
    if not spec.entries:
        raise SmoothPoint("mu = 0: the minimal exponent is undefined at a smooth point")
    return spec.minimum()


def _threshold_route(alpha):
    # k-Du Bois iff alpha >= k+1; k-rational iff alpha > k+1
    max_du_bois = math.floor(alpha) - 1
    max_rational = math.ceil(alpha) - 2
    return max_du_bois, max_rational


def _vanishing_route(s):
    n = len(s) - 1

    def largest(pred):
        k = -1
        while k + 1 <= n and pred(k + 1):
            k += 1
        return k

    max_du_bois = largest(lambda k: all(s[p] == 0 for p in range(k + 1)))
    max_rational = largest(lambda k: all(s[n - p] == 0 for p in range(k + 1)))
    return max_du_bois, max_rational


def classify(spec, mu, n=None):
    n = spec.n if n is None else n
    s = s_invariants(spec)
    if sum(s) != mu:
        raise InternalInvariantError(f"sum of s_p = {sum(s)} != mu = {mu}")
    flags = set()
    if n < 2:
        flags.add("outside_paper_convention")
    if mu == 0:
        flags.add("smooth")
        return InvariantReport(mu, n, None, s, None, None, None, frozenset(flags))
    alpha = minimal_exponent(spec)
    by_alpha = _threshold_route(alpha)
    by_s = _vanishing_route(s)
    if by_alpha != by_s:
        raise InternalInvariantError(
            f"classification routes disagree: alpha-threshold {by_alpha} vs s-vanishing {by_s}")
    max_du_bois, max_rational = by_alpha
    liminal_k = int(alpha) - 1 if alpha.denominator == 1 else None
    if mu == 1:
        flags.add("odp")
    return InvariantReport(mu, n, alpha, s, max_du_bois, max_rational, liminal_k,
                           frozenset(flags))


def _sandwich(report):
    s, n = report.s, report.n
    bad = []
    for k in range(n + 1):
        lower = sum(s[n - p] for p in range(k))
        middle = sum(s[p] for p in range(k + 1))
        upper = sum(s[n - p] for p in range(k + 1))
        if not lower <= middle <= upper:
            bad.append(f"k={k}: {lower} <= {middle} <= {upper} fails")
    if bad:
        return False, "; ".join(bad)
    return True, f"holds for k = 0..{n}"


def _difference(report, spec):
    s, n = report.s, report.n
    bad = []
    for p in range(n + 1):
        lhs = s[n - p] - s[p]
        rhs = spec.multiplicity(p + 1) - spec.multiplicity(p)
        if lhs != rhs:
            bad.append(f"p={p}: s_{n - p} - s_{p} = {lhs} but m_{p + 1} - m_{p} = {rhs}")
    if bad:
        return False, "; ".join(bad)
    return True, f"s_(n-p) - s_p = m_(p+1) - m_p for p = 0..{n}"


def _multiplicity_one(report, spec):
    m = spec.multiplicity(report.alpha_tilde)
    return m == 1, f"m({report.alpha_tilde}) = {m}"


def _alpha_bound(report):
    half = Fraction(report.n + 1, 2)
    a = report.alpha_tilde
    ok = a <= half and ((a == half) == (report.mu == 1))
    return ok, f"alpha~ = {a}, (n+1)/2 = {half}, mu = {report.mu}"


def _smoothness_bound(report):
    s, n = report.s, report.n
    for k in range(n + 1):
        if 2 * k > n - 1 and all(s[p] == 0 for p in range(k + 1)):
            if report.mu != 0:
                return False, f"s_p = 0 for p <= {k} > (n-1)/2 but mu = {report.mu}"
            return True, f"antecedent holds at k={k} and mu = 0"
    return True, "antecedent never holds (vacuous)"


def _liminal_top(report):
    k = report.liminal_k
    if k is None:
        return True, "not liminal (vacuous)"
    v = report.s[report.n - k]
    return v == 1, f"{k}-liminal: s_{report.n - k} = {v}"


def _odd_rigidity(report):
    n = report.n
    if n % 2 == 0:
        return True, "n even (vacuous)"
    k = (n - 1) // 2
    if report.max_rational >= k:
        return False, f"n = {n}: {k}-rational singularity reported"
    if report.max_du_bois >= k:
        ok = report.mu == 1 and report.liminal_k == k
        return ok, f"n = {n}, {k}-Du Bois: mu = {report.mu}, liminal_k = {report.liminal_k}"
    return True, f"n = {n}: not {k}-Du Bois (vacuous)"


CHECKS = (
    ("a_sandwich", "sandwich inequalities on partial sums of s_p"),
    ("b_difference", "s_(n-p) - s_p = m_(p+1) - m_p"),
    ("c_multiplicity_one", "multiplicity of the minimal exponent is 1"),
    ("d_alpha_bound", "alpha~ <= (n+1)/2 with equality iff mu = 1"),
    ("e_smoothness_bound", "vanishing s_p up to k > (n-1)/2 forces smoothness"),
    ("f_liminal_top", "k-liminal implies s_(n-k) = 1"),
    ("g_odd_rigidity", "odd n = 2k+1: k-Du Bois forces an ODP"),
)


def property_suite(report, spec):
    """Run every numerical check; failures are returned, never raised."""
    outcomes = []

    def run(check_id, fn, *args):
        try:
            passed, detail = fn(*args)
        except Exception as exc:  # a crash inside a check is a failed check
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        outcomes.append(PropertyOutcome(check_id, bool(passed), detail))

    run("a_sandwich", _sandwich, report)
    run("b_difference", _difference, report, spec)
    run("e_smoothness_bound", _smoothness_bound, report)
    if report.smooth:
        for cid in ("c_multiplicity_one", "d_alpha_bound", "f_liminal_top", "g_odd_rigidity"):
            outcomes.append(PropertyOutcome(cid, True, "smooth"))
    else:
        run("c_multiplicity_one", _multiplicity_one, report, spec)
        run("d_alpha_bound", _alpha_bound, report)
        run("f_liminal_top", _liminal_top, report)
        run("g_odd_rigidity", _odd_rigidity, report)
    order = [cid for cid, _ in CHECKS]
    return sorted(outcomes, key=lambda o: order.index(o.check_id))
