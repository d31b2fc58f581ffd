"""Command-line front end.

Exit codes: 0 ok, 1 check/expect failure, 2 input error, 3 non-isolated
singularity, 4 internal invariant violation.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from importlib import resources

from .errors import (InputError, InternalInvariantError, NonIsolatedSingularity,
                     QHSpectrumError)
from .parser import parse_polynomial
from .pipeline import analyze
from .singularity import WeightSystem
from .spectrum import (brieskorn_pham_weights, spectrum_oracle_brieskorn_pham,
                       spectrum_oracle_product)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NONISOLATED, EXIT_INTERNAL = 0, 1, 2, 3, 4


class CorpusError(Exception):
    pass


def _csv_ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv_names(text):
    return [x.strip() for x in text.split(",") if x.strip()]


def _q(x):
    return None if x is None else str(x)


def report_document(analysis, name=None, include_spectrum=True):
    r = analysis.report
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["mu"] = r.mu
    doc["weights"] = list(analysis.ws.a)
    doc["degree"] = analysis.ws.d
    if include_spectrum:
        doc["spectrum"] = [{"alpha": _q(a), "mult": m} for a, m in analysis.spectrum]
    doc["alpha_tilde"] = _q(r.alpha_tilde)
    doc["s"] = list(r.s)
    doc["max_du_bois"] = r.max_du_bois
    doc["max_rational"] = r.max_rational
    doc["liminal_k"] = r.liminal_k
    doc["flags"] = sorted(r.flags)
    doc["checks"] = [{"id": c.check_id, "passed": c.passed, "detail": c.detail}
                     for c in analysis.checks]
    return doc


def format_report(analysis, name=None, include_spectrum=True):
    r = analysis.report
    lines = []
    if name:
        lines.append(f"name:           {name}")
    lines.append(f"weights:        a=({','.join(map(str, analysis.ws.a))}) d={analysis.ws.d}")
    lines.append(f"n:              {r.n}")
    lines.append(f"mu:             {r.mu}")
    if include_spectrum:
        lines.append(f"spectrum:       {analysis.spectrum}")
    lines.append(f"alpha_tilde:    {_q(r.alpha_tilde) or '-'}")
    lines.append(f"s:              ({', '.join(map(str, r.s))})")
    lines.append(f"classification: {r.describe()}")
    if r.flags:
        lines.append(f"flags:          {', '.join(sorted(r.flags))}")
    for c in analysis.checks:
        lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.check_id}: {c.detail}")
    return "\n".join(lines)


def _error_exit(exc):
    if isinstance(exc, NonIsolatedSingularity):
        print(str(exc), file=sys.stderr)
        return EXIT_NONISOLATED
    if isinstance(exc, InternalInvariantError):
        print(f"internal-invariant: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(f"input-error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_INPUT


def _weights_from_args(args):
    if (args.weights is None) != (args.degree is None):
        raise InputError("--weights and --degree must be given together")
    if args.weights is None:
        return None
    return WeightSystem(tuple(args.weights), args.degree)


def cmd_compute(args, include_spectrum=True):
    try:
        f = parse_polynomial(args.poly, args.vars)
        analysis = analyze(f, _weights_from_args(args))
    except (QHSpectrumError, ValueError) as exc:
        return _error_exit(exc)
    if args.json:
        print(json.dumps(report_document(analysis, include_spectrum=include_spectrum)))
    else:
        print(format_report(analysis, include_spectrum=include_spectrum))
    return EXIT_OK


def cmd_classify(args):
    return cmd_compute(args, include_spectrum=False)


# corpus handling

def load_corpus(path=None):
    if path is None:
        text = resources.files("qhspectrum").joinpath("data/corpus.jsonl").read_text()
        source = "built-in corpus"
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CorpusError(f"cannot read corpus {path}: {exc}")
        source = path
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{source}:{lineno}: invalid JSON: {exc}")
        if not isinstance(rec, dict) or "poly" not in rec or "vars" not in rec:
            raise CorpusError(f"{source}:{lineno}: record needs 'poly' and 'vars'")
        if ("weights" in rec) != ("degree" in rec):
            raise CorpusError(f"{source}:{lineno}: 'weights' and 'degree' must appear together")
        rec.setdefault("name", f"record{lineno}")
        records.append(rec)
    if not records:
        raise CorpusError(f"{source}: no records")
    return records


def brieskorn_pham_exponents(f):
    """Exponents c if f is a sum of pure powers, one per variable; else None."""
    c = [None] * f.nvars
    for exp in f.terms:
        support = [i for i, e in enumerate(exp) if e]
        if len(support) != 1 or c[support[0]] is not None:
            return None
        c[support[0]] = exp[support[0]]
    if any(x is None or x < 2 for x in c):
        return None
    return c


def _compare(label, expected, actual):
    if expected == actual:
        return True, f"{label} = {actual}"
    return False, f"{label}: expected {expected}, got {actual}"


def verify_record(rec):
    """Run pipeline, property suite, oracles and expect values on one record."""
    name = rec["name"]
    outcomes = []
    try:
        f = parse_polynomial(rec["poly"], rec["vars"])
        ws = WeightSystem(tuple(rec["weights"]), rec["degree"]) if "weights" in rec else None
        analysis = analyze(f, ws)
    except NonIsolatedSingularity as exc:
        return name, None, [("pipeline", False, str(exc))]
    except (QHSpectrumError, ValueError, TypeError) as exc:
        return name, None, [("pipeline", False, f"{type(exc).__name__}: {exc}")]
    for c in analysis.checks:
        outcomes.append((c.check_id, c.passed, c.detail))
    spec = analysis.spectrum
    outcomes.append(("oracle_product", *_compare("product-oracle spectrum",
                                                 spectrum_oracle_product(analysis.ws), spec)))
    c = brieskorn_pham_exponents(f)
    if c is not None:
        outcomes.append(("oracle_bp", *_compare("Brieskorn-Pham spectrum",
                                                spectrum_oracle_brieskorn_pham(c), spec)))
    r = analysis.report
    actual = {"mu": r.mu, "alpha_tilde": r.alpha_tilde, "max_du_bois": r.max_du_bois,
              "max_rational": r.max_rational, "liminal_k": r.liminal_k}
    for key, want in (rec.get("expect") or {}).items():
        if key not in actual:
            outcomes.append((f"expect_{key}", False, f"unknown expect key {key!r}"))
            continue
        if key == "alpha_tilde" and want is not None:
            want = Fraction(want)
        outcomes.append((f"expect_{key}", *_compare(key, want, actual[key])))
    return name, analysis, outcomes


def _verify_worker(rec):
    name, analysis, outcomes = verify_record(rec)
    return name, (report_document(analysis, name) if analysis else None), outcomes


def cmd_verify(args):
    try:
        records = load_corpus(args.corpus)
    except CorpusError as exc:
        print(f"corpus-error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_worker, records))
    else:
        results = [_verify_worker(r) for r in records]
    failures = 0
    docs = []
    for name, doc, outcomes in results:
        bad = [o for o in outcomes if not o[1]]
        failures += bool(bad)
        if args.json:
            docs.append({"name": name, "report": doc,
                         "outcomes": [{"id": i, "passed": p, "detail": d}
                                      for i, p, d in outcomes]})
            continue
        status = "ok" if not bad else "FAIL"
        print(f"{status:4} {name}: {len(outcomes) - len(bad)}/{len(outcomes)} checks passed")
        for cid, _, detail in bad:
            print(f"     [FAIL] {cid}: {detail}")
    if args.json:
        print(json.dumps({"records": docs, "total": len(results), "failed": failures}))
    else:
        print(f"{len(results) - failures}/{len(results)} records passed")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_oracle_compare(args):
    try:
        if args.bp is not None and args.weights is not None:
            raise InputError("give either --bp or --weights/--degree, not both")
        spectra = []
        explicit = ws = _weights_from_args(args)
        if args.bp is not None:
            bp = spectrum_oracle_brieskorn_pham(args.bp)
            ws = brieskorn_pham_weights(args.bp)
            spectra.append(("brieskorn-pham", bp))
        if ws is not None:
            spectra.append(("product", spectrum_oracle_product(ws)))
        if args.poly is not None:
            if not args.vars:
                raise InputError("--poly needs --vars")
            f = parse_polynomial(args.poly, args.vars)
            analysis = analyze(f, explicit)
            if ws is None:
                spectra.append(("product", spectrum_oracle_product(analysis.ws)))
            spectra.append(("engine", analysis.spectrum))
        if not spectra:
            raise InputError("nothing to compare: give --bp, --weights/--degree or --poly")
    except (QHSpectrumError, ValueError) as exc:
        return _error_exit(exc)

    for label, spec in spectra:
        if args.json:
            continue
        print(f"{label:15} mass {spec.mass:>4}  {spec}")
    ref_label, ref = spectra[0]
    disagreement = None
    for label, spec in spectra[1:]:
        if spec != ref:
            a, b = ref.as_dict(), spec.as_dict()
            first = min(x for x in set(a) | set(b) if a.get(x, 0) != b.get(x, 0))
            disagreement = (ref_label, label, first, a.get(first, 0), b.get(first, 0))
            break
    if args.json:
        print(json.dumps({
            "spectra": {label: [{"alpha": _q(a), "mult": m} for a, m in spec]
                        for label, spec in spectra},
            "identical": disagreement is None}))
    if disagreement:
        r, l, alpha, mr, ml = disagreement
        print(f"disagreement: first differing alpha {alpha}: {r} has {mr}, {l} has {ml}",
              file=sys.stderr)
        return EXIT_FAIL
    if not args.json:
        print("identical")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qhspectrum",
        description="Spectrum, minimal exponent and higher Du Bois / rational "
                    "classification of quasi-homogeneous isolated hypersurface singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_args(p, required=True):
        p.add_argument("--poly", required=required, help="polynomial, e.g. 'x^3+y^3+z^3'")
        p.add_argument("--vars", type=_csv_names, required=required, help="variables, e.g. x,y,z")
        p.add_argument("--weights", type=_csv_ints, help="integer weights a_1,...,a_{n+1}")
        p.add_argument("--degree", type=int, help="weighted degree d")
        p.add_argument("--json", action="store_true", help="emit a JSON document")

    p = sub.add_parser("compute", help="full report including the spectrum")
    poly_args(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="report without the spectrum listing")
    poly_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run every check over a JSON-lines corpus")
    p.add_argument("--corpus", help="corpus path (default: built-in corpus)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-compare", help="compare oracle and engine spectra")
    poly_args(p, required=False)
    p.add_argument("--bp", type=_csv_ints, help="Brieskorn-Pham exponents c_1,...,c_{n+1}")
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
