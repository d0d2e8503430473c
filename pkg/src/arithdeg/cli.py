"""Command-line frontend.

    arithdeg run -i script.ses [--json out.json] [--order degrevlex]
                 [--max-deg N] [--max-basis N] [--timings] [--parallel K]
    arithdeg corpus [--json out.json] [--csv out.csv] [--parallel K]
    arithdeg check

Exit codes: 0 success, 1 usage or parse errors, 2 theorem violation (an
implementation bug: a reproducer script is written next to the output),
3 resource cap exceeded.
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .corpus import build_corpus
from .errors import (AlgebraError, ResourceLimitError, SessionSyntaxError,
                     NameResolutionError, TheoremViolationError)
from .runner import execute_script
from .session import parse_session

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_THEOREM = 2
EXIT_RESOURCE = 3


def _dump_json(data, path):
    text = json.dumps(data, indent=2, sort_keys=False)
    if path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _write_reproducer(script_text, label, err):
    path = "theorem-violation-%s.ses" % label.replace("/", "_").replace(",", "-")
    with open(path, "w") as fh:
        fh.write("# reproducer: %s\n" % err)
        fh.write(script_text)
    return path


def cmd_run(args):
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        print("cannot read %s: %s" % (args.input, exc), file=sys.stderr)
        return EXIT_USAGE
    try:
        script = parse_session(text)
    except (SessionSyntaxError, NameResolutionError) as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    if args.max_deg:
        script.options["max_degree"] = str(args.max_deg)
    if args.max_basis:
        script.options["max_basis"] = str(args.max_basis)
    try:
        result = execute_script(script, order_name=args.order,
                                collect_timings=args.timings,
                                parallel=args.parallel)
    except TheoremViolationError as exc:
        path = _write_reproducer(text, "run", exc)
        print("theorem violation (implementation bug): %s" % exc, file=sys.stderr)
        print("reproducer written to %s" % path, file=sys.stderr)
        return EXIT_THEOREM
    except ResourceLimitError as exc:
        print("resource cap exceeded: %s %r" % (exc, exc.diagnostics), file=sys.stderr)
        return EXIT_RESOURCE
    except AlgebraError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _dump_json(result, args.json)
    else:
        _dump_json(result, "-")
    return EXIT_OK


def _spot_check_basis(script):
    """Assert the Buchberger criterion on the first declared ideal's basis;
    runs with every corpus entry so no corpus run ships an unsound cache."""
    from .groebner import IdealHandle, normal_form, s_polynomial
    from .orders import DegRevLex
    if not script.ideal_order:
        return
    order = DegRevLex()
    I = IdealHandle(script.ring, script.ideals[script.ideal_order[0]])
    basis = list(I.groebner_basis(order))
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j], order), basis, order):
                raise AssertionError("S-polynomial of a returned basis did not "
                                     "reduce to zero")


def _run_entry(entry):
    script = entry.script()
    _spot_check_basis(script)
    result = execute_script(script)
    failures = []
    for exp in entry.expected:
        got = None
        for r in result["results"]:
            if r["task"] == exp["task"]:
                got = r["result"]
                break
        if got is None:
            failures.append("expected task %r missing" % exp["task"])
            continue
        node = got
        ok = True
        for key in exp["path"]:
            if isinstance(node, dict) and key in node:
                node = node[key]
            else:
                ok = False
                break
        if not ok or node != exp["value"]:
            failures.append("expected %s at %s = %r, got %r (%s)"
                            % (exp["task"], "/".join(map(str, exp["path"])),
                               exp["value"], node if ok else "<missing>",
                               exp["provenance"]))
    return entry.identifier, result, failures


def cmd_corpus(args):
    entries = build_corpus()
    outcomes = [None] * len(entries)
    violation = None
    resource = None

    def work(idx):
        entry = entries[idx]
        try:
            return idx, _run_entry(entry), None
        except Exception as exc:  # classified below, reported in order
            return idx, None, (entry, exc)

    if args.parallel > 1:
        with ThreadPoolExecutor(max_workers=args.parallel) as pool:
            for idx, ok, err in pool.map(work, range(len(entries))):
                outcomes[idx] = (ok, err)
    else:
        for idx in range(len(entries)):
            _, ok, err = work(idx)
            outcomes[idx] = (ok, err)

    rows = []
    summary = {"entries": [], "passed": 0, "failed": 0}
    all_results = []
    for idx, (ok, err) in enumerate(outcomes):
        entry = entries[idx]
        if err is not None:
            entry_obj, exc = err
            if isinstance(exc, TheoremViolationError) and violation is None:
                violation = (entry_obj, exc)
            elif isinstance(exc, ResourceLimitError) and resource is None:
                resource = (entry_obj, exc)
            summary["failed"] += 1
            summary["entries"].append({"id": entry.identifier, "passed": False,
                                       "error": str(exc)})
            rows.append((entry.identifier, "error", "", str(exc), "fail"))
            continue
        identifier, result, failures = ok
        passed = not failures
        verify_ok = all(
            r["result"].get("passed", True)
            for r in result["results"] if r["task"].startswith("verify"))
        passed = passed and verify_ok
        summary["passed" if passed else "failed"] += 1
        summary["entries"].append({
            "id": identifier,
            "passed": passed,
            "expected_failures": failures,
        })
        all_results.append({"id": identifier, "output": result})
        for r in result["results"]:
            res = r["result"]
            if "adeg" in res:
                for i, v in sorted(res["adeg"].items()):
                    rows.append((identifier, r["task"], i, v, "pass"))
            if "passed" in res:
                rows.append((identifier, r["task"], "",
                             "ok" if res["passed"] else "violation",
                             "pass" if res["passed"] else "fail"))
        for f in failures:
            rows.append((identifier, "expected", "", f, "fail"))

    payload = {
        "ring": "corpus",
        "tasks": [e.identifier for e in entries],
        "results": all_results,
        "timings": {},
        "provenance": {"summary": {"passed": summary["passed"],
                                   "failed": summary["failed"]}},
    }
    if args.json:
        _dump_json(payload, args.json)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("entry,task,i,value,status\n")
            for row in rows:
                fh.write(",".join(str(c).replace(",", ";") for c in row) + "\n")
    print("corpus: %d entries, %d passed, %d failed"
          % (len(entries), summary["passed"], summary["failed"]))
    for e in summary["entries"]:
        if not e["passed"]:
            print("  FAIL %s: %s" % (e["id"], e.get("error")
                                     or "; ".join(e["expected_failures"])))
    if violation is not None:
        entry_obj, exc = violation
        path = _write_reproducer(entry_obj.script_text, entry_obj.identifier, exc)
        print("theorem violation in %s (bug); reproducer at %s"
              % (entry_obj.identifier, path), file=sys.stderr)
        return EXIT_THEOREM
    if resource is not None:
        print("resource cap exceeded in %s: %s"
              % (resource[0].identifier, resource[1]), file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK if summary["failed"] == 0 else EXIT_USAGE


def cmd_check(args):
    """Abbreviated invariant suite: ring axioms, Groebner soundness,
    difference calculus, and one oracle equivalence."""
    import random
    from .groebner import IdealHandle, normal_form, s_polynomial
    from .orders import DegRevLex
    from .rings import RingDescriptor
    from .numerical import NumericalPoly2
    from .adeg import adeg_report_ext, adeg_report_monomial

    rng = random.Random(7)
    R = RingDescriptor.graded("x,y,z")
    order = DegRevLex()

    def rand_poly():
        out = R.zero()
        for _ in range(rng.randint(1, 4)):
            exps = tuple(rng.randint(0, 2) for _ in range(3))
            out = out + R.monomial(exps, rng.randint(-3, 3))
        return out

    for _ in range(50):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f
    print("ring axioms: ok (50 random triples)")

    for _ in range(10):
        gens = [rand_poly() for _ in range(rng.randint(1, 3))]
        basis = IdealHandle(R, gens).groebner_basis(order)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                assert not normal_form(s_polynomial(basis[i], basis[j], order),
                                       list(basis), order)
    print("Buchberger criterion: ok (10 random ideals)")

    for _ in range(25):
        P = NumericalPoly2({(rng.randint(0, 3), rng.randint(0, 3)):
                            rng.randint(-4, 4) for _ in range(4)})
        r, s, m, n = (rng.randint(0, 2) for _ in range(4))
        assert P.difference(m, n).difference(r, s) == P.difference(r + m, s + n)
    print("difference composition: ok (25 random polynomials)")

    R2 = RingDescriptor.graded("x,y")
    gx, gy = R2.gens()
    I = IdealHandle(R2, [gx**2, gx * gy])
    assert adeg_report_ext(I).table() == adeg_report_monomial(I).table()
    print("oracle equivalence on (x^2, xy): ok")
    print("check: all good")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="arithdeg",
        description="arithmetic-degree toolkit: Groebner engine, Hilbert "
                    "functions, standard pairs, associated graded rings, and "
                    "the multiplicity-inequality verification corpus")
    sub = parser.add_subparsers(dest="command")

    p_run = sub.add_parser("run", help="execute a session script")
    p_run.add_argument("-i", "--input", required=True)
    p_run.add_argument("--json", help="write results to this file")
    p_run.add_argument("--order", default=None,
                       choices=["degrevlex", "lex"])
    p_run.add_argument("--max-deg", type=int, default=None)
    p_run.add_argument("--max-basis", type=int, default=None)
    p_run.add_argument("--timings", action="store_true",
                       help="include wall-clock timings (breaks byte-for-byte "
                            "reproducibility)")
    p_run.add_argument("--parallel", type=int, default=1)

    p_corpus = sub.add_parser("corpus", help="run the bundled corpus")
    p_corpus.add_argument("--json", help="write full results to this file")
    p_corpus.add_argument("--csv", help="write the summary table to this file")
    p_corpus.add_argument("--parallel", type=int, default=1)

    sub.add_parser("check", help="run the abbreviated invariant suite")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.command == "run":
        return cmd_run(args)
    if args.command == "corpus":
        return cmd_corpus(args)
    if args.command == "check":
        return cmd_check(args)
    parser.print_usage(sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
