"""Command line: compute, verify, tabulate.

Every subcommand maps to one library call. Requests come from flags or from
a single ``--request`` JSON file of the form

    {"subcommand": "det", "params": {"symbol": {...}, "N": 2}, "format": "json"}

and are validated field by field before dispatch. Exit codes: 0 success,
1 a verification reported a mismatch, 2 malformed request, 3 parameters
outside the domain of the computation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import closedforms, linalg, suites
from .asymptotics import convergence_table, table1, table1_required
from .biorthogonal import bordered_pair, kernel_coefficients
from .oracle import OracleLimitError, heine_integral, pairing
from .partitions import Partition
from .scalar import Series, decimal_string, scalar_from_json, scalar_to_json
from .symbols import InfiniteSupportError, symbol_from_json, symbol_to_json
from .symfunc import skew_schur, specialization_from_json
from .toeplitz import exact_inverse, minor_determinant, toeplitz_determinant

FORMATS = ("text", "json", "csv", "markdown")
EXIT_OK, EXIT_MISMATCH, EXIT_SCHEMA, EXIT_DOMAIN = 0, 1, 2, 3


class SchemaError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"field {field!r}: {message}")
        self.field = field


# field parsers: raw values come from flags (strings) or from JSON


def _maybe_json(raw):
    if isinstance(raw, str):
        try:
            return json.loads(raw)
        except json.JSONDecodeError:
            return raw
    return raw


def _int(field, raw, minimum=None):
    value = _maybe_json(raw)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(field, f"expected an integer, got {raw!r}")
    if minimum is not None and value < minimum:
        raise SchemaError(field, f"must be >= {minimum}")
    return value


def _partition(field, raw):
    value = _maybe_json(raw)
    if isinstance(value, str):
        value = [int(p) for p in value.split(",") if p.strip()] if value.strip() else []
    if isinstance(value, int) and not isinstance(value, bool):
        value = [value]
    if not isinstance(value, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in value):
        raise SchemaError(field, f"expected a list of integers, got {raw!r}")
    if any(p < 0 for p in value) or any(a < b for a, b in zip(value, value[1:])):
        raise SchemaError(field, "parts must be non-negative and weakly decreasing")
    return Partition(value)


def _object(field, raw):
    value = _maybe_json(raw)
    if not isinstance(value, dict):
        raise SchemaError(field, f"expected a JSON object, got {raw!r}")
    return value


def _symbol(field, raw):
    value = _object(field, raw)
    try:
        return symbol_from_json(value)
    except (KeyError, TypeError) as exc:
        raise SchemaError(field, f"missing or malformed entry {exc}") from None
    except ValueError as exc:
        raise SchemaError(field, str(exc)) from None


def _scalar(field, raw):
    value = _maybe_json(raw) if not isinstance(raw, str) or raw.strip().startswith("{") else raw
    try:
        return scalar_from_json(value)
    except (ValueError, KeyError, TypeError, ZeroDivisionError):
        raise SchemaError(field, f"expected a rational 'p/q' or a series object, got {raw!r}") from None


def _bool(field, raw):
    value = _maybe_json(raw)
    if not isinstance(value, bool):
        raise SchemaError(field, f"expected true or false, got {raw!r}")
    return value


def _choice(options):
    def parse(field, raw):
        if raw not in options:
            raise SchemaError(field, f"expected one of {list(options)}, got {raw!r}")
        return raw

    return parse


def _scalar_list(field, raw):
    value = _maybe_json(raw)
    if isinstance(value, str):
        value = [v for v in value.split(",") if v.strip()]
    if not isinstance(value, list):
        raise SchemaError(field, f"expected a list of rationals, got {raw!r}")
    return [_scalar(f"{field}[{i}]", v) for i, v in enumerate(value)]


NONNEG = lambda f, r: _int(f, r, 0)  # noqa: E731
POSITIVE = lambda f, r: _int(f, r, 1)  # noqa: E731

# subcommand -> {field: (parser, default)}; default ... means required
SCHEMAS = {
    "det": {"symbol": (_symbol, ...), "N": (NONNEG, ...)},
    "minor": {"symbol": (_symbol, ...), "N": (NONNEG, ...), "lambda": (_partition, ()), "mu": (_partition, ())},
    "inverse": {"symbol": (_symbol, ...), "N": (POSITIVE, ...), "check": (_bool, False)},
    "skewschur": {
        "mu": (_partition, ...),
        "lambda": (_partition, ()),
        "spec": (_object, ...),
        "basis": (_choice(("H", "E")), "H"),
    },
    "closedform": {"id": (lambda f, r: _choice(_formula_ids())(f, r), ...), "params": (_object, {}), "verify": (_bool, False)},
    "biorth": {
        "mode": (_choice(("pair", "kernel")), ...),
        "symbol": (_symbol, ...),
        "j": (NONNEG, 0),
        "N": (POSITIVE, 1),
        "verify_inverse": (_bool, False),
    },
    "oracle": {
        "mode": (_choice(("heine", "pairing")), ...),
        "symbol": (_symbol, ...),
        "N": (NONNEG, 1),
        "lambda": (_partition, ()),
        "mu": (_partition, ()),
        "compare": (_bool, False),
        "p": (_scalar_list, [Fraction(1)]),
        "q": (_scalar_list, [Fraction(1)]),
    },
    "table1": {"profile": (_object, ...)},
    "converge": {
        "symbol": (_symbol, ...),
        "lambda": (_partition, ()),
        "mu": (_partition, ()),
        "N_max": (POSITIVE, ...),
        "N_min": (POSITIVE, 1),
        "decimals": (NONNEG, 0),
    },
    "verify": {
        "suite": (_choice(("all",) + suites.SUITES), "all"),
        "quick": (_bool, False),
        "N": (NONNEG, None),
    },
}

_INT_PARAMS = {"n", "N", "j", "k", "d", "M", "gamma", "delta"}


def _formula_ids():
    kinds = ("tridiag", "fh", "q_principal", "q_infinite")
    return sorted(closedforms.FORMULAS) + [f"asymptotic_{k}" for k in kinds]


def validate(subcommand: str, raw: dict) -> dict:
    """Parse ``raw`` against the schema of ``subcommand``; unknown fields are errors."""
    if subcommand not in SCHEMAS:
        raise SchemaError("subcommand", f"expected one of {sorted(SCHEMAS)}, got {subcommand!r}")
    schema = SCHEMAS[subcommand]
    extra = sorted(set(raw) - set(schema))
    if extra:
        raise SchemaError(extra[0], f"not a field of {subcommand}")
    out = {}
    for name, (parse, default) in schema.items():
        if name not in raw or raw[name] is None:
            if default is ...:
                raise SchemaError(name, "is required")
            out[name] = default
            continue
        out[name] = parse(name, raw[name])
    if subcommand == "closedform":
        out["params"] = _closedform_params(out["id"], out["params"])
    if subcommand == "table1":
        out["profile"] = _profile(out["profile"])
    return out


def _closedform_params(formula_id, params):
    parsed = {}
    for key, raw in params.items():
        field = f"params.{key}"
        if key in _INT_PARAMS:
            parsed[key] = _int(field, raw)
        elif key == "mu":
            parsed[key] = _partition(field, raw)
        else:
            parsed[key] = _scalar(field, raw)
    if formula_id in closedforms.FORMULAS:
        for name in closedforms.FORMULAS[formula_id][1]:
            if name not in parsed:
                raise SchemaError(f"params.{name}", f"is required by {formula_id}")
    return parsed


def _profile(raw):
    values = {}
    for key, v in raw.items():
        try:
            k = int(key)
        except ValueError:
            raise SchemaError(f"profile.{key}", "keys are nonzero integers k for c_k") from None
        if k == 0:
            raise SchemaError("profile.0", "c_0 does not enter the table")
        values[k] = _scalar(f"profile.{key}", v)
    missing = [k for k in table1_required() if k not in values]
    if missing:
        raise SchemaError(f"profile.{missing[0]}", f"c_k is needed for k in {missing}")
    return values


# rendering


def cell(x):
    """Machine form of a value: 'p/q' for rationals, compact JSON for series."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Series):
        return json.dumps(scalar_to_json(x), sort_keys=True, separators=(",", ":"))
    if isinstance(x, (Fraction, int)):
        return str(Fraction(x))
    if isinstance(x, tuple):  # partitions
        return json.dumps(list(x))
    return "" if x is None else str(x)


def _jsonable(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, (Fraction, Series)):
        return scalar_to_json(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, Partition):
        return list(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


class Output:
    """A payload for JSON plus a table for CSV/markdown and lines for text."""

    def __init__(self, payload: dict, columns: list, rows: list, text: list | None = None, status: int = EXIT_OK):
        self.payload, self.columns, self.rows, self.status = payload, columns, rows, status
        self.text = text

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(_jsonable(self.payload), sort_keys=True, indent=2)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([cell(v) for v in row])
            return buf.getvalue().rstrip("\n")
        if fmt == "markdown":
            lines = ["| " + " | ".join(self.columns) + " |", "|" + "---|" * len(self.columns)]
            for row in self.rows:
                lines.append("| " + " | ".join(cell(v).replace("|", "\\|") for v in row) + " |")
            return "\n".join(lines)
        if self.text is not None:
            return "\n".join(self.text)
        return "\n".join(" ".join(cell(v) for v in row) for row in self.rows)


def _matrix_output(name, m, extra: dict) -> Output:
    n = len(m)
    payload = dict(extra, **{name: m})
    rows = [[j] + list(row) for j, row in enumerate(m)]
    text = [" ".join(cell(v) for v in row) for row in m]
    return Output(payload, ["row"] + [f"c{k}" for k in range(n)], rows, text)


def _value_output(value, extra: dict, columns=(), values=()) -> Output:
    payload = dict(extra, value=value)
    return Output(payload, list(columns) + ["value"], [list(values) + [value]], [cell(value)])


def _same(a, b):
    if isinstance(a, Series) or isinstance(b, Series):
        return (a - b).is_zero()
    return a == b


# handlers


def cmd_det(p):
    value = toeplitz_determinant(p["symbol"], p["N"])
    return _value_output(value, {"symbol": symbol_to_json(p["symbol"]), "N": p["N"]}, ["N"], [p["N"]])


def cmd_minor(p):
    value = minor_determinant(p["symbol"], p["N"], p["lambda"], p["mu"])
    extra = {"symbol": symbol_to_json(p["symbol"]), "N": p["N"], "lambda": p["lambda"], "mu": p["mu"]}
    return _value_output(value, extra, ["N", "lambda", "mu"], [p["N"], p["lambda"], p["mu"]])


def cmd_inverse(p):
    inv = exact_inverse(p["symbol"], p["N"], check=p["check"])
    return _matrix_output("inverse", inv, {"symbol": symbol_to_json(p["symbol"]), "N": p["N"]})


def cmd_skewschur(p):
    try:
        spec = specialization_from_json(p["spec"])
    except (KeyError, TypeError) as exc:
        raise SchemaError("spec", f"missing or malformed entry {exc}") from None
    value = skew_schur(p["mu"], p["lambda"], spec, p["basis"])
    extra = {"mu": p["mu"], "lambda": p["lambda"], "basis": p["basis"]}
    return _value_output(value, extra, ["mu", "lambda", "basis"], [p["mu"], p["lambda"], p["basis"]])


def cmd_closedform(p):
    result = closedforms.evaluate(p["id"], p["params"])
    payload = {"id": p["id"], "params": result.parameters, "value": result.value}
    status = EXIT_OK
    if p["verify"]:
        direct = closedforms.direct_value(p["id"], p["params"])
        if direct is None:
            payload["verified"] = None
        elif isinstance(direct, list):
            payload["verified"] = all(_same(a, b) for ra, rb in zip(direct, result.value) for a, b in zip(ra, rb))
        else:
            payload["verified"] = _same(direct, result.value)
        if payload["verified"] is False:
            status = EXIT_MISMATCH
    value = result.value
    if isinstance(value, list):
        out = _matrix_output("value", value, {k: v for k, v in payload.items() if k != "value"})
    else:
        out = _value_output(value, {k: v for k, v in payload.items() if k != "value"}, ["id"], [p["id"]])
    if "verified" in payload:
        out.text.append(f"verified: {cell(payload['verified']) if payload['verified'] is not None else 'n/a'}")
    out.status = status
    return out


def cmd_biorth(p):
    f = p["symbol"]
    if p["mode"] == "pair":
        pair = bordered_pair(f, p["j"])
        payload = {"j": p["j"], "p": list(pair.p_coeffs), "q": list(pair.q_coeffs), "norm2": pair.norm2}
        rows = [[r, a, b] for r, (a, b) in enumerate(zip(pair.p_coeffs, pair.q_coeffs))]
        text = [
            "p: " + " ".join(cell(v) for v in pair.p_coeffs),
            "q: " + " ".join(cell(v) for v in pair.q_coeffs),
            "norm2: " + cell(pair.norm2),
        ]
        return Output(payload, ["r", "p_r", "q_r"], rows, text)
    kernel = kernel_coefficients(f, p["N"]).as_lists()
    out = _matrix_output("kernel", kernel, {"symbol": symbol_to_json(f), "N": p["N"]})
    if p["verify_inverse"]:
        inv = exact_inverse(f, p["N"])
        ok = all(_same(a, b) for ra, rb in zip(kernel, inv) for a, b in zip(ra, rb))
        out.payload["equals_inverse"] = ok
        out.text.append(f"equals inverse: {cell(ok)}")
        out.status = EXIT_OK if ok else EXIT_MISMATCH
    return out


def cmd_oracle(p):
    f = p["symbol"]
    if p["mode"] == "pairing":
        value = pairing(f, p["p"], p["q"])
        return _value_output(value, {"symbol": symbol_to_json(f), "p": p["p"], "q": p["q"]})
    value = heine_integral(f, p["lambda"], p["mu"], p["N"])
    extra = {"symbol": symbol_to_json(f), "N": p["N"], "lambda": p["lambda"], "mu": p["mu"]}
    out = _value_output(value, extra, ["N", "lambda", "mu"], [p["N"], p["lambda"], p["mu"]])
    if p["compare"]:
        det = minor_determinant(f, p["N"], p["lambda"], p["mu"])
        ok = _same(det, value)
        out.payload.update(determinant=det, equal=ok)
        out.columns += ["determinant", "equal"]
        out.rows[0] += [det, ok]
        out.text.append(f"determinant: {cell(det)} equal: {cell(ok)}")
        out.status = EXIT_OK if ok else EXIT_MISMATCH
    return out


def cmd_table1(p):
    rows = table1(p["profile"])
    columns = ["lambda", "mu", "bd_sum", "skew_sum", "equal"]
    table = [[r[c] for c in columns] for r in rows]
    payload = {"profile": {str(k): v for k, v in sorted(p["profile"].items())}, "rows": rows}
    status = EXIT_OK if all(r["equal"] for r in rows) else EXIT_MISMATCH
    return Output(payload, columns, table, status=status)


def cmd_converge(p):
    f = p["symbol"]
    if not f.is_laurent_finite():
        raise InfiniteSupportError("converge needs a symbol with finite Fourier support")
    rows = convergence_table(f, p["lambda"], p["mu"], range(p["N_min"], p["N_max"] + 1))
    columns = ["N", "minor", "determinant", "ratio", "target", "abs_error"]
    if p["decimals"]:
        columns += ["ratio_decimal", "abs_error_decimal"]
        for r in rows:
            for key in ("ratio", "abs_error"):
                r[key + "_decimal"] = None if r[key] is None else decimal_string(r[key], p["decimals"])
    table = [[r[c] for c in columns] for r in rows]
    payload = {"symbol": symbol_to_json(f), "lambda": p["lambda"], "mu": p["mu"], "rows": rows}
    return Output(payload, columns, table)


def cmd_verify(p, seed=0, jobs=1):
    results = suites.run_suite(p["suite"], quick=p["quick"], seed=seed, jobs=jobs, oracle_n=p["N"])
    summary = suites.summarize(results)
    text, rows = [], []
    for s in summary:
        state = "OK" if s["passed"] == s["total"] else "FAILED"
        line = f"{s['identity']}: {s['passed']}/{s['total']} grids {state}"
        if s["failures"]:
            line += " (" + "; ".join(s["failures"]) + ")"
        text.append(line)
        rows.append([s["identity"], s["passed"], s["total"], state == "OK"])
    ok = all(r[3] for r in rows)
    payload = {"suite": p["suite"], "quick": p["quick"], "seed": seed, "identities": summary, "ok": ok}
    return Output(payload, ["identity", "passed", "total", "ok"], rows, text, EXIT_OK if ok else EXIT_MISMATCH)


HANDLERS = {
    "det": cmd_det,
    "minor": cmd_minor,
    "inverse": cmd_inverse,
    "skewschur": cmd_skewschur,
    "closedform": cmd_closedform,
    "biorth": cmd_biorth,
    "oracle": cmd_oracle,
    "table1": cmd_table1,
    "converge": cmd_converge,
    "verify": cmd_verify,
}

DOMAIN_ERRORS = (
    closedforms.DomainError,
    linalg.SingularMatrixError,
    OracleLimitError,
    InfiniteSupportError,
    ValueError,
    ZeroDivisionError,
    KeyError,
)


def run(subcommand: str, raw: dict, fmt: str = "text", seed: int = 0, jobs: int = 1) -> tuple[int, str]:
    """Validate, dispatch and render. Returns (exit code, text to print)."""
    params = validate(subcommand, raw)
    handler = HANDLERS[subcommand]
    out = handler(params, seed=seed, jobs=jobs) if subcommand == "verify" else handler(params)
    return out.status, out.render(fmt)


# argument parsing


def _global_flags(parser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=FORMATS, default=default("text"), help="output format (default text)")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for randomized verification grids")
    parser.add_argument("--jobs", type=int, default=default(1), help="worker processes for verify")
    parser.add_argument("--request", default=default(None), help="JSON file with subcommand, params and format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toeplitz-minors", description=__doc__.split("\n\n")[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="subcommand")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_flags(p, suppress=True)
        return p

    def symbol(p):
        p.add_argument("--symbol", help='symbol JSON, e.g. {"builtin":"pure_fh","gamma":1,"delta":1}')

    def shapes(p):
        p.add_argument("--lambda", dest="lambda", help="partition, JSON list or comma separated")
        p.add_argument("--mu", help="partition, JSON list or comma separated")

    p = add("det", "Toeplitz determinant D_N(f)")
    symbol(p)
    p.add_argument("--N")
    p = add("minor", "Toeplitz minor D_N^{lambda,mu}(f)")
    symbol(p)
    p.add_argument("--N")
    shapes(p)
    p = add("inverse", "exact inverse of T_N(f)")
    symbol(p)
    p.add_argument("--N")
    p.add_argument("--check", action="store_const", const=True, help="compare with the cofactor formula")
    p = add("skewschur", "skew Schur function at a specialization")
    p.add_argument("--mu")
    p.add_argument("--lambda", dest="lambda")
    p.add_argument("--spec", help='specialization JSON, e.g. {"kind":"finite","values":["1","1/2"]}')
    p.add_argument("--basis", help="H (Jacobi-Trudi in h) or E (in e, conjugate shape)")
    p = add("closedform", "evaluate a closed form")
    p.add_argument("--id", help="formula id; see --list")
    p.add_argument("--params", help="JSON object of parameters")
    p.add_argument("--verify", action="store_const", const=True, help="compare with the direct computation")
    p.add_argument("--list", action="store_true", help="list formula ids and exit")
    p = add("biorth", "biorthogonal pairs and kernel coefficients")
    p.add_argument("mode", nargs="?", choices=("pair", "kernel"))
    symbol(p)
    p.add_argument("--j")
    p.add_argument("--N")
    p.add_argument("--verify-inverse", dest="verify_inverse", action="store_const", const=True)
    p = add("oracle", "brute-force constant-term evaluations")
    p.add_argument("mode", nargs="?", choices=("heine", "pairing"))
    symbol(p)
    p.add_argument("--N")
    shapes(p)
    p.add_argument("--compare", action="store_const", const=True, help="also compute the determinant")
    p.add_argument("--p", help="coefficients of p, lowest degree first")
    p.add_argument("--q", help="coefficients of q, lowest degree first")
    p = add("table1", "character sum and skew sum for the tabulated shapes")
    p.add_argument("--profile", help='JSON object {"k": c_k}, e.g. {"1":"1","-1":"0",...}')
    p = add("converge", "D_N^{lambda,mu}/D_N against its N -> infinity limit")
    symbol(p)
    shapes(p)
    p.add_argument("--N-max", dest="N_max")
    p.add_argument("--N-min", dest="N_min")
    p.add_argument("--decimals", help="add decimal columns with this many digits")
    p = add("verify", "run verification grids")
    p.add_argument("suite", nargs="?", choices=("all",) + suites.SUITES)
    p.add_argument("--quick", action="store_const", const=True, help="smaller grids")
    p.add_argument("--N", help="largest N for the oracle suite")
    return parser


# operation names accepted in the flat request form
_OPS = {"det": "det", "toeplitz_det": "det", "minor_det": "minor", "inverse": "inverse", "exact_inverse": "inverse"}
_OPS.update({name: name for name in SCHEMAS})

_GLOBAL = ("format", "seed", "jobs", "request", "subcommand", "list")


def main(argv=None) -> int:
    parser = build_parser()
    args = vars(parser.parse_args(argv))
    fmt, seed, jobs = args["format"], args["seed"], args["jobs"]
    subcommand = args["subcommand"]
    raw = {k: v for k, v in args.items() if k not in _GLOBAL and v is not None}
    try:
        if args.get("list"):
            print("\n".join(_formula_ids()))
            return EXIT_OK
        if args["request"]:
            try:
                with open(args["request"]) as fh:
                    request = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise SchemaError("request", str(exc)) from None
            if not isinstance(request, dict):
                raise SchemaError("request", "expected a JSON object")
            if "op" in request:
                # flat form: {"op": "minor_det", "symbol": ..., "N": 4, ...}
                op = request["op"]
                if op not in _OPS:
                    raise SchemaError("op", f"expected one of {sorted(_OPS)}")
                subcommand = _OPS[op]
                params = {k: v for k, v in request.items() if k not in ("op", "format")}
                fmt = request.get("format", "json")
            else:
                subcommand = request.get("subcommand", subcommand)
                params = request.get("params", {})
                fmt = request.get("format", fmt)
            if not isinstance(params, dict):
                raise SchemaError("params", "expected a JSON object")
            raw = dict(params, **raw)
            if fmt not in FORMATS:
                raise SchemaError("format", f"expected one of {list(FORMATS)}")
        if subcommand is None:
            parser.print_usage(sys.stderr)
            raise SchemaError("subcommand", "is required")
        status, text = run(subcommand, raw, fmt, seed, jobs)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except DOMAIN_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AssertionError as exc:
        # a built-in cross-check (e.g. inverse --check) disagreed
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
