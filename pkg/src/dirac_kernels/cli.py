"""Command-line front end: ``dirac-kernels <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage errors;
errors are also reported on stderr as JSON with a stable ``code``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field, fields, is_dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from .kernelcalc import (
    KernelDecomposition,
    PreconditionError,
    compute_A_lambda,
    kostant_kernel,
    noncubic_kernel_torus,
    property_star_kernel,
    strict_kernel_equality_t,
    t_tag,
    standard_kernel_closed_forms,
)
from .parallel import pmap
from .repweights import HighestWeightModule, WeightError, standard_highest_weight
from .rootsys import (
    ConfigurationError,
    RootSystem,
    Weight,
    build_root_system,
    orbit_size,
    orthogonal_positive_roots,
    parse_root_system,
    weyl_group_order,
)
from .spinweights import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    SubalgebraDatum,
    SubalgebraError,
    dominant_spin_weights,
    spin_weights,
)

COMMANDS = ("weights", "spin-weights", "kernel", "dims-table", "f4-table", "oracle-verify", "geom")
FORMATS = ("json", "csv", "markdown")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# ------------------------------------------------------------------ job spec

@dataclass(frozen=True)
class JobSpec:
    command: str
    root_system: str = ""
    params: Dict[str, Any] = field(default_factory=dict)
    output_format: str = "json"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError("unknown-command", f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise UsageError("unknown-format", f"unknown output format {self.output_format!r}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "JobSpec":
        data = json.loads(text)
        return cls(data["command"], data.get("root_system", ""), data.get("params", {}), data.get("output_format", "json"))


# ------------------------------------------------------------------ emission

def jsonable(obj):
    """Exact, canonical JSON form: rationals become "p/q" strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, KernelDecomposition):
        return {"blocks": [jsonable(b) for b in obj.blocks], "total_dim": obj.total_dim}
    if is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _cell(x) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_cell(y) for y in x) + ")"
    return str(x)


def emit(report: Any, fmt: str = "json") -> bytes:
    """Serialise a report. Tables (dicts with ``columns``/``rows``) support csv and markdown."""
    if fmt == "json":
        return (json.dumps(jsonable(report), sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")
    if not (isinstance(report, dict) and "columns" in report and "rows" in report):
        raise UsageError("format-unsupported", f"{fmt} output needs a tabular report")
    cols = report["columns"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(cols)
        for row in report["rows"]:
            w.writerow([_cell(row[c]) for c in cols])
        return buf.getvalue().encode("utf-8")
    headers = report.get("headers", cols)
    lines = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in cols) + "|"]
    for row in report["rows"]:
        lines.append("| " + " | ".join(_cell(row.get(f"{c}_display", row[c])) for c in cols) + " |")
    return ("\n".join(lines) + "\n").encode("utf-8")


# ------------------------------------------------------------------ parsing helpers

def _root_system(code: str) -> RootSystem:
    try:
        return parse_root_system(code)
    except ConfigurationError as exc:
        raise UsageError("unsupported-root-system", str(exc)) from None


def _weight(rs: RootSystem, text: str, fundamental: bool = False) -> Weight:
    try:
        w = Weight.parse(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("malformed-weight", f"cannot parse weight {text!r}") from None
    if fundamental:
        if len(w) != rs.rank:
            raise UsageError("malformed-weight", f"{rs.code} needs {rs.rank} fundamental coordinates")
        return rs.from_fundamental(w)
    if len(w) != rs.ambient_dim:
        raise UsageError("malformed-weight", f"{rs.code} weights have {rs.ambient_dim} coordinates")
    return rs.project(w)


def _subalgebra(rs: RootSystem, text: str | None) -> SubalgebraDatum:
    """Semicolon-separated roots generating h, e.g. ``"1,-1,0,0;0,1,-1,0"``."""
    if not text:
        return SubalgebraDatum.torus(rs)
    try:
        gens = [Weight.parse(part) for part in text.split(";") if part.strip()]
        return SubalgebraDatum.generated_by(rs, gens)
    except (ValueError, ZeroDivisionError, SubalgebraError) as exc:
        raise UsageError("malformed-subalgebra", str(exc)) from None


def _module(rs: RootSystem, lam: Weight) -> HighestWeightModule:
    try:
        return HighestWeightModule(rs, lam)
    except WeightError as exc:
        raise UsageError("not-dominant-integral", str(exc)) from None


def _check_budget(n_roots: int, budget: int):
    if 2 ** n_roots > budget:
        raise BudgetExceededError(f"2^{n_roots} subsets exceeds budget {budget}")


# ------------------------------------------------------------------ commands

def _cmd_weights(job: JobSpec) -> Tuple[Any, int]:
    rs = _root_system(job.root_system)
    M = _module(rs, _weight(rs, job.params["weight"], job.params.get("fundamental", False)))
    rows = [{"weight": w, "multiplicity": m} for w, m in M.all_weights()]
    if job.output_format == "json":
        return {"root_system": rs.code, "highest_weight": M.highest_weight, "dimension": M.dimension(),
                "weights": rows}, EXIT_OK
    return {"columns": ["weight", "multiplicity"], "rows": rows}, EXIT_OK


def _cmd_spin_weights(job: JobSpec) -> Tuple[Any, int]:
    rs = _root_system(job.root_system)
    datum = _subalgebra(rs, job.params.get("subalgebra"))
    budget = int(job.params.get("budget", DEFAULT_BUDGET))
    _check_budget(len(datum.q_positive), budget)
    if job.params.get("dominant_only"):
        items = dominant_spin_weights(datum)
    else:
        items = spin_weights(datum, budget).items()
    rows = [{"weight": w, "multiplicity": m} for w, m in items]
    if job.output_format == "json":
        return {"root_system": rs.code, "h_positive_roots": list(datum.delta_h_plus),
                "total": 2 ** len(datum.q_positive), "weights": rows}, EXIT_OK
    return {"columns": ["weight", "multiplicity"], "rows": rows}, EXIT_OK


def _parse_operator(text: str) -> Fraction:
    text = (text or "cubic").strip()
    if text == "cubic":
        return Fraction(1)
    if text == "noncubic":
        return Fraction(0)
    if text.startswith("t="):
        try:
            return Fraction(text[2:])
        except (ValueError, ZeroDivisionError):
            pass
    raise UsageError("malformed-operator", f"operator must be cubic, noncubic or t=<rational>, got {text!r}")


def _oracle_kernel(M: HighestWeightModule, datum: SubalgebraDatum, t: Fraction) -> KernelDecomposition:
    """Kernel split into t-weight spaces, from explicit matrices."""
    from .kernelcalc import KernelBlock
    from .linalg import nullspace
    from .oracle.chevalley import UnsupportedAlgebraError
    from .oracle.dirac import weight_blocks
    from .oracle.verify import module_kind, setup

    try:
        st = setup(M.rs.code, module_kind(M), tuple(datum.delta_h_plus))
    except UnsupportedAlgebraError as exc:
        raise UsageError("no-formula", f"no combinatorial formula here and no explicit matrices: {exc}") from None
    dm = st.build(t)
    blocks = []
    for w, idx in sorted(weight_blocks(dm).items(), reverse=True):
        n = len(nullspace(dm.entries.restrict(idx)))
        if n:
            blocks.append(KernelBlock(w, 1, n))
    return KernelDecomposition.from_blocks(blocks, t_tag(t))


def kernel_decomposition(M: HighestWeightModule, datum: SubalgebraDatum, t: Fraction,
                         assume_property_star: bool = False, budget: int = DEFAULT_BUDGET) -> Tuple[KernelDecomposition, str]:
    """Pick the combinatorial route for (h, t); fall back to the oracle where none exists.

    Only t = 0 with h = t has a closed description; t = 2 and t = 0 with larger h go
    to explicit matrices.
    """
    if 0 < t < 2:
        return strict_kernel_equality_t(M, datum, t), "kostant"
    if t not in (0, 2):
        raise UsageError("t-out-of-range", f"t = {t} lies outside [0, 2]")
    if datum.is_torus and t == 0:
        _check_budget(len(orthogonal_positive_roots(M.rs, M.highest_weight)), budget)
        if assume_property_star:
            dec = property_star_kernel(M, assume_property_star=True)
            return dec.with_tag(t_tag(t)), "property-star"
        return noncubic_kernel_torus(M).with_tag(t_tag(t)), "a-lambda"
    return _oracle_kernel(M, datum, t), "oracle"


def _cmd_kernel(job: JobSpec) -> Tuple[Any, int]:
    rs = _root_system(job.root_system)
    M = _module(rs, _weight(rs, job.params["weight"], job.params.get("fundamental", False)))
    datum = _subalgebra(rs, job.params.get("subalgebra"))
    t = _parse_operator(job.params.get("operator", "cubic"))
    dec, method = kernel_decomposition(M, datum, t, job.params.get("assume_property_star", False),
                                       int(job.params.get("budget", DEFAULT_BUDGET)))
    if job.output_format == "json":
        return {"root_system": rs.code, "highest_weight": M.highest_weight, "operator_tag": dec.operator_tag,
                "h_positive_roots": list(datum.delta_h_plus), "method": method, "kernel": dec}, EXIT_OK
    rows = [{"representative": b.representative, "orbit_size": b.orbit_size, "block_dim": b.block_dim}
            for b in dec.blocks]
    return {"columns": ["representative", "orbit_size", "block_dim"], "rows": rows}, EXIT_OK


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def algebra_name(family: str, rank: int) -> str:
    return {"A": f"sl({rank + 1})", "B": f"so({2 * rank + 1})", "C": f"sp({2 * rank})", "D": f"so({2 * rank})"}[family]


def _noncubic_formula(family: str, rank: int) -> Tuple[int, int]:
    n = rank + 1 if family == "A" else rank
    if family == "A":
        return n, (n - 1) * (n - 2) // 2
    if family in "BC":
        return 2 * n, (n - 1) ** 2
    return 2 * n, (n - 1) * (n - 2)


def dims_row(key: Tuple[str, int]) -> dict:
    family, rank = key
    rs = build_root_system(family, rank)
    M = HighestWeightModule(rs, standard_highest_weight(rs))
    cubic = kostant_kernel(M).total_dim
    noncubic = noncubic_kernel_torus(M).total_dim
    star = property_star_kernel(M).total_dim
    coef, exp = _noncubic_formula(family, rank)
    closed = standard_kernel_closed_forms(family, rank)
    return {
        "algebra": algebra_name(family, rank), "family": family, "rank": rank,
        "weyl_order": weyl_group_order(rs), "cubic_dim": cubic, "noncubic_dim": noncubic,
        "property_star_dim": star, "noncubic_display": f"{coef}×2{str(exp).translate(_SUPERSCRIPT)}={noncubic}",
        "matches_closed_form": (cubic, noncubic) == closed and star == noncubic and cubic == weyl_group_order(rs),
    }


def _cmd_dims_table(job: JobSpec) -> Tuple[Any, int]:
    family = str(job.params.get("family", "A")).upper()
    if family not in "ABCD" or len(family) != 1:
        raise UsageError("unsupported-root-system", f"family must be one of A, B, C, D, not {family!r}")
    max_rank = int(job.params.get("max_rank", 5))
    min_rank = int(job.params.get("min_rank", 1 if family == "A" else 2))
    if max_rank < min_rank:
        raise UsageError("bad-range", f"max rank {max_rank} is below {min_rank}")
    rows = pmap(dims_row, [(family, r) for r in range(min_rank, max_rank + 1)])
    ok = all(r["matches_closed_form"] for r in rows)
    if job.output_format == "markdown":
        return {"columns": ["algebra", "cubic_dim", "noncubic_display"],
                "headers": ["g", "dim ker D = \\|W\\|", "dim ker D̂"], "rows": rows}, EXIT_OK if ok else EXIT_FAIL
    if job.output_format == "csv":
        return {"columns": ["algebra", "family", "rank", "weyl_order", "cubic_dim", "noncubic_dim",
                            "property_star_dim", "matches_closed_form"], "rows": rows}, EXIT_OK if ok else EXIT_FAIL
    return {"family": family, "rows": rows, "pass": ok}, EXIT_OK if ok else EXIT_FAIL


B3_DOMINANT_SPIN_WEIGHTS = {
    (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2)): 1,
    (Fraction(5, 2), Fraction(1, 2), Fraction(1, 2)): 2,
    (Fraction(3, 2), Fraction(3, 2), Fraction(3, 2)): 2,
    (Fraction(3, 2), Fraction(3, 2), Fraction(1, 2)): 4,
    (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2)): 8,
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)): 14,
}


def f4_table() -> dict:
    """Dominant spin weights of B3 and the matching noncubic kernel blocks of F4 on V_{e1}."""
    b3 = build_root_system("B", 3)
    dom = dominant_spin_weights(SubalgebraDatum.torus(b3))
    f4 = build_root_system("F4")
    lam = Weight((1, 0, 0, 0))
    M = HighestWeightModule(f4, lam)
    a_lambda = dict(compute_A_lambda(M))
    shift = f4.rho - Weight((0,) + tuple(b3.rho))
    rows = []
    for mu1, m in dom:
        rep = lam + shift + Weight((0,) + tuple(mu1))
        rows.append({"weight": mu1, "multiplicity": m, "b3_orbit": orbit_size(mu1, b3),
                     "f4_representative": rep, "f4_orbit": orbit_size(rep, f4),
                     "in_a_lambda": a_lambda.get(rep) == m})
    total = sum(r["b3_orbit"] * r["multiplicity"] for r in rows)
    ok = ({tuple(r["weight"]): r["multiplicity"] for r in rows} == B3_DOMINANT_SPIN_WEIGHTS and total == 512
          and all(r["in_a_lambda"] for r in rows) and len(a_lambda) == len(rows))
    return {"rows": rows, "orbit_weighted_total": total, "f4_kernel_dim": sum(r["f4_orbit"] * r["multiplicity"] for r in rows),
            "pass": ok}


def _cmd_f4_table(job: JobSpec) -> Tuple[Any, int]:
    report = f4_table()
    code = EXIT_OK if report["pass"] else EXIT_FAIL
    if job.output_format == "json":
        return report, code
    return {"columns": ["weight", "multiplicity", "b3_orbit", "f4_representative", "f4_orbit"],
            "headers": ["Weight", "Vectors", "B3 orbit", "F4 representative", "F4 orbit"],
            "rows": report["rows"]}, code


def _cmd_oracle_verify(job: JobSpec) -> Tuple[Any, int]:
    from .oracle.verify import CASES, run_case

    case = job.params.get("case")
    if case not in CASES:
        raise UsageError("unknown-case", f"case must be one of {sorted(CASES)}")
    result = run_case(case)
    return result, EXIT_OK if result["pass"] else EXIT_FAIL


def _cmd_geom(job: JobSpec) -> Tuple[Any, int]:
    from .geom import geometric_cubic_kernel, geometric_noncubic_kernel_torus

    rs = _root_system(job.root_system)
    mu = _weight(rs, job.params["weight"], job.params.get("fundamental", False))
    op = job.params.get("operator", "cubic")
    try:
        if op == "cubic":
            report = geometric_cubic_kernel(_subalgebra(rs, job.params.get("subalgebra")), mu)
        elif op == "noncubic":
            if job.params.get("subalgebra"):
                raise UsageError("no-formula", "the noncubic multiplicity formula needs h = t")
            report = geometric_noncubic_kernel_torus(rs, mu)
        else:
            raise UsageError("malformed-operator", f"operator must be cubic or noncubic, got {op!r}")
    except ValueError as exc:
        raise UsageError("not-dominant", str(exc)) from None
    if job.output_format == "json":
        return report, EXIT_OK
    rows = [{"lambda": c.highest_weight, "multiplicity": c.multiplicity} for c in report.constituents]
    return {"columns": ["lambda", "multiplicity"], "rows": rows}, EXIT_OK


_DISPATCH = {
    "weights": _cmd_weights,
    "spin-weights": _cmd_spin_weights,
    "kernel": _cmd_kernel,
    "dims-table": _cmd_dims_table,
    "f4-table": _cmd_f4_table,
    "oracle-verify": _cmd_oracle_verify,
    "geom": _cmd_geom,
}


def run(job: JobSpec) -> Tuple[bytes, int]:
    """Execute a job; returns (output bytes, exit code). Raises UsageError for bad input."""
    try:
        report, code = _DISPATCH[job.command](job)
    except BudgetExceededError as exc:
        raise UsageError("budget-exceeded", str(exc)) from None
    except PreconditionError as exc:
        raise UsageError("precondition-failed", str(exc)) from None
    return emit(report, job.output_format), code


# ------------------------------------------------------------------ argv

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="output format")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of enumerated subsets")
    common.add_argument("--fundamental", action="store_true", help="weights are given in fundamental-weight coordinates")

    p = argparse.ArgumentParser(prog="dirac-kernels", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("weights", parents=[common], help="weights of an irreducible module")
    s.add_argument("root_system")
    s.add_argument("weight")

    s = sub.add_parser("spin-weights", parents=[common], help="weights of the spin module")
    s.add_argument("root_system")
    s.add_argument("--subalgebra", help="semicolon-separated roots generating h")
    s.add_argument("--dominant-only", action="store_true")

    s = sub.add_parser("kernel", parents=[common], help="kernel of a Dirac operator on V (x) S")
    s.add_argument("root_system")
    s.add_argument("weight")
    s.add_argument("--operator", default="cubic", help="cubic, noncubic or t=<rational>")
    s.add_argument("--subalgebra")
    s.add_argument("--assume-property-star", action="store_true")

    s = sub.add_parser("dims-table", parents=[common], help="kernel dimensions for standard modules")
    s.add_argument("--family", required=True, choices=list("ABCDabcd"))
    s.add_argument("--max-rank", type=int, required=True)
    s.add_argument("--min-rank", type=int)

    sub.add_parser("f4-table", parents=[common], help="dominant spin weights of B3 and the F4 kernel blocks")

    s = sub.add_parser("oracle", parents=[common], help="matrix-level verification")
    s.add_argument("action", choices=["verify"])
    s.add_argument("case")

    s = sub.add_parser("geom", parents=[common], help="G-types in kernels of geometric Dirac operators")
    s.add_argument("root_system")
    s.add_argument("weight")
    s.add_argument("--operator", default="cubic", choices=["cubic", "noncubic"])
    s.add_argument("--subalgebra")
    return p


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    params: Dict[str, Any] = {"budget": ns.budget}
    if ns.fundamental:
        params["fundamental"] = True
    cmd = ns.command
    rs = getattr(ns, "root_system", "") or ""
    if cmd in ("weights", "kernel", "geom"):
        params["weight"] = ns.weight
    if cmd in ("spin-weights", "kernel", "geom") and ns.subalgebra:
        params["subalgebra"] = ns.subalgebra
    if cmd == "spin-weights":
        params["dominant_only"] = ns.dominant_only
    if cmd in ("kernel", "geom"):
        params["operator"] = ns.operator
    if cmd == "kernel":
        params["assume_property_star"] = ns.assume_property_star
    if cmd == "dims-table":
        params["family"] = ns.family.upper()
        params["max_rank"] = ns.max_rank
        if ns.min_rank is not None:
            params["min_rank"] = ns.min_rank
    if cmd == "oracle":
        cmd = "oracle-verify"
        params["case"] = ns.case
    default_fmt = "markdown" if cmd in ("dims-table", "f4-table") else "json"
    return JobSpec(cmd, rs, params, ns.format or default_fmt)


def main(argv: List[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = run(job_from_args(ns))
    except UsageError as exc:
        sys.stderr.write(json.dumps({"error": {"code": exc.code, "message": str(exc)}}, sort_keys=True) + "\n")
        return EXIT_USAGE
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
