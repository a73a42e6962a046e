"""Problem files and solution reports.

A problem file is a single JSON document.  The literal strings "-inf" and
"+inf" stand for the unbounded values (the semifield zero of max-plus and
min-plus respectively, and absent constraint entries).  Example:

    {
      "problem": "general",
      "semifield": "max-plus",
      "p": [3, 14], "q": [-12, -4],
      "g": [2, -8], "h": [6, 8],
      "B": [[0, -4], [-8, -6]]
    }

A location file replaces p/q with "points" and "weights" and is always
max-plus.  Numbers in reports are rendered with at most 12 significant
digits; integral values print without a decimal point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import ProblemFileError, TroptError
from .linalg import tmatrix, tvector
from .location import (
    LocationInstance,
    LocationSolution,
    solve_location,
    to_general_problem,
)
from .semifield import MAX_PLUS, SEMIFIELDS, Semifield, by_tag
from .solve import (
    InfeasibilityReport,
    ProblemInstance,
    SolutionSet,
    solve_box_constrained,
    solve_general,
    solve_linear_constrained,
    solve_unconstrained,
)

__all__ = [
    "ParsedProblem",
    "load_problem",
    "parse_problem",
    "solve_parsed",
    "canonical_json",
    "report_dict",
    "dump_json",
]

PROBLEM_TYPES = ("unconstrained", "linear", "box", "general", "location")


@dataclass(frozen=True)
class ParsedProblem:
    problem_type: str
    sf: Semifield
    instance: ProblemInstance | None = None
    location: LocationInstance | None = None


# ---------------------------------------------------------------------------
# number (de)serialization
# ---------------------------------------------------------------------------


def _to_number(raw, where: str) -> float:
    if isinstance(raw, str):
        if raw == "-inf":
            return float("-inf")
        if raw == "+inf":
            return float("inf")
        raise ProblemFileError(f"{where}: expected a number or \"-inf\"/\"+inf\", got {raw!r}")
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ProblemFileError(f"{where}: expected a number, got {type(raw).__name__}")
    return float(raw)


def _vector(raw, where: str) -> list[float]:
    if not isinstance(raw, list) or not raw:
        raise ProblemFileError(f"{where}: expected a non-empty array")
    return [_to_number(v, f"{where}[{i}]") for i, v in enumerate(raw)]


def _matrix(raw, where: str) -> list[list[float]]:
    if not isinstance(raw, list) or not raw:
        raise ProblemFileError(f"{where}: expected a non-empty array of rows")
    rows = []
    width = None
    for i, row in enumerate(raw):
        vals = _vector(row, f"{where}[{i}]")
        if width is None:
            width = len(vals)
        elif len(vals) != width:
            raise ProblemFileError(f"{where}[{i}]: ragged row (expected {width} entries)")
        rows.append(vals)
    return rows


def _json_number(x: float):
    if x == float("-inf"):
        return "-inf"
    if x == float("inf"):
        return "+inf"
    if x == int(x) and abs(x) < 1e15:
        return int(x)
    return float(f"{x:.12g}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in list(obj)]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, float, np.floating, np.integer)):
        return _json_number(float(obj))
    return obj


def dump_json(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2) + "\n"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_FIELDS = {
    "unconstrained": {"required": ("p", "q"), "optional": ()},
    "linear": {"required": ("B", "p", "q"), "optional": ()},
    "box": {"required": ("p", "q", "g", "h"), "optional": ()},
    "general": {"required": ("p", "q"), "optional": ("B", "g", "h")},
    "location": {"required": ("points", "weights"), "optional": ("B", "g", "h")},
}


def parse_problem(doc, *, semifield_override: str | None = None) -> ParsedProblem:
    """Validate a decoded JSON document and build the typed instance."""
    if not isinstance(doc, dict):
        raise ProblemFileError("top level: expected a JSON object")
    ptype = doc.get("problem")
    if ptype not in PROBLEM_TYPES:
        raise ProblemFileError(
            f"field 'problem': expected one of {', '.join(PROBLEM_TYPES)}, got {ptype!r}"
        )
    tag = semifield_override or doc.get("semifield", "max-plus")
    if tag not in SEMIFIELDS:
        raise ProblemFileError(f"field 'semifield': unknown tag {tag!r}")
    sf = by_tag(tag)
    if ptype == "location" and sf is not MAX_PLUS:
        raise ProblemFileError("field 'semifield': location problems are max-plus only")

    spec = _FIELDS[ptype]
    known = {"problem", "semifield", *spec["required"], *spec["optional"]}
    for key in doc:
        if key not in known:
            raise ProblemFileError(f"field {key!r}: not expected for problem {ptype!r}")
    for key in spec["required"]:
        if key not in doc or doc[key] is None:
            raise ProblemFileError(f"field {key!r}: required for problem {ptype!r}")

    def get_vec(name):
        raw = doc.get(name)
        return None if raw is None else _vector(raw, f"field '{name}'")

    def get_mat(name):
        raw = doc.get(name)
        return None if raw is None else _matrix(raw, f"field '{name}'")

    try:
        if ptype == "location":
            pts = _matrix(doc["points"], "field 'points'")
            w = _vector(doc["weights"], "field 'weights'")
            if len(w) != len(pts):
                raise ProblemFileError("field 'weights': one weight per point required")
            loc = LocationInstance(
                np.array(pts), np.array(w),
                B=_opt_arr(get_mat("B")), g=_opt_arr(get_vec("g")), h=_opt_arr(get_vec("h")),
            )
            return ParsedProblem(ptype, sf, location=loc)

        p = tvector(sf, get_vec("p"))
        q = tvector(sf, get_vec("q"))
        g = get_vec("g")
        h = get_vec("h")
        B = get_mat("B")
        inst = ProblemInstance(
            sf, p, q,
            g=None if g is None else tvector(sf, g),
            h=None if h is None else tvector(sf, h),
            B=None if B is None else tmatrix(sf, B),
        )
        return ParsedProblem(ptype, sf, instance=inst)
    except ProblemFileError:
        raise
    except TroptError as exc:
        raise ProblemFileError(str(exc)) from exc


def _opt_arr(v):
    return None if v is None else np.array(v, dtype=np.float64)


def load_problem(path, *, semifield_override: str | None = None) -> ParsedProblem:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ProblemFileError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse_problem(doc, semifield_override=semifield_override)


def canonical_json(parsed: ParsedProblem) -> str:
    """Serialize a parsed problem back to its canonical file form."""
    doc = {"problem": parsed.problem_type, "semifield": parsed.sf.tag}
    if parsed.problem_type == "location":
        loc = parsed.location
        doc["points"] = loc.points
        doc["weights"] = loc.weights
        for name in ("B", "g", "h"):
            v = getattr(loc, name)
            if v is not None:
                doc[name] = v
    else:
        inst = parsed.instance
        doc["p"] = inst.p.column_values()
        doc["q"] = inst.q.column_values()
        for name in ("g", "h"):
            v = getattr(inst, name)
            if v is not None:
                doc[name] = v.column_values()
        if inst.B is not None:
            doc["B"] = inst.B.data
    return dump_json(doc)


# ---------------------------------------------------------------------------
# solving and reporting
# ---------------------------------------------------------------------------


def solve_parsed(parsed: ParsedProblem):
    """Dispatch to the solver matching the declared problem type."""
    if parsed.problem_type == "location":
        return solve_location(parsed.location)
    inst = parsed.instance
    if parsed.problem_type == "unconstrained":
        return solve_unconstrained(inst.p, inst.q)
    if parsed.problem_type == "linear":
        return solve_linear_constrained(inst.B, inst.p, inst.q)
    if parsed.problem_type == "box":
        return solve_box_constrained(inst.p, inst.q, inst.g, inst.h)
    return solve_general(inst.B, inst.p, inst.q, inst.g, inst.h)


def report_dict(result) -> dict:
    """Solution or infeasibility as a JSON-ready dict (values verbatim)."""
    if isinstance(result, InfeasibilityReport):
        return {
            "status": "infeasible",
            "reason": result.reason.value,
            "detail": result.detail.value,
        }
    if isinstance(result, SolutionSet):
        return {
            "status": "optimal",
            "theta": result.theta.value,
            "u_lo": result.u_lo.column_values(),
            "u_hi": result.u_hi.column_values(),
            "x_lo": result.x_lo.column_values(),
            "x_hi": result.x_hi.column_values(),
            "generator": result.generator.data,
        }
    if isinstance(result, LocationSolution):
        return {
            "status": "optimal",
            "theta": result.theta,
            "p": result.p,
            "q": result.q,
            "u_lo": result.u_lower,
            "u_hi": result.u_upper,
            "x_lo": result.x_lower,
            "x_hi": result.x_upper,
            "generator": result.closure,
        }
    raise TypeError(f"cannot report {type(result).__name__}")
