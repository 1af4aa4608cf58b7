"""JSON codecs for operations, algebras and reports.

Rational coefficients are written as integers when the denominator is 1 and
as "p/q" strings otherwise; floats are written with repr, which round-trips
binary64 values exactly.
"""

import json
import os

from opcalc.model.cohomology import CohomologyReport
from opcalc.model.deformation import DeformationReport
from opcalc.model.endop import AlgebraSpec, make_operation
from opcalc.model.exceptions import OperadError, SerializationError
from opcalc.model.utils import format_rational, parse_rational

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")
ALGEBRAS_DIR = os.path.join(DATA_DIR, "algebras")
OPERATIONS_DIR = os.path.join(DATA_DIR, "operations")


def _rational_to_json(value):
    text = format_rational(value)
    return int(text) if "/" not in text else text


def operation_to_json(operation):
    return {
        "dim": operation.dim,
        "degree": operation.degree,
        "coeffs": [_rational_to_json(c) for c in operation.coeffs],
    }


def operation_from_json(data):
    try:
        dim, degree, coeffs = data["dim"], data["degree"], data["coeffs"]
    except (KeyError, TypeError) as e:
        raise SerializationError(f"an operation needs 'dim', 'degree' and 'coeffs' fields: {e}") from e
    if not isinstance(dim, int) or not isinstance(degree, int) or not isinstance(coeffs, list):
        raise SerializationError("'dim' and 'degree' must be integers and 'coeffs' a list")
    try:
        return make_operation(dim, degree, [parse_rational(c) for c in coeffs])
    except (ValueError, ZeroDivisionError) as e:
        raise SerializationError(str(e)) from e
    except OperadError as e:
        raise SerializationError(f"invalid operation: {e}") from e


def algebra_to_json(algebra):
    return {"name": algebra.name, "dim": algebra.dim, "mu": operation_to_json(algebra.mu)}


def algebra_from_json(data):
    try:
        mu = operation_from_json(data["mu"])
        return AlgebraSpec(data["dim"], mu, data.get("name", ""))
    except (KeyError, TypeError) as e:
        raise SerializationError(f"an algebra needs 'dim' and 'mu' fields: {e}") from e
    except SerializationError:
        raise
    except OperadError as e:
        raise SerializationError(f"invalid algebra: {e}") from e


def _read_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as e:
        raise SerializationError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SerializationError(f"{path} is not valid JSON: {e}") from e


def resolve_path(name_or_path):
    """Accepts a file path or the name of a bundled file such as "dual_numbers"."""
    if os.path.exists(name_or_path):
        return name_or_path
    for directory in (ALGEBRAS_DIR, OPERATIONS_DIR):
        bundled = os.path.join(directory, f"{name_or_path}.json")
        if os.path.exists(bundled):
            return bundled
    raise SerializationError(f"no such file or bundled name: {name_or_path}")


def load_algebra(name_or_path):
    return algebra_from_json(_read_json(resolve_path(name_or_path)))


def load_operation(name_or_path):
    data = _read_json(resolve_path(name_or_path))
    # an algebra file is accepted wherever an operation is expected
    if isinstance(data, dict) and "mu" in data:
        data = data["mu"]
    return operation_from_json(data)


def bundled_algebras():
    return sorted(name[: -len(".json")] for name in os.listdir(ALGEBRAS_DIR) if name.endswith(".json"))


def trajectory_to_json(trajectory):
    return {
        "times": [float(t) for t in trajectory.times],
        "states": [
            {"dim": trajectory.dim, "degree": trajectory.degree, "coeffs": [float(x) for x in state.reshape(-1)]}
            for state in trajectory.states
        ],
        "defects": [float(d) for d in trajectory.defects],
    }


_REPORT_OPERATIONS = (
    "A",
    "A0",
    "Omega",
    "mc_residual",
    "bianchi_residual",
    "gauge_residual_1",
    "gauge_residual_2",
    "conservation_residual",
    "dual",
    "current",
)


def deformation_report_to_json(report):
    data = {
        name: operation_to_json(getattr(report, name))
        for name in _REPORT_OPERATIONS
        if getattr(report, name) is not None
    }
    data["dual_mode"] = report.dual_mode
    data["max_abs_coeff"] = {name: _rational_to_json(value) for name, value in report.max_abs_coeffs().items()}
    return data


def deformation_report_from_json(data):
    fields = {name: operation_from_json(data[name]) for name in _REPORT_OPERATIONS if name in data}
    return DeformationReport(dual_mode=data.get("dual_mode", "self_dual"), **fields)


def cohomology_report_to_json(report):
    return {
        "algebra": report.algebra,
        "dim": report.dim,
        "n_max": report.n_max,
        "dims": [list(pair) for pair in report.dims],
        "ranks": [list(triple) for triple in report.ranks],
        "table": [{key: int(value) for key, value in row.items()} for row in report.table.to_dict(orient="records")],
    }


def cohomology_report_from_json(data):
    try:
        return CohomologyReport(data["algebra"], data["dim"], data["n_max"], data["dims"], data["ranks"])
    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"invalid cohomology report: {e}") from e


def dumps(document):
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
