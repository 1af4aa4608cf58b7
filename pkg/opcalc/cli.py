import argparse
import logging
import os
import sys
import time
import traceback
from fractions import Fraction

from opcalc import __version__
from opcalc.model.cohomology import ENTRY_CAP
from opcalc.model.dynamics import DynamicsConfig
from opcalc.model.exceptions import AssociativityRequiredError, OperadError, ResourceCapError
from opcalc.model.params_validator import RESOURCE_ERROR, USAGE_ERROR, ParamsValidator
from opcalc.model.runners.cohomology_runner import CohomologyRunner
from opcalc.model.runners.deform_runner import DeformRunner
from opcalc.model.runners.evolve_runner import EvolveRunner
from opcalc.model.runners.verify_runner import VerifyRunner
from opcalc.model.serialization import bundled_algebras, dumps, load_algebra, load_operation
from opcalc.model.utils import build_error, format_rational

LOG_LEVEL = os.environ.get("OPCALC_LOG_LEVEL", "WARNING")

# instance objects
params_validator = ParamsValidator()
verify_runner = VerifyRunner()
cohomology_runner = CohomologyRunner()
deform_runner = DeformRunner()
evolve_runner = EvolveRunner()

logger = logging.getLogger("opcalc")


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def init_services():
    with open(os.path.join(os.path.dirname(__file__), "data.txt")) as f:
        description = f.read()
    logging.basicConfig(level=LOG_LEVEL, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    parser = ArgumentParser(prog="opcalc", description=description)
    parser.add_argument("--timing", action="store_true", help="report runtime_ms (output is then not reproducible)")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("info", help="Title, description and version.")

    verify = commands.add_parser("verify", help="Check the operad identities on seeded random operations.")
    verify.add_argument("--dim", type=int, default=2)
    verify.add_argument("--max-degree", type=int, default=3)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=42)

    cohomology = commands.add_parser("cohomology", help="Hochschild cohomology dimensions of an algebra.")
    cohomology.add_argument("--algebra", required=True, help=f"file or bundled name ({', '.join(bundled_algebras())})")
    cohomology.add_argument("--n-max", type=int, default=2)
    cohomology.add_argument("--basis", action="store_true", help="also print representative cocycles")

    deform = commands.add_parser("deform", help="Curvature, Maurer-Cartan, Bianchi and gauge residuals.")
    deform.add_argument("--algebra", required=True)
    perturbation = deform.add_mutually_exclusive_group(required=True)
    perturbation.add_argument("--mu0", help="perturbed multiplication")
    perturbation.add_argument("--omega", help="deformation mu0 - mu")
    deform.add_argument("--dual-mode", default="self_dual")
    deform.add_argument("--custom-dual")
    deform.add_argument("--current")

    evolve = commands.add_parser("evolve", help="Integrate the Heisenberg flow generated by a degree-1 cocycle.")
    evolve.add_argument("--algebra", required=True)
    evolve.add_argument("--hamiltonian", required=True)
    evolve.add_argument("--state", required=True)
    evolve.add_argument("--t-end", type=float, default=1.0)
    evolve.add_argument("--dt", type=float, default=1e-3)
    evolve.add_argument("--lambda", dest="rate", type=float, default=1.0)

    return parser


def run_report(command, inputs, results, all_passed, max_residual):
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "all_passed": all_passed,
        "max_residual": max_residual,
        "runtime_ms": None,
    }


def cmd_info(args):
    with open(os.path.join(os.path.dirname(__file__), "data.txt")) as f:
        description = f.read()
    results = {"title": "opcalc", "description": description, "version": __version__, "algebras": bundled_algebras()}
    return run_report("info", {}, results, True, "0"), 0


def cmd_verify(args):
    validations = [
        params_validator.validate_dim(args.dim),
        params_validator.validate_max_degree(args.max_degree),
        params_validator.validate_trials(args.trials),
    ]
    for is_valid, value in validations:
        if not is_valid:
            return value
    is_valid, error = params_validator.validate_size(args.dim, args.max_degree, ENTRY_CAP)
    if not is_valid:
        return error

    inputs = {"dim": args.dim, "max_degree": args.max_degree, "trials": args.trials, "seed": args.seed}
    results = verify_runner.get_verify_output(args.dim, args.max_degree, args.trials, args.seed)
    all_passed = all(row["failures"] == 0 for row in results)
    max_residual = max((row["max_residual"] for row in results), key=Fraction, default="0")
    return run_report("verify", inputs, results, all_passed, max_residual), 0 if all_passed else 1


def cmd_cohomology(args):
    is_valid, value = params_validator.validate_n_max(args.n_max)
    if not is_valid:
        return value
    algebra = load_algebra(args.algebra)
    inputs = {"algebra": algebra.name or args.algebra, "n_max": args.n_max}
    results = cohomology_runner.get_cohomology_output(algebra, args.n_max, args.basis)
    all_passed = results["complex_residual"] == "0"
    return run_report("cohomology", inputs, results, all_passed, results["complex_residual"]), 0 if all_passed else 1


def cmd_deform(args):
    custom_dual = load_operation(args.custom_dual) if args.custom_dual else None
    is_valid, value = params_validator.validate_dual_mode(args.dual_mode, custom_dual)
    if not is_valid:
        return value
    algebra = load_algebra(args.algebra)
    mu0 = load_operation(args.mu0) if args.mu0 else None
    omega = load_operation(args.omega) if args.omega else None
    current = load_operation(args.current) if args.current else None

    inputs = {
        "algebra": algebra.name or args.algebra,
        "mu0": args.mu0,
        "omega": args.omega,
        "dual_mode": value,
        "custom_dual": args.custom_dual,
        "current": args.current,
    }
    report, results = deform_runner.get_deform_output(algebra, mu0, omega, value, custom_dual, current)
    max_residual = format_rational(max(report.max_abs_coeffs().values()))
    all_passed = report.all_zero
    return run_report("deform", inputs, results, all_passed, max_residual), 0 if all_passed else 1


def cmd_evolve(args):
    validations = [params_validator.validate_time(args.t_end, args.dt), params_validator.validate_rate(args.rate)]
    for is_valid, value in validations:
        if not is_valid:
            return value
    algebra = load_algebra(args.algebra)
    h = load_operation(args.hamiltonian)
    f0 = load_operation(args.state)
    config = DynamicsConfig(args.rate, args.t_end, args.dt)

    inputs = {
        "algebra": algebra.name or args.algebra,
        "hamiltonian": args.hamiltonian,
        "state": args.state,
        "t_end": args.t_end,
        "dt": args.dt,
        "lambda": args.rate,
    }
    results, all_passed = evolve_runner.get_evolve_output(algebra, h, f0, config)
    return run_report("evolve", inputs, results, all_passed, results["max_defect"]), 0 if all_passed else 1


COMMANDS = {
    "info": cmd_info,
    "verify": cmd_verify,
    "cohomology": cmd_cohomology,
    "deform": cmd_deform,
    "evolve": cmd_evolve,
}


def main(argv=None):
    parser = init_services()
    start = time.perf_counter()
    try:
        args = parser.parse_args(argv)
        document, exit_code = COMMANDS[args.command](args)
        if args.timing and "command" in document:
            document["runtime_ms"] = int((time.perf_counter() - start) * 1000)
    except UsageError as e:
        document, exit_code = build_error(str(e), USAGE_ERROR)
    except ResourceCapError as e:
        logger.error("resource cap exceeded: %s", e)
        document, exit_code = build_error(str(e), RESOURCE_ERROR)
    except AssociativityRequiredError as e:
        logger.error("%s", e)
        document, exit_code = build_error(str(e), USAGE_ERROR)
        document["associator_entries"] = [
            {"index": list(index), "value": format_rational(value)} for index, value in e.entries
        ]
    except OperadError as e:
        logger.error("%s: %s", type(e).__name__, e)
        document, exit_code = build_error(str(e), USAGE_ERROR, traceback.format_exc())
    sys.stdout.write(dumps(document))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
