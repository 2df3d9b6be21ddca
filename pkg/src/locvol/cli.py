"""Batch command-line interface.

One problem per JSON file; the subcommand picks the operation, the file's
`kind` must match.  Results are emitted on standard output as a single
deterministic JSON record (or CSV for sequence tables): exact values always
accompany the 12-digit decimal rendering, which is presentation-only.
Exit codes: 0 success, 2 invalid input, 3 computational failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from importlib import resources

from jsonschema import Draft202012Validator

from . import __version__
from .exactnum import QuadraticNumber, compare_cbrt_sum, format_decimal
from .geometry import GeometryError
from .monomial import MonomialError, MonomialIdeal, asymptotic_multiplicity, \
    multiplicity_sequence
from .surface import DualGraph, SurfaceError, SurfaceLattice, \
    divisor_local_volume, singularity_volume
from .toric import PointedCone, ToricDatum, ToricDivisor, ToricError, \
    fujita_sequence, h1_sequence, local_volume_toric
from .cone import AbelianCover, ConeError, Curve, LatticeModel, ProjSpace, \
    bdff_cone_volume, cone_gamma_volume, cone_singularity_volume, \
    lambda_sequence

SUBCOMMANDS = {
    "toric-volume": "toric",
    "toric-h1": "toric",
    "monomial-mult": "monomial",
    "surface-volume": "surface",
    "cone-volume": "cone",
    "cone-gamma": "cone",
    "bdff-volume": ("cone", "tcomp"),
    "lambda-seq": "cone",
    "fujita-check": "fujita",
    "convexity-check": "logconvexity",
}


class ValidationFailure(Exception):
    pass


def _load_schema():
    text = resources.files("locvol").joinpath("schemas/problem.schema.json").read_text()
    return json.loads(text)


_VALIDATOR = None


def _validate(problem):
    global _VALIDATOR
    if _VALIDATOR is None:
        _VALIDATOR = Draft202012Validator(_load_schema())
    errors = sorted(_VALIDATOR.iter_errors(problem), key=str)
    if errors:
        raise ValidationFailure(errors[0].message)


def _fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise ValidationFailure(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationFailure(f"bad rational {value!r}: {exc}")
    raise ValidationFailure(f"not a rational: {value!r}")


def _render_exact(value):
    if isinstance(value, QuadraticNumber) and not value.is_rational:
        return {"quadratic": {"a": _frac_str(value.a), "b": _frac_str(value.b),
                              "c": value.c}}
    if isinstance(value, QuadraticNumber):
        value = value.as_fraction()
    value = Fraction(value)
    return {"rational": _frac_str(value)}


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _cell(value):
    """Sequence-table cell: integers stay integers, rationals become p/q."""
    if isinstance(value, int):
        return value
    if isinstance(value, QuadraticNumber):
        if value.is_rational:
            return _frac_str(value.as_fraction())
        return f"{_frac_str(value.a)}+{_frac_str(value.b)}*sqrt({value.c})"
    return _frac_str(Fraction(value))


def _record(problem, value, provenance, sequences=None, verdict=None):
    rec = {
        "input": problem,
        "exact_value": _render_exact(value),
        "float_value": format_decimal(value),
        "provenance": provenance,
    }
    if sequences:
        rec["sequences"] = sequences
    if verdict is not None:
        rec["verdict"] = verdict
    return rec


# -- payload builders ---------------------------------------------------------

def _build_divisor(payload) -> ToricDivisor:
    cone = PointedCone(payload["cone"]["generators"])
    datum = ToricDatum(cone, payload["rays"])
    coeffs = tuple(_fraction(c) for c in payload["coeffs"])
    if len(coeffs) != len(datum.rays):
        raise ValidationFailure("coeffs length must match rays length")
    return ToricDivisor(datum, coeffs)


def _build_ideal(payload) -> MonomialIdeal:
    ambient = None
    if "ambient_cone" in payload:
        ambient = PointedCone(payload["ambient_cone"]["generators"])
    return MonomialIdeal(payload["generators"], ambient=ambient)


def _build_graph(payload) -> DualGraph:
    verts = [(v["self_int"], v.get("genus", 0)) for v in payload["vertices"]]
    edges = [(e["i"], e["j"], e.get("multiplicity", 1))
             for e in payload.get("edges", [])]
    return DualGraph(verts, edges)


def _build_model(payload):
    model = payload["model"]
    kind = model["type"]
    if kind == "curve":
        return Curve(model["genus"], model["degree"],
                     model.get("general_position", False))
    if kind == "proj_space":
        return ProjSpace(model["dim"], model["h"])
    if kind == "abelian_cover":
        return AbelianCover(model["base_sq"], model["mixed"], model["pol_sq"])
    if kind == "lattice":
        lattice = SurfaceLattice(
            model["gram"], model["canonical"], model["ample"],
            negative_curves=model.get("negative_curves", ()),
            psef_generators=model.get("psef_generators", ()),
        )
        k = model.get("k", model["canonical"])
        return LatticeModel(
            lattice,
            tuple(_fraction(x) for x in k),
            tuple(_fraction(x) for x in model["h"]),
            envelope_nef_certified=model.get("envelope_nef_certified", False),
        )
    raise ValidationFailure(f"unknown model type {kind!r}")


# -- subcommand implementations -----------------------------------------------

def _run_toric_volume(problem, opts):
    d = _build_divisor(problem["payload"])
    return _record(problem, local_volume_toric(d), "toric.local_volume")


def _run_toric_h1(problem, opts):
    d = _build_divisor(problem["payload"])
    seq = h1_sequence(d, opts["m_max"])
    rows = [[m, c, _cell(norm)] for m, c, norm in seq]
    return _record(
        problem, local_volume_toric(d), "toric.h1_sequence",
        sequences={"header": ["m", "count", "normalized"], "rows": rows},
    )


def _run_monomial_mult(problem, opts):
    ideal = _build_ideal(problem["payload"])
    value = asymptotic_multiplicity(ideal)
    sequences = None
    if opts.get("p_max"):
        seq = multiplicity_sequence(ideal, opts["p_max"])
        sequences = {
            "header": ["p", "mult", "normalized"],
            "rows": [[p, h, _cell(norm)] for p, h, norm in seq],
        }
    return _record(problem, value, "monomial.asymptotic_multiplicity", sequences)


def _run_surface_volume(problem, opts):
    graph = _build_graph(problem["payload"])
    if "divisor" in problem["payload"]:
        d = [_fraction(x) for x in problem["payload"]["divisor"]]
        value = divisor_local_volume(graph, d)
        return _record(problem, value, "surface.divisor_local_volume")
    return _record(problem, singularity_volume(graph), "surface.singularity_volume")


def _run_cone_volume(problem, opts):
    return _record(problem, cone_singularity_volume(_build_model(problem["payload"])),
                   "cone.singularity_volume")


def _run_cone_gamma(problem, opts):
    return _record(problem, cone_gamma_volume(_build_model(problem["payload"])),
                   "cone.gamma_volume")


def _run_bdff(problem, opts):
    model = _build_model(problem["payload"])
    big = bdff_cone_volume(model)
    if problem["kind"] == "cone":
        return _record(problem, big, "cone.nef_envelope_volume")
    small = cone_singularity_volume(model)
    rows = [["nef_envelope_volume", _cell(big)], ["singularity_volume", _cell(small)]]
    return _record(
        problem, big, "cone.nef_envelope_volume",
        sequences={"header": ["quantity", "value"], "rows": rows},
        verdict=bool(big >= small),
    )


def _run_lambda_seq(problem, opts):
    model = _build_model(problem["payload"])
    seq = lambda_sequence(model, opts["m_max"])
    rows = [[m, lam, _cell(norm)] for m, lam, norm in seq]
    return _record(
        problem, cone_singularity_volume(model), "cone.lambda_sequence",
        sequences={"header": ["m", "lambda", "normalized"], "rows": rows},
    )


def _run_fujita_check(problem, opts):
    d = _build_divisor(problem["payload"])
    value = local_volume_toric(d)
    seq = fujita_sequence(d, opts["p_max"])
    rows = [[p, _cell(mult), _cell(norm)] for p, mult, norm in seq]
    ok = bool(seq)
    if seq:
        final = seq[-1][2]
        ok = value > 0 and abs(final - value) * 10 <= value
        tail = [norm for _, _, norm in seq[-3:]]
        if len(tail) == 3 and min(tail) > 0:
            ok = ok and (max(tail) - min(tail)) * 100 <= 3 * min(tail)
    return _record(
        problem, value, "toric.fujita_sequence",
        sequences={"header": ["p", "mult", "normalized"], "rows": rows},
        verdict=ok,
    )


def _run_convexity_check(problem, opts):
    payload = problem["payload"]
    cone = PointedCone(payload["cone"]["generators"])
    datum = ToricDatum(cone, payload["rays"])
    d_a = ToricDivisor(datum, tuple(_fraction(c) for c in payload["coeffs_a"]))
    d_b = ToricDivisor(datum, tuple(_fraction(c) for c in payload["coeffs_b"]))
    if datum.dim != 3:
        raise ValidationFailure("convexity certification is implemented for "
                                "three-dimensional cones")
    mid = ToricDivisor(datum, tuple((a + b) / 2
                                    for a, b in zip(d_a.coeffs, d_b.coeffs)))
    va, vb, vm = (local_volume_toric(x) for x in (d_a, d_b, mid))
    # midpoint log-convexity: vol(mid)^(1/3) <= (va^(1/3) + vb^(1/3)) / 2
    holds = compare_cbrt_sum(va, vb, 8 * vm) >= 0
    rows = [["vol_a", _cell(va)], ["vol_b", _cell(vb)], ["vol_mid", _cell(vm)]]
    return _record(
        problem, vm, "toric.log_convexity_check",
        sequences={"header": ["quantity", "value"], "rows": rows},
        verdict=bool(holds),
    )


_RUNNERS = {
    "toric-volume": _run_toric_volume,
    "toric-h1": _run_toric_h1,
    "monomial-mult": _run_monomial_mult,
    "surface-volume": _run_surface_volume,
    "cone-volume": _run_cone_volume,
    "cone-gamma": _run_cone_gamma,
    "bdff-volume": _run_bdff,
    "lambda-seq": _run_lambda_seq,
    "fujita-check": _run_fujita_check,
    "convexity-check": _run_convexity_check,
}


def _emit_json(record, stream):
    stream.write(json.dumps(record, sort_keys=True, separators=(",", ":")))
    stream.write("\n")


def _emit_csv(record, stream):
    seq = record.get("sequences")
    if seq:
        stream.write(",".join(seq["header"]) + "\n")
        for row in seq["rows"]:
            stream.write(",".join(str(c) for c in row) + "\n")
        return
    stream.write("value\n")
    exact = record["exact_value"]
    if "rational" in exact:
        stream.write(exact["rational"] + "\n")
    else:
        q = exact["quadratic"]
        stream.write(f"{q['a']}+{q['b']}*sqrt({q['c']})\n")


def _error(code, name, message, stream):
    _emit_json({"error": {"code": code, "name": name, "message": message}}, stream)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = argparse.ArgumentParser(
        prog="locvol",
        description="Exact local volumes of divisors and singularity invariants.",
    )
    parser.add_argument("subcommand", choices=sorted(_RUNNERS))
    parser.add_argument("problem", help="path to a JSON problem file")
    parser.add_argument("--m-max", type=int, default=10)
    parser.add_argument("--p-max", type=int, default=8)
    parser.add_argument("--output", choices=("json", "csv"), default=None)
    parser.add_argument("--meta", action="store_true",
                        help="emit version/timestamp metadata on stderr")
    args = parser.parse_args(argv)

    try:
        with open(args.problem, "r", encoding="utf-8") as fh:
            problem = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _error("validation", type(exc).__name__, str(exc), stdout)
        return 2

    try:
        _validate(problem)
        kinds = SUBCOMMANDS[args.subcommand]
        if isinstance(kinds, str):
            kinds = (kinds,)
        if problem["kind"] not in kinds:
            raise ValidationFailure(
                f"subcommand {args.subcommand} expects kind "
                f"{' or '.join(kinds)}, got {problem['kind']!r}"
            )
        opts = dict(problem.get("options", {}))
        if args.m_max is not None:
            opts.setdefault("m_max", args.m_max)
        if args.p_max is not None:
            opts.setdefault("p_max", args.p_max)
        output = args.output or opts.get("output", "json")
        record = _RUNNERS[args.subcommand](problem, opts)
    except ValidationFailure as exc:
        _error("validation", "ValidationFailure", str(exc), stdout)
        return 2
    except (GeometryError, ToricError, MonomialError, SurfaceError, ConeError,
            ValueError) as exc:
        _error("computation", type(exc).__name__, str(exc), stdout)
        return 3

    if output == "csv":
        _emit_csv(record, stdout)
    else:
        _emit_json(record, stdout)
    if args.meta:
        _emit_json({"meta": {"version": __version__, "timestamp": time.time()}},
                   stderr)
    return 0


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
