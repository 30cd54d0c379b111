"""JSON input parsing and report serialization.

All files and emitted reports carry a top-level {"schema": "cy-hopf/1"} key.
Scalars in input files may be integers, exact rational strings "a/b", or
cyclotomic objects {"order": m, "coeffs": [["num","den"], ...]}; floats are
rejected, every quantity in the system is exact.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cartan import CartanMatrix
from .cyclotomic import CycloNumber
from .datum import CartanDatum, CyReport, LinkingParameter
from .errors import InputError
from .groups import AbelianGroup, Character, character_from_json, element_from_json
from .lie import GroupActionData, LieAlgebraData
from .smash import DEFAULT_DEGREE_BOUND, PresentedAlgebra, parse_word

SCHEMA = "cy-hopf/1"


def load_json_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path}: top level must be an object")
    if "schema" in obj and obj["schema"] != SCHEMA:
        raise InputError(f"{path}: unsupported schema {obj['schema']!r}, expected {SCHEMA!r}")
    return obj


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"exact rational required, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError as exc:
            raise InputError(f"bad rational {value!r}") from exc
    raise InputError(f"bad rational {value!r}")


def parse_scalar(value) -> CycloNumber:
    if isinstance(value, dict):
        return CycloNumber.from_json(value)
    return CycloNumber.from_rational(parse_rational(value))


def parse_group(obj) -> AbelianGroup:
    if not isinstance(obj, dict):
        raise InputError(f"malformed group: {obj!r}")
    return AbelianGroup.from_json(obj)


def parse_datum(obj: dict) -> CartanDatum:
    try:
        group = parse_group(obj["group"])
        cartan = CartanMatrix.from_json(obj["cartan"])
        g = tuple(element_from_json(group, e) for e in obj["g"])
        chi = tuple(character_from_json(group, c) for c in obj["chi"])
    except KeyError as exc:
        raise InputError(f"datum file missing key {exc}") from exc
    linking = []
    for entry in obj.get("lambda", []):
        try:
            i, j = entry["pair"]
            value = parse_scalar(entry["value"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed linking parameter {entry!r}") from exc
        linking.append(LinkingParameter(int(i) - 1, int(j) - 1, value))
    return CartanDatum(group=group, g=g, chi=chi, cartan=cartan, linking=tuple(linking))


def parse_presentation(
    obj: dict, degree_bound: int | None = None
) -> tuple[PresentedAlgebra, Character | None]:
    """Build a PresentedAlgebra from a presentation file; returns the algebra
    and the optional winding character under the "xi" key."""
    try:
        group = parse_group(obj["group"])
        t = int(obj["generators"])
        degrees = tuple(element_from_json(group, e) for e in obj["degrees"])
        actions = tuple(character_from_json(group, c) for c in obj["actions"])
    except KeyError as exc:
        raise InputError(f"presentation file missing key {exc}") from exc
    if len(degrees) != t or len(actions) != t:
        raise InputError(f"presentation declares {t} generators but lists "
                         f"{len(degrees)} degrees / {len(actions)} actions")
    rules = {}
    for entry in obj.get("rules", []):
        try:
            lhs = parse_word(entry["lhs"], t)
            rhs = tuple(
                (parse_word(term["word"], t), parse_scalar(term["coeff"]))
                for term in entry["rhs"]
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed rule {entry!r}") from exc
        if lhs in rules:
            raise InputError(f"duplicate rule for {entry['lhs']!r}")
        rules[lhs] = rhs
    if degree_bound is not None:
        bound = degree_bound
    else:
        try:
            bound = int(obj.get("degree_bound", DEFAULT_DEGREE_BOUND))
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad degree_bound {obj.get('degree_bound')!r}") from exc
    algebra = PresentedAlgebra(group, degrees, actions, rules, bound)
    xi = character_from_json(group, obj["xi"]) if "xi" in obj else None
    return algebra, xi


def parse_lie(obj: dict) -> tuple[LieAlgebraData, GroupActionData]:
    try:
        d = int(obj["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("lie file needs an integer 'dim'") from exc
    table = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for entry in obj.get("brackets", []):
        try:
            i, j = int(entry["i"]) - 1, int(entry["j"]) - 1
            coeffs = [parse_rational(x) for x in entry["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed bracket {entry!r}") from exc
        if not (0 <= i < d and 0 <= j < d):
            raise InputError(f"bracket indices ({i + 1},{j + 1}) outside 1..{d}")
        if len(coeffs) != d:
            raise InputError(f"bracket ({i + 1},{j + 1}) needs {d} coordinates")
        table[i][j] = list(coeffs)
        table[j][i] = [-x for x in coeffs]
    algebra = LieAlgebraData(
        dimension=d,
        brackets=tuple(tuple(tuple(row) for row in plane) for plane in table),
    )
    action_obj = obj.get("action")
    if action_obj is None:
        group = AbelianGroup(())
        action = GroupActionData(group, ())
    else:
        try:
            group = parse_group(action_obj["group"])
            matrices = tuple(
                tuple(tuple(parse_rational(x) for x in row) for row in m)
                for m in action_obj["matrices"]
            )
        except (KeyError, TypeError) as exc:
            raise InputError("malformed action block") from exc
        action = GroupActionData(group, matrices)
    return algebra, action


def parse_cartan_only(obj: dict) -> CartanMatrix:
    try:
        return CartanMatrix.from_json(obj["cartan"])
    except KeyError as exc:
        raise InputError("cartan file needs a 'cartan' key") from exc


# -- report serialization ---------------------------------------------------


def cy_report_to_json(report: CyReport) -> dict:
    witness = None
    if report.inner_witness is not None:
        scalar, element = report.inner_witness
        witness = {"scalar": scalar.to_json(), "element": element.to_json()}
    return {
        "kind": "cy-report",
        "cy_R": report.cy_R,
        "cy_smash": report.cy_smash,
        "cy_dimension": report.cy_dimension,
        "integral_character": report.integral_character.to_json(),
        "hdet": report.hdet.to_json() if report.hdet is not None else None,
        "nakayama_diag": [c.to_json() for c in report.nakayama_diag],
        "inner_witness": witness,
        "criteria": [c.to_json() for c in report.criteria],
        "notes": list(report.notes),
    }


def render_cy_report_text(report: CyReport) -> str:
    lines = [
        f"cy_R: {str(report.cy_R).lower()}",
        f"cy_smash: {str(report.cy_smash).lower()}",
        f"cy_dimension: {report.cy_dimension}",
        f"integral_character: {report.integral_character}",
        f"hdet: {report.hdet if report.hdet is not None else 'n/a'}",
        "nakayama_diag: (" + ", ".join(str(c) for c in report.nakayama_diag) + ")",
    ]
    if report.inner_witness is not None:
        lines.append(f"inner_witness: {report.inner_witness[1]} (scalar {report.inner_witness[0]})")
    else:
        lines.append("inner_witness: none")
    for c in report.criteria:
        lines.append(
            f"criterion {c.criterion}: {'holds' if c.satisfied else 'does not hold'} [{c.detail}]"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
