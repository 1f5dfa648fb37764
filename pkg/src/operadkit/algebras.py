"""Axiom checkers for the algebra structures carried by graded spaces.

Three fixture shapes are supported: a unital algebra with a compatible
degree -1 bracket (checked by ``check_g_algebra``), a pair of spaces where the
second is an associative algebra acted on by the first
(``check_swiss_cheese_algebra``), and a family of higher operations subject to
the Stasheff identities (``check_a_infinity``).  Every identity is multilinear
and gets verified on all basis tuples; reports carry witnesses, they never
raise on a failed law.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidFixtureError
from .graded import (GradedSpace, MultilinearMap, _basis_tuples,
                     _mixed_basis_tuples, vec_add, vec_scale)
from .rationals import format_rational, parse_rational
from .reporting import CheckReport, CheckResult


@dataclass
class GAlgebraData:
    """Dot product (degree 0), bracket (degree -1) and unit on one space."""

    space: GradedSpace
    dot: MultilinearMap
    bracket: MultilinearMap
    unit: int

    def __post_init__(self):
        if self.dot.m != 2 or self.dot.degree != 0 or self.dot.is_relative:
            raise ValueError("dot must be a plain binary map of degree 0")
        if self.bracket.m != 2 or self.bracket.degree != -1 or self.bracket.is_relative:
            raise ValueError("bracket must be a plain binary map of degree -1")
        if not 0 <= self.unit < self.space.dim:
            raise ValueError("unit must be a basis index")


@dataclass
class SwissAlgebraData:
    """A bracket-carrying algebra acting on an associative algebra."""

    v1: GAlgebraData
    v2: GradedSpace
    product: MultilinearMap
    action: MultilinearMap

    def __post_init__(self):
        if self.product.m != 2 or self.product.degree != 0 or self.product.is_relative:
            raise ValueError("product must be a plain binary map of degree 0")
        if not (self.action.is_relative and self.action.m == 1
                and self.action.n == 1 and self.action.degree == 0):
            raise ValueError("action must be a relative (1,1) map of degree 0")


@dataclass
class AInfinityData:
    """Operations m_k of internal degree 2-k; absent arities are zero."""

    space: GradedSpace
    operations: dict[int, MultilinearMap]

    def __post_init__(self):
        for k, op in self.operations.items():
            if op.is_relative or op.m != k:
                raise ValueError(f"operation at key {k} must be a plain {k}-ary map")
            if op.table and op.degree != 2 - k:
                raise ValueError(f"m_{k} must have internal degree {2 - k}")


def _first_witness(space, names, tuples_and_sides):
    """Format the first failing tuple for a report."""
    inputs, lhs, rhs = tuples_and_sides
    return {
        "inputs": [names[i] for i in inputs],
        "lhs": space.describe_vector(lhs),
        "rhs": space.describe_vector(rhs),
    }


def _run_identity(report, name, space, tuples, lhs_fn, rhs_fn, names=None):
    names = names or [space.name(i) for i in range(space.dim)]
    cases = 0
    witness = None
    for t in tuples:
        cases += 1
        lhs = lhs_fn(t)
        rhs = rhs_fn(t)
        if lhs != rhs and witness is None:
            witness = _first_witness(space, names, (t, lhs, rhs))
    report.add(CheckResult(name, witness is None, cases, witness))


def check_g_algebra(data: GAlgebraData) -> CheckReport:
    """Verify the seven graded identities on all basis tuples.

    Identities: graded commutativity and associativity of the dot product,
    the unit law, shifted antisymmetry and Jacobi for the bracket, the
    Leibniz rule [a,bc] = [a,b]c + (-1)^{(|a|-1)|b|} b[a,c], and [a,1] = 0.
    """
    V = data.space
    dot, br = data.dot, data.bracket
    deg = V.degree
    e = lambda i: {i: Fraction(1)}
    report = CheckReport("g-algebra",
                         metadata={"dimension": V.dim, "unit": V.name(data.unit)})

    pairs = list(_basis_tuples(V, 2))
    triples = list(_basis_tuples(V, 3))
    singles = list(_basis_tuples(V, 1))

    _run_identity(
        report, "dot_commutativity", V, pairs,
        lambda t: dot.evaluate(t),
        lambda t: vec_scale(Fraction((-1) ** (deg(t[0]) * deg(t[1]))),
                            dot.evaluate((t[1], t[0]))))
    _run_identity(
        report, "dot_associativity", V, triples,
        lambda t: dot.apply([dot.evaluate(t[:2]), e(t[2])]),
        lambda t: dot.apply([e(t[0]), dot.evaluate(t[1:])]))
    _run_identity(
        report, "dot_unit", V, singles,
        lambda t: dot.evaluate((data.unit, t[0])),
        lambda t: e(t[0]))
    _run_identity(
        report, "dot_unit_right", V, singles,
        lambda t: dot.evaluate((t[0], data.unit)),
        lambda t: e(t[0]))
    _run_identity(
        report, "bracket_antisymmetry", V, pairs,
        lambda t: br.evaluate(t),
        lambda t: vec_scale(Fraction(-((-1) ** ((deg(t[0]) - 1) * (deg(t[1]) - 1)))),
                            br.evaluate((t[1], t[0]))))
    _run_identity(
        report, "bracket_jacobi", V, triples,
        lambda t: br.apply([e(t[0]), br.evaluate(t[1:])]),
        lambda t: vec_add(
            br.apply([br.evaluate(t[:2]), e(t[2])]),
            vec_scale(Fraction((-1) ** ((deg(t[0]) - 1) * (deg(t[1]) - 1))),
                      br.apply([e(t[1]), br.apply([e(t[0]), e(t[2])])]))))
    _run_identity(
        report, "leibniz", V, triples,
        lambda t: br.apply([e(t[0]), dot.evaluate(t[1:])]),
        lambda t: vec_add(
            dot.apply([br.evaluate(t[:2]), e(t[2])]),
            vec_scale(Fraction((-1) ** ((deg(t[0]) - 1) * deg(t[1]))),
                      dot.apply([e(t[1]), br.apply([e(t[0]), e(t[2])])]))))
    _run_identity(
        report, "bracket_unit", V, singles,
        lambda t: br.evaluate((t[0], data.unit)),
        lambda t: {})
    return report


def check_swiss_cheese_algebra(data: SwissAlgebraData) -> CheckReport:
    """Verify the two-space axioms on all basis tuples.

    The first space must pass check_g_algebra; the second must be graded
    associative; the action must satisfy (u1 u2)v = u1(u2 v), 1v = v, and the
    graded linearity (u1 v1)(u2 v2) = (-1)^{|u2||v1|} (u1 u2)(v1 v2).
    """
    V1, V2 = data.v1.space, data.v2
    dot, prod, act = data.v1.dot, data.product, data.action
    e1 = lambda i: {i: Fraction(1)}
    report = CheckReport("swiss-cheese-algebra",
                         metadata={"dim_v1": V1.dim, "dim_v2": V2.dim})
    report.extend_prefixed("v1.", check_g_algebra(data.v1))

    v2_names = [V2.name(i) for i in range(V2.dim)]
    _run_identity(
        report, "v2_associativity", V2, list(_basis_tuples(V2, 3)),
        lambda t: prod.apply([prod.evaluate(t[:2]), e1(t[2])]),
        lambda t: prod.apply([e1(t[0]), prod.evaluate(t[1:])]),
        names=v2_names)

    mixed21 = [(u1, u2, v) for u1, u2 in _basis_tuples(V1, 2)
               for (v,) in _basis_tuples(V2, 1)]
    cases = 0
    witness = None
    for u1, u2, v in mixed21:
        cases += 1
        lhs = act.apply([dot.evaluate((u1, u2)), e1(v)])
        rhs = act.apply([e1(u1), act.evaluate((u2, v))])
        if lhs != rhs and witness is None:
            witness = {"inputs": [V1.name(u1), V1.name(u2), V2.name(v)],
                       "lhs": V2.describe_vector(lhs),
                       "rhs": V2.describe_vector(rhs)}
    report.add(CheckResult("module_associativity", witness is None, cases, witness))

    _run_identity(
        report, "module_unit", V2, list(_basis_tuples(V2, 1)),
        lambda t: act.evaluate((data.v1.unit, t[0])),
        lambda t: e1(t[0]),
        names=v2_names)

    cases = 0
    witness = None
    for u1, u2 in _basis_tuples(V1, 2):
        for v1, v2 in _basis_tuples(V2, 2):
            cases += 1
            lhs = prod.apply([act.evaluate((u1, v1)), act.evaluate((u2, v2))])
            sign = Fraction((-1) ** (V1.degree(u2) * V2.degree(v1)))
            rhs = vec_scale(sign, act.apply([dot.evaluate((u1, u2)),
                                             prod.evaluate((v1, v2))]))
            if lhs != rhs and witness is None:
                witness = {"inputs": [V1.name(u1), V2.name(v1),
                                      V1.name(u2), V2.name(v2)],
                           "lhs": V2.describe_vector(lhs),
                           "rhs": V2.describe_vector(rhs)}
    report.add(CheckResult("action_linearity", witness is None, cases, witness))
    return report


def operation_from_pair(f1: MultilinearMap, f2: MultilinearMap,
                        data: SwissAlgebraData) -> MultilinearMap:
    """The relative map (u..., v...) -> f1(u...) f2(v...) through the action.

    f1 is a plain map on the acting space, f2 a plain map on the acted-on
    space; f2 moving past the u-arguments contributes the Koszul sign
    (-1)^{deg(f2) * (|u_1|+...+|u_m|)}.
    """
    V1, V2 = data.v1.space, data.v2
    if f1.is_relative or f1.space1 is not V1:
        raise ValueError("f1 must be a plain map on the acting space")
    if f2.is_relative or f2.space1 is not V2:
        raise ValueError("f2 must be a plain map on the acted-on space")
    act = data.action
    table = {}
    for inputs in _mixed_basis_tuples(V1, V2, f1.m, f2.m):
        us, vs = inputs[:f1.m], inputs[f1.m:]
        exponent = f2.degree * sum(V1.degree(i) for i in us)
        value = act.apply([f1.evaluate(us), f2.evaluate(vs)])
        vector = vec_scale(Fraction(-1 if exponent % 2 else 1), value)
        if vector:
            table[inputs] = vector
    return MultilinearMap.relative(V1, V2, f1.m, f2.m,
                                   f1.degree + f2.degree, table)


def check_a_infinity(data: AInfinityData, max_total_arity: int) -> CheckReport:
    """Stasheff identities through the given arity.

    For each n: sum over r+s+t=n of (-1)^{r+st} m_{r+1+t}(1^r (x) m_s (x) 1^t)
    must vanish; the Koszul cost of m_s passing the first r inputs is part of
    the substitution.
    """
    V = data.space
    ident = MultilinearMap.identity(V)
    report = CheckReport("a-infinity", metadata={
        "dimension": V.dim,
        "max_total_arity": max_total_arity,
        "arities_present": sorted(k for k, op in data.operations.items() if op.table),
    })

    def op(k):
        got = data.operations.get(k)
        return got if got is not None else MultilinearMap.zero(V, k, 2 - k)

    for n in range(1, max_total_arity + 1):
        defect = {}
        for r in range(n):
            for s in range(1, n - r + 1):
                t = n - r - s
                outer = op(r + 1 + t)
                inner = op(s)
                if not outer.table or not inner.table:
                    continue
                term = outer.compose([ident] * r + [inner] + [ident] * t)
                coeff = Fraction((-1) ** ((r + s * t) % 2))
                for inputs, vector in term.table.items():
                    defect[inputs] = vec_add(defect.get(inputs, {}),
                                             vec_scale(coeff, vector))
        defect = {k: v for k, v in defect.items() if v}
        witness = None
        if defect:
            inputs = min(defect)
            witness = {"inputs": [V.name(i) for i in inputs],
                       "defect": V.describe_vector(defect[inputs])}
        report.add(CheckResult(f"stasheff_arity_{n}", not defect, V.dim ** n, witness))
    return report


# ---------------------------------------------------------------------------
# Structure-constant files


def _space_from_json(doc) -> GradedSpace:
    try:
        return GradedSpace.from_pairs((b["name"], b["degree"]) for b in doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidFixtureError(f"bad basis list: {exc}") from exc


def _map_from_json(entries, space1, space2, m, n, degree) -> MultilinearMap:
    table = {}
    try:
        for entry in entries or []:
            inputs = tuple(int(i) for i in entry["inputs"])
            vector = {}
            for part in entry["output"]:
                vector[int(part["index"])] = \
                    vector.get(int(part["index"]), Fraction(0)) \
                    + parse_rational(part["coef"])
            if inputs in table:
                raise InvalidFixtureError(f"duplicate entry for inputs {inputs}")
            table[inputs] = vector
        if space2 is None:
            return MultilinearMap.plain(space1, m, degree, table)
        return MultilinearMap.relative(space1, space2, m, n, degree, table)
    except InvalidFixtureError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InvalidFixtureError(f"bad operation table: {exc}") from exc


def _map_to_json(mmap: MultilinearMap):
    entries = []
    for inputs, vector in sorted(mmap.table.items()):
        entries.append({
            "inputs": list(inputs),
            "output": [{"index": i, "coef": format_rational(c)}
                       for i, c in sorted(vector.items())],
        })
    return entries


def _unit_index(doc, space) -> int:
    unit = doc.get("unit")
    if isinstance(unit, int):
        return unit
    if isinstance(unit, str):
        try:
            return space.index(unit)
        except KeyError:
            raise InvalidFixtureError(f"unknown unit name {unit!r}") from None
    raise InvalidFixtureError("missing or malformed 'unit'")


def g_algebra_from_json(doc) -> GAlgebraData:
    space = _space_from_json(doc.get("basis", []))
    dot = _map_from_json(doc.get("dot"), space, None, 2, 0, 0)
    bracket = _map_from_json(doc.get("bracket"), space, None, 2, 0, -1)
    try:
        return GAlgebraData(space, dot, bracket, _unit_index(doc, space))
    except ValueError as exc:
        raise InvalidFixtureError(str(exc)) from exc


def g_algebra_to_json(data: GAlgebraData):
    return {
        "kind": "g-algebra",
        "basis": [{"name": n, "degree": d} for n, d in data.space.basis],
        "unit": data.unit,
        "dot": _map_to_json(data.dot),
        "bracket": _map_to_json(data.bracket),
    }


def swiss_algebra_from_json(doc) -> SwissAlgebraData:
    v1 = g_algebra_from_json(doc.get("v1", {}))
    v2doc = doc.get("v2", {})
    v2 = _space_from_json(v2doc.get("basis", []))
    product = _map_from_json(v2doc.get("product"), v2, None, 2, 0, 0)
    action = _map_from_json(doc.get("action"), v1.space, v2, 1, 1, 0)
    try:
        return SwissAlgebraData(v1, v2, product, action)
    except ValueError as exc:
        raise InvalidFixtureError(str(exc)) from exc


def swiss_algebra_to_json(data: SwissAlgebraData):
    v1doc = g_algebra_to_json(data.v1)
    v1doc.pop("kind")
    return {
        "kind": "swiss-algebra",
        "v1": v1doc,
        "v2": {
            "basis": [{"name": n, "degree": d} for n, d in data.v2.basis],
            "product": _map_to_json(data.product),
        },
        "action": _map_to_json(data.action),
    }


def a_infinity_from_json(doc) -> AInfinityData:
    space = _space_from_json(doc.get("basis", []))
    ops = {}
    for opdoc in doc.get("operations", []):
        try:
            k = int(opdoc["arity"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidFixtureError(f"operation without a valid arity: {exc}") from exc
        if k in ops:
            raise InvalidFixtureError(f"duplicate operation arity {k}")
        ops[k] = _map_from_json(opdoc.get("entries"), space, None, k, 0, 2 - k)
    try:
        return AInfinityData(space, ops)
    except ValueError as exc:
        raise InvalidFixtureError(str(exc)) from exc


def a_infinity_to_json(data: AInfinityData):
    return {
        "kind": "a-infinity",
        "basis": [{"name": n, "degree": d} for n, d in data.space.basis],
        "operations": [{"arity": k, "entries": _map_to_json(op)}
                       for k, op in sorted(data.operations.items())],
    }


def load_algebra_file(path):
    """Load a structure-constant file; dispatches on its "kind" field."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidFixtureError(f"not valid JSON: {exc}") from exc
    kind = doc.get("kind")
    if kind == "g-algebra":
        return g_algebra_from_json(doc)
    if kind == "swiss-algebra":
        return swiss_algebra_from_json(doc)
    if kind == "a-infinity":
        return a_infinity_from_json(doc)
    raise InvalidFixtureError(f"unknown fixture kind {kind!r}")
