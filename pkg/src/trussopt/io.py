"""JSON model documents: parsing with located diagnostics, serialization.

The document schema mirrors the TrussModel structure one to one. Parsing
is strict: unknown keys are rejected and every diagnostic names the path
of the offending field (e.g. "nodes[3].x"), so files can be fixed
without reading tracebacks.
"""

import json

from .model import (BucklingSpec, DisplacementLimit, LoadCase, Material,
                    MemberGroup, ModelError, ValidationError, make_model)


class ParseError(ModelError):
    def __init__(self, location, message):
        self.location = location
        super().__init__(f"{location}: {message}")


def _require(obj, key, loc, kind=None):
    if key not in obj:
        raise ParseError(loc, f"missing required field '{key}'")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"{loc}.{key}", f"expected {kind.__name__}")
    return value


def _number(obj, key, loc):
    value = _require(obj, key, loc)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{loc}.{key}", "expected a number")
    return float(value)


def _check_keys(obj, allowed, loc):
    unknown = set(obj) - set(allowed)
    if unknown:
        raise ParseError(loc, f"unknown key '{sorted(unknown)[0]}'")


def _check_ids(items, loc):
    ids = [it["id"] for it in items]
    if sorted(ids) != list(range(len(ids))):
        raise ValidationError([("BadNodeIds" if loc == "nodes" else "BadIds",
                                f"{loc}: ids must be unique and contiguous from 0")])
    return ids


def parse_model(text):
    """Parse a JSON model document into a validated TrussModel."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}", exc.msg) from None
    if not isinstance(doc, dict):
        raise ParseError("document", "top level must be an object")
    _check_keys(doc, ("name", "material", "nodes", "supports", "groups",
                      "elements", "load_cases", "displacement_limits"),
                "document")

    name = _require(doc, "name", "document", str)
    mat = _require(doc, "material", "document", dict)
    _check_keys(mat, ("elastic_modulus", "weight_density"), "material")
    material = Material(elastic_modulus=_number(mat, "elastic_modulus", "material"),
                        weight_density=_number(mat, "weight_density", "material"))

    raw_nodes = _require(doc, "nodes", "document", list)
    for i, nd in enumerate(raw_nodes):
        loc = f"nodes[{i}]"
        if not isinstance(nd, dict):
            raise ParseError(loc, "expected an object")
        _check_keys(nd, ("id", "x", "y", "z"), loc)
        _require(nd, "id", loc, int)
        for k in ("x", "y", "z"):
            _number(nd, k, loc)
    _check_ids(raw_nodes, "nodes")
    nodes = [None] * len(raw_nodes)
    for nd in raw_nodes:
        nodes[nd["id"]] = (float(nd["x"]), float(nd["y"]), float(nd["z"]))

    raw_groups = _require(doc, "groups", "document", list)
    groups = []
    for i, g in enumerate(raw_groups):
        loc = f"groups[{i}]"
        if not isinstance(g, dict):
            raise ParseError(loc, "expected an object")
        _check_keys(g, ("id", "area_min", "area_max", "stress_tension",
                        "stress_compression", "buckling_k"), loc)
        buckling = None
        if "buckling_k" in g:
            buckling = BucklingSpec(K=_number(g, "buckling_k", loc))
        # stress limits may be null, meaning unconstrained (stored as inf)
        tension = _require(g, "stress_tension", loc)
        compression = _require(g, "stress_compression", loc)
        for k, v in (("stress_tension", tension), ("stress_compression", compression)):
            if v is not None and (isinstance(v, bool) or not isinstance(v, (int, float))):
                raise ParseError(f"{loc}.{k}", "expected a number or null")
        groups.append(MemberGroup(
            id=_require(g, "id", loc, int),
            area_min=_number(g, "area_min", loc),
            area_max=_number(g, "area_max", loc),
            stress_tension_limit=float("inf") if tension is None else float(tension),
            stress_compression_limit=float("inf") if compression is None else float(compression),
            buckling=buckling))

    raw_elements = _require(doc, "elements", "document", list)
    for i, e in enumerate(raw_elements):
        loc = f"elements[{i}]"
        if not isinstance(e, dict):
            raise ParseError(loc, "expected an object")
        _check_keys(e, ("id", "a", "b", "group"), loc)
        for k in ("id", "a", "b", "group"):
            _require(e, k, loc, int)
    _check_ids(raw_elements, "elements")
    elements = [None] * len(raw_elements)
    for e in raw_elements:
        elements[e["id"]] = (e["a"], e["b"], e["group"])

    raw_supports = _require(doc, "supports", "document", list)
    supports = []
    for i, s in enumerate(raw_supports):
        loc = f"supports[{i}]"
        if not isinstance(s, dict):
            raise ParseError(loc, "expected an object")
        _check_keys(s, ("node", "fixed"), loc)
        fixed = _require(s, "fixed", loc, list)
        for d in fixed:
            if d not in ("x", "y", "z"):
                raise ParseError(f"{loc}.fixed", f"unknown dof '{d}'")
        supports.append((_require(s, "node", loc, int), fixed))

    raw_cases = _require(doc, "load_cases", "document", list)
    cases = []
    for i, lc in enumerate(raw_cases):
        loc = f"load_cases[{i}]"
        if not isinstance(lc, dict):
            raise ParseError(loc, "expected an object")
        _check_keys(lc, ("id", "loads"), loc)
        loads = []
        for j, ld in enumerate(_require(lc, "loads", loc, list)):
            lloc = f"{loc}.loads[{j}]"
            if not isinstance(ld, dict):
                raise ParseError(lloc, "expected an object")
            _check_keys(ld, ("node", "fx", "fy", "fz"), lloc)
            loads.append((_require(ld, "node", lloc, int),
                          (_number(ld, "fx", lloc), _number(ld, "fy", lloc),
                           _number(ld, "fz", lloc))))
        loads.sort()
        cases.append(LoadCase(id=_require(lc, "id", loc, int),
                              point_loads=tuple(loads)))

    raw_limits = doc.get("displacement_limits", [])
    if not isinstance(raw_limits, list):
        raise ParseError("displacement_limits", "expected a list")
    limits = []
    for i, dl in enumerate(raw_limits):
        loc = f"displacement_limits[{i}]"
        if not isinstance(dl, dict):
            raise ParseError(loc, "expected an object")
        _check_keys(dl, ("nodes", "dofs", "limit"), loc)
        dofs = _require(dl, "dofs", loc, list)
        for d in dofs:
            if d not in ("x", "y", "z"):
                raise ParseError(f"{loc}.dofs", f"unknown dof '{d}'")
        limits.append(DisplacementLimit(
            nodes=frozenset(_require(dl, "nodes", loc, list)),
            dofs=frozenset(dofs),
            limit=_number(dl, "limit", loc)))

    return make_model(name, nodes, elements, groups, material, supports,
                      cases, limits)


def _limit_out(v):
    return None if v == float("inf") else v


def serialize_model(model):
    """Serialize a TrussModel to a JSON document string. parse_model of
    the result reproduces the model's semantic content exactly."""
    doc = {
        "name": model.name,
        "material": {
            "elastic_modulus": model.material.elastic_modulus,
            "weight_density": model.material.weight_density,
        },
        "nodes": [{"id": n.id, "x": n.coords[0], "y": n.coords[1],
                   "z": n.coords[2]} for n in model.nodes],
        "groups": [
            {"id": g.id, "area_min": g.area_min, "area_max": g.area_max,
             "stress_tension": _limit_out(g.stress_tension_limit),
             "stress_compression": _limit_out(g.stress_compression_limit),
             **({"buckling_k": g.buckling.K} if g.buckling is not None else {})}
            for g in model.groups],
        "elements": [{"id": e.id, "a": e.node_a, "b": e.node_b,
                      "group": e.group} for e in model.elements],
        "supports": [{"node": s.node, "fixed": sorted(s.fixed_dofs)}
                     for s in model.supports],
        "load_cases": [
            {"id": lc.id,
             "loads": [{"node": nid, "fx": f[0], "fy": f[1], "fz": f[2]}
                       for nid, f in lc.point_loads]}
            for lc in model.load_cases],
        "displacement_limits": [
            {"nodes": sorted(dl.nodes), "dofs": sorted(dl.dofs),
             "limit": dl.limit} for dl in model.displacement_limits],
    }
    return json.dumps(doc, indent=2)


def models_equal(a, b):
    """Semantic equality of two models (identity-compared dataclasses)."""
    return (a.name == b.name
            and a.material == b.material
            and tuple(n.coords for n in a.nodes) == tuple(n.coords for n in b.nodes)
            and a.elements == b.elements
            and a.groups == b.groups
            and a.supports == b.supports
            and a.load_cases == b.load_cases
            and set(a.displacement_limits) == set(b.displacement_limits))
