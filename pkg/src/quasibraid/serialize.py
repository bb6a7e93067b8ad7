"""JSON serialization for every structure kind.

Files are UTF-8 JSON with canonical formatting (sorted keys, compact
separators, trailing newline) so that save/load round trips are
byte-identical.  Scalars are text: decimal integers or "a/b" fractions
over Q, canonical representatives in [0, p) over GF(p).
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError, QuasibraidError
from .exactlin import K_LABELS, LinMap, field_from_name
from .gchq import CrossedGCHQ
from .hq import HopfQuasigroup, UnitalAlgebra
from .tables import GroupAction, GroupTable, LoopTable
from .yd import YDModule


def dump_bytes(jobj):
    return (json.dumps(jobj, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")


def write_file(path, jobj):
    Path(path).write_bytes(dump_bytes(jobj))


def read_file(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _matrix_to_jobj(m):
    fmt = m.field.fmt
    return [[fmt(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def _matrix_from_jobj(field, data, dom, cod, what):
    try:
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ParseError(f"{what}: ragged matrix")
            for j, text in enumerate(row):
                value = field.parse(text)
                if value != field.zero:
                    entries[(i, j)] = value
        return LinMap(field, rows, cols, entries, dom, cod)
    except ParseError:
        raise
    except (QuasibraidError, TypeError, KeyError, IndexError) as exc:
        raise ParseError(f"{what}: {exc}") from exc


def _pair_labels(a, b):
    return tuple(x + y for x in a for y in b)


# -- Cayley tables ---------------------------------------------------------


def table_to_jobj(t):
    return {
        "order": t.order,
        "labels": list(t.labels),
        "table": [list(row) for row in t.table],
    }


def group_from_jobj(jobj):
    try:
        t = GroupTable(jobj["labels"], jobj["table"])
        if t.order != jobj["order"]:
            raise ParseError("declared order does not match table")
        return t
    except ParseError:
        raise
    except (QuasibraidError, TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad group table: {exc}") from exc


def loop_from_jobj(jobj):
    try:
        t = LoopTable(jobj["labels"], jobj["table"])
        if t.order != jobj["order"]:
            raise ParseError("declared order does not match table")
        return t
    except ParseError:
        raise
    except (QuasibraidError, TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad loop table: {exc}") from exc


def action_to_jobj(a):
    return {
        "actor": table_to_jobj(a.actor),
        "carrier": table_to_jobj(a.carrier),
        "carrier_kind": "group" if isinstance(a.carrier, GroupTable) else "loop",
        "maps": [list(m) for m in a.maps],
    }


def action_from_jobj(jobj):
    try:
        actor = group_from_jobj(jobj["actor"])
        if jobj.get("carrier_kind", "group") == "group":
            carrier = group_from_jobj(jobj["carrier"])
        else:
            carrier = loop_from_jobj(jobj["carrier"])
        return GroupAction(actor, carrier, jobj["maps"])
    except ParseError:
        raise
    except (QuasibraidError, TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad action: {exc}") from exc


# -- Hopf quasigroups -------------------------------------------------------


def hq_to_jobj(h):
    fmt = h.field.fmt
    mult = sorted(
        [i, j, k, fmt(value)] for (i, j, k), value in h.algebra.mult.items()
    )
    return {
        "field": h.field.name,
        "dim": h.dim,
        "labels": [atom for (atom,) in h.labels],
        "mult": mult,
        "unit": [fmt(v) for v in h.algebra.unit],
        "comult": _matrix_to_jobj(h.comult),
        "counit": _matrix_to_jobj(h.counit),
        "antipode": _matrix_to_jobj(h.antipode),
    }


def hq_from_jobj(jobj):
    try:
        field = field_from_name(jobj["field"])
        dim = int(jobj["dim"])
        labels = tuple((str(s),) for s in jobj["labels"])
        mult = {
            (int(i), int(j), int(k)): field.parse(text)
            for i, j, k, text in jobj["mult"]
        }
        unit = tuple(field.parse(t) for t in jobj["unit"])
        algebra = UnitalAlgebra(field, dim, labels, mult, unit)
        comult = _matrix_from_jobj(
            field, jobj["comult"], labels, _pair_labels(labels, labels), "comult"
        )
        counit = _matrix_from_jobj(field, jobj["counit"], labels, K_LABELS, "counit")
        antipode = _matrix_from_jobj(field, jobj["antipode"], labels, labels, "antipode")
        return HopfQuasigroup(field, algebra, comult, counit, antipode)
    except ParseError:
        raise
    except (QuasibraidError, TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad hopf quasigroup: {exc}") from exc


# -- crossed group-cograded structures --------------------------------------


def gchq_to_jobj(h):
    fmt = h.field.fmt
    components = {}
    for p in h.grades():
        comp = h.comp(p)
        components[str(p)] = {
            "dim": comp.dim,
            "labels": [atom for (atom,) in comp.labels],
            "mult": sorted([i, j, k, fmt(v)] for (i, j, k), v in comp.mult.items()),
            "unit": [fmt(v) for v in comp.unit],
        }
    return {
        "field": h.field.name,
        "group": table_to_jobj(h.grading),
        "components": components,
        "comult": {
            f"{p},{q}": _matrix_to_jobj(m) for (p, q), m in sorted(h.comult.items())
        },
        "counit": [fmt(h.counit.entry(0, j)) for j in range(h.counit.cols)],
        "antipode": {str(p): _matrix_to_jobj(m) for p, m in sorted(h.antipode.items())},
        "crossing": {
            f"{p}|{q}": _matrix_to_jobj(m) for (p, q), m in sorted(h.crossing.items())
        },
    }


def gchq_from_jobj(jobj):
    try:
        field = field_from_name(jobj["field"])
        grading = group_from_jobj(jobj["group"])
        components = []
        for p in range(grading.order):
            data = jobj["components"][str(p)]
            labels = tuple((str(s),) for s in data["labels"])
            mult = {
                (int(i), int(j), int(k)): field.parse(text)
                for i, j, k, text in data["mult"]
            }
            unit = tuple(field.parse(t) for t in data["unit"])
            components.append(UnitalAlgebra(field, int(data["dim"]), labels, mult, unit))

        comult = {}
        for key, data in jobj["comult"].items():
            p, q = (int(s) for s in key.split(","))
            pq = grading.mul(p, q)
            comult[(p, q)] = _matrix_from_jobj(
                field,
                data,
                components[pq].labels,
                _pair_labels(components[p].labels, components[q].labels),
                f"comult {key}",
            )
        counit = LinMap(
            field,
            1,
            components[0].dim,
            {
                (0, j): field.parse(text)
                for j, text in enumerate(jobj["counit"])
                if field.parse(text) != field.zero
            },
            components[0].labels,
            K_LABELS,
        )
        antipode = {}
        for key, data in jobj["antipode"].items():
            p = int(key)
            antipode[p] = _matrix_from_jobj(
                field,
                data,
                components[p].labels,
                components[grading.inv(p)].labels,
                f"antipode {key}",
            )
        crossing = {}
        for key, data in jobj["crossing"].items():
            p, q = (int(s) for s in key.split("|"))
            target = grading.mul(grading.mul(p, q), grading.inv(p))
            crossing[(p, q)] = _matrix_from_jobj(
                field,
                data,
                components[q].labels,
                components[target].labels,
                f"crossing {key}",
            )
        return CrossedGCHQ(field, grading, components, comult, counit, antipode, crossing)
    except ParseError:
        raise
    except (QuasibraidError, TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad crossed structure: {exc}") from exc


# -- Yetter-Drinfeld modules -------------------------------------------------


def yd_to_jobj(m, base_ref=None):
    """base_ref, when given, is stored instead of the inline base (a path
    interpreted relative to the module file)."""
    return {
        "base": base_ref if base_ref is not None else gchq_to_jobj(m.base),
        "grade": m.grade,
        "dim": m.dim,
        "labels": [list(label) for label in m.labels],
        "action": _matrix_to_jobj(m.action),
        "coaction": {str(r): _matrix_to_jobj(rho) for r, rho in sorted(m.coaction.items())},
        "strict": m.strict,
    }


def yd_from_jobj(jobj, base_dir=None):
    try:
        base_field = jobj["base"]
        if isinstance(base_field, str):
            path = Path(base_field)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            base = gchq_from_jobj(read_file(path))
        else:
            base = gchq_from_jobj(base_field)
        field = base.field
        grade = int(jobj["grade"])
        labels = tuple(tuple(str(a) for a in label) for label in jobj["labels"])
        comp = base.comp(grade)
        action = _matrix_from_jobj(
            field, jobj["action"], _pair_labels(comp.labels, labels), labels, "action"
        )
        coaction = {}
        for key, data in jobj["coaction"].items():
            r = int(key)
            coaction[r] = _matrix_from_jobj(
                field,
                data,
                labels,
                _pair_labels(labels, base.comp(r).labels),
                f"coaction {key}",
            )
        return YDModule(base, grade, labels, action, coaction, bool(jobj["strict"]))
    except ParseError:
        raise
    except (QuasibraidError, TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad yd module: {exc}") from exc


# -- file-level helpers ------------------------------------------------------


_TO_JOBJ = {
    "table": table_to_jobj,
    "action": action_to_jobj,
    "hq": hq_to_jobj,
    "gchq": gchq_to_jobj,
    "yd": yd_to_jobj,
}


def save(kind, obj, path, **kwargs):
    write_file(path, _TO_JOBJ[kind](obj, **kwargs))


def load(kind, path):
    jobj = read_file(path)
    if kind == "group":
        return group_from_jobj(jobj)
    if kind == "loop":
        return loop_from_jobj(jobj)
    if kind == "action":
        return action_from_jobj(jobj)
    if kind == "hq":
        return hq_from_jobj(jobj)
    if kind == "gchq":
        return gchq_from_jobj(jobj)
    if kind == "yd":
        return yd_from_jobj(jobj, base_dir=Path(path).parent)
    raise ParseError(f"unknown structure kind {kind!r}")
