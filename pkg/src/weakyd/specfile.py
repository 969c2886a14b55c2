"""Structured-text spec files: parsing, validation and export.

A spec file is a JSON object.  Scalars are exact: integers or strings
``"num/den"`` in lowest terms (floats are rejected).  Tensors are stored
sparsely as lists of entries ``[i, j, ..., value]`` whose indices follow the
in-memory layout::

    mult      [i, j, k, c]     e_i e_j = sum c e_k
    unit      [i, c]
    comult    [i, j, k, c]     Delta e_i = sum c e_j (x) e_k
    counit    [i, c]
    antipode  [out, in, c]
    action    [h, out, in, c]
    coaction  [a, out, in, c]  left comodules
              [out, a, in, c]  right comodules

Kinds and their keys are listed in ``SCHEMA``.  Module-like kinds embed
their algebra under ``"algebra"``; nested specs inherit the outer field.
"""

import json
import os
from dataclasses import dataclass, field as dc_field

import gmpy2
import numpy as np

from .exactlin import QQ, field_from_name
from .weakbialg import AlgebraData, CoalgebraData, HModule, WeakBialgebra
from .weakhopf import Groupoid, WeakHopfAlgebra, groupoid_algebra, solve_antipode
from .yetterdrinfeld import VARIANTS, HComodule

FIELD_ENV = "WEAKYD_FIELD"

_ALG = {"mult": 3, "unit": 1}
_COALG = {"comult": 3, "counit": 1}
SCHEMA = {
    "algebra": ({**_ALG}, set()),
    "weak_bialgebra": ({**_ALG, **_COALG}, set()),
    "weak_hopf": ({**_ALG, **_COALG}, {"antipode"}),
    "groupoid": ({}, set()),
    "module": ({"action": 3}, {"side"}),
    "comodule": ({"coaction": 3}, {"side"}),
    "yd_module": ({"action": 3, "coaction": 3}, {"variant"}),
}
_COMMON = {"kind", "field", "dim", "meta", "basis"}
_GROUPOID_KEYS = {"objects", "morphisms", "compose"}
_TENSOR_RANK = {"mult": 3, "unit": 1, "comult": 3, "counit": 1, "antipode": 2,
                "action": 3, "coaction": 3}


class SpecSyntaxError(SyntaxError):
    pass


class SchemaError(ValueError):
    pass


@dataclass(eq=False)
class SpecFile:
    kind: str
    field: object
    dim: int
    tensors: dict = dc_field(default_factory=dict)
    meta: dict = dc_field(default_factory=dict)
    basis: list = None
    algebra: "SpecFile" = None  # for module-like kinds
    groupoid: Groupoid = None
    options: dict = dc_field(default_factory=dict)  # side, variant


# ---------------------------------------------------------------------------
# parsing


def _scalar(F, v, where):
    if isinstance(v, bool) or isinstance(v, float):
        raise SchemaError("%s: %r is not an exact scalar" % (where, v))
    if isinstance(v, int):
        return F.scalar(v)
    if not isinstance(v, str):
        raise SchemaError("%s: expected a fraction string, got %r" % (where, v))
    q = QQ.parse(v)  # FieldError on 1/0 or junk
    if "/" in v:
        num, den = (int(t) for t in v.split("/", 1))
        if den < 0 or gmpy2.gcd(num, den) != 1 or den == 1:
            raise SchemaError("%s: %r is not in lowest terms" % (where, v))
    return F.parse(str(v)) if F is not QQ else q


def _tensor(F, entries, shape, where):
    if not isinstance(entries, list):
        raise SchemaError("%s: expected a list of entries" % where)
    T = F.zeros(shape)
    seen = set()
    for n, e in enumerate(entries):
        loc = "%s[%d]" % (where, n)
        if not isinstance(e, list) or len(e) != len(shape) + 1:
            raise SchemaError("%s: expected %d indices and a value" % (loc, len(shape)))
        idx = tuple(e[:-1])
        for i, s in zip(idx, shape):
            if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < s:
                raise SchemaError("%s: index %r out of range for dim %d" % (loc, i, s))
        if idx in seen:
            raise SchemaError("%s: repeated index %r" % (loc, list(idx)))
        seen.add(idx)
        T[idx] = _scalar(F, e[-1], loc)
    return T


def _int(d, key, where):
    v = d.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise SchemaError("%s: %r must be a non-negative integer" % (where, key))
    return v


def _groupoid(d, where):
    objs = d.get("objects")
    mors = d.get("morphisms")
    comp = d.get("compose")
    if not isinstance(objs, list) or not isinstance(mors, list) or not isinstance(comp, list):
        raise SchemaError("%s: groupoid needs objects, morphisms and compose lists" % where)
    src, tgt, names = {}, {}, []
    for n, m in enumerate(mors):
        if not (isinstance(m, list) and len(m) == 3 and all(isinstance(x, str) for x in m)):
            raise SchemaError("%s.morphisms[%d]: expected [name, source, target]" % (where, n))
        names.append(m[0])
        src[m[0]], tgt[m[0]] = m[1], m[2]
    compose = {}
    for n, c in enumerate(comp):
        if not (isinstance(c, list) and len(c) == 3 and all(isinstance(x, str) for x in c)):
            raise SchemaError("%s.compose[%d]: expected [g, h, g o h]" % (where, n))
        compose[(c[0], c[1])] = c[2]
    for g in names:
        if src[g] not in objs or tgt[g] not in objs:
            raise SchemaError("%s: morphism %r has an unknown endpoint" % (where, g))
    bare = Groupoid(tuple(objs), tuple(names), src, tgt, compose, {})
    ids = {x: bare.identity(x) for x in objs}
    inverse = {}
    for g in names:
        for h in names:
            if compose.get((g, h)) == ids[tgt[g]]:
                inverse[g] = h
    return Groupoid(tuple(objs), tuple(names), src, tgt, compose, inverse).validate()


def _from_obj(d, where, field=None):
    if not isinstance(d, dict):
        raise SchemaError("%s: expected an object" % where)
    kind = d.get("kind")
    if kind not in SCHEMA:
        raise SchemaError("%s: unknown kind %r" % (where, kind))
    required, optional = SCHEMA[kind]
    allowed = _COMMON | set(required) | optional
    if kind == "groupoid":
        allowed |= _GROUPOID_KEYS
    if kind in ("module", "comodule", "yd_module"):
        allowed |= {"algebra"}
    unknown = sorted(set(d) - allowed)
    if unknown:
        raise SchemaError("%s: unknown key(s) %s for kind %s" % (where, unknown, kind))
    override = os.environ.get(FIELD_ENV)
    if field is None:
        field = field_from_name(override or d.get("field", "rational"))
    elif "field" in d and not override and field_from_name(d["field"]) != field:
        raise SchemaError("%s: nested field %r differs from %r" % (where, d["field"], field.name))
    F = field
    spec = SpecFile(kind, F, 0, meta=dict(d.get("meta", {})), basis=d.get("basis"))
    if kind == "groupoid":
        spec.groupoid = _groupoid(d, where)
        spec.dim = len(spec.groupoid.morphisms)
        spec.basis = list(spec.groupoid.morphisms)
        if "dim" in d and d["dim"] != spec.dim:
            raise SchemaError("%s: dim %r but %d morphisms" % (where, d["dim"], spec.dim))
        return spec
    spec.dim = _int(d, "dim", where)
    if spec.basis is not None and len(spec.basis) != spec.dim:
        raise SchemaError("%s: %d basis names for dim %d" % (where, len(spec.basis), spec.dim))
    missing = sorted(k for k in required if k not in d)
    if missing:
        raise SchemaError("%s: missing key(s) %s for kind %s" % (where, missing, kind))
    if kind in ("module", "comodule", "yd_module"):
        if "algebra" not in d:
            raise SchemaError("%s: missing key ['algebra'] for kind %s" % (where, kind))
        spec.algebra = _from_obj(d["algebra"], where + ".algebra", F)
        a, n = spec.algebra.dim, spec.dim
        side = d.get("side", "left")
        if side not in ("left", "right"):
            raise SchemaError("%s: side must be left or right" % where)
        spec.options["side"] = side
        if kind == "yd_module":
            v = d.get("variant")
            if v not in VARIANTS:
                raise SchemaError("%s: unknown variant %r" % (where, v))
            spec.options["variant"] = v
        if "action" in d:
            spec.tensors["action"] = _tensor(F, d["action"], (a, n, n), where + ".action")
        if "coaction" in d:
            right = (kind == "comodule" and side == "right") or (
                kind == "yd_module" and VARIANTS[spec.options["variant"]][1] == "right")
            shape = (n, a, n) if right else (a, n, n)
            spec.tensors["coaction"] = _tensor(F, d["coaction"], shape, where + ".coaction")
        return spec
    n = spec.dim
    for key in sorted(set(required) | (optional & set(d))):
        if key in _TENSOR_RANK:
            spec.tensors[key] = _tensor(F, d[key], (n,) * _TENSOR_RANK[key],
                                        "%s.%s" % (where, key))
    return spec


def loads_spec(text, name="<spec>"):
    try:
        d = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        err = SpecSyntaxError("%s at line %d column %d" % (exc.msg, exc.lineno, exc.colno))
        err.filename, err.lineno, err.offset = name, exc.lineno, exc.colno
        raise err from None
    return _from_obj(d, "$")


def _reject_float(s):
    raise SchemaError("floats are not exact scalars: %s" % s)


def parse_spec(source):
    """Parse a path or a readable stream."""
    if hasattr(source, "read"):
        return loads_spec(source.read(), getattr(source, "name", "<stream>"))
    with open(source, encoding="utf-8") as fh:
        return loads_spec(fh.read(), str(source))


# ---------------------------------------------------------------------------
# building library objects


def algebra_data(spec):
    t = spec.tensors
    return AlgebraData(spec.dim, t["mult"], t["unit"], spec.field)


def build_bialgebra(spec):
    """WeakBialgebra (or WeakHopfAlgebra when an antipode is known or solvable)."""
    if spec.kind == "groupoid":
        return groupoid_algebra(spec.groupoid, spec.field)
    if spec.kind not in ("weak_bialgebra", "weak_hopf"):
        raise SchemaError("kind %s carries no coalgebra" % spec.kind)
    t = spec.tensors
    alg = algebra_data(spec)
    coalg = CoalgebraData(spec.dim, t["comult"], t["counit"], spec.field)
    if "antipode" in t:
        return WeakHopfAlgebra(alg, coalg, t["antipode"])
    B = WeakBialgebra(alg, coalg)
    res = solve_antipode(B)
    if res.status == "found":
        return WeakHopfAlgebra(alg, coalg, res.S)
    return B


def build_module(spec, H):
    t = spec.tensors
    if spec.kind == "module":
        return HModule(spec.dim, t["action"], spec.options["side"])
    if spec.kind == "comodule":
        return HComodule(spec.dim, t["coaction"], spec.options["side"])
    raise SchemaError("kind %s is not a module" % spec.kind)


# ---------------------------------------------------------------------------
# export


def _value(F, v):
    s = F.fmt(v)
    return int(s) if "/" not in s else s


def _entries_json(T, F):
    T = np.asarray(T, dtype=object)
    return [[int(i) for i in idx] + [_value(F, T[idx])]
            for idx in np.ndindex(T.shape) if T[idx] != 0]


def hopf_to_obj(H, kind="weak_hopf", meta=None, basis=None):
    F = H.field
    d = {"kind": kind, "field": F.name, "dim": H.dim,
         "mult": _entries_json(H.m, F), "unit": _entries_json(H.u, F),
         "comult": _entries_json(H.c, F), "counit": _entries_json(H.e, F)}
    if kind == "weak_hopf":
        d["antipode"] = _entries_json(H.S, F)
    if meta:
        d["meta"] = meta
    if basis is not None:
        d["basis"] = list(basis)
    return d


def yd_to_obj(M, algebra_obj, meta=None):
    F = M.H.field
    d = {"kind": "yd_module", "field": F.name, "dim": M.dim, "variant": M.variant,
         "algebra": algebra_obj, "action": _entries_json(M.action, F),
         "coaction": _entries_json(M.coaction, F)}
    if meta:
        d["meta"] = meta
    return d


def groupoid_to_obj(G):
    return {"kind": "groupoid", "field": "rational",
            "objects": list(G.objects),
            "morphisms": [[g, G.source[g], G.target[g]] for g in G.morphisms],
            "compose": [[g, h, G.compose[(g, h)]] for g in G.morphisms for h in G.morphisms
                        if (g, h) in G.compose]}


def dumps_spec(obj):
    """Deterministic text form of a spec object."""
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def export_spec(spec):
    """Spec object of a parsed spec; ``dumps_spec(export_spec(parse(t)))`` reproduces t."""
    F = spec.field
    if spec.kind == "groupoid":
        obj = groupoid_to_obj(spec.groupoid)
        obj["field"] = F.name
        return obj
    obj = {"kind": spec.kind, "field": F.name, "dim": spec.dim}
    obj.update({k: _entries_json(T, F) for k, T in spec.tensors.items()})
    if spec.kind in ("module", "comodule", "yd_module"):
        obj["algebra"] = export_spec(spec.algebra)
        if spec.kind == "yd_module":
            obj["variant"] = spec.options["variant"]
        else:
            obj["side"] = spec.options["side"]
    if spec.meta:
        obj["meta"] = spec.meta
    if spec.basis is not None:
        obj["basis"] = list(spec.basis)
    return obj
