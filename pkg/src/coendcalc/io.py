"""JSON documents for categories, functors, set-valued functors, profunctors
and monoidal or promonoidal structures.

Ids may be strings, numbers or (nested) lists; lists are read back as
tuples so they stay hashable. Mappings keyed by non-string ids are written
as lists of ``[key, value]`` pairs and either form is accepted on input.
"""

import json
from pathlib import Path

from .errors import FormatError, NotWellDefined
from .fincat import FinFunctor, op_times, opposite, product, validate_category
from .setfun import FinSet, SetValuedFunctor


def freeze(x):
    if isinstance(x, list):
        return tuple(freeze(v) for v in x)
    return x


def thaw(x):
    if isinstance(x, tuple):
        return [thaw(v) for v in x]
    if isinstance(x, frozenset):
        return sorted((thaw(v) for v in x), key=repr)
    return x


def _pairs(raw, what):
    if isinstance(raw, dict):
        return [(freeze(k), v) for k, v in raw.items()]
    if isinstance(raw, list):
        try:
            return [(freeze(k), v) for k, v in raw]
        except (TypeError, ValueError) as e:
            raise FormatError(f"{what}: expected [key, value] pairs") from e
    raise FormatError(f"{what}: expected a mapping or a list of pairs")


def _table(raw, what):
    return {k: freeze(v) for k, v in _pairs(raw, what)}


def _require(doc, *keys, what="document"):
    if not isinstance(doc, dict):
        raise FormatError(f"{what}: expected a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise FormatError(f"{what}: missing field(s) {', '.join(missing)}")


# ---------------------------------------------------------------- reading


def load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON ({e})") from e


def category_from_doc(doc, name=None):
    """A category document, or a string naming a bundled fixture."""
    if isinstance(doc, str):
        from .fixtures import category

        return category(doc)
    _require(doc, "objects", "morphisms", what="category")
    desc = {
        "objects": [freeze(a) for a in doc["objects"]],
        "morphisms": [tuple(freeze(v) for v in (m if isinstance(m, list) else
                                                [m["id"], m["src"], m["trg"]]))
                      for m in doc["morphisms"]],
        "identities": _table(doc.get("identities", {}), "identities"),
        "composition": [tuple(freeze(v) for v in t) for t in doc.get("composition", [])],
    }
    return validate_category(desc, name=name or doc.get("name"))


def functor_from_doc(doc, source=None, target=None):
    _require(doc, "on_objects", "on_morphisms", what="functor")
    C = source or category_from_doc(doc["source"])
    D = target or category_from_doc(doc["target"])
    return FinFunctor(C, D, _table(doc["on_objects"], "on_objects"),
                      _table(doc["on_morphisms"], "on_morphisms"),
                      name=doc.get("name", "F"))


def _set_tables(doc, base, what):
    obs = {k: [freeze(x) for x in v] for k, v in _pairs(doc["on_objects"], what)}
    ars = {k: {freeze(x): freeze(y) for x, y in _pairs(v, what)}
           for k, v in _pairs(doc["on_morphisms"], what)}
    for c in base.objects:
        obs.setdefault(c, [])
    for f in base.morphisms:
        if f not in ars:
            if base.is_identity(f):
                ars[f] = {x: x for x in obs[base.src(f)]}
            else:
                raise FormatError(f"{what}: no table for morphism {f!r}")
    return obs, ars


def set_functor_from_doc(doc, base=None):
    """``base`` is a category document; ``variance: "contra"`` reads the
    tables as a presheaf on it."""
    _require(doc, "on_objects", "on_morphisms", what="set functor")
    C = base or category_from_doc(doc["base"])
    if base is None and doc.get("variance") == "contra":
        C = opposite(C)
    obs, ars = _set_tables(doc, C, "set functor")
    return SetValuedFunctor(C, obs, ars, check=True, name=doc.get("name", "F"))


def bifunctor_from_doc(doc):
    """A functor on C^op × C with objects and morphisms given as pairs."""
    _require(doc, "base", "on_objects", "on_morphisms", what="bifunctor")
    C = category_from_doc(doc["base"])
    B = op_times(C)
    obs, ars = _set_tables(doc, B, "bifunctor")
    return SetValuedFunctor(B, obs, ars, check=True, name=doc.get("name", "T")), C


def profunctor_from_doc(doc):
    from .profunctor import Profunctor, pro_base

    _require(doc, "A", "B", "on_objects", "on_morphisms", what="profunctor")
    A, B = category_from_doc(doc["A"]), category_from_doc(doc["B"])
    base = pro_base(A, B)
    obs, ars = _set_tables(doc, base, "profunctor")
    data = SetValuedFunctor(base, obs, ars, check=True, name=doc.get("name", "P"))
    return Profunctor(A, B, data)


def monoidal_from_doc(doc):
    """A category document extended with ``tensor``, ``unit``,
    ``associator`` and ``unitors``."""
    from .convolution import MonoidalStructure

    _require(doc, "tensor", "unit", what="monoidal structure")
    C = category_from_doc(doc.get("category", doc))
    t = doc["tensor"]
    _require(t, "on_objects", "on_morphisms", what="tensor")
    T = FinFunctor(product(C, C), C, _table(t["on_objects"], "tensor"),
                   _table(t["on_morphisms"], "tensor"), name="⊗")
    un = doc.get("unitors", {})
    return MonoidalStructure(
        C, T, freeze(doc["unit"]),
        assoc=_table(doc["associator"], "associator") if "associator" in doc else None,
        lunit=_table(un["left"], "unitors") if "left" in un else None,
        runit=_table(un["right"], "unitors") if "right" in un else None,
        name=doc.get("name"))


def _lookup(table, what):
    def fn(*key):
        k = freeze(thaw(key))
        try:
            return table[k]
        except KeyError:
            raise NotWellDefined(f"{what} has no entry for {key!r}", key) from None
    return fn


def promonoidal_from_doc(doc):
    """Extends the category format with ``P``, ``J`` and the tables
    ``alpha``, ``rho``, ``lambda`` keyed by ``[param, tag, element]``."""
    from .convolution import promonoidal_validate

    _require(doc, "P", "J", "alpha", "rho", "lambda", what="promonoidal structure")
    C = category_from_doc(doc.get("category", doc))
    base = product(opposite(C), opposite(C), C)
    obs, ars = _set_tables(doc["P"], base, "P")
    P = SetValuedFunctor(base, obs, ars, check=True, name="P")
    jo, ja = _set_tables(doc["J"], C, "J")
    J = SetValuedFunctor(C, jo, ja, check=True, name="J")
    tabs = {k: {freeze(key): freeze(v) for key, v in doc[k]} for k in ("alpha", "rho", "lambda")}
    return promonoidal_validate(C, P, J, _lookup(tabs["alpha"], "alpha"),
                                _lookup(tabs["rho"], "rho"), _lookup(tabs["lambda"], "lambda"),
                                name=doc.get("name"))


# ---------------------------------------------------------------- writing


def category_to_doc(C):
    return {
        "name": C.name,
        "objects": thaw(C.objects),
        "morphisms": [[thaw(m), thaw(C.src(m)), thaw(C.trg(m))] for m in C.morphisms],
        "identities": [[thaw(a), thaw(C.identity(a))] for a in C.objects],
        "composition": [[thaw(g), thaw(f), thaw(gf)]
                        for (g, f), gf in C.composition_table().items()
                        if not (C.is_identity(g) or C.is_identity(f))],
    }


def functor_to_doc(F, source=None, target=None):
    return {
        "name": F.name,
        "source": source or category_to_doc(F.source),
        "target": target or category_to_doc(F.target),
        "on_objects": [[thaw(a), thaw(F.ob(a))] for a in F.source.objects],
        "on_morphisms": [[thaw(f), thaw(F.ar(f))] for f in F.source.morphisms],
    }


def set_tables_to_doc(F):
    C = F.base
    return {
        "on_objects": [[thaw(c), [thaw(x) for x in F.ob(c)]] for c in C.objects],
        "on_morphisms": [[thaw(f), [[thaw(x), thaw(y)] for x, y in F.ar(f).table.items()]]
                         for f in C.morphisms if not C.is_identity(f)],
    }


def set_functor_to_doc(F, base=None, variance="cov"):
    doc = {"name": F.name, "base": base or category_to_doc(
        F.base if variance == "cov" else opposite(F.base))}
    if variance == "contra":
        doc["variance"] = "contra"
    doc.update(set_tables_to_doc(F))
    return doc


def dumps(doc, level=0):
    """JSON with one line per list entry and per mapping key, entries
    themselves written compactly."""
    pad = "  " * (level + 1)
    if isinstance(doc, dict) and doc:
        body = ",\n".join(f"{pad}{json.dumps(k, ensure_ascii=False)}: {dumps(v, level + 1)}"
                          for k, v in doc.items())
        return "{\n" + body + "\n" + "  " * level + "}"
    if isinstance(doc, list) and doc and level < 3 and any(isinstance(v, list) for v in doc):
        body = ",\n".join(pad + json.dumps(v, ensure_ascii=False) for v in doc)
        return "[\n" + body + "\n" + "  " * level + "]"
    return json.dumps(doc, ensure_ascii=False)


def same_set_functor(F, G):
    """Equal object sets and action tables over a shared base."""
    C = F.base
    return all(FinSet(F.ob(c)).same_elements(G.ob(c)) for c in C.objects) and \
        all(F.ar(f)(x) == G.ar(f)(x) for f in C.morphisms for x in F.ob(C.src(f)))

