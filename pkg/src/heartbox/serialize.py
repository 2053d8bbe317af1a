"""JSON files for complexes, subcategories and heart objects.

Module references inside these files are either registry names (strings) or
inline module literals.
"""
from __future__ import annotations

from typing import Callable, Mapping

from .algebra import Algebra
from .complexes import BoundedComplex
from .errors import MalformedInput
from .heart import ADD, ALL, HeartObject, SubcatDescriptor
from .linalg import Matrix
from .modules import Module, module_from_json, module_to_json, zero_module

Resolver = Callable[[object], Module]


def resolver(algebra: Algebra, registry: Mapping[str, Module]) -> Resolver:
    def resolve(ref) -> Module:
        if isinstance(ref, str):
            if ref == "0":
                return zero_module(algebra)
            try:
                return registry[ref]
            except KeyError:
                raise MalformedInput(f"unknown module reference {ref!r}") from None
        if isinstance(ref, dict):
            return module_from_json(ref, algebra)
        raise MalformedInput(f"bad module reference {ref!r}")
    return resolve


def complex_to_json(x: BoundedComplex, names: Mapping[int, str] | None = None) -> dict:
    terms = {}
    for d in x.degrees():
        t = x.term(d)
        terms[str(d)] = names[id(t)] if names and id(t) in names else module_to_json(t)
    return {"algebra": x.algebra.name, "window": [x.lo, x.hi], "terms": terms,
            "diffs": {str(d): x.diff(d).to_json() for d in range(x.lo, x.hi)}}


def complex_from_json(obj, algebra: Algebra, resolve: Resolver) -> BoundedComplex:
    try:
        lo, hi = obj["window"]
        terms_obj = obj["terms"]
        diffs_obj = obj.get("diffs", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad complex literal: {exc}") from exc
    if hi < lo:
        raise MalformedInput("complex window is empty")
    terms = [resolve(terms_obj[str(d)]) if str(d) in terms_obj else zero_module(algebra)
             for d in range(lo, hi + 1)]
    diffs = []
    for d in range(lo, hi):
        src, tgt = terms[d - lo], terms[d - lo + 1]
        if str(d) in diffs_obj:
            M = Matrix.from_json(diffs_obj[str(d)])
        else:
            M = Matrix.zeros(algebra.field, tgt.dim, src.dim)
        if M.shape != (tgt.dim, src.dim):
            raise MalformedInput(f"differential in degree {d} has shape {M.shape}")
        diffs.append(M)
    try:
        return BoundedComplex(algebra, lo, terms, diffs)
    except (ValueError, AssertionError) as exc:
        raise MalformedInput(f"invalid complex: {exc}") from exc


def subcat_from_json(obj, resolve: Resolver) -> SubcatDescriptor:
    try:
        mode = obj["mode"]
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad subcategory literal: {exc}") from exc
    catalog = obj.get("indec_catalog")
    cat = [resolve(r) for r in catalog] if catalog is not None else None
    try:
        if mode == ALL:
            return SubcatDescriptor.all(cat)
        if mode == ADD:
            gens = [resolve(r) for r in obj.get("generators", [])]
            return SubcatDescriptor.add(gens, cat)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    raise MalformedInput(f"unknown subcategory mode {mode!r}")


def heart_object_to_json(h: HeartObject, names: Mapping[int, str] | None = None) -> dict:
    out = complex_to_json(h.complex, names)
    out["certified"] = bool(h.certified)
    return out
