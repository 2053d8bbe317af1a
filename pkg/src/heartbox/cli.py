"""``heartbox <noun> <verb> [flags]``.

State lives in ``workspace.json`` inside the output directory: the active
fixture (or a loaded algebra file) plus any extra modules registered with
``module load``.  Every command prints a text rendering and writes the same
result as ``<stem>.json`` and ``<stem>.txt`` next to it.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

import click

from . import modules as mods
from .algebra import algebra_from_json, algebra_to_json
from .complexes import cohomology_dims, minimize
from .errors import HeartboxError, MalformedInput
from .fixtures import Fixture, a3rad2, nakayama
from .heart import (SubcatDescriptor, c_approximation, heart_object, is_simple, serre_P,
                    simple_quotient_L, verify_serre_duality)
from .iyama import (ADJUSTED, STRICT, check_max_n_orthogonal, higher_ar_sequence, verify_ar_duality)
from .linalg import FieldSpec
from .serialize import complex_from_json, complex_to_json, resolver, subcat_from_json

WORKSPACE = "workspace.json"


# ---------------------------------------------------------------------------
# workspace


@dataclass
class Workspace:
    out: Path
    seed: int = 0
    convention: str = ADJUSTED
    params: dict = dc_field(default_factory=dict)
    _fixture: Fixture | None = None

    @property
    def path(self) -> Path:
        return self.out / WORKSPACE

    def load(self) -> "Workspace":
        if not self.path.exists():
            raise MalformedInput(f"no workspace in {self.out}; run `heartbox fixture ...` first")
        self.params = _read_json(self.path)
        return self

    def save(self) -> None:
        self.out.mkdir(parents=True, exist_ok=True)
        self.path.write_text(json.dumps(self.params, indent=2, sort_keys=True) + "\n")

    @property
    def fixture(self) -> Fixture:
        if self._fixture is None:
            self._fixture = build_fixture(self.params.get("fixture") or {})
            A = self._fixture.algebra
            for name, lit in sorted(self.params.get("modules", {}).items()):
                m = mods.module_from_json(lit, A)
                m.name = name
                self._fixture.modules[name] = m
        return self._fixture

    @property
    def catalog(self) -> list[mods.Module]:
        return self.fixture.catalog_modules()

    def module(self, ref: str) -> mods.Module:
        p = Path(ref)
        if ref.endswith(".json") and p.exists():
            m = mods.module_from_json(_read_json(p), self.fixture.algebra)
            m.name = m.name or p.stem
            return m
        try:
            return self.fixture[ref]
        except KeyError:
            known = ", ".join(sorted(self.fixture.modules))
            raise MalformedInput(f"unknown module {ref!r}; known: {known}") from None

    def resolve(self):
        return resolver(self.fixture.algebra, self.fixture.modules)

    def subcat(self, ref: str | None) -> SubcatDescriptor:
        cat = self.catalog or None
        if ref is None or ref.upper() == "ALL":
            return SubcatDescriptor.all(cat)
        obj = _read_json(Path(ref))
        if "indec_catalog" not in obj and cat is not None:
            obj = dict(obj, indec_catalog=[m.name for m in cat])
        return subcat_from_json(obj, self.resolve())

    def complex(self, ref: str):
        return complex_from_json(_read_json(Path(ref)), self.fixture.algebra, self.resolve())

    def names(self) -> dict[int, str]:
        return {id(m): n for n, m in self.fixture.modules.items()}

    def label(self, m: mods.Module) -> str:
        return mods.catalog_label(m, self.catalog) if self.catalog else (m.label() if m.dim else "0")

    def complex_payload(self, x) -> dict:
        """Complex JSON plus readable catalogue labels per degree."""
        out = complex_to_json(x, self.names())
        out["labels"] = {str(d): self.label(x.term(d)) for d in x.degrees()}
        return out

    def emit(self, stem: str, payload: dict, text: str) -> None:
        self.out.mkdir(parents=True, exist_ok=True)
        (self.out / f"{stem}.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        (self.out / f"{stem}.txt").write_text(text + "\n")
        click.echo(text)


def _read_json(p: Path):
    try:
        return json.loads(p.read_text())
    except FileNotFoundError:
        raise MalformedInput(f"no such file: {p}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{p} is not valid JSON: {exc}") from exc


def _field(value) -> FieldSpec:
    if value is None or str(value).upper() in ("Q", "QQ"):
        return FieldSpec.rationals()
    if isinstance(value, dict):
        return FieldSpec.from_json(value)
    try:
        return FieldSpec.prime(int(value))
    except ValueError as exc:
        raise MalformedInput(f"bad field {value!r}: {exc}") from exc


def build_fixture(params: dict) -> Fixture:
    kind = params.get("kind")
    if kind == "nakayama":
        p, n = int(params.get("p", 7)), int(params.get("n", 2))
        if n < 1:
            raise MalformedInput("n must be positive")
        return nakayama(_field(p), n)
    if kind == "a3rad2":
        return a3rad2(_field(params.get("field")))
    if kind == "coinvariant":
        from .soergel import coinvariant_fixture

        return coinvariant_fixture(params.get("type", "A2"), _field(params.get("field")))
    if kind == "file":
        A = algebra_from_json(params["algebra"])
        return Fixture(A, {"Lambda": mods.regular_module(A)}, [], {"kind": "file"})
    raise MalformedInput(f"unknown fixture {params!r}")


def _word(text: str) -> list[str]:
    return [w.strip() for w in text.split(",") if w.strip()] if text else []


# ---------------------------------------------------------------------------
# root group


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except MalformedInput as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)
        except HeartboxError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            ctx.exit(1)


@click.group(cls=_Group)
@click.option("--seed", default=0, show_default=True, help="Seed for isomorphism sampling.")
@click.option("--convention", type=click.Choice([ADJUSTED, STRICT]), default=ADJUSTED, show_default=True,
              help="Ext index range for n-orthogonality.")
@click.option("--output-dir", envvar="HEARTBOX_OUT", default="heartbox-out", show_default=True,
              type=click.Path(file_okay=False), help="Workspace and report directory.")
@click.pass_context
def main(ctx, seed: int, convention: str, output_dir: str) -> None:
    """Hearts, approximations and almost split sequences for finite-dimensional algebras."""
    mods.set_seed(seed)
    ctx.obj = Workspace(Path(output_dir), seed, convention)


def _ws(ctx) -> Workspace:
    return ctx.obj.load()


# ---------------------------------------------------------------------------
# fixture


@main.group()
def fixture() -> None:
    """Select a built-in fixture as the active workspace."""


def _activate(ctx, params: dict) -> None:
    ws: Workspace = ctx.obj
    ws.params = {"fixture": params, "modules": {}}
    fx = ws.fixture
    ws.save()
    A = fx.algebra
    payload = {"fixture": params, "algebra": A.name, "dim": A.dim, "catalog": fx.catalog,
               "catalog_dims": [fx[n].dim for n in fx.catalog]}
    text = f"{A.name} (dim {A.dim}); catalogue: {', '.join(fx.catalog) or '-'}"
    ws.emit("fixture", payload, text)


@fixture.command("nakayama")
@click.option("--p", "p", default=7, show_default=True, help="Characteristic (0 for the rationals).")
@click.option("--n", "n", default=2, show_default=True, help="Nilpotency index of x.")
@click.pass_context
def fixture_nakayama(ctx, p: int, n: int) -> None:
    """Truncated polynomial ring k[x]/(x^n)."""
    _activate(ctx, {"kind": "nakayama", "p": p if p else "Q", "n": n})


@fixture.command("a3rad2")
@click.option("--field", default="Q", show_default=True)
@click.pass_context
def fixture_a3(ctx, field: str) -> None:
    """Path algebra of A3 modulo the square of the radical."""
    _activate(ctx, {"kind": "a3rad2", "field": field})


@fixture.command("coinvariant")
@click.option("--type", "kind", type=click.Choice(["A1", "A2", "B2", "A1xA1"]), default="A2", show_default=True)
@click.option("--field", default="Q", show_default=True)
@click.pass_context
def fixture_coinvariant(ctx, kind: str, field: str) -> None:
    """Coinvariant algebra with its Soergel modules."""
    _activate(ctx, {"kind": "coinvariant", "type": kind, "field": field})


# ---------------------------------------------------------------------------
# algebra


@main.group()
def algebra() -> None:
    """Inspect or load the active algebra."""


@algebra.command("load")
@click.argument("path", type=click.Path(dir_okay=False))
@click.pass_context
def algebra_load(ctx, path: str) -> None:
    """Use an algebra file as the workspace."""
    obj = _read_json(Path(path))
    A = algebra_from_json(obj)
    _activate(ctx, {"kind": "file", "algebra": algebra_to_json(A)})


@algebra.command("show")
@click.pass_context
def algebra_show(ctx) -> None:
    ws = _ws(ctx)
    A = ws.fixture.algebra
    J = A.jacobson_radical()
    projs = mods.indecomposable_projectives(A)
    payload = {"name": A.name, "field": A.field.to_json(), "dim": A.dim, "radical_dim": J.dim,
               "commutative": A.is_commutative(), "projective_dims": [P.dim for P in projs]}
    text = (f"{A.name}: dim {A.dim}, radical dim {J.dim}, "
            f"{'commutative' if payload['commutative'] else 'non-commutative'}, "
            f"indecomposable projectives of dims {payload['projective_dims']}")
    ws.emit("algebra", payload, text)


# ---------------------------------------------------------------------------
# module


@main.group()
def module() -> None:
    """Modules of the active workspace."""


@module.command("list")
@click.pass_context
def module_list(ctx) -> None:
    ws = _ws(ctx)
    fx = ws.fixture
    rows = sorted((m.dim, n) for n, m in fx.modules.items())
    payload = {"modules": [{"name": n, "dim": d, "catalog": n in fx.catalog} for d, n in rows]}
    ws.emit("modules", payload, "\n".join(f"{n}\tdim {d}" for d, n in rows))


@module.command("load")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--name", required=True)
@click.pass_context
def module_load(ctx, path: str, name: str) -> None:
    """Validate a module file and register it under NAME."""
    ws = _ws(ctx)
    m = mods.module_from_json(_read_json(Path(path)), ws.fixture.algebra)
    ws.params.setdefault("modules", {})[name] = mods.module_to_json(m)
    ws.save()
    ws.emit("module-load", {"name": name, "dim": m.dim}, f"registered {name} (dim {m.dim})")


@module.command("decompose")
@click.argument("ref")
@click.pass_context
def module_decompose(ctx, ref: str) -> None:
    ws = _ws(ctx)
    m = ws.module(ref)
    dec = mods.indecomposable_summands(m)
    parts = []
    for ind, mult in dec.summands:
        parts.append({"summand": ws.label(ind), "dim": ind.dim, "mult": mult})
    parts.sort(key=lambda r: (r["dim"], r["summand"]))
    text = " ⊕ ".join(p["summand"] if p["mult"] == 1 else f"{p['summand']}^{p['mult']}" for p in parts)
    ws.emit("decompose", {"module": ref, "summands": parts}, text or "0")


@module.command("dtr")
@click.argument("ref")
@click.pass_context
def module_dtr(ctx, ref: str) -> None:
    """The AR translate DTr."""
    ws = _ws(ctx)
    t = mods.transpose_dtr(ws.module(ref))
    label = ws.label(t)
    ws.emit("dtr", {"module": ref, "dtr": label, "dim": t.dim}, f"DTr {ref} = {label}")


@module.command("ext")
@click.argument("m")
@click.argument("n")
@click.option("--i", "i", default=1, show_default=True)
@click.pass_context
def module_ext(ctx, m: str, n: str, i: int) -> None:
    ws = _ws(ctx)
    d = mods.ext_dim(ws.module(m), ws.module(n), i)
    ws.emit("ext", {"m": m, "n": n, "i": i, "dim": d}, f"dim Ext^{i}({m}, {n}) = {d}")


# ---------------------------------------------------------------------------
# complex


@main.group("complex")
def complex_group() -> None:
    """Bounded complexes stored as JSON files."""


@complex_group.command("show")
@click.argument("path", type=click.Path(dir_okay=False))
@click.pass_context
def complex_show(ctx, path: str) -> None:
    """Validate a complex file and report its cohomology."""
    ws = _ws(ctx)
    x = ws.complex(path)
    coh = cohomology_dims(x)
    payload = {"window": [x.lo, x.hi], "dims": {str(d): v for d, v in x.dims().items()},
               "cohomology": {str(d): v for d, v in coh.items()}}
    text = f"{x.describe(ws.catalog)}\ncohomology dims: {dict(sorted(coh.items()))}"
    ws.emit("complex", payload, text)


@complex_group.command("minimize")
@click.argument("path", type=click.Path(dir_okay=False))
@click.pass_context
def complex_minimize(ctx, path: str) -> None:
    """Strip contractible summands."""
    ws = _ws(ctx)
    m = minimize(ws.complex(path)).complex
    ws.emit("minimized", ws.complex_payload(m), m.describe(ws.catalog))


# ---------------------------------------------------------------------------
# heart


@main.group()
def heart() -> None:
    """Approximations and simple objects of the heart of a subcategory."""


_subcat_opt = click.option("--subcat", default=None, help="Subcategory file, or ALL (default).")
_depth_opt = click.option("--depth", type=int, default=None, help="Resolution depth bound.")


@heart.command("approx")
@click.option("--module", "ref", required=True)
@_subcat_opt
@_depth_opt
@click.pass_context
def heart_approx(ctx, ref: str, subcat, depth) -> None:
    """C-approximation of a module placed in degree 0."""
    from .complexes import concentrated

    ws = _ws(ctx)
    ap = c_approximation(concentrated(ws.module(ref), 0), ws.subcat(subcat), depth)
    m = minimize(ap.complex).complex
    ws.emit("approx", ws.complex_payload(m), m.describe(ws.catalog))


@heart.command("simple")
@click.option("--module", "ref", required=True)
@_subcat_opt
@_depth_opt
@click.pass_context
def heart_simple(ctx, ref: str, subcat, depth) -> None:
    """The simple top L of the projective heart object of a module."""
    ws = _ws(ctx)
    c = ws.subcat(subcat)
    L = minimize(simple_quotient_L(ws.module(ref), c, depth)).complex
    payload = ws.complex_payload(L)
    payload["simple"] = is_simple(L, c)
    ws.emit("simple", payload, L.describe(ws.catalog))


@heart.command("certify")
@click.argument("path", type=click.Path(dir_okay=False))
@_subcat_opt
@click.pass_context
def heart_certify(ctx, path: str, subcat) -> None:
    """Check that a complex file is an object of the heart."""
    ws = _ws(ctx)
    h = heart_object(ws.complex(path), ws.subcat(subcat))
    payload = ws.complex_payload(h.complex)
    payload["certified"] = h.certified
    ws.emit("certify", payload, f"certified: {str(h.certified).lower()}")


# ---------------------------------------------------------------------------
# serre and AR sequences


@main.group()
def serre() -> None:
    """Serre functor on projective heart objects."""


@serre.command("apply")
@click.option("--module", "ref", required=True)
@_subcat_opt
@_depth_opt
@click.pass_context
def serre_apply(ctx, ref: str, subcat, depth) -> None:
    ws = _ws(ctx)
    s = minimize(serre_P(ws.module(ref), ws.subcat(subcat), depth)).complex
    ws.emit("serre", ws.complex_payload(s), s.describe(ws.catalog))


@serre.command("check")
@click.option("--module", "ref", required=True)
@click.option("--object", "obj", required=True, help="Complex file of a heart object.")
@_subcat_opt
@click.pass_context
def serre_check(ctx, ref: str, obj: str, subcat) -> None:
    """Compare dim Hom(P_M, V) with dim Hom(V, S P_M)."""
    ws = _ws(ctx)
    a, b = verify_serre_duality(ws.module(ref), ws.complex(obj), ws.subcat(subcat))
    ws.emit("serre-check", {"hom_P_V": a, "hom_V_SP": b, "equal": a == b}, f"{a} {b}")


@main.command("ar-sequence")
@click.option("--module", "ref", required=True)
@click.pass_context
def ar_sequence_cmd(ctx, ref: str) -> None:
    """Almost split sequence ending in an indecomposable module."""
    ws = _ws(ctx)
    seq = higher_ar_sequence(ws.module(ref), SubcatDescriptor.all(ws.catalog or None), 0)
    ws.emit("ar-sequence", seq.to_json(ws.catalog), seq.render(ws.catalog))


# ---------------------------------------------------------------------------
# iyama


@main.group()
def iyama() -> None:
    """Maximal n-orthogonal subcategories."""


def _catalog_file(ws: Workspace, path: str | None) -> list[mods.Module]:
    if path is None:
        if not ws.catalog:
            raise MalformedInput("no catalogue available; pass --catalog")
        return ws.catalog
    obj = _read_json(Path(path))
    refs = obj.get("modules", obj.get("indec_catalog")) if isinstance(obj, dict) else obj
    if not isinstance(refs, list):
        raise MalformedInput("catalogue file must list module references")
    resolve = ws.resolve()
    return [resolve(r) for r in refs]


@iyama.command("check")
@click.option("--subcat", required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--catalog", default=None)
@click.pass_context
def iyama_check(ctx, subcat: str, n: int, catalog) -> None:
    ws = _ws(ctx)
    rep = check_max_n_orthogonal(ws.subcat(subcat), n, _catalog_file(ws, catalog), ws.convention)
    text = [f"passes: {str(rep.passes).lower()}", f"excluded: {rep.excluded}"]
    if rep.witnesses:
        text.append(f"witnesses: {rep.witnesses}")
    ws.emit("iyama-check", rep.to_json(), "\n".join(text))


@iyama.command("sequence")
@click.option("--module", "ref", required=True)
@click.option("--subcat", required=True)
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def iyama_sequence(ctx, ref: str, subcat: str, n: int) -> None:
    """n-almost split sequence ending in a module of C."""
    ws = _ws(ctx)
    seq = higher_ar_sequence(ws.module(ref), ws.subcat(subcat), n)
    ws.emit("iyama-sequence", seq.to_json(ws.catalog), seq.render(ws.catalog))


@iyama.command("duality")
@click.option("--module", "ref", required=True)
@click.option("--subcat", required=True)
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def iyama_duality(ctx, ref: str, subcat: str, n: int) -> None:
    """Stable Hom(X, Y) against Ext^{n+1}(Y, X') for every Y in C."""
    ws = _ws(ctx)
    c = ws.subcat(subcat)
    x = ws.module(ref)
    ys = c.generators if not c.is_all else ws.catalog
    rows = []
    for y in ys:
        a, b = verify_ar_duality(x, y, c, n)
        rows.append({"y": y.label(), "stable_hom": a, "ext": b})
    ok = all(r["stable_hom"] == r["ext"] for r in rows)
    text = "\n".join(f"{r['y']}: {r['stable_hom']} {r['ext']}" for r in rows) + f"\nequal: {str(ok).lower()}"
    ws.emit("iyama-duality", {"module": ref, "rows": rows, "equal": ok}, text)


# ---------------------------------------------------------------------------
# frobenius


@main.group()
def frobenius() -> None:
    """Dualities over commutative Frobenius algebras."""


@frobenius.command("check")
@click.pass_context
def frobenius_check(ctx) -> None:
    from .frobenius import is_frobenius

    ws = _ws(ctx)
    A = ws.fixture.algebra
    ok = A.is_commutative() and is_frobenius(A)
    ws.emit("frobenius", {"algebra": A.name, "commutative": A.is_commutative(), "frobenius": ok},
            f"frobenius: {str(ok).lower()}")


@frobenius.command("dual")
@click.option("--module", "ref", default=None, help="Dualise the projective heart object of a module.")
@click.option("--object", "obj", default=None, help="Complex file of a heart object.")
@_subcat_opt
@click.pass_context
def frobenius_dual(ctx, ref, obj, subcat) -> None:
    from .complexes import concentrated
    from .frobenius import duality_dA, duality_dC

    ws = _ws(ctx)
    if (ref is None) == (obj is None):
        raise MalformedInput("pass exactly one of --module and --object")
    v = concentrated(ws.module(ref), 0) if ref else ws.complex(obj)
    c = ws.subcat(subcat)
    d = duality_dA(v) if c.is_all else duality_dC(v, c)
    d = minimize(d).complex
    ws.emit("dual", ws.complex_payload(d), d.describe(ws.catalog))


# ---------------------------------------------------------------------------
# soergel


@main.group()
def soergel() -> None:
    """Coinvariant algebras, Soergel modules and dual Rouquier complexes."""


_type_opt = click.option("--type", "kind", type=click.Choice(["A1", "A2", "B2", "A1xA1"]), default=None,
                         help="Coxeter type (default: the active coinvariant fixture, else A2).")
_field_opt = click.option("--field", default=None, help="Q or a prime.")
_datum_opt = click.option("--datum", default=None, type=click.Path(dir_okay=False),
                          help='Coxeter datum file {"type": ..., "field": ...}.')


def _coinvariants(ctx, kind, field, datum):
    from .soergel import coinvariant_algebra

    ws: Workspace = ctx.obj
    if datum is not None:
        obj = _read_json(Path(datum))
        kind = kind or obj.get("type")
        field = field or obj.get("field")
    if kind is None and ws.path.exists():
        params = ws.load().params.get("fixture", {})
        if params.get("kind") == "coinvariant":
            kind = params.get("type")
            field = field or params.get("field")
    return coinvariant_algebra(kind or "A2", _field(field))


def _word_opt(required: bool = True):
    return click.option("--word", required=required, default=None if required else "",
                        help="Comma-separated simple reflections, e.g. s,t,s.")


@soergel.command("dims")
@_type_opt
@_field_opt
@_datum_opt
@click.pass_context
def soergel_dims(ctx, kind, field, datum) -> None:
    """Dimension and graded dimensions of the coinvariant algebra."""
    R = _coinvariants(ctx, kind, field, datum)
    payload = {"type": R.datum.type, "dim": R.dim, "graded_dims": R.graded_dims}
    ctx.obj.emit("coinvariants", payload, f"{R.datum.type}: dim {R.dim}, graded {R.graded_dims}")


@soergel.command("catalog")
@_type_opt
@_field_opt
@_datum_opt
@click.pass_context
def soergel_catalog_cmd(ctx, kind, field, datum) -> None:
    from .soergel import soergel_catalog

    R = _coinvariants(ctx, kind, field, datum)
    cat = soergel_catalog(R)
    rows = [{"element": x, "dim": b.dim} for x, b in cat.modules.items()]
    ctx.obj.emit("soergel-catalog", {"type": R.datum.type, "modules": rows},
                 "\n".join(f"B_{r['element']}\tdim {r['dim']}" for r in rows))


@soergel.command("decompose")
@_type_opt
@_field_opt
@_datum_opt
@_word_opt()
@click.pass_context
def soergel_decompose(ctx, kind, field, datum, word) -> None:
    """Soergel modules in a Bott-Samelson module."""
    from .soergel import bott_samelson, decompose_soergel, soergel_catalog

    R = _coinvariants(ctx, kind, field, datum)
    w = _word(word)
    dec = decompose_soergel(R, w)
    cat = soergel_catalog(R)
    rows = sorted(({"element": k[2:], "mult": v, "dim": cat.modules[k[2:]].dim} for k, v in dec.items()),
                  key=lambda r: (-r["dim"], r["element"]))
    payload = {"word": w, "dim": bott_samelson(R, w).dim,
               "summands": [{"element": r["element"], "mult": r["mult"]} for r in rows]}
    text = " ⊕ ".join(f"B_{r['element']}" + (f"^{r['mult']}" if r["mult"] > 1 else "") for r in rows)
    ctx.obj.emit("soergel-decompose", payload, text)


@soergel.command("rouquier")
@_type_opt
@_field_opt
@_datum_opt
@_word_opt(required=False)
@click.pass_context
def soergel_rouquier(ctx, kind, field, datum, word) -> None:
    """Dual Rouquier complex applied to the trivial module."""
    from .soergel import rouquier_complex

    R = _coinvariants(ctx, kind, field, datum)
    K = rouquier_complex(R, _word(word))
    payload = complex_to_json(K)
    payload["cohomology"] = {str(d): v for d, v in cohomology_dims(K).items()}
    ctx.obj.emit("rouquier", payload, f"dims {K.dims()}; cohomology {dict(sorted(cohomology_dims(K).items()))}")


@soergel.command("verma-ext")
@_type_opt
@_field_opt
@_datum_opt
@_word_opt(required=False)
@click.option("--max-i", default=None, type=int, help="Largest degree (default: word length + 1).")
@click.pass_context
def soergel_verma_ext(ctx, kind, field, datum, word, max_i) -> None:
    """Ext dimensions between Verma modules through the dual Rouquier complex."""
    from .soergel import verma_ext

    R = _coinvariants(ctx, kind, field, datum)
    w = _word(word)
    top = len(w) + 1 if max_i is None else max_i
    dims = [verma_ext(R, w, i) for i in range(top + 1)]
    ctx.obj.emit("verma-ext", {"type": R.datum.type, "word": w, "dims": dims}, json.dumps(dims))


@soergel.command("r-sigma")
@_type_opt
@_field_opt
@_datum_opt
@click.pass_context
def soergel_r_sigma(ctx, kind, field, datum) -> None:
    """The complex obtained from the trivial module by the right adjoint of the projection."""
    from .soergel import r_sigma_trivial

    R = _coinvariants(ctx, kind, field, datum)
    x = r_sigma_trivial(R)
    payload = complex_to_json(x)
    payload["cohomology"] = {str(d): v for d, v in cohomology_dims(x).items()}
    ctx.obj.emit("r-sigma", payload, f"dims {x.dims()}; cohomology {dict(sorted(cohomology_dims(x).items()))}")


def run(argv: list[str] | None = None) -> int:
    """Entry point returning the exit code instead of exiting."""
    try:
        rv = main.main(args=argv, prog_name="heartbox", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(run())
