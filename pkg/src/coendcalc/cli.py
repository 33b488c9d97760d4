"""Command-line front end: ``coendcalc VERB ...``.

Every verb prints one report (text or JSON) and exits 0 when all verdicts
pass, 1 when a check fails and 2 on malformed input.
"""

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import fixtures as fx
from . import io
from .coend import coend, coend_as_colimit, end, end_via_equalizer
from .config import caps
from .convolution import (
    contra_kernel,
    day_associativity,
    day_convolve,
    day_promonoidal,
    fourier,
    hom_kernel,
    parseval,
)
from .errors import CoendError
from .fincat import opposite
from .kanweighted import (
    isbell,
    lan,
    nerve_realization,
    ran,
    ran_pointwise,
    weighted_colimit,
    weighted_limit,
    weighted_via_elements,
    yoneda_embedding,
)
from .profunctor import collage, pro_compose, unitor_witnesses
from .suites import SUITES, run_suite

INPUT_ERRORS = (CoendError, KeyError, ValueError, TypeError)


class Report:
    def __init__(self, command, digest):
        self.command = command
        self.digest = digest
        self.fields = {}
        self.witnesses = []

    def add(self, **kw):
        self.fields.update(kw)

    def witness(self, w):
        self.witnesses.append(w)

    @property
    def ok(self):
        return all(w.ok for w in self.witnesses) and self.fields.get("agrees", True)

    def to_dict(self):
        bad = next((w for w in self.witnesses if not w.ok), None)
        return {"command": self.command, "inputs_digest": self.digest,
                "verdict": "pass" if self.ok else "fail", **self.fields,
                "witnesses": [{"name": w.name, "ok": bool(w.ok)} for w in self.witnesses],
                "counterexample": None if bad is None else
                {"witness": bad.name, "detail": bad.detail, "at": repr(bad.witness)}}


# ------------------------------------------------------------ loading


def _doc(ref):
    """A JSON file path, or the path of a bundled document."""
    p = Path(ref)
    if p.is_file():
        return io.load_json(p)
    bundled = Path(__file__).parent / "data" / ref
    if bundled.is_file():
        return io.load_json(bundled)
    raise io.FormatError(f"no such file: {ref}")


def _category(ref):
    if ref in fx.BUNDLED or ref in fx.EXTRA:
        return fx.category(ref)
    return io.category_from_doc(_doc(ref))


def _monoidal(ref):
    try:
        return fx.monoidal(ref)
    except KeyError:
        return io.monoidal_from_doc(_doc(ref))


def _setfun(ref, base):
    return io.set_functor_from_doc(_doc(ref), base=base)


def _digest(args, refs):
    h = hashlib.sha256(args.verb.encode())
    for r in refs:
        p = Path(r)
        h.update(p.read_bytes() if p.is_file() else r.encode())
    h.update(f"seed={args.seed}".encode())
    return h.hexdigest()[:16]


def _reps(carrier):
    return sorted((io.thaw(x) for x in carrier), key=repr)


def _sizes(F):
    return {c if isinstance(c, str) else json.dumps(io.thaw(c), ensure_ascii=False): len(F.ob(c))
            for c in F.base.objects}


# --------------------------------------------------------------- verbs


def cmd_validate(args, rep):
    doc = _doc(args.file)
    if "tensor" in doc:
        M = io.monoidal_from_doc(doc)
        rep.add(kind="monoidal", objects=len(M.C.objects), morphisms=len(M.C.morphisms))
    elif "P" in doc and "J" in doc:
        PM = io.promonoidal_from_doc(doc)
        for w in PM.witnesses.values():
            rep.witness(w)
        rep.add(kind="promonoidal", objects=len(PM.C.objects))
    elif "A" in doc and "B" in doc:
        P = io.profunctor_from_doc(doc)
        rep.add(kind="profunctor", cardinalities=P.cardinalities().tolist())
    elif "source" in doc:
        F = io.functor_from_doc(doc)
        rep.add(kind="functor", source=F.source.name, target=F.target.name,
                fully_faithful=F.is_fully_faithful())
    elif doc.get("kind") == "bifunctor":
        T, C = io.bifunctor_from_doc(doc)
        rep.add(kind="bifunctor", sizes=_sizes(T))
    elif "base" in doc:
        F = io.set_functor_from_doc(doc)
        rep.add(kind="set functor", sizes=_sizes(F))
    else:
        C = io.category_from_doc(doc)
        rep.add(kind="category", objects=len(C.objects), morphisms=len(C.morphisms))


def cmd_end(args, rep):
    T, C = io.bifunctor_from_doc(_doc(args.file))
    E = end(T, C)
    eq = end_via_equalizer(T, C)
    agrees = set(E.carrier) == set(eq)
    rep.add(size=len(E), carrier=_reps(E.carrier),
            cross_check="equalizer of the product of diagonal sets (a pullback for one arrow)",
            equalizer_size=len(eq), agrees=agrees)


def cmd_coend(args, rep):
    T, C = io.bifunctor_from_doc(_doc(args.file))
    K = coend(T, C)
    rep.add(size=len(K), carrier=_reps(K.carrier),
            cross_check="colimit over the twisted arrow category")
    rep.witness(coend_as_colimit(T))


def _kan(args, rep, kind):
    K = io.functor_from_doc(_doc(args.functor))
    F = _setfun(args.diagram, K.source)
    ext = (lan if kind == "lan" else ran)(K, F)
    rep.add(sizes=_sizes(ext.functor))
    rep.witness(ext.adjunction_witness(ext.functor.materialize()))
    if kind == "ran":
        for d in K.target.objects:
            rep.witness(ran_pointwise(K, F, d))


def cmd_lan(args, rep):
    _kan(args, rep, "lan")


def cmd_ran(args, rep):
    _kan(args, rep, "ran")


def cmd_wlim(args, rep):
    W = io.set_functor_from_doc(_doc(args.weight))
    F = _setfun(args.diagram, W.base)
    E, w = weighted_limit(W, F)
    rep.add(size=len(E))
    rep.witness(w)
    rep.witness(weighted_via_elements(W, F))


def cmd_wcolim(args, rep):
    W = io.set_functor_from_doc(_doc(args.weight))
    F = _setfun(args.diagram, opposite(W.base))
    K, w = weighted_colimit(W, F)
    rep.add(size=len(K), carrier=_reps(K.carrier))
    rep.witness(w)


def cmd_isbell(args, rep):
    Y = io.set_functor_from_doc(_doc(args.copresheaf))
    X = _setfun(args.presheaf, opposite(Y.base))
    O, Sp, w = isbell(X, Y)
    rep.add(O=_sizes(O), Spec=_sizes(Sp))
    rep.witness(w)


def cmd_nerve(args, rep):
    E = _category(args.category)
    P = _setfun(args.presheaf, opposite(E))
    d = _setfun(args.target, opposite(E))
    R, N, w = nerve_realization(yoneda_embedding(E), P, d)
    rep.add(realization=_sizes(R), nerve=_sizes(N))
    rep.witness(w)


def cmd_compose_pro(args, rep):
    P = io.profunctor_from_doc(_doc(args.left))
    Q = io.profunctor_from_doc(_doc(args.right))
    PQ = pro_compose(P, Q)
    rep.add(cardinalities=PQ.cardinalities().tolist())
    for w in unitor_witnesses(PQ):
        rep.witness(w)


def cmd_collage(args, rep):
    P = io.profunctor_from_doc(_doc(args.file))
    Col, w = collage(P)
    rep.add(objects=len(Col.objects), morphisms=len(Col.morphisms))
    rep.witness(w)


def cmd_day(args, rep):
    M = _monoidal(args.monoidal)
    F, G = _setfun(args.left, M.C), _setfun(args.right, M.C)
    conv, ws = day_convolve(F, G, M)
    rep.add(sizes=_sizes(conv))
    for w in ws:
        rep.witness(w)
    rep.witness(day_associativity(F, G, F, M))


def cmd_fourier(args, rep):
    MA = _monoidal(args.source)
    if args.functor:
        MC = _monoidal(args.target)
        Fn = io.functor_from_doc(_doc(args.functor), source=MA.C, target=MC.C)
        K = contra_kernel(Fn, MA, MC)
    else:
        K = hom_kernel(day_promonoidal(MA))
    for w in K.witnesses.values():
        rep.witness(w)
    if not K.ok:
        return
    f = _setfun(args.input, MA.C)
    rep.add(sizes=_sizes(fourier(K, f)))
    if args.with_:
        g = _setfun(args.with_, MA.C)
        rep.witness(parseval(K, f, g))


VERBS = {
    "validate": (cmd_validate, [("file", "category, functor, profunctor or structure JSON")]),
    "end": (cmd_end, [("file", "bifunctor JSON on C^op × C")]),
    "coend": (cmd_coend, [("file", "bifunctor JSON on C^op × C")]),
    "lan": (cmd_lan, [("functor", "functor K: C → D"), ("diagram", "set functor on C")]),
    "ran": (cmd_ran, [("functor", "functor K: C → D"), ("diagram", "set functor on C")]),
    "wlim": (cmd_wlim, [("weight", "weight W on C"), ("diagram", "set functor on C")]),
    "wcolim": (cmd_wcolim, [("weight", "presheaf weight"), ("diagram", "set functor on C")]),
    "isbell": (cmd_isbell, [("presheaf", "X on C^op"), ("copresheaf", "Y on C")]),
    "nerve": (cmd_nerve, [("category", "E (bundled name or JSON)"),
                          ("presheaf", "P on E^op"), ("target", "d on E^op")]),
    "compose-pro": (cmd_compose_pro, [("left", "profunctor P: A ⇸ B"),
                                      ("right", "profunctor Q: B ⇸ C")]),
    "collage": (cmd_collage, [("file", "profunctor JSON")]),
    "day": (cmd_day, [("monoidal", "monoidal base (bundled name or JSON)"),
                      ("left", "set functor F"), ("right", "set functor G")]),
    "fourier": (cmd_fourier, [("source", "monoidal base A"), ("input", "set functor f on A")]),
}


def _options(parser, suppress):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("text", "json"), default=d or "text")
    parser.add_argument("--seed", type=int, default=d or 0)
    parser.add_argument("--cap", type=int, default=d,
                        help="partial-state cap for end searches (also COEND_CAP)")
    parser.add_argument("--timings", action="store_true", default=d or False,
                        help="include wall times (reports are then not reproducible)")


def build_parser():
    ap = argparse.ArgumentParser(prog="coendcalc", description=__doc__.splitlines()[0])
    _options(ap, suppress=False)
    sub = ap.add_subparsers(dest="verb", required=True)
    for verb, (_, pos) in VERBS.items():
        sp = sub.add_parser(verb)
        for name, hlp in pos:
            sp.add_argument(name, help=hlp)
        if verb == "fourier":
            sp.add_argument("--functor", help="strong monoidal functor F; kernel P^F")
            sp.add_argument("--target", help="monoidal base C for --functor")
            sp.add_argument("--with", dest="with_", help="second function g for Parseval")
        _options(sp, suppress=True)
    sp = sub.add_parser("check")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    _options(sp, suppress=True)
    return ap


def _render_text(d, indent=0):
    lines, pad = [], "  " * indent
    for k, v in d.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_render_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(f"{pad}  -")
                lines.extend(_render_text(item, indent + 2))
        elif isinstance(v, (list, bool)) or v is None:
            lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False, default=repr)}")
        else:
            lines.append(f"{pad}{k}: {v}")
    return lines


def _emit(payload, fmt, out):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False, default=repr) + "\n")
    else:
        out.write("\n".join(_render_text(payload)) + "\n")


def run(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    t0 = time.perf_counter()
    with caps(max_states=args.cap):
        try:
            if args.verb == "check":
                names = sorted(SUITES) if args.suite == "all" else [args.suite]
                reports = [run_suite(n, args.seed) for n in names]
                payload = {"command": "check " + args.suite, "seed": args.seed,
                           "verdict": "pass" if all(r.ok for r in reports) else "fail",
                           "suites": [r.to_dict(args.timings) for r in reports]}
                ok = all(r.ok for r in reports)
            else:
                fn, pos = VERBS[args.verb]
                refs = [getattr(args, n) for n, _ in pos]
                rep = Report(args.verb, _digest(args, refs))
                fn(args, rep)
                payload, ok = rep.to_dict(), rep.ok
        except INPUT_ERRORS as e:
            _emit({"command": args.verb, "verdict": "error",
                   "error": type(e).__name__, "message": str(e)}, args.format, out)
            return 2
    if args.timings:
        payload["wall_time"] = round(time.perf_counter() - t0, 3)
    _emit(payload, args.format, out)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
