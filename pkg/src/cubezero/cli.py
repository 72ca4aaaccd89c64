"""Command-line front end.

Exit codes: 0 = holds / success, 1 = fails / check failures, 2 = unknown,
3 = input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import oracle
from .algpres import PresentedAlgebra, algebra_socle, gr, validate
from .diamond import DEFAULT_WINDOW, Outcome, decide_diamond
from .exactalg import GF, QQ, Mod, det_fraction_free, kernel
from .hankel import (
    HankelForm, Hilbert, SequenceTriple, form_rank, gram_window, hankel_matrix,
    hilbert_det_formula,
)
from .ringcore import TripleRing, is_subdirectly_irreducible, socle
from .ringfile import RingFileError, load_ring, serialize_ring

EXIT = {Outcome.HOLDS: 0, Outcome.FAILS: 1, Outcome.UNKNOWN: 2}
INPUT_ERROR = 3


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, (Fraction, Mod)):
        return str(x)
    if isinstance(x, Outcome):
        return x.value
    if is_dataclass(x) and not isinstance(x, type):
        d = {"type": type(x).__name__}
        d.update({k: _jsonable(v) for k, v in asdict(x).items()})
        return d
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(args, lines: list[str], doc: dict):
    if args.json:
        print(json.dumps(_jsonable(doc), indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load(path):
    try:
        return load_ring(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except RingFileError as e:
        raise UsageError(f"{path}: {e}") from None


def _parse_field(text: str):
    t = text.replace("(", "").replace(")", "").replace(" ", "")
    if t == "Q":
        return QQ
    if t.startswith("GF") and t[2:].isdigit():
        try:
            return GF(int(t[2:]))
        except ValueError as e:
            raise UsageError(str(e)) from None
    raise UsageError(f"bad field {text!r}; use Q or GF<p>")


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    ring = _load(args.file)
    try:
        verdict = decide_diamond(ring, args.window)
    except ValueError as e:
        raise UsageError(str(e)) from None
    lines = [verdict.summary(), f"witness: {type(verdict.witness).__name__}"]
    if verdict.lemma:
        lines.append(f"lemma: {verdict.lemma}")
    if "shortcut" in verdict.details:
        lines.append(f"shortcut: {verdict.details['shortcut']}")
    w = verdict.witness
    if hasattr(w, "certified_window"):
        lines.append(f"nondegenerate: det(B_k) != 0 for k <= {w.certified_window}"
                     + (" (closed form covers every k)" if w.closed_form else ""))
    _emit(args, lines, {
        "verdict": verdict.outcome, "witness": w, "lemma": verdict.lemma,
        "window": args.window, "details": verdict.details,
    })
    return EXIT[verdict.outcome]


def cmd_socle(args) -> int:
    ring = _load(args.file)
    if isinstance(ring, PresentedAlgebra):
        if not validate(ring):
            raise UsageError("invalid algebra: " + "; ".join(validate(ring).problems))
        soc = algebra_socle(ring)
        lines = [f"Soc(A) dim {soc.dim} in A-coordinates (e0..e{ring.dim - 1}):"]
        lines += [f"  {_fmt_vec(b)}" for b in soc.basis]
        doc = {"dim": soc.dim, "basis": soc.basis}
    elif isinstance(ring, TripleRing):
        soc = socle(ring).space
        lines = [f"Soc(S) = 0 x Vperp x W, dim {soc.dim} in m-coordinates "
                 f"(V: {ring.dim_v}, W: {ring.dim_w}):"]
        lines += [f"  {_fmt_vec(b)}" for b in soc.basis]
        doc = {"dim": soc.dim, "basis": soc.basis}
    else:
        form = ring.form
        r = form_rank(form, args.window)
        if isinstance(form, HankelForm) and isinstance(form.seq, Hilbert):
            lines = ["Soc(S) = 0 x 0 x F (Vperp = 0: every leading Hankel minor is nonzero)"]
        else:
            rad = kernel(gram_window(form, args.window))
            lines = [f"Soc(S) = 0 x Vperp x F; {r}",
                     f"Vperp within v_0..v_{args.window - 1}: dim {rad.dim}"]
            lines += [f"  {_fmt_vec(b)}" for b in rad.basis]
        doc = {"rank": r, "window": args.window}
    _emit(args, lines, doc)
    return 0


def cmd_gr(args) -> int:
    ring = _load(args.file)
    if isinstance(ring, PresentedAlgebra):
        v = validate(ring)
        if not v:
            raise UsageError("invalid algebra: " + "; ".join(v.problems))
        ring = gr(ring)
    text = serialize_ring(ring)
    if args.json:
        print(json.dumps({"ring": text}))
    else:
        sys.stdout.write(text)
    return 0


def cmd_ideals(args) -> int:
    ring = _load(args.file)
    if isinstance(ring, SequenceTriple):
        raise UsageError("ideal enumeration needs a finite-dimensional ring")
    if not ring.field.is_finite:
        raise UsageError("ideal enumeration needs a finite field")
    if isinstance(ring, PresentedAlgebra):
        v = validate(ring)
        if not v:
            raise UsageError("invalid algebra: " + "; ".join(v.problems))
        ring = gr(ring)
        note = "ideals of gr(A)"
    else:
        note = "ideals of S"
    try:
        ideals = oracle.enumerate_ideals(ring)
    except ValueError as e:
        raise UsageError(str(e)) from None
    si = [is_subdirectly_irreducible(ring, I) for I in ideals]
    lines = [f"{note}: {len(ideals)} proper ideals, {sum(si)} subdirectly irreducible"]
    for I, flag in zip(ideals, si):
        basis = " ".join(_fmt_vec(b) for b in I.space.basis) or "0"
        lines.append(f"  dim {I.space.dim} {'SI ' if flag else '   '} {basis}")
    _emit(args, lines, {
        "ideals": len(ideals), "subdirectly_irreducible": sum(si),
        "list": [{"basis": I.space.basis, "si": f} for I, f in zip(ideals, si)],
    })
    return 0


def cmd_verify(args) -> int:
    F = _parse_field(args.field)
    lemma = args.lemma
    if lemma not in (*oracle.LEMMAS, "compare-vf", "finite-dual"):
        raise UsageError(f"unknown lemma {lemma!r}")
    if not F.is_finite:
        raise UsageError("brute-force verification needs a finite field")
    exhaustive = args.random is None
    if lemma in oracle.LEMMAS:
        if exhaustive:
            rings = (S for dv in range(args.dimV + 1) for dw in range(args.dimW + 1)
                     for S in oracle.all_triple_rings(F, dv, dw))
        else:
            rings = oracle.random_triple_rings(F, args.dimV + args.dimW, args.random, args.seed)
        try:
            report = oracle.run_suite(lemma, rings)
        except ValueError as e:
            raise UsageError(str(e)) from None
    elif lemma == "compare-vf":
        if exhaustive:
            algebras = (A for d in range(1, args.dim + 1)
                        for A in oracle.all_presented_algebras(F, d, inside_m=args.inside_m))
        else:
            algebras = oracle.random_presented_algebras(F, args.dim, args.random, args.seed)
        report = oracle.verify_compare_vf(algebras)
    else:
        report = oracle.verify_finite_dual_trivext(
            args.dimV, F, trials=args.random or 0, seed=args.seed, exhaustive=exhaustive)
    if not exhaustive:
        report.seed = args.seed
    _emit(args, report.lines(), {
        "lemma": report.lemma, "rings": report.rings, "cases": report.cases,
        "failures": report.failures, "seed": report.seed,
    })
    return 0 if report.ok else 1


def cmd_hilbert_det(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be at least 1")
    formula = hilbert_det_formula(n)
    elim = det_fraction_free(hankel_matrix(Hilbert(QQ), n))
    same = formula == elim
    line = f"{formula} (formula) {'=' if same else '!='} {elim} (elimination)"
    _emit(args, [line] if same else [line, "MISMATCH"],
          {"n": n, "formula": formula, "elimination": elim, "equal": same})
    return 0 if same else 1


def cmd_hankel_rank(args) -> int:
    ring = _load(args.file)
    if not isinstance(ring, SequenceTriple):
        raise UsageError("hankel-rank needs a 'ring hankel' file")
    r = form_rank(ring.form, args.window)
    _emit(args, [str(r)], {"rank": r, "window": args.window})
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cubezero",
        description="Quasi-local rings with cube-zero maximal ideal: socles, "
                    "graded rings and the locally-Artinian injective hull property.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check", cmd_check, "decide the property for a ring file")
    sp.add_argument("file")
    sp.add_argument("--window", type=int, default=DEFAULT_WINDOW)

    sp = add("socle", cmd_socle, "print a socle basis")
    sp.add_argument("file")
    sp.add_argument("--window", type=int, default=DEFAULT_WINDOW)

    sp = add("gr", cmd_gr, "print the associated graded ring as a triple ring file")
    sp.add_argument("file")

    sp = add("ideals", cmd_ideals, "enumerate ideals over a finite field")
    sp.add_argument("file")

    sp = add("verify", cmd_verify, "run a brute-force lemma suite")
    sp.add_argument("lemma")
    sp.add_argument("--field", default="GF2")
    sp.add_argument("--dimV", type=int, default=2)
    sp.add_argument("--dimW", type=int, default=2)
    sp.add_argument("--dim", type=int, default=3)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="exhaustive sweep (default)")
    mode.add_argument("--random", type=int, metavar="K", help="K seeded random cases")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--inside-m", action="store_true",
                    help="compare-vf sweep: skip products with a unit component (always invalid)")

    sp = add("hilbert-det", cmd_hilbert_det, "closed-form vs eliminated Hilbert determinant")
    sp.add_argument("n", type=int)

    sp = add("hankel-rank", cmd_hankel_rank, "rank of the Hankel form of a hankel ring")
    sp.add_argument("file")
    sp.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else 0
    if getattr(args, "window", 1) < 1:
        print("error: --window must be at least 1", file=sys.stderr)
        return INPUT_ERROR
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
