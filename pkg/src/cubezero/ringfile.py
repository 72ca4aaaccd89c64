"""The line-oriented ``.ring`` text format.

::

    # F[x]/(x^3) in graded form
    ring triple
    field GF 2
    dimV 1
    dimW 1
    beta 0 0 : 1

Directives (one per line, ``#`` starts a comment):

``ring triple|struct|hankel``
    kind of ring; must come first.
``field Q`` / ``field GF <p>``
    scalar field.
``dimV <n>``, ``dimW <n>``
    triple rings.
``dim <n>``, ``maxideal <i> ...``
    structure-constant algebras; ``e_0`` is the unit and ``maxideal`` must
    list ``1 .. n-1`` if present.
``beta <i> <j> : <w_0> ... <w_{dimW-1}>``
    triple rings; for hankel rings one value, giving a finite table
    ``beta(v_i, v_j)``.  The mirrored entry is implied.
``mul <i> <j> : <c_0> ... <c_{dim-1}>``
    structure constants ``e_i e_j``; the mirrored entry is implied and
    unit products ``e_0 e_j = e_j`` are filled in unless given.
``seq hilbert`` | ``seq finite <i>:<h_i>,...`` | ``seq recurrence init <h..> coeffs <a..>``
    Hankel rule ``beta(v_i, v_j) = h_{i+j}``; ``finite`` lists nonzero terms
    and every other term is zero.

Unlisted entries are zero.  Scalars are integers or fractions ``a/b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algpres import PresentedAlgebra
from .exactalg import GF, QQ, Field, Rationals
from .hankel import (
    Explicit, FiniteSupport, HankelForm, Hilbert, Recurrence, SequenceTriple,
)
from .ringcore import TripleRing

__all__ = ["RingFileError", "parse_ring", "serialize_ring", "load_ring", "RingSpec"]

RingSpec = Union[TripleRing, PresentedAlgebra, SequenceTriple]


class RingFileError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass
class _Tok:
    text: str
    col: int


def _tokens(line: str) -> list[_Tok]:
    return [_Tok(m.group(), m.start() + 1) for m in re.finditer(r"[^\s]+", line)]


class _Parser:
    def __init__(self):
        self.kind = None
        self.field: Field | None = None
        self.dims: dict[str, int] = {}
        self.beta: dict = {}
        self.mul: dict = {}
        self.seq = None
        self.maxideal = None

    def error(self, lineno, tok_or_col, msg):
        col = tok_or_col.col if isinstance(tok_or_col, _Tok) else tok_or_col
        raise RingFileError(lineno, col, msg)

    def int_arg(self, lineno, tok, what="integer"):
        if not re.fullmatch(r"\d+", tok.text):
            self.error(lineno, tok, f"expected a non-negative {what}, got {tok.text!r}")
        return int(tok.text)

    def scalar(self, lineno, tok, text=None):
        text = tok.text if text is None else text
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            self.error(lineno, tok, f"bad scalar {text!r}")
        try:
            return self.field(value)
        except ZeroDivisionError:
            self.error(lineno, tok, f"{text} has no value in {self.field}")

    def need(self, lineno, tok, *kinds):
        if self.kind is None:
            self.error(lineno, tok, "the first directive must be 'ring'")
        if kinds and self.kind not in kinds:
            self.error(lineno, tok, f"{tok.text!r} is not allowed in a {self.kind} ring")
        if tok.text not in ("field",) and self.field is None:
            self.error(lineno, tok, "declare the field before other data")

    def set_entry(self, table, lineno, tok, i, j, values, label):
        for key in ((i, j), (j, i)):
            if key in table and table[key] != values:
                self.error(lineno, tok, f"{label} {i} {j} conflicts with an earlier entry (symmetry)")
        table[(i, j)] = values
        table[(j, i)] = values

    def directive(self, lineno: int, toks: list[_Tok]):
        head, args = toks[0], toks[1:]
        word = head.text
        if word == "ring":
            if self.kind is not None:
                self.error(lineno, head, "duplicate 'ring' directive")
            if len(args) != 1 or args[0].text not in ("triple", "struct", "hankel"):
                self.error(lineno, args[0] if args else head.col + len(word),
                           "expected 'ring triple|struct|hankel'")
            self.kind = args[0].text
        elif word == "field":
            self.need(lineno, head)
            if self.field is not None:
                self.error(lineno, head, "duplicate 'field' directive")
            if len(args) == 1 and args[0].text == "Q":
                self.field = QQ
            elif len(args) == 2 and args[0].text == "GF":
                p = self.int_arg(lineno, args[1], "prime")
                try:
                    self.field = GF(p)
                except ValueError as e:
                    self.error(lineno, args[1], str(e))
            else:
                self.error(lineno, args[0] if args else head, "expected 'field Q' or 'field GF <p>'")
        elif word in ("dimV", "dimW", "dim"):
            self.need(lineno, head, *(("triple",) if word != "dim" else ("struct",)))
            if word in self.dims:
                self.error(lineno, head, f"duplicate '{word}' directive")
            if len(args) != 1:
                self.error(lineno, head, f"expected '{word} <n>'")
            self.dims[word] = self.int_arg(lineno, args[0])
        elif word == "beta":
            self.need(lineno, head, "triple", "hankel")
            if self.kind == "hankel" and self.seq is not None:
                self.error(lineno, head, "a hankel ring uses either 'seq' or 'beta' lines, not both")
            i, j, vals = self.indexed(lineno, head, args)
            if self.kind == "triple":
                if "dimV" not in self.dims or "dimW" not in self.dims:
                    self.error(lineno, head, "declare dimV and dimW before beta entries")
                dv, dw = self.dims["dimV"], self.dims["dimW"]
                if i >= dv or j >= dv:
                    self.error(lineno, args[0] if i >= dv else args[1],
                               f"index out of range for dimV={dv}")
                if len(vals) != dw:
                    self.error(lineno, head, f"dimension mismatch: beta needs {dw} W-coordinates, got {len(vals)}")
            elif len(vals) != 1:
                self.error(lineno, head, "hankel beta entries take one value")
            values = tuple(self.scalar(lineno, t) for t in vals)
            self.set_entry(self.beta, lineno, head, i, j, values, "beta")
        elif word == "mul":
            self.need(lineno, head, "struct")
            if "dim" not in self.dims:
                self.error(lineno, head, "declare dim before mul entries")
            d = self.dims["dim"]
            i, j, vals = self.indexed(lineno, head, args)
            if i >= d or j >= d:
                self.error(lineno, args[0] if i >= d else args[1], f"index out of range for dim={d}")
            if len(vals) != d:
                self.error(lineno, head, f"dimension mismatch: mul needs {d} coordinates, got {len(vals)}")
            values = tuple(self.scalar(lineno, t) for t in vals)
            self.set_entry(self.mul, lineno, head, i, j, values, "mul")
        elif word == "maxideal":
            self.need(lineno, head, "struct")
            self.maxideal = (lineno, head, [self.int_arg(lineno, t) for t in args])
        elif word == "seq":
            self.need(lineno, head, "hankel")
            if self.seq is not None:
                self.error(lineno, head, "duplicate 'seq' directive")
            if self.beta:
                self.error(lineno, head, "a hankel ring uses either 'seq' or 'beta' lines, not both")
            self.seq = self.sequence(lineno, head, args)
        else:
            self.error(lineno, head, f"unknown directive {word!r}")

    def indexed(self, lineno, head, args):
        if len(args) < 3 or args[2].text != ":":
            self.error(lineno, head, f"expected '{head.text} <i> <j> : <values>'")
        i = self.int_arg(lineno, args[0], "index")
        j = self.int_arg(lineno, args[1], "index")
        return i, j, args[3:]

    def sequence(self, lineno, head, args):
        if not args:
            self.error(lineno, head, "expected 'seq hilbert|finite|recurrence ...'")
        kind = args[0]
        if kind.text == "hilbert":
            if len(args) != 1:
                self.error(lineno, args[1], "'seq hilbert' takes no arguments")
            if not isinstance(self.field, Rationals):
                self.error(lineno, kind, "bad field: the Hilbert sequence needs field Q")
            return Hilbert(QQ)
        if kind.text == "finite":
            body = "".join(t.text for t in args[1:])
            col = args[1].col if len(args) > 1 else kind.col
            terms: dict[int, object] = {}
            for item in filter(None, body.split(",")):
                m = re.fullmatch(r"(\d+):(\S+)", item)
                if not m:
                    self.error(lineno, col, f"bad term {item!r}; expected <i>:<value>")
                n = int(m.group(1))
                if n in terms:
                    self.error(lineno, col, f"term {n} given twice")
                terms[n] = self.scalar(lineno, _Tok(item, col), m.group(2))
            length = 1 + max(terms, default=-1)
            return Explicit(self.field, [terms.get(n, 0) for n in range(length)])
        if kind.text == "recurrence":
            words = [t.text for t in args[1:]]
            if "init" not in words or "coeffs" not in words or words[0] != "init":
                self.error(lineno, kind, "expected 'seq recurrence init <terms> coeffs <terms>'")
            k = words.index("coeffs")
            init = [self.scalar(lineno, t) for t in args[2: 1 + k]]
            coeffs = [self.scalar(lineno, t) for t in args[2 + k:]]
            if len(init) != len(coeffs):
                self.error(lineno, kind, "dimension mismatch: init and coeffs lengths differ")
            return Recurrence(self.field, init, coeffs)
        self.error(lineno, kind, f"unknown sequence kind {kind.text!r}")

    def finish(self, lineno) -> RingSpec:
        if self.kind is None:
            raise RingFileError(max(lineno, 1), 1, "missing 'ring' directive")
        if self.field is None:
            raise RingFileError(lineno, 1, "missing 'field' directive")
        F = self.field
        if self.kind == "triple":
            for d in ("dimV", "dimW"):
                if d not in self.dims:
                    raise RingFileError(lineno, 1, f"missing '{d}' directive")
            return TripleRing.from_entries(F, self.dims["dimV"], self.dims["dimW"], self.beta)
        if self.kind == "struct":
            if "dim" not in self.dims:
                raise RingFileError(lineno, 1, "missing 'dim' directive")
            d = self.dims["dim"]
            if d < 1:
                raise RingFileError(lineno, 1, "dim must be at least 1")
            if self.maxideal is not None:
                ln, tok, idx = self.maxideal
                if sorted(idx) != list(range(1, d)):
                    self.error(ln, tok, f"maxideal must list 1..{d - 1}; e0 is the unit")
            grid = [[[F.zero] * d for _ in range(d)] for _ in range(d)]
            for j in range(d):
                grid[0][j][j] = F.one
                grid[j][0][j] = F.one
            for (i, j), c in self.mul.items():
                grid[i][j] = list(c)
            return PresentedAlgebra(F, d, grid)
        if self.seq is not None:
            return SequenceTriple(F, HankelForm(self.seq))
        return SequenceTriple(F, FiniteSupport(F, {k: v[0] for k, v in self.beta.items()}))


def parse_ring(text: str) -> RingSpec:
    """Parse ``.ring`` text; errors carry the 1-based line and column."""
    p = _Parser()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if toks:
            p.directive(lineno, toks)
    try:
        return p.finish(lineno)
    except ValueError as e:
        if isinstance(e, RingFileError):
            raise
        raise RingFileError(lineno, 1, str(e)) from None


def load_ring(path) -> RingSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_ring(fh.read())


def _fmt(x) -> str:
    return str(x)


def _field_line(F: Field) -> str:
    return "field Q" if isinstance(F, Rationals) else f"field GF {F.p}"


def serialize_ring(ring: RingSpec) -> str:
    """Canonical text: nonzero entries only, ``i <= j``, sorted."""
    out = []
    if isinstance(ring, TripleRing):
        out += ["ring triple", _field_line(ring.field), f"dimV {ring.dim_v}", f"dimW {ring.dim_w}"]
        for i in range(ring.dim_v):
            for j in range(i, ring.dim_v):
                w = ring.beta[i][j]
                if any(w):
                    out.append(f"beta {i} {j} : " + " ".join(map(_fmt, w)))
    elif isinstance(ring, PresentedAlgebra):
        out += ["ring struct", _field_line(ring.field), f"dim {ring.dim}"]
        if ring.dim > 1:
            out.append("maxideal " + " ".join(str(i) for i in range(1, ring.dim)))
        for i in range(ring.dim):
            for j in range(i, ring.dim):
                c = ring.mul[i][j]
                if i == 0 and c == ring.unit_vector(j):
                    continue
                if any(c) or i == 0:
                    out.append(f"mul {i} {j} : " + " ".join(map(_fmt, c)))
    elif isinstance(ring, SequenceTriple):
        out += ["ring hankel", _field_line(ring.field)]
        form = ring.form
        if isinstance(form, FiniteSupport):
            for (i, j), v in form.table:
                out.append(f"beta {i} {j} : {_fmt(v)}")
        else:
            seq = form.seq
            if isinstance(seq, Hilbert):
                out.append("seq hilbert")
            elif isinstance(seq, Explicit):
                terms = [f"{n}:{_fmt(x)}" for n, x in enumerate(seq.terms) if x]
                out.append(" ".join(["seq finite"] + ([",".join(terms)] if terms else [])))
            elif isinstance(seq, Recurrence):
                out.append("seq recurrence init " + " ".join(map(_fmt, seq.init))
                           + " coeffs " + " ".join(map(_fmt, seq.coeffs)))
            else:
                raise ValueError(f"{type(seq).__name__} sequences have no text form")
    else:
        raise TypeError(f"cannot serialize {type(ring).__name__}")
    return "\n".join(out) + "\n"
