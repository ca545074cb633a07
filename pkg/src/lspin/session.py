"""Parser, evaluator and report emitter for .lspin session files.

Grammar (semicolon-terminated declarations and queries, # comments):

    session  := (decl | query)*
    decl     := "chars" "{" (NAME ":" ("unramified"|"ramified") ("order" INT)? ";")* "}"
              | "relations" "{" (charExpr "=" charExpr ";")* "}"
              | "repr" NAME "=" TYPETAG "(" charExpr ("," charExpr)* ")" ";"
              | "bessel" NAME "=" charExpr ";"
    query    := "compute" VERB "(" arg ("," arg)* ")" ";"
    charExpr := term ("*" term)*
    term     := "1" | "nu" ("^" "{" RATIONAL "}")? | NAME ("^" INT | "^" "{" INT "}")?

Rational nu-exponents require braces: nu^{1/2}, nu^{-3/2}, nu^{2}.  chars and
relations blocks are session-global and may be split; representations,
Bessel data and queries are processed in order.  Verbs: lfactor, sreg,
homdim, delta, zeta, euler, verify.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .catalog import (
    ReprSpec,
    admissible_bessel_set,
    bessel_datum,
    gk_decomposition,
    delta0 as catalog_delta0,
    delta_minus,
    delta_plus,
)
from .chars import Character, CharacterGroup, Generator
from .engine import hom_dim, sample_points, subregular_factor, total_lfactor
from .errors import LspinError, LspinSyntaxError, PoleAtS
from .gl2 import (
    GENERIC_PRINCIPAL_SERIES,
    ONE_DIMENSIONAL,
    euler_characteristic,
)
from .specialize import central_specialization

VERBS = ("delta", "euler", "homdim", "lfactor", "sreg", "verify", "zeta")

#: canonical raw monomial: (nu-exponent, sorted nonzero generator exponents)
RawMonomial = tuple[Fraction, tuple[tuple[str, int], ...]]


def _raw(nu: Fraction = Fraction(0), exps: Optional[dict[str, int]] = None) -> RawMonomial:
    items = tuple(sorted((n, e) for n, e in (exps or {}).items() if e))
    return (Fraction(nu), items)


# ---------------------------------------------------------------------------
# Tokenizer


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, INT, PUNCT, EOF
    value: str
    line: int
    col: int


_PUNCT = set("{}();:,=*^/-")


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token("PUNCT", ch, line, start_col))
            col += 1
            i += 1
            continue
        raise LspinSyntaxError("unexpected character", line, col, ch)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Session data


@dataclass(frozen=True)
class Session:
    generators: tuple[tuple[str, bool, Optional[int]], ...]
    relations: tuple[tuple[RawMonomial, RawMonomial], ...]
    reprs: tuple[tuple[str, str, tuple[RawMonomial, ...]], ...]
    bessels: tuple[tuple[str, RawMonomial], ...]
    queries: tuple[tuple[str, tuple[RawMonomial, ...]], ...]


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, value: Optional[str] = None) -> Token:
        tok = self.next()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            raise LspinSyntaxError(f"expected {want!r}", tok.line, tok.col, tok.value)
        return tok

    def accept_punct(self, value: str) -> bool:
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.value == value:
            self.pos += 1
            return True
        return False

    # -- charExpr -----------------------------------------------------------

    def _signed_int(self) -> int:
        sign = -1 if self.accept_punct("-") else 1
        tok = self.expect("INT")
        return sign * int(tok.value)

    def _nu_exponent(self) -> Fraction:
        self.expect("PUNCT", "{")
        num = self._signed_int()
        if self.accept_punct("/"):
            den = int(self.expect("INT").value)
            value = Fraction(num, den)
        else:
            value = Fraction(num)
        self.expect("PUNCT", "}")
        return value

    def char_expr(self) -> RawMonomial:
        nu = Fraction(0)
        exps: dict[str, int] = {}
        while True:
            tok = self.next()
            if tok.kind == "INT" and tok.value == "1":
                pass
            elif tok.kind == "IDENT" and tok.value == "nu":
                if self.accept_punct("^"):
                    nu += self._nu_exponent()
                else:
                    nu += 1
            elif tok.kind == "IDENT":
                e = 1
                if self.accept_punct("^"):
                    if self.accept_punct("{"):
                        e = self._signed_int()
                        self.expect("PUNCT", "}")
                    else:
                        e = self._signed_int()
                exps[tok.value] = exps.get(tok.value, 0) + e
            else:
                raise LspinSyntaxError(
                    "expected a character term", tok.line, tok.col, tok.value
                )
            if not self.accept_punct("*"):
                break
        return _raw(nu, exps)

    # -- declarations ---------------------------------------------------------

    def parse(self) -> Session:
        generators: dict[str, tuple[str, bool, Optional[int]]] = {}
        relations: list[tuple[RawMonomial, RawMonomial]] = []
        reprs: list[tuple[str, str, tuple[RawMonomial, ...]]] = []
        bessels: list[tuple[str, RawMonomial]] = []
        queries: list[tuple[str, tuple[RawMonomial, ...]]] = []
        while True:
            tok = self.peek()
            if tok.kind == "EOF":
                break
            if tok.kind != "IDENT":
                raise LspinSyntaxError("expected a declaration", tok.line, tok.col, tok.value)
            if tok.value == "chars":
                self.next()
                self.expect("PUNCT", "{")
                while not self.accept_punct("}"):
                    name_tok = self.expect("IDENT")
                    self.expect("PUNCT", ":")
                    flag = self.expect("IDENT")
                    if flag.value not in ("unramified", "ramified"):
                        raise LspinSyntaxError(
                            "expected 'unramified' or 'ramified'",
                            flag.line, flag.col, flag.value,
                        )
                    order = None
                    if self.peek().kind == "IDENT" and self.peek().value == "order":
                        self.next()
                        order = int(self.expect("INT").value)
                    self.expect("PUNCT", ";")
                    if name_tok.value in generators:
                        raise LspinSyntaxError(
                            "duplicate generator", name_tok.line, name_tok.col, name_tok.value
                        )
                    generators[name_tok.value] = (
                        name_tok.value, flag.value == "unramified", order,
                    )
            elif tok.value == "relations":
                self.next()
                self.expect("PUNCT", "{")
                while not self.accept_punct("}"):
                    lhs = self.char_expr()
                    self.expect("PUNCT", "=")
                    rhs = self.char_expr()
                    self.expect("PUNCT", ";")
                    relations.append((lhs, rhs))
            elif tok.value == "repr":
                self.next()
                name = self.expect("IDENT").value
                self.expect("PUNCT", "=")
                tag = self.expect("IDENT").value
                self.expect("PUNCT", "(")
                args = [self.char_expr()]
                while self.accept_punct(","):
                    args.append(self.char_expr())
                self.expect("PUNCT", ")")
                self.expect("PUNCT", ";")
                reprs.append((name, tag, tuple(args)))
            elif tok.value == "bessel":
                self.next()
                name = self.expect("IDENT").value
                self.expect("PUNCT", "=")
                value = self.char_expr()
                self.expect("PUNCT", ";")
                bessels.append((name, value))
            elif tok.value == "compute":
                self.next()
                verb = self.expect("IDENT").value
                if verb not in VERBS:
                    raise LspinSyntaxError(
                        f"unknown verb; expected one of {', '.join(VERBS)}",
                        tok.line, tok.col, verb,
                    )
                self.expect("PUNCT", "(")
                args = [self.char_expr()]
                while self.accept_punct(","):
                    args.append(self.char_expr())
                self.expect("PUNCT", ")")
                self.expect("PUNCT", ";")
                queries.append((verb, tuple(args)))
            else:
                raise LspinSyntaxError(
                    "expected chars, relations, repr, bessel or compute",
                    tok.line, tok.col, tok.value,
                )
        return Session(
            generators=tuple(generators.values()),
            relations=tuple(relations),
            reprs=tuple(reprs),
            bessels=tuple(bessels),
            queries=tuple(queries),
        )


def parse_session(text: str) -> Session:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Rendering (canonical form; parse . render . parse = parse)


def render_raw(raw: RawMonomial) -> str:
    nu, items = raw
    parts = []
    if nu == 1:
        parts.append("nu")
    elif nu != 0:
        parts.append("nu^{%s}" % nu)
    for name, e in items:
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def render_session(session: Session) -> str:
    lines = []
    if session.generators:
        lines.append("chars {")
        for name, unramified, order in session.generators:
            flag = "unramified" if unramified else "ramified"
            suffix = f" order {order}" if order else ""
            lines.append(f"  {name}: {flag}{suffix};")
        lines.append("}")
    if session.relations:
        lines.append("relations {")
        for lhs, rhs in session.relations:
            lines.append(f"  {render_raw(lhs)} = {render_raw(rhs)};")
        lines.append("}")
    for name, tag, args in session.reprs:
        rendered = ", ".join(render_raw(a) for a in args)
        lines.append(f"repr {name} = {tag}({rendered});")
    for name, value in session.bessels:
        lines.append(f"bessel {name} = {render_raw(value)};")
    for verb, args in session.queries:
        rendered = ", ".join(render_raw(a) for a in args)
        lines.append(f"compute {verb}({rendered});")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Evaluation


@dataclass
class EvaluatedSession:
    session: Session
    group: CharacterGroup
    reprs: dict[str, ReprSpec] = field(default_factory=dict)
    bessels: dict[str, Character] = field(default_factory=dict)
    results: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all("error" not in r and not r.get("failures") for r in self.results)


_PROVENANCE = {
    "lfactor": "Table 4",
    "sreg": "Table 1",
    "zeta": "Table 3",
    "homdim": "rule",
    "delta": "rule",
    "euler": "rule",
    "verify": "rule",
}


def _as_name(raw: RawMonomial, what: str) -> str:
    nu, items = raw
    if nu == 0 and len(items) == 1 and items[0][1] == 1:
        return items[0][0]
    raise LspinError(f"expected a {what} name, got {render_raw(raw)}")


def evaluate_session(session: Session) -> EvaluatedSession:
    relations = []
    for (l_nu, l_items), (r_nu, r_items) in session.relations:
        exps: dict[str, int] = {}
        for name, e in l_items:
            exps[name] = exps.get(name, 0) + e
        for name, e in r_items:
            exps[name] = exps.get(name, 0) - e
        relations.append((exps, l_nu - r_nu))
    group = CharacterGroup(
        [Generator(n, unramified=u, order=o) for n, u, o in session.generators],
        relations=relations,
    )
    out = EvaluatedSession(session=session, group=group)
    for name, tag, args in session.reprs:
        if name in out.reprs:
            raise LspinError(f"duplicate representation name {name!r}")
        out.reprs[name] = ReprSpec.from_positional(
            tag, [group.from_raw(({n: e for n, e in items}, nu)) for nu, items in args]
        )
    for name, value in session.bessels:
        if name in out.bessels:
            raise LspinError(f"duplicate Bessel name {name!r}")
        nu, items = value
        out.bessels[name] = group.from_raw(({n: e for n, e in items}, nu))
    for verb, args in session.queries:
        entry = {
            "verb": verb,
            "input": ", ".join(render_raw(a) for a in args),
        }
        try:
            entry.update(_run_query(out, verb, args))
            entry["provenance"] = _PROVENANCE[verb]
        except LspinError as err:
            entry["error"] = type(err).__name__
            entry["message"] = str(err)
        out.results.append(entry)
    return out


def _resolve_repr(ev: EvaluatedSession, raw: RawMonomial) -> ReprSpec:
    name = _as_name(raw, "representation")
    if name not in ev.reprs:
        raise LspinError(f"unknown representation {name!r}")
    return ev.reprs[name]


def _resolve_bessel(ev: EvaluatedSession, raw: RawMonomial) -> Character:
    name = _as_name(raw, "bessel")
    if name not in ev.bessels:
        raise LspinError(f"unknown Bessel datum {name!r}")
    return ev.bessels[name]


def _resolve_char(ev: EvaluatedSession, raw: RawMonomial) -> Character:
    nu, items = raw
    return ev.group.from_raw(({n: e for n, e in items}, nu))


def _arity(args, low, high, verb):
    if not (low <= len(args) <= high):
        raise LspinError(f"{verb} takes {low}..{high} arguments, got {len(args)}")


def _run_query(ev: EvaluatedSession, verb: str, args) -> dict:
    if verb in ("lfactor", "sreg"):
        _arity(args, 2, 3, verb)
        pi = _resolve_repr(ev, args[0])
        lam = bessel_datum(pi, _resolve_bessel(ev, args[1]))
        mu = _resolve_char(ev, args[2]) if len(args) == 3 else None
        fn = total_lfactor if verb == "lfactor" else subregular_factor
        product = fn(pi, lam, mu)
        return {
            "result": [chi.render() for chi in product.factors],
            "rendered": product.render(),
        }
    if verb == "homdim":
        _arity(args, 2, 2, verb)
        pi = _resolve_repr(ev, args[0])
        return {"result": hom_dim(pi, _resolve_char(ev, args[1]))}
    if verb == "delta":
        _arity(args, 1, 1, verb)
        pi = _resolve_repr(ev, args[0])
        admissible = admissible_bessel_set(pi)
        return {
            "result": {
                "delta0": [c.render() for c in catalog_delta0(pi)],
                "delta_plus": [c.render() for c in delta_plus(pi)],
                "delta_minus": [c.render() for c in delta_minus(pi)],
                "admissible_rho": "all" if admissible is None
                else [c.render() for c in admissible],
            }
        }
    if verb == "zeta":
        _arity(args, 2, 2, verb)
        pi = _resolve_repr(ev, args[0])
        zeta = central_specialization(pi, _resolve_char(ev, args[1]))
        return {"result": zeta.render()}
    if verb == "euler":
        _arity(args, 1, 1, verb)
        pi = _resolve_repr(ev, args[0])
        x = gk_decomposition(pi).mirabolic_expression()
        return {
            "result": {
                "generic principal series": euler_characteristic(x, GENERIC_PRINCIPAL_SERIES),
                "one-dimensional": euler_characteristic(x, ONE_DIMENSIONAL),
            }
        }
    # verify(check[, selector]): runs the embedded corpus suites
    from .corpus import run_verification

    _arity(args, 1, 2, verb)
    check = _as_name(args[0], "check")
    selector = _as_name(args[1], "case selector") if len(args) == 2 else None
    text, checks, failures = run_verification(check, selector)
    return {
        "result": {"checks_run": checks, "failures": failures},
        "failures": failures,
        "detail": text.splitlines(),
    }


# ---------------------------------------------------------------------------
# Numeric spot checks (--numeric q=Q seed=S)


def numeric_coherence(ev: EvaluatedSession, q: int, seed: int, samples: int = 20) -> dict:
    """Re-verify the factor-product queries numerically at seeded points.

    For lfactor queries the totals across all admissible Bessel data must
    agree within 1e-9; for sreg queries the exact quotient total/sreg must
    multiply back to the total.  Reports the worst absolute error seen.
    """
    from random import Random

    rng = Random(seed)
    points = [
        (q, ev.group.sample_satake(q, rng), s)
        for _, _, s in sample_points(ev.group, rng, samples)
    ]
    worst = 0.0
    tested = 0
    for (verb, args), entry in zip(ev.session.queries, ev.results):
        if verb not in ("lfactor", "sreg") or "error" in entry:
            continue
        pi = _resolve_repr(ev, args[0])
        lam = bessel_datum(pi, _resolve_bessel(ev, args[1]))
        mu = _resolve_char(ev, args[2]) if len(args) == 3 else None
        total = total_lfactor(pi, lam, mu)
        sreg = subregular_factor(pi, lam, mu)
        rest = total.divide_exact(sreg)
        admissible = admissible_bessel_set(pi)
        lams = (
            [bessel_datum(pi, rho) for rho in admissible]
            if admissible
            else [lam]
        )
        for q_, satake, s in points:
            try:
                ref = total.numeric_eval(q_, satake, s)
                err = abs(sreg.numeric_eval(q_, satake, s) * rest.numeric_eval(q_, satake, s) - ref)
                for other in lams:
                    err = max(
                        err,
                        abs(total_lfactor(pi, other, mu).numeric_eval(q_, satake, s) - ref),
                    )
            except PoleAtS:
                continue
            worst = max(worst, err)
            tested += 1
    return {
        "q": q,
        "seed": seed,
        "points_tested": tested,
        "max_abs_error": worst,
        "ok": worst <= 1e-9,
    }


# ---------------------------------------------------------------------------
# Report emission


def emit_report(ev: EvaluatedSession, json_mode: bool = False,
                numeric: Optional[dict] = None) -> str:
    if json_mode:
        payload = {"schema": 1, "queries": ev.results}
        if numeric is not None:
            payload["numeric"] = numeric
        return json.dumps(payload, indent=2, default=str) + "\n"
    lines = []
    for entry in ev.results:
        head = f"{entry['verb']}({entry['input']})"
        if "error" in entry:
            lines.append(f"{head} ! {entry['error']}: {entry['message']}")
            continue
        result = entry.get("rendered", entry["result"])
        if isinstance(result, dict):
            result = json.dumps(result, default=str)
        lines.append(f"{head} = {result}   [{entry['provenance']}]")
    if numeric is not None:
        status = "ok" if numeric["ok"] else "FAIL"
        lines.append(
            f"numeric: q={numeric['q']} seed={numeric['seed']} "
            f"points={numeric['points_tested']} "
            f"max|err|={numeric['max_abs_error']:.3e} {status}"
        )
    return "\n".join(lines) + ("\n" if lines else "")
