"""Command line front end: ``nbif {analyze,counts,bound,polygon} POLY``.

Exit status: 0 on success, 2 when the hypotheses fail (the report is still
printed, with the upper bound in place of the exact set), 1 on parse or
usage errors.
"""
import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bivar import BiPoly
from .errors import HypothesisViolated, NegativeExponent, NonIsolatedSingularities, ParseError

# ---------------------------------------------------------------------------
# parser

_NUM, _VAR, _OP, _END = "number", "variable", "operator", "end"
_FACTOR_START = frozenset({"number", "x", "y", "("})


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append((_NUM, int(text[i:j]), i))
            i = j
            continue
        if ch in "xy":
            toks.append((_VAR, ch, i))
            i += 1
            continue
        if text.startswith("**", i):
            toks.append((_OP, "^", i))
            i += 2
            continue
        if ch in "+-*/^()":
            toks.append((_OP, ch, i))
            i += 1
            continue
        if ch == "−":  # unicode minus sign
            toks.append((_OP, "-", i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", _byte_offset(text, i), _FACTOR_START | {"+", "-", "*", "^"})
    toks.append((_END, None, n))
    return toks


def _byte_offset(text, i):
    return len(text[:i].encode("utf-8"))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, expected, tok=None, cls=ParseError):
        tok = tok or self.peek()
        raise cls(msg, _byte_offset(self.text, tok[2]), expected)

    def is_op(self, *ops):
        k, v, _ = self.peek()
        return k == _OP and v in ops

    def starts_factor(self):
        k, v, _ = self.peek()
        return k in (_NUM, _VAR) or (k == _OP and v == "(")

    def expr(self):
        sign = 1
        if self.is_op("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.is_op("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        if not self.starts_factor():
            self.fail("expected a term", _FACTOR_START)
        acc = self.factor()
        while True:
            if self.is_op("*"):
                self.take()
                if not self.starts_factor():
                    self.fail("expected a factor after '*'", _FACTOR_START)
                acc = acc * self.factor()
            elif self.starts_factor():
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.primary()
        while self.is_op("^"):
            self.take()
            base = base ** self.exponent()
        return base

    def exponent(self):
        tok = self.peek()
        if self.is_op("-"):
            self.fail("negative exponents are not allowed", {"number"}, cls=NegativeExponent)
        if self.is_op("("):
            self.take()
            if self.is_op("-"):
                self.fail("negative exponents are not allowed", {"number"}, cls=NegativeExponent)
            if self.is_op("+"):
                self.take()
            if self.peek()[0] != _NUM:
                self.fail("expected a natural exponent", {"number"})
            e = self.take()[1]
            if not self.is_op(")"):
                self.fail("expected ')'", {")"})
            self.take()
            return e
        if tok[0] != _NUM:
            self.fail("expected a natural exponent", {"number", "("})
        return self.take()[1]

    def primary(self):
        k, v, _ = tok = self.peek()
        if k == _NUM:
            self.take()
            num = v
            if self.is_op("/"):
                self.take()
                k2, d, _ = self.peek()
                if k2 != _NUM:
                    self.fail("expected a positive integer denominator", {"number"})
                if d == 0:
                    self.fail("zero denominator", {"positive integer"})
                self.take()
                return BiPoly.const(Fraction(num, d))
            return BiPoly.const(num)
        if k == _VAR:
            self.take()
            return BiPoly.x() if v == "x" else BiPoly.y()
        if k == _OP and v == "(":
            self.take()
            e = self.expr()
            if not self.is_op(")"):
                self.fail("expected ')'", {")", "+", "-", "*"})
            self.take()
            return e
        self.fail("expected a number, variable or '('", _FACTOR_START, tok)


def parse_poly(text):
    """Parse a polynomial in x, y with rational coefficients."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty input", 0, _FACTOR_START | {"+", "-"})
    p = _Parser(text)
    f = p.expr()
    if p.peek()[0] != _END:
        p.fail("unexpected trailing input", {"+", "-", "*", "^", "end of input"})
    return f


# ---------------------------------------------------------------------------
# serialisation helpers


def approx_digits():
    """Significant digits for display, from NBIF_PRECISION_BITS (default 256)."""
    try:
        bits = int(os.environ.get("NBIF_PRECISION_BITS", "256"))
    except ValueError:
        bits = 256
    return max(12, min(40, int(bits * math.log10(2))))


def number_json(v, provenance=None):
    lo, hi = v.interval
    d = {
        "minpoly": [str(c) for c in v.minpoly_ints],
        "interval": [str(lo), str(hi)],
        "approx": v.approx(approx_digits()),
    }
    if provenance is not None:
        d["provenance"] = ",".join(sorted(provenance))
    return d


def _cov(P):
    return [P.p, P.q]


def _hyp_json(verdict):
    return {
        "ok": verdict.ok,
        "nondegenerate_plus_minus": verdict.nondegenerate_plus_minus,
        "degenerate_faces": [_cov(F.P) for F in verdict.degenerate_faces],
        "morse_bad_faces": verdict.morse_bad_faces,
        "non_morse_faces": [_cov(F.P) for F in verdict.non_morse_faces],
    }


def _counts_json(c):
    return {
        "R_plus": c.R_plus,
        "R_zero": c.R_zero,
        "total": c.total,
        "vanish_min": c.vanish_min,
        "vanish_max": c.vanish_max,
        "exact_split": None if c.exact_split is None else {"cleav": c.exact_split[0], "vanish": c.exact_split[1]},
        "tangencies": [
            {"face": _cov(F.P), "t_star": number_json(t), "value": number_json(v), "kind": kind}
            for F, t, _s, v, kind in c.tangencies
        ],
    }


def _bound_json(b):
    return {
        "sigma_count": b.sigma_count,
        "epsilon": b.epsilon,
        "R_zero": b.R_zero,
        "mu_sum": b.mu_sum,
        "mu_faces": [{"face": _cov(P), "mu": m} for P, m in b.mu_faces],
        "bound": b.bound,
    }


def _ledger_json(L):
    return {
        "entries": [
            {
                "site": e.site,
                "lambdas": [{"covector": _cov(P), "lambda": v} for P, v in e.lambdas],
                "epsilon_sigma": e.epsilon_sigma,
                "Lambda": e.Lambda,
                "heights": list(e.heights) if e.heights else None,
            }
            for e in L.entries
        ],
        "pending_sites": list(L.pending),
        "final_bound": L.final_bound,
    }


# ---------------------------------------------------------------------------
# SVG


_CLASS_COLOURS = {"plus": "#1b7f3b", "zero": "#d9820b", "minus": "#c0392b"}


def render_svg(polygon, faces, fan=None, path=None):
    """Deterministic SVG of support, hull, face covectors and fan rays.

    Returns the SVG text; writes it to ``path`` when one is given.
    """
    pts = sorted(polygon.support)
    xs = [p[0] for p in pts] + [0]
    ys = [p[1] for p in pts] + [0]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    u = 40
    W, H = (x1 - x0) * u, (y1 - y0) * u

    def X(a):
        return (a - x0) * u

    def Y(b):
        return (y1 - b) * u

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="#ffffff"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for a in range(x0, x1 + 1):
        out.append(f'<line x1="{X(a)}" y1="0" x2="{X(a)}" y2="{H}"/>')
    for b in range(y0, y1 + 1):
        out.append(f'<line x1="0" y1="{Y(b)}" x2="{W}" y2="{Y(b)}"/>')
    out.append("</g>")
    out.append(
        f'<g stroke="#999999" stroke-width="1.5"><line x1="{X(0)}" y1="0" x2="{X(0)}" y2="{H}"/>'
        f'<line x1="0" y1="{Y(0)}" x2="{W}" y2="{Y(0)}"/></g>'
    )
    if fan is not None:
        out.append('<g stroke="#5567aa" stroke-width="1" stroke-dasharray="4 3">')
        R = max(W, H)
        for r in fan.rays:
            n = math.hypot(r.p, r.q)
            ex, ey = X(0) + R * r.p / n, Y(0) - R * r.q / n
            out.append(f'<line x1="{X(0)}" y1="{Y(0)}" x2="{ex:.2f}" y2="{ey:.2f}"/>')
        out.append("</g>")
    for F in faces:
        (a, b), (c, d) = F.endpoints
        col = _CLASS_COLOURS.get(F.cls, "#555555") if F.P.at_infinity() else "#555555"
        out.append(
            f'<line x1="{X(a)}" y1="{Y(b)}" x2="{X(c)}" y2="{Y(d)}" stroke="{col}" stroke-width="3" '
            f'data-covector="{F.P.p},{F.P.q}" data-class="{F.cls}"/>'
        )
        mx, my = (X(a) + X(c)) / 2, (Y(b) + Y(d)) / 2
        n = math.hypot(F.P.p, F.P.q)
        tx, ty = mx + 0.8 * u * F.P.p / n, my - 0.8 * u * F.P.q / n
        out.append(
            f'<line x1="{mx:.2f}" y1="{my:.2f}" x2="{tx:.2f}" y2="{ty:.2f}" stroke="{col}" stroke-width="1.5" '
            f'class="covector"/>'
        )
        out.append(
            f'<text x="{tx:.2f}" y="{ty:.2f}" font-size="11" font-family="monospace" fill="{col}">'
            f"({F.P.p},{F.P.q})</text>"
        )
    for p in pts:
        out.append(f'<circle cx="{X(p[0])}" cy="{Y(p[1])}" r="4" fill="#000000"/>')
    out.append("</svg>")
    svg = "\n".join(out) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg


# ---------------------------------------------------------------------------
# commands


@dataclass
class Command:
    verb: str
    polynomial_text: str
    json: bool = False
    svg_path: str = None
    refine_depth: int = 8


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_argparser():
    ap = _ArgParser(prog="nbif", description="Bifurcation sets at infinity of real polynomials in x, y.")
    ap.add_argument("verb", choices=["analyze", "counts", "bound", "polygon"])
    ap.add_argument("polynomial")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--svg", metavar="PATH", help="write the Newton polygon and fan as SVG")
    ap.add_argument("--refine-depth", type=int, default=8, metavar="N", help="toric modification depth for the bound")
    return ap


def _svg_for(f, path):
    from .newton import all_faces, infinity_faces, newton_polygon
    from .fan import complete_fan

    poly = newton_polygon(f)
    faces = [F for F in all_faces(f) if F is not None] if poly.dimension >= 1 else []
    fan = complete_fan([F.P for F in infinity_faces(f)]) if faces else None
    return render_svg(poly, faces, fan, path)


def _bound_sections(f, depth):
    from .bound import refine_bound

    L = refine_bound(f, depth)
    return L.coarse, L


def run(cmd, out=None):
    """Execute a Command; returns (exit_code, report_dict)."""
    from . import atinfinity

    out = out if out is not None else sys.stdout
    f = parse_poly(cmd.polynomial_text)
    if cmd.refine_depth < 0:
        raise UsageError("--refine-depth must be nonnegative")
    report = {"input": cmd.polynomial_text, "polynomial": f.to_str()}
    code = 0

    if cmd.verb == "polygon":
        if f.is_zero():
            raise UsageError("the zero polynomial has no Newton polygon")
        svg = _svg_for(f, cmd.svg_path)
        report["svg_path"] = cmd.svg_path
        if cmd.json:
            out.write(json.dumps(report, indent=2) + "\n")
        elif cmd.svg_path is None:
            out.write(svg)
        else:
            out.write(f"wrote {cmd.svg_path}\n")
        return 0, report

    if f.is_constant():
        raise UsageError("the polynomial must be non-constant")
    if cmd.svg_path:
        _svg_for(f, cmd.svg_path)

    verdict = atinfinity.check_hypotheses(f)
    report["hypotheses"] = _hyp_json(verdict)

    if cmd.verb == "analyze":
        from .criticality import critical_values

        sigma = critical_values(f)
        report["sigma"] = [number_json(v) for v in sigma]
        ok2, wit = atinfinity.condition_ii(f)
        report["condition_ii"] = {"holds": ok2, "faces": [_cov(F.P) for F in wit], "value": str(f.constant_term())}
        try:
            rep = atinfinity.bifurcation_set(f)
            report["condition_iii"] = [
                {"face": _cov(F.P), "t_star": number_json(t), "value": number_json(v)} for F, t, v in rep.cond_iii
            ]
            report["bifurcation_set"] = [number_json(v, tags) for v, tags in rep.b_set]
            try:
                report["counts"] = _counts_json(atinfinity.counts(f))
            except NonIsolatedSingularities as e:
                report["counts"] = {"error": str(e)}
        except HypothesisViolated:
            code = 2
            report["condition_iii"] = None
            report["bifurcation_set"] = None
            report["counts"] = None
        b, L = _bound_sections(f, cmd.refine_depth)
        report["bound"] = _bound_json(b)
        report["ledger"] = _ledger_json(L)
    elif cmd.verb == "counts":
        try:
            report["counts"] = _counts_json(atinfinity.counts(f))
        except (HypothesisViolated, NonIsolatedSingularities) as e:
            code = 2
            report["counts"] = {"error": str(e)}
            b, L = _bound_sections(f, cmd.refine_depth)
            report["bound"] = _bound_json(b)
            report["ledger"] = _ledger_json(L)
    elif cmd.verb == "bound":
        b, L = _bound_sections(f, cmd.refine_depth)
        report["bound"] = _bound_json(b)
        report["ledger"] = _ledger_json(L)

    if cmd.json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(format_text(report))
    return code, report


def _num_text(d):
    lo, hi = d["interval"]
    if lo == hi:
        return lo
    return f"{d['approx']}  [root of ({', '.join(d['minpoly'])}) in ({lo}, {hi})]"


def format_text(r):
    lines = [f"f = {r['polynomial']}"]
    h = r.get("hypotheses")
    if h is not None:
        lines.append(f"hypotheses: {'ok' if h['ok'] else 'VIOLATED'}")
        if h["degenerate_faces"]:
            lines.append(f"  degenerate faces: {h['degenerate_faces']}")
        if h["non_morse_faces"]:
            lines.append(f"  non-Morse bad faces: {h['non_morse_faces']}")
    if "sigma" in r:
        lines.append(f"critical values ({len(r['sigma'])}):")
        lines += [f"  {_num_text(v)}" for v in r["sigma"]]
    if "condition_ii" in r:
        c = r["condition_ii"]
        lines.append(f"condition (ii): {c['holds']}" + (f"  faces {c['faces']}" if c["faces"] else ""))
    if r.get("condition_iii"):
        lines.append("condition (iii):")
        for e in r["condition_iii"]:
            lines.append(f"  face {e['face']}: t* = {_num_text(e['t_star'])} -> {_num_text(e['value'])}")
    if "bifurcation_set" in r:
        B = r["bifurcation_set"]
        if B is None:
            lines.append("bifurcation set: not determined (hypotheses fail); see the bound below")
        else:
            lines.append(f"bifurcation set ({len(B)}):")
            lines += [f"  {_num_text(v)}  <{v['provenance']}>" for v in B]
    c = r.get("counts")
    if c:
        if "error" in c:
            lines.append(f"counts: {c['error']}")
        else:
            lines.append(f"counts: R+ = {c['R_plus']}, R0 = {c['R_zero']}, total = {c['total']}")
            if c["exact_split"]:
                lines.append(f"  cleaving = {c['exact_split']['cleav']}, vanishing = {c['exact_split']['vanish']}")
            else:
                lines.append(f"  vanishing in [{c['vanish_min']}, {c['vanish_max']}]")
    b = r.get("bound")
    if b:
        lines.append(
            f"bound: |Sigma| = {b['sigma_count']}, eps = {b['epsilon']}, R0 = {b['R_zero']}, "
            f"sum mu = {b['mu_sum']}  ->  {b['bound']}"
        )
    L = r.get("ledger")
    if L:
        if len(L["entries"]) > 1:
            lines.append("refinement ledger:")
            for e in L["entries"]:
                lines.append(f"  {e['site']}: Lambda = {e['Lambda']} (eps_sigma = {e['epsilon_sigma']})")
        lines.append(f"refined bound: {L['final_bound']}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = _build_argparser()
    try:
        a = ap.parse_args(argv)
        cmd = Command(a.verb, a.polynomial, a.json, a.svg, a.refine_depth)
        code, _ = run(cmd)
        return code
    except ParseError as e:
        sys.stderr.write(f"nbif: parse error: {e}\n")
        return 1
    except UsageError as e:
        sys.stderr.write(f"nbif: {e}\n")
        return 1
    except OSError as e:
        sys.stderr.write(f"nbif: {e}\n")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
