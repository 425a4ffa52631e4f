"""Command-line front end.

Exit codes: 0 when a result was delivered (whatever the verdict), 2 for
usage or parse errors, 3 when a witness fails internal re-verification.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import cherednik, gwa, mckay, repmod, roots, weyl
from .errors import MoritaError, ScalarParseError, UnsupportedParameter, UnsupportedType
from .exact import format_scalar, format_vector, is_real, parse_scalar, parse_vector
from .linalg import QQ, GF

EXIT_OK, EXIT_USAGE, EXIT_SELFCHECK = 0, 2, 3


class SelfCheckFailure(Exception):
    pass


@dataclass
class Verdict:
    command: str
    inputs: dict
    status: str  # equivalent | not-equivalent | hypotheses-not-met | unsupported | ok
    witness: Optional[str] = None
    diagnostics: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "status": self.status,
            "witness": self.witness,
            "diagnostics": self.diagnostics,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.as_dict(), indent=2)
        lines = [f"command: {self.command}"]
        lines += [f"input {k}: {v}" for k, v in self.inputs.items()]
        lines.append(f"status: {self.status}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness}")
        lines += [f"  {d}" for d in self.diagnostics]
        return "\n".join(lines)


def _check(cond: bool, what: str):
    if not cond:
        raise SelfCheckFailure(what)


def _vector(Q, text):
    v = parse_vector(text)
    if len(v) != Q.n:
        raise ScalarParseError(f"{Q.name} has {Q.n} vertices but {text!r} has {len(v)} entries")
    return v


# ---------------------------------------------------------------------------
# subcommands


def cmd_quiver_info(args) -> Verdict:
    Q = mckay.quiver_from_name(args.quiver)
    autos = weyl.diagram_automorphisms(Q)
    diag = [
        f"vertices={Q.n}",
        "arrows=" + " ".join(f"{t}>{h}" for t, h in Q.arrows),
        "delta=" + ",".join(map(str, Q.delta)),
        f"finite_roots={len(roots.finite_roots(Q))}",
        f"diagram_automorphisms={len(autos)}",
    ]
    return Verdict("quiver-info", {"quiver": Q.name}, "ok", None, diag)


def cmd_classify(args) -> Verdict:
    Q = mckay.quiver_from_name(args.quiver)
    lam = _vector(Q, args.lam)
    cls = roots.classify_parameter(Q, lam)
    diag = [
        f"level={format_scalar(cls.level)}",
        f"commutative={str(cls.commutative).lower()}",
        f"regular={str(cls.regular).lower()}",
        f"generic={str(cls.generic).lower()}",
    ]
    return Verdict("classify", {"quiver": Q.name, "lam": format_vector(lam)}, "ok", None, diag)


def cmd_canon(args) -> Verdict:
    Q = mckay.quiver_from_name(args.quiver)
    lam = _vector(Q, args.lam)
    inputs = {"quiver": Q.name, "lam": format_vector(lam)}
    try:
        if all(is_real(x) for x in lam):
            value, word = weyl.canonical_form(Q, lam)
        else:
            c = weyl.canonical_form_complex(Q, lam)
            value, word = c.value, c.word
    except UnsupportedParameter as exc:
        return Verdict("canon", inputs, "unsupported", None, [str(exc)])
    _check(weyl.apply_word(Q, word, lam) == tuple(value), "canonical word does not reproduce the form")
    return Verdict("canon", inputs, "ok", weyl.format_word(word), [f"canonical={format_vector(value)}"])


def cmd_orbit(args) -> Verdict:
    Q = mckay.quiver_from_name(args.quiver)
    lam, lam2 = _vector(Q, args.lam), _vector(Q, args.lam2)
    inputs = {"quiver": Q.name, "lam": format_vector(lam), "lam2": format_vector(lam2)}
    try:
        v = weyl.same_orbit(Q, lam, lam2)
    except UnsupportedParameter as exc:
        return Verdict("orbit", inputs, "unsupported", None, [str(exc)])
    if not v.equivalent:
        return Verdict("orbit", inputs, "not-equivalent", None, [v.reason])
    text = weyl.format_word(v.witness)
    reparsed = weyl.parse_word(text, Q.n)
    _check(weyl.apply_word(Q, reparsed, lam) == lam2, "orbit witness does not map lam to lam2")
    return Verdict("orbit", inputs, "equivalent", text, [v.reason])


def _factors(text: str):
    out = []
    for part in text.split(";"):
        name, sep, vec = part.partition(":")
        if not sep:
            raise ScalarParseError(f"factor {part!r} must look like NAME:v0,v1,...")
        Q = mckay.quiver_from_name(name)
        out.append((Q, _vector(Q, vec)))
    return out


def cmd_orbit_product(args) -> Verdict:
    left, right = _factors(args.left), _factors(args.right)
    inputs = {"left": args.left, "right": args.right}
    try:
        v = weyl.decide_product(left, right)
    except UnsupportedParameter as exc:
        return Verdict("orbit-product", inputs, "unsupported", None, [str(exc)])
    if not v.equivalent:
        return Verdict("orbit-product", inputs, "not-equivalent", None, [v.reason])
    parts = []
    for i, j, word in v.matching:
        Q = left[i][0]
        text = weyl.format_word(word)
        _check(weyl.apply_word(Q, weyl.parse_word(text, Q.n), left[i][1]) == right[j][1],
               f"factor witness {i}->{j} failed")
        parts.append(f"{i}->{j}: {text}" if text else f"{i}->{j}: id")
    return Verdict("orbit-product", inputs, "equivalent", "; ".join(parts), [v.reason])


def cmd_gwa(args) -> Verdict:
    t, t2 = parse_vector(args.t), parse_vector(args.t2)
    inputs = {"t": format_vector(t), "t2": format_vector(t2)}
    v = gwa.gwa_decide(t, t2)
    diag = [v.reason]
    if not all(v.distinct):
        diag.append("warning: repeated roots; the Morita reading needs distinct roots")
    if not v.equivalent:
        return Verdict("gwa-decide", inputs, "not-equivalent", None, diag)
    text = str(v.witness)
    g = gwa.parse_group_element(text, len(t))
    _check(gwa.apply_group_element(g, t) == tuple(t2), "GWA witness does not map t to t'")
    return Verdict("gwa-decide", inputs, "equivalent", text, diag)


def cmd_reflect_module(args) -> Verdict:
    Q = mckay.quiver_from_name(args.quiver)
    lam = _vector(Q, args.lam)
    K = GF(args.prime) if args.prime else QQ
    inputs = {"quiver": Q.name, "lam": format_vector(lam), "simple": args.simple,
              "word": args.word, "field": repr(K)}
    M = repmod.simple_at(Q, lam, args.simple, K)
    diag = [f"start lam={format_vector(lam)} dims={','.join(map(str, M.dims))}"]
    vertices = [int(x) for x in args.word.replace(",", " ").split()]
    for i in vertices:
        try:
            lam, M = repmod.reflect_module(Q, lam, i, M)
            diag.append(f"E_{i}: lam={format_vector(lam)} dims={','.join(map(str, M.dims))}")
        except repmod.ReflectionIsIdentity:
            diag.append(f"E_{i}: identity (lam_{i} = 0)")
        _check(repmod.check_relations(Q, lam, M).ok, f"relations fail after E_{i}")
    return Verdict("reflect-module", inputs, "ok", None, diag)


def cmd_cherednik(args) -> Verdict:
    c, c2 = parse_scalar(args.c), parse_scalar(args.cprime)
    if not (is_real(c) and is_real(c2)):
        raise ScalarParseError("Cherednik parameters must be rational")
    inputs = {"n": args.n, "c": format_scalar(c), "cprime": format_scalar(c2)}
    v = cherednik.cherednik_decide(args.n, c, c2)
    witness = None
    if v.certificate is not None:
        _check(cherednik.verify_certificate(v.certificate), "certificate failed re-verification")
        witness = "; ".join(v.certificate.lines())
    return Verdict("cherednik", inputs, v.status, witness, list(v.diagnostics))


# ---------------------------------------------------------------------------

_NEGATIVE = re.compile(r"^-(\d|i)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sramorita", description="Morita equivalence decisions for symplectic reflection algebra parameters")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        # let vectors such as -1,0,0 through as positionals
        p._negative_number_matcher = _NEGATIVE
        return p

    p = add("quiver-info", cmd_quiver_info, "print vertices, arrows, delta")
    p.add_argument("quiver")
    p = add("classify", cmd_classify, "level / commutative / regular / generic flags")
    p.add_argument("quiver")
    p.add_argument("lam")
    p = add("canon", cmd_canon, "canonical representative of the W_ext-orbit")
    p.add_argument("quiver")
    p.add_argument("lam")
    p = add("orbit", cmd_orbit, "decide whether two parameters share a W_ext-orbit")
    p.add_argument("quiver")
    p.add_argument("lam")
    p.add_argument("lam2")
    p = add("orbit-product", cmd_orbit_product, "orbit decision for products, factors as 'A3:1,0,0;D4:...'")
    p.add_argument("left")
    p.add_argument("right")
    p = add("gwa-decide", cmd_gwa, "Morita decision for generalized Weyl algebras from root lists")
    p.add_argument("t")
    p.add_argument("t2")
    p = add("reflect-module", cmd_reflect_module, "apply reflection functors to a simple module")
    p.add_argument("quiver")
    p.add_argument("lam")
    p.add_argument("--simple", type=int, required=True, help="vertex of the starting simple module")
    p.add_argument("--word", default="", help="vertices to reflect at, in order of application")
    p.add_argument("--prime", type=int, default=0, help="work over F_p instead of Q")
    p = add("cherednik", cmd_cherednik, "type A rational Cherednik decision with certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--cprime", required=True)
    parser._negative_number_matcher = _NEGATIVE
    return parser


def run(argv: Sequence[str]) -> Tuple[int, str]:
    """Run one command; returns (exit code, text written to stdout or stderr)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), ""
    try:
        verdict = args.func(args)
    except SelfCheckFailure as exc:
        return EXIT_SELFCHECK, f"self-verification failed: {exc}"
    except AssertionError as exc:
        return EXIT_SELFCHECK, f"self-verification failed: {exc}"
    except (ScalarParseError, UnsupportedType, MoritaError, ValueError, IndexError) as exc:
        return EXIT_USAGE, f"error: {exc}"
    return EXIT_OK, verdict.render(args.format)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out, file=sys.stdout if code == EXIT_OK else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
