"""Line-oriented textual proof scripts.

One rule application per line, referencing earlier lines by name::

    # hypotheses are written as sequents; '#' starts a comment
    constants: c
    a1 = axiom(P(c) |- P(c))
    d1 = eps_intro(a1, var=x, pattern=P(x), witness=c)

Payload keys: ``var`` (identifier), ``pattern``/``discharge``/``formula``/
``left``/``right``/``add`` (formulas; ``add`` may repeat), ``witness``/
``term`` (terms), and a bare ``... |- ...`` argument for rules that take a
sequent (axiom, dual_rewrite).  These key names are reserved words inside
script arguments.
"""

from __future__ import annotations

import re

from . import kernel
from .parser import ParseError, parse_formula, parse_term, split_top_level

_LINE_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_']*)\s*=\s*([a-z_]+)\s*\((.*)\)\s*$")
_KEY_RE = re.compile(r"^(var|pattern|witness|term|formula|discharge|left|right|add)\s*=\s*(.+)$", re.S)

_FORMULA_KEYS = {"pattern", "formula", "discharge", "left", "right", "add"}
_TERM_KEYS = {"witness", "term"}


class ScriptError(Exception):
    pass


def parse_sequent(text: str, constants=()) -> kernel.Sequent:
    if "|-" not in text:
        raise ScriptError(f"expected a sequent with '|-': {text!r}")
    left, right = text.split("|-", 1)
    hyps = tuple(parse_formula(part, constants=constants) for part in split_top_level(left))
    return kernel.Sequent(hyps, parse_formula(right, constants=constants))


def parse_script(text: str) -> dict[str, kernel.Derivation]:
    """Parse a proof script into named derivations (insertion-ordered)."""
    derivations: dict[str, kernel.Derivation] = {}
    constants: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("constants:"):
            constants.update(line[len("constants:"):].split())
            continue
        m = _LINE_RE.match(line)
        if m is None:
            raise ScriptError(f"line {lineno}: expected 'name = rule(args)'")
        name, rule, argtext = m.groups()
        if name in derivations:
            raise ScriptError(f"line {lineno}: step name {name!r} reused")
        try:
            derivations[name] = _build_step(rule, argtext, derivations, constants)
        except (ScriptError, ParseError, ValueError, AttributeError) as exc:
            raise ScriptError(f"line {lineno}: {exc}") from exc
    if not derivations:
        raise ScriptError("script contains no steps")
    return derivations


def _build_step(rule: str, argtext: str, known, constants) -> kernel.Derivation:
    premises: list[kernel.Derivation] = []
    payload: dict[str, object] = {}
    adds: list = []
    sequent = None
    # hypothesis lists inside a sequent argument contain top-level commas, so
    # leftover fragments up to the one holding '|-' are rejoined first
    fragments: list[str] = []
    for item in split_top_level(argtext):
        km = _KEY_RE.match(item)
        if km:
            key, value = km.group(1), km.group(2).strip()
            if key == "var":
                parsed: object = value
            elif key in _TERM_KEYS:
                parsed = parse_term(value, constants=constants)
            else:
                parsed = parse_formula(value, constants=constants)
            if key == "add":
                adds.append(parsed)
            elif key in payload:
                raise ScriptError(f"duplicate key {key!r}")
            else:
                payload[key] = parsed
            continue
        if item in known and "|-" not in item:
            premises.append(known[item])
            continue
        fragments.append(item)
        if "|-" in item:
            if sequent is not None:
                raise ScriptError("more than one sequent argument")
            sequent = parse_sequent(", ".join(fragments), constants)
            fragments = []
    if fragments:
        raise ScriptError(
            f"unknown argument {fragments[0]!r} (not a step name, key=value, or sequent)"
        )

    def need(key):
        if key not in payload:
            raise ScriptError(f"{rule} requires {key}=...")
        return payload[key]

    def prem(count):
        if len(premises) != count:
            raise ScriptError(f"{rule} takes {count} premise reference(s), got {len(premises)}")
        return premises

    if rule == "axiom":
        if sequent is None:
            raise ScriptError("axiom requires a sequent argument")
        return kernel.Derivation("axiom", (), sequent)
    if rule == "weaken":
        (p,) = prem(1)
        return kernel.weaken(p, tuple(adds))
    if rule == "and_intro":
        p1, p2 = prem(2)
        return kernel.and_intro(p1, p2)
    if rule == "and_elim_left":
        (p,) = prem(1)
        return kernel.and_elim_left(p)
    if rule == "and_elim_right":
        (p,) = prem(1)
        return kernel.and_elim_right(p)
    if rule == "or_intro_left":
        (p,) = prem(1)
        return kernel.or_intro_left(p, need("right"))
    if rule == "or_intro_right":
        (p,) = prem(1)
        return kernel.or_intro_right(p, need("left"))
    if rule == "or_elim":
        p1, p2, p3 = prem(3)
        return kernel.or_elim(p1, p2, p3)
    if rule == "imp_intro":
        (p,) = prem(1)
        return kernel.imp_intro(p, need("discharge"))
    if rule == "imp_elim":
        p1, p2 = prem(2)
        return kernel.imp_elim(p1, p2)
    if rule == "not_intro":
        (p,) = prem(1)
        return kernel.not_intro(p, need("discharge"))
    if rule == "not_elim":
        p1, p2 = prem(2)
        return kernel.not_elim(p1, p2)
    if rule == "falsum_elim":
        (p,) = prem(1)
        return kernel.falsum_elim(p, need("formula"))
    if rule == "dne":
        (p,) = prem(1)
        return kernel.dne(p)
    if rule == "eq_refl":
        prem(0)
        return kernel.eq_refl(need("term"), tuple(adds))
    if rule == "eq_subst":
        p1, p2 = prem(2)
        return kernel.eq_subst(p1, p2, need("var"), need("pattern"))
    if rule == "tau_intro":
        (p,) = prem(1)
        return kernel.tau_intro(p, need("var"))
    if rule == "tau_elim":
        (p,) = prem(1)
        return kernel.tau_elim(p, need("var"), need("pattern"), need("term"))
    if rule == "eps_intro":
        (p,) = prem(1)
        return kernel.eps_intro(p, need("var"), need("pattern"), need("witness"))
    if rule == "dual_rewrite":
        (p,) = prem(1)
        if sequent is None:
            raise ScriptError("dual_rewrite requires a target sequent argument")
        return kernel.dual_rewrite(p, sequent)
    raise ScriptError(f"unknown rule {rule!r} (known: {', '.join(kernel.RULE_NAMES)})")


def check_script(text: str, sig=None):
    """Check every step; returns (last step name, its end-sequent).

    On failure raises ScriptError naming the first failing step, its rule,
    and the kernel's reason.
    """
    derivations = parse_script(text)
    last_name = None
    for name, d in derivations.items():
        try:
            kernel.check_derivation(d, sig)
        except (kernel.RuleMismatch, kernel.EigenvariableViolation) as exc:
            raise ScriptError(f"step {name!r} ({d.rule}): {exc}") from exc
        last_name = name
    return last_name, derivations[last_name].conclusion
