"""Controlled-English A/E/I/O sentences and their two translations.

Exactly five patterns are recognized (case-insensitive, ``is``/``are``
interchangeable): "every X is Y", "some X is Y", "no X is Y",
"not all X are Y", "some X are not Y".  Both O surface forms map to the same
formula ~P(tau S): the difference between them is one of focus, not content.

Epsilon mode emits the subnector table directly; montague mode applies the
lexicon's quantifier to the two noun predicates, beta-normalizes, and
reifies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import montague
from .montague import ET, Lexicon, UnknownWord, beta_normalize, reify
from .syntax import Epsilon, Formula, Not, PredApp, Tau, Variable


class UnrecognizedPattern(Exception):
    pass


@dataclass(frozen=True)
class SentencePattern:
    form: str  # one of "A", "I", "E", "O-notall", "O-somenot"
    subject: str
    predicate: str


_WORD_RE = re.compile(r"[a-z']+")


def parse_sentence(text: str) -> SentencePattern:
    words = _WORD_RE.findall(text.lower())
    if len(words) == 4:
        head, subject, copula, predicate = words
        if copula in ("is", "are"):
            if head == "every":
                return SentencePattern("A", subject, predicate)
            if head == "some":
                return SentencePattern("I", subject, predicate)
            if head == "no":
                return SentencePattern("E", subject, predicate)
    if len(words) == 5:
        if words[0] == "not" and words[1] == "all" and words[3] in ("is", "are"):
            return SentencePattern("O-notall", words[2], words[4])
        if words[0] == "some" and words[2] in ("is", "are") and words[3] == "not":
            return SentencePattern("O-somenot", words[1], words[4])
    raise UnrecognizedPattern(
        f"not a recognized A/E/I/O sentence: {text!r} "
        "(expected: every/some/no X is Y, not all X are Y, some X are not Y)"
    )


def canonical_noun(word: str, lexicon: Lexicon | None = None) -> str:
    """Collapse plural to the lexicon's canonical (singular) entry.

    Without a lexicon, unknown nouns are admitted with a naive singular form;
    with one, unresolvable words raise :class:`UnknownWord`.
    """
    if word.endswith("ies") and len(word) > 3:
        singular = word[:-3] + "y"
    elif word.endswith(("ses", "shes", "ches", "xes", "zes")) and len(word) > 3:
        singular = word[:-2]
    elif word.endswith("s") and not word.endswith("ss") and len(word) > 1:
        singular = word[:-1]
    else:
        singular = word
    if lexicon is None:
        return singular
    for c in dict.fromkeys((word, singular, word[:-1] if word.endswith("s") else word)):
        if c in lexicon:
            return c
    raise UnknownWord(word)


def translate(sentence: str, mode: str, lexicon: Lexicon | None = None) -> Formula:
    """Translate a controlled A/E/I/O sentence; mode is 'epsilon' or 'montague'."""
    if mode not in ("epsilon", "montague"):
        raise ValueError(f"mode must be 'epsilon' or 'montague', not {mode!r}")
    pattern = parse_sentence(sentence)
    s = canonical_noun(pattern.subject, lexicon)
    p = canonical_noun(pattern.predicate, lexicon)
    if mode == "epsilon":
        return _epsilon_translation(pattern.form, s, p)
    return _montague_translation(pattern.form, s, p, lexicon)


def _epsilon_translation(form: str, s: str, p: str) -> Formula:
    x = Variable("x")
    eps_s = Epsilon("x", PredApp(s, (x,)))
    tau_s = Tau("x", PredApp(s, (x,)))
    if form == "A":
        return PredApp(p, (tau_s,))
    if form == "I":
        return PredApp(p, (eps_s,))
    if form == "E":
        return Not(PredApp(p, (eps_s,)))
    # both O forms: ~P(tau S)
    return Not(PredApp(p, (tau_s,)))


def _montague_translation(form: str, s: str, p: str, lexicon: Lexicon | None) -> Formula:
    lex = lexicon if lexicon is not None else montague.default_lexicon()

    def noun(name: str):
        if name in lex:
            return lex[name]
        if lexicon is not None:
            raise UnknownWord(name)
        return montague.Const(name, ET)

    s_term, p_term = noun(s), noun(p)

    def apply2(word: str):
        return reify(beta_normalize(montague.App(montague.App(lex[word], s_term), p_term)))

    if form == "A":
        return apply2("every")
    if form == "I":
        return apply2("some")
    if form == "E":
        return Not(apply2("some"))
    return Not(apply2("every"))
