"""Lexicons: word to formula plus semantic recipe, with an atom bias map."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import cps
from .formula import Atom, BiasMap, Formula, parse_formula
from .cps import IType, TargetTerm


@dataclass(frozen=True)
class LexEntry:
    word: str
    formula: Formula
    semantics: TargetTerm


@dataclass
class Lexicon:
    entries: list[LexEntry]
    bias: BiasMap
    goal: Formula
    constant_types: dict[str, IType] = field(default_factory=dict)

    def lookup(self, word: str) -> LexEntry:
        for e in self.entries:
            if e.word == word:
                return e
        raise KeyError(word)

    def words(self) -> list[str]:
        return [e.word for e in self.entries]


class LexiconError(ValueError):
    pass


def lexicon_from_dict(data: dict) -> Lexicon:
    bias_spec = data.get("bias", {})
    default = bias_spec.get("default", "-")
    overrides = tuple((k, v) for k, v in bias_spec.items() if k != "default")
    bias = BiasMap(default=default, overrides=overrides)
    goal = parse_formula(data.get("goal", "s"))
    entries = []
    for raw in data.get("entries", []):
        try:
            formula = parse_formula(raw["formula"])
            semantics = cps.parse_lambda(raw["semantics"])
        except (KeyError, ValueError) as exc:
            raise LexiconError(f"bad entry {raw!r}: {exc}") from exc
        entries.append(LexEntry(raw["word"], formula, semantics))
    lex = Lexicon(entries, bias, goal)
    validate_lexicon(lex)
    return lex


def load_lexicon(path: str) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return lexicon_from_dict(json.load(fh))


def validate_lexicon(lex: Lexicon) -> None:
    """Each recipe must type at the lexical image of its formula's value
    type; constant types unify across the whole lexicon."""
    constants: dict[str, IType] = dict(lex.constant_types)
    for e in lex.entries:
        want = cps.lexify(cps.value_type(e.formula, lex.bias))
        try:
            cps.infer_lexical(e.semantics, want, constants)
        except cps.TargetTypeError as exc:
            raise LexiconError(f"entry {e.word!r} does not type: {exc}") from exc
    lex.constant_types = constants
