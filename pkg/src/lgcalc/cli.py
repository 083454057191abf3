"""Command line driver: proving, net checking, parsing with readings."""
from __future__ import annotations

import argparse
import os
import random
import sys
from typing import Optional

from . import contraction as ct
from . import cps
from . import display as dp
from . import extraction as ex
from . import focused as fc
from . import proofnet as pn
from . import terms as tm
from .formula import BiasMap, FormulaSyntaxError, NEG
from .lexicon import LexiconError, Lexicon, load_lexicon
from .structure import (Leaf, RIGHT_FOCUS, Sequent, fmt_sequent, leaves,
                        parse_sequent, structure_to_formula)

EXIT_OK = 0
EXIT_NO_PROOF = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lg",
        description="Lambek-Grishin workbench: sequent prover, proof nets, "
                    "focused proofs with terms, readings via CPS semantics.")
    sub = p.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="prove a sequent 'X |- Y'")
    prove.add_argument("sequent")
    prove.add_argument("--system", choices=["slg", "flg", "net", "all"],
                       default="slg")
    prove.add_argument("--bias", default="",
                       help="atom polarities, e.g. 'np=+,s=-' (default all -)")
    prove.add_argument("--max-depth", type=int, default=None)
    prove.add_argument("--max-proofs", type=int, default=None)
    prove.add_argument("--dot", metavar="DIR", default=None,
                       help="write proof structure DOT files here")
    prove.add_argument("--json", action="store_true",
                       help="print sLG proofs as JSON")
    prove.add_argument("--seed", type=int, default=None,
                       help="shuffle matching enumeration order")

    parse = sub.add_parser("parse", help="parse words with a lexicon")
    parse.add_argument("words", nargs="*")
    parse.add_argument("--lexicon", required=True)
    parse.add_argument("--bias", default=None,
                       help="override the lexicon bias, e.g. 'np=+,s=-'")
    parse.add_argument("--goal", default=None, help="override the goal formula")
    parse.add_argument("--expect-readings", type=int, default=None)
    parse.add_argument("--dot", metavar="DIR", default=None)
    parse.add_argument("--latex", action="store_true",
                       help="also print readings as LaTeX")
    parse.add_argument("--seed", type=int, default=None)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "prove":
            return cmd_prove(args)
        return cmd_parse(args)
    except (FormulaSyntaxError, LexiconError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _bias(spec: Optional[str]) -> BiasMap:
    if not spec:
        return BiasMap(default=NEG)
    return BiasMap.parse(spec)


def _product_spine(x) -> list:
    """Hypothesis formulas: the top-level product comma-list of the antecedent."""
    from .structure import SBin
    if isinstance(x, SBin) and x.op == "*":
        return _product_spine(x.left) + _product_spine(x.right)
    return [structure_to_formula(x)]


def cmd_prove(args) -> int:
    seq = parse_sequent(args.sequent)
    bias = _bias(args.bias)
    found = {}
    if args.system in ("slg", "all"):
        cfg = dp.SearchConfig(max_logical_depth=args.max_depth,
                              max_proofs=args.max_proofs)
        proofs = dp.SLGProver(cfg).prove(seq)
        found["slg"] = bool(proofs)
        print(f"sLG: {len(proofs)} proof(s) for {fmt_sequent(seq)}")
        for i, p in enumerate(proofs):
            print(f"--- proof {i + 1} ---")
            print(dp.proof_json_str(p) if args.json else dp.fmt_proof(p))
    if args.system in ("flg", "all"):
        results = fc.fprove(seq, bias)
        found["flg"] = bool(results)
        print(f"fLG: {len(results)} focused proof(s)")
        for i, (_, term) in enumerate(results):
            print(f"  term {i + 1}: {tm.fmt_term(term)}")
    if args.system in ("net", "all"):
        hyps = _product_spine(seq.ant)
        concls = [structure_to_formula(seq.suc)]
        matchings = list(pn.enumerate_matchings(hyps, concls))
        if args.seed is not None:
            random.Random(args.seed).shuffle(matchings)
        nets = 0
        for i, (matching, ps) in enumerate(matchings):
            res = ct.is_proof_net(ps)
            status = "proof net" if res else "not a net"
            print(f"matching {i + 1}/{len(matchings)}: {status}")
            if res:
                nets += 1
                print(f"  trace: {[s.kind for s in res.trace]}")
            if args.dot:
                os.makedirs(args.dot, exist_ok=True)
                path = os.path.join(args.dot, f"matching{i + 1}.dot")
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(pn.to_dot(ps, f"m{i + 1}"))
        found["net"] = nets > 0
        print(f"nets: {nets} of {len(matchings)} matchings")
    return EXIT_OK if any(found.values()) else EXIT_NO_PROOF


def cmd_parse(args) -> int:
    if not args.words:
        print("error: no words given", file=sys.stderr)
        return EXIT_USAGE
    lex = load_lexicon(args.lexicon)
    bias = BiasMap.parse(args.bias) if args.bias else lex.bias
    goal = lex.goal
    if args.goal:
        from .formula import parse_formula
        goal = parse_formula(args.goal)
    try:
        entries = [lex.lookup(w) for w in args.words]
    except KeyError as exc:
        print(f"error: unknown word {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    hyp_names = []
    used: dict[str, int] = {}
    for w in args.words:
        used[w] = used.get(w, 0) + 1
        hyp_names.append(w if used[w] == 1 else f"{w}_{used[w]}")
    recipes = {name: e.semantics for name, e in zip(hyp_names, entries)}
    matchings = list(pn.enumerate_matchings([e.formula for e in entries], [goal]))
    if args.seed is not None:
        random.Random(args.seed).shuffle(matchings)
    readings = []
    for i, (matching, ps) in enumerate(matchings):
        res = ct.is_proof_net(ps)
        if res is None:
            continue
        order = ct.tree_hypothesis_order(res.tree)
        if list(order) != list(res.tree.hyp_order):
            continue  # net exists but not with the words in surface order
        if args.dot:
            os.makedirs(args.dot, exist_ok=True)
            with open(os.path.join(args.dot, f"net{i + 1}.dot"), "w",
                      encoding="utf-8") as fh:
                fh.write(pn.to_dot(ps, f"net{i + 1}"))
        for extr in ex.extract_from_net(ps, bias, hyp_names=hyp_names):
            image = cps.cps_term(extr.term)
            final = cps.pretty_names(cps.substitute_and_normalize(image, recipes))
            readings.append((extr, image, final))
    if not readings:
        print("no parse")
        return EXIT_NO_PROOF
    # deterministic output order
    readings.sort(key=lambda r: cps.fmt_target(r[2]))
    print(f"{len(readings)} reading(s) for: {' '.join(args.words)}")
    for i, (extr, image, final) in enumerate(readings):
        print(f"--- reading {i + 1} ---")
        print(f"  pairing: {extr.pairing.pairs}")
        print(f"  term:    {tm.fmt_term(extr.term)}")
        print(f"  formula: {cps.fmt_target(final)}")
        if args.latex:
            print(f"  latex:   {cps.fmt_target_latex(final)}")
    if args.expect_readings is not None and len(readings) != args.expect_readings:
        print(f"expected {args.expect_readings} readings, got {len(readings)}",
              file=sys.stderr)
        return EXIT_NO_PROOF
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
