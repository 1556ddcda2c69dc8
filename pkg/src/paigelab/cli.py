"""Command-line front end.

    paigelab cox 2
    paigelab lattice 7 --format dot --out lattice7.dot
    paigelab congruence 13
    paigelab paige 2 moufang --exhaustive
    paigelab embed 25 34
    paigelab verify-all --max-p 7

Exit status is 0 when every check of the command passed, 1 when a check
failed and 2 for rejected input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import coxmodel, embed, lattice, paige
from .config import DEFAULT_SEED, closure_cap
from .errors import PaigelabError
from .gf import field_of_order, is_prime


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    seed: int = DEFAULT_SEED
    cap: int = field(default_factory=closure_cap)
    fmt: str = "text"
    out: str | None = None


# -- lattice export ------------------------------------------------------

def _census_name(order: int, p: int) -> str:
    return {1: "trivial", 3: "C3", p: f"C{p}", p * p: f"C{p}×C{p}",
            3 * p: f"order-{3 * p}", 3 * p * p: "full"}[order]


def lattice_text(g: lattice.LatticeGraph) -> str:
    p = g.p
    census = g.census()
    ordering = [1, 3, p, p * p, 3 * p, 3 * p * p]
    parts = [f"{census[o]} {_census_name(o, p)}" for o in ordering if o in census]
    lines = [f"{len(g.nodes)} subgroups: " + ", ".join(parts)]
    lines.append(f"Hasse edges: {len(g.hasse_edges)}")
    sols = sorted(lattice.solve_congruence(p))
    lines.append(f"i^2+i+1 = 0 mod {p}: {{{', '.join(map(str, sols))}}}")
    return "\n".join(lines) + "\n"


def lattice_dot(g: lattice.LatticeGraph) -> str:
    lines = [f'digraph "subgroups_3_3_3_{g.p}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, s in enumerate(g.nodes):
        lines.append(f'  n{i} [label="{s.tag}\\norder {s.order}"];')
    levels: dict[int, list[int]] = {}
    for i, s in enumerate(g.nodes):
        levels.setdefault(s.order, []).append(i)
    for order in sorted(levels):
        members = " ".join(f"n{i};" for i in levels[order])
        lines.append(f"  {{ rank=same; {members} }}")
    for a, b in g.hasse_edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_json(g: lattice.LatticeGraph) -> str:
    doc = {
        "schema": 1,
        "p": g.p,
        "nodes": [
            {"id": i, "tag": str(s.tag), "order": s.order,
             "generators": [str(w) for w in s.generator_words]}
            for i, s in enumerate(g.nodes)
        ],
        "edges": [[a, b] for a, b in g.hasse_edges],
    }
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


EMITTERS = {"text": lattice_text, "dot": lattice_dot, "json": lattice_json}


def lattice_cross_check(p: int) -> list[str]:
    """Problems found comparing the named family and joins with the oracle."""
    problems = []
    named = {s.mask for s in lattice.named_subgroups(p)}
    if named != lattice.brute_force_masks(p):
        problems.append("named family differs from brute-force family")
    subs = lattice.named_subgroups(p)
    bad = sum(lattice.join(a, b) != lattice.join_oracle(a, b) for a in subs for b in subs)
    if bad:
        problems.append(f"{bad} joins disagree with the closure oracle")
    return problems


# -- commands ------------------------------------------------------------

def cmd_cox(n: int, out=None) -> bool:
    out = out or sys.stdout
    r = coxmodel.verify_presentation(coxmodel.CoxGroup(n))
    parts = [f"order {r.order}"]
    if r.cyclic:
        parts.append("cyclic")
    parts.append(f"exponent {r.exponent}")
    if not r.cyclic:
        parts.append("abelian" if r.abelian else "non-abelian")
    print(f"E({n}) = (3,3|3,{n}): " + ", ".join(parts), file=out)
    rel = all(r.relations.values())
    print(f"relations x^3 = y^3 = (xy)^3 = (x^-1y)^{n} = 1: {'ok' if rel else 'FAILED'}", file=out)
    print(f"<x, y> has {r.generated} elements (3n^2 = {3 * n * n})", file=out)
    print("census " + " ".join(f"{k}:{v}" for k, v in r.census.items()), file=out)
    print(f"H = <x^2y, xy^2>: order {r.h_order}, normal: {'yes' if r.h_normal else 'no'}, "
          f"abelian: {'yes' if r.h_abelian else 'no'}", file=out)
    if n == 2:
        print(f"A4-profile: {'yes' if r.a4_profile else 'no'}", file=out)
    return r.passed and (n != 2 or r.a4_profile)


def cmd_lattice(p: int, fmt: str = "text", path: str | None = None, out=None) -> bool:
    out = out or sys.stdout
    g = lattice.build_lattice(p)
    problems = lattice_cross_check(p)
    text = EMITTERS[fmt](g)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    for msg in problems:
        print(f"cross-check: {msg}", file=sys.stderr)
    return not problems


def cmd_congruence(p: int, out=None) -> bool:
    out = out or sys.stdout
    sols = sorted(lattice.solve_congruence(p))
    verdict = "p ≡ 1 mod 3" if p % 3 == 1 else "p ≢ 1 mod 3"
    if p == 3:
        verdict += "; double root i = 1"
    print(f"{{{', '.join(map(str, sols))}}} ({verdict})", file=out)
    if p == 3:
        return sols == [1]
    return bool(sols) == (p % 3 == 1) and len(sols) in (0, 2)


def cmd_paige(q: int, check: str, exhaustive: bool = False, samples: int = 10**6,
              seed: int = DEFAULT_SEED, cap: int | None = None, out=None) -> bool:
    out = out or sys.stdout
    F = field_of_order(q)
    if check == "generation":
        r = paige.verify_generation(F, cap=cap)
        print(r, file=out)
        return r.passed
    gens = paige.standard_generators(F)
    loop = paige.close([gens.g3, gens.g4, gens.g5], cap=cap)
    r = paige.verify_moufang(loop, "exhaustive" if exhaustive else samples, seed=seed)
    print(r, file=out)
    return r.passed


def cmd_embed(q: int, pair: str, out=None) -> bool:
    out = out or sys.stdout
    r = embed.verify_embedding(field_of_order(q), pair)
    print(r, file=out)
    return r.passed


def cmd_verify_all(max_p: int = 7, seed: int = DEFAULT_SEED, out=None) -> bool:
    out = out or sys.stdout
    results = []

    def record(name, ok):
        results.append(ok)
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)

    record("E(n) presentation, n = 1..30",
           all(coxmodel.verify_presentation(coxmodel.CoxGroup(n)).passed for n in range(1, 31)))
    record("congruence solvable iff p = 1 mod 3, 3 < p < 200",
           all((len(lattice.solve_congruence(p)) == 2) == (p % 3 == 1)
               for p in range(2, 200) if is_prime(p) and p > 3))
    for p in (p for p in range(5, max_p + 1) if is_prime(p)):
        record(f"lattice p={p}: named family = oracle, joins agree", not lattice_cross_check(p))
        record(f"conjugation identity p={p}", lattice.conjugation_check(p).passed)
    for q in (2, 3):
        record(f"M*({q}) generated by g3, g4, g5", paige.verify_generation(field_of_order(q)).passed)
    gens = paige.standard_generators(field_of_order(2))
    record("Moufang identity, all triples of M*(2)",
           paige.verify_moufang(paige.close([gens.g3, gens.g4, gens.g5])).passed)
    for q in (2, 3, 5, 7):
        record(f"pairs of M*({q}) isomorphic to (3,3|3,{field_of_order(q).p})",
               all(embed.verify_embedding(field_of_order(q), pr).passed for pr in embed.PAIRS))
    ok = all(results)
    print(f"{sum(results)}/{len(results)} checks passed", file=out)
    return ok


# -- argument parsing ----------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="paigelab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cox", help="verify the model E(n) of (3,3|3,n)")
    s.add_argument("n", type=_positive)

    s = sub.add_parser("lattice", help="subgroup lattice of (3,3|3,p), p > 3 prime")
    s.add_argument("p", type=int)
    s.add_argument("--format", dest="fmt", choices=sorted(EMITTERS), default="text")
    s.add_argument("--out")

    s = sub.add_parser("congruence", help="solve i^2 + i + 1 = 0 mod p")
    s.add_argument("p", type=int)

    s = sub.add_parser("paige", help="checks on the Paige loop M*(q)")
    s.add_argument("q", type=int)
    s.add_argument("check", choices=["generation", "moufang"])
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=_positive, default=10**6)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)

    s = sub.add_parser("embed", help="verify <gi,gj> = (3,3|3,p) inside M*(q)")
    s.add_argument("q", type=int)
    s.add_argument("pair", choices=list(embed.PAIRS))

    s = sub.add_parser("verify-all", help="run the whole verification campaign")
    s.add_argument("--max-p", type=int, default=7)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, {k: v for k, v in vars(args).items() if k != "command"},
                    seed=getattr(args, "seed", DEFAULT_SEED), fmt=getattr(args, "fmt", "text"),
                    out=getattr(args, "out", None))
    try:
        if cfg.command == "cox":
            ok = cmd_cox(args.n)
        elif cfg.command == "lattice":
            ok = cmd_lattice(args.p, cfg.fmt, cfg.out)
        elif cfg.command == "congruence":
            ok = cmd_congruence(args.p)
        elif cfg.command == "paige":
            ok = cmd_paige(args.q, args.check, args.exhaustive, args.samples, cfg.seed, cfg.cap)
        elif cfg.command == "embed":
            ok = cmd_embed(args.q, args.pair)
        else:
            ok = cmd_verify_all(args.max_p, cfg.seed)
    except PaigelabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
