"""Command-line front end: ``morse-resolve <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import reproduce
from .chain import reduced_homology
from .errors import GuardError
from .ideals import format_ideal, lcm_lattice, random_ideal, read_ideal
from .morse import (
    DEFAULT_ENUM_LIMIT,
    DEFAULT_EXISTS_GUARD,
    Matching,
    MatchingError,
    enumerate_maximal_matchings,
    exists_polyhedral_maximal_matching,
    homogeneous_pairs,
    is_acyclic,
    matching_graph_dot,
    minimal_homogeneous_pairs,
    morse_complex,
    morse_hasse_dot,
)
from .polyhedral import check_polyhedral
from .taylor import is_minimal_support, multigraded_betti, scarf_complex, taylor_complex

DEFAULT_MAX_GENS = 12
DEFAULT_MAX_ENUM_GENS = 8

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _set(face) -> str:
    return "{" + ",".join(map(str, face)) + "}"


def _vec(v) -> str:
    return "(" + ", ".join(map(str, v)) + ")"


def _emit(args, text_lines: list[str], data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(text_lines))


def _write(path, content: str) -> None:
    Path(path).write_text(content)


def _write_json(path, data) -> None:
    _write(path, json.dumps(data, indent=2) + "\n")


def _load(args):
    path = Path(args.file)
    if not path.is_file():
        raise UsageError(f"{path}: no such file")
    try:
        return read_ideal(path)
    except ValueError as e:  # IdealParseError carries the line number
        raise UsageError(f"{path}: {e}") from None


def _taylor(args, ideal):
    return taylor_complex(ideal, guard=args.max_gens)


def _enumerate(args, taylor):
    if taylor.ideal.r > args.max_enum_gens:
        raise GuardError("max-enum-gens", taylor.ideal.r, args.max_enum_gens)
    return enumerate_maximal_matchings(taylor, limit=args.enum_limit)


def cmd_betti(args) -> int:
    ideal = _load(args)
    graded = multigraded_betti(ideal, guard=args.max_gens)
    top = max(i for i, _ in graded)
    totals = [0] * (top + 1)
    for (i, _), b in graded.items():
        totals[i] += b
    entries = sorted(graded.items(), key=lambda kv: (kv[0][0], kv[0][1].degree, kv[0][1].exponents))
    lines = [
        f"ideal: {ideal}",
        "total Betti numbers of I:   " + "  ".join(f"beta_{i}={b}" for i, b in enumerate(totals)),
        "total Betti numbers of S/I: " + "  ".join(f"beta_{i}={b}" for i, b in enumerate([1] + totals)),
        "multigraded Betti numbers of I (i, multidegree, value):",
    ]
    lines += [f"  {i}  {m}  {b}" for (i, m), b in entries]
    data = {
        "generators": [str(g) for g in ideal.generators],
        "total_I": totals,
        "total_S_mod_I": [1] + totals,
        "multigraded_I": [{"i": i, "multidegree": str(m), "beta": b} for (i, m), b in entries],
    }
    _emit(args, lines, data)
    return EXIT_OK


def cmd_scarf(args) -> int:
    ideal = _load(args)
    sc = scarf_complex(ideal, guard=args.max_gens)
    prof = reduced_homology(sc)
    lines = [
        f"ideal: {ideal}",
        "facets: " + " ".join(_set(f) for f in sc.facets()),
        f"f-vector: {_vec(sc.fvector())}",
        "reduced homology ranks (degrees -1..): " + _vec(prof.ranks),
        "acyclic: " + ("yes" if prof.is_acyclic() else "no"),
    ]
    data = {
        "complex": sc.to_json(),
        "facets": [list(f) for f in sc.facets()],
        "fvector": list(sc.fvector()),
        "reduced_homology": list(prof.ranks),
        "acyclic": prof.is_acyclic(),
    }
    if args.json_out:
        _write_json(args.json_out, sc.to_json())
    _emit(args, lines, data)
    return EXIT_OK


def cmd_taylor(args) -> int:
    ideal = _load(args)
    tc = _taylor(args, ideal)
    lat = lcm_lattice(ideal, guard=args.max_gens)
    lines = [
        f"ideal: {ideal}",
        f"f-vector: {_vec(tc.fvector())}",
        f"lcm lattice size: {len(lat)}",
    ]
    data = {"fvector": list(tc.fvector()), "lcm_lattice_size": len(lat)}
    if args.json_out:
        _write_json(args.json_out, tc.to_json())
    _emit(args, lines, data)
    return EXIT_OK


def cmd_matchings(args) -> int:
    ideal = _load(args)
    tc = _taylor(args, ideal)
    pairs = homogeneous_pairs(tc)
    minimal = minimal_homogeneous_pairs(tc)
    found = _enumerate(args, tc)
    lines = [
        f"ideal: {ideal}",
        f"homogeneous pairs: {len(pairs)}",
        f"minimal homogeneous pairs: {len(minimal)}",
    ]
    lines += [f"  ({_set(p.sigma)}, {_set(p.tau)})" for p in minimal]
    lines.append(f"maximal homogeneous acyclic matchings: {len(found)}" + (" (truncated)" if found.truncated else ""))
    rows = []
    for k, m in enumerate(found, start=1):
        fv = morse_complex(tc, m).fvector()
        lines.append(f"  M{k}: {len(m)} edges, critical f-vector {_vec(fv)}")
        rows.append({"index": k, "edges": m.to_json(), "fvector": list(fv)})
    data = {
        "homogeneous_pairs": len(pairs),
        "minimal_pairs": [{"sigma": list(p.sigma), "tau": list(p.tau)} for p in minimal],
        "truncated": found.truncated,
        "matchings": rows,
    }
    if args.json_out:
        _write_json(args.json_out, [m.to_json() for m in found])
    _emit(args, lines, data)
    return EXIT_OK


def _resolve_matching(args, tc) -> Matching:
    value = args.matching
    if value.isdigit():
        found = _enumerate(args, tc)
        k = int(value)
        if not 1 <= k <= len(found):
            raise UsageError(f"--matching {k}: index out of range 1..{len(found)}")
        return found[k - 1]
    if value.lstrip().startswith("["):
        text = value
    elif Path(value).is_file():
        text = Path(value).read_text()
    else:
        raise UsageError(f"--matching {value}: not an index, JSON file or JSON list")
    try:
        return Matching.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise UsageError(f"--matching: not an index, JSON file or JSON list ({e})") from None


def cmd_morse(args) -> int:
    ideal = _load(args)
    tc = _taylor(args, ideal)
    m = _resolve_matching(args, tc)
    acyc = is_acyclic(tc, m)
    if not acyc:
        raise MatchingError("matching is not acyclic; cycle " + " -> ".join(_set(f) for f in acyc.cycle))
    x = morse_complex(tc, m)
    mini = is_minimal_support(x)
    lines = [f"ideal: {ideal}", f"matching: {len(m)} edges", f"f-vector: {_vec(x.fvector())}"]
    if mini:
        lines.append("minimal: yes")
    else:
        s, t = mini.witness
        lines.append(f"minimal: no ({_set(s)} < {_set(t)} share label {mini.label})")
    lines.append("cells (vertices, label, simplicial, facets):")
    for c in x.cells_:
        flag = "simplex" if x.simplicial[c] else "non-simplicial"
        lines.append(f"  {_set(c)}  {x.label(c)}  {flag}  " + " ".join(_set(f) for f in x.facets(c)))
    data = x.to_json()
    data["fvector"] = list(x.fvector())
    data["minimal"] = mini.minimal
    if args.json_out:
        _write_json(args.json_out, x.to_json())
    if args.dot_out:
        _write(args.dot_out, morse_hasse_dot(x))
    if args.graph_dot_out:
        _write(args.graph_dot_out, matching_graph_dot(tc, m))
    _emit(args, lines, data)
    return EXIT_OK


def cmd_polyhedral(args) -> int:
    ideal = _load(args)
    tc = _taylor(args, ideal)
    found = _enumerate(args, tc)
    lines = [f"ideal: {ideal}", f"maximal matchings: {len(found)}" + (" (truncated)" if found.truncated else "")]
    rows = []
    for k, m in enumerate(found, start=1):
        v = check_polyhedral(morse_complex(tc, m))
        lines.append(f"  M{k}: {v.status}")
        for w in v.witnesses:
            common = ", ".join(_set(c) for c in w.maximal_common)
            lines.append(f"      meet of {_set(w.cell_a)} and {_set(w.cell_b)} has maximal common cells {common}")
        for c, why in v.irregular:
            lines.append(f"      cell {_set(c)}: {why}")
        for c in v.uncertified:
            lines.append(f"      cell {_set(c)}: not certified")
        rows.append({"index": k, **v.to_json()})
    data = {"truncated": found.truncated, "verdicts": rows}
    if args.all:
        res = exists_polyhedral_maximal_matching(ideal, guard=args.exists_max_gens, limit=args.enum_limit)
        lines.append(
            f"exists polyhedral maximal matching: {'yes' if res.exists else 'no'}"
            f" (checked {res.checked}{', truncated' if res.truncated else ''})"
        )
        data["exists"] = {
            "exists": res.exists,
            "checked": res.checked,
            "truncated": res.truncated,
            "witness": res.witness.to_json() if res.witness else None,
        }
    if args.json_out:
        _write_json(args.json_out, data)
    _emit(args, lines, data)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    results = reproduce.run_all()
    lines = [r.line() for r in results]
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} claims passed")
    data = [{"key": r.key, "title": r.title, "ok": r.ok, "detail": r.detail} for r in results]
    _emit(args, lines, data)
    return EXIT_OK if passed == len(results) else EXIT_COMPUTE


def cmd_random_ideal(args) -> int:
    ideal = random_ideal(args.gens, args.vars, args.seed, max_exp=args.max_exp)
    text = f"# random ideal: gens={args.gens} vars={args.vars} seed={args.seed} max_exp={args.max_exp}\n"
    text += format_ideal(ideal)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="morse-resolve",
        description="Cellular resolutions of monomial ideals via homogeneous acyclic matchings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-gens", type=_positive, default=DEFAULT_MAX_GENS, help="guard on generators for Taylor construction")

    filed = argparse.ArgumentParser(add_help=False, parents=[common])
    filed.add_argument("file", help="ideal file: optional n=<count> line, then one monomial per line")

    enum = argparse.ArgumentParser(add_help=False)
    enum.add_argument("--enum-limit", type=_positive, default=DEFAULT_ENUM_LIMIT, help="maximum number of matchings listed")
    enum.add_argument("--max-enum-gens", type=_positive, default=DEFAULT_MAX_ENUM_GENS, help="guard on generators for enumeration")

    s = sub.add_parser("betti", parents=[filed], help="total and multigraded Betti numbers")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("scarf", parents=[filed], help="Scarf complex facets, f-vector and homology")
    s.add_argument("--json-out")
    s.set_defaults(func=cmd_scarf)

    s = sub.add_parser("taylor", parents=[filed], help="Taylor complex f-vector and lcm lattice size")
    s.add_argument("--json-out")
    s.set_defaults(func=cmd_taylor)

    s = sub.add_parser("matchings", parents=[filed, enum], help="maximal homogeneous acyclic matchings")
    s.add_argument("--json-out")
    s.set_defaults(func=cmd_matchings)

    s = sub.add_parser("morse", parents=[filed, enum], help="Morse complex of one matching")
    s.add_argument("--matching", required=True, help="1-based index into the enumeration, a JSON file, or a JSON list")
    s.add_argument("--json-out")
    s.add_argument("--dot-out", help="write the Hasse diagram as DOT")
    s.add_argument("--graph-dot-out", help="write the matching graph as DOT")
    s.set_defaults(func=cmd_morse)

    s = sub.add_parser("polyhedral", parents=[filed, enum], help="polyhedrality verdict per maximal matching")
    s.add_argument("--all", action="store_true", help="also search for a polyhedral maximal matching")
    s.add_argument("--exists-max-gens", type=_positive, default=DEFAULT_EXISTS_GUARD)
    s.add_argument("--json-out")
    s.set_defaults(func=cmd_polyhedral)

    s = sub.add_parser("reproduce-paper", parents=[common], help="run every golden check")
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("random-ideal", help="write a random ideal file")
    s.add_argument("--gens", type=_positive, required=True)
    s.add_argument("--vars", type=_positive, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-exp", type=_positive, default=3)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_random_ideal)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"morse-resolve: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as e:
        print(f"morse-resolve: guard exceeded: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    except (MatchingError, ValueError, AssertionError) as e:
        print(f"morse-resolve: error: {e}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
