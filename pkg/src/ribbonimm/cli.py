"""Command-line front end: decompose, matrix, imm, sweep, remarks, kl-table.

All commands emit canonical JSON (sorted keys) with --json, or a short
text summary otherwise; --out writes to a file instead of stdout.  Exit
codes: 0 when the computation succeeds and any checked identity holds,
1 when a checked property fails (a certificate is included in the
output), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool

from . import klbase, network, ribbonmat, shuffle, tlalgebra
from .corpus import sweep_corpus
from .errors import RibbonError
from .shapes import InfiniteRibbon, SkewShape, decompose
from .symfunc import SymPoly, determinant, expand_schur, skew_schur


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _shape_from_file(path) -> SkewShape:
    try:
        return SkewShape.from_json(_load_json(path))
    except (RibbonError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad shape file {path}: {exc}") from exc


def _ribbon_from_file(path) -> InfiniteRibbon:
    try:
        return InfiniteRibbon.from_json(_load_json(path))
    except (RibbonError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad ribbon file {path}: {exc}") from exc


def _decompose(shape, ribbon):
    try:
        return decompose(shape, ribbon)
    except RibbonError as exc:
        raise InputError(str(exc)) from exc


def _resolve_nvars(arg, dec):
    if arg == "auto":
        return max(dec.shape.size, 1)
    n = int(arg)
    if n < 1:
        raise InputError("--nvars must be positive or 'auto'")
    return n


def _parse_perm(text) -> tuple:
    text = text.replace(",", "")
    if not text.isdigit():
        raise InputError(f"bad permutation {text!r}")
    w = tuple(int(ch) for ch in text)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InputError(f"{text!r} is not a permutation")
    return w


def _emit(obj, args, text_lines=None) -> None:
    if args.json or text_lines is None:
        payload = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


# ------------------------------------------------------------------ commands

def cmd_decompose(args) -> int:
    shape = _shape_from_file(args.shape)
    ribbon = _ribbon_from_file(args.ribbon)
    dec = _decompose(shape, ribbon)
    obj = dec.to_json()
    _emit(obj, args, [f"a = {list(dec.abar)}", f"b = {list(dec.bbar)}",
                      f"copies = {list(dec.copies)}"])
    return 0


def cmd_matrix(args) -> int:
    shape = _shape_from_file(args.shape)
    ribbon = _ribbon_from_file(args.ribbon)
    dec = _decompose(shape, ribbon)
    N = _resolve_nvars(args.nvars, dec)
    rm = ribbonmat.build(dec, N)
    if args.minor:
        I = sorted({int(x) for x in args.minor.split(",")})
        rm = ribbonmat.principal_minor(rm, I)
        dec = rm.decomposition
    det = determinant(rm.matrix)
    target = skew_schur(dec.shape, N)
    ok = det == target
    obj = {
        "a": list(dec.abar),
        "b": list(dec.bbar),
        "nvars": N,
        "entries": [[str(expand_schur(rm.matrix[i, j]))
                     for j in range(1, rm.ell + 1)]
                    for i in range(1, rm.ell + 1)],
        "det_schur": str(expand_schur(det)),
        "det_equals_skew_schur": ok,
    }
    _emit(obj, args, [f"det = {obj['det_schur']}",
                      f"identity holds: {ok}"])
    return 0 if ok else 1


def cmd_imm(args) -> int:
    shape = _shape_from_file(args.shape)
    ribbon = _ribbon_from_file(args.ribbon)
    dec = _decompose(shape, ribbon)
    N = _resolve_nvars(args.nvars, dec)
    if args.method == "kl":
        w = _parse_perm(args.perm or args.type or "")
        if len(w) != dec.ell:
            raise InputError("permutation size != number of sections")
        rm = ribbonmat.build(dec, N)
        value = klbase.imm_kl(w, rm.matrix)
        label = f"kl {''.join(map(str, w))}"
    else:
        u = _parse_perm(args.type or "")
        if len(u) != dec.ell:
            raise InputError("type size != number of sections")
        if not tlalgebra.is_321_avoiding(u):
            raise InputError(f"type {u} is not 321-avoiding")
        tau = tlalgebra.perm_to_matching(u)
        if args.method == "def":
            rm = ribbonmat.build(dec, N)
            value = tlalgebra.imm_tl(tau, rm.matrix)
        elif args.method == "shuffle":
            value = shuffle.imm_by_shuffle(dec, N, tau)
        elif args.method == "covers":
            value = network.imm_by_covers(dec, N, tau)
        elif args.method == "crystal":
            exp = shuffle.schur_expand_by_crystal(dec, N).get(tau)
            value = exp.to_poly() if exp else SymPoly.zero(N)
        else:  # pragma: no cover - argparse restricts choices
            raise InputError(f"unknown method {args.method}")
        label = f"{args.method} {str(tau)}"
    exp = expand_schur(value)
    obj = {"method": args.method, "nvars": N, "expansion": exp.to_json()}
    if args.method == "kl":
        obj["perm"] = list(_parse_perm(args.perm or args.type or ""))
    else:
        obj["type"] = str(tlalgebra.perm_to_matching(_parse_perm(args.type)))
    _emit(obj, args, [f"Imm[{label}] = {exp}"])
    return 0


def _sweep_one(packed):
    dec_json, theorem, nvars = packed
    ribbon = InfiniteRibbon.from_json(dec_json["ribbon"])
    shape = SkewShape.from_json(dec_json["shape"])
    dec = decompose(shape, ribbon)
    N = max(dec.shape.size, 1) if nvars == "auto" else int(nvars)
    item = {"a": list(dec.abar), "b": list(dec.bbar),
            "ribbon": dec.ribbon.to_json(), "nvars": N}
    if theorem == "det":
        rm = ribbonmat.build(dec, N)
        item["ok"] = ribbonmat.check_determinant(rm)
    elif theorem == "1.1":
        report = ribbonmat.theorem1_harness(dec, N, method="def")
        item["ok"] = report["overall_positive"]
        if not item["ok"]:
            item["certificate"] = [t for t in report["immanants"]
                                   if not t["schur_positive"]]
    elif theorem == "conj1.2":
        report = klbase.conjecture12_harness(dec, N)
        item["ok"] = report["all_positive"]
        if not item["ok"]:
            item["certificate"] = report["certificates"]
    elif theorem == "cor3.5":
        rm = ribbonmat.build(dec, N)
        total = SymPoly.zero(N)
        for u in tlalgebra.enumerate_321_avoiding(dec.ell):
            total = total + tlalgebra.imm_tl(
                tlalgebra.perm_to_matching(u), rm.matrix)
        item["ok"] = total == ribbonmat.odd_even_product(dec, N)
    else:
        raise InputError(f"unknown theorem {theorem}")
    return item


def cmd_sweep(args) -> int:
    decs = sweep_corpus(args.max_cells, args.max_window,
                        args.max_ell, args.per_bucket)
    if args.limit is not None:
        decs = decs[: args.limit]
    jobs = [(d.to_json(), args.theorem, args.nvars) for d in decs]
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            items = pool.map(_sweep_one, jobs)
    else:
        items = [_sweep_one(j) for j in jobs]
    n_bad = sum(1 for it in items if not it["ok"])
    obj = {"theorem": args.theorem, "count": len(items),
           "failures": n_bad,
           "items": items if args.full_report else
           [it for it in items if not it["ok"]]}
    _emit(obj, args, [f"theorem {args.theorem}: {len(items)} instances, "
                      f"{n_bad} failures"])
    return 0 if n_bad == 0 else 1


def cmd_remarks(args) -> int:
    N1 = int(args.nvars) if args.nvars != "auto" else 5
    A, Abad = ribbonmat.remark_matrices(N_first=N1, N_second=N1)
    tau = tlalgebra.perm_to_matching((2, 1, 4, 3))
    exp1 = expand_schur(tlalgebra.imm_tl(tau, A))
    rows, cols = ribbonmat.remark_bad_minor_indices()
    exp2 = expand_schur(tlalgebra.minor(Abad, rows, cols))
    comp_rows = tuple(sorted(set(range(1, 5)) - set(rows)))
    comp_cols = tuple(sorted(set(range(1, 5)) - set(cols)))
    prod = tlalgebra.minor(Abad, rows, cols) * tlalgebra.minor(
        Abad, comp_rows, comp_cols)
    exp3 = expand_schur(prod)
    ok = (not exp1.schur_positive) and (not exp2.schur_positive) \
        and exp3.schur_positive
    obj = {
        "nvars": N1,
        "first_immanant": exp1.to_json(),
        "bad_minor": exp2.to_json(),
        "bad_minor_rows": list(rows),
        "bad_minor_cols": list(cols),
        "complementary_product": exp3.to_json(),
        "negatives_found": ok,
    }
    _emit(obj, args, [
        f"Imm at 2143: negative terms {exp1.negative_part()}",
        f"minor {rows}x{cols}: negative terms {exp2.negative_part()}",
        f"complementary product Schur-nonnegative: {exp3.schur_positive}",
    ])
    return 0 if ok else 1


def cmd_kl_table(args) -> int:
    n = args.n
    if n > 6:
        raise InputError("kl-table supports n <= 6")
    table = klbase.kl_polynomials(n)
    lines = table.dump()
    obj = {"n": n, "table": lines}
    _emit(obj, args, lines)
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="ribbonimm")
    ap.add_argument("--json", action="store_true",
                    help="emit canonical JSON")
    ap.add_argument("--out", help="write output to FILE")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True,
                            parser_class=lambda **kw: argparse.ArgumentParser(
                                parents=[common], **kw))

    p = sub.add_parser("decompose")
    p.add_argument("shape")
    p.add_argument("ribbon")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("matrix")
    p.add_argument("shape")
    p.add_argument("ribbon")
    p.add_argument("--nvars", default="auto")
    p.add_argument("--minor", help="comma-separated 1-based index set")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("imm")
    p.add_argument("shape")
    p.add_argument("ribbon")
    p.add_argument("--nvars", default="auto")
    p.add_argument("--type", help="321-avoiding permutation, e.g. 2143")
    p.add_argument("--perm", help="permutation for --method kl")
    p.add_argument("--method", default="def",
                   choices=["def", "shuffle", "covers", "crystal", "kl"])
    p.set_defaults(func=cmd_imm)

    p = sub.add_parser("sweep")
    p.add_argument("--max-cells", type=int, default=8)
    p.add_argument("--max-window", type=int, default=5)
    p.add_argument("--max-ell", type=int, default=4)
    p.add_argument("--per-bucket", type=int, default=16)
    p.add_argument("--limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--nvars", default="4")
    p.add_argument("--full-report", action="store_true")
    p.add_argument("--theorem", default="det",
                   choices=["det", "1.1", "conj1.2", "cor3.5"])
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("remarks")
    p.add_argument("--nvars", default="auto")
    p.set_defaults(func=cmd_remarks)

    p = sub.add_parser("kl-table")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_kl_table)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RibbonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
