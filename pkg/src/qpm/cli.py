"""Command-line front end.

Subcommands construct everything for a given coprime pair and emit
deterministic tables:

    info      basic dimensions and counts
    fusion    the full product table of irreducible classes
    center    the canonical central basis with labels
    smatrix   the modular S-matrix in the Radford basis
    tmatrix   the modular T-matrix
    ribbon    the ribbon element's eigenvalue table and factor data
    verify    run the named verification suites and print a ledger

Every exact value is emitted as cyclotomic coefficient pairs together with
a float embedding at the requested precision.  Exit codes: 0 success,
1 failed verification, 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from .algebra import Params
from .center import cached_canonical_basis
from .cyclotomic import Cyclo
from .duality import Theory, conformal_weight_exponent
from .grothendieck import gr_basis_labels, gr_class, gr_multiply
from .modular import ModularAction
from .reps import irreducible_labels
from .verify import available_suites, run_suites

CACHE_ENV = "QPM_CACHE_DIR"


def _context(args) -> Params:
    if args.p_plus < 1 or args.p_minus < 1:
        raise SystemExit(2)
    if math.gcd(args.p_plus, args.p_minus) != 1:
        print(f"error: p_plus={args.p_plus} and p_minus={args.p_minus} "
              "must be coprime", file=sys.stderr)
        raise SystemExit(2)
    cache_dir = os.environ.get(CACHE_ENV)
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
    return Params(args.p_plus, args.p_minus)


def _cyclo_doc(x: Cyclo, precision: int):
    return x.to_json(precision=precision)


def _label(alpha, r, s):
    return f"{'+' if alpha > 0 else '-'}{r},{s}"


def cmd_info(args):
    P = _context(args)
    doc = {
        "p_plus": P.p_plus,
        "p_minus": P.p_minus,
        "field_order": P.N,
        "field_degree": P.ctx.phi,
        "algebra_dimension": P.dim,
        "irreducible_count": 2 * P.pp,
        "center_dimension": ((3 * P.p_plus - 1) * (3 * P.p_minus - 1)) // 2,
        "kac_sets": {
            "interior": sorted(P.set_I1()),
            "blocks": sorted(P.set_I()),
        },
    }
    _emit(args, doc, rows=[["quantity", "value"]] + [
        [k, str(v)] for k, v in doc.items() if not isinstance(v, dict)])
    return 0


def cmd_fusion(args):
    P = _context(args)
    labels = gr_basis_labels(P)
    table = []
    for la in labels:
        for lb in labels:
            prod = gr_multiply(gr_class(P, *la), gr_class(P, *lb))
            table.append({
                "left": _label(*la),
                "right": _label(*lb),
                "product": {_label(*k): v for k, v in sorted(prod.mult.items())},
            })
    doc = {"p_plus": P.p_plus, "p_minus": P.p_minus, "products": table}
    rows = [["left", "right", "product"]]
    for entry in table:
        rows.append([entry["left"], entry["right"],
                     " + ".join(f"{v}*X[{k}]" for k, v in entry["product"].items())])
    _emit(args, doc, rows)
    return 0


def cmd_center(args):
    P = _context(args)
    cb = cached_canonical_basis(P)
    entries = []
    for (family, key), el in cb.ordered():
        entries.append({
            "family": family,
            "label": repr(key),
            "terms": len(el.coeffs),
            "element": el.to_records() if args.full else None,
        })
    doc = {"dimension": len(entries), "basis": entries}
    rows = [["family", "label", "terms"]] + [
        [e["family"], e["label"], str(e["terms"])] for e in entries]
    _emit(args, doc, rows)
    return 0


def _block_labels(P, name):
    if name == "minimal" or name == "triplet":
        return P.set_I1()
    if name == "slash":
        return P.set_I_slash()
    if name == "bslash":
        return P.set_I_bslash()
    return P.set_I()


def _matrix_doc(mat, labels, precision):
    return {
        "basis": [f"{kind}{lab}" for kind, lab in labels],
        "entries": [[_cyclo_doc(v, precision) for v in row] for row in mat],
        "float": [[list(map(float, v.embed(53))) for v in row] for row in mat],
    }


def cmd_smatrix(args):
    P = _context(args)
    th = Theory(P)
    ma = ModularAction(th)
    doc = _matrix_doc(ma.S, th.characters.labels(), args.precision)
    doc["blocks"] = {name: {"labels": [repr(l) for l in _block_labels(P, name)],
                            "dim": dim}
                     for name, _els, dim in ma.blocks()}
    rows = [["i", "j", "re", "im"]]
    for i, row in enumerate(ma.S):
        for j, v in enumerate(row):
            re, im = v.embed(53)
            rows.append([str(i), str(j), repr(re), repr(im)])
    _emit(args, doc, rows)
    return 0


def cmd_tmatrix(args):
    P = _context(args)
    th = Theory(P)
    ma = ModularAction(th)
    doc = _matrix_doc(ma.T, th.characters.labels(), args.precision)
    doc["t_phase"] = _cyclo_doc(ma.data.t_phase, args.precision)
    doc["central_charge"] = [ma.data.central_charge.numerator,
                             ma.data.central_charge.denominator]
    rows = [["i", "j", "re", "im"]]
    for i, row in enumerate(ma.T):
        for j, v in enumerate(row):
            re, im = v.embed(53)
            rows.append([str(i), str(j), repr(re), repr(im)])
    _emit(args, doc, rows)
    return 0


def cmd_ribbon(args):
    P = _context(args)
    th = Theory(P)
    rib = th.ribbon
    zeta = P.ctx.root_of_unity
    table = []
    for lab in irreducible_labels(P):
        alpha, r, s = lab
        if alpha > 0:
            key = (r, s)
        elif (r, s) == (P.p_plus, P.p_minus):
            key = (0, P.p_minus)
        elif r == P.p_plus:
            key = (P.p_plus, P.p_minus - s)
        elif s == P.p_minus:
            key = (P.p_plus - r, P.p_minus)
        else:
            key = (P.p_plus - r, s)
        ev = zeta(conformal_weight_exponent(P, *key))
        table.append({"module": _label(*lab),
                      "eigenvalue": _cyclo_doc(ev, args.precision)})
    data = th.integral
    doc = {
        "eigenvalues": table,
        "ribbon_terms": len(rib.v.coeffs),
        "unipotent_factor_plus_terms": len(rib.v_factor_plus.coeffs),
        "unipotent_factor_minus_terms": len(rib.v_factor_minus.coeffs),
        "element": rib.v.to_records() if args.full else None,
        "cointegral": data.cointegral.to_records() if args.full else None,
        "integral": [{"mono": list(m), "value": _cyclo_doc(v, args.precision)}
                     for m, v in sorted(data.integral.values.items())],
    }
    rows = [["module", "re", "im"]]
    for entry in table:
        f = entry["eigenvalue"]["float"]
        rows.append([entry["module"], repr(f[0]), repr(f[1])])
    _emit(args, doc, rows)
    return 0


def cmd_verify(args):
    P = _context(args)
    if P.pp > 8 and not args.deep:
        print(f"error: p_plus*p_minus = {P.pp} > 8 requires --deep",
              file=sys.stderr)
        return 2
    selection = set(args.checks) if args.checks else None
    if selection:
        bad = selection - set(available_suites())
        if bad:
            print(f"error: unknown checks {sorted(bad)}; available: "
                  f"{available_suites()}", file=sys.stderr)
            return 2
    ok, results = run_suites(P.p_plus, P.p_minus, selection=selection)
    print(f"{'ALL CHECKS PASSED' if ok else 'FAILURES PRESENT'} "
          f"({sum(1 for r in results if r[2])}/{len(results)})")
    return 0 if ok else 1


def _emit(args, doc, rows):
    if args.format == "json":
        text = json.dumps(doc, indent=2, sort_keys=True, default=str)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(rows)
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qpm",
        description="Exact computations for the restricted two-parameter "
                    "quantum group at even roots of unity")
    ap.add_argument("--p-plus", type=int, required=True)
    ap.add_argument("--p-minus", type=int, required=True)
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--precision", type=int, default=53,
                    help="float embedding precision in bits (>= 53)")
    ap.add_argument("--output", help="write to a file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("info")
    sub.add_parser("fusion")
    p = sub.add_parser("center")
    p.add_argument("--full", action="store_true",
                   help="include full element coefficients")
    sub.add_parser("smatrix")
    sub.add_parser("tmatrix")
    p = sub.add_parser("ribbon")
    p.add_argument("--full", action="store_true")
    p = sub.add_parser("verify")
    p.add_argument("--checks", nargs="*", metavar="SUITE",
                   help=f"subset of: {' '.join(available_suites())}")
    p.add_argument("--deep", action="store_true",
                   help="allow p_plus*p_minus > 8")
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.precision < 53:
        print("error: precision must be at least 53 bits", file=sys.stderr)
        return 2
    handler = {
        "info": cmd_info,
        "fusion": cmd_fusion,
        "center": cmd_center,
        "smatrix": cmd_smatrix,
        "tmatrix": cmd_tmatrix,
        "ribbon": cmd_ribbon,
        "verify": cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
