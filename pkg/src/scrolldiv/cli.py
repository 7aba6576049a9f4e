"""Command-line interface.

    scrolldiv gens|gb|resolve|betti|reg|hilbert|rees --sigma 3,2,1 -n 4 [options]

Exit codes: 0 all checks passed, 1 some check failed, 2 bad configuration,
3 resource cap exceeded, 4 incomplete certification.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass, field

from .algebra import DEFAULT_PRIME, mono_divides
from .betti import expected_pd, expected_reg, invariants_from_betti, koszul_betti
from .errors import ConfigurationError, IncompleteError, ScrollDivError
from .groebner import (DEFAULT_MAX_PAIRS, buchberger, initial_ideal_counts, kappa_generators,
                       spair_degree_check, verify_gb)
from .rees import check_factorization, factor_over_S, rees_generating_set
from .resolution import (complex_hilbert, euler_check, expected_length, factor_resolution,
                         filtration, hilbert_function, total_resolution)
from .scroll import A_monomial_basis, ScrollData
from .symbolic import L_elements, check_minimality

COMMANDS = ("gens", "gb", "resolve", "betti", "reg", "hilbert", "rees")


@dataclass
class RunConfig:
    sigma: tuple
    n: int
    prime: int = DEFAULT_PRIME
    degree_bound: int | None = None
    format: str = "table"
    filtration: str = "fine"
    max_pairs: int = DEFAULT_MAX_PAIRS

    def data(self) -> ScrollData:
        return ScrollData(self.sigma, self.n, self.prime)


@dataclass
class Report:
    title: str
    headers: list
    rows: list
    result: dict
    checks: dict = field(default_factory=dict)
    exit_code: int | None = None  # overrides the check-derived code


def parse_sigma(text: str) -> tuple:
    try:
        sigma = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ConfigurationError(f"--sigma expects comma-separated positive integers, got {text!r}")
    if not sigma or any(s < 1 for s in sigma):
        raise ConfigurationError(f"--sigma expects comma-separated positive integers, got {text!r}")
    return sigma


# -- commands ----------------------------------------------------------------

def cmd_gens(cfg: RunConfig) -> Report:
    data = cfg.data()
    lay = data.layout
    elts = L_elements(data)
    rows = []
    for e in elts:
        m = e.monomial
        rows.append([lay.format(m), str(e.source), e.u, lay.Deg(m), sum(m), str(lay.fdeg(m))])
    minimal, witness = check_minimality([e.monomial for e in elts], data)
    result = {
        "generators": [{"monomial": r[0], "tuple": list(e.source.a), "u": r[2], "Deg": r[3],
                        "total_degree": r[4], "fdeg": r[5]} for r, e in zip(rows, elts)],
        "count": len(elts),
        "minimal": minimal,
    }
    if witness:
        result["minimality_counterexample"] = [lay.format(m) for m in witness]
    checks = {"minimal": minimal, "deg_at_least_n": all(r[3] >= data.n for r in rows)}
    return Report("generators of K^(n)", ["monomial", "tuple", "u", "Deg", "total", "fdeg"],
                  rows, result, checks)


def cmd_gb(cfg: RunConfig) -> Report:
    data = cfg.data()
    lay = data.layout
    gens = kappa_generators(data)
    cert = verify_gb(gens)
    gb = buchberger(gens, cfg.max_pairs)
    leads = [g.lead_monomial for g in gens]
    minimal_leads = [m for m in leads if not any(o != m and mono_divides(o, m) for o in leads)]
    through = 5 if cfg.degree_bound is None else cfg.degree_bound
    counts = initial_ideal_counts(gb, through, lay.nvars)
    below_n = [sum(1 for D in A_monomial_basis(data, d) if D.alpha < data.n)
               for d in range(through + 1)]
    try:
        spair_degree_check(data)
        spairs_ok = True
    except ScrollDivError:
        spairs_ok = False
    rows = [[g.format(lay), lay.format(g.lead_monomial)] for g in gens]
    result = {
        "basis": [r[0] for r in rows],
        "leads": [r[1] for r in rows],
        "basis_size": len(gens),
        "certified": cert.ok,
        "reduced_basis_size": len(gb),
        "standard_monomial_counts": counts,
    }
    if not cert.ok:
        result["failing_pair"] = list(cert.pair)
        result["failing_remainder"] = cert.remainder.format(lay)
    checks = {
        "certified": cert.ok,
        "completion_leads_agree": sorted(gb.leads) == sorted(set(minimal_leads)),
        "spair_remainders_monomial_deg_ge_n": spairs_ok,
        "standard_counts_match": counts == below_n,
    }
    return Report("Groebner basis G u L of the preimage of K^(n)", ["polynomial", "lead"],
                  rows, result, checks)


def cmd_resolve(cfg: RunConfig) -> Report:
    data = cfg.data()
    bound = 8 if cfg.degree_bound is None else cfg.degree_bound
    rows = []
    factors = []
    for d in filtration(data, cfg.filtration):
        cx = factor_resolution(data, d)
        j = "" if d.j_index is None else d.j_index
        rows.append([str(d.eligible), d.kind, j, str(d.shift), " ".join(map(str, cx.ranks))])
        factors.append({"tuple": list(d.eligible.a), "kind": d.kind, "j": d.j_index,
                        "shift": str(d.shift), "ranks": list(cx.ranks), "length": cx.length})
    total = total_resolution(data, cfg.filtration)
    ok, bad = euler_check(data, cfg.filtration, bound)
    rows.append(["total", "", "", "", " ".join(map(str, total.ranks))])
    result = {
        "filtration": cfg.filtration,
        "factors": factors,
        "ranks": list(total.ranks),
        "length": total.length,
        "euler_bound": bound,
        "euler_ok": ok,
        "regularity_upper_bound": total.regularity_bound(),
    }
    if bad is not None:
        result["euler_mismatch"] = str(bad)
    checks = {"length": total.length == expected_length(data), "euler": ok}
    if cfg.filtration == "fine":
        checks["rank0_equals_L"] = total.ranks[0] == len(L_elements(data))
    return Report(f"{cfg.filtration} filtration resolution",
                  ["tuple", "kind", "j", "shift", "ranks"], rows, result, checks)


def cmd_betti(cfg: RunConfig) -> Report:
    data = cfg.data()
    table = koszul_betti(data, cfg.degree_bound)
    diagram = table.diagram()
    pd = max(table.pd, 0)
    rows = [[r] + [row.get(i, "") for i in range(pd + 1)] for r, row in diagram.items()]
    result = {
        "degree_bound": table.degree_bound,
        "complete": table.complete,
        "entries": [[i, d, v] for (i, d), v in table.entries.items()],
        "total_betti": table.total_betti(),
    }
    census = Counter(sum(e.monomial) for e in L_elements(data))
    checks = {"complete": table.complete,
              "beta0_matches_L": table.row(0) == dict(sorted(census.items()))}
    code = None
    if table.complete:
        inv = invariants_from_betti(table, data, check=False)
        result.update(pd=inv.pd, depth=inv.depth, reg=inv.reg)
        checks.update(pd=inv.pd == expected_pd(data), depth=inv.depth == 2,
                      reg=inv.reg == expected_reg(data))
    else:
        code = IncompleteError.exit_code
    return Report("Betti diagram (rows d - i, columns i)", ["d-i"] + list(range(pd + 1)),
                  rows, result, checks, code)


def cmd_reg(cfg: RunConfig) -> Report:
    data = cfg.data()
    table = koszul_betti(data, cfg.degree_bound)
    formula = expected_reg(data)
    upper = total_resolution(data, cfg.filtration).regularity_bound()
    result = {"formula": formula, "resolution_upper_bound": upper,
              "degree_bound": table.degree_bound, "complete": table.complete}
    checks = {"complete": table.complete, "upper_bound_dominates": upper >= formula}
    code = None
    if table.complete:
        result["oracle"] = table.reg
        result["match"] = table.reg == formula
        checks["match"] = table.reg == formula
    else:
        result["oracle"] = None
        code = IncompleteError.exit_code
    rows = [["formula", formula], ["oracle", result["oracle"]], ["resolution bound", upper]]
    return Report("regularity of K^(n)", ["source", "reg"], rows, result, checks, code)


def cmd_hilbert(cfg: RunConfig) -> Report:
    data = cfg.data()
    bound = 8 if cfg.degree_bound is None else cfg.degree_bound
    hA = hilbert_function(data, "A", bound)
    hK = hilbert_function(data, "K", bound)
    per_factor = [hilbert_function(data, d, bound) for d in filtration(data, cfg.filtration)]
    factor_sum = [sum(col) for col in zip(*per_factor)]
    via_res = hilbert_function(data, total_resolution(data, cfg.filtration), bound)
    rows = [[d, hA[d], hK[d], factor_sum[d], via_res[d]] for d in range(bound + 1)]
    fine_ok = complex_hilbert(total_resolution(data, cfg.filtration), data, bound) == \
        hilbert_function(data, "K", bound, fine=True)
    result = {"bound": bound, "filtration": cfg.filtration, "A": hA, "K": hK,
              "factor_sum": factor_sum, "resolution": via_res,
              "per_factor": per_factor}
    checks = {"factors_sum_to_K": factor_sum == hK, "resolution_matches_K": via_res == hK,
              "fine_euler": fine_ok}
    return Report("Hilbert functions by total degree",
                  ["degree", "dim A", "dim K^(n)", "sum of factors", "from resolution"],
                  rows, result, checks)


def cmd_rees(cfg: RunConfig) -> Report:
    data = cfg.data()
    lay = data.layout
    gens = rees_generating_set(data)
    rows, facts, ok = [], [], True
    for e in L_elements(data):
        fs = factor_over_S(e, data)
        good = check_factorization(e.monomial, fs, data)
        ok &= good
        text = " * ".join(f"({f})" for f in fs)
        rows.append([lay.format(e.monomial), text, sum(f.power for f in fs)])
        facts.append({"element": rows[-1][0], "factors": [str(f) for f in fs],
                      "u_degree": rows[-1][2], "ok": good})
    result = {"generators": [str(g) for g in gens], "count": len(gens),
              "factorizations": facts}
    expected = sum(s * (s + 1) // 2 for s in data.sigma)
    checks = {"factorizations": ok, "generator_count": len(gens) == expected,
              "generators_in_symbolic_powers": all(
                  data.sigma[g.block - 1] + 1 - g.slot >= g.power for g in gens)}
    return Report(f"symbolic Rees algebra: {len(gens)} generators; factorizations of L u^n",
                  ["element", "factorization", "u-degree"], rows, result, checks)


HANDLERS = {"gens": cmd_gens, "gb": cmd_gb, "resolve": cmd_resolve, "betti": cmd_betti,
            "reg": cmd_reg, "hilbert": cmd_hilbert, "rees": cmd_rees}


# -- output ------------------------------------------------------------------

def render(report: Report, cfg: RunConfig) -> str:
    if cfg.format == "json":
        doc = {"sigma": list(cfg.sigma), "n": cfg.n, "prime": cfg.prime,
               "result": report.result, "checks": report.checks}
        return json.dumps(doc, indent=2) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(report.headers)
        w.writerows(report.rows)
        w.writerow([])
        w.writerow(["check", "passed"])
        w.writerows([[k, str(v).lower()] for k, v in report.checks.items()])
        return buf.getvalue()
    cells = [list(map(str, report.headers))] + [[str(c) for c in r] for r in report.rows]
    ncol = max(len(r) for r in cells)
    cells = [r + [""] * (ncol - len(r)) for r in cells]
    widths = [max(len(r[i]) for r in cells) for i in range(ncol)]
    lines = [f"sigma={','.join(map(str, cfg.sigma))} n={cfg.n} p={cfg.prime}: {report.title}"]
    for k, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    for k, v in report.result.items():
        if isinstance(v, (int, bool, str)) or v is None:
            lines.append(f"{k}: {v}")
    lines.append("checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}"
                                         for k, v in report.checks.items()))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", required=True,
                        help="block widths, comma separated and weakly decreasing, e.g. 3,2,1")
    common.add_argument("-n", "--power", type=int, required=True, help="symbolic power n >= 2")
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="field characteristic")
    common.add_argument("--degree-bound", type=int, default=None,
                        help="total-degree bound (oracle, Hilbert/Euler checks, standard monomials)")
    common.add_argument("--filtration", choices=("fine", "coarse"), default="fine")
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS,
                        help="Buchberger pair-reduction budget")
    parser = argparse.ArgumentParser(
        prog="scrolldiv",
        description="Symbolic powers of the height-one ideal K of a rational normal scroll.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def config_from_args(args) -> RunConfig:
    sigma = parse_sigma(args.sigma)
    if args.power < 2:
        raise ConfigurationError(
            f"n = {args.power} is outside the standing hypothesis n >= 2 for K^(n)")
    if args.max_pairs < 1:
        raise ConfigurationError("--max-pairs must be positive")
    if args.degree_bound is not None and args.degree_bound < 0:
        raise ConfigurationError("--degree-bound must be non-negative")
    cfg = RunConfig(sigma, args.power, args.prime, args.degree_bound, args.format,
                    args.filtration, args.max_pairs)
    cfg.data()  # validate before any work
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        report = HANDLERS[args.command](cfg)
    except ScrollDivError as exc:
        print(f"scrolldiv: error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(render(report, cfg))
    if report.exit_code is not None:
        return report.exit_code
    return 0 if all(report.checks.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
