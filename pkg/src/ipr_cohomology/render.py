"""Text, JSON and CSV renderings of the computed reports.

JSON documents carry ``"schema": 1``; weights are tagged with their basis
(``"sigma"`` for simple roots, ``"omega"`` for fundamental weights) and
empty table cells are omitted rather than written as null.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Dict, Iterable, List, Sequence

from .kostant import CohomologyTable, KostantSummand, mu, nu, nu_literal, vhs_set
from .layout import DoubleComplexLayout, ResolutionShape
from .schubert_cc import CCBasisReport
from .weyl import ParabolicSpec, WeylElement

SCHEMA_VERSION = 1


def cell_label(l: int, m: int) -> str:
    return f"H^{l}_{m}"


def render_grid(table: CohomologyTable) -> str:
    """Staircase layout: row ``r`` holds the cells with ``m - l = r`` at column ``m``."""
    cells = table.cells
    n_cols = max(m for _, m in cells) + 1
    n_rows = max(m - l for l, m in cells) + 1
    grid = [["0"] * n_cols for _ in range(n_rows)]
    for l, m in cells:
        grid[m - l][m] = cell_label(l, m)
    return format_grid(grid)


def format_grid(grid: Sequence[Sequence[str]]) -> str:
    widths = [max(len(row[c]) for row in grid) for c in range(len(grid[0]))]
    lines = ["  ".join(tok.ljust(w) for tok, w in zip(row, widths)).rstrip() for row in grid]
    return "\n".join(lines) + "\n"


def _header(p: ParabolicSpec) -> Dict:
    return {
        "schema": SCHEMA_VERSION,
        "type": str(p.root_system.cartan_type),
        "parabolic": list(p.indices),
    }


def _weight(coords: Sequence[int], basis: str) -> Dict:
    return {"basis": basis, "coords": list(coords)}


def element_json(w: WeylElement, p: ParabolicSpec) -> Dict:
    from .root_system import root_to_weight_coords

    return {
        "word": list(w.reduced_word),
        "length": w.length,
        "rho_w": _weight(w.rho_w, "sigma"),
        "rho_w_omega": _weight(root_to_weight_coords(p.root_system, w.rho_w), "omega"),
        "E": p.grade(w.rho_w),
    }


def summand_json(s: KostantSummand, p: ParabolicSpec) -> Dict:
    out = element_json(s.w, p)
    out["dim"] = s.dim
    return out


def invariants_json(table: CohomologyTable) -> Dict:
    p = table.parabolic
    out = _header(p)
    out.update(
        nu=nu(table),
        nu_literal=nu_literal(table),
        mu=mu(table),
        dim_flag=table.dim_flag,
        weyl_p=len(table.elements),
        vhs_count=len(vhs_set(table)),
        graded_dims={str(k): v for k, v in table.dim_g_ell.items()},
    )
    return out


def table_json(table: CohomologyTable) -> Dict:
    p = table.parabolic
    out = _header(p)
    out["cells"] = {
        f"{l},{m}": {"l": l, "m": m, "dim": sum(s.dim for s in ss), "summands": [summand_json(s, p) for s in ss]}
        for (l, m), ss in table.cells.items()
    }
    return out


def vhs_json(table: CohomologyTable) -> Dict:
    p = table.parabolic
    out = _header(p)
    out["vhs"] = [element_json(w, p) for w in vhs_set(table)]
    return out


def cc_json(report: CCBasisReport) -> Dict:
    p = report.table.parabolic
    out = _header(p)
    out["betti"] = {str(k): v for k, v in report.betti.items()}
    out["cc_dims"] = {str(k): v for k, v in report.cc_dims().items()}
    out["cc_basis"] = [
        {"word": list(w.reduced_word), "degree": deg, "complex_degree": w.length} for w, deg in report.cc_basis
    ]
    out["ker_pI"] = [{"word": list(w.reduced_word), "complex_degree": w.length} for w in report.ker_pI_basis]
    out["ker_pI_count"] = len(report.ker_pI_basis)
    return out


def layout_json(table: CohomologyTable, lay: DoubleComplexLayout) -> Dict:
    out = _header(table.parabolic)
    out.update(mu=lay.mu, ranks=[list(r) for r in lay.ranks], iperp={str(k): v for k, v in sorted(lay.iperp.items())})
    return out


def resolution_json(table: CohomologyTable, res: ResolutionShape) -> Dict:
    out = _header(table.parabolic)
    out.update(
        p=res.p,
        predicted=True,
        terms=[{"degree": t.degree, "label": t.label, "dim": t.dim, "eigenvalues": list(t.eigenvalues)} for t in res.terms],
        orders=list(res.orders),
    )
    return out


def refusal_json(table: CohomologyTable, message: str, cells) -> Dict:
    out = _header(table.parabolic)
    out.update(refused=True, reason=message, cells=[list(c) for c in cells])
    return out


def oracle_json(table: CohomologyTable, rows: List[Dict]) -> Dict:
    out = _header(table.parabolic)
    out["cells"] = {f"{r['l']},{r['m']}": {k: r[k] for k in ("l", "m", "kostant", "oracle", "status")} for r in rows}
    out["pass"] = all(r["status"] == "PASS" for r in rows)
    return out


def emit_json(doc) -> str:
    """Canonical compact JSON; field order is the construction order."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


# ---------------------------------------------------------------- text


def table_text(table: CohomologyTable) -> str:
    p = table.parabolic
    lines = [f"{p.label()}: nontrivial H^l_m (row = m - l, column = m)", ""]
    body = render_grid(table)
    lines.append(body.rstrip("\n"))
    lines += ["", "cell       dim  summands (word: dim)"]
    for (l, m), ss in table.cells.items():
        parts = ", ".join(f"{s.w.word_str}: {s.dim}" for s in ss)
        lines.append(f"{cell_label(l, m):<10} {sum(s.dim for s in ss):>4}  {parts}")
    return "\n".join(lines) + "\n"


def invariants_text(table: CohomologyTable) -> str:
    d = invariants_json(table)
    lines = [
        f"{table.parabolic.label()}",
        f"nu         {d['nu']}",
        f"mu         {d['mu']}",
        f"dim D      {d['dim_flag']}",
        f"|W^p|      {d['weyl_p']}",
        f"|W_vhs|    {d['vhs_count']}",
    ]
    if d["nu_literal"] != d["nu"]:
        lines.append(f"nu (literal max, non-prefix) {d['nu_literal']}")
    return "\n".join(lines) + "\n"


def vhs_text(table: CohomologyTable) -> str:
    p = table.parabolic
    lines = [f"{p.label()}: Schubert VHS ({len(vhs_set(table))})", "length  word        rho_w (sigma)"]
    for w in vhs_set(table):
        lines.append(f"{w.length:>6}  {w.word_str:<10}  {list(w.rho_w)}")
    return "\n".join(lines) + "\n"


def cc_text(report: CCBasisReport) -> str:
    p = report.table.parabolic
    cc = report.cc_dims()
    lines = [
        f"{p.label()}: characteristic cohomology of the compact dual",
        "degree  betti  cc",
    ]
    for k, b in report.betti.items():
        lines.append(f"{2 * k:>6}  {b:>5}  {cc[k]:>2}")
    lines.append(f"ker p_I: {len(report.ker_pI_basis)} classes")
    return "\n".join(lines) + "\n"


def layout_text(table: CohomologyTable, lay: DoubleComplexLayout) -> str:
    lines = [f"{table.parabolic.label()}: double complex ranks dim H^p_p * dim H^q_q (mu = {lay.mu})"]
    width = max(len(str(x)) for r in lay.ranks for x in r)
    lines.append("p\\q " + " ".join(str(q).rjust(width) for q in range(lay.mu + 1)))
    for p, row in enumerate(lay.ranks):
        lines.append(f"{p:>3} " + " ".join(str(x).rjust(width) for x in row))
    lines.append("i^perp_k: " + ", ".join(f"{k}:{v}" for k, v in sorted(lay.iperp.items())))
    return "\n".join(lines) + "\n"


def resolution_text(table: CohomologyTable, res: ResolutionShape) -> str:
    lines = [f"{table.parabolic.label()}: predicted resolution, p = {res.p}"]
    chain = "0 -> O"
    for t, nxt in zip(res.terms, list(res.orders) + [None]):
        chain += f" -> {t.label}[{t.dim}]"
        if nxt is not None:
            chain += f" -(order {nxt})"
    lines.append(chain + " -> 0")
    lines.append("orders: " + ",".join(map(str, res.orders)))
    lines.append("note: orders are predicted from eigenvalue gaps; emitted only when consecutive degrees have separated eigenvalues")
    return "\n".join(lines) + "\n"


def oracle_text(table: CohomologyTable, rows: List[Dict]) -> str:
    lines = [f"{table.parabolic.label()}: Chevalley-Eilenberg oracle vs Kostant", "cell        kostant  oracle  status"]
    for r in rows:
        lines.append(f"{cell_label(r['l'], r['m']):<10}  {r['kostant']:>7}  {r['oracle']:>6}  {r['status']}")
    ok = all(r["status"] == "PASS" for r in rows)
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n"


SWEEP_FIELDS = ["type", "rank", "parabolic", "dim_flag", "weyl_p", "nu", "mu", "vhs_count", "cc_dims"]


def sweep_row(table: CohomologyTable, cc: CCBasisReport) -> Dict:
    p = table.parabolic
    return {
        "type": p.root_system.cartan_type.series,
        "rank": p.root_system.rank,
        "parabolic": ",".join(map(str, p.indices)),
        "dim_flag": table.dim_flag,
        "weyl_p": len(table.elements),
        "nu": nu(table),
        "mu": mu(table),
        "vhs_count": len(vhs_set(table)),
        "cc_dims": ",".join(str(v) for _, v in sorted(cc.cc_dims().items())),
    }


def sweep_csv(rows: Iterable[Dict], fields: Sequence[str] = tuple(SWEEP_FIELDS)) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r)
    return buf.getvalue()
