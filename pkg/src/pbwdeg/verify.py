"""Fundamental-weight degree verification and its serialised report.

One row per (type, rank, node).  The computed filtration degree is the
authority; the closed-form table and the lowering-monomial recipe are
predictions compared against it.  Rows whose module exceeds the dimension
cap keep both predictions and are marked UNRESOLVED (or
MISMATCH-UNRESOLVED when the predictions disagree with each other).
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional

from . import __version__
from .cache import get_module
from .hwmod import DEFAULT_CAP
from .kostant import lowest_weight_bound
from .pbwfilt import lowest_weight_degree, pbw_filtration
from .rootsys import FAMILIES, LieType, all_types, build_root_system
from .theoremdata import (
    apply_recipe,
    comark,
    comark_check,
    expected_degree,
    figure1_recipe,
    figure1_variants,
    recipe_weight_check,
)

REPORT_SCHEMA_VERSION = 1

VERIFIED = "VERIFIED"
MISMATCH = "MISMATCH"
UNRESOLVED = "UNRESOLVED"
MISMATCH_UNRESOLVED = "MISMATCH-UNRESOLVED"


@dataclass(frozen=True)
class VerificationRow:
    type: str
    rank: int
    node: int
    dim: int
    computed_degree: Optional[int]
    table_degree: int
    recipe_degree: int
    recipe_status: str
    recipe: str
    weight_check: bool
    applied_nonzero: Optional[bool]
    applied_lowest: Optional[bool]
    printed_recipe_degree: int
    printed_weight_check: bool
    comark: int
    comark_check: Optional[bool]
    kostant_mindeg: Optional[int]
    kostant_strict: Optional[bool]
    verdict: str

    def as_dict(self) -> dict:
        return asdict(self)


FIELDS = list(VerificationRow.__dataclass_fields__)


def verify_node(lie_type: LieType, node: int, max_dim: int = DEFAULT_CAP, cache_dir=None) -> VerificationRow:
    rs = build_root_system(lie_type)
    omega = rs.fundamental_weight(node)
    dim = rs.weyl_dim(omega)
    table = expected_degree(lie_type, node)
    printed = figure1_variants(lie_type, node)[0]
    recipe = figure1_recipe(lie_type, node)
    weight_ok = recipe_weight_check(rs, recipe, node)
    bound = lowest_weight_bound(rs, omega)

    computed = applied_nonzero = applied_lowest = comark_ok = None
    if dim <= max_dim:
        module = get_module(rs, omega, cap=max_dim, cache_dir=cache_dir)
        poly, gc = pbw_filtration(module)
        computed = lowest_weight_degree(module, gc)
        application = apply_recipe(module, recipe)
        applied_nonzero = application.nonzero
        applied_lowest = application.lowest
        comark_ok = comark_check(module, node)
        good = (computed == table == recipe.degree and weight_ok
                and applied_nonzero and applied_lowest and comark_ok)
        verdict = VERIFIED if good else MISMATCH
    else:
        verdict = UNRESOLVED if (table == recipe.degree and weight_ok) else MISMATCH_UNRESOLVED

    return VerificationRow(
        type=str(lie_type),
        rank=lie_type.rank,
        node=node,
        dim=dim,
        computed_degree=computed,
        table_degree=table,
        recipe_degree=recipe.degree,
        recipe_status=recipe.status,
        recipe=recipe.describe(),
        weight_check=weight_ok,
        applied_nonzero=applied_nonzero,
        applied_lowest=applied_lowest,
        printed_recipe_degree=printed.degree,
        printed_weight_check=recipe_weight_check(rs, printed, node),
        comark=comark(rs, node),
        comark_check=comark_ok,
        kostant_mindeg=bound,
        kostant_strict=None if bound is None or computed is None else computed > bound,
        verdict=verdict,
    )


def _verify_task(args):
    return verify_node(*args)


def verification_tasks(families: str = FAMILIES, max_rank: int = 8):
    return [(lt, i) for lt in all_types(max_rank, families) for i in range(1, lt.rank + 1)]


@dataclass
class VerificationReport:
    rows: List[VerificationRow]
    config: dict

    @property
    def flags(self) -> List[dict]:
        """Every disagreement between the predictions and the computation."""
        out = []
        for r in self.rows:
            if not r.printed_weight_check:
                out.append({"type": r.type, "node": r.node, "kind": "printed-recipe-fails-weight-check",
                            "detail": f"printed degree {r.printed_recipe_degree}, "
                                      f"{r.recipe_status} degree {r.recipe_degree}"})
            if r.table_degree != r.recipe_degree:
                out.append({"type": r.type, "node": r.node, "kind": "table-recipe-degree-mismatch",
                            "detail": f"table {r.table_degree}, recipe {r.recipe_degree}, verdict {r.verdict}"})
            if r.verdict == MISMATCH:
                out.append({"type": r.type, "node": r.node, "kind": "computed-mismatch",
                            "detail": f"computed {r.computed_degree}, table {r.table_degree}, "
                                      f"recipe {r.recipe_degree}"})
        return out

    @property
    def summary(self) -> dict:
        count = lambda v: sum(1 for r in self.rows if r.verdict == v)  # noqa: E731
        return {
            "verified": count(VERIFIED),
            "mismatched": count(MISMATCH),
            "unresolved": count(MISMATCH_UNRESOLVED),
            "skipped_over_cap": count(UNRESOLVED),
            "strict_kostant_bound": sum(1 for r in self.rows if r.kostant_strict),
        }

    @property
    def exit_code(self) -> int:
        return 1 if any(r.verdict == MISMATCH for r in self.rows) else 0

    def as_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "tool_version": __version__,
            "config": self.config,
            "summary": self.summary,
            "rows": [r.as_dict() for r in self.rows],
            "flags": self.flags,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in self.rows:
            writer.writerow({k: "" if v is None else v for k, v in r.as_dict().items()})
        return buf.getvalue()

    def to_markdown(self) -> str:
        def cell(v):
            return "-" if v is None else str(v)

        lines = [f"# PBW degree verification (pbwdeg {__version__})", ""]
        cfg = ", ".join(f"{k}={v}" for k, v in self.config.items())
        lines += [f"Configuration: {cfg}", ""]
        current = None
        for r in self.rows:
            if r.type != current:
                current = r.type
                lines += ["", f"## {r.type}", "",
                          "| node | dim | computed | table | recipe | status | Kostant bound | verdict |",
                          "|---:|---:|---:|---:|---:|---|---:|---|"]
            lines.append(f"| {r.node} | {r.dim} | {cell(r.computed_degree)} | {r.table_degree} | "
                         f"{r.recipe_degree} | {r.recipe_status} | {cell(r.kostant_mindeg)} | {r.verdict} |")
        lines += ["", "## Summary", ""]
        lines += [f"- {k}: {v}" for k, v in self.summary.items()]
        lines += ["", "## Flags", ""]
        flags = self.flags
        lines += [f"- {f['type']} node {f['node']}: {f['kind']} ({f['detail']})" for f in flags] or ["- none"]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "md": self.to_markdown}[fmt]()


def run_verification(families: str = FAMILIES, max_rank: int = 8, max_dim: int = DEFAULT_CAP,
                     threads: int = 1, cache_dir=None) -> VerificationReport:
    families = "".join(sorted(set(families.upper())))
    tasks = [(lt, i, max_dim, cache_dir) for lt, i in verification_tasks(families, max_rank)]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_verify_task, tasks))
    else:
        rows = [_verify_task(t) for t in tasks]
    config = {"families": families, "max_rank": max_rank, "max_dim": max_dim}
    return VerificationReport(rows, config)
