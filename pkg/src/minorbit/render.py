"""Text and JSON renderings of cohomology tables, matrices and suite reports.

Text output writes torsion as a primary decomposition, e.g. "Z^2 + (Z/2)^2 + Z/3";
JSON keeps invariant factors so that `parse_json(render_json(c)) == c`.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from typing import TYPE_CHECKING, Any

from minorbit.gysin import GradedCohomology
from minorbit.zlinalg import FGAbelianGroup, primary_decomposition

if TYPE_CHECKING:
    from collections.abc import Iterable

    from minorbit.orbitposet import DiffMatrix
    from minorbit.suite import SuiteReport

_TYPE_NAME = re.compile(r"^([A-G])(\d+)$")


def group_text(group: FGAbelianGroup) -> str:
    """Primary-decomposition form of a group; "0" for the zero group."""
    if group.is_zero:
        return "0"
    parts = []
    if group.free_rank:
        parts.append("Z" if group.free_rank == 1 else f"Z^{group.free_rank}")
    for q, count in Counter(primary_decomposition(group)).items():
        parts.append(f"Z/{q}" if count == 1 else f"(Z/{q})^{count}")
    return " + ".join(parts)


def render_text(cohomology: GradedCohomology) -> str:
    """Two-column table of the nonzero groups; every omitted degree carries 0."""
    header = (
        f"H^*(O_min, Z) for {cohomology.name} "
        f"(h^vee = {cohomology.h_dual}, top degree {cohomology.top_degree})"
    )
    width = len(str(cohomology.top_degree))
    lines = [header]
    lines.extend(f"  {n:>{width}} | {group_text(g)}" for n, g in cohomology)
    return "\n".join(lines) + "\n"


def cohomology_dict(cohomology: GradedCohomology) -> dict[str, Any]:
    return {
        "type": cohomology.name,
        "rank": cohomology.rank,
        "h_dual": cohomology.h_dual,
        "top_degree": cohomology.top_degree,
        "groups": [
            {"degree": n, "free_rank": g.free_rank, "torsion": list(g.torsion)}
            for n, g in cohomology
        ],
    }


def render_json(cohomology: GradedCohomology) -> str:
    return json.dumps(cohomology_dict(cohomology), indent=2) + "\n"


def parse_json(text: str) -> GradedCohomology:
    """Inverse of `render_json`.

    Raises:
        ValueError: If the text is not a cohomology document.
    """
    try:
        data = json.loads(text)
        match = _TYPE_NAME.match(data["type"])
        if match is None:
            raise ValueError(f"bad type name {data['type']!r}")
        rank = int(data["rank"])
        if int(match.group(2)) != rank:
            raise ValueError(f"type {data['type']} does not have rank {rank}")
        groups = {
            int(entry["degree"]): FGAbelianGroup(
                int(entry["free_rank"]), tuple(int(d) for d in entry["torsion"])
            )
            for entry in data["groups"]
        }
        top = int(data.get("top_degree", 4 * int(data["h_dual"]) - 5))
        return GradedCohomology.from_mapping(
            match.group(1), rank, int(data["h_dual"]), top, groups
        )
    except (KeyError, TypeError, json.JSONDecodeError) as e:
        raise ValueError(f"not a cohomology document: {e}") from e


def render_matrices_text(name: str, matrices: Iterable[DiffMatrix]) -> str:
    lines = [f"Chern-class matrices D_i for {name}"]
    for dm in matrices:
        rows, cols = dm.matrix.shape
        lines.append(f"  D_{dm.level_index} ({rows}x{cols}) = {dm.matrix}")
    return "\n".join(lines) + "\n"


def render_matrices_json(name: str, matrices: Iterable[DiffMatrix]) -> str:
    doc = {
        "type": name,
        "matrices": [
            {
                "index": dm.level_index,
                "rows": [root.label for root in dm.row_roots],
                "cols": [root.label for root in dm.col_roots],
                "entries": dm.matrix.to_lists(),
            }
            for dm in matrices
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_report_text(report: SuiteReport) -> str:
    lines = []
    for r in report.results:
        status = "skip" if r.skipped else ("ok  " if r.passed else "FAIL")
        detail = f"  {r.detail}" if r.detail and not r.passed else ""
        lines.append(f"{status} {r.system:<4} {r.check_name}{detail}")
    summary = report.summary()
    lines.append(
        f"{summary['executed']} checks run, {summary['failed']} failed, "
        f"{summary['skipped']} skipped"
    )
    return "\n".join(lines) + "\n"


def render_report_json(report: SuiteReport) -> str:
    return json.dumps(report.summary(), indent=2) + "\n"
