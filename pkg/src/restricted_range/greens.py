"""Green's relations on T(A, B) from their closed forms, and eggbox diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from . import endo as E
from .partition import RelationPartition, from_predicate, meet
from .semigroup import SemigroupTable

# -- pair predicates -----------------------------------------------------------


def R_related(t: SemigroupTable, i: int, j: int) -> bool:
    return t.kernel[i] == t.kernel[j]


def L_related(t: SemigroupTable, i: int, j: int) -> bool:
    return i == j or (bool(t.q_mask[i] and t.q_mask[j]) and t.image[i] == t.image[j])


def H_related(t: SemigroupTable, i: int, j: int) -> bool:
    return R_related(t, i, j) and L_related(t, i, j)


def D_related(t: SemigroupTable, i: int, j: int) -> bool:
    if t.kernel[i] == t.kernel[j]:
        return True
    return bool(t.q_mask[i] and t.q_mask[j]) and t.rank[i] == t.rank[j]


def J_related(t: SemigroupTable, i: int, j: int) -> bool:
    if t.kernel[i] == t.kernel[j]:
        return True
    return t.rank[i] == t.rank_B[i] == t.rank_B[j] == t.rank[j]


# -- partitions ------------------------------------------------------------------


def _partition(t, pred, name):
    return from_predicate(len(t), lambda i, j: pred(t, i, j), name)


def rel_R(t: SemigroupTable) -> RelationPartition:
    return _partition(t, R_related, "R")


def rel_L(t: SemigroupTable) -> RelationPartition:
    return _partition(t, L_related, "L")


def rel_H(t: SemigroupTable) -> RelationPartition:
    return meet(rel_R(t), rel_L(t), "H")


def rel_D(t: SemigroupTable) -> RelationPartition:
    return _partition(t, D_related, "D")


def rel_J(t: SemigroupTable) -> RelationPartition:
    return _partition(t, J_related, "J")


GREEN = {"R": rel_R, "L": rel_L, "H": rel_H, "D": rel_D, "J": rel_J}


# -- eggbox ------------------------------------------------------------------------


@dataclass
class DClassBox:
    members: tuple
    rows: list  # R-classes inside the D-class
    cols: list  # L-classes inside the D-class
    cells: list  # cells[r][c] = H-class (possibly empty tuple)
    idempotents: list  # (r, c, element)

    @property
    def regular(self) -> bool:
        return bool(self.idempotents)

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.cols)


@dataclass
class EggboxDiagram:
    table: SemigroupTable
    dclasses: list

    def to_json(self) -> dict:
        lab = [E.label(a) for a in self.table.elements]
        out = []
        for d in self.dclasses:
            out.append(
                {
                    "members": list(d.members),
                    "regular": d.regular,
                    "shape": list(d.shape),
                    "cells": [[[lab[x] for x in cell] for cell in row] for row in d.cells],
                    "idempotents": [lab[x] for _, _, x in d.idempotents],
                }
            )
        return {"schema": "restricted-range/1", "dclasses": out}

    def to_dot(self) -> str:
        lab = [E.label(a) for a in self.table.elements]
        idem = set(self.table.idempotents)
        lines = ["digraph eggbox {", "  node [shape=plaintext];"]
        for k, d in enumerate(self.dclasses):
            lines.append(f"  subgraph cluster_d{k} {{")
            lines.append(f'    label="D{k}{"" if d.regular else " (non-regular)"}";')
            rows = []
            for row in d.cells:
                cells = []
                for cell in row:
                    text = "<br/>".join(lab[x] + ("*" if x in idem else "") for x in cell)
                    cells.append(f"<td>{text or '&nbsp;'}</td>")
                rows.append("<tr>" + "".join(cells) + "</tr>")
            table = '<table border="0" cellborder="1" cellspacing="0">' + "".join(rows) + "</table>"
            lines.append(f"    d{k} [label=<{table}>];")
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines) + "\n"


def eggbox(
    t: SemigroupTable,
    R: RelationPartition | None = None,
    L: RelationPartition | None = None,
    D: RelationPartition | None = None,
) -> EggboxDiagram:
    R = R or rel_R(t)
    L = L or rel_L(t)
    D = D or rel_D(t)
    rlab, llab = R.labels(), L.labels()
    boxes = []
    for dblock in D.blocks:
        rows = sorted({rlab[x] for x in dblock})
        cols = sorted({llab[x] for x in dblock})
        cells = [[tuple(x for x in dblock if rlab[x] == r and llab[x] == c) for c in cols] for r in rows]
        idems = [
            (ri, ci, x)
            for ri, row in enumerate(cells)
            for ci, cell in enumerate(row)
            for x in cell
            if t.idem_mask[x]
        ]
        boxes.append(
            DClassBox(
                members=dblock,
                rows=[R.blocks[r] for r in rows],
                cols=[L.blocks[c] for c in cols],
                cells=cells,
                idempotents=idems,
            )
        )
    return EggboxDiagram(t, boxes)
