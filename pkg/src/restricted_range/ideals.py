"""Ideals of T(A, B): the rank ideals T_k, the Q_r, and the r(S)/K(S) forms."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import endo as E
from .algebra import Cardinal, SetModel
from .errors import PreconditionError, VerificationError
from .oracle import is_ideal, oracle_ideals
from .semigroup import SemigroupTable


def _finite(k) -> int:
    if isinstance(k, Cardinal):
        if not k.is_finite:
            raise PreconditionError("finite tables only have finite rank bounds")
        return k.value
    return int(k)


def T_k(t: SemigroupTable, k) -> tuple:
    """Maps of rank < k."""
    return tuple(int(i) for i in np.flatnonzero(t.rank < _finite(k)))


def Q_r(t: SemigroupTable, r) -> tuple:
    return tuple(int(i) for i in np.flatnonzero(t.q_mask & (t.rank < _finite(r))))


def r_of_S(t: SemigroupTable, S) -> Cardinal:
    """Least cardinal above every dim(B a), a in S."""
    S = list(S)
    if not S:
        raise PreconditionError("S must be non-empty")
    return Cardinal.finite(int(max(t.rank_B[a] for a in S)) + 1)


def K_of_S(t: SemigroupTable, S) -> tuple:
    """Maps whose kernel contains the kernel of some member of S."""
    S = list(S)
    els = t.elements
    return tuple(
        b for b in range(len(t)) if any(E.kernel_contained(els[a], els[b]) for a in S)
    )


def K_of_S_products(t: SemigroupTable, S) -> tuple:
    """S S^1, the right ideal generated by S."""
    S = list(S)
    if not S:
        return ()
    return tuple(int(x) for x in np.unique(t.product1[S]))


def _union(*parts) -> tuple:
    return tuple(sorted(set().union(*map(set, parts))))


@dataclass(frozen=True)
class IdealDescriptor:
    kind: str  # "T" | "Q" | "form"
    extension: tuple
    bound: Cardinal | None = None
    S: tuple = ()
    successor: bool = False
    S_choice: str = ""  # "I\\Q" or "I" for theorem forms

    def describe(self) -> str:
        if self.kind == "T":
            return f"T_{self.bound}"
        if self.kind == "Q":
            return f"Q_{self.bound}"
        r = f"r(S)+" if self.successor else "r(S)"
        return f"T_{{{r}}} u K(S), S = {self.S_choice}, r(S) = {self.bound}"

    def to_json(self):
        return {
            "kind": self.kind,
            "bound": self.bound.to_json() if self.bound is not None else None,
            "successor": self.successor,
            "S": list(self.S),
            "S_choice": self.S_choice,
            "extension": list(self.extension),
            "description": self.describe(),
        }


def form_ideal(t: SemigroupTable, S, successor: bool = False) -> IdealDescriptor:
    """T_{r(S)} u K(S), or T_{r(S)+} u K(S); checked to be an ideal."""
    S = tuple(sorted(S))
    r = r_of_S(t, S)
    k = r.succ() if successor else r
    ext = _union(T_k(t, k), K_of_S(t, S))
    if not is_ideal(t, ext):
        raise VerificationError(f"T_{k} u K(S) is not an ideal", S)
    return IdealDescriptor("form", ext, r, S, successor)


@dataclass
class FormCheck:
    ideal: tuple
    matches: list = field(default_factory=list)  # IdealDescriptor
    candidates: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.matches)

    def to_json(self):
        return {
            "ideal": list(self.ideal),
            "passed": self.passed,
            "matches": [d.to_json() for d in self.matches],
            "candidates": {k: list(v) for k, v in self.candidates.items()},
        }


def theorem_form_check(t: SemigroupTable, ideal) -> FormCheck:
    """Match an ideal I against T_{r(S)} u K(S) and T_{r(S)+} u K(S).

    S = I \\ Q is tried first; S = I is the fallback for ideals inside Q.
    Every matching form is reported.
    """
    ideal = tuple(sorted(ideal))
    if not is_ideal(t, ideal):
        raise PreconditionError("input is not an ideal")
    report = FormCheck(ideal)
    outside_q = tuple(x for x in ideal if not t.q_mask[x])
    choices = [("I\\Q", outside_q)] if outside_q else []
    choices.append(("I", ideal))
    for choice, S in choices:
        for succ in (False, True):
            d = form_ideal(t, S, succ)
            d = IdealDescriptor("form", d.extension, d.bound, d.S, succ, choice)
            report.candidates[d.describe()] = d.extension
            if d.extension == ideal:
                report.matches.append(d)
        if report.matches:
            break
    return report


def Q_ideal_chain(t: SemigroupTable, max_principal: int = 64) -> list:
    """The ideals of Q, each identified as some Q_r; they must form a chain."""
    ideals = oracle_ideals(t, max_principal, within=t.q_mask)
    top = int(t.rank.max()) + 2
    out = []
    for ideal in ideals:
        rs = [r for r in range(t.instance.e + 1, top) if Q_r(t, r) == ideal]
        if not rs:
            raise VerificationError("ideal of Q is not of the form Q_r", ideal)
        out.append(IdealDescriptor("Q", ideal, Cardinal.finite(rs[0])))
    for a, b in zip(out, out[1:]):
        if not set(a.extension) < set(b.extension):
            raise VerificationError("ideals of Q are not a chain", (a.extension, b.extension))
    return out


# -- incomparable ideals ---------------------------------------------------------------


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __bool__(self):
        return False


@dataclass
class IncomparablePair:
    alpha: E.Endo
    beta: E.Endo
    I_alpha: IdealDescriptor
    I_beta: IdealDescriptor

    def to_json(self):
        return {
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "I_alpha": self.I_alpha.to_json(),
            "I_beta": self.I_beta.to_json(),
        }


def incomparable_pair(t: SemigroupTable):
    """Two ideals neither of which contains the other, or NotApplicable.

    Needs codim B >= 2 and two independent elements of B (sets), or one basis
    element of B plus the constant 0 (vector spaces).
    """
    inst = t.instance
    if inst.codim < 2:
        return NotApplicable("codim B < 2")
    B_basis = inst.basis(inst.range_B)
    outside = inst.extend_to_basis(B_basis)[len(B_basis):]
    x1, x2 = outside[0], outside[1]
    if isinstance(inst, SetModel):
        if inst.dim_B < 2:
            return NotApplicable("B needs two independent elements")
        b1, b2 = B_basis[0], B_basis[1]
    else:
        if inst.dim_B < 1:
            return NotApplicable("B is the constant subalgebra")
        b1, b2 = B_basis[0], inst.zero
    basis = list(B_basis) + list(outside)

    def spike(x):
        return E.from_basis_images(inst, basis, [b1 if y == x else b2 for y in basis])

    alpha, beta = spike(x1), spike(x2)
    ia, ib = t.index_of(alpha), t.index_of(beta)
    I_a = form_ideal(t, [ia])
    I_b = form_ideal(t, [ib])
    if not (ia in I_a.extension and ia not in I_b.extension):
        raise VerificationError("alpha does not separate the ideals", (ia, ib))
    if not (ib in I_b.extension and ib not in I_a.extension):
        raise VerificationError("beta does not separate the ideals", (ia, ib))
    return IncomparablePair(alpha, beta, I_a, I_b)


# -- lattice output -----------------------------------------------------------------------


def hasse_edges(ideals) -> list:
    """Covering pairs (i, j): ideals[i] is a maximal proper subset of ideals[j]."""
    sets = [set(x) for x in ideals]
    edges = []
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if a < b and not any(a < c < b for c in sets):
                edges.append((i, j))
    return edges


def is_chain(ideals) -> bool:
    sets = [set(x) for x in ideals]
    return all(a <= b or b <= a for a in sets for b in sets)


def lattice_dot(ideals, labels=None) -> str:
    lines = ["digraph ideals {", "  rankdir=BT;"]
    for i, ideal in enumerate(ideals):
        text = labels[i] if labels else f"|I|={len(ideal)}"
        lines.append(f'  i{i} [label="{text}"];')
    for i, j in hasse_edges(ideals):
        lines.append(f"  i{i} -> i{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
