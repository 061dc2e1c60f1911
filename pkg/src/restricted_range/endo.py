"""Endomorphisms with image in B, and the per-map invariants.

Maps act on the right: ``compose(a, b)`` is "a then b", so that
``apply(compose(a, b), x) == apply(b, apply(a, x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gfp
from .algebra import AlgebraInstance, Cardinal, SetModel, Subalgebra, VecModel
from .errors import MalformedInputError


@dataclass(frozen=True)
class Endo:
    """A single element of T(A, B).

    For a SetModel ``data`` is the image tuple ``(0a, 1a, ..., (n-1)a)``. For a
    VecModel it is the matrix whose row ``i`` is the image of the unit vector
    ``e_i``.
    """

    instance: AlgebraInstance
    data: tuple

    def __post_init__(self):
        inst = self.instance
        data = self.data
        if len(data) != inst.n:
            raise MalformedInputError(f"expected {inst.n} images, got {len(data)}")
        if isinstance(inst, SetModel):
            data = tuple(data)
            for v in data:
                inst.validate(v)
                if v not in inst.B:
                    raise MalformedInputError(f"image value {v} lies outside B={list(inst.B)}")
        else:
            data = tuple(tuple(r) for r in data)
            for r in data:
                inst.validate(r)
                if not inst.in_B(r):
                    raise MalformedInputError(f"row {list(r)} lies outside B")
        object.__setattr__(self, "data", data)

    def __repr__(self):
        if isinstance(self.instance, SetModel):
            return f"Endo{self.data}"
        return f"Endo(rows={[list(r) for r in self.data]})"

    def to_json(self) -> dict:
        if isinstance(self.instance, SetModel):
            return {"img": list(self.data)}
        return {"rows": [list(r) for r in self.data]}


@dataclass(frozen=True)
class KernelRepr:
    """Canonical kernel: a partition (sets) or an RREF null-space basis (vectors)."""

    canon: tuple


def endo_from_json(instance: AlgebraInstance, data: dict) -> Endo:
    try:
        if isinstance(instance, SetModel):
            return Endo(instance, tuple(int(v) for v in data["img"]))
        return Endo(instance, tuple(tuple(int(v) for v in r) for r in data["rows"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MalformedInputError):
            raise
        raise MalformedInputError(f"bad endomorphism: {exc}") from exc


def apply(a: Endo, x):
    inst = a.instance
    if isinstance(inst, SetModel):
        return a.data[x]
    return gfp.vecmat(x, a.data, inst.p)


def from_basis_images(instance: AlgebraInstance, basis, images) -> Endo:
    """The unique endomorphism sending ``basis[i]`` to ``images[i]`` (free basis property)."""
    basis = list(basis)
    images = list(images)
    if len(basis) != instance.dim or len(images) != len(basis):
        raise MalformedInputError("need one image per element of a basis of A")
    if isinstance(instance, SetModel):
        if sorted(basis) != list(range(instance.n)):
            raise MalformedInputError("not a basis of the set")
        img = [None] * instance.n
        for x, y in zip(basis, images):
            img[x] = y
        return Endo(instance, tuple(img))
    p = instance.p
    inv = gfp.inverse(tuple(tuple(b) for b in basis), p)
    return Endo(instance, gfp.matmul(inv, tuple(tuple(y) for y in images), p))


def from_function(instance: AlgebraInstance, fn) -> Endo:
    """Build the endomorphism agreeing with the homomorphism ``fn`` on the canonical basis."""
    basis = instance.basis_A
    return from_basis_images(instance, basis, [fn(x) for x in basis])


def _check_same(a: Endo, b: Endo):
    if a.instance != b.instance:
        raise MalformedInputError("endomorphisms belong to different instances")


def compose(a: Endo, b: Endo) -> Endo:
    """``a`` then ``b``."""
    _check_same(a, b)
    inst = a.instance
    if isinstance(inst, SetModel):
        return Endo(inst, tuple(b.data[v] for v in a.data))
    return Endo(inst, gfp.matmul(a.data, b.data, inst.p))


def constant_map(instance: SetModel, b: int) -> Endo:
    return Endo(instance, tuple([b] * instance.n))


def zero_map(instance: VecModel) -> Endo:
    return Endo(instance, tuple([instance.zero] * instance.n))


@lru_cache(maxsize=None)
def image(a: Endo) -> Subalgebra:
    inst = a.instance
    if isinstance(inst, SetModel):
        return inst.closure(a.data)
    return Subalgebra(gfp.rref(a.data, inst.p))


@lru_cache(maxsize=None)
def image_on_B(a: Endo) -> Subalgebra:
    inst = a.instance
    if isinstance(inst, SetModel):
        return inst.closure(a.data[b] for b in inst.B)
    return Subalgebra(gfp.rref(gfp.matmul(inst.B_basis, a.data, inst.p), inst.p))


def _set_partition(points, fn) -> tuple:
    blocks: dict = {}
    for x in points:
        blocks.setdefault(fn(x), []).append(x)
    return tuple(sorted(tuple(b) for b in blocks.values()))


@lru_cache(maxsize=None)
def kernel(a: Endo) -> KernelRepr:
    inst = a.instance
    if isinstance(inst, SetModel):
        return KernelRepr(_set_partition(range(inst.n), lambda x: a.data[x]))
    return KernelRepr(gfp.left_nullspace(a.data, inst.n, inst.p))


@lru_cache(maxsize=None)
def kernel_on_B(a: Endo) -> KernelRepr:
    """ker a restricted to B x B."""
    inst = a.instance
    if isinstance(inst, SetModel):
        return KernelRepr(_set_partition(inst.B, lambda x: a.data[x]))
    p = inst.p
    Bb = inst.B_basis
    if not Bb:
        return KernelRepr(())
    coeffs = gfp.left_nullspace(gfp.matmul(Bb, a.data, p), len(Bb), p)
    return KernelRepr(gfp.rref([gfp.vecmat(c, Bb, p) for c in coeffs], p))


def kernel_contained(a: Endo, b: Endo) -> bool:
    """ker a is a subset of ker b."""
    _check_same(a, b)
    inst = a.instance
    if isinstance(inst, SetModel):
        seen: dict = {}
        for x in range(inst.n):
            if seen.setdefault(a.data[x], b.data[x]) != b.data[x]:
                return False
        return True
    return all(not any(apply(b, v)) for v in kernel(a).canon)


def rank(a: Endo) -> Cardinal:
    return Cardinal.finite(image(a).dim)


def rank_on_B(a: Endo) -> Cardinal:
    return Cardinal.finite(image_on_B(a).dim)


def is_regular_Q(a: Endo) -> bool:
    """A a is contained in B a; for finite rank this means the two coincide."""
    return image(a) == image_on_B(a)


def is_idempotent(a: Endo) -> bool:
    return compose(a, a) == a


def label(a: Endo) -> str:
    """Compact text form used in reports: ``(0,0,1)`` or ``[[1,0],[0,0]]``."""
    if isinstance(a.instance, SetModel):
        return "(" + ",".join(map(str, a.data)) + ")"
    return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in a.data) + "]"
