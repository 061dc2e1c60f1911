"""Explicit maps built the way the existence proofs build them.

Arbitrary choices ("extend to a basis", "pick some element") are resolved by
the deterministic order of ``extend_to_basis`` and of the canonical bases, so
every output is reproducible. Each function raises PreconditionError outside
its domain; the postconditions are checked by the callers and the tests.
"""

from __future__ import annotations

from . import endo as E
from .algebra import SetModel
from .errors import PreconditionError
from .semigroup import SemigroupTable


def _endo(t: SemigroupTable, a) -> E.Endo:
    return a if isinstance(a, E.Endo) else t.elements[int(a)]


def _preimage_basis(a: E.Endo, domain) -> list:
    """Members of ``domain`` whose images under ``a`` form a basis of the image of <domain>."""
    inst = a.instance
    picked, images = [], []
    for x in domain:
        y = E.apply(a, x)
        if inst.is_independent(images + [y]):
            picked.append(x)
            images.append(y)
    return picked


def _B_basis(inst) -> list:
    return inst.basis(inst.range_B)


def _filler(inst, fallback):
    # a constant when there is one, otherwise a designated element
    return inst.zero if not isinstance(inst, SetModel) else fallback


def regularize(t: SemigroupTable, a) -> E.Endo:
    """A map in Q with the same image as ``a``, for ``a`` outside Q."""
    a = _endo(t, a)
    if E.is_regular_Q(a):
        raise PreconditionError("map is already in Q")
    inst = a.instance
    P = _preimage_basis(a, _B_basis(inst))
    img = E.image(a)
    extra = inst.extend_to_basis([E.apply(a, p) for p in P], img)[len(P):]
    C = inst.extend_to_basis(P, inst.range_B)[len(P):]
    if len(C) < len(extra):  # pragma: no cover - rank a <= dim B
        raise PreconditionError("B too small to carry the image")
    Z = inst.extend_to_basis(P + C)[len(P) + len(C):]
    basis = P + C + Z
    images = [E.apply(a, p) for p in P]
    images += [extra[k] if k < len(extra) else E.apply(a, c) for k, c in enumerate(C)]
    images += [E.apply(a, z) for z in Z]
    return E.from_basis_images(inst, basis, images)


def deregularize(t: SemigroupTable, b) -> E.Endo:
    """A map outside Q with the same image as ``b`` in Q of rank > e."""
    b = _endo(t, b)
    inst = b.instance
    if not E.is_regular_Q(b):
        raise PreconditionError("map is not in Q")
    if E.rank(b).value <= inst.e:
        raise PreconditionError("rank must exceed e")
    if inst.codim < 1:
        raise PreconditionError("B = A leaves no room outside Q")
    P = _preimage_basis(b, _B_basis(inst))
    C = inst.extend_to_basis(P, inst.range_B)[len(P):]
    Z = inst.extend_to_basis(P + C)[len(P) + len(C):]
    d = _filler(inst, E.apply(b, P[1]) if len(P) > 1 else None)
    first = E.apply(b, P[0])
    images = [d] + [E.apply(b, p) for p in P[1:]] + [d] * len(C) + [first] * len(Z)
    return E.from_basis_images(inst, P + C + Z, images)


def divide_right(t: SemigroupTable, a, b) -> E.Endo:
    """mu with b mu = a, given ker b contained in ker a."""
    a, b = _endo(t, a), _endo(t, b)
    if not E.kernel_contained(b, a):
        raise PreconditionError("ker b is not contained in ker a")
    inst = a.instance
    pre = _preimage_basis(b, inst.basis_A)
    imgs = [E.apply(b, x) for x in pre]
    extra = inst.extend_to_basis(imgs)[len(imgs):]
    return E.from_basis_images(
        inst, imgs + extra, [E.apply(a, x) for x in pre] + [E.apply(b, x) for x in extra]
    )


def divide_left(t: SemigroupTable, a, b) -> E.Endo:
    """lambda with lambda b = a, given b in Q and im a inside im b."""
    a, b = _endo(t, a), _endo(t, b)
    inst = a.instance
    if not E.is_regular_Q(b):
        raise PreconditionError("b must lie in Q")
    if not all(inst.contains(E.image(b), y) for y in E.image(a).canon):
        raise PreconditionError("im a is not contained in im b")
    F = _preimage_basis(b, _B_basis(inst))
    Fb = [E.apply(b, f) for f in F]
    return E.from_function(inst, lambda x: inst.hom_image(E.apply(a, x), Fb, F))


def factorize_through(t: SemigroupTable, a, b):
    """(lambda, mu) with lambda b mu = a; mu is None for the adjoined identity.

    Needs rank a <= dim(B b). mu is built to lie in Q.
    """
    a, b = _endo(t, a), _endo(t, b)
    inst = a.instance
    r = E.rank(a).value
    if r > E.rank_on_B(b).value:
        raise PreconditionError("rank a exceeds dim(B b)")
    if r == 0:
        return a, None
    X = _preimage_basis(a, inst.basis_A)
    Xa = [E.apply(a, x) for x in X]
    Bpre = _preimage_basis(b, _B_basis(inst))
    Bb = [E.apply(b, y) for y in Bpre]
    lam = E.from_function(inst, lambda x: inst.hom_image(E.apply(a, x), Xa, Bpre[:r]))
    rest = inst.extend_to_basis(Bb)[len(Bb):]
    mu_images = [Xa[i] if i < r else Xa[0] for i in range(len(Bb))] + [Xa[0]] * len(rest)
    mu = E.from_basis_images(inst, Bb + rest, mu_images)
    return lam, mu


def iso_transfer(t: SemigroupTable, a, b):
    """(gamma, mu): gamma has ker a and im b, mu has ker b and im a."""
    a, b = _endo(t, a), _endo(t, b)
    if E.rank(a) != E.rank(b):
        raise PreconditionError("ranks differ")
    inst = a.instance
    ia, ib = list(E.image(a).canon), list(E.image(b).canon)
    gamma = E.from_function(inst, lambda x: inst.hom_image(E.apply(a, x), ia, ib))
    mu = E.from_function(inst, lambda x: inst.hom_image(E.apply(b, x), ib, ia))
    return gamma, mu


def rank_drop_multiplier(t: SemigroupTable, a, s: int) -> E.Endo:
    """lambda with lambda a outside Q and dim(B lambda a) = s, for a in Q."""
    a = _endo(t, a)
    inst = a.instance
    if not E.is_regular_Q(a):
        raise PreconditionError("a must lie in Q")
    if not inst.e <= s < E.rank(a).value:
        raise PreconditionError(f"need e <= s < rank a, got s={s}")
    if inst.codim < 1:
        raise PreconditionError("codim B must be positive")
    pre = _preimage_basis(a, _B_basis(inst))
    keep, lift = pre[:s], pre[s]
    W = inst.extend_to_basis(keep, inst.range_B)[len(keep):]
    Z = inst.extend_to_basis(keep + W)[len(keep) + len(W):]
    c = _filler(inst, keep[0] if keep else None)
    images = list(keep) + [c] * len(W) + [lift] + [c] * (len(Z) - 1)
    return E.from_basis_images(inst, keep + W + Z, images)


def composite_witness_search(
    t: SemigroupTable, a: int, b: int, order: str = "LR", all_witnesses: bool = False, Lstar=None, Rstar=None
):
    """Search all of S for gamma with a L* gamma R* b (order "LR") or a R* gamma L* b ("RL").

    Relations come from the brute-force oracle. Returns the first witness
    index, or None; with ``all_witnesses`` the full sorted list.
    """
    from .oracle import composite_witnesses, oracle_Lstar, oracle_Rstar

    Lstar = Lstar or oracle_Lstar(t)
    Rstar = Rstar or oracle_Rstar(t)
    first, second = (Lstar, Rstar) if order == "LR" else (Rstar, Lstar)
    found = composite_witnesses(t, first, second, a, b)
    if all_witnesses:
        return found
    return found[0] if found else None
