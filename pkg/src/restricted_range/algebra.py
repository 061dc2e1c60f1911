"""Finite independence-algebra models and symbolic cardinals.

Two models are provided. ``SetModel`` is a bare set (no operations, no
constants): every subset is a subalgebra and every subset is independent.
``VecModel`` is the space GF(p)^n: subalgebras are subspaces, the zero vector is
the unique constant.

Both expose the same small interface that the rest of the package is written
against: closure, bases, independence, basis extension and the free basis
property (``hom_image``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Any

from . import gfp
from .errors import MalformedInputError, PreconditionError

SUPPORTED_PRIMES = (2, 3, 5)


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    """A finite natural number or the symbolic aleph ``aleph_index``.

    ``Cardinal(3)`` is finite; ``Cardinal.aleph(0)`` is countable infinity.
    """

    value: int = 0
    aleph_index: int | None = None

    @classmethod
    def finite(cls, n: int) -> Cardinal:
        if n < 0:
            raise ValueError("cardinals are non-negative")
        return cls(n, None)

    @classmethod
    def aleph(cls, k: int) -> Cardinal:
        if k < 0:
            raise ValueError("aleph index is non-negative")
        return cls(0, k)

    @property
    def is_finite(self) -> bool:
        return self.aleph_index is None

    def _key(self):
        return (0, self.value) if self.is_finite else (1, self.aleph_index)

    def __lt__(self, other):
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, other):
        if isinstance(other, int):
            other = Cardinal.finite(other)
        if self.is_finite and other.is_finite:
            return Cardinal.finite(self.value + other.value)
        return max(self, other)

    __radd__ = __add__

    def __mul__(self, n):
        # n * codim in rank bounds; n is a positive natural
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0:
            return Cardinal.finite(0)
        if self.is_finite:
            return Cardinal.finite(self.value * n)
        return self

    __rmul__ = __mul__

    def succ(self) -> Cardinal:
        if self.is_finite:
            return Cardinal.finite(self.value + 1)
        return Cardinal.aleph(self.aleph_index + 1)

    def __repr__(self):
        return str(self.value) if self.is_finite else f"aleph_{self.aleph_index}"

    def to_json(self):
        return self.value if self.is_finite else {"aleph": self.aleph_index}


ALEPH_0 = Cardinal.aleph(0)


def cardinal_arith(a: Cardinal, op: str, b: Cardinal | None = None):
    """Dispatch for ``add``, ``min``, ``succ`` and ``cmp`` (returns -1, 0 or 1)."""
    if op == "add":
        return a + b
    if op == "min":
        return min(a, b)
    if op == "succ":
        return a.succ()
    if op == "cmp":
        return (a > b) - (a < b)
    raise ValueError(f"unknown cardinal operation {op!r}")


@dataclass(frozen=True)
class Subalgebra:
    """Canonical form of a subalgebra: sorted elements (sets) or RREF rows (vectors)."""

    canon: tuple

    @property
    def dim(self) -> int:
        return len(self.canon)


class AlgebraInstance:
    """Common surface of the two models. ``range_B`` is the distinguished subalgebra."""

    kind: str
    e: int

    # -- model-specific primitives, overridden below --------------------
    def validate(self, x):  # pragma: no cover - interface
        raise NotImplementedError

    def closure(self, generators) -> Subalgebra:  # pragma: no cover
        raise NotImplementedError

    def members(self, sub: Subalgebra) -> list:  # pragma: no cover
        raise NotImplementedError

    def contains(self, sub: Subalgebra, x) -> bool:  # pragma: no cover
        raise NotImplementedError

    def is_independent(self, xs) -> bool:  # pragma: no cover
        raise NotImplementedError

    def hom_image(self, x, src, dst):  # pragma: no cover
        raise NotImplementedError

    # -- shared ----------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis_A)

    @property
    def dim_B(self) -> int:
        return self.range_B.dim

    @property
    def codim(self) -> int:
        return self.dim - self.dim_B

    def basis(self, sub: Subalgebra) -> list:
        """The canonical basis of ``sub``."""
        return list(sub.canon)

    @cached_property
    def A_elements(self) -> list:
        return self.members(self.closure(self.basis_A))

    @cached_property
    def B_elements(self) -> list:
        return self.members(self.range_B)

    @cached_property
    def A_index(self) -> dict:
        return {x: i for i, x in enumerate(self.A_elements)}

    def element_index(self, x) -> int:
        return self.A_index[x]

    def in_B(self, x) -> bool:
        return self.contains(self.range_B, x)

    def extend_to_basis(self, independent, ambient: Subalgebra | None = None) -> list:
        """Extend ``independent`` to a basis of ``ambient`` (default: all of A).

        Candidates are tried in element-index order, smallest first, so the
        result is deterministic.
        """
        if ambient is None:
            ambient = self.closure(self.basis_A)
        indep = list(independent)
        for x in indep:
            self.validate(x)
            if not self.contains(ambient, x):
                raise PreconditionError(f"{x!r} is not in the ambient subalgebra")
        if not self.is_independent(indep):
            raise PreconditionError("input set is not independent")
        out = list(indep)
        current = self.closure(out)
        for x in self.members(ambient):
            if current.dim == ambient.dim:
                break
            if not self.contains(current, x):
                out.append(x)
                current = self.closure(out)
        return out

    def to_json(self) -> dict:  # pragma: no cover - interface
        raise NotImplementedError


@dataclass(frozen=True)
class SetModel(AlgebraInstance):
    """The set {0, ..., n-1} with distinguished subset ``B``."""

    n: int
    B: tuple = field(default=())

    kind = "set"
    e = 1

    def __post_init__(self):
        if self.n < 1:
            raise MalformedInputError("universe must be non-empty")
        B = tuple(sorted(set(self.B)))
        if not B:
            raise MalformedInputError("range B must be non-empty")
        if any(not isinstance(b, int) or b < 0 or b >= self.n for b in B):
            raise MalformedInputError(f"range {self.B} is not a subset of 0..{self.n - 1}")
        object.__setattr__(self, "B", B)

    @cached_property
    def range_B(self) -> Subalgebra:
        return Subalgebra(self.B)

    @cached_property
    def basis_A(self) -> list:
        return list(range(self.n))

    def validate(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.n:
            raise MalformedInputError(f"{x!r} is not an element of a {self.n}-element set")
        return x

    def closure(self, generators) -> Subalgebra:
        gens = [self.validate(x) for x in generators]
        return Subalgebra(tuple(sorted(set(gens))))

    def members(self, sub):
        return list(sub.canon)

    def contains(self, sub, x):
        return x in sub.canon

    def is_independent(self, xs):
        xs = list(xs)
        return len(set(xs)) == len(xs)

    def constants(self) -> list:
        return []

    def hom_image(self, x, src, dst):
        """Image of ``x`` under the map <src> -> A with src[i] -> dst[i]."""
        try:
            return dst[list(src).index(x)]
        except ValueError:
            raise PreconditionError(f"{x!r} is outside the subalgebra generated by {src}") from None

    def to_json(self):
        return {"model": "set", "universe_size": self.n, "range": list(self.B)}

    def __repr__(self):
        return f"SetModel(n={self.n}, B={set(self.B) if self.B else '{}'})"


@dataclass(frozen=True)
class VecModel(AlgebraInstance):
    """GF(p)^n with distinguished subspace spanned by ``B_basis``."""

    p: int
    n: int
    B_basis: tuple = field(default=())

    kind = "vector_space"
    e = 0

    def __post_init__(self):
        if self.p not in SUPPORTED_PRIMES:
            raise MalformedInputError(f"prime must be one of {SUPPORTED_PRIMES}, got {self.p}")
        if self.n < 1:
            raise MalformedInputError("dimension must be positive")
        rows = [tuple(r) for r in self.B_basis]
        for r in rows:
            self.validate(r)
        object.__setattr__(self, "B_basis", gfp.rref(rows, self.p))

    @cached_property
    def range_B(self) -> Subalgebra:
        return Subalgebra(self.B_basis)

    @cached_property
    def basis_A(self) -> list:
        return [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]

    def validate(self, x):
        if (
            not isinstance(x, tuple)
            or len(x) != self.n
            or any(not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.p for v in x)
        ):
            raise MalformedInputError(f"{x!r} is not a vector of length {self.n} over GF({self.p})")
        return x

    def closure(self, generators) -> Subalgebra:
        gens = [self.validate(tuple(x)) for x in generators]
        return Subalgebra(gfp.rref(gens, self.p))

    def members(self, sub):
        return gfp.span_elements(list(sub.canon), self.n, self.p)

    def contains(self, sub, x):
        return gfp.in_span(x, sub.canon, self.p)

    def is_independent(self, xs):
        xs = list(xs)
        return gfp.rank(xs, self.p) == len(xs) if xs else True

    @property
    def zero(self):
        return tuple([0] * self.n)

    def constants(self) -> list:
        return [self.zero]

    def hom_image(self, x, src, dst):
        c = gfp.coords(x, list(src), self.p)
        if c is None:
            raise PreconditionError(f"{x!r} is outside the span of {src}")
        if not dst:
            return self.zero
        return gfp.vecmat(c, list(dst), self.p)

    def to_json(self):
        return {
            "model": "vector_space",
            "prime": self.p,
            "dim": self.n,
            "range_basis": [list(r) for r in self.B_basis],
        }

    def __repr__(self):
        return f"VecModel(p={self.p}, n={self.n}, B={[list(r) for r in self.B_basis]})"


def closure(instance: AlgebraInstance, generators) -> Subalgebra:
    return instance.closure(generators)


def extend_to_basis(instance: AlgebraInstance, independent, ambient=None) -> list:
    return instance.extend_to_basis(independent, ambient)


def instance_from_json(data: Any) -> AlgebraInstance:
    if not isinstance(data, dict) or "model" not in data:
        raise MalformedInputError("instance must be an object with a 'model' key")
    try:
        if data["model"] == "set":
            return SetModel(int(data["universe_size"]), tuple(data["range"]))
        if data["model"] == "vector_space":
            basis = tuple(tuple(v) for v in data["range_basis"])
            return VecModel(int(data["prime"]), int(data["dim"]), basis)
    except (KeyError, TypeError) as exc:
        raise MalformedInputError(f"bad instance: {exc}") from exc
    raise MalformedInputError(f"unknown model {data['model']!r}")
