"""Data model for product-type order-two symmetries of matrix tensor products.

A single tensor factor is a pair of eigenspace ranks ``(p, q)``: it stands for
conjugation by a diagonal sign unitary with ``p`` entries ``+1`` and ``q``
entries ``-1`` acting on the ``(p + q) x (p + q)`` matrix algebra.  An action
is a finite prefix of such factors together with a tail rule that determines
every factor beyond the prefix in closed form.  Only two tail families are
accepted (periodic, and affine in ``B**n``); they keep every downstream
decision procedure exact, and arbitrary user generators are rejected when a
document is parsed.

Factor indices are 1-based throughout.  Exchanging ``p`` and ``q`` in any
factor does not change the symmetry it describes, so factors are normalized
to ``p >= q`` on ingestion and all downstream code may rely on that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class InvalidActionSpec(ValueError):
    """An action description violates a structural invariant."""


class FactorRangeError(IndexError):
    """A factor index falls outside a finite action."""


class FiniteActionError(ValueError):
    """The requested operation needs infinitely many factors."""


@dataclass(frozen=True)
class RankPair:
    """Eigenspace ranks of one tensor factor; acts on matrices of size p + q."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise InvalidActionSpec(f"negative rank in factor ({self.p}, {self.q})")
        if self.p + self.q == 0:
            raise InvalidActionSpec("factor must act on a matrix algebra of positive size")

    @property
    def size(self) -> int:
        return self.p + self.q

    @property
    def symmetric(self) -> bool:
        return self.p == self.q

    @property
    def gap(self) -> Fraction:
        """Normalized eigenrank gap |p - q| / (p + q), in [0, 1]."""
        return Fraction(abs(self.p - self.q), self.p + self.q)

    def normalized(self) -> "RankPair":
        return RankPair(max(self.p, self.q), min(self.p, self.q))


def normalize(pair: RankPair) -> RankPair:
    """Order the ranks of a factor so that p >= q.  Idempotent."""
    return pair.normalized()


@dataclass(frozen=True)
class PeriodicTail:
    """Tail that cycles through a fixed list of factors forever."""

    pairs: tuple[RankPair, ...]

    def __post_init__(self):
        if not self.pairs:
            raise InvalidActionSpec("periodic tail needs at least one factor")
        object.__setattr__(self, "pairs", tuple(p.normalized() for p in self.pairs))

    @property
    def period(self) -> int:
        return len(self.pairs)

    def pair_at(self, j: int) -> RankPair:
        """Factor at 1-based tail position j."""
        return self.pairs[(j - 1) % len(self.pairs)]


@dataclass(frozen=True)
class AffinePowerTail:
    """Tail with closed form k(j) = A*B**j, p(j) = alpha*B**j + beta,
    q(j) = gamma*B**j + delta at 1-based tail position j (absolute factor
    index = prefix length + j).
    """

    B: int
    A: int
    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        if self.B < 2:
            raise InvalidActionSpec("affine tail needs base B >= 2")
        if self.A < 1:
            raise InvalidActionSpec("affine tail needs size coefficient A >= 1")
        if self.alpha + self.gamma != self.A:
            raise InvalidActionSpec("affine tail coefficients must satisfy alpha + gamma = A")
        if self.beta + self.delta != 0:
            raise InvalidActionSpec("affine tail offsets must satisfy beta + delta = 0")
        if self.alpha < 0 or self.gamma < 0:
            raise InvalidActionSpec("affine tail rank coefficients must be nonnegative")
        p1, q1 = self.raw_pair(1)
        if p1 < 0 or q1 < 0:
            raise InvalidActionSpec("affine tail produces a negative rank at its first factor")

    def raw_pair(self, j: int) -> tuple[int, int]:
        power = self.B**j
        return (self.alpha * power + self.beta, self.gamma * power + self.delta)

    def pair_at(self, j: int) -> RankPair:
        p, q = self.raw_pair(j)
        return RankPair(p, q).normalized()

    def size_at(self, j: int) -> int:
        return self.A * self.B**j


Tail = PeriodicTail | AffinePowerTail


@dataclass(frozen=True)
class ActionSpec:
    """A product-type order-two symmetry: named prefix factors plus a tail rule.

    ``tail is None`` means the action lives on a finite tensor product and has
    only the prefix factors; such specs are rejected by every classification
    routine but still support finite-range queries.
    """

    name: str
    prefix: tuple[RankPair, ...]
    tail: Tail | None

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(p.normalized() for p in self.prefix))
        if self.tail is None and not self.prefix:
            raise InvalidActionSpec("finite action needs at least one factor")

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    def factor(self, n: int) -> RankPair:
        """Normalized factor at 1-based index n."""
        if n < 1:
            raise FactorRangeError(f"factor index must be >= 1, got {n}")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        if self.tail is None:
            raise FactorRangeError(
                f"factor {n} requested but finite action {self.name!r} "
                f"has only {len(self.prefix)} factors"
            )
        return self.tail.pair_at(n - len(self.prefix))

    def matrix_size(self, n: int) -> int:
        return self.factor(n).size

    def total_size(self, n: int) -> int:
        """Product of the matrix sizes of factors 1..n (1 for n = 0)."""
        out = 1
        for i in range(1, n + 1):
            out *= self.matrix_size(i)
        return out


def factor_at(spec: ActionSpec, n: int) -> RankPair:
    return spec.factor(n)


# ----------------------------------------------------------------------------
# Supernatural numbers


def _factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("can only factor positive integers")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class SupernaturalNumber:
    """Formal product of primes with exponents in N ∪ {inf}.

    Complete isomorphism invariant of the infinite tensor products handled
    here.  Multiplication adds exponents, with infinity absorbing.
    """

    exponents: tuple[tuple[int, int | float], ...]

    def __post_init__(self):
        seen = {}
        for prime, exp in self.exponents:
            if prime < 2 or any(prime % d == 0 for d in range(2, int(prime**0.5) + 1)):
                raise ValueError(f"{prime} is not prime")
            if exp != math.inf and (not isinstance(exp, int) or exp < 1):
                raise ValueError(f"exponent of {prime} must be a positive integer or inf")
            if prime in seen:
                raise ValueError(f"duplicate prime {prime}")
            seen[prime] = exp
        object.__setattr__(self, "exponents", tuple(sorted(seen.items())))

    @staticmethod
    def one() -> "SupernaturalNumber":
        return SupernaturalNumber(())

    @staticmethod
    def of_int(n: int) -> "SupernaturalNumber":
        return SupernaturalNumber(tuple(_factorize(n).items()))

    @staticmethod
    def from_dict(d: dict[int, int | float]) -> "SupernaturalNumber":
        return SupernaturalNumber(tuple(d.items()))

    def as_dict(self) -> dict[int, int | float]:
        return dict(self.exponents)

    def exponent(self, prime: int) -> int | float:
        return dict(self.exponents).get(prime, 0)

    def __mul__(self, other: "SupernaturalNumber") -> "SupernaturalNumber":
        acc = dict(self.exponents)
        for prime, exp in other.exponents:
            cur = acc.get(prime, 0)
            acc[prime] = math.inf if math.inf in (cur, exp) else cur + exp
        return SupernaturalNumber(tuple(acc.items()))

    def to_json(self) -> dict[str, int | str]:
        return {str(p): ("inf" if e == math.inf else e) for p, e in self.exponents}

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(
            f"{p}^inf" if e == math.inf else (f"{p}^{e}" if e > 1 else str(p))
            for p, e in self.exponents
        )


def supernatural_of_algebra(spec: ActionSpec) -> SupernaturalNumber:
    """Supernatural number of the infinite tensor product the spec acts on.

    The exponent of a prime is the sum of its multiplicities in the factor
    sizes k(n); the sum is infinite exactly for primes dividing a recurring
    tail size (any periodic entry, or A*B for an affine tail).
    """
    if spec.tail is None:
        raise FiniteActionError("supernatural number is only defined for infinite actions")
    acc: dict[int, int | float] = {}
    for pair in spec.prefix:
        for prime, exp in _factorize(pair.size).items():
            acc[prime] = acc.get(prime, 0) + exp
    if isinstance(spec.tail, PeriodicTail):
        recurring = set()
        for pair in spec.tail.pairs:
            recurring |= set(_factorize(pair.size))
    else:
        recurring = set(_factorize(spec.tail.A)) | set(_factorize(spec.tail.B))
    for prime in recurring:
        acc[prime] = math.inf
    return SupernaturalNumber(tuple((p, e) for p, e in acc.items()))


# ----------------------------------------------------------------------------
# JSON documents


def spec_to_json(spec: ActionSpec) -> dict:
    if spec.tail is None:
        tail: dict = {"kind": "none"}
    elif isinstance(spec.tail, PeriodicTail):
        tail = {"kind": "periodic", "pairs": [[p.p, p.q] for p in spec.tail.pairs]}
    else:
        t = spec.tail
        tail = {
            "kind": "affine_power",
            "B": t.B,
            "A": t.A,
            "alpha": t.alpha,
            "beta": t.beta,
            "gamma": t.gamma,
            "delta": t.delta,
        }
    return {
        "name": spec.name,
        "prefix": [[p.p, p.q] for p in spec.prefix],
        "tail": tail,
    }


def _pair_from_json(obj, where: str) -> RankPair:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj)
    ):
        raise InvalidActionSpec(f"{where}: factor must be a pair of integers, got {obj!r}")
    return RankPair(obj[0], obj[1])


def spec_from_json(obj) -> ActionSpec:
    if not isinstance(obj, dict):
        raise InvalidActionSpec("action document must be a JSON object")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise InvalidActionSpec("action document needs a nonempty string 'name'")
    prefix_obj = obj.get("prefix", [])
    if not isinstance(prefix_obj, list):
        raise InvalidActionSpec("'prefix' must be a list of [p, q] pairs")
    prefix = tuple(_pair_from_json(e, f"prefix[{i}]") for i, e in enumerate(prefix_obj))
    tail_obj = obj.get("tail")
    if not isinstance(tail_obj, dict) or "kind" not in tail_obj:
        raise InvalidActionSpec("'tail' must be an object with a 'kind' field")
    kind = tail_obj["kind"]
    tail: Tail | None
    if kind == "none":
        tail = None
    elif kind == "periodic":
        pairs_obj = tail_obj.get("pairs")
        if not isinstance(pairs_obj, list) or not pairs_obj:
            raise InvalidActionSpec("periodic tail needs a nonempty 'pairs' list")
        tail = PeriodicTail(
            tuple(_pair_from_json(e, f"tail.pairs[{i}]") for i, e in enumerate(pairs_obj))
        )
    elif kind == "affine_power":
        fields = {}
        for key in ("B", "A", "alpha", "beta", "gamma", "delta"):
            val = tail_obj.get(key)
            if not isinstance(val, int) or isinstance(val, bool):
                raise InvalidActionSpec(f"affine tail needs integer field {key!r}")
            fields[key] = val
        tail = AffinePowerTail(**fields)
    else:
        raise InvalidActionSpec(
            f"unsupported tail kind {kind!r}; only 'periodic', 'affine_power' "
            "and 'none' are accepted"
        )
    return ActionSpec(name=name, prefix=prefix, tail=tail)
