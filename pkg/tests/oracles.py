"""Independent oracles the real implementations are checked against.

Each oracle takes a route the implementation under test never uses:
condensation is checked by literally tensoring diagonal sign matrices and
counting eigenvalues, positivity by brute-force search over the reachable
stages of a truncated system plus the exact end rule of a known tail, and
tail products by deep partial products with elementary remainder bounds.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from afrokhlin import ActionSpec, K0Element, PeriodicTail, RankPair
from afrokhlin.cantor import FiniteGSet


def sign_tensor_counts(pairs) -> tuple[int, int]:
    """Tensor diagonal +-1 matrices and count the eigenvalues directly."""
    vec = [1]
    for pair in pairs:
        factor = [1] * pair.p + [-1] * pair.q
        vec = [a * b for a in vec for b in factor]
    plus = sum(1 for x in vec if x > 0)
    return (max(plus, len(vec) - plus), min(plus, len(vec) - plus))


# Truncated-system tails the cone oracle knows exact end rules for.
TAIL_IDENTITY = "identity"  # append (1, 0) forever: nothing changes
TAIL_SYMMETRIC = "symmetric"  # append (1, 1) forever: v dies at the next stage
TAIL_MIXING = "mixing"  # append (2, 1) forever: gap products vanish

ORACLE_TAILS = {
    TAIL_IDENTITY: RankPair(1, 0),
    TAIL_SYMMETRIC: RankPair(1, 1),
    TAIL_MIXING: RankPair(2, 1),
}


def truncated_spec(name: str, factors, tail_kind: str) -> ActionSpec:
    return ActionSpec(name, tuple(factors), PeriodicTail((ORACLE_TAILS[tail_kind],)))


def cone_oracle(factors, tail_kind: str, el: K0Element) -> bool:
    """Brute-force positivity over all reachable truncated stages, then the
    exact rule of the appended tail."""
    vec = (el.a, el.b)
    if min(vec) >= 0:
        return True
    for n in range(el.stage + 1, len(factors) + 1):
        p, q = factors[n - 1].p, factors[n - 1].q
        vec = (p * vec[0] + q * vec[1], q * vec[0] + p * vec[1])
        if min(vec) >= 0:
            return True
    u = vec[0] + vec[1]
    v = vec[0] - vec[1]
    if tail_kind == TAIL_IDENTITY:
        return False
    if tail_kind == TAIL_SYMMETRIC:
        return u >= 0
    # mixing: gap products shrink to zero, so only the scale-invariant data
    # u > 0, or the zero class, can ever enter the cone
    return u > 0 or (u == 0 and v == 0)


def dyadic_euler_interval(terms: int = 120) -> tuple[Fraction, Fraction]:
    """Certified enclosure of prod_{j>=1} (1 - 2**-j) by partial products.

    The remainder satisfies prod_{j>J}(1 - 2**-j) >= 1 - sum_{j>J} 2**-j
    = 1 - 2**-J, so [partial * (1 - 2**-J), partial] brackets the limit.
    """
    partial = Fraction(1)
    for j in range(1, terms + 1):
        partial *= 1 - Fraction(1, 2**j)
    return partial * (1 - Fraction(1, 2**terms)), partial


def tower_base_exists(gs: FiniteGSet) -> bool:
    """Exhaustive search for a base whose translates partition the set."""
    if gs.size % gs.order:
        return False
    want = gs.size // gs.order
    for base in combinations(range(gs.size), want):
        seen: set[int] = set()
        ok = True
        for g in range(gs.order):
            translate = {gs.action[g][x] for x in base}
            if len(translate) != want or seen & translate:
                ok = False
                break
            seen |= translate
        if ok and len(seen) == gs.size:
            return True
    return False
