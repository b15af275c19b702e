"""Built-in named actions used as fixtures throughout the test suite and CLI.

All four live on infinite tensor products of 2-power or mixed matrix sizes:

* ``car1``  -- every factor is (1, 1) in M_2; the most regular case.
* ``car2``  -- factor n is (2**(n-1) + 1, 2**(n-1) - 1) in M_(2**n).
* ``car3``  -- factor n is (2**n - 1, 1) in M_(2**n).
* ``notcar`` -- one M_2 factor with trivial symmetry, then (2, 1) in M_3
  forever; the ambient algebra has supernatural number 2 * 3^inf, so it is
  not isomorphic to its tensor product with the 2^inf algebra.

The affine tails are written at tail-relative index j = n - 1 (the first
factor is absorbed into the prefix), which keeps every coefficient integral:
car2 has p(n) = 2**(n-1) + 1 = 2**j + 1 and car3 has p(n) = 2**n - 1 =
2*2**j - 1.
"""

from __future__ import annotations

from .actions import ActionSpec, AffinePowerTail, PeriodicTail, RankPair


def _car1() -> ActionSpec:
    return ActionSpec("car1", (), PeriodicTail((RankPair(1, 1),)))


def _car2() -> ActionSpec:
    return ActionSpec(
        "car2",
        (RankPair(2, 0),),
        AffinePowerTail(B=2, A=2, alpha=1, beta=1, gamma=1, delta=-1),
    )


def _car3() -> ActionSpec:
    return ActionSpec(
        "car3",
        (RankPair(1, 1),),
        AffinePowerTail(B=2, A=2, alpha=2, beta=-1, gamma=0, delta=1),
    )


def _notcar() -> ActionSpec:
    return ActionSpec("notcar", (RankPair(2, 0),), PeriodicTail((RankPair(2, 1),)))


_BUILDERS = {"car1": _car1, "car2": _car2, "car3": _car3, "notcar": _notcar}

FIXTURE_NAMES = tuple(sorted(_BUILDERS))


def fixture(name: str) -> ActionSpec:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")
