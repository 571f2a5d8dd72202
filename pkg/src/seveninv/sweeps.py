"""Deterministic parameter-space enumeration and seeded random pair sampling.

Enumeration is lexicographic over (a1, a2, a3, b1, b2, b3) with every entry
congruent to 1 mod 4 and |entry| <= bound, filtered by the validity
conditions.  Pairs with n = 0 carry no invariants and are skipped by the
row stream.  The order is the resume cursor: a `start_after` pair restarts
the stream strictly after that point.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterator, Optional

from .invariants import (
    ParamPair,
    Triple,
    eells_kuiper,
    h4_order,
    invariant_report,
    is_valid_pair,
    validate_pair,
)
from .families import milnor_membership


def entry_values(bound: int) -> list[int]:
    """All admissible entries t = 1 mod 4 with |t| <= bound, ascending."""
    return [t for t in range(-bound, bound + 1) if t % 4 == 1]


def valid_triples(bound: int) -> list[tuple[int, int, int]]:
    vals = entry_values(bound)
    out = []
    for t1 in vals:
        for t2 in vals:
            for t3 in vals:
                if math.gcd(abs(t1), abs(t2), abs(t3)) != 1:
                    continue
                if math.gcd(abs(t1), abs(t2 - t3)) != 1:
                    continue
                if math.gcd(abs(t1), abs(t2 + t3)) != 1:
                    continue
                out.append((t1, t2, t3))
    return out


def iter_valid_pairs(
    bound: int, start_after: Optional[tuple[int, ...]] = None
) -> Iterator[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Valid (a, b) tuples in lexicographic order over the six entries."""
    triples = valid_triples(bound)
    for a in triples:
        for b in triples:
            if start_after is not None:
                if a + b <= tuple(start_after):
                    continue
            yield a, b


def search_rows(
    bound: int,
    homotopy_sphere: bool = False,
    milnor: Optional[bool] = None,
    target_mu: Optional[Fraction] = None,
    start_after: Optional[tuple[int, ...]] = None,
) -> Iterator[dict]:
    """Stream one row per valid pair with finite H^4, applying the filters.

    milnor=True keeps Milnor spheres, False keeps non-Milnor exotic spheres
    (both imply the homotopy-sphere filter)."""
    for a, b in iter_valid_pairs(bound, start_after):
        row = row_for_pair(a, b, homotopy_sphere, milnor, target_mu)
        if row is not None:
            yield row


def row_for_pair(
    a: tuple[int, int, int],
    b: tuple[int, int, int],
    homotopy_sphere: bool = False,
    milnor: Optional[bool] = None,
    target_mu: Optional[Fraction] = None,
) -> Optional[dict]:
    pair = validate_pair(a, b)
    n = h4_order(pair)
    if n == 0:
        return None
    if (homotopy_sphere or milnor is not None) and abs(n) != 1:
        return None
    if milnor is not None:
        kind = milnor_membership(pair)
        if milnor and kind != "milnor":
            return None
        if not milnor and kind != "non_milnor":
            return None
    rep = invariant_report(pair)
    if target_mu is not None and rep.mu != target_mu % 1:
        return None
    return {
        "a": a,
        "b": b,
        "n": rep.n,
        "m": rep.m,
        "s": rep.s,
        "mu": rep.mu,
        "lk": rep.lk,
        "p1": rep.p1,
        "defect_minus": rep.defect_minus,
        "defect_plus": rep.defect_plus,
    }


# -- seeded random sampling ------------------------------------------------------


def random_valid_triple(
    rng: random.Random,
    q_min: int = 1,
    q_max: int = 25,
    entry_bound: int = 49,
) -> tuple[int, int, int]:
    """A random triple with q_min <= |t1| <= q_max, entries bounded."""
    lead = [
        t for t in range(-q_max, q_max + 1) if t % 4 == 1 and q_min <= abs(t) <= q_max
    ]
    others = [t for t in range(-entry_bound, entry_bound + 1) if t % 4 == 1]
    while True:
        t1 = rng.choice(lead)
        t2 = rng.choice(others)
        t3 = rng.choice(others)
        if (
            math.gcd(abs(t1), abs(t2), abs(t3)) == 1
            and math.gcd(abs(t1), abs(t2 - t3)) == 1
            and math.gcd(abs(t1), abs(t2 + t3)) == 1
        ):
            return (t1, t2, t3)


def random_valid_pair(
    rng: random.Random,
    q_min: int = 1,
    q_max: int = 25,
    entry_bound: int = 49,
    require_nonzero_n: bool = False,
) -> ParamPair:
    while True:
        pair = validate_pair(
            random_valid_triple(rng, q_min, q_max, entry_bound),
            random_valid_triple(rng, q_min, q_max, entry_bound),
        )
        if require_nonzero_n and h4_order(pair) == 0:
            continue
        return pair
