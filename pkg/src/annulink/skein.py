"""Kauffman bracket state sums for annular diagrams.

A smoothing assigns +1 or -1 to every crossing: +1 reconnects slots
0-3 and 1-2 (the pair whose corners touch the under-strand's incoming
side), -1 reconnects 0-1 and 2-3.  Every smoothing turns the diagram
into disjoint circles in the annulus; a circle is nullhomotopic exactly
when its total cut parity is even.  Writing ``sD`` for the number of
nullhomotopic circles and ``p`` for the essential ones, the bracket is

    <D> = sum over smoothings  alpha(p) * A^(sum of signs) * delta^sD

with delta = -A^2 - A^-2.  Essential circles are not worth delta each:
in S1 x S2 a pack of p parallel essential circles evaluates to
``alpha(p)``, the number of crossingless matchings of p points on a
line that can cap the pack off on both sides, which is 0 for odd p and
the (p/2)-th Catalan number for even p.  ``alpha_walk_oracle`` computes
the same quantity by a different route (counting nonnegative lattice
walks) and exists so the closed form can be cross-checked.

Normalization: the empty diagram evaluates to 1, a nullhomotopic
unknot to delta, a single essential circle to 0.

`bracket` enumerates the 2^n smoothings independently and is the
reference evaluator.  `bracket_gray` visits them in Gray-code order,
updating the circle decomposition incrementally at the one crossing
that changed; it is the fast path and must always agree with
`bracket`.  Both refuse diagrams with more than MAX_CROSSINGS
crossings rather than start a hopeless enumeration.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from .diagram import AnnularDiagram
from .laurent import LaurentPoly, delta_power

__all__ = [
    "MAX_CROSSINGS",
    "BracketSizeError",
    "alpha",
    "alpha_walk_oracle",
    "resolve",
    "state_circles",
    "bracket",
    "bracket_gray",
    "writhe",
    "jones",
]

MAX_CROSSINGS = 26


class BracketSizeError(ValueError):
    """Raised when a state-sum enumeration would be too large to run."""


def alpha(p: int) -> int:
    """Value of a pack of p parallel essential circles.

    Zero for odd p; for p = 2m the m-th Catalan number, via the ballot
    closed form C(p, m) - C(p, m-1).
    """
    if p < 0:
        raise ValueError("circle count must be nonnegative")
    if p % 2:
        return 0
    m = p // 2
    return math.comb(p, m) - (math.comb(p, m - 1) if m else 0)


def alpha_walk_oracle(p: int) -> int:
    """Same value as `alpha`, computed independently.

    Counts lattice walks of length p with steps +-1 that start and end
    at height 0 and never go below 0, by dynamic programming over the
    height profile.
    """
    if p < 0:
        raise ValueError("circle count must be nonnegative")
    heights = {0: 1}
    for _ in range(p):
        nxt: Dict[int, int] = {}
        for h, ways in heights.items():
            nxt[h + 1] = nxt.get(h + 1, 0) + ways
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, 0) + ways
        heights = nxt
    return heights.get(0, 0)


# -- compiled half-edge tables ------------------------------------------------


def _tables(d: AnnularDiagram) -> Tuple[List[str], List[int], List[int]]:
    """(crossing order, mate, edge parity) with half-edge h = 4*crossing + slot."""
    if "skein_tables" not in d._cache:
        order = list(d.crossings)
        index = {cid: i for i, cid in enumerate(order)}
        mate = [0] * (4 * len(order))
        epar = [0] * (4 * len(order))
        for eid, ends in d.edge_ends().items():
            (c1, s1), (c2, s2) = ends
            h1, h2 = 4 * index[c1] + s1, 4 * index[c2] + s2
            mate[h1], mate[h2] = h2, h1
            epar[h1] = epar[h2] = d.edge_parity[eid]
        d._cache["skein_tables"] = (order, mate, epar)
    return d._cache["skein_tables"]  # type: ignore[return-value]


def _partner_for(sign: int, h: int) -> int:
    base, s = h - (h & 3), h & 3
    return base + (3 - s if sign > 0 else s ^ 1)


def _resolve_vector(d: AnnularDiagram, signs: Sequence[int]) -> Tuple[int, int]:
    """(nullhomotopic circles, essential circles) for one smoothing,
    free loops included."""
    order, mate, epar = _tables(d)
    total = 4 * len(order)
    visited = [False] * total
    trivial = sum(1 for p in d.free_loops if p == 0)
    essential = len(d.free_loops) - trivial
    for h0 in range(total):
        if visited[h0]:
            continue
        par = 0
        cur = h0
        while True:
            m = mate[cur]
            visited[cur] = visited[m] = True
            par ^= epar[cur]
            cur = _partner_for(signs[m >> 2], m)
            if cur == h0:
                break
        if par:
            essential += 1
        else:
            trivial += 1
    return trivial, essential


def _state_signs(
    d: AnnularDiagram, state: Union[Mapping[str, int], Sequence[int]]
) -> List[int]:
    order = list(d.crossings)
    if isinstance(state, Mapping):
        missing = [c for c in order if c not in state]
        if missing:
            raise ValueError("state missing crossings: %s" % ", ".join(missing))
        signs = [state[c] for c in order]
    else:
        signs = list(state)
        if len(signs) != len(order):
            raise ValueError(
                "state has %d signs for %d crossings" % (len(signs), len(order))
            )
    if any(s not in (1, -1) for s in signs):
        raise ValueError("smoothing signs must be +1 or -1")
    return signs


def resolve(
    d: AnnularDiagram, state: Union[Mapping[str, int], Sequence[int]]
) -> Tuple[int, int]:
    """Count circles of one smoothing: (nullhomotopic, essential).

    ``state`` maps crossing ids to +-1, or lists signs in crossing
    order.  Free loops are counted by their own parity.
    """
    return _resolve_vector(d, _state_signs(d, state))


def state_circles(
    d: AnnularDiagram, state: Union[Mapping[str, int], Sequence[int]]
) -> List[Tuple[frozenset, int]]:
    """The circles of one smoothing, each as (corner set, parity).

    A circle is reported as the frozenset of (crossing id, slot) corners
    it runs through, together with its total cut parity (0 trivial, 1
    essential).  Free loops come last with empty corner sets.  The order
    is deterministic: circles appear by their smallest corner in table
    order, then free loops in diagram order.
    """
    signs = _state_signs(d, state)
    order, mate, epar = _tables(d)
    total = 4 * len(order)
    visited = [False] * total
    out: List[Tuple[frozenset, int]] = []
    for h0 in range(total):
        if visited[h0]:
            continue
        par = 0
        cur = h0
        members = []
        while True:
            m = mate[cur]
            visited[cur] = visited[m] = True
            members.append(cur)
            members.append(m)
            par ^= epar[cur]
            cur = _partner_for(signs[m >> 2], m)
            if cur == h0:
                break
        corners = frozenset((order[h >> 2], h & 3) for h in members)
        out.append((corners, par))
    for p in d.free_loops:
        out.append((frozenset(), p & 1))
    return out


# -- state sums ---------------------------------------------------------------


def _assemble(hist: Dict[Tuple[int, int, int], int]) -> LaurentPoly:
    coeffs: Dict[int, int] = {}
    for (ssum, triv, ess), count in hist.items():
        a = alpha(ess)
        if a == 0:
            continue
        for exp, c in delta_power(triv).to_pairs():
            e = exp + ssum
            coeffs[e] = coeffs.get(e, 0) + c * a * count
    return LaurentPoly(coeffs)


def _check_size(d: AnnularDiagram) -> None:
    if d.n > MAX_CROSSINGS:
        raise BracketSizeError(
            "diagram has %d crossings; enumeration is capped at %d"
            % (d.n, MAX_CROSSINGS)
        )


def bracket(d: AnnularDiagram) -> LaurentPoly:
    """Reference bracket: resolve all 2^n smoothings from scratch.

    Each state is traced independently; the only state shared between
    iterations is a visit-stamp array, so this route has none of the
    incremental bookkeeping `bracket_gray` relies on.
    """
    _check_size(d)
    order, mate, epar = _tables(d)
    n = len(order)
    total = 4 * n
    free_triv = sum(1 for p in d.free_loops if p == 0)
    free_ess = len(d.free_loops) - free_triv
    plus = [(h & ~3) | (3 - (h & 3)) for h in range(total)]
    minus = [(h & ~3) | ((h & 3) ^ 1) for h in range(total)]
    visited = [-1] * total
    hist: Dict[Tuple[int, int, int], int] = {}
    for bits in range(1 << n):
        triv = ess = 0
        for h0 in range(total):
            if visited[h0] == bits:
                continue
            par = 0
            cur = h0
            while True:
                m = mate[cur]
                visited[cur] = bits
                visited[m] = bits
                par ^= epar[cur]
                cur = minus[m] if bits >> (m >> 2) & 1 else plus[m]
                if cur == h0:
                    break
            if par:
                ess += 1
            else:
                triv += 1
        key = (n - 2 * bits.bit_count(), triv + free_triv, ess + free_ess)
        hist[key] = hist.get(key, 0) + 1
    return _assemble(hist)


def _gray_chunk(
    d: AnnularDiagram, start: int, stop: int
) -> Dict[Tuple[int, int, int], int]:
    """Histogram of smoothing invariants for Gray-code states start..stop-1."""
    order, mate, epar = _tables(d)
    n = len(order)
    total = 4 * n
    free_triv = sum(1 for p in d.free_loops if p == 0)
    free_ess = len(d.free_loops) - free_triv

    bits = start ^ (start >> 1)  # Gray code of the first state
    signs = [-1 if bits >> i & 1 else 1 for i in range(n)]
    partner = [_partner_for(signs[h >> 2], h) for h in range(total)]

    # Circle decomposition of the seed state.
    ident = [0] * total
    parity: Dict[int, int] = {}
    next_id = 0
    ntriv = ness = 0
    seen = [False] * total
    for h0 in range(total):
        if seen[h0]:
            continue
        par = 0
        cur = h0
        members = []
        while True:
            m = mate[cur]
            seen[cur] = seen[m] = True
            members.append(cur)
            members.append(m)
            par ^= epar[cur]
            cur = partner[m]
            if cur == h0:
                break
        for h in members:
            ident[h] = next_id
        parity[next_id] = par
        next_id += 1
        if par:
            ness += 1
        else:
            ntriv += 1

    def walk(h0: int) -> Tuple[List[int], int]:
        par = 0
        cur = h0
        members = []
        while True:
            m = mate[cur]
            members.append(cur)
            members.append(m)
            par ^= epar[cur]
            cur = partner[m]
            if cur == h0:
                break
        return members, par

    hist: Dict[Tuple[int, int, int], int] = {}
    pop = bits.bit_count()
    for i in range(start, stop):
        key = (n - 2 * pop, ntriv + free_triv, ness + free_ess)
        hist[key] = hist.get(key, 0) + 1
        if i + 1 == stop:
            break
        t = ((i + 1) & -(i + 1)).bit_length() - 1  # flipped crossing
        j = 4 * t
        old_sign = signs[t]
        new_sign = -old_sign
        signs[t] = new_sign
        bits ^= 1 << t
        pop += 1 if new_sign < 0 else -1
        if old_sign > 0:
            ia, ib = ident[j], ident[j + 1]  # arcs (j,j+3) and (j+1,j+2)
        else:
            ia, ib = ident[j], ident[j + 2]  # arcs (j,j+1) and (j+2,j+3)
        for h in (j, j + 1, j + 2, j + 3):
            partner[h] = _partner_for(new_sign, h)
        if ia != ib:
            # merge two circles
            members, par = walk(j)
            for h in members:
                ident[h] = next_id
            for dead in (ia, ib):
                if parity.pop(dead):
                    ness -= 1
                else:
                    ntriv -= 1
            parity[next_id] = par
            if par:
                ness += 1
            else:
                ntriv += 1
            next_id += 1
        else:
            members, par = walk(j)
            other = j + 1 if new_sign > 0 else j + 2  # on the second new arc
            if other in members:
                continue  # circle reconnected to itself: nothing changed
            members2, par2 = walk(other)
            for h in members:
                ident[h] = next_id
            for h in members2:
                ident[h] = next_id + 1
            if parity.pop(ia):
                ness -= 1
            else:
                ntriv -= 1
            for new_id, new_par in ((next_id, par), (next_id + 1, par2)):
                parity[new_id] = new_par
                if new_par:
                    ness += 1
                else:
                    ntriv += 1
            next_id += 2
    return hist


def bracket_gray(d: AnnularDiagram, threads: int = 1) -> LaurentPoly:
    """Bracket via Gray-code enumeration with incremental circle updates.

    ``threads`` splits the state range into that many chunks evaluated
    on a thread pool; chunk histograms are merged in a fixed order, so
    the result is identical for any thread count.
    """
    _check_size(d)
    n = d.n
    states = 1 << n
    threads = max(1, min(int(threads), states))
    if threads == 1:
        return _assemble(_gray_chunk(d, 0, states))
    step = states // threads
    bounds = [(k * step, (k + 1) * step if k < threads - 1 else states) for k in range(threads)]
    hist: Dict[Tuple[int, int, int], int] = {}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(lambda ab: _gray_chunk(d, ab[0], ab[1]), bounds):
            for key, count in part.items():
                hist[key] = hist.get(key, 0) + count
    return _assemble(hist)


# -- orientation-dependent quantities ----------------------------------------


def writhe(d: AnnularDiagram, orientation: Union[Sequence[int], None] = None) -> int:
    """Sum of crossing signs under the chosen component orientations.

    ``orientation`` gives a direction (+1 forward, -1 reversed) for each
    component, listed as the strand walks in `strand_walks` order
    followed by the free loops; None orients every component forward.
    A forward passage through a crossing enters at slot s and leaves at
    s+2; a crossing counts +1 when the under-strand leaves one slot
    clockwise of where the over-strand leaves, -1 otherwise.
    Self-crossings of a component keep their sign when the component is
    reversed, so knots have a well-defined writhe.
    """
    walks = d.strand_walks()
    ncomp = len(walks) + len(d.free_loops)
    if orientation is None:
        dirs = [1] * ncomp
    else:
        dirs = list(orientation)
        if len(dirs) != ncomp or any(o not in (1, -1) for o in dirs):
            raise ValueError(
                "orientation must give +1 or -1 for each of the %d components"
                % ncomp
            )
    exits: Dict[str, Dict[str, int]] = {}
    for k, walk in enumerate(walks):
        for c, s in walk:
            kind = "under" if s % 2 == 0 else "over"
            exits.setdefault(c, {})[kind] = (s + 2) % 4 if dirs[k] > 0 else s
    total = 0
    for c, seen in exits.items():
        if len(seen) != 2:
            raise AssertionError("crossing %s missing a passage" % c)
        total += 1 if seen["under"] == (seen["over"] - 1) % 4 else -1
    return total


def jones(
    d: AnnularDiagram, orientation: Union[Sequence[int], None] = None
) -> LaurentPoly:
    """Bracket rescaled by (-A^3)^(-writhe), which is unchanged by
    kink insertion and the other moves that preserve the link."""
    w = writhe(d, orientation)
    poly = bracket_gray(d)
    scaled = poly.shift(-3 * w)
    return scaled if w % 2 == 0 else -scaled
