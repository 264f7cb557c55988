"""Combinatorial annular link diagrams.

A diagram of a link in S1 x S2 is drawn in an annulus and encoded here
as a 4-valent combinatorial map plus homological bookkeeping:

* Each crossing has four slots numbered 0..3 counterclockwise.  The
  under-strand occupies slots 0 and 2, the over-strand slots 1 and 3.
* Each edge is an arc between two slot incidences and carries a cut
  parity bit: the mod-2 count of its intersections with a fixed arc
  joining the two annulus boundaries.  Cutting along that arc turns the
  annulus into a disk, so an embedded circle is homotopically essential
  in the annulus exactly when its total cut parity is odd.
* Circles without crossings cannot be edges; they are stored as free
  loops, each reduced to its parity bit.
* Two faces are marked external: the regions meeting the inner and the
  outer boundary of the annulus.  A marker is a corner reference
  ``(crossing_id, corner)`` where corner k lies between slots k and
  k+1 (mod 4), or the sentinel ``UNBOUNDED`` when the diagram has no
  crossings at all.

Faces are traced with the turning rule "arrive at slot i, leave along
the edge at slot i+1 (mod 4)"; the corner emitted at that turn is
corner i.  A strand continues through a crossing from slot i to slot
i+2.  For every crossing-bearing connected component the traced map
must satisfy V - E + F = 2, i.e. each component is a map on the
2-sphere; `validate` reports all violations as strings rather than
raising.

Builders return fresh immutable-by-convention diagrams; move
generators (`insert_r1`, `insert_r2`) never mutate their input.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple, Union

__all__ = [
    "UNBOUNDED",
    "AnnularDiagram",
    "components",
    "from_free_loops",
    "from_braid_closure",
    "from_disk_pd",
    "insert_r1",
    "insert_r2",
    "apply_full_twist",
    "mirror_diagram",
    "chessboard_coloring",
]

UNBOUNDED = "unbounded"

Corner = Tuple[str, int]
Designator = Union[str, Corner]
Dart = Tuple[str, int]


class AnnularDiagram:
    """A link diagram in the annulus, as a decorated 4-valent map."""

    __slots__ = ("crossings", "edge_parity", "free_loops", "external", "_cache")

    def __init__(
        self,
        crossings: Dict[str, Tuple[str, str, str, str]],
        edge_parity: Dict[str, int],
        free_loops: Sequence[int] = (),
        external: Tuple[Designator, Designator] = (UNBOUNDED, UNBOUNDED),
    ):
        self.crossings = {str(c): tuple(slots) for c, slots in crossings.items()}
        self.edge_parity = {str(e): int(p) for e, p in edge_parity.items()}
        self.free_loops = tuple(int(p) for p in free_loops)
        self.external = (external[0], external[1])
        self._cache: Dict[str, object] = {}

    # -- basic queries --------------------------------------------------

    @property
    def n(self) -> int:
        """Number of crossings."""
        return len(self.crossings)

    def edge_ends(self) -> Dict[str, List[Dart]]:
        """edge id -> its (crossing, slot) incidences, in scan order."""
        if "ends" not in self._cache:
            ends: Dict[str, List[Dart]] = {}
            for cid, slots in self.crossings.items():
                for s, eid in enumerate(slots):
                    ends.setdefault(eid, []).append((cid, s))
            self._cache["ends"] = ends
        return self._cache["ends"]  # type: ignore[return-value]

    def other_end(self, edge: str, end: Dart) -> Dart:
        a, b = self.edge_ends()[edge]
        return b if end == a else a

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AnnularDiagram)
            and self.crossings == other.crossings
            and self.edge_parity == other.edge_parity
            and self.free_loops == other.free_loops
            and self.external == other.external
        )

    def __repr__(self) -> str:
        return "AnnularDiagram(n=%d, loops=%d)" % (self.n, len(self.free_loops))

    # -- validation ------------------------------------------------------

    def validate(self) -> List[str]:
        """Return all structural violations (empty list == valid)."""
        bad: List[str] = []
        for cid, slots in self.crossings.items():
            if len(slots) != 4:
                bad.append("crossing %s has %d slots, expected 4" % (cid, len(slots)))
        for eid, p in self.edge_parity.items():
            if p not in (0, 1):
                bad.append("edge %s has parity %r, expected 0 or 1" % (eid, p))
        for i, p in enumerate(self.free_loops):
            if p not in (0, 1):
                bad.append("free loop %d has parity %r, expected 0 or 1" % (i, p))

        seen: Dict[str, int] = {}
        for cid, slots in self.crossings.items():
            for eid in slots:
                if eid not in self.edge_parity:
                    bad.append("crossing %s references undeclared edge %s" % (cid, eid))
                seen[eid] = seen.get(eid, 0) + 1
        for eid in self.edge_parity:
            count = seen.get(eid, 0)
            if count != 2:
                bad.append("edge %s has %d incidences, expected 2" % (eid, count))

        for label, ref in zip(("inner", "outer"), self.external):
            if ref == UNBOUNDED:
                if self.crossings:
                    bad.append("%s designator is unbounded but the diagram has crossings" % label)
                continue
            if self.crossings and isinstance(ref, tuple) and len(ref) == 2:
                cid, corner = ref
                if cid not in self.crossings:
                    bad.append("%s designator names unknown crossing %r" % (label, cid))
                elif corner not in (0, 1, 2, 3):
                    bad.append("%s designator corner %r out of range" % (label, corner))
            elif not self.crossings:
                bad.append("%s designator must be unbounded in a crossingless diagram" % label)
            else:
                bad.append("%s designator %r is malformed" % (label, ref))

        if bad:
            return bad  # map-level checks need a structurally sound diagram

        # Each crossing-bearing connected component must be a sphere map.
        comp = self._crossing_components()
        if comp:
            faces_by_comp: Dict[int, int] = {}
            for face in self.trace_faces():
                root = comp[face[0][0]]
                faces_by_comp[root] = faces_by_comp.get(root, 0) + 1
            vertices: Dict[int, int] = {}
            for cid in self.crossings:
                vertices[comp[cid]] = vertices.get(comp[cid], 0) + 1
            edges: Dict[int, int] = {}
            for eid, ends in self.edge_ends().items():
                edges[comp[ends[0][0]]] = edges.get(comp[ends[0][0]], 0) + 1
            for root, v in sorted(vertices.items()):
                euler = v - edges.get(root, 0) + faces_by_comp.get(root, 0)
                if euler != 2:
                    bad.append(
                        "component at crossing %s has V-E+F = %d, expected 2 (non-planar gluing)"
                        % (root_name(comp, root), euler)
                    )
            if bad:
                return bad

        # Cut consistency.  The parity bits must be realizable by a single
        # arc running between the two boundary circles: around any face the
        # arc enters as often as it leaves, so the boundary parities of a
        # face sum to 0 mod 2, except at the two faces holding the boundary
        # circles where the arc terminates.  Only checkable when the whole
        # crossing graph is one component (nesting of separate components
        # is not recorded by the map data).
        if comp and len(set(comp.values())) == 1:
            odd = []
            for i, face in enumerate(self.trace_faces()):
                total = 0
                for c, s in face:
                    total += self.edge_parity[self.crossings[c][(s + 1) % 4]]
                if total % 2:
                    odd.append(i)
            ext = self.external_face_indices()
            expected = sorted(set(ext)) if ext is not None and ext[0] != ext[1] else []
            if odd != expected:
                bad.append(
                    "cut parities are odd around faces %r but the boundary circles "
                    "sit in faces %r" % (odd, sorted(set(ext or ())))
                )
        return bad

    def _crossing_components(self) -> Dict[str, int]:
        """Union-find roots (as ints) for the crossing graph."""
        ids = list(self.crossings)
        index = {cid: i for i, cid in enumerate(ids)}
        parent = list(range(len(ids)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for ends in self.edge_ends().values():
            a, b = find(index[ends[0][0]]), find(index[ends[1][0]])
            if a != b:
                parent[a] = b
        return {cid: find(index[cid]) for cid in ids}

    # -- faces -------------------------------------------------------------

    def trace_faces(self) -> Tuple[Tuple[Corner, ...], ...]:
        """All faces, each as its cyclic corner sequence."""
        if "faces" not in self._cache:
            faces: List[Tuple[Corner, ...]] = []
            visited = set()
            for start_c in self.crossings:
                for start_s in range(4):
                    if (start_c, start_s) in visited:
                        continue
                    face: List[Corner] = []
                    c, s = start_c, start_s
                    while (c, s) not in visited:
                        visited.add((c, s))
                        face.append((c, s))
                        out = (s + 1) % 4
                        c, s = self.other_end(self.crossings[c][out], (c, out))
                    faces.append(tuple(face))
            self._cache["faces"] = tuple(faces)
        return self._cache["faces"]  # type: ignore[return-value]

    def corner_face(self) -> Dict[Corner, int]:
        """corner -> index into trace_faces()."""
        if "corner_face" not in self._cache:
            table: Dict[Corner, int] = {}
            for i, face in enumerate(self.trace_faces()):
                for corner in face:
                    table[corner] = i
            self._cache["corner_face"] = table
        return self._cache["corner_face"]  # type: ignore[return-value]

    def external_face_indices(self) -> Tuple[int, int] | None:
        """Face indices of the two external markers, or None if sentinel."""
        if self.external[0] == UNBOUNDED or self.external[1] == UNBOUNDED:
            return None
        table = self.corner_face()
        return (table[self.external[0]], table[self.external[1]])

    def edge_sides(self, edge: str) -> Tuple[int, int]:
        """The two face indices along an edge."""
        (c, s), _ = self.edge_ends()[edge]
        table = self.corner_face()
        return (table[(c, s)], table[(c, (s - 1) % 4)])

    # -- strands -------------------------------------------------------------

    def strand_walks(self) -> Tuple[Tuple[Dart, ...], ...]:
        """Closed strand walks through crossings, one per link component
        that meets a crossing.  Each walk lists arrival darts; the strand
        enters at slot s and leaves through slot s+2.  Free loops are not
        included (they carry no darts)."""
        if "walks" not in self._cache:
            walks: List[Tuple[Dart, ...]] = []
            visited = set()
            for start_c in self.crossings:
                for start_s in range(4):
                    if (start_c, start_s) in visited:
                        continue
                    walk: List[Dart] = []
                    c, s = start_c, start_s
                    while (c, s) not in visited:
                        visited.add((c, s))
                        visited.add((c, (s + 2) % 4))  # reverse direction
                        walk.append((c, s))
                        out = (s + 2) % 4
                        c, s = self.other_end(self.crossings[c][out], (c, out))
                    walks.append(tuple(walk))
            self._cache["walks"] = tuple(walks)
        return self._cache["walks"]  # type: ignore[return-value]

    def component_count(self) -> int:
        return len(self.strand_walks()) + len(self.free_loops)


def root_name(comp: Dict[str, int], root: int) -> str:
    for cid, r in comp.items():
        if r == root:
            return cid
    return "?"


def components(d: AnnularDiagram) -> List[list]:
    """Link components: each strand walk as a list of arrival darts,
    then one ``[("free_loop", i)]`` singleton per free loop."""
    out: List[list] = [list(w) for w in d.strand_walks()]
    for i in range(len(d.free_loops)):
        out.append([("free_loop", i)])
    return out


# -- builders ------------------------------------------------------------


def from_free_loops(parities: Sequence[int]) -> AnnularDiagram:
    """A diagram with no crossings: one free loop per parity bit."""
    return AnnularDiagram({}, {}, tuple(parities), (UNBOUNDED, UNBOUNDED))


def _braid_slot_maps(sign: int) -> Dict[str, int]:
    """Geometric port -> slot for one braid crossing.

    Ports: NW/NE attach upward to positions i/i+1, SW/SE downward.  For a
    positive generator the strand entering at NW passes over; slots run
    counterclockwise with the under-strand on slots 0 and 2.
    """
    if sign > 0:
        return {"SW": 0, "SE": 1, "NE": 2, "NW": 3}
    return {"SE": 0, "NE": 1, "NW": 2, "SW": 3}


def from_braid_closure(word: Sequence[int], strands: int, *, disk: bool = False) -> AnnularDiagram:
    """Close a braid word around the annulus.

    ``word`` lists nonzero generator indices: +i crosses position i over
    position i+1, -i crosses it under.  Rows are stacked top to bottom
    and each position's bottom end wraps back to its top end.  Wrap
    edges cross the cut arc once (parity 1); in-braid edges have parity
    0.  Positions never involved in a crossing become free loops of
    parity 1.  The inner external face is the region on the low-index
    side of the leftmost used column, the outer one mirrors it on the
    right.

    With ``disk=True`` the same map is produced as a planar (trace)
    closure instead: every parity is 0 and both external markers name
    the region left of the leftmost used column, which is the unbounded
    region of the planar picture.
    """
    if strands < 1:
        raise ValueError("strands must be >= 1")
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise ValueError("generator %r out of range for %d strands" % (g, strands))

    crossings: Dict[str, Tuple[str, str, str, str]] = {}
    parity: Dict[str, int] = {}
    edge_count = 0
    open_end: List[Dart | None] = [None] * (strands + 1)
    first_end: List[Dart | None] = [None] * (strands + 1)

    def new_edge(a: Dart, b: Dart, par: int) -> None:
        nonlocal edge_count
        eid = "e%d" % edge_count
        edge_count += 1
        parity[eid] = par
        slot_to_edge.setdefault(a[0], {})[a[1]] = eid
        slot_to_edge.setdefault(b[0], {})[b[1]] = eid

    slot_to_edge: Dict[str, Dict[int, str]] = {}

    for row, g in enumerate(word, start=1):
        i, sign = abs(g), (1 if g > 0 else -1)
        cid = "x%d" % row
        ports = _braid_slot_maps(sign)
        slot_to_edge[cid] = {}
        for pos, port in ((i, "NW"), (i + 1, "NE")):
            here = (cid, ports[port])
            if open_end[pos] is None:
                first_end[pos] = here
            else:
                new_edge(open_end[pos], here, 0)
        open_end[i] = (cid, ports["SW"])
        open_end[i + 1] = (cid, ports["SE"])
        crossings[cid] = ("", "", "", "")  # placeholder, filled after wiring

    loops: List[int] = []
    for pos in range(1, strands + 1):
        top, bottom = first_end[pos], open_end[pos]
        if top is None and bottom is None:
            loops.append(0 if disk else 1)
        else:
            assert top is not None and bottom is not None
            new_edge(bottom, top, 0 if disk else 1)

    for cid in crossings:
        slots = slot_to_edge[cid]
        crossings[cid] = (slots[0], slots[1], slots[2], slots[3])

    if not crossings:
        external: Tuple[Designator, Designator] = (UNBOUNDED, UNBOUNDED)
    else:
        used = sorted({abs(g) for g in word})
        lo, hi = used[0], used[-1]
        lo_row = next(r for r, g in enumerate(word, start=1) if abs(g) == lo)
        hi_row = next(r for r, g in enumerate(word, start=1) if abs(g) == hi)
        # west corner: between NW and SW ports; east corner: between SE and NE.
        lo_sign = 1 if word[lo_row - 1] > 0 else -1
        hi_sign = 1 if word[hi_row - 1] > 0 else -1
        west = ("x%d" % lo_row, 3 if lo_sign > 0 else 2)
        east = ("x%d" % hi_row, 1 if hi_sign > 0 else 0)
        external = (west, west) if disk else (west, east)

    return AnnularDiagram(crossings, parity, loops, external)


def from_disk_pd(
    pd: Sequence[Sequence[int]], outer: Corner | None = None
) -> AnnularDiagram:
    """Build a classical diagram in a disk from a planar-diagram code.

    Each entry lists the four edge labels around a crossing counter-
    clockwise starting from the incoming under-strand, which matches the
    slot convention directly.  All cut parities are 0 and both external
    markers name the chosen outer face (by default the face at corner 0
    of the first crossing).
    """
    crossings: Dict[str, Tuple[str, str, str, str]] = {}
    parity: Dict[str, int] = {}
    for k, quad in enumerate(pd, start=1):
        if len(quad) != 4:
            raise ValueError("PD entry %d has %d labels, expected 4" % (k, len(quad)))
        names = tuple("e%d" % lab for lab in quad)
        crossings["x%d" % k] = names  # type: ignore[assignment]
        for eid in names:
            parity[eid] = 0
    if not crossings:
        return from_free_loops(())
    ref: Corner = outer if outer is not None else ("x1", 0)
    return AnnularDiagram(crossings, parity, (), (ref, ref))


# -- moves -----------------------------------------------------------------


def _fresh_ids(d: AnnularDiagram, want_crossings: int, want_edges: int):
    cnum = 0
    while any(("x%d" % (cnum + i + 1)) in d.crossings for i in range(want_crossings)):
        cnum += 1
    enum = 0
    while any(("e%d" % (enum + i)) in d.edge_parity for i in range(want_edges)):
        enum += 1
    return (
        ["x%d" % (cnum + i + 1) for i in range(want_crossings)],
        ["e%d" % (enum + i) for i in range(want_edges)],
    )


def insert_r1(d: AnnularDiagram, edge: Union[str, int], sign: int = 1) -> AnnularDiagram:
    """Insert a kink on an edge (or, with an int index, on a free loop).

    ``sign=+1`` produces the kink whose bracket factor is -A^3 and whose
    crossing signs as +1 under any orientation; ``sign=-1`` the mirror.
    The split edge keeps its cut parity on one piece so every circle
    parity is preserved.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    (cid,), (e_a, e_loop, e_b) = _fresh_ids(d, 1, 3)
    # Positive kink: the small loop joins slots 3-0 (one A-smoothing pair),
    # the strand runs in at slot 1 and out at slot 2.  Negative kink: loop
    # joins 0-1 (a B-pair), strand in at slot 2, out at slot 3.
    if sign > 0:
        loop_slots, slot_in, slot_out = (3, 0), 1, 2
    else:
        loop_slots, slot_in, slot_out = (0, 1), 2, 3
    corner_in_out = slot_in  # corner between slot_in and slot_out

    crossings = dict(d.crossings)
    parity = dict(d.edge_parity)
    loops = list(d.free_loops)
    external = d.external

    slots: Dict[int, str] = {loop_slots[0]: e_loop, loop_slots[1]: e_loop}

    if isinstance(edge, int):
        # Kink a free loop: it becomes a one-crossing circle.
        par = loops.pop(edge)
        parity[e_a] = par
        parity[e_loop] = 0
        slots[slot_in] = e_a
        slots[slot_out] = e_a
        crossings[cid] = (slots[0], slots[1], slots[2], slots[3])
        if not d.crossings:
            ref = (cid, corner_in_out)
            external = (ref, ref)
        return AnnularDiagram(crossings, parity, loops, external)

    if edge not in d.edge_parity:
        raise ValueError("unknown edge %r" % edge)
    end_p, end_q = d.edge_ends()[edge]
    del parity[edge]
    parity[e_a] = d.edge_parity[edge]
    parity[e_loop] = 0
    parity[e_b] = 0
    slots[slot_in] = e_a
    slots[slot_out] = e_b

    def rewire(end: Dart, new_eid: str) -> None:
        c, s = end
        tup = list(crossings[c])
        tup[s] = new_eid
        crossings[c] = tuple(tup)  # type: ignore[assignment]

    rewire(end_p, e_a)
    rewire(end_q, e_b)
    crossings[cid] = (slots[0], slots[1], slots[2], slots[3])
    return AnnularDiagram(crossings, parity, loops, external)


def insert_r2(d: AnnularDiagram, edge1: str, edge2: str) -> AnnularDiagram:
    """Slide edge1 across a shared face so it passes over edge2.

    The two edges must lie on a common traced face; the finger move adds
    two crossings at which edge1's strand is the over-strand.  Raises
    ValueError when no common face exists.
    """
    if edge1 == edge2:
        raise ValueError("need two distinct edges")
    for e in (edge1, edge2):
        if e not in d.edge_parity:
            raise ValueError("unknown edge %r" % e)

    # Find arrival darts for both edges on one face: the face boundary
    # traverses the two edges in opposite senses, which fixes the planar
    # gluing of the finger.
    hit1: Dart | None = None
    hit2: Dart | None = None
    shared: list = []
    for face in d.trace_faces():
        hit1 = hit2 = None
        for c, s in face:
            # the dart (c, s) arrived along the edge at slot s
            eid = d.crossings[c][s]
            if eid == edge1 and hit1 is None:
                hit1 = (c, s)
            elif eid == edge2 and hit2 is None:
                hit2 = (c, s)
        if hit1 is not None and hit2 is not None:
            shared = list(face)
            break
    if hit1 is None or hit2 is None:
        raise ValueError("edges %r and %r do not bound a common face" % (edge1, edge2))

    # The finger tip sweeps over the stretch of face boundary running
    # from edge1's corner forward to edge2's.  Cut-arc strands pinned
    # there end up under the finger, so the stub parities on that side
    # must absorb their count for every face to stay even.  A boundary
    # circle sitting in the swept stretch counts once: the arc ends
    # there.
    i1, i2 = shared.index(hit1), shared.index(hit2)
    segment = []
    j = (i1 + 1) % len(shared)
    while j != i2:
        segment.append(shared[j])
        j = (j + 1) % len(shared)
    swept = 0
    for c, s in segment:
        swept ^= d.edge_parity[d.crossings[c][s]]
    for designator in d.external:
        if designator == hit1 or designator in segment:
            swept ^= 1

    # The boundary walk keeps its face on the right, so edge1 is traversed
    # u_a -> u_b and edge2 the opposite way, v_a -> v_b, around the face.
    u_b, u_a = hit1, d.other_end(edge1, hit1)
    v_b, v_a = hit2, d.other_end(edge2, hit2)

    (c_l, c_r), (t_w, t_m, t_e, b_w, b_m, b_e) = _fresh_ids(d, 2, 6)
    crossings = dict(d.crossings)
    parity = dict(d.edge_parity)

    def rewire(end: Dart, new_eid: str) -> None:
        c, s = end
        tup = list(crossings[c])
        tup[s] = new_eid
        crossings[c] = tuple(tup)  # type: ignore[assignment]

    # Left crossing: slots (0,1,2,3) = (B toward right, T outer-west,
    # B outer-west, T toward right).  Right crossing: slots = (B outer-
    # east, T outer-east, B toward left, T toward left).  edge1 = T is
    # the over-strand (slots 1/3) at both crossings.
    del parity[edge1]
    del parity[edge2]
    parity[t_w] = d.edge_parity[edge1]
    parity[t_m] = 0
    parity[t_e] = 0
    parity[b_w] = d.edge_parity[edge2] ^ swept
    parity[b_m] = 0
    parity[b_e] = swept

    rewire(u_a, t_w)
    rewire(u_b, t_e)
    rewire(v_b, b_w)
    rewire(v_a, b_e)
    crossings[c_l] = (b_m, t_w, b_w, t_m)
    crossings[c_r] = (b_e, t_e, b_m, t_m)

    out = AnnularDiagram(crossings, parity, d.free_loops, d.external)
    bad = out.validate()
    if bad:
        raise AssertionError("finger move produced an invalid map: %s" % "; ".join(bad))
    return out


def apply_full_twist(word: Sequence[int], strands: int, sign: int = 1) -> List[int]:
    """Append a full twist on all strands to a braid word.

    The closure of the result is the same link in S1 x S2 as the closure
    of ``word``, re-embedded in the annulus; on one strand the word is
    unchanged.  ``sign=-1`` appends the inverse twist.
    """
    if strands < 1:
        raise ValueError("strands must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    twist: List[int] = []
    gens = list(range(1, strands))
    for _ in range(strands):
        if sign > 0:
            twist.extend(gens)
        else:
            twist.extend(-g for g in reversed(gens))
    return list(word) + twist


def mirror_diagram(d: AnnularDiagram) -> AnnularDiagram:
    """Reflect the diagram: every crossing switches handedness.

    Combinatorially each rotation is reversed while the under-strand
    stays on slots 0 and 2; corner k becomes corner 3-k.  The bracket of
    the mirror is the original bracket with A replaced by A^-1.
    """
    crossings = {
        cid: (slots[0], slots[3], slots[2], slots[1])
        for cid, slots in d.crossings.items()
    }

    def flip(ref: Designator) -> Designator:
        if ref == UNBOUNDED:
            return ref
        c, k = ref  # type: ignore[misc]
        return (c, (3 - k) % 4)

    return AnnularDiagram(
        crossings,
        dict(d.edge_parity),
        d.free_loops,
        (flip(d.external[0]), flip(d.external[1])),
    )


# -- chessboard coloring -----------------------------------------------------


def chessboard_coloring(d: AnnularDiagram) -> List[str]:
    """Two-color the faces of a connected diagram.

    Returns a color ("black"/"white") per face index, normalized so the
    face holding the first external marker is black.  Works because a
    4-valent map never has the same face on both sides of an edge.
    """
    faces = d.trace_faces()
    if not faces:
        return []
    ext = d.external_face_indices()
    if ext is None:
        raise ValueError("chessboard coloring needs resolved external markers")
    colors: List[str | None] = [None] * len(faces)
    colors[ext[0]] = "black"
    queue = [ext[0]]
    adjacency: Dict[int, List[int]] = {}
    for eid in d.edge_parity:
        a, b = d.edge_sides(eid)
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    while queue:
        f = queue.pop()
        want = "white" if colors[f] == "black" else "black"
        for g in adjacency.get(f, ()):
            if colors[g] is None:
                colors[g] = want
                queue.append(g)
            elif colors[g] != want:
                raise ValueError("face adjacency is not bipartite; map is broken")
    if any(c is None for c in colors):
        raise ValueError("chessboard coloring needs a connected diagram")
    return colors  # type: ignore[return-value]
