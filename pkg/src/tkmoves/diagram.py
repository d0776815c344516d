"""Oriented link diagrams as PD codes, braid closures and twist surgeries.

A crossing stores four edge labels counterclockwise starting at the incoming
under-strand, plus a sign.  Sign +1 means the over-strand runs from slot 3 to
slot 1, sign -1 means it runs from slot 1 to slot 3.  Components with no
crossings are kept as bare labels in `loops`.
"""

from __future__ import annotations

import enum
import itertools
import os
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import NamedTuple, Sequence


class DiagramError(ValueError):
    pass


class Crossing(NamedTuple):
    edges: tuple
    sign: int

    @property
    def over_in(self) -> int:
        return 3 if self.sign > 0 else 1

    @property
    def over_out(self) -> int:
        return 1 if self.sign > 0 else 3

    def is_incoming(self, slot: int) -> bool:
        return slot == 0 or slot == self.over_in


def _switched(c: Crossing) -> Crossing:
    a, b, cc, d = c.edges
    if c.sign > 0:
        return Crossing((d, a, b, cc), -1)
    return Crossing((b, cc, d, a), 1)


class LinkDiagram:
    """Immutable oriented diagram."""

    def __init__(self, crossings: Sequence, loops: Sequence[int] = (), outer=None, check=True):
        self.crossings = tuple(c if isinstance(c, Crossing) else Crossing(tuple(c[0]), int(c[1]))
                               for c in crossings)
        self.loops = tuple(sorted(loops))
        self.outer = outer
        if check:
            self.validate()

    # structure
    @cached_property
    def endpoints(self) -> dict:
        ends: dict = {}
        for i, c in enumerate(self.crossings):
            for p, e in enumerate(c.edges):
                ends.setdefault(e, []).append((i, p))
        return ends

    @cached_property
    def tail(self) -> dict:
        out = {}
        for i, c in enumerate(self.crossings):
            for p, e in enumerate(c.edges):
                if not c.is_incoming(p):
                    out[e] = (i, p)
        return out

    @cached_property
    def head(self) -> dict:
        out = {}
        for i, c in enumerate(self.crossings):
            for p, e in enumerate(c.edges):
                if c.is_incoming(p):
                    out[e] = (i, p)
        return out

    def validate(self):
        for c in self.crossings:
            if len(c.edges) != 4 or c.sign not in (1, -1):
                raise DiagramError(f"malformed crossing {c}")
        for e, ends in self.endpoints.items():
            if len(ends) != 2:
                raise DiagramError(f"edge {e} appears {len(ends)} times")
        if len(self.tail) != len(self.endpoints) or len(self.head) != len(self.endpoints):
            raise DiagramError("inconsistent orientation: some edge lacks a tail or head")
        if set(self.loops) & set(self.endpoints) or len(set(self.loops)) != len(self.loops):
            raise DiagramError("loop labels must be distinct and unused by crossings")

    @property
    def labels(self) -> list:
        return sorted(list(self.endpoints) + list(self.loops))

    @cached_property
    def succ(self) -> dict:
        out = {}
        for e, (i, q) in self.head.items():
            c = self.crossings[i]
            nxt = 2 if q == 0 else c.over_out
            out[e] = c.edges[nxt]
        for e in self.loops:
            out[e] = e
        return out

    @cached_property
    def component_cycles(self) -> list:
        """Edge cycles, each starting at its minimum label, ordered by that label."""
        seen, cycles = set(), []
        for e in self.labels:
            if e in seen:
                continue
            cyc, f = [], e
            while f not in seen:
                seen.add(f)
                cyc.append(f)
                f = self.succ[f]
            cycles.append(cyc)
        return cycles

    @cached_property
    def component_of(self) -> dict:
        return {e: n for n, cyc in enumerate(self.component_cycles) for e in cyc}

    def components(self) -> int:
        return len(self.component_cycles)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def crossing_components(self, i: int) -> tuple:
        """(under component, over component) of crossing i."""
        c = self.crossings[i]
        return self.component_of[c.edges[0]], self.component_of[c.edges[1]]

    def linking_number(self, i: int, j: int) -> int:
        if i == j:
            raise DiagramError("linking number needs two different components")
        n = self.components()
        if not (0 <= i < n and 0 <= j < n):
            raise DiagramError("no such component")
        total = 0
        for k, c in enumerate(self.crossings):
            if set(self.crossing_components(k)) == {i, j}:
                total += c.sign
        return total // 2

    def self_writhe(self) -> int:
        return sum(c.sign for k, c in enumerate(self.crossings)
                   if len(set(self.crossing_components(k))) == 1)

    def __len__(self):
        return len(self.crossings)

    def __repr__(self):
        return f"LinkDiagram({len(self.crossings)} crossings, {self.components()} components)"

    # surgeries
    def switch(self, i: int) -> "LinkDiagram":
        cs = list(self.crossings)
        cs[i] = _switched(cs[i])
        return LinkDiagram(cs, self.loops, self.outer, check=False)

    def smooth(self, i: int, kind: str = "oriented") -> "LinkDiagram":
        """Oriented smoothing or the other ('infinity') smoothing at crossing i."""
        c = self.crossings[i]
        if kind == "oriented":
            pairs = ((0, 1), (3, 2)) if c.sign > 0 else ((0, 3), (1, 2))
        elif kind == "infinity":
            pairs = ((0, 3), (1, 2)) if c.sign > 0 else ((0, 1), (3, 2))
        else:
            raise DiagramError(f"unknown smoothing {kind}")
        tuples = [x.edges for x in self.crossings]
        prefs = [(e, t, True) for e, t in sorted(self.tail.items())]
        joins = [(c.edges[p], c.edges[q]) for p, q in pairs]
        tuples, loops, prefs = _remove_and_join(tuples, list(self.loops), i, joins, prefs)
        return orient(tuples, loops, prefs)

    def reverse_component(self, i: int) -> "LinkDiagram":
        if not 0 <= i < self.components():
            raise DiagramError("no such component")
        prefs = []
        for e in sorted(self.endpoints):
            if self.component_of[e] == i:
                prefs.append((e, self.head[e], True))
            else:
                prefs.append((e, self.tail[e], True))
        outer = self.outer
        if outer and self.component_of.get(outer[0]) == i:
            outer = (outer[0], "left" if outer[1] == "right" else "right")
        d = orient([c.edges for c in self.crossings], self.loops, prefs)
        return LinkDiagram(d.crossings, d.loops, outer, check=False)

    def mirror(self) -> "LinkDiagram":
        """Mirror image through the projection plane: every crossing switched."""
        cs = [_switched(c) for c in self.crossings]
        return LinkDiagram(cs, self.loops, self.outer, check=False)

    # faces
    @cached_property
    def _face_data(self):
        ends = self.endpoints
        other = {}
        for e, (x, y) in ends.items():
            other[x], other[y] = y, x
        face_of = {}
        faces = []
        for start in sorted(other):
            if start in face_of:
                continue
            fid = len(faces)
            walk = []
            cur = start
            while cur not in face_of:
                face_of[cur] = fid
                i, p = cur
                e = self.crossings[i].edges[p]
                walk.append((e, self.tail[e] == cur))
                j, q = other[cur]
                cur = (j, (q - 1) % 4)
            faces.append(walk)
        left, right = {}, {}
        for e in ends:
            left[e] = face_of[self.tail[e]]
            right[e] = face_of[self.head[e]]
        return faces, left, right

    def faces(self) -> list:
        """Each face as its counterclockwise boundary: list of (edge, traversed forward)."""
        return self._face_data[0]

    def face_left(self, e: int) -> int:
        return self._face_data[1][e]

    def face_right(self, e: int) -> int:
        return self._face_data[2][e]

    def face_side(self, e: int, side: str) -> int:
        return self.face_left(e) if side == "left" else self.face_right(e)

    @cached_property
    def pieces(self) -> list:
        """Connected pieces of the projection: lists of crossing indices, plus loops."""
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e, ends in self.endpoints.items():
            a, b = find(ends[0][0]), find(ends[1][0])
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups: dict = {}
        for i in range(len(self.crossings)):
            groups.setdefault(find(i), []).append(i)
        return [sorted(g) for _, g in sorted(groups.items())]

    def piece_of_edge(self, e: int):
        if e in self.loops:
            return None
        i = self.endpoints[e][0][0]
        for n, g in enumerate(self.pieces):
            if i in g:
                return n
        raise DiagramError("edge not found")

    def euler_ok(self) -> bool:
        faces = self.faces()
        fcount: dict = {}
        piece_idx = {i: n for n, g in enumerate(self.pieces) for i in g}
        for walk in faces:
            e = walk[0][0]
            n = piece_idx[self.endpoints[e][0][0]]
            fcount[n] = fcount.get(n, 0) + 1
        for n, g in enumerate(self.pieces):
            v = len(g)
            if v - 2 * v + fcount.get(n, 0) != 2:
                return False
        return True

    def is_connected(self) -> bool:
        if not self.crossings:
            return len(self.loops) <= 1
        return len(self.pieces) == 1 and not self.loops

    def sub_diagram(self, piece: int) -> "LinkDiagram":
        keep = self.pieces[piece]
        outer = self.outer
        cs = [self.crossings[i] for i in keep]
        if outer and outer[0] not in {e for c in cs for e in c.edges}:
            outer = None
        return LinkDiagram(cs, (), outer)

    def split_pieces(self) -> list:
        """Connected summands of a split diagram (loops become 0-crossing unknots)."""
        out = [self.sub_diagram(n) for n in range(len(self.pieces))]
        out += [LinkDiagram((), (e,)) for e in self.loops]
        return out

    # Seifert circles
    @cached_property
    def seifert_next(self) -> dict:
        nxt = {}
        for e, (i, q) in self.head.items():
            c = self.crossings[i]
            if c.sign > 0:
                p = 1 if q == 0 else 2
            else:
                p = 3 if q == 0 else 2
            nxt[e] = c.edges[p]
        return nxt

    @cached_property
    def seifert_circles(self) -> list:
        seen, circles = set(), []
        for e in sorted(self.endpoints):
            if e in seen:
                continue
            cyc, f = [], e
            while f not in seen:
                seen.add(f)
                cyc.append(f)
                f = self.seifert_next[f]
            circles.append(cyc)
        for e in self.loops:
            circles.append([e])
        return circles

    # canonical form
    def canonical(self) -> tuple:
        """Label-independent key: the minimum traversal relabeling over all start edges."""
        best = None
        for start in sorted(self.endpoints):
            key = self._relabel_key(start)
            if best is None or key < best:
                best = key
        return (best or (), len(self.loops))

    def _relabel_key(self, start):
        new: dict = {}
        order = []

        def run(e):
            while e not in new:
                new[e] = len(new) + 1
                i, _ = self.head[e]
                if i not in order:
                    order.append(i)
                e = self.succ[e]

        run(start)
        pos = 0
        while len(new) < len(self.endpoints):
            while pos < len(order):
                c = self.crossings[order[pos]]
                nxt = next((c.edges[p] for p in range(4) if c.edges[p] not in new), None)
                if nxt is not None:
                    run(nxt)
                    break
                pos += 1
            else:
                rest = [e for e in sorted(self.endpoints) if e not in new]
                # split piece: canonicalise by the smallest choice within it
                run(rest[0])
        cs = sorted((tuple(new[e] for e in c.edges), c.sign) for c in self.crossings)
        return tuple(cs)

    def relabeled(self) -> "LinkDiagram":
        """Copy with labels 1..E following component traversal order."""
        new = {}
        for cyc in self.component_cycles:
            for e in cyc:
                new[e] = len(new) + 1
        cs = [Crossing(tuple(new[e] for e in c.edges), c.sign) for c in self.crossings]
        outer = (new[self.outer[0]], self.outer[1]) if self.outer and self.outer[0] in new else None
        return LinkDiagram(cs, [new[e] for e in self.loops], outer)

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    # serialization
    def to_pd(self) -> str:
        d = self.relabeled()
        parts = [f"X[{','.join(map(str, c.edges))}]" for c in d.crossings]
        parts += [f"L[{e}]" for e in d.loops]
        under = {d.component_of[c.edges[0]] for c in d.crossings}
        for n, cyc in enumerate(d.component_cycles):
            if n not in under and cyc[0] in d.head:
                i, p = d.head[cyc[0]]
                parts.append(f"O[{i},{p}]")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"crossings": [list(c.edges) for c in self.crossings],
                "signs": [c.sign for c in self.crossings],
                "loops": list(self.loops)}


# orientation and relabeling helpers

def orient(tuples: Sequence, loops: Sequence[int], prefs: Sequence = (), outer=None) -> LinkDiagram:
    """Build an oriented diagram from 4-tuples whose slots 0 and 2 are the under-strand.

    prefs: (label, (crossing, slot), is_tail) hints, applied in order; the first hint
    met on a component fixes its direction.  Components without hints run from their
    smallest label's first endpoint.
    """
    tuples = [tuple(t) for t in tuples]
    ends: dict = {}
    for i, t in enumerate(tuples):
        for p, e in enumerate(t):
            ends.setdefault(e, []).append((i, p))
    for e, v in ends.items():
        if len(v) != 2:
            raise DiagramError(f"edge {e} appears {len(v)} times")
    direction: dict = {}

    def walk(e, tail_end):
        while e not in direction:
            x, y = ends[e]
            head_end = y if tail_end == x else x
            direction[e] = (tail_end, head_end)
            i, q = head_end
            nxt = (i, (q + 2) % 4)
            e = tuples[i][nxt[1]]
            tail_end = nxt

    for e, end, is_tail in prefs:
        if e in direction or e not in ends:
            continue
        if tuple(end) not in ends[e]:
            continue
        end = tuple(end)
        if is_tail:
            walk(e, end)
        else:
            x, y = ends[e]
            walk(e, y if end == x else x)
    for e in sorted(ends):
        if e not in direction:
            walk(e, ends[e][0])
    cs = []
    for i, t in enumerate(tuples):
        r = 0 if direction[t[0]][1] == (i, 0) else 2
        rot = t[r:] + t[:r]
        slot1 = (i, (1 + r) % 4)
        sign = -1 if direction[rot[1]][1] == slot1 else 1
        cs.append(Crossing(rot, sign))
    return LinkDiagram(cs, loops, outer)


def _remove_and_join(tuples, loops, idx, joins, prefs):
    """Delete crossing idx, identify the label pairs in joins; returns new tuples, loops, prefs."""
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in joins:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    new_tuples = []
    index_map = {}
    for i, t in enumerate(tuples):
        if i == idx:
            continue
        index_map[i] = len(new_tuples)
        new_tuples.append(tuple(find(e) for e in t))
    used = {e for t in new_tuples for e in t}
    new_loops = set(loops)
    for t in (tuples[idx],):
        for e in t:
            r = find(e)
            if r not in used:
                new_loops.add(r)
    new_prefs = []
    for e, (i, p), is_tail in prefs:
        if i == idx:
            continue
        new_prefs.append((find(e), (index_map[i], p), is_tail))
    return new_tuples, sorted(new_loops), new_prefs


# braids

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise DiagramError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise DiagramError(f"generator {x} out of range for n={self.strands}")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __str__(self):
        return f"n={self.strands}:" + " ".join(map(str, self.letters))


def braid_closure(b: BraidWord | tuple) -> LinkDiagram:
    """Closure of a braid with strands running downward and closing arcs on the right."""
    if not isinstance(b, BraidWord):
        b = BraidWord(b[0], tuple(b[1]))
    n = b.strands
    top = list(range(1, n + 1))
    cur = list(top)
    nxt = n + 1
    cs = []
    for x in b.letters:
        i = abs(x) - 1
        tl, tr = cur[i], cur[i + 1]
        bl, br = nxt, nxt + 1
        nxt += 2
        if x > 0:
            cs.append([[tl, bl, br, tr], 1])
        else:
            cs.append([[tr, tl, bl, br], -1])
        cur[i], cur[i + 1] = bl, br
    rename = {cur[p]: top[p] for p in range(n) if cur[p] != top[p]}
    cs = [Crossing(tuple(rename.get(e, e) for e in c), s) for c, s in cs]
    used = {e for c in cs for e in c.edges}
    loops = [e for e in top if e not in used]
    outer = (top[0], "right") if top[0] in used else None
    return LinkDiagram(cs, loops, outer)


def braid_site_edge(b: BraidWord, level: int, position: int) -> int:
    """Edge label of braid_closure(b) between letters level-1 and level at a 1-based position."""
    n = b.strands
    top = list(range(1, n + 1))
    cur = list(top)
    nxt = n + 1
    levels = [list(cur)]
    for x in b.letters:
        i = abs(x) - 1
        cur[i], cur[i + 1] = nxt, nxt + 1
        nxt += 2
        levels.append(list(cur))
    rename = {cur[p]: top[p] for p in range(n) if cur[p] != top[p]}
    e = levels[level][position - 1]
    return rename.get(e, e)


# twist moves

class MoveKind(enum.Enum):
    TK = "TK"
    TBARK = "TBARK"
    FULLTWIST = "FULLTWIST"


@dataclass(frozen=True)
class MoveSite:
    kind: MoveKind
    anchors: tuple
    twists: int = 1           # full twists per unit of k for FULLTWIST
    face_side: str | None = None   # which side of the first anchor faces the slot
    odd_keep: int | None = None    # for odd t-bar moves: anchor (1 or 2) keeping its direction

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", MoveKind(self.kind))
        object.__setattr__(self, "anchors", tuple(self.anchors))
        if len(set(self.anchors)) != len(self.anchors):
            raise DiagramError("anchor edges must be distinct")
        if self.kind is not MoveKind.FULLTWIST and len(self.anchors) != 2:
            raise DiagramError("twist moves need exactly two anchor edges")
        if len(self.anchors) < 2:
            raise DiagramError("need at least two anchor edges")


def _band_sides(d: LinkDiagram, site: MoveSite):
    """Choose for each anchor the side facing east; returns list of up-flags."""
    anchors = site.anchors
    m = len(anchors)
    for e in anchors:
        if e not in d.endpoints and e not in d.loops:
            raise DiagramError(f"unknown edge {e}")
    opts = []
    for n, e in enumerate(anchors):
        if n == 0 and site.face_side:
            opts.append([site.face_side])
        else:
            opts.append(["right", "left"])
    mismatch = False
    for choice in itertools.product(*opts):
        ok = True
        for n in range(m - 1):
            e, f = anchors[n], anchors[n + 1]
            if e in d.loops or f in d.loops:
                continue
            if d.piece_of_edge(e) != d.piece_of_edge(f):
                continue
            west_f = "left" if choice[n + 1] == "right" else "right"
            if d.face_side(e, choice[n]) != d.face_side(f, west_f):
                ok = False
                break
        if not ok:
            continue
        ups = [c == "right" for c in choice]
        if site.kind is MoveKind.TK and ups[0] != ups[1]:
            mismatch = True
            continue
        if site.kind is MoveKind.TBARK and ups[0] == ups[1]:
            mismatch = True
            continue
        return ups
    if mismatch:
        raise DiagramError(f"anchor strands are not {'parallel' if site.kind is MoveKind.TK else 'antiparallel'} "
                           f"across a shared face")
    raise DiagramError("anchor edges do not share a face")


def _twist_letters(site: MoveSite, k: int):
    m = len(site.anchors)
    hand = 1 if k > 0 else -1
    if site.kind is MoveKind.FULLTWIST:
        one = [q for _ in range(m) for q in range(m - 1)]
        return [(q, hand) for q in one * (abs(k) * site.twists)]
    return [(0, hand)] * abs(k)


def _insert_band(d: LinkDiagram, anchors, ups, letters):
    """Insert geometric braid letters between the anchors; returns unoriented data."""
    tuples = [list(c.edges) for c in d.crossings]
    base = len(tuples)
    nxt = max(d.labels, default=0) + 1
    pos = list(anchors)
    dirs = list(ups)
    bottom_slot = {}
    geo = []
    for q, hand in letters:
        sw, se = pos[q], pos[q + 1]
        nw, ne = nxt, nxt + 1
        nxt += 2
        i = len(tuples)
        if hand > 0:
            t = [se, ne, nw, sw]
            where = {"SE": 0, "NE": 1, "NW": 2, "SW": 3}
        else:
            t = [sw, se, ne, nw]
            where = {"SW": 0, "SE": 1, "NE": 2, "NW": 3}
        for lab, slot in ((sw, "SW"), (se, "SE")):
            if lab in anchors and lab not in bottom_slot:
                bottom_slot[lab] = (i, where[slot])
        tuples.append(t)
        geo.append(where)
        pos[q], pos[q + 1] = nw, ne
        dirs[q], dirs[q + 1] = dirs[q + 1], dirs[q]
    loops = set(d.loops)
    rename = {}
    for n, e in enumerate(anchors):
        topl = pos[n]
        if topl == e:
            continue
        if e in loops:
            rename[topl] = e
            loops.discard(e)
        else:
            # top endpoint of e: head if the strand runs up through the band, else tail
            ci, p = d.head[e] if ups[n] else d.tail[e]
            tuples[ci][p] = topl
    tuples = [tuple(rename.get(x, x) for x in t) for t in tuples]
    prefs = []
    for n, e in enumerate(anchors):
        if e in bottom_slot:
            prefs.append((e, bottom_slot[e], not ups[n]))
    return tuples, sorted(loops), prefs, base, geo


def _finish_prefs(d, anchors, anchor_prefs, keep=None):
    others = [(e, d.tail[e], True) for e in sorted(d.tail) if e not in anchors]
    if keep is None:
        return anchor_prefs + others
    first = [p for p in anchor_prefs if p[0] == anchors[keep - 1]]
    rest = [p for p in anchor_prefs if p[0] != anchors[keep - 1]]
    return first + others + rest


def _keep_outer(d, new, anchors):
    if not d.outer:
        return None
    e, side = d.outer
    if e in anchors or e not in new.tail or new.tail[e] != d.tail.get(e):
        return None
    return d.outer


def _loop_ups(d, site, ups):
    """Loop anchors may run either way; align them with the move kind."""
    anchors = site.anchors
    ups = list(ups)
    if site.kind is MoveKind.FULLTWIST:
        return ups
    a, b = (x in d.loops for x in anchors)
    if a and not b:
        ups[0] = ups[1] if site.kind is MoveKind.TK else not ups[1]
    elif b:
        ups[1] = ups[0] if site.kind is MoveKind.TK else not ups[0]
    return ups


def apply_move(d: LinkDiagram, site: MoveSite, k: int) -> LinkDiagram:
    """Insert k half twists (TK, TBARK) or k*twists full twists (FULLTWIST) at the site."""
    if k == 0:
        return d
    ups = _loop_ups(d, site, _band_sides_loose(d, site))
    if site.kind is MoveKind.TBARK and k % 2 and site.odd_keep not in (1, 2):
        raise DiagramError("odd t-bar move needs an orientation choice (odd_keep=1 or 2)")
    letters = _twist_letters(site, k)
    tuples, loops, aprefs, _, _ = _insert_band(d, site.anchors, ups, letters)
    keep = site.odd_keep if (site.kind is MoveKind.TBARK and k % 2) else None
    prefs = _finish_prefs(d, site.anchors, aprefs, keep)
    new = orient(tuples, loops, prefs)
    return LinkDiagram(new.crossings, new.loops, _keep_outer(d, new, site.anchors), check=False)


def _band_sides_loose(d, site):
    try:
        return _band_sides(d, site)
    except DiagramError:
        if all(x in d.loops for x in site.anchors):
            return [True] * len(site.anchors)
        raise


def slot_tangle(d: LinkDiagram, site: MoveSite, which: str) -> LinkDiagram:
    """The diagram with the slot replaced by a basic tangle: '0', '+', '-' or 'inf'.

    '0' keeps the two strands, '+'/'-' insert one half twist, 'inf' reconnects the
    strands across the slot (bottoms together, tops together).  For a t-bar site
    with odd_keep set, 'inf' is oriented as the oriented smoothing of the single
    half twist, so one band strand runs against the original orientation.
    """
    if which == "0":
        return d
    if which in ("+", "-"):
        k = 1 if which == "+" else -1
        if site.kind is MoveKind.TBARK:
            site = MoveSite(site.kind, site.anchors, site.twists, site.face_side, site.odd_keep or 1)
        return apply_move(d, site, k)
    if which != "inf":
        raise DiagramError(f"unknown tangle {which}")
    if site.kind is MoveKind.TBARK and site.odd_keep in (1, 2):
        # the inserted crossing is appended after the original ones
        return apply_move(d, site, 1).smooth(len(d.crossings), "oriented")
    ups = _loop_ups(d, site, _band_sides_loose(d, site))
    tuples, loops, aprefs, base, geo = _insert_band(d, site.anchors, ups, [(0, 1)])
    where = geo[0]
    t = tuples[base]
    joins = [(t[where["SW"]], t[where["SE"]]), (t[where["NW"]], t[where["NE"]])]
    prefs = _finish_prefs(d, site.anchors, aprefs, 1)
    tuples, loops, prefs = _remove_and_join(tuples, loops, base, joins, prefs)
    return orient(tuples, loops, prefs)


# parsing

_X_RE = re.compile(r"([XLO])\[([^\]]*)\]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse 'X[a,b,c,d] ... L[e] ... O[i,p]'.

    X lists start at the incoming under-strand and run counterclockwise.  O[i,p] marks
    slot p of crossing i (0-based) as incoming; it is only needed for components that
    never pass under.
    """
    tuples, loops, prefs = [], [], []
    pos = 0
    stripped = text.strip()
    for m in _X_RE.finditer(stripped):
        gap = stripped[pos:m.start()].strip(" ,;")
        if gap:
            raise DiagramError(f"unexpected text {gap!r} at position {pos}")
        pos = m.end()
        try:
            vals = [int(v) for v in m.group(2).split(",") if v.strip()]
        except ValueError:
            raise DiagramError(f"non-integer entry in {m.group(0)} at position {m.start()}")
        tag = m.group(1)
        if tag == "X":
            if len(vals) != 4:
                raise DiagramError(f"crossing {m.group(0)} at position {m.start()} needs 4 edges")
            tuples.append(tuple(vals))
        elif tag == "L":
            loops.extend(vals)
        else:
            if len(vals) != 2:
                raise DiagramError(f"seed {m.group(0)} needs crossing and slot")
            prefs.append(("seed", tuple(vals)))
    rest = stripped[pos:].strip(" ,;")
    if rest:
        raise DiagramError(f"unexpected text {rest!r} at position {pos}")
    real = []
    for i, t in enumerate(tuples):
        real.append((t[0], (i, 0), False))
    for _, (i, p) in prefs:
        if not (0 <= i < len(tuples) and 0 <= p < 4):
            raise DiagramError(f"seed O[{i},{p}] out of range")
        real.append((tuples[i][p], (i, p), False))
    d = orient(tuples, loops, real)
    for i, t in enumerate(tuples):
        if d.crossings[i].edges != t:
            raise DiagramError(f"crossing {i} X{list(t)}: slot 0 must be the incoming under-strand "
                               f"(orientation conflict)")
    for _, (i, p) in prefs:
        if not d.crossings[i].is_incoming(p):
            raise DiagramError(f"seed O[{i},{p}] conflicts with the under-strand orientation")
    under = {d.component_of[c.edges[0]] for c in d.crossings}
    seeded = {d.component_of[tuples[i][p]] for _, (i, p) in prefs}
    for n, cyc in enumerate(d.component_cycles):
        if cyc[0] in d.endpoints and n not in under and n not in seeded:
            raise DiagramError(f"component containing edge {cyc[0]} needs an orientation seed O[i,p]")
    return d


def parse_braid(text: str) -> BraidWord:
    """Parse 'n=<k>:<letters>' or 'n=<k> <letters>'."""
    m = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*[: ]?\s*(.*)", text)
    if not m:
        raise DiagramError(f"braid must start with n=<strands>: {text!r}")
    n = int(m.group(1))
    letters = []
    for tok in re.finditer(r"\S+", m.group(2)):
        try:
            letters.append(int(tok.group(0)))
        except ValueError:
            raise DiagramError(f"malformed braid letter {tok.group(0)!r} at position {tok.start()}")
    for x in letters:
        if x == 0 or abs(x) >= n:
            raise DiagramError(f"generator {abs(x) if x else 0} out of range for n={n}")
    return BraidWord(n, tuple(letters))


# named table

@dataclass
class TableEntry:
    name: str
    kind: str     # 'braid' or 'pd'
    data: str
    note: str = ""

    def diagram(self) -> LinkDiagram:
        if self.kind == "braid":
            return braid_closure(parse_braid(self.data))
        return parse_pd(self.data)

    def braid(self) -> BraidWord | None:
        return parse_braid(self.data) if self.kind == "braid" else None


_TABLE_ENV = "TKMOVES_LINK_TABLE"
_table_cache: dict = {}


def table_path() -> Path:
    env = os.environ.get(_TABLE_ENV)
    if env:
        return Path(env)
    return Path(__file__).with_name("data") / "links.txt"


def link_table(path: Path | str | None = None) -> dict:
    path = Path(path) if path else table_path()
    key = str(path.resolve())
    if key in _table_cache:
        return _table_cache[key]
    out = {}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        body = line.split("#", 1)
        note = body[1].strip() if len(body) > 1 else ""
        body = body[0].strip()
        if not body:
            continue
        try:
            name, kind, data = (x.strip() for x in body.split("|"))
        except ValueError:
            raise DiagramError(f"{path}:{lineno}: expected 'name | braid/pd | data'")
        if kind not in ("braid", "pd"):
            raise DiagramError(f"{path}:{lineno}: unknown entry kind {kind!r}")
        out[name] = TableEntry(name, kind, data, note)
    _table_cache[key] = out
    return out


def named(name: str) -> LinkDiagram:
    table = link_table()
    if name not in table:
        raise DiagramError(f"unknown link name {name!r}")
    return table[name].diagram()


def find_sites(d: LinkDiagram, kind: MoveKind | str) -> list:
    """All two-edge sites of the given kind: pairs of edges on a common face."""
    kind = MoveKind(kind) if isinstance(kind, str) else kind
    want_same = kind is MoveKind.TBARK
    out = []
    seen = set()
    for walk in d.faces():
        for (e, fe), (f, ff) in itertools.combinations(walk, 2):
            if e == f or (fe == ff) != want_same:
                continue
            side = "left" if fe else "right"
            key = (min(e, f), max(e, f), side if e < f else ("left" if ff else "right"))
            if key in seen:
                continue
            seen.add(key)
            out.append(MoveSite(kind, (e, f), face_side=side))
    return out
