"""Cayley maps: rotation systems over a cyclically ordered connection set.

A Cayley map carries darts (pi, pi o x) for every group element pi and
generator x.  The rotation R advances the generator along the cyclic order
p; dart reversal T swaps the endpoints.  Faces are the orbits of R o T.
The map is regular exactly when some skew-morphism psi of the group agrees
with p on the connection set; then its automorphism group is generated by
the left translations together with psi and has order |G| * order(psi).
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocktrans import CutPoints, make_bt
from .budget import NO_BUDGET
from .perms import Permutation, identity, parse_permutation, sym_group
from .toric import SkewMorphismWitness, bar_f, bar_f_witness, check_skew


@dataclass(frozen=True)
class Dart:
    """A directed edge (tail, tail o gen), stored by its generator."""

    tail: Permutation
    gen: Permutation

    @property
    def head(self) -> Permutation:
        return self.tail.compose(self.gen)


@dataclass(frozen=True)
class Face:
    """A face: the cyclic dart sequence of one rotation-reversal orbit."""

    darts: tuple[Dart, ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    def vertex_walk(self) -> tuple[Permutation, ...]:
        return tuple(d.tail for d in self.darts)


class CayleyMap:
    """CM(Sym_n, X, p): X held in the cyclic order defining p."""

    def __init__(self, n: int, generators):
        gens = tuple(generators)
        if len(gens) < 2:
            raise ValueError("need at least two generators")
        if n > 7:
            raise ValueError(f"degree {n} too large to materialize")
        for x in gens:
            if x.n != n:
                raise ValueError(f"generator degree {x.n} != {n}")
            if x.is_identity():
                raise ValueError("identity in the connection set")
        imgs = [x.image for x in gens]
        if len(set(imgs)) != len(imgs):
            raise ValueError("duplicate generators")
        if {x.inverse().image for x in gens} != set(imgs):
            raise ValueError("connection set is not inverse-closed")

        self.n = n
        self.gens = gens
        self.elements = sym_group(n)
        self._eidx = {p.image: i for i, p in enumerate(self.elements)}
        self._gidx = {x.image: gi for gi, x in enumerate(gens)}
        self._ginv = tuple(self._gidx[x.inverse().image] for x in gens)

        # The connection set must generate the whole group.
        seen = {identity(n).image}
        frontier = [identity(n).image]
        while frontier:
            nxt = []
            for t in frontier:
                for gimg in imgs:
                    prod = tuple(t[v - 1] for v in gimg)
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
            frontier = nxt
        if len(seen) != len(self.elements):
            raise ValueError("connection set does not generate the group")

        # vertex-by-generator product table, by ranks
        self._vmul = [
            [self._eidx[tuple(p.image[v - 1] for v in gimg)] for gimg in imgs]
            for p in self.elements
        ]

    @property
    def valency(self) -> int:
        return len(self.gens)

    @property
    def dart_count(self) -> int:
        return len(self.elements) * len(self.gens)

    def p_next(self, x: Permutation) -> Permutation:
        """Cyclic successor of a generator in the rotation order."""
        gi = self._gidx.get(x.image)
        if gi is None:
            raise ValueError(f"{x} is not in the connection set")
        return self.gens[(gi + 1) % len(self.gens)]

    def rotation(self, d: Dart) -> Dart:
        return Dart(d.tail, self.p_next(d.gen))

    def reverse(self, d: Dart) -> Dart:
        return Dart(d.head, d.gen.inverse())

    def _rt(self, vi: int, gi: int) -> tuple[int, int]:
        # R o T on rank-encoded darts: reverse first, then rotate.
        return self._vmul[vi][gi], (self._ginv[gi] + 1) % len(self.gens)

    def faces(self) -> list[Face]:
        """All faces, each rotated to start at its least (tail, gen) rank."""
        m = len(self.gens)
        nv = len(self.elements)
        visited = [False] * (nv * m)
        out = []
        for start in range(nv * m):
            if visited[start]:
                continue
            orbit = []
            vi, gi = divmod(start, m)
            while not visited[vi * m + gi]:
                visited[vi * m + gi] = True
                orbit.append((vi, gi))
                vi, gi = self._rt(vi, gi)
            pivot = orbit.index(min(orbit))
            orbit = orbit[pivot:] + orbit[:pivot]
            out.append(
                Face(
                    tuple(
                        Dart(self.elements[v], self.gens[g]) for v, g in orbit
                    )
                )
            )
        out.sort(key=lambda f: (self._eidx[f.darts[0].tail.image], self._gidx[f.darts[0].gen.image]))
        return out

    def euler_characteristic(self) -> int:
        v = len(self.elements)
        e = self.dart_count // 2
        return v - e + len(self.faces())


def is_regular(m: CayleyMap, budget=NO_BUDGET) -> SkewMorphismWitness | None:
    """Skew-morphism witness for regularity, or None when the map is not regular.

    Tries the toric candidates bar_f_r first.  Otherwise propagates the
    single map automorphism that would send the dart (iota, x0) to
    (iota, p(x0)); it exists if and only if the map is regular, because the
    left translations alone are transitive on the vertices.
    """
    n = m.n
    for r in range(n + 1):
        if all(bar_f(x, r) == m.p_next(x) for x in m.gens):
            w = bar_f_witness(n, r)
            if w is not None:
                return w
    vmap = _propagate_dart_automorphism(m, budget)
    if vmap is None:
        return None
    if any(m.elements[vmap[m._eidx[x.image]]] != m.p_next(x) for x in m.gens):
        return None
    w = check_skew(m.elements, tuple(vmap))
    if w is None:
        raise RuntimeError("dart automorphism exists but is no skew-morphism")
    return w


def _propagate_dart_automorphism(m: CayleyMap, budget):
    """Vertex map of the automorphism sending (iota, gens[0]) to (iota, gens[1]).

    Images propagate along R and T over the single <R, T> orbit (the graph
    is connected); any conflict proves the automorphism does not exist.
    """
    k = len(m.gens)
    nv = len(m.elements)
    total = nv * k
    iota = m._eidx[identity(m.n).image]
    img = [-1] * total
    d0 = iota * k + 0
    img[d0] = iota * k + 1
    queue = [d0]
    seen = 1
    while queue:
        budget.check()
        d = queue.pop()
        e = img[d]
        vi, gi = divmod(d, k)
        wi, hi = divmod(e, k)
        # rotation: advance both generator slots
        dn = vi * k + (gi + 1) % k
        en = wi * k + (hi + 1) % k
        if img[dn] < 0:
            img[dn] = en
            queue.append(dn)
            seen += 1
        elif img[dn] != en:
            return None
        # reversal: cross both edges
        dn = m._vmul[vi][gi] * k + m._ginv[gi]
        en = m._vmul[wi][hi] * k + m._ginv[hi]
        if img[dn] < 0:
            img[dn] = en
            queue.append(dn)
            seen += 1
        elif img[dn] != en:
            return None
    if seen != total or len(set(img)) != total:
        return None
    # consistency as a vertex map
    vmap = [-1] * nv
    for d in range(total):
        vi = d // k
        wi = img[d] // k
        if vmap[vi] < 0:
            vmap[vi] = wi
        elif vmap[vi] != wi:
            return None
    if sorted(vmap) != list(range(nv)):
        return None
    return vmap


def t_balance(witness: SkewMorphismWitness, generators) -> int | None:
    """The constant power-function value on the connection set, if any."""
    values = {witness.pi_power_of(x) for x in generators}
    if len(values) == 1:
        return values.pop()
    return None


def aut_order(m: CayleyMap, witness: SkewMorphismWitness | None) -> int | None:
    """|Aut| = |G| * order(psi) for a regular map, None otherwise."""
    if witness is None:
        return None
    return len(m.elements) * witness.order


# ---------------------------------------------------------------------------
# The maps under study.


def octahedron_map() -> CayleyMap:
    """Degree 3 over all four block transpositions; the embedded octahedron."""
    order = [
        CutPoints(0, 1, 3, 3),
        CutPoints(0, 2, 3, 3),
        CutPoints(1, 2, 3, 3),
        CutPoints(0, 1, 2, 3),
    ]
    return CayleyMap(3, [make_bt(c) for c in order])


def prop72_map(n: int) -> CayleyMap:
    """The regular map of valency n+1 over the staircase connection set.

    X = {s(0,1,n), s(0,n-1,n)} plus all s(i,i+1,i+2), with the rotation
    going down the staircase; at n = 3 this is precisely the octahedron.
    """
    if n < 3:
        raise ValueError(f"degree {n} below 3")
    order = [CutPoints(0, 1, n, n), CutPoints(0, n - 1, n, n)]
    order += [CutPoints(i, i + 1, i + 2, n) for i in range(n - 2, -1, -1)]
    return CayleyMap(n, [make_bt(c) for c in order])


MPRIME_N5_ORDER = (
    "[5 4 2 3 1]",
    "[5 3 4 2 1]",
    "[4 5 3 2 1]",
    "[4 3 2 1 5]",
    "[1 5 4 3 2]",
    "[5 4 3 1 2]",
)


def mprime_n5_map() -> CayleyMap:
    """A second regular map on degree 5 whose underlying graph is new."""
    return CayleyMap(5, [parse_permutation(s) for s in MPRIME_N5_ORDER])


def build_map(which: str, n: int | None = None) -> CayleyMap:
    """Dispatcher for the named maps: octahedron, prop72, mprime_n5."""
    if which == "octahedron":
        return octahedron_map()
    if which == "prop72":
        if n is None:
            raise ValueError("prop72 needs a degree")
        return prop72_map(n)
    if which == "mprime_n5":
        return mprime_n5_map()
    raise ValueError(f"unknown map {which!r}")


def map_report(m: CayleyMap, budget=NO_BUDGET) -> dict:
    faces = m.faces()
    histogram: dict[int, int] = {}
    for f in faces:
        histogram[f.size] = histogram.get(f.size, 0) + 1
    witness = is_regular(m, budget)
    report = {
        "n": m.n,
        "generator_count": m.valency,
        "dart_count": m.dart_count,
        "face_count": len(faces),
        "face_size_histogram": {str(k): v for k, v in sorted(histogram.items())},
        "euler_characteristic": len(m.elements) - m.dart_count // 2 + len(faces),
        "regular": witness is not None,
        "t_balanced": t_balance(witness, m.gens) if witness else None,
        "skew_order": witness.order if witness else None,
        "aut_order": aut_order(m, witness),
    }
    return report


def face_lines(m: CayleyMap) -> str:
    """One face per line: the cyclic vertex-rank walk."""
    lines = []
    for f in m.faces():
        lines.append(" ".join(str(m._eidx[p.image]) for p in f.vertex_walk()))
    return "\n".join(lines) + "\n"
