"""Toric and reverse maps on the symmetric group, and skew-morphisms.

The toric map f_r shifts the extended one-line form cyclically:

    (f_r(p))_t = p_{r+t} - p_r   (indices and values mod n+1, p_0 = 0),

equivalently [0 f_r(p)] = alpha^{n+1-p_r} o [0 p] o alpha^r where alpha is
the rotation x -> x+1 of {0,...,n}.  The reverse map g conjugates by the
order-reversing involution w: (g(p))_t = n+1 - p_{n+1-t}.  The variant
bar_f_r(p) = (f_r(p^-1))^-1 together with g generates a dihedral group of
order 2(n+1) acting on the symmetric group; every element fixes the
identity permutation and maps block transpositions to block transpositions.

check_skew decides whether a permutation of a group's elements is a
skew-morphism: psi(1) = 1 and for all x, y there is a single exponent
e = pi(x) with psi(x y) = psi(x) psi^e(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter

from .blocktrans import CutPoints
from .perms import (
    ExtendedPermutation,
    Permutation,
    alpha_power,
    identity,
    lift,
    restrict,
    reverse,
    sym_group,
)


def toric_f(p: Permutation, r: int) -> Permutation:
    """Toric shift of p by r, computed pointwise."""
    n = p.n
    m = n + 1
    ext = (0,) + p.image
    pr = ext[r % m]
    return Permutation(tuple((ext[(r + t) % m] - pr) % m for t in range(1, n + 1)))


def toric_f_conj(p: Permutation, r: int) -> Permutation:
    """Toric shift of p by r, computed by conjugating the lift with rotations."""
    n = p.n
    m = n + 1
    pr = lift(p)(r % m)
    e = alpha_power(n, m - pr).compose(lift(p)).compose(alpha_power(n, r))
    return restrict(e)


def reverse_g(p: Permutation) -> Permutation:
    """Reverse map, computed pointwise: (g(p))_t = n+1 - p_{n+1-t}."""
    n = p.n
    img = p.image
    return Permutation(tuple(n + 1 - img[n - t] for t in range(1, n + 1)))


def reverse_g_conj(p: Permutation) -> Permutation:
    """Reverse map, computed by conjugating the lift with [0 w]."""
    lw = lift(reverse(p.n))
    return restrict(lw.compose(lift(p)).compose(lw))


def bar_f(p: Permutation, r: int) -> Permutation:
    """Inverse-conjugated toric shift: bar_f_r(p) = (f_r(p^-1))^-1."""
    return toric_f(p.inverse(), r).inverse()


def bar_f_conj(p: Permutation, r: int) -> Permutation:
    """bar_f_r via rotations: [0 rho] = alpha^{n+1-r} o [0 p] o alpha^{(p^-1)_r}."""
    n = p.n
    m = n + 1
    s = lift(p.inverse())(r % m)
    e = alpha_power(n, m - r % m).compose(lift(p)).compose(alpha_power(n, s))
    return restrict(e)


def bt_image_closed_form(c: CutPoints, which: str) -> CutPoints:
    """Cut points of the image of s(i,j,k) under f, bar_f, or g.

    f:     (i-1, j-1, k-1) if i > 0, else (k-j-1, n-j, n)
    bar_f: (i-1, j-1, k-1) if i > 0, else (j-1, k-1, n)
    g:     (n-k, n-j, n-i)
    """
    i, j, k, n = c.i, c.j, c.k, c.n
    if which == "f":
        return CutPoints(i - 1, j - 1, k - 1, n) if i > 0 else CutPoints(k - j - 1, n - j, n, n)
    if which == "bar_f":
        return CutPoints(i - 1, j - 1, k - 1, n) if i > 0 else CutPoints(j - 1, k - 1, n, n)
    if which == "g":
        return CutPoints(n - k, n - j, n - i, n)
    raise ValueError(f"unknown map {which!r}; expected 'f', 'bar_f', or 'g'")


def toric_class(p: Permutation) -> frozenset[Permutation]:
    """Orbit of p under all toric shifts f_0, ..., f_n."""
    return frozenset(toric_f(p, r) for r in range(p.n + 1))


def toric_class_stats(n: int) -> tuple[int, int, dict[int, int]]:
    """(number of classes, number of singleton classes, size histogram)."""
    seen: set[Permutation] = set()
    classes = singletons = 0
    histogram: dict[int, int] = {}
    for p in sym_group(n):
        if p in seen:
            continue
        orbit = toric_class(p)
        seen |= orbit
        classes += 1
        size = len(orbit)
        histogram[size] = histogram.get(size, 0) + 1
        if size == 1:
            singletons += 1
    return classes, singletons, histogram


def singleton_toric_class_count(n: int) -> int:
    return toric_class_stats(n)[1]


def euler_phi(m: int) -> int:
    from math import gcd

    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


# ---------------------------------------------------------------------------
# The dihedral group generated by bar_f and g.


@dataclass(frozen=True)
class DihedralElement:
    """Normal form bar_f_r o g^refl of an element of the group <bar_f, g>.

    The group has order 2(n+1) with relations bar_f^(n+1) = id, g^2 = id,
    and g o bar_f_r o g = bar_f_{n+1-r}.
    """

    r: int
    refl: int
    n: int

    def __post_init__(self):
        if not 0 <= self.r <= self.n:
            raise ValueError(f"rotation exponent {self.r} outside 0..{self.n}")
        if self.refl not in (0, 1):
            raise ValueError(f"reflection bit must be 0 or 1, got {self.refl}")

    def __str__(self) -> str:
        return f"t^{self.r}*g" if self.refl else f"t^{self.r}"


def dihedral_identity(n: int) -> DihedralElement:
    return DihedralElement(0, 0, n)


def dihedral_elements(n: int) -> list[DihedralElement]:
    """All 2(n+1) elements, rotations first."""
    return [DihedralElement(r, s, n) for s in (0, 1) for r in range(n + 1)]


def dihedral_compose(a: DihedralElement, b: DihedralElement) -> DihedralElement:
    """Normal form of a o b (apply b first)."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    m = a.n + 1
    if a.refl == 0:
        return DihedralElement((a.r + b.r) % m, b.refl, a.n)
    # g absorbs the rotation on its right: g o bar_f_r = bar_f_{-r} o g
    return DihedralElement((a.r - b.r) % m, 1 - b.refl, a.n)


def dihedral_inverse(a: DihedralElement) -> DihedralElement:
    if a.refl:
        return a
    return DihedralElement((-a.r) % (a.n + 1), 0, a.n)


def apply_dihedral(d: DihedralElement, p: Permutation) -> Permutation:
    """Apply the map bar_f_r o g^refl to p (g first when refl is set)."""
    if d.n != p.n:
        raise ValueError(f"degree mismatch: {d.n} vs {p.n}")
    q = reverse_g(p) if d.refl else p
    return bar_f(q, d.r)


# ---------------------------------------------------------------------------
# The product rule mixing left translations with bar_f, and its image in the
# extended symmetric group.


def compose_lh_barf(
    h: Permutation, r: int, k: Permutation, u: int
) -> tuple[Permutation, int]:
    """Normal form of (L_h o bar_f_r) o (L_k o bar_f_u).

    Equals L_d o bar_f_e with d = h o bar_f_r(k) and e = u + (k^-1)_r.
    """
    if h.n != k.n:
        raise ValueError(f"degree mismatch: {h.n} vs {k.n}")
    m = h.n + 1
    e = (u + lift(k.inverse())(r % m)) % m
    return h.compose(bar_f(k, r)), e


def apply_lh_barf(h: Permutation, r: int, p: Permutation) -> Permutation:
    """(L_h o bar_f_r)(p) = h o bar_f_r(p)."""
    return h.compose(bar_f(p, r))


def phi_iso(h: Permutation, r: int) -> ExtendedPermutation:
    """Image [0 h] o alpha^{n+1-r} of L_h o bar_f_r in the extended group.

    This assignment is an isomorphism onto the symmetric group of the
    extended point set {0, ..., n}.
    """
    n = h.n
    m = n + 1
    return lift(h).compose(alpha_power(n, m - r % m))


def skew_identity_bar_f(
    rho: Permutation, pi: Permutation, r: int
) -> tuple[Permutation, Permutation, int]:
    """Both sides of bar_f_r(rho o pi) = bar_f_r(rho) o bar_f_s(pi), s = (rho^-1)_r."""
    if rho.n != pi.n:
        raise ValueError(f"degree mismatch: {rho.n} vs {pi.n}")
    m = rho.n + 1
    s = lift(rho.inverse())(r % m)
    lhs = bar_f(rho.compose(pi), r)
    rhs = bar_f(rho, r).compose(bar_f(pi, s))
    return lhs, rhs, s


# ---------------------------------------------------------------------------
# Skew-morphism checking over an explicit element table.


@dataclass(frozen=True)
class SkewMorphismWitness:
    """A verified skew-morphism over an element table.

    psi maps element indices to element indices, order is its order as a
    permutation of the table, and pi_power[i] is the exponent attached to
    elements[i] in psi(x y) = psi(x) psi^pi(x)(y).
    """

    elements: tuple[Permutation, ...]
    psi: tuple[int, ...]
    order: int
    pi_power: tuple[int, ...]

    def index_of(self, p: Permutation) -> int:
        return self._index()[p.image]

    def _index(self) -> dict[tuple[int, ...], int]:
        cached = getattr(self, "_idx", None)
        if cached is None:
            cached = {q.image: i for i, q in enumerate(self.elements)}
            object.__setattr__(self, "_idx", cached)
        return cached

    def apply(self, p: Permutation) -> Permutation:
        return self.elements[self.psi[self.index_of(p)]]

    def pi_power_of(self, p: Permutation) -> int:
        return self.pi_power[self.index_of(p)]


def check_skew(elements, psi) -> SkewMorphismWitness | None:
    """Decide whether psi (an index map over elements) is a skew-morphism.

    Returns a witness carrying the power function, or None.  A tie between
    two distinct exponents cannot happen (distinct powers of psi differ as
    maps); it is guarded as an internal error all the same.
    """
    elements = tuple(elements)
    psi = tuple(psi)
    g = len(elements)
    if sorted(psi) != list(range(g)):
        raise ValueError("psi is not a bijection of the element table")
    images = [p.image for p in elements]
    idx = {img: i for i, img in enumerate(images)}
    if len(idx) != g:
        raise ValueError("element table has repeats")
    n = elements[0].n
    ident = tuple(range(1, n + 1))
    ident_i = idx[ident]
    if psi[ident_i] != ident_i:
        return None
    if g == 1:
        return SkewMorphismWitness(elements, psi, 1, (0,))

    # Powers of psi; the loop closes exactly at the order.
    powers = [tuple(range(g))]
    cur = psi
    while cur != powers[0]:
        powers.append(cur)
        cur = tuple(psi[x] for x in cur)
    order = len(powers)

    # Probe point on a longest cycle of psi, to cut the exponent candidates.
    best_probe, best_len = 0, 0
    seen = [False] * g
    for start in range(g):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = psi[x]
            length += 1
        if length > best_len:
            best_probe, best_len = start, length

    # Left-multiplication rows: row(x)[iy] = index of x o y.  The getter for
    # y picks the entries of x in one C call, which matters once g is in the
    # thousands (two full rows per element below).
    getters = [itemgetter(*(v - 1 for v in y)) for y in images]

    def mult_row(img):
        return [idx[get(img)] for get in getters]

    pi_power = [0] * g
    for ix in range(g):
        row_x = mult_row(images[ix])
        mult_px = mult_row(images[psi[ix]])
        lhs = [psi[z] for z in row_x]
        candidates = [
            e for e in range(order) if lhs[best_probe] == mult_px[powers[e][best_probe]]
        ]
        valid = [
            e
            for e in candidates
            if all(lhs[iy] == mult_px[powers[e][iy]] for iy in range(g))
        ]
        if not valid:
            return None
        if len(valid) > 1:
            raise RuntimeError(f"ambiguous exponent for element {elements[ix]}")
        pi_power[ix] = valid[0]

    return SkewMorphismWitness(elements, psi, order, tuple(pi_power))


def skew_witness_for_map(n: int, fn) -> SkewMorphismWitness | None:
    """check_skew for a callable map on the full symmetric group of degree n."""
    elements = sym_group(n)
    idx = {p.image: i for i, p in enumerate(elements)}
    psi = tuple(idx[fn(p).image] for p in elements)
    return check_skew(elements, psi)


@lru_cache(maxsize=32)
def bar_f_witness(n: int, r: int) -> SkewMorphismWitness | None:
    """Skew-morphism witness for bar_f_r on degree n, when it is one."""
    return skew_witness_for_map(n, lambda p: bar_f(p, r))
