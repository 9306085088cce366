"""Fibers of normal Galois covers: invariant sublattices and cover records.

A normal cover of the cusp with monodromy A decomposes into a degree-n cover
in the base and a fiberwise cover with fiber an A-invariant sublattice L
pinched between (A**n - I)Z^2 and Z^2.  This module enumerates those
lattices exactly, conjugates A onto each fiber, and packages the resulting
cycles as cover records for base degrees 1 through 4.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .cycles import Cycle, cycle_of, dual_cycle
from .intmath import divisors, factorize, is_prime, solve_quadratic_congruence
from .matrices import Mat2, conjugate, hermite_normal_form, index_formula, mul, power


@dataclass(frozen=True)
class Lattice2:
    """Finite-index sublattice of Z^2 in Hermite normal form.

    The basis columns are (x, 0) and (y, z) with x > 0, z > 0, 0 <= y < x;
    the normal form is unique per lattice, so equality is structural.
    """

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.x <= 0 or self.z <= 0 or not 0 <= self.y < self.x:
            raise ValueError(f"not a Hermite normal form triple: {(self.x, self.y, self.z)}")

    @property
    def index(self) -> int:
        return self.x * self.z

    @property
    def basis(self) -> Mat2:
        return Mat2(self.x, self.y, 0, self.z)

    @classmethod
    def from_basis(cls, m: Mat2) -> "Lattice2":
        return cls.from_columns(*m.columns())

    @classmethod
    def from_columns(cls, *columns: Sequence[int]) -> "Lattice2":
        h = hermite_normal_form(columns)
        return cls(h.a, h.b, h.d)

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.index, self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"<({self.x},0), ({self.y},{self.z})>"


FULL_LATTICE = Lattice2(1, 0, 1)


@dataclass(frozen=True)
class CoverRecord:
    """One normal Galois cover: base degree, fiber lattice, and its cycles."""

    base_degree: int
    fiber: Lattice2
    fiber_index: int
    induced: Mat2
    cover_monodromy: Mat2
    cycle: Cycle
    dual: Cycle

    def __post_init__(self) -> None:
        assert self.induced.det == 1
        assert self.fiber_index == self.fiber.index


def sublattices_of_index(d: int) -> list[Lattice2]:
    """Every sublattice of Z^2 of index exactly d; there are sigma(d) of them."""
    if d < 1:
        raise ValueError("index must be >= 1")
    out = []
    for x in divisors(d):
        z = d // x
        for y in range(x):
            out.append(Lattice2(x, y, z))
    return out


def contains(lat: Lattice2, m: Mat2) -> bool:
    """Whether both columns of m lie in the lattice."""
    for u, v in m.columns():
        if v % lat.z:
            return False
        if (u - (v // lat.z) * lat.y) % lat.x:
            return False
    return True


def contains_lattice(outer: Lattice2, inner: Lattice2) -> bool:
    return contains(outer, inner.basis)


def is_invariant(lat: Lattice2, a: Mat2) -> bool:
    """Whether A maps the lattice onto itself, i.e. the conjugate is integral."""
    return conjugate(a, lat.basis) is not None


def induced_action(lat: Lattice2, a: Mat2) -> Mat2:
    """A rewritten in the lattice basis: P^-1 A P for P the HNF basis."""
    out = conjugate(a, lat.basis)
    if out is None:
        raise ValueError(f"lattice {lat} is not invariant under the monodromy")
    return out


def prime_index_invariant_lattices(a: Mat2, ell: int) -> list[Lattice2]:
    """All A-invariant sublattices of prime index ell.

    Candidates are <(t,1),(ell,0)> for roots t of c t^2 + (d - a) t - b mod
    ell, plus <(1,0),(0,ell)> when c = 0 mod ell.  When A is scalar mod ell
    every t works and all ell + 1 lattices appear.
    """
    if not is_prime(ell):
        raise ValueError(f"index {ell} is not prime")
    a2, a1, a0 = a.c % ell, (a.d - a.a) % ell, (-a.b) % ell
    if a2 == 0 and a1 == 0 and a0 == 0:
        ts: Sequence[int] = range(ell)
    else:
        ts = solve_quadratic_congruence(a2, a1, a0, ell)
    out = [Lattice2(ell, t, 1) for t in ts]
    if a2 == 0:
        out.append(Lattice2(1, 0, ell))
    return sorted(out, key=Lattice2.sort_key)


def _shifted_lattice(parent: Lattice2, child: Lattice2) -> Lattice2:
    # child expressed in parent coordinates -> absolute lattice
    return Lattice2.from_basis(mul(parent.basis, child.basis))


def _sum_lattice(l1: Lattice2, l2: Lattice2) -> Lattice2:
    return Lattice2.from_columns(*l1.basis.columns(), *l2.basis.columns())


def _intersect_coprime(l1: Lattice2, l2: Lattice2) -> Lattice2:
    # For coprime indices m1, m2:  L1 cap L2 = m2*L1 + m1*L2.
    m1, m2 = l1.index, l2.index
    if m1 == 1:
        return l2
    if m2 == 1:
        return l1
    s1 = Lattice2(m2 * l1.x, m2 * l1.y, m2 * l1.z)
    s2 = Lattice2(m1 * l2.x, m1 * l2.y, m1 * l2.z)
    return _sum_lattice(s1, s2)


def _primary_part_lattices(a: Mat2, floor_lat: Lattice2, ell: int) -> list[Lattice2]:
    """A-invariant lattices between floor_lat and Z^2 with ell-power index.

    Walks down from Z^2; from each invariant lattice M the index-ell
    invariant sublattices of M and the scalar sublattice ell*M together
    reach every invariant lattice above the floor.
    """
    found = {FULL_LATTICE}
    frontier = [FULL_LATTICE]
    while frontier:
        m = frontier.pop()
        action = induced_action(m, a)
        children = [_shifted_lattice(m, c) for c in prime_index_invariant_lattices(action, ell)]
        children.append(Lattice2(ell * m.x, ell * m.y, ell * m.z))
        for child in children:
            if child not in found and contains_lattice(child, floor_lat):
                found.add(child)
                frontier.append(child)
    return sorted(found, key=Lattice2.sort_key)


def _index_factorization(trace: int, n: int) -> dict[int, int]:
    # Factor |2 - P_n(trace)| through its small algebraic factors for n <= 4.
    pieces = {
        1: [trace - 2],
        2: [trace - 2, trace + 2],
        3: [trace - 2, trace + 1, trace + 1],
        4: [trace, trace, trace - 2, trace + 2],
    }
    out: dict[int, int] = {}
    for piece in pieces.get(n, [index_formula(trace, n)]):
        for prime, exp in factorize(piece).items():
            out[prime] = out.get(prime, 0) + exp
    return out


def invariant_sublattices_between(a: Mat2, n: int) -> list[Lattice2]:
    """All A-invariant lattices L with (A**n - I)Z^2 <= L <= Z^2, inclusive.

    The quotient is split into prime-primary parts; invariant lattices are
    enumerated within each part and recombined by intersection, which keeps
    the search polynomial in the number of prime factors rather than in the
    total index.
    """
    if a.det != 1:
        raise ValueError("invariant_sublattices_between requires determinant 1")
    t = a.trace
    if t < 3:
        raise ValueError("not a cusp monodromy: trace < 3")
    an = power(a, n)
    kernel = Lattice2.from_columns((an.a - 1, an.c), (an.b, an.d - 1))
    assert kernel.index == index_formula(t, n)
    combos = [FULL_LATTICE]
    for ell, exp in sorted(_index_factorization(t, n).items()):
        floor_l = _sum_lattice(kernel, Lattice2(ell**exp, 0, ell**exp))
        part = _primary_part_lattices(a, floor_l, ell)
        combos = [_intersect_coprime(base, opt) for base in combos for opt in part]
    return sorted(set(combos), key=Lattice2.sort_key)


def _build_record(a: Mat2, n: int, lat: Lattice2) -> CoverRecord:
    ind = induced_action(lat, a)
    cover = power(ind, n)
    cyc = cycle_of(cover)
    return CoverRecord(
        base_degree=n,
        fiber=lat,
        fiber_index=lat.index,
        induced=ind,
        cover_monodromy=cover,
        cycle=cyc,
        dual=dual_cycle(cyc),
    )


def enumerate_covers(
    a: Mat2,
    max_degree: int = 4,
    *,
    half: bool = False,
    parallel: bool = False,
) -> list[CoverRecord]:
    """Cover records for every base degree 1..max_degree and invariant fiber.

    With half=True only one fiber of each dual pair (index <= sqrt of the
    total) is kept, which never changes the CI verdict.  With parallel=True
    the per-record work is fanned out to a thread pool; the output order is
    deterministic either way: degree, then fiber index, then HNF triple.
    """
    if not 1 <= max_degree <= 4:
        raise ValueError("base degree must lie in 1..4")
    tasks: list[tuple[int, Lattice2]] = []
    for n in range(1, max_degree + 1):
        total = index_formula(a.trace, n)
        for lat in invariant_sublattices_between(a, n):
            if half and lat.index * lat.index > total:
                continue
            tasks.append((n, lat))
    if parallel:
        with ThreadPoolExecutor() as pool:
            records = list(pool.map(lambda nl: _build_record(a, nl[0], nl[1]), tasks))
    else:
        records = [_build_record(a, n, lat) for n, lat in tasks]
    records.sort(key=lambda r: (r.base_degree, r.fiber_index, r.fiber.x, r.fiber.y, r.fiber.z))
    return records
