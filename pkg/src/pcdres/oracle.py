"""Brute-force conversion search, independent of the profile criteria.

Where :mod:`pcdres.convert` decides convertibility through fiber statistics,
this module answers the same question by direct search: enumerate candidate
auxiliary sizes ``Z``, junk shapes ``C -> D``, and free wirings, and test the
defining equation

    xi2 . (f (x) 1_Z) . xi1  =  g (x) j

literally.  Agreement between the two routes on exhaustive small slices is
the main correctness evidence for both.

The search scans ``Z`` ascending, then ``C``, then ``xi1`` in enumeration
order; for each ``xi1`` the discarding side is resolved with the smallest
feasible ``D`` and the lexicographically least ``xi2``, so the returned
witness is the first one in that fixed order.  Function-based theories solve
for ``xi2`` by constraint propagation (each point of ``cod(f) + Z`` has at
most one admissible image, forced by the equation); the relational theory
falls back to plain enumeration of free morphisms.

Everything here also works for the relational theory over cartesian
products, whose free morphisms are graphs of functions.  That theory orders
trivially: :func:`relx_convert` returns its closed-form witness.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .convert import TheoryVariant, Witness
from .finset import (
    FinFun,
    FinSet,
    Relation,
    compose,
    disjoint_union,
    enumerate_functions,
    finfun_to_dict,
    identity,
    is_fun_graph,
    rel_compose,
    rel_identity,
    rel_of_fun,
    rel_product,
    relation_to_dict,
)


@dataclass(frozen=True)
class SearchBounds:
    """Caps on the auxiliary system and junk sizes explored by the search."""

    max_z: int
    max_c: int
    max_d: int

    def __post_init__(self) -> None:
        for field in ("max_z", "max_c", "max_d"):
            value = getattr(self, field)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{field} must be a non-negative integer")


def default_bounds(f, g) -> SearchBounds:
    """Bounds wide enough to contain the constructive witnesses at these sizes."""
    combined = f.dom.size + f.cod.size + g.dom.size + g.cod.size
    return SearchBounds(max(3, g.cod.size), combined, combined)


@lru_cache(maxsize=None)
def _free_funs(variant: TheoryVariant, dom_size: int, cod_size: int) -> tuple[FinFun, ...]:
    return tuple(variant.free_morphisms(dom_size, cod_size))


@lru_cache(maxsize=None)
def _fun_graphs(dom_size: int, cod_size: int) -> tuple[Relation, ...]:
    return tuple(rel_of_fun(f) for f in enumerate_functions(dom_size, cod_size))


class TheoryInstance:
    """Category operations plus a free subtheory, enough to run the search."""

    name: str

    def identity(self, x: FinSet):
        raise NotImplementedError

    def compose(self, late, early):
        raise NotImplementedError

    def tensor(self, f, g):
        raise NotImplementedError

    def obj_tensor(self, x: FinSet, y: FinSet) -> FinSet:
        raise NotImplementedError

    def morphisms(self, dom: FinSet, cod: FinSet):
        """All processes of the theory between the given objects."""
        raise NotImplementedError

    def free_morphisms(self, dom: FinSet, cod: FinSet):
        raise NotImplementedError

    def is_free(self, m) -> bool:
        raise NotImplementedError

    def split_tensor(self, h, g, c_size: int, d_size: int):
        """Recover ``j`` with ``h = g (x) j``, or None if ``h`` does not split."""
        raise NotImplementedError

    def solve_discard(self, m, g, c_size: int, max_d: int):
        """Free ``xi2`` with ``xi2 . m = g (x) j`` for some ``j``, or None.

        Default: enumerate free candidates for each junk codomain size.
        """
        for d in range(max_d + 1):
            target = self.obj_tensor(g.cod, FinSet(d))
            for xi2 in self.free_morphisms(m.cod, target):
                h = self.compose(xi2, m)
                j = self.split_tensor(h, g, c_size, d)
                if j is not None:
                    return xi2, j
        return None


class SetTheory(TheoryInstance):
    """Finite functions under disjoint union, with bijections or injections free."""

    def __init__(self, variant: TheoryVariant) -> None:
        self.variant = variant
        self.name = variant.value

    def identity(self, x: FinSet) -> FinFun:
        return identity(x)

    def compose(self, late: FinFun, early: FinFun) -> FinFun:
        return compose(late, early)

    def tensor(self, f: FinFun, g: FinFun) -> FinFun:
        return disjoint_union(f, g)

    def obj_tensor(self, x: FinSet, y: FinSet) -> FinSet:
        return FinSet(x.size + y.size)

    def morphisms(self, dom: FinSet, cod: FinSet):
        return enumerate_functions(dom, cod)

    def free_morphisms(self, dom: FinSet, cod: FinSet):
        return iter(_free_funs(self.variant, dom.size, cod.size))

    def is_free(self, m: FinFun) -> bool:
        return self.variant.is_free(m)

    def split_tensor(self, h: FinFun, g: FinFun, c_size: int, d_size: int):
        n_a, n_b = g.dom.size, g.cod.size
        if h.dom.size != n_a + c_size or h.cod.size != n_b + d_size:
            return None
        if h.map[:n_a] != g.map:
            return None
        tail = h.map[n_a:]
        if any(v < n_b for v in tail):
            return None
        return FinFun(FinSet(c_size), FinSet(d_size), tuple(v - n_b for v in tail))

    def solve_discard(self, m: FinFun, g: FinFun, c_size: int, max_d: int):
        # The equation pins xi2 pointwise on the image of m: points hit from
        # the g-block must land exactly on g's output, points hit only from
        # the junk block must land in the D-block, all others are free.
        n_a, n_b = g.dom.size, g.cod.size
        n_mid = m.cod.size
        forced: dict[int, int] = {}
        must_d: set[int] = set()
        for i, t in enumerate(m.map):
            if i < n_a:
                b = g.map[i]
                if t in must_d:
                    return None
                prev = forced.get(t)
                if prev is None:
                    forced[t] = b
                elif prev != b:
                    return None
            else:
                if t in forced:
                    return None
                must_d.add(t)
        values = list(forced.values())
        if len(set(values)) != len(values):
            return None
        if self.variant is TheoryVariant.SET_BIJ:
            d = n_mid - n_b
            if d < 0 or d > max_d or len(must_d) > d:
                return None
        else:
            d = max(0, n_mid - n_b, len(must_d))
            if d > max_d:
                return None
        used = set(values)
        free_d = d  # forced targets all sit in the g block
        must_left = len(must_d)
        xi2_map = [0] * n_mid
        for t in range(n_mid):
            if t in forced:
                xi2_map[t] = forced[t]
            elif t in must_d:
                slot = next(v for v in range(n_b, n_b + d) if v not in used)
                xi2_map[t] = slot
                used.add(slot)
                free_d -= 1
                must_left -= 1
            else:
                choice = None
                for v in range(n_b + d):
                    if v in used:
                        continue
                    if v >= n_b and free_d - 1 < must_left:
                        continue  # would starve a junk-block point still to come
                    choice = v
                    break
                if choice is None:
                    return None
                xi2_map[t] = choice
                used.add(choice)
                if choice >= n_b:
                    free_d -= 1
        xi2 = FinFun(m.cod, FinSet(n_b + d), tuple(xi2_map))
        j = FinFun(
            FinSet(c_size),
            FinSet(d),
            tuple(xi2_map[m.map[n_a + i]] - n_b for i in range(c_size)),
        )
        return xi2, j


class RelTimesTheory(TheoryInstance):
    """Relations under cartesian product, with graphs of functions free."""

    name = "rel-times"

    def identity(self, x: FinSet) -> Relation:
        return rel_identity(x)

    def compose(self, late: Relation, early: Relation) -> Relation:
        return rel_compose(late, early)

    def tensor(self, f: Relation, g: Relation) -> Relation:
        return rel_product(f, g)

    def obj_tensor(self, x: FinSet, y: FinSet) -> FinSet:
        return FinSet(x.size * y.size)

    def morphisms(self, dom: FinSet, cod: FinSet):
        cells = dom.size * cod.size
        for bits in itertools.product((False, True), repeat=cells):
            matrix = tuple(
                bits[x * cod.size : (x + 1) * cod.size] for x in range(dom.size)
            )
            yield Relation(dom, cod, matrix)

    def free_morphisms(self, dom: FinSet, cod: FinSet):
        return iter(_fun_graphs(dom.size, cod.size))

    def is_free(self, m: Relation) -> bool:
        return is_fun_graph(m)

    def split_tensor(self, h: Relation, g: Relation, c_size: int, d_size: int):
        n_a, n_b = g.dom.size, g.cod.size
        if h.dom.size != n_a * c_size or h.cod.size != n_b * d_size:
            return None
        # read off the unique minimal candidate, then verify the product
        j_matrix = [[False] * d_size for _ in range(c_size)]
        for row, cells in enumerate(h.matrix):
            a, c = divmod(row, c_size)
            for col, hit in enumerate(cells):
                if not hit:
                    continue
                b, d = divmod(col, d_size)
                if not g.matrix[a][b]:
                    return None
                j_matrix[c][d] = True
        j = Relation(FinSet(c_size), FinSet(d_size), tuple(tuple(r) for r in j_matrix))
        if rel_product(g, j) == h:
            return j
        return None


SET_BIJ_THEORY = SetTheory(TheoryVariant.SET_BIJ)
SET_INJ_THEORY = SetTheory(TheoryVariant.SET_INJ)
REL_TIMES_THEORY = RelTimesTheory()


def theory_for(variant: TheoryVariant) -> SetTheory:
    return SET_BIJ_THEORY if variant is TheoryVariant.SET_BIJ else SET_INJ_THEORY


def oracle_convertible(
    theory: TheoryInstance, f, g, bounds: SearchBounds | None = None
) -> Witness | None:
    """Search for a conversion witness within ``bounds``; None if none exists there."""
    if bounds is None:
        bounds = default_bounds(f, g)
    for z in range(bounds.max_z + 1):
        z_obj = FinSet(z)
        padded = theory.tensor(f, theory.identity(z_obj))
        for c in range(bounds.max_c + 1):
            source = theory.obj_tensor(g.dom, FinSet(c))
            for xi1 in theory.free_morphisms(source, padded.dom):
                m = theory.compose(padded, xi1)
                found = theory.solve_discard(m, g, c, bounds.max_d)
                if found is not None:
                    xi2, j = found
                    return Witness(z_obj, xi1, xi2, j)
    return None


def verify_witness(theory: TheoryInstance, f, g, w: Witness) -> bool:
    """Replay the defining equation inside the given theory; False if anything fails."""
    c_obj, d_obj = w.j.dom, w.j.cod
    if w.xi1.dom != theory.obj_tensor(g.dom, c_obj):
        return False
    if w.xi1.cod != theory.obj_tensor(f.dom, w.Z):
        return False
    if w.xi2.dom != theory.obj_tensor(f.cod, w.Z):
        return False
    if w.xi2.cod != theory.obj_tensor(g.cod, d_obj):
        return False
    if not (theory.is_free(w.xi1) and theory.is_free(w.xi2)):
        return False
    padded = theory.tensor(f, theory.identity(w.Z))
    left = theory.compose(w.xi2, theory.compose(padded, w.xi1))
    return left == theory.tensor(g, w.j)


def relx_convert(f: Relation, g: Relation) -> Witness:
    """The closed-form witness making the relational theory's order trivial.

    Pad with a one-point system, feed ``g`` nothing (its domain is crushed by
    the empty junk input), and discard all of ``f``'s output through a
    constant map.  Requires a function from ``cod(f)`` to ``cod(g)`` to
    exist, i.e. ``g`` has an output point or ``f`` has none.
    """
    if g.cod.size == 0 and f.cod.size > 0:
        raise ValueError(
            "precondition failed: g has empty codomain but f does not, "
            "so no constant discarding map exists"
        )
    xi1 = Relation(FinSet(0), f.dom, ())
    xi2 = rel_of_fun(FinFun(f.cod, g.cod, (0,) * f.cod.size))
    j = Relation(FinSet(0), FinSet(1), ())
    return Witness(FinSet(1), xi1, xi2, j)


def preorder_table(
    theory: TheoryInstance, size_limit: int, bounds: SearchBounds | None = None
) -> frozenset[tuple[object, object]]:
    """All oracle-confirmed conversions between processes up to ``size_limit``.

    The result is checked to be reflexive and transitively closed; bounds too
    tight to reproduce a composite conversion raise rather than repair.
    """
    ms = [
        m
        for x in range(size_limit + 1)
        for y in range(size_limit + 1)
        for m in theory.morphisms(FinSet(x), FinSet(y))
    ]
    table = set()
    for fm in ms:
        for gm in ms:
            if oracle_convertible(theory, fm, gm, bounds) is not None:
                table.add((fm, gm))
    for m in ms:
        if (m, m) not in table:
            raise RuntimeError(f"preorder table is not reflexive at {m!r}; widen bounds")
    for a, b in table:
        for c in ms:
            if (b, c) in table and (a, c) not in table:
                raise RuntimeError(
                    f"preorder table is not transitive at {a!r} -> {b!r} -> {c!r}; "
                    "widen bounds"
                )
    return frozenset(table)


def _morphism_key(m) -> tuple:
    if isinstance(m, FinFun):
        return (m.dom.size, m.cod.size, m.map)
    return (m.dom.size, m.cod.size, m.pairs())


def _morphism_json(m) -> str:
    data = finfun_to_dict(m) if isinstance(m, FinFun) else relation_to_dict(m)
    return json.dumps(data, separators=(",", ":"))


def preorder_lines(table: frozenset[tuple[object, object]]) -> list[str]:
    """One ``<f> >= <g>`` line per table entry, in a fixed sorted order."""
    ordered = sorted(table, key=lambda fg: (_morphism_key(fg[0]), _morphism_key(fg[1])))
    return [f"{_morphism_json(fm)} >= {_morphism_json(gm)}" for fm, gm in ordered]
