"""Deciding convertibility between finite-set processes and building witnesses.

A process ``f`` converts to ``g`` when ``g`` (padded with some junk output
``j``) can be recovered from ``f`` by running it alongside an untouched
auxiliary system ``Z`` and wiring it up with free pre- and post-processing:

    xi2 . (f + 1_Z) . xi1  =  g + j

with ``xi1 : dom(g) + dom(j) -> dom(f) + Z`` and
``xi2 : cod(f) + Z -> cod(g) + cod(j)`` drawn from the free subtheory.  Two
free subtheories are supported: all bijections and all injections.

Convertibility is characterized by fiber statistics.  With bijections free,
``f`` converts to ``g`` exactly when the multiplicity profile of ``f``
dominates that of ``g`` away from index 1 (singleton fibers are exactly what
padding with identities can create).  With injections free, domination of the
tail profiles away from indices 0 and 1 is the criterion (injections can also
invent fresh unhit outputs).  :func:`decide` applies the criterion;
:func:`witness` builds an explicit ``(Z, xi1, xi2, j)`` tuple realizing it,
and :func:`check_witness` replays the defining equation.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from .finset import (
    FinFun,
    FinSet,
    FormatError,
    Relation,
    compose,
    disjoint_union,
    enumerate_bijections,
    enumerate_injections,
    finfun_from_dict,
    finfun_to_dict,
    identity,
    is_bijection,
    is_injection,
    relation_from_dict,
    relation_to_dict,
)
from .profiles import Profile, gamma_profile, phi_profile, realize_profile


class NotConvertibleError(ValueError):
    """Raised when a witness is requested for a pair that fails :func:`decide`."""


class TheoryVariant(enum.Enum):
    """Which free subtheory the conversion wiring may use."""

    SET_BIJ = "set-bij"
    SET_INJ = "set-inj"

    @property
    def excluded_indices(self) -> frozenset[int]:
        """Profile indices that free padding can change, hence carry no information."""
        return frozenset({1}) if self is TheoryVariant.SET_BIJ else frozenset({0, 1})

    def profile(self, f: FinFun) -> Profile:
        """The classifying fiber statistic for this variant."""
        return phi_profile(f) if self is TheoryVariant.SET_BIJ else gamma_profile(f)

    def is_free(self, f: FinFun) -> bool:
        return is_bijection(f) if self is TheoryVariant.SET_BIJ else is_injection(f)

    def free_morphisms(self, dom: FinSet | int, cod: FinSet | int) -> Iterator[FinFun]:
        if self is TheoryVariant.SET_BIJ:
            return enumerate_bijections(dom, cod)
        return enumerate_injections(dom, cod)


@dataclass(frozen=True)
class Witness:
    """The data of one conversion: auxiliary system, free wirings, junk output."""

    Z: FinSet
    xi1: FinFun | Relation
    xi2: FinFun | Relation
    j: FinFun | Relation


def normal_form(variant: TheoryVariant, f: FinFun) -> Profile:
    """The complete invariant of ``f``'s convertibility class."""
    return variant.profile(f).restrict(variant.excluded_indices)


def decide(variant: TheoryVariant, f: FinFun, g: FinFun) -> bool:
    """Whether ``f`` converts to ``g``: pointwise dominance of normal forms."""
    return normal_form(variant, f) >= normal_form(variant, g)


def equivalent(variant: TheoryVariant, f: FinFun, g: FinFun) -> bool:
    """Mutual convertibility; equivalently, equality of normal forms."""
    return decide(variant, f, g) and decide(variant, g, f)


def representative(variant: TheoryVariant, form: Profile) -> FinFun:
    """A canonical function whose normal form is ``form``.

    Raises ValueError when no function has that normal form.  Multiplicity
    forms only need to avoid index 1; tail forms must in addition be
    non-increasing, since a fiber of size 5 is also a fiber of size 4.
    """
    bad = set(form.support) & set(variant.excluded_indices)
    if bad:
        raise ValueError(f"normal form may not mention excluded indices {sorted(bad)}")
    if variant is TheoryVariant.SET_BIJ:
        return realize_profile(form)
    if not form.support:
        return realize_profile(form)
    multiplicities: dict[int, int] = {}
    for i in range(2, max(form.support) + 1):
        step = form[i] - form[i + 1]
        if step < 0:
            raise ValueError(
                f"tail counts must be non-increasing, got {form[i]} at {i} "
                f"but {form[i + 1]} at {i + 1}"
            )
        multiplicities[i] = step
    return realize_profile(Profile(multiplicities))


def _match_fibers(
    F: FinFun, G: FinFun, descending: bool
) -> tuple[list[int], list[int]]:
    """Pair codomain points of ``F`` and ``G`` fiber by fiber.

    Returns (xi2_map, preimage pools) where xi2_map sends each codomain point
    of ``F`` to its partner in ``G``.  Ordering is by fiber size (ties by
    lowest index) so the pairing is deterministic.
    """
    f_sizes = [0] * F.cod.size
    for y in F.map:
        f_sizes[y] += 1
    g_sizes = [0] * G.cod.size
    for b in G.map:
        g_sizes[b] += 1
    sign = -1 if descending else 1
    f_order = sorted(range(F.cod.size), key=lambda y: (sign * f_sizes[y], y))
    g_order = sorted(range(G.cod.size), key=lambda b: (sign * g_sizes[b], b))
    xi2_map = [0] * F.cod.size
    for y, b in zip(f_order, g_order):
        assert (f_sizes[y] == g_sizes[b]) if not descending else (f_sizes[y] >= g_sizes[b])
        xi2_map[y] = b
    return xi2_map, f_sizes


def _route_inputs(F: FinFun, G: FinFun, xi2_map: list[int]) -> list[int]:
    """Pick ``xi1`` sending each input of ``G`` into the matched fiber of ``F``.

    Within a fiber the least not-yet-used preimage is taken, so the result is
    deterministic and injective.
    """
    xi2_inverse = {b: y for y, b in enumerate(xi2_map)}
    pools: dict[int, list[int]] = {y: [] for y in range(F.cod.size)}
    for x in range(F.dom.size - 1, -1, -1):
        pools[F.map[x]].append(x)  # reversed, so pop() yields ascending order
    xi1_map = []
    for a in range(G.dom.size):
        y = xi2_inverse[G.map[a]]
        xi1_map.append(pools[y].pop())
    return xi1_map


def _witness_bij(f: FinFun, g: FinFun) -> Witness:
    phi_f, phi_g = phi_profile(f), phi_profile(g)
    deficit = {
        i: phi_f[i] - phi_g[i]
        for i in set(phi_f.support) | set(phi_g.support)
    }
    if deficit.get(1, 0) >= 0:
        z = FinSet(0)
        j = realize_profile(Profile(deficit))
    else:
        # not enough singleton fibers in f: pad with exactly the identities missing
        z = FinSet(phi_g[1] - phi_f[1])
        j = realize_profile(Profile({i: n for i, n in deficit.items() if i != 1}))
    F = disjoint_union(f, identity(z))
    G = disjoint_union(g, j)
    xi2_map, _ = _match_fibers(F, G, descending=False)
    xi1_map = _route_inputs(F, G, xi2_map)
    return Witness(
        z,
        FinFun(G.dom, F.dom, tuple(xi1_map)),
        FinFun(F.cod, G.cod, tuple(xi2_map)),
        j,
    )


def _witness_inj(f: FinFun, g: FinFun) -> Witness:
    gamma_f, gamma_g = gamma_profile(f), gamma_profile(g)
    # Z covers both the codomain gap and any shortfall in hit outputs; D then
    # balances the bijection between the padded codomains.
    z = FinSet(max(0, g.cod.size - f.cod.size, gamma_g[1] - gamma_f[1]))
    d = FinSet(f.cod.size + z.size - g.cod.size)
    j = FinFun(FinSet(0), d, ())
    F = disjoint_union(f, identity(z))
    G = disjoint_union(g, j)
    xi2_map, _ = _match_fibers(F, G, descending=True)
    xi1_map = _route_inputs(F, G, xi2_map)
    return Witness(
        z,
        FinFun(G.dom, F.dom, tuple(xi1_map)),
        FinFun(F.cod, G.cod, tuple(xi2_map)),
        j,
    )


def witness(variant: TheoryVariant, f: FinFun, g: FinFun) -> Witness:
    """An explicit conversion from ``f`` to ``g``; requires ``decide`` to hold.

    With bijections free, the junk ``j`` realizes the profile surplus of
    ``f`` over ``g`` and ``Z`` supplies any missing singleton fibers.  With
    injections free, ``j`` is output-only: ``Z`` and ``cod(j)`` pad the two
    codomains to a common size and ``xi2`` matches fibers largest-first so
    every fiber of ``g`` fits inside its donor.
    """
    if not decide(variant, f, g):
        raise NotConvertibleError(
            f"{f!r} does not convert to {g!r} under {variant.value}"
        )
    if variant is TheoryVariant.SET_BIJ:
        return _witness_bij(f, g)
    return _witness_inj(f, g)


def check_witness(
    variant: TheoryVariant, f: FinFun, g: FinFun, w: Witness
) -> bool:
    """Replay the defining equation; False on any malformed or failing part."""
    if not (
        isinstance(w.Z, FinSet)
        and isinstance(w.xi1, FinFun)
        and isinstance(w.xi2, FinFun)
        and isinstance(w.j, FinFun)
    ):
        return False
    if w.xi1.dom.size != g.dom.size + w.j.dom.size:
        return False
    if w.xi1.cod.size != f.dom.size + w.Z.size:
        return False
    if w.xi2.dom.size != f.cod.size + w.Z.size:
        return False
    if w.xi2.cod.size != g.cod.size + w.j.cod.size:
        return False
    if not (variant.is_free(w.xi1) and variant.is_free(w.xi2)):
        return False
    left = compose(w.xi2, compose(disjoint_union(f, identity(w.Z)), w.xi1))
    return left == disjoint_union(g, w.j)


# -- wire format ------------------------------------------------------------
#
# {"Z": n, "xi1": <morphism>, "xi2": <morphism>, "j": <morphism>}


def witness_to_dict(w: Witness) -> dict:
    encode = finfun_to_dict if isinstance(w.xi1, FinFun) else relation_to_dict
    return {
        "Z": w.Z.size,
        "xi1": encode(w.xi1),
        "xi2": encode(w.xi2),
        "j": encode(w.j),
    }


def witness_from_dict(data: object, relational: bool = False) -> Witness:
    if not isinstance(data, dict):
        raise FormatError("expected a JSON object with fields 'Z', 'xi1', 'xi2', 'j'")
    for field in ("Z", "xi1", "xi2", "j"):
        if field not in data:
            raise FormatError(f"missing field '{field}'")
    z = data["Z"]
    if not isinstance(z, int) or isinstance(z, bool) or z < 0:
        raise FormatError("field 'Z' must be a non-negative integer")
    decode = relation_from_dict if relational else finfun_from_dict
    parts = {}
    for field in ("xi1", "xi2", "j"):
        try:
            parts[field] = decode(data[field])
        except FormatError as exc:
            raise FormatError(f"field '{field}': {exc}") from None
    return Witness(FinSet(z), parts["xi1"], parts["xi2"], parts["j"])
