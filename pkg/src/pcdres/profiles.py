"""Fiber-counting profiles of finite functions.

The multiplicity profile of ``f`` records, for each ``i``, how many codomain
points have exactly ``i`` preimages; the tail profile records how many have
at least ``i``.  Both are finitely supported maps from naturals to naturals
and both are additive under disjoint union, which is what makes them useful
as conversion invariants.

Profiles are stored sparsely: an absent index means count zero, and a stored
count is never zero.  Addition and the pointwise order are the vector
operations on finitely supported sequences.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping

from .finset import FinFun, FinSet, FormatError


class Profile:
    """A finitely supported map from natural indices to natural counts."""

    __slots__ = ("_counts",)

    def __init__(
        self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()
    ) -> None:
        items = counts.items() if isinstance(counts, Mapping) else counts
        acc: dict[int, int] = {}
        for index, count in items:
            if not isinstance(index, int) or isinstance(index, bool) or index < 0:
                raise ValueError(f"profile index must be a natural number, got {index!r}")
            if not isinstance(count, int) or isinstance(count, bool) or count < 0:
                raise ValueError(f"profile count must be a natural number, got {count!r}")
            if count:
                acc[index] = acc.get(index, 0) + count
        # keep insertion order sorted so iteration and repr are deterministic
        object.__setattr__(self, "_counts", dict(sorted(acc.items())))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Profile is immutable")

    def __getitem__(self, index: int) -> int:
        return self._counts.get(index, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __bool__(self) -> bool:
        return bool(self._counts)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._counts.items())

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._counts)

    def __add__(self, other: Profile) -> Profile:
        if not isinstance(other, Profile):
            return NotImplemented
        merged = Counter(self._counts)
        merged.update(other._counts)
        return Profile(merged)

    def __ge__(self, other: Profile) -> bool:
        """Pointwise dominance over the union of supports."""
        if not isinstance(other, Profile):
            return NotImplemented
        return all(
            self[i] >= other[i] for i in set(self._counts) | set(other._counts)
        )

    def __le__(self, other: Profile) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return other.__ge__(self)

    def restrict(self, excluded: Iterable[int]) -> Profile:
        """Drop the given indices; the rest of the profile is unchanged."""
        excluded = frozenset(excluded)
        return Profile({i: n for i, n in self._counts.items() if i not in excluded})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        return f"Profile({self._counts})"


def _fiber_sizes(f: FinFun) -> list[int]:
    sizes = [0] * f.cod.size
    for y in f.map:
        sizes[y] += 1
    return sizes


def phi_profile(f: FinFun) -> Profile:
    """Multiplicity profile: index ``i`` counts codomain points with ``i`` preimages.

    Indices 0 and 1 participate like any other: unhit codomain points show up
    at index 0.

    >>> phi_profile(FinFun.from_map([0, 0, 1], 2))
    Profile({1: 1, 2: 1})
    """
    return Profile(Counter(_fiber_sizes(f)))


def gamma_profile(f: FinFun) -> Profile:
    """Tail profile: index ``i`` counts codomain points with at least ``i`` preimages.

    Index 0 is the codomain size.  Entries are non-increasing in ``i`` and
    ``gamma[i]`` equals the sum of ``phi[k]`` over ``k >= i``.

    >>> gamma_profile(identity_like := FinFun.from_map([0, 1], 2))
    Profile({0: 2, 1: 2})
    """
    sizes = _fiber_sizes(f)
    if not sizes:
        return Profile()
    by_size = Counter(sizes)
    tail: dict[int, int] = {}
    running = 0
    for i in range(max(sizes), -1, -1):
        running += by_size.get(i, 0)
        tail[i] = running
    return Profile(tail)


def realize_profile(profile: Profile) -> FinFun:
    """A canonical function whose multiplicity profile is ``profile``.

    Codomain points are laid out in blocks of increasing fiber size and the
    domain fills each fiber consecutively, so the zero-fiber points come
    first and the largest fibers land on the highest codomain indices.

    >>> realize_profile(Profile({2: 1})).map
    (0, 0)
    """
    entries: list[int] = []
    cod = 0
    for i, count in profile.items():
        for _ in range(count):
            entries.extend([cod] * i)
            cod += 1
    return FinFun(FinSet(len(entries)), FinSet(cod), tuple(entries))


# -- wire format ------------------------------------------------------------
#
# {"profile": {"0": 2, "2": 1}}   keys are decimal strings, ascending


def profile_to_dict(p: Profile) -> dict:
    return {"profile": {str(i): n for i, n in p.items()}}


def profile_from_dict(data: object) -> Profile:
    if not isinstance(data, dict) or "profile" not in data:
        raise FormatError("expected a JSON object with field 'profile'")
    raw = data["profile"]
    if not isinstance(raw, dict):
        raise FormatError("field 'profile' must be an object of index -> count")
    counts = {}
    for key, value in raw.items():
        if not isinstance(key, str) or not key.isdigit():
            raise FormatError(f"field 'profile' has non-numeric index {key!r}")
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise FormatError(f"field 'profile[{key}]' must be a non-negative integer")
        counts[int(key)] = counts.get(int(key), 0) + value
    return Profile(counts)
