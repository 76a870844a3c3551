"""Exact enumeration of homogeneous monoids up to a length bound.

Elements are congruence classes of words. Because every relation preserves
word length, the congruence generated by the relations restricts to each
fixed-length word set, and a class is exactly the orbit of any of its words
under single-relation rewrites. Canonical representative: the shortlex-minimal
word of the class (generator order = declaration order).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    CancellativityError,
    ControlledMapError,
    IncompleteFiberError,
    LengthBoundError,
    ResourceLimitError,
)
from .presentations import MonoidPresentation, Word


@dataclass(frozen=True)
class MonoidElement:
    """A congruence class, identified by its shortlex-minimal word."""

    index: int
    word: Word

    @property
    def length(self) -> int:
        return len(self.word)


class EnumerationTable:
    """All monoid elements of length <= L, with exact multiplication.

    Immutable after construction; every query is pure. Construction walks
    lengths 1..L: each length-n class is reached as (length n-1 class) * g,
    and the full class is recovered by breadth-first rewriting.
    """

    def __init__(self, presentation: MonoidPresentation, L: int, max_words: int = 10**6):
        if L < 0:
            raise LengthBoundError("length bound must be nonnegative")
        self.presentation = presentation
        self.L = L
        self.max_words = max_words
        self.elements: list[MonoidElement] = []
        self.by_length: list[list[int]] = [[] for _ in range(L + 1)]
        self._succ: dict[tuple[int, int], int] = {}
        self._divisor_cache: dict[int, tuple[frozenset, frozenset]] = {}
        self._rewrites = []
        for lhs, rhs in presentation.relations:
            self._rewrites.append((lhs, rhs))
            self._rewrites.append((rhs, lhs))
        self._enumerate()

    # -- construction ------------------------------------------------------

    def _class_orbit(self, seed: Word) -> set[Word]:
        orbit = {seed}
        frontier = [seed]
        while frontier:
            w = frontier.pop()
            for u, v in self._rewrites:
                k = len(u)
                for i in range(len(w) - k + 1):
                    if w[i : i + k] == u:
                        w2 = w[:i] + v + w[i + k :]
                        if w2 not in orbit:
                            orbit.add(w2)
                            frontier.append(w2)
        return orbit

    def _enumerate(self):
        identity = MonoidElement(0, ())
        self.elements.append(identity)
        self.by_length[0].append(0)
        ngen = len(self.presentation.generators)
        total_words = 1
        for n in range(1, self.L + 1):
            seen: dict[Word, int] = {}
            for p_idx in self.by_length[n - 1]:
                p_word = self.elements[p_idx].word
                for g in range(ngen):
                    w = p_word + (g,)
                    idx = seen.get(w)
                    if idx is None:
                        orbit = self._class_orbit(w)
                        total_words += len(orbit)
                        if total_words > self.max_words:
                            raise ResourceLimitError(
                                "word count exceeded cap %d at length %d" % (self.max_words, n)
                            )
                        canon = min(orbit)
                        idx = len(self.elements)
                        self.elements.append(MonoidElement(idx, canon))
                        self.by_length[n].append(idx)
                        for w2 in orbit:
                            seen[w2] = idx
                    self._succ[(p_idx, g)] = idx
            # re-sort so indices within a length follow shortlex order
            order = sorted(self.by_length[n], key=lambda i: self.elements[i].word)
            if order != self.by_length[n]:
                remap = {old: new for new, old in zip(sorted(order), order)}
                new_elements = list(self.elements)
                for old, new in remap.items():
                    new_elements[new] = MonoidElement(new, self.elements[old].word)
                self.elements = new_elements
                self.by_length[n] = sorted(order)
                self._succ = {
                    (remap.get(p, p), g): remap.get(q, q) for (p, g), q in self._succ.items()
                }

    # -- identity and lookup ------------------------------------------------

    @property
    def fingerprint(self) -> tuple:
        return self.presentation.fingerprint

    @property
    def identity(self) -> MonoidElement:
        return self.elements[0]

    def counts(self) -> list[int]:
        """Number of elements at each length 0..L."""
        return [len(ids) for ids in self.by_length]

    def element(self, index: int) -> MonoidElement:
        return self.elements[index]

    def element_from_word(self, word: Word) -> MonoidElement:
        """Canonical element of an arbitrary word (length <= L)."""
        if len(word) > self.L:
            raise LengthBoundError("word of length %d exceeds bound %d" % (len(word), self.L))
        idx = 0
        for g in word:
            idx = self._succ[(idx, g)]
        return self.elements[idx]

    def element_from_str(self, text: str) -> MonoidElement:
        return self.element_from_word(self.presentation.parse_word(text))

    def str_of(self, x: MonoidElement) -> str:
        return self.presentation.word_str(x.word)

    def elements_up_to(self, L: int) -> list[MonoidElement]:
        if L > self.L:
            raise LengthBoundError("requested level %d exceeds bound %d" % (L, self.L))
        return [self.elements[i] for n in range(L + 1) for i in self.by_length[n]]

    # -- multiplication ------------------------------------------------------

    def multiply(self, x: MonoidElement, y: MonoidElement) -> MonoidElement:
        if x.length + y.length > self.L:
            raise LengthBoundError(
                "product length %d exceeds bound %d" % (x.length + y.length, self.L)
            )
        idx = x.index
        for g in y.word:
            idx = self._succ[(idx, g)]
        return self.elements[idx]

    def left_divides(self, p: MonoidElement, r: MonoidElement) -> MonoidElement | None:
        """Return q with r = p*q if it exists (unique by left cancellation)."""
        k = r.length - p.length
        if k < 0:
            return None
        for q_idx in self.by_length[k]:
            q = self.elements[q_idx]
            if self.multiply(p, q) == r:
                return q
        return None

    # -- divisor sets --------------------------------------------------------

    def _divisors(self, p: MonoidElement) -> tuple[frozenset, frozenset]:
        cached = self._divisor_cache.get(p.index)
        if cached is not None:
            return cached
        rights, lefts = set(), set()
        for k in range(p.length + 1):
            for q_idx in self.by_length[p.length - k]:
                q = self.elements[q_idx]
                for r_idx in self.by_length[k]:
                    r = self.elements[r_idx]
                    if self.multiply(q, r) == p:
                        rights.add(r)
                        lefts.add(q)
        result = (frozenset(rights), frozenset(lefts))
        self._divisor_cache[p.index] = result
        return result

    def right_divisors(self, p: MonoidElement) -> frozenset:
        """R_p = {r : p = q*r for some q}. Always contains the identity and p."""
        return self._divisors(p)[0]

    def left_divisors(self, p: MonoidElement) -> frozenset:
        """L_p = {q : p = q*r for some r}; in bijection with R_p."""
        return self._divisors(p)[1]

    # -- desk-scale witnesses -------------------------------------------------

    def check_cancellation(self):
        """Verify xy = xz => y = z and yx = zx => y = z on all cached products.

        Cancellativity is not decidable from a presentation in general; a
        failure here aborts downstream constructions.
        """
        for x in self.elements:
            seen_left: dict[int, int] = {}
            seen_right: dict[int, int] = {}
            for n in range(self.L - x.length + 1):
                for y_idx in self.by_length[n]:
                    y = self.elements[y_idx]
                    xy = self.multiply(x, y).index
                    if xy in seen_left and seen_left[xy] != y_idx:
                        raise CancellativityError(
                            "left cancellation fails at x=%s" % self.str_of(x)
                        )
                    seen_left[xy] = y_idx
                    yx = self.multiply(y, x).index
                    if yx in seen_right and seen_right[yx] != y_idx:
                        raise CancellativityError(
                            "right cancellation fails at x=%s" % self.str_of(x)
                        )
                    seen_right[yx] = y_idx

    def check_associativity(self):
        """(xy)z = x(yz) for all triples with |x|+|y|+|z| <= L."""
        for i in range(self.L + 1):
            for j in range(self.L + 1 - i):
                for k in range(self.L + 1 - i - j):
                    for x_idx, y_idx, z_idx in product(
                        self.by_length[i], self.by_length[j], self.by_length[k]
                    ):
                        x, y, z = self.elements[x_idx], self.elements[y_idx], self.elements[z_idx]
                        if self.multiply(self.multiply(x, y), z) != self.multiply(
                            x, self.multiply(y, z)
                        ):
                            raise CancellativityError(
                                "associativity fails at (%s, %s, %s)"
                                % (self.str_of(x), self.str_of(y), self.str_of(z))
                            )

    # -- common right multiples -----------------------------------------------

    def right_lcm_check(self, p: MonoidElement, q: MonoidElement) -> tuple[MonoidElement | None, dict]:
        """Inspect p*P intersect q*P within the length bound.

        Returns (lcm, report). lcm is the unique minimal generator of the
        intersection if one exists at this scale; the report records the
        verdict ("lcm", "empty-intersection", or "no-unique-minimum") and the
        bound used, since a larger bound could still change the answer.
        """
        def right_multiples(a: MonoidElement) -> set[int]:
            out = set()
            for n in range(self.L - a.length + 1):
                for x_idx in self.by_length[n]:
                    out.add(self.multiply(a, self.elements[x_idx]).index)
            return out

        common = right_multiples(p) & right_multiples(q)
        report = {"bound": self.L, "intersection_size": len(common)}
        if not common:
            report["verdict"] = "empty-intersection"
            return None, report
        min_len = min(self.elements[i].length for i in common)
        minimal = [self.elements[i] for i in sorted(common) if self.elements[i].length == min_len]
        for m in minimal:
            if common <= right_multiples(m):
                report["verdict"] = "lcm"
                report["lcm"] = self.str_of(m)
                return m, report
        report["verdict"] = "no-unique-minimum"
        return None, report


def enumerate_monoid(
    presentation: MonoidPresentation, L: int, max_words: int = 10**6
) -> EnumerationTable:
    """Build the exact enumeration table up to length L."""
    return EnumerationTable(presentation, L, max_words=max_words)


class ControlledMap:
    """A homomorphism P -> Q with finite fibers, given by generator images.

    Every generator image must have positive length, so |phi(x)| >= |x| and a
    fiber over q is complete once P is enumerated to length |q|. The relation
    check below is exactly the homomorphism condition for a presented monoid.
    """

    def __init__(self, source: EnumerationTable, target: EnumerationTable, gen_images):
        self.source = source
        self.target = target
        if len(gen_images) != len(source.presentation.generators):
            raise ControlledMapError("one image per source generator required")
        self.gen_images = tuple(gen_images)
        self.min_image_length = min(img.length for img in self.gen_images)
        if self.min_image_length < 1:
            raise ControlledMapError(
                "generator images must have length >= 1 (finite-fiber bookkeeping)"
            )
        for lhs, rhs in source.presentation.relations:
            if self._map_word(lhs) != self._map_word(rhs):
                raise ControlledMapError(
                    "images violate relation %s = %s"
                    % (source.presentation.word_str(lhs), source.presentation.word_str(rhs))
                )

    def _map_word(self, word: Word) -> MonoidElement:
        out = self.target.identity
        for g in word:
            out = self.target.multiply(out, self.gen_images[g])
        return out

    def __call__(self, x: MonoidElement) -> MonoidElement:
        return self._map_word(x.word)

    def fiber(self, q: MonoidElement) -> frozenset:
        """Complete finite fiber phi^{-1}(q)."""
        needed = q.length // self.min_image_length
        if needed > self.source.L:
            raise IncompleteFiberError(
                "source bound %d too small for fiber over length-%d element"
                % (self.source.L, q.length)
            )
        return frozenset(p for p in self.source.elements_up_to(needed) if self(p) == q)


def length_map(source: EnumerationTable, target: EnumerationTable) -> ControlledMap:
    """The length homomorphism P -> N (target must be the 1-generator free table)."""
    if len(target.presentation.generators) != 1 or target.presentation.relations:
        raise ControlledMapError("length map target must be the free monoid on one generator")
    one = target.elements[target.by_length[1][0]]
    return ControlledMap(source, target, [one] * len(source.presentation.generators))


def abelianization(source: EnumerationTable, target: EnumerationTable) -> ControlledMap:
    """Generator-wise map onto N^d (d = number of source generators).

    Valid only when the source relations hold in the commutative image, e.g.
    free and graph-commutation presentations; the constructor rejects others.
    """
    d = len(source.presentation.generators)
    if len(target.presentation.generators) != d:
        raise ControlledMapError("abelianization target must have one generator per source generator")
    images = [target.element_from_word((i,)) for i in range(d)]
    return ControlledMap(source, target, images)
