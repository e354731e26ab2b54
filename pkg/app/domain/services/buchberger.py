"""Buchberger's algorithm on raw term maps, for ideals and for submodules of free modules.

Terms of an ideal element are exponent vectors. Terms of a module element are
``(component, e_1, ..., e_n)``; only elements with equal leading components form
S-pairs, and the coprime-lead criterion is switched off because it does not hold
for modules. The chain criterion is applied in the Gebauer-Möller form.
"""

import heapq
import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from operator import add

from app.domain.value_objects.field import Coefficient, CoefficientField

logger = logging.getLogger(__name__)

Term = tuple[int, ...]
Terms = dict[Term, Coefficient]
SortKey = tuple[int, ...]


@dataclass
class _Element:
    terms: Terms
    lead: Term
    sugar: int


class Buchberger:
    """Incremental Buchberger engine.

    Args:
        field: Coefficient field.
        sort_key: Order on terms; ascending keys list terms from largest to smallest.
        module: Treat the first entry of each term as a free-module component.
        weights: Degree shift of each component (module mode only).
    """

    def __init__(
        self,
        field: CoefficientField,
        sort_key: Callable[[Term], SortKey],
        *,
        module: bool = False,
        weights: tuple[int, ...] = (),
    ) -> None:
        self._field = field
        self._sort_key = sort_key
        self._module = module
        self._weights = weights
        self._keys: dict[Term, SortKey] = {}
        self.elements: list[_Element] = []
        self._active: list[int] = []
        self._pairs: dict[tuple[int, int], tuple[int, SortKey]] = {}
        self._queue: list[tuple[int, SortKey, int, int]] = []
        self.reductions_to_zero = 0

    # --- Term arithmetic ---

    def key(self, t: Term) -> SortKey:
        k = self._keys.get(t)
        if k is None:
            k = self._sort_key(t)
            self._keys[t] = k
        return k

    def _divides(self, a: Term, b: Term) -> bool:
        if self._module:
            if a[0] != b[0]:
                return False
            return all(x <= y for x, y in zip(a[1:], b[1:], strict=True))
        return all(x <= y for x, y in zip(a, b, strict=True))

    def _lcm(self, a: Term, b: Term) -> Term:
        if self._module:
            return (a[0], *(max(x, y) for x, y in zip(a[1:], b[1:], strict=True)))
        return tuple(max(x, y) for x, y in zip(a, b, strict=True))

    def _shift(self, a: Term, b: Term) -> Term:
        """Exponent part of ``a / b`` (no component)."""
        if self._module:
            return tuple(x - y for x, y in zip(a[1:], b[1:], strict=True))
        return tuple(x - y for x, y in zip(a, b, strict=True))

    def _apply(self, m: Term, t: Term) -> Term:
        if self._module:
            return (t[0], *map(add, t[1:], m))
        return tuple(map(add, t, m))

    def _coprime(self, a: Term, b: Term) -> bool:
        return not self._module and not any(x and y for x, y in zip(a, b, strict=True))

    def degree(self, t: Term) -> int:
        if self._module:
            return self._weights[t[0]] + sum(t[1:])
        return sum(t)

    def _same_component(self, a: Term, b: Term) -> bool:
        return not self._module or a[0] == b[0]

    # --- Reduction ---

    def lead(self, terms: Terms) -> Term:
        return min(terms, key=self.key)

    def reduce(self, terms: Terms, reducers: Iterable[int] | None = None) -> Terms:
        """Full reduction of ``terms`` by the given elements (default: the active basis)."""
        pool = [self.elements[i] for i in (self._active if reducers is None else reducers)]
        field = self._field
        f = dict(terms)
        heap = [(self.key(t), t) for t in f]
        heapq.heapify(heap)
        remainder: Terms = {}
        while heap:
            _, t = heapq.heappop(heap)
            c = f.pop(t, None)
            if c is None:
                continue
            g = next((e for e in pool if self._divides(e.lead, t)), None)
            if g is None:
                remainder[t] = c
                continue
            m = self._shift(t, g.lead)
            for gt, gc in g.terms.items():
                if gt == g.lead:
                    continue
                nt = self._apply(m, gt)
                old = f.get(nt)
                value = field.mul(c, gc)
                if old is None:
                    f[nt] = field.neg(value)
                    heapq.heappush(heap, (self.key(nt), nt))
                else:
                    new = field.sub(old, value)
                    if new:
                        f[nt] = new
                    else:
                        del f[nt]
        return remainder

    def _monic(self, terms: Terms) -> tuple[Terms, Term]:
        lead = self.lead(terms)
        inv = self._field.inv(terms[lead])
        return {t: self._field.mul(c, inv) for t, c in terms.items()}, lead

    def _s_polynomial(self, i: int, j: int) -> tuple[Terms, int]:
        a, b = self.elements[i], self.elements[j]
        lcm = self._lcm(a.lead, b.lead)
        ma, mb = self._shift(lcm, a.lead), self._shift(lcm, b.lead)
        field = self._field
        out: Terms = {self._apply(ma, t): c for t, c in a.terms.items() if t != a.lead}
        for t, c in b.terms.items():
            if t == b.lead:
                continue
            nt = self._apply(mb, t)
            old = out.get(nt)
            new = field.neg(c) if old is None else field.sub(old, c)
            if new:
                out[nt] = new
            else:
                out.pop(nt, None)
        sugar = max(a.sugar + sum(ma), b.sugar + sum(mb))
        return out, sugar

    # --- Basis maintenance ---

    def add(self, terms: Terms, sugar: int | None = None) -> int | None:
        """Reduce ``terms`` by the current basis and insert the remainder.

        Returns:
            The index of the new element, or None if it reduced to zero.
        """
        if sugar is None:
            sugar = max((self.degree(t) for t in terms), default=0)
        remainder = self.reduce(terms)
        if not remainder:
            return None
        return self._insert(remainder, sugar)

    def load(self, basis: Iterable[Terms]) -> None:
        """Install an existing Gröbner basis as the active set, without pairs."""
        for terms in basis:
            monic, lead = self._monic(terms)
            sugar = max(self.degree(t) for t in monic)
            self.elements.append(_Element(monic, lead, sugar))
            self._active.append(len(self.elements) - 1)

    def _insert(self, terms: Terms, sugar: int) -> int:
        monic, lead = self._monic(terms)
        self.elements.append(_Element(monic, lead, sugar))
        index = len(self.elements) - 1
        self._update(index)
        return index

    def _pair_priority(self, i: int, j: int) -> tuple[int, SortKey]:
        a, b = self.elements[i], self.elements[j]
        lcm = self._lcm(a.lead, b.lead)
        sugar = max(
            a.sugar + sum(self._shift(lcm, a.lead)), b.sugar + sum(self._shift(lcm, b.lead))
        )
        return sugar, tuple(-k for k in self.key(lcm))

    def _update(self, h: int) -> None:
        mh = self.elements[h].lead
        lead = {i: self.elements[i].lead for i in self._active}
        candidates = [g for g in self._active if self._same_component(lead[g], mh)]
        kept: list[int] = []
        for pos, g in enumerate(candidates):
            lcm_hg = self._lcm(mh, lead[g])

            def covers(other: int, lcm_hg: Term = lcm_hg) -> bool:
                return self._divides(self._lcm(mh, lead[other]), lcm_hg)

            if self._coprime(mh, lead[g]) or (
                not any(covers(o) for o in candidates[pos + 1 :])
                and not any(covers(o) for o in kept)
            ):
                kept.append(g)
        new_pairs = [g for g in kept if not self._coprime(mh, lead[g])]

        for pair in list(self._pairs):
            g1, g2 = pair
            l1, l2 = self.elements[g1].lead, self.elements[g2].lead
            lcm12 = self._lcm(l1, l2)
            if (
                self._divides(mh, lcm12)
                and self._lcm(l1, mh) != lcm12
                and self._lcm(l2, mh) != lcm12
            ):
                del self._pairs[pair]

        for g in new_pairs:
            pair = (min(g, h), max(g, h))
            priority = self._pair_priority(*pair)
            self._pairs[pair] = priority
            heapq.heappush(self._queue, (*priority, *pair))

        self._active = [g for g in self._active if not self._divides(mh, lead[g])]
        self._active.append(h)

    def run(self, max_degree: int | None = None) -> None:
        """Process S-pairs, optionally only those of sugar at most ``max_degree``."""
        processed = 0
        while self._queue:
            sugar, _, i, j = self._queue[0]
            if max_degree is not None and sugar > max_degree:
                break
            heapq.heappop(self._queue)
            if self._pairs.pop((i, j), None) is None:
                continue
            s_poly, s_sugar = self._s_polynomial(i, j)
            processed += 1
            if not s_poly or self.add(s_poly, s_sugar) is None:
                self.reductions_to_zero += 1
        logger.debug(
            "buchberger: %d pairs processed, %d elements, %d active",
            processed,
            len(self.elements),
            len(self._active),
        )

    def pending_degree(self) -> int | None:
        """Smallest sugar among unprocessed pairs."""
        while self._queue and (self._queue[0][2], self._queue[0][3]) not in self._pairs:
            heapq.heappop(self._queue)
        return self._queue[0][0] if self._queue else None

    @property
    def active(self) -> list[int]:
        return list(self._active)

    def reduced_basis(self) -> list[Terms]:
        """Interreduced, monic basis sorted by descending leading term."""
        active = sorted(self._active, key=lambda i: self.key(self.elements[i].lead))
        out: list[Terms] = []
        for i in active:
            others = [j for j in active if j != i]
            tail = {t: c for t, c in self.elements[i].terms.items() if t != self.elements[i].lead}
            reduced = self.reduce(tail, others)
            reduced[self.elements[i].lead] = self._field.one
            out.append(reduced)
        return out
