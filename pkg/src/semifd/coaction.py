"""Semigroup coactions induced by controlled maps.

A homomorphism phi: P -> Q with finite fibers induces the coaction
delta(lambda_p) = lambda_p (x) lambda_{phi(p)}. This module realizes delta on
graded tensor truncations, decomposes formal algebra elements into spectral
components, applies the all-ones character on the second leg, constructs the
Fell-absorption intertwiner, and computes the spanning set witnessing that the
quotients indexed by finite subsets of Q are finite-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import ControlledMap, EnumerationTable, MonoidElement
from .errors import LengthBoundError, SemifdError
from .linrep import (
    SparseOperator,
    graded_basis,
    identity_operator,
    lambda_op,
    tensor_basis,
    zero_operator,
)


class AlgebraElement:
    """A finite formal combination sum c_p lambda_p over one monoid table."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: EnumerationTable, coeffs: dict[MonoidElement, complex]):
        self.table = table
        self.coeffs = {p: complex(c) for p, c in coeffs.items() if c != 0}

    @classmethod
    def monomial(cls, table: EnumerationTable, p: MonoidElement, c: complex = 1.0):
        return cls(table, {p: c})

    @property
    def support(self) -> list[MonoidElement]:
        return sorted(self.coeffs, key=lambda p: p.index)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.table is not self.table:
            raise SemifdError("algebra elements over different tables")
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return AlgebraElement(self.table, out)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Formal product via the monoid multiplication (lengths must fit)."""
        if other.table is not self.table:
            raise SemifdError("algebra elements over different tables")
        out: dict[MonoidElement, complex] = {}
        for p, cp in self.coeffs.items():
            for q, cq in other.coeffs.items():
                pq = self.table.multiply(p, q)
                out[pq] = out.get(pq, 0) + cp * cq
        return AlgebraElement(self.table, out)

    def scale(self, c: complex) -> "AlgebraElement":
        return AlgebraElement(self.table, {p: c * v for p, v in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and other.table is self.table
            and other.coeffs == self.coeffs
        )

    def __repr__(self):
        terms = ", ".join(
            "%s: %s" % (self.table.str_of(p), self.coeffs[p]) for p in self.support
        )
        return "AlgebraElement({%s})" % terms


@dataclass(frozen=True)
class CoactionSpec:
    """Source table P, target table Q, and the controlled map driving delta."""

    phi: ControlledMap

    @property
    def source(self) -> EnumerationTable:
        return self.phi.source

    @property
    def target(self) -> EnumerationTable:
        return self.phi.target


def delta_apply(spec: CoactionSpec, a: AlgebraElement, L_P: int, L_Q: int) -> SparseOperator:
    """The operator sum c_p (lambda_p (x) lambda_{phi(p)}) on the graded tensor
    truncation with domain levels (L_P, L_Q); the codomain levels are the
    smallest ones holding every image."""
    if a.table is not spec.source:
        raise SemifdError("element does not live over the coaction source")
    dom = tensor_basis(graded_basis(spec.source, L_P), graded_basis(spec.target, L_Q))
    if not a.coeffs:
        return zero_operator(dom, dom)
    max_p = max(p.length for p in a.coeffs)
    max_q = max(spec.phi(p).length for p in a.coeffs)
    total = None
    for p in a.support:
        term = lambda_op(spec.source, p, L_P, L_cod=L_P + max_p).tensor(
            lambda_op(spec.target, spec.phi(p), L_Q, L_cod=L_Q + max_q)
        ).scale(a.coeffs[p])
        total = term if total is None else total + term
    return total


def spectral_decompose(a: AlgebraElement, phi: ControlledMap) -> dict[MonoidElement, AlgebraElement]:
    """Group the support of a by phi: the q-component collects the terms with
    phi(p) = q. Supports are disjoint and the components sum back to a."""
    out: dict[MonoidElement, dict] = {}
    for p, c in a.coeffs.items():
        out.setdefault(phi(p), {})[p] = c
    return {q: AlgebraElement(a.table, coeffs) for q, coeffs in out.items()}


def apply_character(a: AlgebraElement) -> complex:
    """The character sending every lambda_p to 1: the coefficient sum."""
    return sum(a.coeffs.values(), 0j)


def character_reconstruction(spec: CoactionSpec, a: AlgebraElement) -> AlgebraElement:
    """(id (x) chi) after delta: apply the all-ones character to the second
    tensor leg of the spectral decomposition and re-assemble. Raises if the
    result does not reproduce a coefficient-exactly."""
    parts = spectral_decompose(a, spec.phi)
    out = AlgebraElement(a.table, {})
    for q in sorted(parts, key=lambda q: q.index):
        out = out + parts[q]  # chi(lambda_q) = 1
    if out != a:
        raise SemifdError("character reconstruction failed to reproduce the element")
    return out


def fell_intertwiner_at(spec: CoactionSpec, L_P: int, L_Q: int) -> SparseOperator:
    """The isometry W: e_p (x) e_k -> e_p (x) e_{phi(p) k} on the truncation
    with domain levels (L_P, L_Q); the second-leg codomain level grows by the
    largest |phi(p)| over |p| <= L_P."""
    growth = max(spec.phi(p).length for p in spec.source.elements_up_to(L_P))
    if spec.target.L < L_Q + growth:
        raise LengthBoundError(
            "target enumerated to %d, need %d" % (spec.target.L, L_Q + growth)
        )
    bP = graded_basis(spec.source, L_P)
    bQ_dom = graded_basis(spec.target, L_Q)
    bQ_cod = graded_basis(spec.target, L_Q + growth)
    dom = tensor_basis(bP, bQ_dom)
    cod = tensor_basis(bP, bQ_cod)
    entries = {}
    for i, p_label in enumerate(bP.labels):
        p = spec.source.element(p_label)
        vp = spec.phi(p)
        for j, k_label in enumerate(bQ_dom.labels):
            k = spec.target.element(k_label)
            image = spec.target.multiply(vp, k)
            entries[(i * bQ_cod.dim + bQ_cod.index_of(image.index), i * bQ_dom.dim + j)] = 1.0
    return SparseOperator(dom, cod, entries)


def fell_intertwiner(spec: CoactionSpec, L_P: int, L_Q: int) -> tuple[SparseOperator, dict]:
    """Build W at levels (L_P, L_Q) and certify, entrywise-exactly:
    (i) W*W = identity, (ii) W(lambda_p (x) I) = (lambda_p (x) V_p)W for every
    generator p, with both sides embedded into a common graded codomain."""
    W = fell_intertwiner_at(spec, L_P, L_Q)
    report = {"L_P": L_P, "L_Q": L_Q}
    if W.adjoint() @ W != identity_operator(W.domain):
        raise SemifdError("Fell intertwiner is not an isometry")
    report["isometry"] = "exact"

    growth = max(spec.phi(p).length for p in spec.source.elements_up_to(L_P))
    growth_up = max(spec.phi(p).length for p in spec.source.elements_up_to(L_P + 1))
    common_cod = tensor_basis(
        graded_basis(spec.source, L_P + 1),
        graded_basis(spec.target, L_Q + growth_up),
    )
    intertwined = []
    for g in range(len(spec.source.presentation.generators)):
        p = spec.source.element_from_word((g,))
        vp = spec.phi(p)
        lam_p = lambda_op(spec.source, p, L_P)
        # left side: shift first, then W at the deeper level
        lhs = fell_intertwiner_at(spec, L_P + 1, L_Q) @ lam_p.tensor(
            identity_operator(graded_basis(spec.target, L_Q))
        )
        # right side: W first, then lambda_p (x) V_p
        rhs = lam_p.tensor(
            lambda_op(spec.target, vp, L_Q + growth)
        ) @ W
        if lhs.embed_codomain(common_cod) != rhs.embed_codomain(common_cod):
            raise SemifdError(
                "Fell intertwining fails for generator %s" % spec.source.str_of(p)
            )
        intertwined.append(spec.source.presentation.generators[g])
    report["intertwined_generators"] = intertwined
    return W, report


def qf_spanning_set(spec: CoactionSpec, F) -> tuple[frozenset, int]:
    """Spanning set of the quotient indexed by a finite F inside Q: all p in P
    whose image lies in some left-divisor set of a right divisor of F. Its
    (finite) cardinality is the finite-dimensionality witness."""
    targets = set()
    for q in F:
        for r in spec.target.right_divisors(q):
            targets.update(spec.target.left_divisors(r))
    span = set()
    for t in sorted(targets, key=lambda t: t.index):
        span.update(spec.phi.fiber(t))
    return frozenset(span), len(span)
