"""Compression representations on divisor-set subspaces.

For a finite F inside the monoid, Y_F is the span of {e_r : r a right divisor
of some p in F}. Y_F is coinvariant for the algebra generated by the lambda_p,
so compressing to it is multiplicative, and the compressions stabilize: once
F contains s*q, the compressed operator reproduces lambda_s e_q = e_{sq}
exactly. Convergence certificates here are exact equalities, never epsilons.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumeration import EnumerationTable, MonoidElement
from .errors import SemifdError
from .linrep import Basis, SparseOperator


@dataclass(frozen=True)
class DivisorSubspace:
    """Y_F with its ordered basis (a sub-basis of the graded l2(P) basis)."""

    table: EnumerationTable
    F: tuple[MonoidElement, ...]
    basis: Basis = field(compare=False)

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def max_length(self) -> int:
        return max(p.length for p in self.F)

    def compress(self, s: MonoidElement) -> SparseOperator:
        """Matrix of Q_F lambda_s Q_F restricted to Y_F; entries in {0, 1}."""
        entries = {}
        for col, r_label in enumerate(self.basis.labels):
            r = self.table.element(r_label)
            if s.length + r.length > self.max_length:
                continue  # image is too long to lie in Y_F
            sr = self.table.multiply(s, r)
            if self.basis.contains(sr.index):
                entries[(self.basis.index_of(sr.index), col)] = 1.0
        return SparseOperator(self.basis, self.basis, entries)

    def check_coinvariance(self, s: MonoidElement):
        """lambda_s* maps Y_F into Y_F (plus 0): for every r in Y_F with
        r = s*t, the cofactor t must lie in Y_F."""
        for r_label in self.basis.labels:
            r = self.table.element(r_label)
            t = self.table.left_divides(s, r)
            if t is not None and not self.basis.contains(t.index):
                raise SemifdError(
                    "coinvariance broken: lambda_%s* e_%s leaves Y_F"
                    % (self.table.str_of(s), self.table.str_of(r))
                )


def build_Y(table: EnumerationTable, F) -> DivisorSubspace:
    """Span of the union of right-divisor sets of the elements of F."""
    F = tuple(F)
    if not F:
        raise SemifdError("F must be nonempty")
    labels = set()
    for p in F:
        if table.element(p.index) != p:
            raise SemifdError("element %s is not in the table" % table.str_of(p))
        labels.update(r.index for r in table.right_divisors(p))
    basis = Basis(("l2", table.fingerprint), tuple(sorted(labels)))
    return DivisorSubspace(table, F, basis)


def pi_F(table: EnumerationTable, F, s: MonoidElement) -> SparseOperator:
    """Compression of lambda_s to Y_F."""
    return build_Y(table, F).compress(s)


def kernel_set(table: EnumerationTable, F, L: int) -> frozenset:
    """Elements s of length <= L with pi_F(lambda_s) = 0.

    Computed twice: by matrix nullity and by the combinatorial complement of
    the union of left-divisor sets of right divisors of F. A mismatch means a
    bug and raises.
    """
    sub = build_Y(table, F)
    allowed = set()
    for p in sub.F:
        for r in table.right_divisors(p):
            allowed.update(q.index for q in table.left_divisors(r))
    by_matrix = set()
    by_formula = set()
    for s in table.elements_up_to(L):
        if sub.compress(s).is_zero():
            by_matrix.add(s.index)
        if s.index not in allowed:
            by_formula.add(s.index)
    if by_matrix != by_formula:
        raise SemifdError(
            "kernel-set mismatch: matrix %r vs formula %r"
            % (sorted(by_matrix), sorted(by_formula))
        )
    return frozenset(table.element(i) for i in by_matrix)


def stabilization_index(
    table: EnumerationTable,
    s: MonoidElement,
    q: MonoidElement,
    extras=(),
) -> tuple[tuple[MonoidElement, ...], dict]:
    """Finite stabilization certificate for the strong-operator limit.

    Returns F0 = {s*q} and a report asserting, for F0 and each tested superset
    F0 + extras, that the compression maps e_q to e_{sq} exactly and that the
    adjoint-side compression agrees with lambda_s* on all of Y_F.
    """
    sq = table.multiply(s, q)
    F0 = (sq,)
    tested = [F0] + [F0 + tuple(extra) for extra in extras]
    for F in tested:
        sub = build_Y(table, F)
        mat = sub.compress(s)
        col = sub.basis.index_of(q.index)
        image = {r for (r, c) in mat.entries if c == col}
        if image != {sub.basis.index_of(sq.index)}:
            raise SemifdError(
                "stabilization failed: pi_F(lambda_%s) e_%s != e_%s for F=%s"
                % (
                    table.str_of(s),
                    table.str_of(q),
                    table.str_of(sq),
                    [table.str_of(p) for p in F],
                )
            )
        sub.check_coinvariance(s)
    report = {
        "F0": [table.str_of(p) for p in F0],
        "supersets_tested": len(tested),
        "image": table.str_of(sq),
    }
    return F0, report
