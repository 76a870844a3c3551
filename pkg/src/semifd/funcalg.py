"""Graded matrix models of multiplier algebras with circular symmetry.

Kernels are of diagonal unitarily invariant type K(z, w) = sum c_n <z, w>^n
with c_0 = 1 and c_n > 0, which covers the Hardy, Drury-Arveson and Dirichlet
kernels. Monomials are orthogonal with ||z^alpha||^2 = alpha!/(|alpha|! c_n),
so multiplication operators have exact graded matrices, the rotation action is
diagonal, and the homogeneous decomposition realizes the grading coaction by
the additive naturals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .errors import DegreeOverflowError, KernelSpecError, SemifdError
from .linrep import Basis, SparseOperator, operator_norm

Multidx = tuple[int, ...]


class Polynomial:
    """Finitely supported complex-coefficient polynomial in d variables."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: dict[Multidx, complex]):
        self.d = d
        for alpha in coeffs:
            if len(alpha) != d or any(a < 0 for a in alpha):
                raise SemifdError("bad exponent vector %r for %d variables" % (alpha, d))
        self.coeffs = {a: complex(c) for a, c in coeffs.items() if c != 0}

    @classmethod
    def parse_terms(cls, d: int, terms) -> "Polynomial":
        """Input format: list of {"exponents": [...], "re": x, "im": y}."""
        coeffs: dict[Multidx, complex] = {}
        for t in terms:
            alpha = tuple(t["exponents"])
            c = complex(t.get("re", 0.0), t.get("im", 0.0))
            coeffs[alpha] = coeffs.get(alpha, 0) + c
        return cls(d, coeffs)

    @property
    def degree(self) -> int:
        return max((sum(a) for a in self.coeffs), default=0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return Polynomial(self.d, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Multidx, complex] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                ab = tuple(x + y for x, y in zip(a, b))
                out[ab] = out.get(ab, 0) + ca * cb
        return Polynomial(self.d, out)

    def scale(self, c: complex) -> "Polynomial":
        return Polynomial(self.d, {a: c * v for a, v in self.coeffs.items()})

    def __call__(self, z) -> complex:
        total = 0j
        for a, c in self.coeffs.items():
            term = c
            for zi, ai in zip(z, a):
                term *= zi**ai
            total += term
        return total

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.d == other.d and self.coeffs == other.coeffs

    def __repr__(self):
        return "Polynomial(d=%d, %r)" % (self.d, self.coeffs)


@dataclass(frozen=True)
class KernelSpec:
    """A diagonal unitarily invariant kernel given by its coefficient sequence.

    coefficients: either a name ("hardy", "drury_arveson", "dirichlet") or an
    explicit positive tuple (c_0, c_1, ...) with c_0 = 1.
    """

    d: int
    name: str
    explicit: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.d <= 0:
            raise KernelSpecError("variable count must be positive")
        if self.name == "custom":
            if not self.explicit:
                raise KernelSpecError("custom kernel needs explicit coefficients")
            if self.explicit[0] != 1.0:
                raise KernelSpecError("kernel must be normalized: c_0 = 1")
            if any(c <= 0 for c in self.explicit):
                raise KernelSpecError("kernel coefficients must be positive")
        elif self.name not in ("hardy", "drury_arveson", "dirichlet"):
            raise KernelSpecError("unknown kernel %r" % self.name)

    def c(self, n: int) -> float:
        if self.name == "custom":
            if n >= len(self.explicit):
                raise DegreeOverflowError(
                    "kernel coefficients provided up to degree %d, need %d"
                    % (len(self.explicit) - 1, n)
                )
            return self.explicit[n]
        if self.name == "dirichlet":
            return 1.0 / (n + 1)
        return 1.0  # hardy, drury_arveson

    @property
    def fingerprint(self) -> tuple:
        return (self.d, self.name, self.explicit)


def hardy() -> KernelSpec:
    return KernelSpec(1, "hardy")


def drury_arveson(d: int) -> KernelSpec:
    return KernelSpec(d, "drury_arveson")


def dirichlet() -> KernelSpec:
    return KernelSpec(1, "dirichlet")


def monomial_norm(kernel: KernelSpec, alpha: Multidx) -> float:
    """||z^alpha|| = sqrt(alpha! / (|alpha|! c_{|alpha|}))."""
    n = sum(alpha)
    if n <= 150:
        multinom = math.factorial(n)
        for a in alpha:
            multinom //= math.factorial(a)
        return math.sqrt(1.0 / (multinom * kernel.c(n)))
    log_multinom = math.lgamma(n + 1) - sum(math.lgamma(a + 1) for a in alpha)
    return math.sqrt(math.exp(-log_multinom) / kernel.c(n))


def _multi_indices(d: int, degree: int) -> list[Multidx]:
    out = [a for a in product(range(degree + 1), repeat=d) if sum(a) == degree]
    return sorted(out)


def fock_basis(kernel: KernelSpec, D: int) -> Basis:
    """Normalized monomial basis up to degree D, ordered by degree then lex."""
    labels = []
    for n in range(D + 1):
        kernel.c(n)  # fail early if the degree is out of range
        labels.extend(_multi_indices(kernel.d, n))
    return Basis(("fock", kernel.fingerprint), tuple(labels))


def mult_operator(kernel: KernelSpec, phi: Polynomial, D: int) -> SparseOperator:
    """Exact matrix of multiplication by phi from the degree<=D basis into the
    degree<=(D + deg phi) basis, in normalized monomial coordinates."""
    if phi.d != kernel.d:
        raise SemifdError("polynomial has %d variables, kernel has %d" % (phi.d, kernel.d))
    dom = fock_basis(kernel, D)
    cod = fock_basis(kernel, D + phi.degree)
    entries = {}
    for col, alpha in enumerate(dom.labels):
        na = monomial_norm(kernel, alpha)
        for beta, c in phi.coeffs.items():
            target = tuple(x + y for x, y in zip(alpha, beta))
            entries[(cod.index_of(target), col)] = (
                entries.get((cod.index_of(target), col), 0)
                + c * monomial_norm(kernel, target) / na
            )
    return SparseOperator(dom, cod, entries)


def multiplier_norm_lower(kernel: KernelSpec, phi: Polynomial, D: int, tol: float = 1e-9) -> float:
    """Norm of the compression of M_phi to the degree<=D subspace.

    The subspace is coinvariant for multipliers, so these values are
    nondecreasing in D and converge to the multiplier norm from below.
    """
    dom = fock_basis(kernel, D)
    full = mult_operator(kernel, phi, D)
    compressed = {}
    for (r, c), v in full.entries.items():
        label = full.codomain.labels[r]
        if sum(label) <= D:
            compressed[(dom.index_of(label), c)] = v
    return operator_norm(SparseOperator(dom, dom, compressed), tol=tol)


def homogeneous_decompose(phi: Polynomial) -> list[tuple[int, Polynomial]]:
    """phi = sum phi_n with phi_n supported in degree n; occurring degrees only."""
    parts: dict[int, dict] = {}
    for alpha, c in phi.coeffs.items():
        parts.setdefault(sum(alpha), {})[alpha] = c
    return [(n, Polynomial(phi.d, parts[n])) for n in sorted(parts)]


def circle_action(phi: Polynomial, zeta: complex) -> Polynomial:
    """Precompose with rotation by zeta: the degree-n part picks up zeta^n."""
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise SemifdError("rotation parameter must be unimodular, got |zeta| = %r" % abs(zeta))
    return Polynomial(
        phi.d, {alpha: (zeta ** sum(alpha)) * c for alpha, c in phi.coeffs.items()}
    )


def circle_action_matrix(kernel: KernelSpec, D: int, zeta: complex) -> SparseOperator:
    """The diagonal unitary diag(zeta^{|alpha|}) on the degree<=D basis."""
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise SemifdError("rotation parameter must be unimodular, got |zeta| = %r" % abs(zeta))
    basis = fock_basis(kernel, D)
    return SparseOperator(
        basis, basis, {(i, i): zeta ** sum(a) for i, a in enumerate(basis.labels)}
    )


def n_coaction(phi: Polynomial, F=()) -> tuple[list[tuple[int, Polynomial]], int]:
    """Symbolic grading coaction: the degree-n component is tagged by the shift
    of order n. Also reports the quotient-dimension witness for a finite F:
    the number of monomials of degree <= max F in d variables."""
    components = homogeneous_decompose(phi)
    qdim = 0
    if F:
        top = max(F)
        qdim = sum(math.comb(n + phi.d - 1, phi.d - 1) for n in range(top + 1))
    return components, qdim
