"""Partitioned genus distributions of iterated claws.

An embedding of the iterated claw is classified by how many distinct
face-boundary walks touch the root vertex: three (class a), exactly two
(class b), or one walk incident three times (class c).  The counts per genus
form three polynomials (A, B, C) whose sum is the genus polynomial.

Attaching a new claw at the root transforms the triple linearly; the fixed
3x3 polynomial matrix below encodes that transformation.  Iterating it from
the base triple of the three-edge dipole yields every iterated claw's
partitioned genus distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ConsistencyError, StructureViolation
from .polynomials import IntPoly

_Z = IntPoly.monomial(1)

#: Fixed production matrix: column j feeds class j of the parent into the
#: three classes of the child.
PRODUCTION_MATRIX: tuple[tuple[IntPoly, ...], ...] = (
    (IntPoly(), IntPoly.constant(2), IntPoly.constant(8)),
    (IntPoly.monomial(1, 12), IntPoly.monomial(1, 12), IntPoly()),
    (IntPoly.monomial(2, 4), IntPoly.monomial(1, 2), IntPoly.monomial(1, 8)),
)


@dataclass(frozen=True)
class PgdVector:
    """Partitioned genus distribution (A, B, C) of the n-th iterated claw."""

    a: IntPoly
    b: IntPoly
    c: IntPoly
    n: int

    def total(self) -> IntPoly:
        """Full genus polynomial A + B + C."""
        return self.a + self.b + self.c

    def embedding_count(self) -> int:
        """Value of the total at z=1; must equal 2**(4n+2)."""
        return sum(self.total().coeffs)

    def validate(self) -> None:
        for name, p in (("a", self.a), ("b", self.b), ("c", self.c)):
            if any(co < 0 for co in p.coeffs):
                raise StructureViolation(
                    f"negative coefficient in partial {name} at n={self.n}"
                )
        expected = 1 << (4 * self.n + 2)
        got = self.embedding_count()
        if got != expected:
            raise StructureViolation(
                f"embedding total at n={self.n} is {got}, expected {expected}"
            )
        if self.n >= 1 and self.b[0] != 0:
            raise StructureViolation(
                f"partial b has nonzero constant term at n={self.n}"
            )


def initial_pgd() -> PgdVector:
    """Base case: the three-edge dipole has 2 planar embeddings with three
    root faces and 2 toroidal embeddings with a single root face."""
    return PgdVector(IntPoly.constant(2), IntPoly(), IntPoly.monomial(1, 2), 0)


def newclaw_step(v: PgdVector) -> PgdVector:
    """Advance one claw attachment; equals applying PRODUCTION_MATRIX."""
    a2 = 2 * v.b + 8 * v.c
    b2 = (12 * (v.a + v.b)).shift(1)
    c2 = (4 * v.a).shift(2) + (2 * v.b + 8 * v.c).shift(1)
    return PgdVector(a2, b2, c2, v.n + 1)


def iter_pgd() -> Iterator[PgdVector]:
    """Yield validated pgd vectors for n = 0, 1, 2, ..."""
    v = initial_pgd()
    while True:
        v.validate()
        yield v
        v = newclaw_step(v)


def pgd(n: int) -> PgdVector:
    """Partitioned genus distribution after n claw attachments."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = initial_pgd()
    for _ in range(n):
        v = newclaw_step(v)
    v.validate()
    return v


def column_sum(n: int) -> IntPoly:
    """Sum of the third column of the n-th power of the production matrix.

    Computed as the third component of the row vector (1,1,1)M^n, updated by
    one right-multiplication per step.  The sequence starts at 1 for n=0 and
    equals four times the genus polynomial of claw n-1 afterwards.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = q = r = IntPoly.constant(1)
    for _ in range(n):
        p, q, r = (
            (12 * q).shift(1) + (4 * r).shift(2),
            2 * p + (12 * q + 2 * r).shift(1),
            8 * p + (8 * r).shift(1),
        )
    return r


def column_sum_check(n: int) -> IntPoly:
    """Column sum of the n-th matrix power, checked against the pgd route.

    Raises ConsistencyError when the sum differs from four times the total
    of pgd(n-1); n must be at least 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    sum_n = column_sum(n)
    expected = 4 * pgd(n - 1).total()
    if sum_n != expected:
        raise ConsistencyError(
            f"third-column sum at n={n} is {sum_n}, "
            f"but the pgd route gives {expected}"
        )
    return sum_n
