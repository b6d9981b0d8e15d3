"""Finite-truncation harmonic analysis over the infinite unitary group.

Subpackages by theme: partition/tableau combinatorics (`partitions`),
Schur polynomial evaluation (`schur`), the unit-extended Hilbert-Schmidt
algebra (`hs_algebra`), Haar sampling and the Livsic descent chain
(`unitary`), the graded symmetric Fock space (`fock`), exact Hardy-side
operator algebra and the Fock/Hardy transport (`hardy`), Heisenberg/Weyl
systems (`weyl`), the Gaussian semigroup (`schrodinger`), the seeded
Monte-Carlo harness (`mc`), and the report-writing CLI (`cli`).
"""

__version__ = "0.1.0"

from . import (  # noqa: F401
    cli,
    fock,
    hardy,
    hs_algebra,
    mc,
    partitions,
    rng,
    schrodinger,
    schur,
    unitary,
    weyl,
)
