"""The graded symmetric Fock space and its coherent-state calculus.

Basis monomials are exponent patterns over the letters 0..d (letter 0 is
the unit coordinate) with squared norm (lambda!/n!)^2.  Raising is
coefficient-free symmetric multiplication; lowering is its literal
adjoint, so the pairing identity holds to machine precision by
construction.  Exponentiating the raising operator shifts coherent
states exactly.
"""

import numpy as np

from symwiener.fock import (
    all_indices,
    annihilation_apply,
    basis_vector,
    coherent_state,
    creation_apply,
    exp_creation,
    fock_inner,
    idx_from_dict,
    random_vector,
)
from symwiener.hs_algebra import HsElement
from symwiener.rng import make_rng

d, N = 2, 6
rng = make_rng(4, 0)

idx = idx_from_dict({1: 2, 2: 1})
v = basis_vector(d, N, idx)
print(f"squared norm of the monomial {idx}: {fock_inner(v, v).real:.6f} (= (2!/3!)^2 = 1/9)")

a = HsElement.diagonal(d, [0.4 + 0.2j, -0.3], unit=0.1)
b = HsElement.diagonal(d, [-0.2, 0.5j], unit=0.2 - 0.1j)

psi, phi = random_vector(d, N, rng), random_vector(d, N, rng)
lhs = fock_inner(creation_apply(a, psi), phi)
rhs = fock_inner(psi, annihilation_apply(a, phi))
print(f"adjointness <raise psi|phi> vs <psi|lower phi>: gap {abs(lhs - rhs):.2e}")

shifted = exp_creation(b, coherent_state(a, N))
target = coherent_state(a + b, N)
gap = max(abs(shifted[i] - target[i]) for i in all_indices(d, N))
print(f"exp-raising shifts coherent states exactly: max coefficient gap {gap:.2e}")

bound = np.exp(a.norm()) * psi.norm()
print(f"contraction bound: |T_a psi| = {exp_creation(a, psi).norm():.6f} "
      f"<= e^|a| |psi| = {bound:.6f}")
