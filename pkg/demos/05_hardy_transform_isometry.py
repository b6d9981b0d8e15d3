"""The entire-function side: exponential-polynomial forms and the
conjugate-linear transport from Fock coefficients.

The transported function of a Fock vector psi is c -> <exp(c)|psi>.
Its monomial coefficients recover psi through a documented weight map,
and the norm computed from those coefficients (with the (n!)^2 monomial
weights) equals the Fock norm to machine precision.  Group-side elements
evaluate on virtual unitaries, where coherent vectors become exact
exponentials of the trace functional.
"""

import numpy as np

from symwiener.fock import coherent_state, random_vector
from symwiener.hardy import (
    WienerElement,
    derivative,
    evaluate,
    fock_from_hardy,
    hardy_from_fock,
    hardy_norm,
    mult_exp,
    plain_context,
    shift,
    wiener_evaluate,
)
from symwiener.hs_algebra import HsElement
from symwiener.rng import make_rng
from symwiener.unitary import VirtualUnitary, haar_batch, paley_wiener_eval

d = 2
ctx = plain_context(d)
rng = make_rng(5, 0)

psi = random_vector(d, 4, rng)
f = hardy_from_fock(psi, ctx)
print(f"fock norm {psi.norm():.10f} vs hardy-side norm {hardy_norm(f, 4):.10f}")

back = fock_from_hardy(f, d, 4)
gap = max(abs(back[i] - psi[i]) for i in psi.coeffs)
print(f"round trip through the monomial expansion: max gap {gap:.2e}")

a = HsElement.diagonal(d, [0.3, -0.2j], unit=0.1)
c = HsElement.diagonal(d, [0.25j, 0.4], unit=-0.2)
print(f"\nshift acts by argument translation: "
      f"{evaluate(shift(f, a), c):.8f} = {evaluate(f, c + a):.8f}")
pair = ctx.pair(c.coords(), a.coords())
print(f"multiplier acts pointwise: {evaluate(mult_exp(f, a), c):.8f} "
      f"= {np.exp(pair) * evaluate(f, c):.8f}")
h = 1e-5
num = (evaluate(f, c + h * a) - evaluate(f, c + (-h) * a)) / (2 * h)
print(f"derivative vs finite difference: {evaluate(derivative(f, a), c):.8f} vs {num:.8f}")

vu = VirtualUnitary(haar_batch(4, 1, rng)[0])
w = WienerElement(coherent_state(a, 25))
print(f"\ncoherent transport at a random virtual unitary: "
      f"{wiener_evaluate(w, vu):.8f} = exp(phi_a) = {np.exp(paley_wiener_eval(a, vu)):.8f}")
