import numpy as np
import splitwave as sw
from splitwave.schemes import StepCounter, scheme_step
from splitwave.propagators import LinearFlow

for alpha in (1.8, 1.1):
    basis = sw.HermiteBasis(300, 1.0)
    model = sw.fcgle5(alpha=alpha, beta=0.1, delta=-0.2, gamma=-1.0, epsilon=1.7, nu=-0.115, mu=-1.0)
    flow = LinearFlow(sw.linear_symbol(model), basis)
    phi_b = sw.nonlinear_flow(model)
    u0 = (1.2*np.exp(-basis.nodes**2/2)).astype(complex)
    scheme = sw.get_scheme("affine6")
    c = StepCounter()
    u = u0.copy()
    amps = [np.max(np.abs(u))]
    for step in range(1, 10001):
        u = scheme_step(scheme, flow.apply, phi_b, 0.025, u, c)
        amps.append(np.max(np.abs(u)))
    np.save(f"/root/pkg/.dev/fcgle5_amps_alpha{alpha}.npy", np.array(amps))
    print(f"alpha={alpha} done, final amp {amps[-1]:.5f}", flush=True)
