import json
import numpy as np
import splitwave as sw
from splitwave.schemes import StepCounter, scheme_step
from splitwave.propagators import LinearFlow

basis = sw.FourierBasis(2**11, (-50.0, 50.0))
model = sw.nlse3()
flow = LinearFlow(sw.linear_symbol(model), basis)
phi_b = sw.nonlinear_flow(model)
sol = sw.NLSESolitonParams(eta=1.0, c=0.5)
u0 = sw.nlse3_soliton(sol, basis.nodes, 0.0)
uref = sw.nlse3_soliton(sol, basis.nodes, 10.0)
m0 = np.sum(np.abs(u0)**2)
h0 = None

import splitwave.models as mdl
f0 = sw.Field(u0, basis)
H0 = mdl.hamiltonian(f0, 2.0, -1)

grids = {
  "lie-trotter": [0.002, 0.001, 0.0005, 0.00025, 0.000125],
  "strang":      [0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125],
  "affine2":     [0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125],
  "ruth":        [0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625],
  "neri":        [0.2, 0.1, 0.05, 0.025, 0.0125, 0.01, 0.00625, 0.005],
  "affine4":     [0.2, 0.1, 0.05, 0.025, 0.0125, 0.01, 0.00625, 0.005],
  "yoshida6":    [0.5, 0.25, 0.2, 0.125, 0.1, 0.0625, 0.05, 0.025],
  "affine6":     [0.5, 0.25, 0.2, 0.125, 0.1, 0.0625, 0.05, 0.025],
}
out = {}
for name, dts in grids.items():
    scheme = sw.get_scheme(name)
    rows = []
    for dt in dts:
        m = round(10/dt)
        assert abs(m*dt-10) < 1e-9, (name, dt)
        u = u0.copy(); c = StepCounter()
        for _ in range(m):
            u = scheme_step(scheme, flow.apply, phi_b, dt, u, c)
        E = float(np.max(np.abs(u-uref)))
        eM = float(abs(np.sum(np.abs(u)**2)/m0 - 1))
        H = mdl.hamiltonian(sw.Field(u, basis), 2.0, -1)
        eH = float(abs(H/H0 - 1))
        rows.append({"dt": dt, "E": E, "eps_M": eM, "eps_H": eH,
                     "cost": min(c.evals_a, c.evals_b)})
        print(f"{name:12s} dt={dt:9.6f} E={E:.3e} eM={eM:.3e} eH={eH:.3e}", flush=True)
    out[name] = rows
json.dump(out, open("/root/pkg/.dev/fig1_calibration.json", "w"), indent=1)
print("done")
