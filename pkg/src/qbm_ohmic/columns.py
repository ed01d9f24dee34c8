"""Every CSV column the CLI can emit, with the closed form it comes from."""

COLUMNS = {
    "t": "time since coupling",
    "gamma_t": "dimensionless time gamma*t",
    "A0_scaled": "A(t)*lambda_th^2/d^2, ground-state cat: interference-peak exponent",
    "AT_scaled": "A(t)*lambda_th^2/d^2, thermal cat: interference-peak exponent",
    "purity": "Tr rho^2 = hbar / (2 sqrt(A11 A22 - A12^2))",
    "purity_short": "1 + (1 - 4 sigma^2/lambda_th^2) gamma t",
    "x2": "<X^2> = (kT/m gamma^2)[2 gamma t - (1 - e^{-gamma t})(3 - e^{-gamma t})]",
    "xxd": "<X Xdot + Xdot X> = (2kT/m gamma)(1 - e^{-gamma t})^2",
    "xd2": "<Xdot^2> = (kT/m)(1 - e^{-2 gamma t})",
    "mean_x": "<x(t)> = x0 e^{-gamma t}",
    "mean_p": "<p(t)> = -m gamma x0 e^{-gamma t}",
    "A11": "dx^2 = <X^2> + sigma^2 m^2 Gdot^2 + hbar^2 G^2/4sigma^2 (+ m kT G^2 thermal)",
    "A12": "m<XXdot+XdotX>/2 + sigma^2 m^3 Gdot Gddot + hbar^2 m G Gdot/4sigma^2 (+ m^2 kT G Gdot thermal)",
    "A22": "m^2<Xdot^2> + sigma^2 m^4 Gddot^2 + hbar^2 m^2 Gdot^2/4sigma^2 (+ m^3 kT Gdot^2 thermal)",
    "det": "A11 A22 - A12^2",
    "A": "interference exponent: reduced determinant / det * d^2/8sigma^2",
    "A_short": "short-time exponent: (d/lambda_th)^2 gamma t, or d^2/(2 lambda_th^2 + 8 sigma^2) thermal",
    "phi_q": "coefficient of q in the fringe phase: (G A22 - m Gdot A12)/det * hbar d/4sigma^2",
    "phi_p": "coefficient of p in the fringe phase: (m Gdot A11 - G A12)/det * hbar d/4sigma^2",
    "attenuation": "a(t) = exp(-<X^2>_eff d^2 / 8 sigma^2 A11)",
    "attenuation_short": "exp(-t^3 / 3 tau_d (t^2 + (2 m sigma^2/hbar)^2)), or exp(-kT d^2 t^2/8 m sigma^4) thermal",
    "witness": "<psi, rho psi> = -2[1 - 4 det/hbar^2] / bracket^{3/2}",
    "det_ratio": "4 det / hbar^2",
}
