#!/usr/bin/env python3
# Independent arithmetic for the frozen link-budget constants used by the C++ tests.
import math

q = 1.602e-19
n0 = 4.47e-12
b_rx = 5e9
resp = {"R": 0.4, "Y": 0.35, "G": 0.3, "B": 0.2}
ld_power = {"R": 0.8, "Y": 0.5, "G": 0.3, "B": 0.3}
lds = 9

ap = (1.0, 1.0, 3.0)
rx = (0.5, 1.5, 1.0)
az, el = math.radians(315.0), math.radians(70.0)
n = (math.cos(el) * math.cos(az), math.cos(el) * math.sin(az), math.sin(el))
v = [a - r for a, r in zip(ap, rx)]
d = math.sqrt(sum(c * c for c in v))
u = [c / d for c in v]
cos_phi = u[2]
cos_theta = sum(a * b for a, b in zip(u, n))
area = 20e-6
gain = 2.0 / (2 * math.pi * d * d) * area * cos_phi * cos_theta
print(f"los_gain      {gain:.10e}")
print(f"los_delay_s   {d / 2.998e8:.10e}")

i = {k: resp[k] * ld_power[k] * lds * gain for k in resp}
i_sig = i["R"]
i_bg = i["Y"] + i["G"] + i["B"]
i_tot = i_sig + i_bg
sigma_pre = n0 * n0 * b_rx
sigma = 2 * q * i_tot * b_rx + sigma_pre
sinr = i_sig ** 2 / sigma
print(f"i_sig         {i_sig:.10e}")
print(f"i_bg          {i_bg:.10e}")
print(f"sigma_pre     {sigma_pre:.10e}")
print(f"sigma_total   {sigma:.10e}")
print(f"sinr_db       {10 * math.log10(sinr):.10f}")
print(f"q36_db        {10 * math.log10(36):.10f}")
print(f"rate_6GHz     {6e9 / 0.7:.10e}")

# two-sample rms spread (0 ns, P), (2 ns, P/2), power-squared weighting
w = [1.0, 0.25]
t = [0.0, 2e-9]
mu = sum(a * b for a, b in zip(w, t)) / sum(w)
dsp = math.sqrt(sum(a * (b - mu) ** 2 for a, b in zip(w, t)) / sum(w))
print(f"rms_mu        {mu:.10e}")
print(f"rms_d         {dsp:.10e}")
