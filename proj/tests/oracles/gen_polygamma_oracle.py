"""Reference values from mpmath for the special-function tests.

Run from the repository root:
    python3 tests/oracles/gen_polygamma_oracle.py > tests/data/polygamma_oracle.json
"""
import json

import mpmath as mp

DIGITS = 130
mp.mp.dps = DIGITS + 10

ARGS = ["1/7", "1/4", "1/3", "1/2", "2/3", "3/4", "1", "5/4", "7/3", "5/2", "10", "123/7"]
ORDERS = range(0, 9)


def rat(s):
    if "/" in s:
        p, q = s.split("/")
        return mp.mpf(int(p)) / int(q)
    return mp.mpf(int(s))


def text(x):
    return mp.nstr(x, DIGITS, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)


polygamma = [{"order": n, "arg": a, "value": text(mp.polygamma(n, rat(a)))} for a in ARGS for n in ORDERS]
hurwitz = [{"s": s, "a": a, "value": text(mp.zeta(s, rat(a)))} for a in ["1/3", "3/4", "5/2"] for s in (2, 3, 7)]
zeta = [{"n": n, "value": text(mp.zeta(n))} for n in range(2, 13)]
complex_args = [{"order": n, "re": "1/2", "im": "3/2",
                 "value_re": text(mp.re(mp.polygamma(n, mp.mpc(0.5, 1.5)))),
                 "value_im": text(mp.im(mp.polygamma(n, mp.mpc(0.5, 1.5))))} for n in range(0, 4)]
print(json.dumps({"digits": DIGITS, "polygamma": polygamma, "hurwitz": hurwitz, "zeta": zeta,
                  "complex": complex_args, "euler_gamma": text(mp.euler)}, indent=1))
