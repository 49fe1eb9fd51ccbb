"""Smoke test for the gorenstein_py extension.

Build and run:

    cargo build --release -p gorenstein-py --features extension-module
    cp target/release/libgorenstein_py.so python/gorenstein_py.so
    python3 python/smoke.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import gorenstein_py as g


def main():
    assert g.eps(3, 4) == [1, 3, 6, 3, 1]
    assert g.profile(3, 4)["t"] == 3

    f = g.DualGenerator.sample(3, 4, seed=1)
    assert (f.num_vars, f.degree, f.prime) == (3, 4, g.DEFAULT_PRIME)
    again = g.DualGenerator.parse(f.to_text())
    assert again.to_text() == f.to_text()

    r = f.algebra()
    assert r.hilbert_function() == [1, 3, 6, 3, 1]
    assert r.length() == 14
    assert r.compressed()["length_route"]
    assert r.consequences()["v_equals_t"]

    q = r.betti(ring="q", module="r")
    assert q["totals"][:4] == [1, 7, 7, 1], q["totals"]
    k = r.betti(ring="r", module="k", trunc=4)
    assert k["totals"] == [1, 3, 10, 29, 91], k["totals"]
    assert k["audit"] and k["minimal"]

    expected = [1, 0, -7, -7, 0, 1]
    assert r.dr("t1") == expected
    assert r.dr("t2") == expected
    assert g.dr_closed_form(3, 4) == expected

    report = g.verify(3, 4)
    assert report["schema"] == 1 and report["status"] == "pass", report["status"]
    assert g.maps(2, 4, checks=["nu"])["status"] == "pass"

    try:
        g.verify(3, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("s = 3 must be rejected without allow_s3")

    print("smoke: ok")


if __name__ == "__main__":
    main()
