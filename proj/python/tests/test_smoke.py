import json
import os
import subprocess
from fractions import Fraction

import pytest

import mapenum


def test_version():
    assert mapenum.__version__ == "1.0.0"


def test_z0_series():
    assert mapenum.z0_series("2", 3) == [1, -3, 18, -135]
    tri = mapenum.z0_series("3v", 4)
    assert tri[1] == 0 and tri[2] == 36


def test_derive_g1():
    d = mapenum.derive_zg(genus=1)
    assert d["beta"] == [Fraction(-2, 3), Fraction(2, 3)]
    assert d["top"] == Fraction(2, 3)


def test_counts_table1_prefix():
    t = mapenum.counts("z", "2", [0, 1], 3)
    assert t["rows"] == [[3, 0], [18, 6], [135, 162]]
    golden = mapenum.golden_tables()["e_3v"]
    mine = mapenum.counts("e", "3v", [0, 1, 2], 30)
    assert mine["rows"] == [[Fraction(c) for c in row] for row in golden["rows"]]


def test_genus0_closed():
    assert mapenum.genus0_closed(2, 1, labeled=True) == 2
    assert mapenum.genus0_closed(2, 2) == Fraction(9, 8)


def test_q_roots():
    roots = mapenum.q_roots(3)
    assert len(roots) == 2
    assert roots[0] == pytest.approx(0.07384, rel=1e-3)


def test_freud_polynomial():
    m3 = mapenum.freud_polynomial(3)
    assert sum(m3.values()) == 10
    assert m3[(-1, 0, 1)] == 1


def test_orbit():
    x = mapenum.orbit_x(nmax=5, bits=128)
    assert len(x) == 5
    assert all(float(v) > 0 for v in x)
    with pytest.raises(mapenum.ShortfallError):
        mapenum.orbit_x(nmax=80, bits=128, method="hankel")


def test_cm_expand():
    e = mapenum.cm_expand(2, 1)
    assert e["kmax"] == 1
    assert len(e["coefficients"]) == 3


def test_verify_counts():
    rep = mapenum.verify("counts")
    assert rep["passed"] is True


@pytest.mark.skipif(not os.environ.get("MAPENUM_CLI"), reason="CLI path not provided")
def test_cli_counts_json():
    out = subprocess.run(
        [os.environ["MAPENUM_CLI"], "counts", "--genus", "1", "--jmax", "3", "--format", "json"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert json.loads(out)["rows"] == [["0"], ["6"], ["162"]]
