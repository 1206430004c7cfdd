"""Smoke test for the hecke_cell_lab extension module."""

import hecke_cell_lab as hcl


def main():
    d = hcl.RootDatum("B2")
    assert (d.rank, d.order, d.nu) == (2, 8, 4)
    assert d.poincare_polynomial() == [1, 2, 2, 2, 1]

    aff = hcl.AffineWeyl("A1")
    f = aff.factor_canonical([3], 1)
    assert f["solutions"] == 1 and f["length_additive"]
    assert len(aff.y0(4)) == 10

    alg = hcl.HeckeAlgebra("A2")
    for name in ["cprime-theta-minus-rho-c", "cprime-theta-rho-c", "c-theta-minus-rho-cprime", "c-theta-rho-cprime"]:
        assert alg.verify_formula(name), name
    assert alg.verify_formula("spherical-sandwich", [1, -1])

    quo = hcl.Quotient("A1")
    assert quo.dimension("q=4 3") == 4
    assert quo.module_dimension("q=4 3") == 2
    rep = quo.principal_report("4")
    assert rep["dim_c_cprime"] == 1 and rep["eigen_ok"]
    assert quo.principal_report("-1")["dim_c_cprime"] == 0

    body = hcl.verify("formulas", "A1")
    assert body["summary"]["fail"] == 0, body["summary"]

    try:
        hcl.RootDatum("E8")
    except ValueError:
        pass
    else:
        raise AssertionError("unsupported type accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
