"""Smoke tests for the Python bindings: one round-trip per command."""

import rcurves


def main():
    # Degree-1 map to the plane: the pulled-back tangent bundle is O(2)+O(1).
    doc = rcurves.splitting([[1, 0], [0, 1], [0, 0]], ambient="P:2")
    assert doc["splitting"] == [2, 1], doc
    assert doc["very_free"] is True, doc
    assert doc["tangent_dim_direct"] == 5, doc

    # Exceptional curve of the blow-up of the plane, as the incidence
    # hypersurface x0 y1 = x1 y0 in P^2 x P^1.
    blowup = {
        "ambient": {"biP": [2, 1]},
        "degree": [1, 1],
        "terms": [
            {"exp": [1, 0, 0, 0, 1], "c": 1},
            {"exp": [0, 1, 0, 1, 0], "c": -1},
        ],
    }
    exceptional = {"blocks": [[[0], [0], [1]], [[1, 0], [0, 1]]]}
    doc = rcurves.splitting(exceptional, hypersurface=blowup)
    assert doc["splitting"] == [2, -1], doc
    assert doc["free"] is False and doc["gw_rigid"] is True, doc

    assert rcurves.formulas("gw_expected_dim", c1_beta=2, dimX=3, g=0, codims=[2, 2]) == 0
    assert rcurves.formulas("mor_dim_projective", n=3, d=2) == 11

    quadric = {
        "ambient": {"P": 3},
        "degree": 2,
        "terms": [{"exp": [1, 0, 0, 1], "c": 1}, {"exp": [0, 1, 1, 0], "c": -1}],
    }
    doc = rcurves.lines(quadric, field="Fp:3")
    assert doc["count"] == 8, doc
    assert all(line["splitting"] == [2, 0] for line in doc["lines"]), doc

    assert rcurves.hirzebruch("intersect", e=4, c1=[1, 0], c2=[1, 0]) == {"value": -4}
    assert rcurves.hirzebruch("transport_to_f0", e=2, c=[1, 2]) == {"e": 0, "class": [1, 1]}

    doc = rcurves.selfcheck(seed=0, parallel=2)
    assert doc == {"checks_run": 13254, "failures": 0}, doc

    # Failures surface as JobError with the runner's error kind.
    line_off_quadric = [[1, 0], [0, 1], [0, 0], [1, 1]]
    try:
        rcurves.splitting(line_off_quadric, hypersurface=quadric)
    except rcurves.JobError as e:
        assert e.kind == "NotOnHypersurface" and e.exit_code == 3, e
    else:
        raise AssertionError("expected JobError")

    # Batches pass through with per-job error documents, in input order.
    batch = [
        {"command": "formulas", "payload": {"name": "mor_dim_projective", "n": 2, "d": 2}},
        {"command": "formulas", "payload": {"name": "nope"}},
    ]
    docs = rcurves.run_job(batch)
    assert docs[0] == {"value": 8}, docs
    assert docs[1]["error"]["kind"] == "UnknownFormula", docs

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
