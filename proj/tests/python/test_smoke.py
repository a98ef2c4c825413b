import math
import os
from pathlib import Path

import pytest

import discop

DATA = Path(os.environ.get("DISCOP_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def test_kernels():
    assert discop.fejer(0.0) == 0.5
    assert discop.bspline(3, 0.0) == pytest.approx(0.75)
    report = discop.validate_kernel(discop.bspline_kernel(3), 1e-10)
    assert report.passes(1e-10)


def test_evaluate_and_partition():
    bern = discop.make_bernstein()
    value, cert = discop.evaluate(bern, lambda t: t * t, 2, 0.5)
    assert value == pytest.approx(0.375)
    assert cert.tail_bound == 0.0
    szasz = discop.make_szasz_mirakjan()
    value, _ = discop.evaluate(szasz, lambda t: 1.0, 5, 2.0)
    assert value == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(discop.DomainError):
        discop.evaluate(bern, lambda t: t, 0, 0.5)


def test_curve_approximation():
    spiral = discop.specimen("spiral")
    bern = discop.make_bernstein()
    errors = [discop.sup_error(spiral, discop.apply_operator(bern, spiral, n), 400) for n in (30, 50, 100)]
    assert errors[0] > errors[1] > errors[2]
    sampling = discop.make_generalized_sampling(discop.bspline_kernel(3))
    closed = discop.apply_operator(sampling, discop.specimen("closed"), 10, "periodic")
    assert closed.closed and closed.closure_defect() < 1e-9


def test_trace_example():
    img = discop.load_pbm((DATA / "example.pbm").read_bytes())
    result = discop.trace(img)
    assert result["codes"] == [0, 1, 1, 2, 4, 4, 3, 5, 6, 7, 6]
    assert result["u"] == [4, 5, 6, 7, 7, 6, 5, 4, 3, 3, 4]
    assert result["v"] == [6, 6, 5, 4, 3, 3, 3, 2, 3, 4, 5]
    assert discop.load_pbm(discop.save_pbm(img, plain=True)) == img
    curve = discop.image_to_curve(img)
    assert discop.rasterize(curve, img.rows, img.cols) == img


def test_trace_error_names_pixel():
    rows = [[0] * 7 for _ in range(7)]
    for x, y in [(1, 3), (2, 3), (3, 3), (4, 3), (5, 3), (3, 2), (3, 1)]:
        rows[y][x] = 1
    with pytest.raises(discop.TraceError, match=r"\(3, 3\)"):
        discop.trace(discop.BinaryImage.from_rows(rows))


def test_upscale_and_smooth():
    img = discop.load_pbm((DATA / "example.pbm").read_bytes())
    sampling = discop.make_generalized_sampling(discop.bspline_kernel(3))
    up = discop.upscale(img, 2.0, sampling, 44, "periodic")
    assert (up.rows, up.cols) == (16, 18)
    pts = [(math.cos(2 * math.pi * k / 5), math.sin(2 * math.pi * k / 5)) for k in range(5)]
    smooth = discop.smooth_from_points(pts, True, discop.make_bernstein(), 200)
    assert smooth.closed
    assert discop.sup_error(discop.polyline_curve(pts, True), smooth, 500) < 0.2
