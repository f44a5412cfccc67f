import pytest

from farsight.bench import ScalingRow, run_scaling, to_csv


def test_single_row():
    rows = run_scaling("farsighted-linear", [1], repeats=3)
    assert len(rows) == 1 and rows[0].ratio_to_prev is None
    assert to_csv(rows).splitlines()[1].endswith(",")


def test_ratios_present():
    rows = run_scaling("gs", [4, 8, 16], repeats=3)
    assert [r.n for r in rows] == [4, 8, 16]
    assert all(r.ratio_to_prev > 0 for r in rows[1:])


def test_csv_header():
    text = to_csv([ScalingRow("gs", 2, 10, None), ScalingRow("gs", 4, 25, 2.5)])
    assert text == "algorithm,n,median_ns,ratio_to_prev\ngs,2,10,\ngs,4,25,2.500\n"


@pytest.mark.parametrize("kwargs", [{"repeats": 2}, {"n_values": [4, 2]}])
def test_bad_arguments(kwargs):
    args = {"algorithm": "gs", "n_values": [2, 4], "repeats": 3, **kwargs}
    with pytest.raises(ValueError):
        run_scaling(**args)
