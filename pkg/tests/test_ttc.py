from hypothesis import given

from farsight.core import Instance
from farsight.gale_shapley import solve_gs
from farsight.linear import solve_farsighted_linear
from farsight.ttc import first_top_cycle, solve_ttc, ttc_rounds

from conftest import instances, one_based

EX1_TTC = [(1, 1), (2, 7), (3, 5), (4, 3), (5, 4), (6, 6), (7, 2)]


def test_example1_first_cycle(ex1):
    cycles = first_top_cycle(ex1)
    # b1 keeps g1 as a self-loop in the same round
    assert [c.boys for c in cycles if len(c.boys) == 1] == [(0,)]
    (c,) = [c for c in cycles if len(c.boys) > 1]
    # g2|b4 -> g3|b3 -> g5|b7 -> g2 in 1-based labels
    assert c.canonical() == ((2, 2), (6, 4), (3, 1))
    assert {b + 1: g + 1 for b, g in c.assignment().items()} == {7: 2, 3: 5, 4: 3}


def test_example1_full(ex1):
    m = solve_ttc(ex1)
    assert one_based(m) == EX1_TTC
    assert m != solve_farsighted_linear(ex1)
    rounds = ttc_rounds(ex1)
    assert all(len(c.boys) == 1 for c in rounds[1])


def test_example1_divergence(ex1):
    ttc, fs = solve_ttc(ex1), solve_farsighted_linear(ex1)
    rank = ex1.boy_rank_of_girl
    differ = {b for b in range(7) if ttc[b] != fs[b]}
    assert differ == {3, 5, 6}
    assert rank[5][fs[5]] < rank[5][ttc[5]]
    assert rank[3][ttc[3]] < rank[3][fs[3]]
    assert rank[6][ttc[6]] < rank[6][fs[6]]


def test_all_self_loops():
    inst = Instance(3, [[0, 1, 2], [1, 2, 0], [2, 0, 1]], [[0, 1, 2], [1, 0, 2], [2, 0, 1]])
    cycles = first_top_cycle(inst)
    assert len(cycles) == 3 and all(len(c.boys) == 1 for c in cycles)
    assert solve_ttc(inst) == solve_gs(inst)[0]


@given(instances(max_n=6))
def test_weakly_dominates_gs(inst):
    gs, _ = solve_gs(inst)
    m = solve_ttc(inst)
    assert m.is_perfect()
    for b in range(inst.n):
        assert inst.boy_rank_of_girl[b][m[b]] <= inst.boy_rank_of_girl[b][gs[b]]


@given(instances(max_n=6))
def test_first_cycle_members_get_top_choice(inst):
    for c in first_top_cycle(inst):
        for b, g in c.assignment().items():
            assert inst.boy_prefs[b][0] == g
