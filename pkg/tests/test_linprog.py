from fractions import Fraction as F

from locvol.linprog import solve_lp


def ge(coeffs, rhs):
    return (tuple(coeffs), F(rhs))


def test_max_over_unit_square():
    rows = [ge((1, 0), 0), ge((0, 1), 0), ge((-1, 0), -1), ge((0, -1), -1)]
    res = solve_lp((1, 0), rows)
    assert res.is_optimal and res.value == 1
    assert res.point[0] == 1 and 0 <= res.point[1] <= 1

    res = solve_lp((1, 1), rows)
    assert res.value == 2 and res.point == (F(1), F(1))


def test_min_with_negative_offsets():
    # triangle x,y >= 0, x + y <= 3/2 shifted: x - 2y >= -2
    rows = [ge((1, 0), 0), ge((0, 1), 0), ge((-1, -1), F(-3, 2)), ge((1, -2), -2)]
    res = solve_lp((0, 1), rows, "max")
    assert res.is_optimal
    # max y: intersection of x+y = 3/2 and x-2y = -2 -> y = 7/6
    assert res.value == F(7, 6)


def test_unbounded_and_infeasible():
    rows = [ge((1, 0), 0), ge((0, 1), 0)]
    assert solve_lp((1, 1), rows).status == "unbounded"
    assert solve_lp((-1, -1), rows).is_optimal  # min at origin

    rows_bad = rows + [ge((-1, 0), 1)]  # x <= -1 against x >= 0
    assert solve_lp((1, 0), rows_bad).status == "infeasible"


def test_equality_via_opposite_halfspaces():
    rows = [ge((1, 1), 1), ge((-1, -1), -1), ge((1, 0), 0), ge((0, 1), 0)]
    res = solve_lp((1, 0), rows)
    assert res.value == 1 and res.point in ((F(1), F(0)),)


def test_degenerate_vertices_terminate():
    # highly degenerate: many constraints through one vertex
    rows = [
        ge((1, 0, 0), 0), ge((0, 1, 0), 0), ge((0, 0, 1), 0),
        ge((-1, -1, 0), -1), ge((-1, 0, -1), -1), ge((0, -1, -1), -1),
        ge((-1, -1, -1), -1),
    ]
    res = solve_lp((1, 1, 1), rows)
    assert res.is_optimal and res.value == 1


def test_witness_satisfies_all_constraints():
    rows = [ge((2, 3), 6), ge((1, -1), -4), ge((-1, 0), -5), ge((0, -1), -5)]
    res = solve_lp((0, 1), rows, "min")
    assert res.is_optimal
    for coeffs, rhs in rows:
        assert sum(F(c) * x for c, x in zip(coeffs, res.point)) >= rhs
    value = sum(F(c) * x for c, x in zip((0, 1), res.point))
    assert value == res.value


def test_no_constraints():
    assert solve_lp((0, 0), []).is_optimal
    assert solve_lp((1, 0), []).status == "unbounded"


def test_min_x_over_staircase_hull():
    # conv{(3,0),(1,3)} + first quadrant: {x>=1, y>=0, 3x+2y>=9}
    rows = [ge((1, 0), 1), ge((0, 1), 0), ge((3, 2), 9)]
    res = solve_lp((1, 0), rows, "min")
    assert res.value == 1
    assert res.point == (F(1), F(3))
