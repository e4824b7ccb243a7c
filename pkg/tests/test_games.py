import random
from fractions import Fraction

import pytest

import soldens.densities as dn
import soldens.games as gm
import soldens.groups as gr
from soldens.simplex import solve_lp_max


def test_simplex_basic_lp():
    # max x + y s.t. x <= 2, y <= 3, x + y <= 4
    obj, x, duals = solve_lp_max(
        [Fraction(1), Fraction(1)],
        [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)], [Fraction(1), Fraction(1)]],
        [Fraction(2), Fraction(3), Fraction(4)],
    )
    assert obj == 4
    assert sum(duals[i] * b for i, b in enumerate([2, 3, 4])) == obj  # strong duality


def test_solve_game_matching_pennies_diagonal():
    sol = gm.solve_game(gm.game([[1, 0], [0, 1]]))
    assert sol.value == Fraction(1, 2)
    assert sol.row_strategy.weight(0) == Fraction(1, 2)
    assert sol.col_strategy.weight(1) == Fraction(1, 2)


def test_solve_game_degenerate_shapes():
    assert gm.solve_game(gm.game([[Fraction(3, 7)]])).value == Fraction(3, 7)
    # single row: the column player picks the max
    assert gm.solve_game(gm.game([[1, 5, 2]])).value == 5
    # single column: the row player picks the min
    assert gm.solve_game(gm.game([[1], [5], [2]])).value == 1


def test_solve_game_scaling_and_shift():
    rng = random.Random(11)
    payoff = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)]
    base = gm.solve_game(gm.game(payoff)).value
    scaled = gm.solve_game(gm.game([[3 * v for v in row] for row in payoff])).value
    shifted = gm.solve_game(gm.game([[v + 7 for v in row] for row in payoff])).value
    assert scaled == 3 * base
    assert shifted == base + 7


def test_intersection_number_examples():
    assert gm.intersection_number([{1, 2}, {2, 3}, {1, 3}]) == Fraction(2, 3)
    assert gm.intersection_number([{1, 2, 3}]) == 1
    assert gm.intersection_number([{1}, {2}]) == Fraction(1, 2)


def test_intersection_number_monotone_under_supersets():
    rng = random.Random(5)
    for _ in range(10):
        x = set(range(6))
        family = [set(rng.sample(sorted(x), rng.randint(1, 5))) for _ in range(4)]
        base = gm.intersection_number(family, x)
        member = rng.choice(family)
        bigger = member | {rng.randrange(6)}
        assert gm.intersection_number(family + [bigger], x) >= base


def test_sigma_r_chain_on_examples():
    g = gr.cyclic(4)
    a = gr.subset(g, [0, 1])
    v, minimax, maximin = gm.sigma_R_via_game(g, a)
    assert v == Fraction(1, 2)
    fam = [gr.left_translate(g, x, a).members for x in g.elements()]
    assert gm.intersection_number(fam) == v
    assert minimax.value == maximin.value == v


def test_sigma_via_game_dedups_columns():
    s3 = gr.symmetric(3)
    transpositions = gr.subset(s3, [g for g in range(6) if s3.mul(g, g) == 0 and g != 0])
    assert gm.sigma_via_game(s3, transpositions) == Fraction(1, 2)
    assert gm.sigma_via_game(s3, gr.subset(s3, [])) == 0


def test_extremal_pattern_parsing_and_validation():
    p = gm.ExtremalPattern.parse("Ssi231")
    assert p.quantifiers == "Ssi" and p.substitution == (2, 3, 1)
    with pytest.raises(gm.GameError):
        gm.ExtremalPattern.parse("SI12")  # two capitals
    with pytest.raises(gm.GameError):
        gm.ExtremalPattern.parse("is11")


def test_extremal_pure_patterns():
    g = gr.cyclic(4)
    a = gr.subset(g, [0, 1])
    assert gm.eval_extremal(gm.ExtremalPattern.parse("ss12"), g, a) == ("exact", 1)
    assert gm.eval_extremal(gm.ExtremalPattern.parse("ii12"), g, a) == ("exact", 0)
    full = gr.subset(g, range(4))
    assert gm.eval_extremal(gm.ExtremalPattern.parse("ii21"), g, full) == ("exact", 1)
    empty = gr.subset(g, [])
    assert gm.eval_extremal(gm.ExtremalPattern.parse("ss21"), g, empty) == ("exact", 0)


def test_extremal_mixed_collapses_to_uniform_value():
    g = gr.cyclic(4)
    a = gr.subset(g, [0, 1])
    for pat in ("is12", "si21", "iss213", "Ssi231"):
        shape, value = gm.eval_extremal(gm.ExtremalPattern.parse(pat), g, a)
        assert shape == "exact" and value == Fraction(1, 2)


def test_extremal_double_alternation_interval_brackets_uniform():
    g = gr.symmetric(3)
    a = gr.subset(g, [0, 1, 2])
    shape, (lo, hi) = gm.eval_extremal(gm.ExtremalPattern.parse("sis123"), g, a)
    assert shape == "interval"
    assert lo <= Fraction(1, 2) <= hi


def test_windowed_bound_scopes():
    cert = gm.windowed_bound(
        dn.DensityKind.SIGMA_CAP_R,
        window_points=[0, 1],
        translate_sets=[{0, 2, 4}, {1, 3, 5}],
        attestation="structural",
    )
    assert cert.bound == Fraction(1, 2)
    assert cert.scope == dn.EXACT
    cert2 = gm.windowed_bound(
        dn.DensityKind.SIGMA_CAP_R, [0, 1], [{0}, {1}], "bounded", horizon=9)
    assert cert2.scope == "BOUNDED(9)"


def test_game_json_roundtrip():
    g = gm.game([[Fraction(1, 2), 0], [1, Fraction(-2, 3)]])
    again = gm.MatrixGame.from_json(g.to_json())
    assert again == g
