import random
from fractions import Fraction

import pytest

import soldens.densities as dn
import soldens.groups as gr
import soldens.measures as ms


def test_closed_form():
    g = gr.cyclic(4)
    assert dn.density_closed_form(g, gr.subset(g, [0, 1])) == Fraction(1, 2)
    assert dn.density_closed_form(g, gr.subset(g, [])) == 0


def test_bruteforce_agrees_with_closed_form_small():
    g = gr.cyclic(5)
    for bits in range(2 ** 5):
        a = gr.subset(g, [i for i in range(5) if bits >> i & 1])
        for kind in dn.ALL_KINDS:
            v, witness = dn.density_bruteforce(g, a, kind)
            assert v == dn.density_closed_form(g, a, kind)
            assert witness


def test_bruteforce_witness_is_size_lex_least():
    g = gr.cyclic(4)
    a = gr.subset(g, [0, 2])  # a subgroup: the singleton witness {0} already works
    v, witness = dn.density_bruteforce(g, a, dn.DensityKind.SIGMA_R)
    assert v == Fraction(1, 2)
    assert witness == (0, 1)


def test_certificate_from_witness_and_post_check():
    g = gr.cyclic(6)
    a = gr.subset(g, [0, 1])
    cert = dn.certificate_from_witness(g, a, range(6), dn.DensityKind.SIGMA_R)
    assert cert.bound == Fraction(1, 3)
    assert cert.scope == dn.EXACT
    with pytest.raises(dn.DensityError):
        dn.BoundCertificate(dn.DensityKind.SIGMA, "upper", Fraction(1, 3),
                            cert.witness, dn.EXACT, Fraction(1, 2))


def test_certificate_from_translates_scope_tagging():
    mu = ms.uniform_on([0, 1])
    cert = dn.certificate_from_translates(
        dn.DensityKind.SIGMA_CAP_R, mu, [{0, 2}, {1, 3}], dn.bounded(50))
    assert cert.bound == Fraction(1, 2)
    assert cert.scope == "BOUNDED(50)"


def test_combine_certificates_convolves_witnesses():
    g = gr.cyclic(6)
    a, b = gr.subset(g, [0]), gr.subset(g, [3])
    ca = dn.certificate_from_witness(g, a, range(6), dn.DensityKind.SIGMA)
    cb = dn.certificate_from_witness(g, b, range(6), dn.DensityKind.SIGMA)
    combined = dn.combine_certificates(g, a, b, ca, cb)
    assert combined.bound <= ca.bound + cb.bound
    assert combined.bound == Fraction(2, 6)


def test_subadditivize_closed_form_is_already_subadditive():
    g = gr.cyclic(4)
    rng = random.Random(3)
    oracle = lambda s: Fraction(len(s), 4)
    for _ in range(5):
        a = frozenset(rng.sample(range(4), rng.randint(0, 4)))
        # the closed form is additive, so the majorant construction returns it
        assert dn.subadditivize(oracle, a, range(4)) == oracle(a)


def test_relative_density_inside_subgroup():
    g = gr.cyclic(8)
    h = gr.subset(g, [0, 2, 4, 6])
    a = gr.subset(g, [0, 2])
    assert dn.relative_density(g, h, a) == Fraction(1, 2)
    with pytest.raises(dn.DensityError):
        dn.relative_density(g, gr.subset(g, [0, 3]), a)
