from unirank3.arith import rat
from unirank3.classical import (
    CUSP,
    LineConfig,
    classical_text,
    parse_classical,
    tempered_class,
)
from unirank3.glring import gl_delta, m_star, product_key
from unirank3.jacquet import (
    Bounds,
    JacquetTerm,
    expand,
    gl_basis_normalize,
    mu_star,
    mu_star_induced,
    multiplicity,
    s_gl,
)
from unirank3.segments import make_segment

S = make_segment


def _rows(elem):
    out = []
    for (key, cl), c in elem:
        out.append((("x".join(str(f) for f in key) or "1"), classical_text(cl), c))
    return sorted(out)


def test_mu_star_tempered_display(configs):
    rows = _rows(mu_star(parse_classical("d([0,1]+;s)"), configs["0"]))
    assert rows == [
        ("1", "d([0,1]+;s)", 1),
        ("L{[0,1]}", "s", 1),
        ("L{[1]}", "s(0)+", 1),
    ]


def test_mu_star_has_identity_term(configs):
    for text, a in (("L([0,2];s)", "1"), ("d_sp([1,2];s)", "1"), ("d([-1,1]+;s)", "1")):
        label = parse_classical(text)
        rows = _rows(mu_star(label, configs[a]))
        assert rows.count(("1", classical_text(label), 1)) == 1


def test_s_gl_low_alpha_example(configs):
    g = s_gl(parse_classical("L([0,2];s)"), configs["0"])
    rows = sorted(("x".join(str(f) for f in k) or "1", c) for k, c in g)
    assert rows == [("L{[-1,0],[2]}", 1), ("L{[-2,0]}", 1), ("L{[0],[1,2]}", 1)]


def test_multiplicity_simple_exact(configs):
    cfg = configs["1"]
    sigma = tempered_class(CUSP)
    target = JacquetTerm(product_key([S(1)]), sigma)
    elem = mu_star_induced(m_star(gl_delta(S(1))), mu_star(sigma, cfg))
    assert multiplicity(target, elem, cfg) == 1


def test_multiplicity_distinguished_doubled(configs):
    # the doubled delta([-a,a]) (x) 1 term of M* pairs twice with 1 (x) pi
    cfg = configs["1"]
    pi = parse_classical("L([0,2];s)")
    target = JacquetTerm(product_key([S(-1, 1)]), pi)
    elem = mu_star_induced(m_star(gl_delta(S(-1, 1))), mu_star(pi, cfg))
    m = multiplicity(target, elem, cfg)
    assert not isinstance(m, Bounds)
    assert m == 4


def test_expand_normalization_idempotent(configs):
    cfg = configs["1"]
    elem = mu_star(parse_classical("L([0,2];s)"), cfg)
    once = gl_basis_normalize(expand(elem, cfg))
    twice = gl_basis_normalize(expand(once, cfg))
    assert {t: c for t, c in once} == {t: c for t, c in twice}


def test_bounds_type():
    b = Bounds(1, 3)
    assert b.lower == 1 and b.upper == 3
