#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "pmv/linalg.hpp"
#include "pmv/minors.hpp"
#include "pmv/poly.hpp"
#include "pmv/pullback.hpp"
#include "pmv/rng.hpp"
#include "pmv/schur_gen.hpp"
#include "pmv/tensor_ops.hpp"
#include "test_oracles.hpp"

using namespace pmv;

namespace {

// Random polynomial with the given number of terms.
SparsePoly random_poly(Sampler& s, const VarSet& vs, int nterms, int maxdeg) {
  SparsePoly f(vs);
  for (int i = 0; i < nterms; ++i) {
    Monomial m;
    int deg = static_cast<int>(s.integer(0, maxdeg));
    std::vector<int> count(static_cast<size_t>(vs.count()), 0);
    for (int d = 0; d < deg; ++d)
      ++count[static_cast<size_t>(s.integer(0, vs.count() - 1))];
    for (int v = 0; v < vs.count(); ++v)
      if (count[static_cast<size_t>(v)])
        m.exps.emplace_back(v, count[static_cast<size_t>(v)]);
    f.add_term(m, s.rational());
  }
  return f;
}

// Point vector in the A-variable order a_11, a_12, ..., a_nn, t.
std::vector<Rat> a_point(const HomogenizedMatrix& M) {
  std::vector<Rat> pt;
  for (int i = 1; i <= M.A.n(); ++i)
    for (int j = i; j <= M.A.n(); ++j) pt.push_back(M.A.at(i, j));
  pt.push_back(M.t);
  return pt;
}

SparsePoly substitute_t(const SparsePoly& f, const Rat& tval) {
  const VarSet& av = f.vars();
  std::vector<SparsePoly> images;
  for (int v = 0; v < av.count() - 1; ++v)
    images.push_back(SparsePoly::variable(av, v));
  images.push_back(SparsePoly::constant(av, tval));
  return f.substitute(av, images);
}

}  // namespace

TEST_CASE("variable universes") {
  CHECK(VarSet::X(3).count() == 8);
  CHECK(VarSet::A(4).count() == 11);
  CHECK(VarSet::UVW().count() == 3);
  CHECK(VarSet::custom({"p", "q"}).count() == 2);

  VarSet av = VarSet::A(4);
  CHECK(av.name(0) == "a_1_1");
  CHECK(av.name(1) == "a_1_2");
  CHECK(av.name(4) == "a_2_2");
  CHECK(av.name(10) == "t");
  for (int v = 0; v < av.count(); ++v) CHECK(av.var_from_name(av.name(v)) == v);

  VarSet xv = VarSet::X(3);
  CHECK(xv.name(5) == "101");
  CHECK(xv.var_from_name("101") == 5);
  CHECK_THROWS_AS(xv.var_from_name("2001"), std::invalid_argument);
  CHECK_THROWS_AS(av.var_from_name("a_2_1"), std::invalid_argument);
  CHECK_THROWS_AS(av.name(11), std::invalid_argument);
}

TEST_CASE("monomial order and leading terms") {
  VarSet vs = VarSet::custom({"x", "y"});
  SparsePoly x = SparsePoly::variable(vs, 0), y = SparsePoly::variable(vs, 1);

  SparsePoly f = x + y * y;  // degree dominates
  CHECK(f.leading_monomial().exp_of(1) == 2);

  SparsePoly g = x * x + x * y;  // tie broken at the first variable
  CHECK(g.leading_monomial().exp_of(0) == 2);
  CHECK(g.leading_coeff() == Rat(1));

  SparsePoly sq = (x + y) * (x + y);
  CHECK(sq.term_count() == 3);
  CHECK(sq.to_text() == "x^2 + 2*x*y + y^2");
  CHECK(sq.degree() == 2);

  CHECK(SparsePoly(vs).to_text() == "0");
  CHECK(SparsePoly(vs).degree() == -1);
  CHECK((-x + SparsePoly::constant(vs, Rat(1))).to_text() == "-x + 1");
  CHECK((x * Rat(-1, 2)).to_text() == "-1/2*x");
}

TEST_CASE("ring axioms on sampled polynomials") {
  Sampler s(601);
  VarSet vs = VarSet::X(2);
  for (int trial = 0; trial < 25; ++trial) {
    SparsePoly f = random_poly(s, vs, 4, 3);
    SparsePoly g = random_poly(s, vs, 4, 3);
    SparsePoly h = random_poly(s, vs, 3, 2);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f - f).is_zero());
    CHECK(-(-f) == f);
    CHECK(f * Rat(0) == SparsePoly(vs));
  }
}

TEST_CASE("evaluation") {
  VarSet vs = VarSet::custom({"x", "y"});
  SparsePoly x = SparsePoly::variable(vs, 0), y = SparsePoly::variable(vs, 1);
  SparsePoly f = x * x * y - y * Rat(3);
  CHECK(f.eval({Rat(2), Rat(5)}) == Rat(5));
  CHECK(f.eval({Rat(1, 2), Rat(4)}) == Rat(-11));
  CHECK(SparsePoly::constant(vs, Rat(7)).eval({Rat(0), Rat(0)}) == Rat(7));
  CHECK_THROWS_AS(f.eval({Rat(1)}), std::invalid_argument);

  SUBCASE("tensor evaluation matches coordinate substitution") {
    Sampler s(602);
    VarSet xv = VarSet::X(3);
    for (int trial = 0; trial < 20; ++trial) {
      SparsePoly g = random_poly(s, xv, 5, 3);
      HyperTensor z = sample_tensor(s, 3);
      std::vector<Rat> pt;
      for (uint32_t i = 0; i < 8; ++i) pt.push_back(z.coeff(i));
      CHECK(eval_on_tensor(g, z) == g.eval(pt));
    }
    HyperTensor z2 = sample_tensor(s, 2);
    CHECK_THROWS_AS(eval_on_tensor(random_poly(s, xv, 2, 2), z2),
                    std::invalid_argument);
  }

  SUBCASE("modular evaluation agrees for integer data") {
    Sampler s(603);
    VarSet xv = VarSet::X(2);
    for (int trial = 0; trial < 25; ++trial) {
      SparsePoly g(xv);
      for (int i = 0; i < 5; ++i) {
        Monomial m;
        int v = static_cast<int>(s.integer(0, 3));
        m.exps.emplace_back(v, static_cast<int>(s.integer(1, 3)));
        g.add_term(m, Rat(s.integer(-9, 9)));
      }
      std::vector<Rat> pt;
      std::vector<long> ptm;
      for (int i = 0; i < 4; ++i) {
        long c = s.integer(0, 100);
        pt.push_back(Rat(c));
        ptm.push_back(c % 101);
      }
      mpz_class num = g.eval(pt).get_num();
      long want = mpz_class((num % 101 + 101) % 101).get_si();
      CHECK(g.eval_mod(ptm, 101) == want);
    }
  }

  SUBCASE("modular evaluation rejects a divisible denominator") {
    SparsePoly f2 = SparsePoly::constant(vs, Rat(1, 101));
    CHECK_THROWS_AS(f2.eval_mod({0L, 0L}, 101), std::runtime_error);
    // away from 101 the denominator is cleared: the poly becomes 1
    CHECK(f2.eval_mod({0L, 0L}, 7) == 1);
  }
}

TEST_CASE("derivatives") {
  VarSet vs = VarSet::custom({"x", "y"});
  SparsePoly x = SparsePoly::variable(vs, 0), y = SparsePoly::variable(vs, 1);
  CHECK((x * x * y).derivative(0) == x * y * Rat(2));
  CHECK((x * x * y).derivative(1) == x * x);
  CHECK(SparsePoly::constant(vs, Rat(5)).derivative(0).is_zero());

  Sampler s(604);
  for (int trial = 0; trial < 20; ++trial) {
    SparsePoly f = random_poly(s, vs, 4, 4);
    SparsePoly g = random_poly(s, vs, 4, 4);
    for (int v = 0; v < 2; ++v)
      CHECK((f * g).derivative(v) ==
            f.derivative(v) * g + f * g.derivative(v));
  }
}

TEST_CASE("substitution") {
  VarSet vs = VarSet::custom({"x", "y"});
  SparsePoly x = SparsePoly::variable(vs, 0), y = SparsePoly::variable(vs, 1);
  SparsePoly f = x * x + y;
  CHECK(f.substitute(vs, {y, x}) == y * y + x);
  CHECK(f.substitute(vs, {x + y, SparsePoly::constant(vs, Rat(1))}) ==
        (x + y) * (x + y) + SparsePoly::constant(vs, Rat(1)));

  // collapsing the three binomial generators to one variable kills them
  VarSet uvw = VarSet::UVW();
  SparsePoly u = SparsePoly::variable(uvw, 0), v = SparsePoly::variable(uvw, 1),
             w = SparsePoly::variable(uvw, 2);
  CHECK((u - w).substitute(uvw, {w, w, w}).is_zero());
  CHECK((u * u - v * w).substitute(uvw, {w, w, w}).is_zero());
  CHECK_THROWS_AS(f.substitute(vs, {x}), std::invalid_argument);
}

TEST_CASE("content and normalization") {
  VarSet vs = VarSet::custom({"x", "y"});
  SparsePoly x = SparsePoly::variable(vs, 0), y = SparsePoly::variable(vs, 1);

  SparsePoly f = x * x * Rat(4) - x * y * Rat(6);
  CHECK(f.content() == Rat(2));
  CHECK(f.normalized() == x * x * Rat(2) - x * y * Rat(3));

  SparsePoly g = -x * Rat(2) - y * Rat(4);  // sign flips to keep leading > 0
  CHECK(g.content() == Rat(-2));
  CHECK(g.normalized() == x + y * Rat(2));

  SparsePoly h = x * Rat(1, 2) + y * Rat(1, 3);
  CHECK(h.content() == Rat(1, 6));
  CHECK(h.normalized() == x * Rat(3) + y * Rat(2));

  CHECK(SparsePoly(vs).content() == Rat(0));

  Sampler s(605);
  for (int trial = 0; trial < 20; ++trial) {
    SparsePoly r = random_poly(s, vs, 5, 4);
    if (r.is_zero()) continue;
    CHECK(r.normalized() * r.content() == r);
    CHECK(r.normalized().normalized() == r.normalized());
    CHECK(r.normalized().leading_coeff() > 0);
  }
}

TEST_CASE("per-factor weights") {
  CHECK(wedge_quadric(4).multiweight() == std::vector<int>{0, 0, 0, 0});
  auto hwvs = cubic_hwvs();
  for (const auto& f : hwvs)
    CHECK(f.multiweight() == std::vector<int>{1, 1, 1, 1});
  CHECK(hd_hwv3().multiweight() == std::vector<int>{0, 0, 0});

  VarSet xv = VarSet::X(1);
  SparsePoly mixed = SparsePoly::variable(xv, 0) + SparsePoly::variable(xv, 1);
  CHECK(!mixed.multiweight().has_value());

  VarSet vs = VarSet::custom({"x"});
  CHECK(!SparsePoly::variable(vs, 0).multiweight().has_value());

  // lowering shifts one slot by -2, raising shifts it back
  SparsePoly f1 = cubic_hwvs()[0];
  SparsePoly low = lower(f1, 2);
  CHECK(!low.is_zero());
  CHECK(low.multiweight() == std::vector<int>{1, -1, 1, 1});
  CHECK(raise_op(low, 2).multiweight() == std::vector<int>{1, 1, 1, 1});
  CHECK(raise_op(f1, 2).is_zero());  // nothing above a highest weight vector
}

TEST_CASE("polynomial JSON") {
  Sampler s(606);
  for (const VarSet& vs : {VarSet::X(3), VarSet::A(3), VarSet::UVW(),
                           VarSet::custom({"alpha", "beta"})}) {
    SparsePoly f = random_poly(s, vs, 6, 4);
    SparsePoly back = SparsePoly::from_json(f.to_json());
    CHECK(back == f);
  }
  CHECK(SparsePoly::from_json(wedge_quadric(4).to_json()) == wedge_quadric(4));

  CHECK_THROWS_AS(SparsePoly::from_json(R"({"vars":"Z","terms":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      SparsePoly::from_json(
          R"({"vars":"uvw","terms":[{"c":"1","e":{"u":-1}}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      SparsePoly::from_json(
          R"({"vars":"uvw","terms":[{"c":"1","e":{"q":1}}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      SparsePoly::from_json(R"({"vars":"X","n":2,"terms":[{"c":"x","e":{}}]})"),
      std::invalid_argument);

  // serialization is deterministic and order-canonical
  SparsePoly f = random_poly(s, VarSet::X(2), 5, 3);
  SparsePoly g = SparsePoly(VarSet::X(2)) + f;
  CHECK(f.to_json() == g.to_json());
  CHECK(f.to_text() == g.to_text());
}

TEST_CASE("symbolic principal minors") {
  Sampler s(607);
  for (int n = 1; n <= 5; ++n) {
    HomogenizedMatrix M{testor::random_sym(s, n), Rat(1)};
    std::vector<Rat> pt = a_point(M);
    for (uint32_t idx = 0; idx < (1u << n); ++idx) {
      const SparsePoly& d = symbolic_principal_minor(n, idx);
      CHECK(d.eval(pt) == testor::submatrix_det_bits(M.A, idx, idx));
    }
  }
  // degree = size of the index set; empty set gives the constant 1
  CHECK(symbolic_principal_minor(3, 0u).to_text() == "1");
  CHECK(symbolic_principal_minor(3, 7u).degree() == 3);
}

TEST_CASE("pullback of tensor-coordinate polynomials") {
  SUBCASE("single variable becomes a weighted minor") {
    // X^{01} at n=2 picks up t * a_22
    SparsePoly f = SparsePoly::variable(VarSet::X(2), 1);
    SparsePoly pb = pullback(f, 2);
    VarSet av = VarSet::A(2);
    SparsePoly want = SparsePoly::variable(av, av.var_from_name("t")) *
                      SparsePoly::variable(av, av.var_from_name("a_2_2"));
    CHECK(pb == want);
  }
  SUBCASE("is linear and multiplicative") {
    Sampler s(608);
    VarSet xv = VarSet::X(3);
    for (int trial = 0; trial < 10; ++trial) {
      SparsePoly f = random_poly(s, xv, 3, 2);
      SparsePoly g = random_poly(s, xv, 3, 2);
      CHECK(pullback(f + g, 3) == pullback(f, 3) + pullback(g, 3));
      CHECK(pullback(f * g, 3) == pullback(f, 3) * pullback(g, 3));
    }
  }
  SUBCASE("commutes with evaluation through the minor map") {
    Sampler s(609);
    std::vector<SparsePoly> polys = {wedge_quadric(4), cubic_hwvs()[0],
                                     cubic_hwvs()[1], cubic_hwvs()[2]};
    for (const SparsePoly& f : polys) {
      for (int trial = 0; trial < 5; ++trial) {
        HomogenizedMatrix M{testor::random_sym(s, 4), s.nonzero_rational()};
        CHECK(pullback(f, 4).eval(a_point(M)) ==
              eval_on_tensor(f, principal_minor_map(M)));
      }
    }
    for (int trial = 0; trial < 10; ++trial) {
      int n = 3 + trial % 2;
      SparsePoly f = random_poly(s, VarSet::X(n), 4, 3);
      HomogenizedMatrix M{testor::random_sym(s, n), s.nonzero_rational()};
      CHECK(pullback(f, n).eval(a_point(M)) ==
            eval_on_tensor(f, principal_minor_map(M)));
    }
  }
  SUBCASE("the three cubic generators pull back without diagonal entries") {
    VarSet av = VarSet::A(4);
    std::vector<int> diag = {av.var_from_name("a_1_1"), av.var_from_name("a_2_2"),
                             av.var_from_name("a_3_3"), av.var_from_name("a_4_4")};
    for (const SparsePoly& f : cubic_hwvs()) {
      SparsePoly pb = pullback(f, 4);
      for (const auto& [m, c] : pb.terms())
        for (int dvar : diag) CHECK(m.exp_of(dvar) == 0);
    }
  }
  SUBCASE("wrong arity rejected") {
    CHECK_THROWS_AS(pullback(wedge_quadric(4), 3), std::invalid_argument);
  }
}

TEST_CASE("rewriting into the off-diagonal product variables") {
  SUBCASE("the three pulled-back cubics reduce to zero normal form") {
    auto hwvs = cubic_hwvs();
    for (int i = 0; i < 3; ++i) {
      SparsePoly pb = substitute_t(pullback(hwvs[i], 4), Rat(1)).normalized();
      UvwRewrite r = rewrite_uvw(pb);
      CHECK(r.normal_form.is_zero());
      CHECK(!r.in_uvw.is_zero());
      CHECK(r.in_uvw.degree() == 2);
    }
  }
  SUBCASE("first reduction is the symmetric three-square form") {
    SparsePoly pb = substitute_t(pullback(cubic_hwvs()[0], 4), Rat(1)).normalized();
    VarSet uvw = VarSet::UVW();
    SparsePoly u = SparsePoly::variable(uvw, 0),
               v = SparsePoly::variable(uvw, 1),
               w = SparsePoly::variable(uvw, 2);
    CHECK(rewrite_uvw(pb).in_uvw ==
          u * u + v * v + w * w - u * v - u * w - v * w);
  }
  SUBCASE("the three reductions span a rank-3 space") {
    std::vector<SparsePoly> red;
    for (const auto& f : cubic_hwvs())
      red.push_back(
          rewrite_uvw(substitute_t(pullback(f, 4), Rat(1)).normalized()).in_uvw);
    CHECK(exact_rank(red) == 3);
  }
  SUBCASE("monomials outside the product alphabet are named") {
    // a diagonal entry cannot be expressed in u, v, w
    VarSet av = VarSet::A(4);
    SparsePoly bad = SparsePoly::variable(av, av.var_from_name("a_1_1"));
    CHECK_THROWS_WITH_AS(rewrite_uvw(bad), doctest::Contains("a_1_1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(rewrite_uvw(wedge_quadric(4)), std::invalid_argument);
  }
}
