#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pmv/linalg.hpp"
#include "pmv/minors.hpp"
#include "pmv/poly.hpp"
#include "pmv/tensor_ops.hpp"
#include "test_oracles.hpp"

using namespace pmv;

namespace {

SymMatrix diag_matrix(const std::vector<Rat>& d) {
  SymMatrix A(static_cast<int>(d.size()));
  for (int i = 1; i <= A.n(); ++i) A.set(i, i, d[static_cast<size_t>(i - 1)]);
  return A;
}

uint32_t mi(const char* s, int n) { return mi_from_string(s, n); }

}  // namespace

TEST_CASE("single minors") {
  SymMatrix A(3);
  A.set(1, 1, Rat(1)); A.set(2, 2, Rat(1)); A.set(3, 3, Rat(1));
  A.set(1, 2, Rat(2)); A.set(1, 3, Rat(3)); A.set(2, 3, Rat(5));

  CHECK(minor_det(A, {}, {}) == Rat(1));
  CHECK(minor_det(A, {1, 2}, {2, 3}) == Rat(7));  // det [[2,3],[1,5]]
  CHECK(minor_det_bits(A, mi("110", 3), mi("011", 3)) == Rat(7));
  CHECK(minor_det(A, {1, 2, 3}, {1, 2, 3}) ==
        testor::submatrix_det(A, {1, 2, 3}, {1, 2, 3}));
  CHECK_THROWS_AS(minor_det(A, {1, 2}, {1}), std::invalid_argument);

  SymMatrix id(4);
  for (int i = 1; i <= 4; ++i) id.set(i, i, Rat(1));
  CHECK(minor_det_bits(id, 0b1010u, 0b1010u) == Rat(1));
  CHECK(minor_det_bits(id, 0b1111u, 0b1111u) == Rat(1));
}

TEST_CASE("principal-minor map") {
  SUBCASE("identity matrix") {
    HomogenizedMatrix M{diag_matrix({Rat(1), Rat(1)}), Rat(1)};
    HyperTensor z = principal_minor_map(M);
    for (uint32_t i = 0; i < 4; ++i) CHECK(z.coeff(i) == Rat(1));
  }
  SUBCASE("antidiagonal fixture") {
    SymMatrix A(2);
    A.set(1, 2, Rat(1));
    HyperTensor z = principal_minor_map({A, Rat(1)});
    CHECK(z.coeff(mi("00", 2)) == Rat(1));
    CHECK(z.coeff(mi("01", 2)) == Rat(0));
    CHECK(z.coeff(mi("10", 2)) == Rat(0));
    CHECK(z.coeff(mi("11", 2)) == Rat(-1));
  }
  SUBCASE("diagonal input lands on a product point") {
    // x_ii = (b_i / a_i) t with t^n = prod a_i: here a = (1,2,4), t = 2
    HomogenizedMatrix M{diag_matrix({Rat(10), Rat(7), Rat(11, 2)}), Rat(2)};
    HyperTensor z = principal_minor_map(M);
    HyperTensor w = segre_point(
        {{Rat(1), Rat(5)}, {Rat(2), Rat(7)}, {Rat(4), Rat(11)}});
    CHECK(z == w);
  }
  SUBCASE("backends agree on seeded matrices up to n = 10") {
    Sampler s(501);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + trial % 10;
      HomogenizedMatrix M{testor::random_sym(s, n), s.nonzero_rational()};
      CHECK(principal_minor_map(M, Backend::naive) ==
            principal_minor_map(M, Backend::schur));
    }
  }
  SUBCASE("hollow matrices exercise the zero-pivot fallback") {
    Sampler s(502);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 2 + trial % 7;
      SymMatrix A = testor::random_sym(s, n);
      for (int i = 1; i <= n; ++i) A.set(i, i, Rat(0));
      HomogenizedMatrix M{A, Rat(1)};
      CHECK(principal_minor_map(M, Backend::naive) ==
            principal_minor_map(M, Backend::schur));
    }
  }
  SUBCASE("values match cofactor determinants") {
    Sampler s(503);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 1 + trial % 6;
      HomogenizedMatrix M{testor::random_sym(s, n), s.nonzero_rational()};
      HyperTensor z = principal_minor_map(M);
      for (uint32_t idx = 0; idx < (1u << n); ++idx) {
        Rat tp(1);
        for (int k = mi_popcount(idx); k < n; ++k) tp *= M.t;
        CHECK(z.coeff(idx) == tp * testor::submatrix_det_bits(M.A, idx, idx));
      }
    }
  }
  SUBCASE("jobs split is invisible in the result") {
    Sampler s(504);
    HomogenizedMatrix M{testor::random_sym(s, 8), Rat(1)};
    CHECK(principal_minor_map(M, Backend::schur, 1) ==
          principal_minor_map(M, Backend::schur, 4));
    CHECK(principal_minor_map(M, Backend::naive, 1) ==
          principal_minor_map(M, Backend::naive, 3));
  }
}

TEST_CASE("exclusive minors") {
  SUBCASE("no disjoint pairs below 2k indices") {
    Sampler s(505);
    CHECK(e_minors(testor::random_sym(s, 3), 2).empty());
    CHECK(e_minors(testor::random_sym(s, 5), 3).empty());
  }
  SUBCASE("n=4 size-2 enumeration") {
    SymMatrix A(4);
    A.set(1, 3, Rat(1)); A.set(2, 4, Rat(1));
    A.set(1, 4, Rat(1)); A.set(2, 3, Rat(1));
    auto ems = e_minors(A, 2);
    REQUIRE(ems.size() == 3);  // {12|34}, {13|24}, {14|23}
    bool found = false;
    for (const auto& em : ems) {
      CHECK((em.rows & em.cols) == 0u);
      CHECK(mi_popcount(em.rows) == 2);
      bool hit = (em.rows == mi("1100", 4) && em.cols == mi("0011", 4)) ||
                 (em.rows == mi("0011", 4) && em.cols == mi("1100", 4));
      if (hit) {
        found = true;
        CHECK(em.value == Rat(0));  // a13 a24 - a14 a23 with all four = 1
      }
    }
    CHECK(found);
  }
  SUBCASE("size-1 minors of a diagonal matrix all vanish") {
    auto ems = e_minors(diag_matrix({Rat(2), Rat(3), Rat(5), Rat(7)}), 1);
    CHECK(ems.size() == 6);
    for (const auto& em : ems) CHECK(em.value == Rat(0));
  }
  SUBCASE("values match cofactor determinants") {
    Sampler s(506);
    SymMatrix A = testor::random_sym(s, 6);
    for (int size = 1; size <= 3; ++size)
      for (const auto& em : e_minors(A, size))
        CHECK(em.value == testor::submatrix_det_bits(A, em.rows, em.cols));
  }
}

TEST_CASE("exclusive rank") {
  SUBCASE("diagonal and zero matrices have rank 0") {
    CHECK(erank(diag_matrix({Rat(3), Rat(-1), Rat(2)})).erank == 0);
    CHECK(erank(SymMatrix(4)).erank == 0);
    CHECK(!erank(SymMatrix(4)).witness.has_value());
  }
  SUBCASE("any 3x3 with a nonzero off-diagonal has rank 1") {
    SymMatrix A(3);
    A.set(1, 2, Rat(5));
    auto cert = erank(A);
    CHECK(cert.erank == 1);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->value == Rat(5));
  }
  SUBCASE("dense n=4 has rank 2 with a valid witness") {
    Sampler s(507);
    for (int trial = 0; trial < 10; ++trial) {
      SymMatrix A = testor::random_sym(s, 4);
      auto cert = erank(A);
      CHECK(cert.erank == 2);
      REQUIRE(cert.witness.has_value());
      const auto& w = *cert.witness;
      CHECK((w.rows & w.cols) == 0u);
      CHECK(mi_popcount(w.rows) == 2);
      CHECK(w.value != Rat(0));
      CHECK(w.value == testor::submatrix_det_bits(A, w.rows, w.cols));
    }
  }
  SUBCASE("rank never exceeds floor(n/2)") {
    Sampler s(508);
    for (int n = 1; n <= 7; ++n)
      CHECK(erank(testor::random_sym(s, n)).erank <= n / 2);
  }
}

TEST_CASE("rank-one parametrizations") {
  SUBCASE("outer product fixture") {
    SymMatrix V = veronese({Rat(1), Rat(2)});
    CHECK(V.at(1, 1) == Rat(1));
    CHECK(V.at(1, 2) == Rat(2));
    CHECK(V.at(2, 2) == Rat(4));
  }
  SUBCASE("every 2x2 minor of an outer product vanishes") {
    Sampler s(509);
    std::vector<Rat> y;
    for (int i = 0; i < 5; ++i) y.push_back(s.rational());
    SymMatrix V = veronese(y);
    for (uint32_t r = 0; r < 32; ++r) {
      if (mi_popcount(r) != 2) continue;
      for (uint32_t c = 0; c < 32; ++c) {
        if (mi_popcount(c) != 2) continue;
        CHECK(minor_det_bits(V, r, c) == Rat(0));
      }
    }
  }
  SUBCASE("outer products have exclusive rank at most 1") {
    Sampler s(510);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> y;
      for (int i = 0; i < 6; ++i) y.push_back(s.rational());
      CHECK(erank(veronese(y)).erank <= 1);
    }
  }
  SUBCASE("sampled rank-one-plus-diagonal family") {
    std::vector<Rat> w = {Rat(1), Rat(1), Rat(1), Rat(1)};
    std::vector<Rat> y = {Rat(1), Rat(2), Rat(3), Rat(4)};
    HomogenizedMatrix M = sample_erank_le1(w, y, Rat(3));
    CHECK(M.t == Rat(9));
    CHECK(M.A.at(1, 2) == Rat(2));
    CHECK(M.A.at(1, 3) == Rat(3));
    CHECK(M.A.at(1, 4) == Rat(4));
    CHECK(M.A.at(2, 3) == Rat(6));
    CHECK(M.A.at(2, 4) == Rat(8));
    CHECK(M.A.at(3, 4) == Rat(12));
    for (int i = 1; i <= 4; ++i) CHECK(M.A.at(i, i) == Rat(1));
    for (const auto& em : e_minors(M.A, 2)) CHECK(em.value == Rat(0));
    CHECK(erank(M.A).erank <= 1);
  }
  SUBCASE("all-zero y gives a diagonal matrix") {
    HomogenizedMatrix M = sample_erank_le1(
        {Rat(2), Rat(3)}, {Rat(0), Rat(0)}, Rat(1));
    CHECK(M.A.at(1, 2) == Rat(0));
    CHECK(erank(M.A).erank == 0);
  }
  SUBCASE("seeded family members always have exclusive rank at most 1") {
    Sampler s(511);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 3 + trial % 4;
      std::vector<Rat> w, y;
      for (int i = 0; i < n; ++i) {
        w.push_back(s.rational());
        y.push_back(s.rational());
      }
      CHECK(erank(sample_erank_le1(w, y, s.nonzero_rational()).A).erank <= 1);
    }
  }
}

TEST_CASE("recovering rank-one parameters") {
  SUBCASE("round-trip on a generic sample") {
    Sampler s(512);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 3 + trial % 3;
      std::vector<Rat> w, y;
      for (int i = 0; i < n; ++i) {
        w.push_back(s.rational());
        y.push_back(s.nonzero_rational());
      }
      auto M = sample_erank_le1(w, y, Rat(1));
      auto rec = complete_erank1_params(M.A);
      REQUIRE(rec.ok);
      CHECK(!rec.degenerate);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          CHECK(rec.products.at({i, j}) ==
                y[static_cast<size_t>(i - 1)] * y[static_cast<size_t>(j - 1)]);
      for (int i = 1; i <= n; ++i) {
        REQUIRE(rec.squares[static_cast<size_t>(i - 1)].has_value());
        CHECK(*rec.squares[static_cast<size_t>(i - 1)] ==
              y[static_cast<size_t>(i - 1)] * y[static_cast<size_t>(i - 1)]);
      }
    }
  }
  SUBCASE("diagonal input: products zero, squares undetermined") {
    auto rec = complete_erank1_params(diag_matrix({Rat(1), Rat(2), Rat(3)}));
    REQUIRE(rec.ok);
    CHECK(rec.degenerate);
    for (const auto& [ij, v] : rec.products) CHECK(v == Rat(0));
    for (const auto& sq : rec.squares) CHECK(!sq.has_value());
  }
  SUBCASE("a nonzero 2x2 exclusive minor is reported as the obstruction") {
    SymMatrix A(4);
    A.set(1, 3, Rat(1));
    A.set(2, 4, Rat(1));
    auto rec = complete_erank1_params(A);
    REQUIRE(!rec.ok);
    REQUIRE(rec.obstruction.has_value());
    const auto& ob = *rec.obstruction;
    CHECK((ob.rows & ob.cols) == 0u);
    CHECK(ob.value != Rat(0));
    CHECK(ob.value == testor::submatrix_det_bits(A, ob.rows, ob.cols));
  }
}

TEST_CASE("full minor vector") {
  SUBCASE("n=1 coordinates") {
    SymMatrix A(1);
    A.set(1, 1, Rat(7));
    PluckerVector psi = all_minors_vector({A, Rat(3)});
    CHECK(psi.entries().size() == 2);
    CHECK(psi.at(0u, 0u) == Rat(3));
    CHECK(psi.at(1u, 1u) == Rat(7));
  }
  SUBCASE("n=2 has five non-redundant coordinates") {
    Sampler s(513);
    SymMatrix A = testor::random_sym(s, 2);
    HomogenizedMatrix M{A, s.nonzero_rational()};
    PluckerVector psi = all_minors_vector(M);
    CHECK(psi.entries().size() == 5);
    CHECK(psi.at(mi("00", 2), mi("00", 2)) == M.t * M.t);
    CHECK(psi.at(mi("10", 2), mi("10", 2)) == M.t * A.at(1, 1));
    CHECK(psi.at(mi("10", 2), mi("01", 2)) == M.t * A.at(1, 2));
    CHECK(psi.at(mi("01", 2), mi("10", 2)) == M.t * A.at(1, 2));  // symmetric key
    CHECK(psi.at(mi("01", 2), mi("01", 2)) == M.t * A.at(2, 2));
    CHECK(psi.at(mi("11", 2), mi("11", 2)) ==
          testor::submatrix_det(A, {1, 2}, {1, 2}));
  }
  SUBCASE("principal slice reproduces the principal-minor map") {
    Sampler s(514);
    for (int n = 2; n <= 5; ++n) {
      HomogenizedMatrix M{testor::random_sym(s, n), s.nonzero_rational()};
      PluckerVector psi = all_minors_vector(M);
      HyperTensor z = principal_minor_map(M);
      for (uint32_t idx = 0; idx < (1u << n); ++idx)
        CHECK(psi.at(idx, idx) == z.coeff(idx));
    }
  }
  SUBCASE("disjoint slice carries the weighted exclusive minors") {
    Sampler s(515);
    HomogenizedMatrix M{testor::random_sym(s, 4), Rat(3)};
    PluckerVector psi = all_minors_vector(M);
    for (const auto& em : e_minors(M.A, 2))
      CHECK(psi.at(em.rows, em.cols) == M.t * M.t * em.value);
  }
  SUBCASE("JSON keys pair the two index strings") {
    SymMatrix A(1);
    A.set(1, 1, Rat(2));
    std::string j = all_minors_vector({A, Rat(1)}).to_json();
    CHECK(j == R"({"n":1,"minors":{"0|0":"1","1|1":"2"}})");
  }
}

TEST_CASE("transport of the graph plane") {
  SUBCASE("identity leaves everything fixed") {
    Sampler s(516);
    HomogenizedMatrix M{testor::random_sym(s, 3), s.nonzero_rational()};
    auto res = act_on_lagrangian_plane(GroupElement::identity(3), M);
    CHECK(res.image.A == M.A);
    CHECK(res.image.t == M.t);
    CHECK(res.scale == Rat(1));
  }
  SUBCASE("rotating an empty matrix out of graph position fails") {
    HomogenizedMatrix M{SymMatrix(2), Rat(1)};
    std::vector<Mat2> fs = {Mat2{Rat(0), Rat(1), Rat(-1), Rat(0)},
                            Mat2{Rat(1), Rat(0), Rat(0), Rat(1)}};
    GroupElement g(2, fs, {1, 2});
    CHECK_THROWS_AS(act_on_lagrangian_plane(g, M), graph_form_error);
  }
  SUBCASE("permutation parts are rejected") {
    Sampler s(517);
    HomogenizedMatrix M{testor::random_sym(s, 2), Rat(1)};
    std::vector<Mat2> id2(2, Mat2{Rat(1), Rat(0), Rat(0), Rat(1)});
    GroupElement g(2, id2, {2, 1});
    CHECK_THROWS_AS(act_on_lagrangian_plane(g, M), std::invalid_argument);
  }
  SUBCASE("principal minors transform through the tensor action") {
    // psi(A', t') = scale * (g . psi(A, t)); on the principal slice the
    // right side is the factor-wise tensor action on the minor tensor.
    Sampler s(518);
    int done = 0;
    for (int trial = 0; trial < 80 && done < 40; ++trial) {
      int n = 3 + trial % 3;
      HomogenizedMatrix M{testor::random_sym(s, n), s.nonzero_rational()};
      GroupElement g = sample_group_element(s, n, /*with_perm=*/false);
      LagrangianActionResult res;
      try {
        res = act_on_lagrangian_plane(g, M);
      } catch (const graph_form_error&) {
        continue;
      }
      ++done;
      HyperTensor lhs = principal_minor_map(res.image);
      HyperTensor rhs = apply_group(g, principal_minor_map(M)) * res.scale;
      CHECK(lhs == rhs);
    }
    CHECK(done >= 40);
  }
  SUBCASE("full-support exclusive minors are genuinely fixed") {
    // for even n the E-coordinates with R u S = {1..n} pick up only the
    // projective scale, nothing else
    Sampler s(519);
    for (int n : {4, 6}) {
      int done = 0;
      for (int trial = 0; trial < 40 && done < 15; ++trial) {
        HomogenizedMatrix M{testor::random_sym(s, n), s.nonzero_rational()};
        GroupElement g = sample_group_element(s, n, /*with_perm=*/false);
        LagrangianActionResult res;
        try {
          res = act_on_lagrangian_plane(g, M);
        } catch (const graph_form_error&) {
          continue;
        }
        ++done;
        Rat tp(1);
        for (int k = 0; k < n / 2; ++k) tp *= M.t;
        uint32_t full = (1u << n) - 1;
        for (const auto& em : e_minors(M.A, n / 2)) {
          if ((em.rows | em.cols) != full) continue;
          Rat before = tp * em.value;
          Rat after = tp * minor_det_bits(res.image.A, em.rows, em.cols);
          CHECK(after == res.scale * before);
        }
      }
      CHECK(done >= 15);
    }
  }
  SUBCASE("exclusive rank is preserved") {
    Sampler s(520);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 100; ++trial) {
      int n = 4 + trial % 3;
      SymMatrix A = testor::random_sym(s, n);
      if (trial % 3 == 0) {
        // mix in rank <= 1 inputs so both strata are exercised
        std::vector<Rat> w, y;
        for (int i = 0; i < n; ++i) {
          w.push_back(s.rational());
          y.push_back(s.rational());
        }
        A = sample_erank_le1(w, y, Rat(1)).A;
      }
      HomogenizedMatrix M{A, s.nonzero_rational()};
      GroupElement g = sample_group_element(s, n, /*with_perm=*/false);
      LagrangianActionResult res;
      try {
        res = act_on_lagrangian_plane(g, M);
      } catch (const graph_form_error&) {
        continue;
      }
      ++done;
      CHECK(erank(res.image.A).erank == erank(A).erank);
    }
    CHECK(done >= 100);
  }
}

TEST_CASE("diagonal input is equivalent to a decomposable image") {
  Sampler s(522);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 4;
    std::vector<Rat> d;
    for (int i = 0; i < n; ++i) d.push_back(s.rational());
    HomogenizedMatrix M{diag_matrix(d), s.nonzero_rational()};
    CHECK(is_decomposable(principal_minor_map(M)).decomposable);

    // one generic off-diagonal entry breaks it
    int i = 1 + static_cast<int>(s.integer(0, n - 2));
    int j = i + 1 + static_cast<int>(s.integer(0, n - i - 1));
    M.A.set(i, j, s.nonzero_rational());
    CHECK(!is_decomposable(principal_minor_map(M)).decomposable);
  }
}

TEST_CASE("matrix JSON") {
  HomogenizedMatrix M{diag_matrix({Rat(1), Rat(2)}), Rat(3)};
  M.A.set(1, 2, Rat(-1, 2));
  HomogenizedMatrix back = HomogenizedMatrix::from_json(M.to_json());
  CHECK(back.A == M.A);
  CHECK(back.t == M.t);

  CHECK_THROWS_WITH_AS(
      HomogenizedMatrix::from_json(
          R"({"n":2,"t":"1","entries":[["1","2"],["3","4"]]})"),
      doctest::Contains("(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(
      HomogenizedMatrix::from_json(R"({"n":2,"t":"1","entries":[["1","2"]]})"),
      std::invalid_argument);
}

TEST_CASE("parameter map dimension") {
  // Jacobian of (w, y, t) -> (w_i^2, y_i y_j, t^2) has rank 2n+1 at a
  // generic point.
  Sampler s(521);
  for (int n = 3; n <= 5; ++n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("t");
    VarSet vs = VarSet::custom(names);
    auto var = [&](int id) { return SparsePoly::variable(vs, id); };
    std::vector<SparsePoly> fs;
    for (int i = 0; i < n; ++i) fs.push_back(var(i) * var(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) fs.push_back(var(n + i) * var(n + j));
    fs.push_back(var(2 * n) * var(2 * n));
    std::vector<Rat> point;
    for (int i = 0; i < 2 * n + 1; ++i) point.push_back(s.nonzero_rational());
    CHECK(exact_rank(jacobian_at(fs, point)) == 2 * n + 1);
  }
}

TEST_CASE("exact rank basics") {
  CHECK(exact_rank(std::vector<std::vector<Rat>>{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(exact_rank(std::vector<std::vector<Rat>>{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(exact_rank(std::vector<std::vector<Rat>>{{Rat(0), Rat(0)}}) == 0);
  CHECK(exact_rank(std::vector<std::vector<Rat>>{
            {Rat(1, 2), Rat(1, 3)}, {Rat(3), Rat(2)}}) == 1);

  VarSet uv = VarSet::custom({"x", "y"});
  SparsePoly x = SparsePoly::variable(uv, 0), y = SparsePoly::variable(uv, 1);
  CHECK(exact_rank(std::vector<SparsePoly>{x, y, x + y}) == 2);
  CHECK(exact_rank(std::vector<SparsePoly>{x * y}) == 1);
  CHECK(exact_rank(std::vector<SparsePoly>{SparsePoly(uv)}) == 0);
}
