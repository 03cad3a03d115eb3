#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "srfr/codes.hpp"
#include "srfr/rng.hpp"

using namespace srfr;

namespace {

struct Message {
  std::vector<Polynomial> v;
  Polynomial d;
};

// Reduced message whose denominator stays nonzero on the points.
Message sample_message(SplitMix64& rng, const EvalParams& p) {
  for (int tries = 0; tries < 256; ++tries) {
    Message msg;
    msg.d = random_poly_below(rng, p.F, p.D);
    if (msg.d.is_zero()) continue;
    bool vanish = false;
    for (const auto& a : p.alphas)
      if (msg.d.evaluate(a).is_zero()) vanish = true;
    if (vanish) continue;
    msg.v.resize(p.n);
    Polynomial g = msg.d;
    for (auto& vi : msg.v) {
      vi = random_poly_below(rng, p.F, p.N);
      g = poly_gcd(g, vi);
    }
    if (g.degree() != 0) continue;
    return msg;
  }
  throw std::runtime_error("sample_message: no admissible message found");
}

bool matches_monic_form(const DecodeResult& res, const Message& msg) {
  FieldElement c = msg.d.leading().inverse();
  if (res.d != c * msg.d) return false;
  for (std::size_t i = 0; i < msg.v.size(); ++i)
    if (res.v[i] != c * msg.v[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("encoding") {
  auto cx = fixtures::counterexample();
  EvalParams p{cx.F, {cx.F.element(2), cx.F.element(4), cx.F.element(8)}};
  p.n = 2;
  p.N = 2;
  p.D = 3;

  SUBCASE("hand-checked word") {
    ReceivedWord w = encode(p, cx.v, cx.d);
    REQUIRE(w.omega.rows() == 2);
    REQUIRE(w.omega.cols() == 3);
    long long want[2][3] = {{7, 4, 0}, {6, 5, 0}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(w.omega.at(i, j) == cx.F.element(want[i][j]));
  }

  SUBCASE("constant denominator gives plain evaluations") {
    ReceivedWord w = encode(p, cx.v, Polynomial::constant(cx.F.one()));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(w.omega.at(i, j) == cx.v[i].evaluate(p.alphas[j]));
  }

  SUBCASE("zero numerators") {
    ReceivedWord w = encode(p, {Polynomial(), Polynomial()}, cx.d);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(w.omega.at(i, j).is_zero());
  }

  SUBCASE("vanishing denominator") {
    Polynomial d = Polynomial::of(cx.F, {-4, 1});  // root at 4
    CHECK_THROWS_AS(encode(p, cx.v, d), std::domain_error);
  }
}

TEST_CASE("error injection") {
  PrimeField F(13);
  EvalParams p{F, {F.element(1), F.element(2), F.element(3), F.element(4)}};
  p.n = 2;
  p.N = 2;
  p.D = 1;
  SplitMix64 rng(2);
  Message msg = sample_message(rng, p);
  ReceivedWord w = encode(p, msg.v, msg.d);

  SUBCASE("empty pattern is the identity") {
    ReceivedWord w2 = inject_errors(w, {});
    CHECK(w2.omega == w.omega);
  }

  SUBCASE("columns add at the support only") {
    ErrorPattern e;
    e.support = {0, 2};
    e.columns = {{F.element(5), F.element(1)}, {F.element(0), F.element(7)}};
    ReceivedWord w2 = inject_errors(w, e);
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == 0) {
        CHECK(w2.omega.at(0, j) == w.omega.at(0, j) + F.element(5));
        CHECK(w2.omega.at(1, j) == w.omega.at(1, j) + F.element(1));
      } else if (j == 2) {
        CHECK(w2.omega.at(0, j) == w.omega.at(0, j));
        CHECK(w2.omega.at(1, j) == w.omega.at(1, j) + F.element(7));
      } else {
        CHECK(w2.omega.at(0, j) == w.omega.at(0, j));
        CHECK(w2.omega.at(1, j) == w.omega.at(1, j));
      }
    }
  }

  SUBCASE("rejects malformed patterns") {
    ErrorPattern e;
    e.support = {2, 0};
    e.columns = {{F.element(1), F.element(1)}, {F.element(1), F.element(1)}};
    CHECK_THROWS_AS(inject_errors(w, e), std::invalid_argument);

    e.support = {1, 1};
    CHECK_THROWS_AS(inject_errors(w, e), std::invalid_argument);

    e.support = {4};
    e.columns = {{F.element(1), F.element(1)}};
    CHECK_THROWS_AS(inject_errors(w, e), std::invalid_argument);

    e.support = {1};
    e.columns = {{F.element(1)}};
    CHECK_THROWS_AS(inject_errors(w, e), std::invalid_argument);

    e.columns = {{F.element(0), F.element(0)}};
    CHECK_THROWS_AS(inject_errors(w, e), std::invalid_argument);

    e.support = {1, 2};
    e.columns = {{F.element(1), F.element(1)}};
    CHECK_THROWS_AS(inject_errors(w, e), std::invalid_argument);
  }
}

TEST_CASE("decoding without errors") {
  PrimeField F(101);
  SplitMix64 rng(11);
  for (int t = 0; t < 40; ++t) {
    EvalParams p{F, {}};
    p.n = 1 + rng.below(3);
    p.N = 1 + static_cast<int>(rng.below(3));
    p.D = 1 + static_cast<int>(rng.below(3));
    p.eps = 0;
    std::size_t f = static_cast<std::size_t>(p.N + p.D - 1);
    p.alphas = random_distinct_points(rng, F, f);

    Message msg = sample_message(rng, p);
    DecodeResult res = srfrwe_solve(encode(p, msg.v, msg.d), p);
    CHECK(res.success);
    CHECK(matches_monic_form(res, msg));
    CHECK(res.lambda_degree == 0);
    CHECK(res.agreements == f);
  }
}

TEST_CASE("reed-solomon decoding at the classical radius") {
  PrimeField F(13);
  SplitMix64 rng(19);
  EvalParams p{F, {}};
  p.n = 1;
  p.N = 2;
  p.D = 1;
  p.eps = 1;
  std::size_t f = static_cast<std::size_t>(p.N + 2 * p.eps);
  p.alphas.clear();
  for (std::size_t j = 0; j < f; ++j) p.alphas.push_back(F.element_u(j));

  for (std::size_t pos = 0; pos < f; ++pos) {
    Message msg;
    msg.v = {random_poly_below(rng, F, p.N)};
    msg.d = Polynomial::constant(F.one());
    ErrorPattern e;
    e.support = {pos};
    e.columns = {{random_nonzero(rng, F)}};
    DecodeResult res = srfrwe_solve(inject_errors(encode(p, msg.v, msg.d), e), p);
    CHECK(res.success);
    CHECK(res.v[0] == msg.v[0]);
    CHECK(res.d == msg.d);
    CHECK(res.lambda_degree == 1);
    CHECK(res.locator == vanishing_poly(F, std::vector<FieldElement>{p.alphas[pos]}));
    CHECK(res.agreements == f - 1);
  }
}

TEST_CASE("locator identifies the corrupted columns") {
  PrimeField F(10007);
  SplitMix64 rng(29);
  EvalParams p{F, {}};
  p.n = 2;
  p.N = 2;
  p.D = 2;
  p.eps = 2;
  std::size_t f = static_cast<std::size_t>(p.N + p.D - 1 + 2 * p.eps);
  p.alphas = random_distinct_points(rng, F, f);

  for (int t = 0; t < 20; ++t) {
    Message msg = sample_message(rng, p);
    ErrorPattern e;
    e.support = {1, 4};
    e.columns = {{random_nonzero(rng, F), random_element(rng, F)},
                 {random_element(rng, F), random_nonzero(rng, F)}};
    DecodeResult res = srfrwe_solve(inject_errors(encode(p, msg.v, msg.d), e), p);
    REQUIRE(res.success);
    CHECK(matches_monic_form(res, msg));
    Polynomial lam =
        vanishing_poly(F, std::vector<FieldElement>{p.alphas[1], p.alphas[4]});
    CHECK(res.locator == lam);
    CHECK(res.lambda_degree == 2);
    CHECK(res.agreements + p.eps >= f);
  }
}

TEST_CASE("underdetermined words flag ambiguity") {
  PrimeField F(13);
  EvalParams p{F, {F.element(1), F.element(2)}};
  p.n = 1;
  p.N = 2;
  p.D = 2;
  p.eps = 0;
  Message msg;
  msg.v = {Polynomial::constant(F.one())};
  msg.d = Polynomial::constant(F.one());
  DecodeResult res = srfrwe_solve(encode(p, msg.v, msg.d), p);
  CHECK(res.ambiguous);
  CHECK(res.kdim > 1);
}

TEST_CASE("black box queries") {
  PrimeField F(17);
  BlackBoxPLS box;
  box.A = PolyMatrix(2, 2);
  box.A.at(0, 0) = Polynomial::x_power(F, 1);
  box.A.at(0, 1) = Polynomial::constant(F.one());
  box.A.at(1, 1) = Polynomial::constant(F.one());
  box.b = {Polynomial::constant(F.one()), Polynomial::x_power(F, 1)};

  SUBCASE("regular point") {
    // At alpha: y_2 = alpha, y_1 = (1 - alpha) / alpha.
    FieldElement alpha = F.element(3);
    auto y = query_pls(box, alpha);
    REQUIRE(y.has_value());
    CHECK((*y)[1] == alpha);
    CHECK((*y)[0] * alpha == F.one() - alpha);
  }

  SUBCASE("singular point") {
    CHECK_FALSE(query_pls(box, F.element(0)).has_value());
  }
}

TEST_CASE("polynomial determinants") {
  PrimeField F(17);
  PolyMatrix I(3, 3);
  for (int i = 0; i < 3; ++i) I.at(i, i) = Polynomial::constant(F.one());
  CHECK(poly_det(I) == Polynomial::constant(F.one()));

  PolyMatrix Tr(2, 2);
  Tr.at(0, 0) = Polynomial::x_power(F, 1);
  Tr.at(0, 1) = Polynomial::of(F, {5, 3});
  Tr.at(1, 1) = Polynomial::of(F, {1, 1});
  CHECK(poly_det(Tr) == Polynomial::of(F, {0, 1, 1}));  // x(x+1)

  SplitMix64 rng(31);
  for (int t = 0; t < 20; ++t) {
    PolyMatrix A(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) A.at(i, j) = random_poly_below(rng, F, 3);
    CHECK(poly_det(A) == A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0));
  }

  PolyMatrix Z(2, 2);
  Z.at(0, 1) = Polynomial::x_power(F, 1);
  CHECK(poly_det(Z).is_zero());
}

TEST_CASE("symbolic rational solving") {
  PrimeField F(17);

  SUBCASE("single equation reduces the fraction") {
    PolyMatrix A(1, 1);
    A.at(0, 0) = Polynomial::x_power(F, 2);
    RationalSolution sol = cramer_solve(A, {Polynomial::x_power(F, 1)});
    CHECK(sol.v[0] == Polynomial::constant(F.one()));
    CHECK(sol.d == Polynomial::x_power(F, 1));
  }

  SUBCASE("triangular fixture") {
    PolyMatrix A(2, 2);
    A.at(0, 0) = Polynomial::x_power(F, 1);
    A.at(0, 1) = Polynomial::constant(F.one());
    A.at(1, 1) = Polynomial::constant(F.one());
    RationalSolution sol =
        cramer_solve(A, {Polynomial::constant(F.one()), Polynomial::x_power(F, 1)});
    CHECK(sol.d == Polynomial::x_power(F, 1));
    CHECK(sol.v[0] == Polynomial::of(F, {1, -1}));
    CHECK(sol.v[1] == Polynomial::x_power(F, 2));
  }

  SUBCASE("singular matrix") {
    PolyMatrix A(2, 2);
    Polynomial one = Polynomial::constant(F.one());
    A.at(0, 0) = one;
    A.at(0, 1) = one;
    A.at(1, 0) = one;
    A.at(1, 1) = one;
    CHECK_THROWS_AS(cramer_solve(A, {one, one}), std::domain_error);
  }

  SUBCASE("solves the system") {
    SplitMix64 rng(37);
    for (int t = 0; t < 20; ++t) {
      PolyMatrix A(2, 2);
      std::vector<Polynomial> b(2);
      do {
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) A.at(i, j) = random_poly_below(rng, F, 2);
      } while (poly_det(A).is_zero());
      for (auto& e : b) e = random_poly_below(rng, F, 2);
      RationalSolution sol = cramer_solve(A, b);
      CHECK(sol.d.is_monic());
      for (std::size_t i = 0; i < 2; ++i) {
        Polynomial lhs;
        for (std::size_t j = 0; j < 2; ++j) lhs = lhs + A.at(i, j) * sol.v[j];
        CHECK(lhs == b[i] * sol.d);
      }
    }
  }
}

TEST_CASE("linear system pipeline") {
  PrimeField F(10007);
  BlackBoxPLS box;
  box.A = PolyMatrix(2, 2);
  box.A.at(0, 0) = Polynomial::x_power(F, 1);
  box.A.at(0, 1) = Polynomial::constant(F.one());
  box.A.at(1, 1) = Polynomial::constant(F.one());
  box.b = {Polynomial::constant(F.one()), Polynomial::x_power(F, 1)};

  EvalParams p{F, {}};
  p.n = 2;
  p.N = 3;  // n * deg A + 1
  p.D = 3;

  auto points_from = [&](std::initializer_list<long long> vals) {
    std::vector<FieldElement> pts;
    for (long long v : vals) pts.push_back(F.element(v));
    return pts;
  };

  SUBCASE("fault free") {
    p.eps = 0;
    p.alphas = points_from({1, 2, 3, 4, 5});
    PlsweResult res = plswe_pipeline(box, p);
    CHECK(res.skipped.empty());
    CHECK(res.decode.success);
    CHECK(res.matches_truth);
    CHECK(res.truth.d == Polynomial::x_power(F, 1));
  }

  SUBCASE("singular point is skipped and reported") {
    p.eps = 0;
    p.alphas = points_from({0, 1, 2, 3, 4, 5});
    PlsweResult res = plswe_pipeline(box, p);
    CHECK(res.skipped == std::vector<std::size_t>{0});
    CHECK(res.matches_truth);
  }

  SUBCASE("faults are located after the skip remap") {
    p.eps = 1;
    p.alphas = points_from({0, 1, 2, 3, 4, 5, 6, 7});
    box.faults.support = {2};  // alpha = 2, position 1 after dropping the singular point
    box.faults.columns = {{F.element(9), F.element(4)}};
    PlsweResult res = plswe_pipeline(box, p);
    CHECK(res.skipped == std::vector<std::size_t>{0});
    CHECK(res.matches_truth);
    CHECK(res.decode.lambda_degree == 1);
    CHECK(res.decode.locator.evaluate(F.element(2)).is_zero());
  }

  SUBCASE("fault on a skipped point is dropped") {
    p.eps = 1;
    p.alphas = points_from({0, 1, 2, 3, 4, 5, 6, 7});
    box.faults.support = {0};
    box.faults.columns = {{F.element(9), F.element(4)}};
    PlsweResult res = plswe_pipeline(box, p);
    CHECK(res.matches_truth);
    CHECK(res.decode.lambda_degree == 0);
  }

  SUBCASE("single unknown") {
    BlackBoxPLS sbox;
    sbox.A = PolyMatrix(1, 1);
    sbox.A.at(0, 0) = Polynomial::of(F, {1, 1});
    sbox.b = {Polynomial::x_power(F, 1)};
    EvalParams sp{F, points_from({1, 2, 3, 4, 5})};
    sp.n = 1;
    sp.N = 2;
    sp.D = 2;
    sp.eps = 1;
    PlsweResult res = plswe_pipeline(sbox, sp);
    CHECK(res.matches_truth);
    CHECK(res.truth.v[0] == Polynomial::x_power(F, 1));
    CHECK(res.truth.d == Polynomial::of(F, {1, 1}));
  }
}
