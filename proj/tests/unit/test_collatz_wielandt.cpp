#include "helpers.hpp"
#include "pfcone/classes.hpp"
#include "pfcone/collatz_wielandt.hpp"
#include "pfcone/eq_type2.hpp"
#include "pfcone/error.hpp"
#include "pfcone/oracle/lp.hpp"
#include "pfcone/spectral.hpp"

using namespace pfcone;
using namespace pfcone::test;

namespace {

const char* kChain3 = "[[2,1,0],[0,1,0],[0,0,1]]";
const char* kJordan = "[[1,1],[0,1]]";

// Exact LP: some x >= 0 with sum(x) >= 1 and sense * (P x - t x) >= 0.
bool ratio_feasible(const NonnegMatrix& p, const mpq_class& t, oracle::Sense sense) {
  const int n = p.n();
  oracle::LPProblem lp(n);
  for (int i = 0; i < n; ++i) {
    std::vector<mpq_class> row(n);
    for (int j = 0; j < n; ++j) row[j] = p(i, j).q();
    row[i] -= t;
    lp.add(row, sense, 0);
  }
  lp.add(std::vector<mpq_class>(n, 1), oracle::Sense::Ge, 1);
  return oracle::lp_feasible(lp).feasible;
}

NonnegMatrix random_nilpotent(std::mt19937_64& g) {
  const int n = 2 + static_cast<int>(g() % 4);
  Matrix m(n, n, Mode::Rational);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = Scalar::from_int(static_cast<long>(g() % 2), Mode::Rational);
  return NonnegMatrix(m);
}

}  // namespace

TEST_CASE("cw_numbers") {
  Analysis swap = analyze(mat("[[0,1],[1,0]]"));
  CWReport r = cw_numbers(swap, vec("[1,2]"));
  CHECK(r.r_lower == num("1/2"));
  REQUIRE(r.r_upper);
  CHECK(*r.r_upper == num("2"));
  CHECK(r.rho_x == num("1"));

  CWReport j = cw_numbers(analyze(mat(kJordan)), vec("[0,1]"));
  CHECK_FALSE(j.r_upper.has_value());
  CHECK(j.r_lower == num("1"));

  CWReport e = cw_numbers(analyze(mat("[[2,0],[1,1]]")), vec("[1,1]"));
  CHECK(e.r_lower == num("2"));
  CHECK(*e.r_upper == num("2"));
  CHECK(e.rho_x == num("2"));
}

TEST_CASE("cw_sets") {
  CWSets c = cw_sets(analyze(mat(kChain3)));
  CHECK(c.sup_omega == num("2"));
  CHECK(c.inf_sigma == num("1"));
  CHECK(c.sup_omega1 == num("1"));
  CHECK(c.inf_sigma1 == num("2"));
  CHECK_FALSE(c.inf_sigma1_attained);

  CWSets i = cw_sets(analyze(mat("[[1,0],[0,1]]")));
  CHECK(i.sup_omega == num("1"));
  CHECK(i.inf_sigma == num("1"));
  CHECK(i.sup_omega1 == num("1"));
  CHECK(i.inf_sigma1 == num("1"));
  CHECK(i.inf_sigma1_attained);

  CWSets z = cw_sets(analyze(mat("[[0,0],[0,0]]")));
  CHECK(z.sup_omega == num("0"));
  CHECK(z.inf_sigma1 == num("0"));
  CHECK(z.inf_sigma1_attained);
}

TEST_CASE("rho_in_sigma1") {
  CHECK_FALSE(rho_in_sigma1(analyze(mat(kJordan))));
  CHECK(rho_in_sigma1(analyze(mat("[[1,0,0],[0,1,0],[0,0,1]]"))));
  CHECK_FALSE(rho_in_sigma1(analyze(mat(kChain3))));
}

TEST_CASE("decompose_5_4") {
  Analysis a = analyze(mat("[[2,0],[1,1]]"));
  auto [e1, e2] = decompose_5_4(a, vec("[1,1]"));
  CHECK(e1 == vec("[1,1]"));
  CHECK(e2 == vec("[0,0]"));

  auto [x1, x2] = decompose_5_4(analyze(mat("[[2,0],[0,1]]")), vec("[1,1]"));
  CHECK(x1 == vec("[1,0]"));
  CHECK(x2 == vec("[0,1]"));

  CHECK_THROWS_AS(decompose_5_4(analyze(mat("[[0,1],[1,0]]")), vec("[1,2]")), PreconditionError);
}

TEST_CASE("decompose_5_13") {
  auto [d1, d2] = decompose_5_13(analyze(mat("[[2,0],[0,1]]")), vec("[1,0]"));
  CHECK(d1 == vec("[1,0]"));
  CHECK(d2 == vec("[0,0]"));

  auto [x1, x2] = decompose_5_13(analyze(mat("[[2,0],[1,1]]")), vec("[1,0]"));
  CHECK(x1 == vec("[1,1]"));
  CHECK(x2 == vec("[0,1]"));

  CHECK_THROWS_AS(decompose_5_13(analyze(mat(kJordan)), vec("[0,1]")), PreconditionError);
}

TEST_CASE("check_5_11") {
  Check511 id = check_5_11(analyze(mat("[[1,0],[0,1]]")));
  CHECK((id.a && id.b && id.c));
  Check511 j = check_5_11(analyze(mat(kJordan)));
  CHECK_FALSE((j.a || j.b || j.c));
  Check511 c = check_5_11(analyze(mat(kChain3)));
  CHECK(c.a == c.b);
  CHECK(c.b == c.c);
  CHECK_THROWS_AS(check_5_11(analyze(mat("[[1,0],[0,1]]", Mode::Float))), ModeMismatch);
}

TEST_CASE("boundary_5_2") {
  Boundary52 e = boundary_5_2(analyze(mat("[[2,0],[1,1]]")), vec("[1,1]"));
  CHECK(e.b == vec("[0,0]"));
  CHECK(e.on_boundary);
  CHECK_FALSE(e.rho_below_r_upper);
  CHECK_FALSE(e.generates_support);
  CHECK(e.strict_iff);

  Boundary52 s = boundary_5_2(analyze(mat("[[1,0],[1,1]]")), vec("[1,1]"));
  CHECK(s.b == vec("[1,0]"));
  CHECK(s.rho_below_r_upper);
  CHECK(s.generates_support);
  CHECK(s.strict_iff);
}

TEST_CASE("power_limit_5_6") {
  CHECK(power_limit_5_6(analyze(mat("[[2,0],[1,1]]")), vec("[1,1]")).exists);
  CHECK_FALSE(power_limit_5_6(analyze(mat("[[0,1],[1,0]]")), vec("[1,0]")).exists);
  CHECK_FALSE(power_limit_5_6(analyze(mat(kJordan)), vec("[0,1]")).exists);
  PowerLimit mixed = power_limit_5_6(analyze(mat("[[2,0],[0,1]]")), vec("[1,1]"));
  CHECK(mixed.exists);
  CHECK(mixed.orbit_settled);
}

TEST_CASE("Collatz-Wielandt numbers sandwich the local radius") {
  auto g = rng(50);
  for (int t = 0; t < 300; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    Vector x = fuzz::random_vector(g, a.n(), 0.5);
    CWReport r = cw_numbers(a, x);
    CHECK(r.r_lower <= r.rho_x);
    if (r.r_upper) CHECK(r.rho_x <= *r.r_upper);
    CHECK(r.rho_x == local_rho(a, x));
  }
}

TEST_CASE("upper number equals the local radius exactly when the residual is nonnegative") {
  auto g = rng(51);
  int equal = 0;
  for (int t = 0; t < 300; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    Vector x = fuzz::random_vector(g, a.n(), 0.4);
    if (t % 3 == 0) {
      auto dist = distinguished_classes_for(a, a.rho);
      if (!dist.empty()) x = fv_eigenvector(a, dist.front()) + hat_vector(a.p, unit_vector(a.n(), 0, Mode::Rational));
    }
    CWReport r = cw_numbers(a, x);
    bool upper_tight = r.r_upper && *r.r_upper == r.rho_x;
    Vector residual = scaled(x, r.rho_x) - a.p.mat() * x;
    CHECK(upper_tight == is_nonneg(residual));
    bool decomposes = false;
    try {
      auto [x1, x2] = decompose_5_4(a, x);
      decomposes = x1 + x2 == x && is_nonneg(x1) && is_nonneg(x2) && a.p.mat() * x1 == scaled(x1, r.rho_x);
    } catch (const PreconditionError&) {
    }
    CHECK(decomposes == upper_tight);
    equal += upper_tight;
  }
  CHECK(equal > 10);
}

TEST_CASE("extremal values of the Collatz-Wielandt sets") {
  auto g = rng(52);
  const mpq_class step(1, 1000);
  for (int t = 0; t < 150; ++t) {
    NonnegMatrix p = fuzz::random_matrix(g);
    Analysis a = analyze(p), at = analyze(p.transpose());
    CWSets s = cw_sets(a);
    CHECK(s.sup_omega == a.rho);
    CHECK(s.inf_sigma1 == a.rho);
    CHECK(s.inf_sigma == distinguished_eigenvalues(a).front());
    CHECK(s.sup_omega1 == distinguished_eigenvalues(at).front());
    CHECK(s.inf_sigma1_attained == rho_in_sigma1(a));

    CHECK(ratio_feasible(p, s.sup_omega.q(), oracle::Sense::Ge));
    CHECK_FALSE(ratio_feasible(p, s.sup_omega.q() + step, oracle::Sense::Ge));
    CHECK(ratio_feasible(p, s.inf_sigma.q(), oracle::Sense::Le));
    if (s.inf_sigma.sign() > 0) CHECK_FALSE(ratio_feasible(p, s.inf_sigma.q() - step, oracle::Sense::Le));

    REQUIRE(s.sup_omega1_witness);
    const Vector& w = *s.sup_omega1_witness;
    for (const auto& e : w) CHECK(e.sign() > 0);
    CHECK(is_nonneg(a.p.mat() * w - scaled(w, s.sup_omega1)));
  }
}

TEST_CASE("three routes to a positive vector with P x <= rho x agree") {
  auto g = rng(53);
  int attained = 0;
  for (int t = 0; t < 200; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    bool classes_final = rho_in_sigma1(a);
    CHECK(classes_final == eigen_face_covers(a));
    CHECK(classes_final == lp_rho_in_sigma1(a));
    if (classes_final && a.rho.sign() > 0) CHECK(index_nu(a, a.rho) == 1);
    attained += classes_final;
  }
  CHECK(attained > 10);
  CHECK(attained < 190);
}

TEST_CASE("the eigencone conditions agree and force an empty probe at rho") {
  auto g = rng(54);
  int all_true = 0;
  for (int t = 0; t < 150; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    Check511 c = check_5_11(a);
    CHECK(c.a == c.b);
    CHECK(c.b == c.c);
    if (c.b) {
      ++all_true;
      CHECK(solvable_face_probe(a, a.rho).empty());
    }
  }
  CHECK(all_true > 0);
}

TEST_CASE("zero lies in the upper set only for the zero matrix") {
  auto g = rng(55);
  int zero_seen = 0;
  for (int t = 0; t < 100; ++t) {
    NonnegMatrix p = t % 10 == 0 ? NonnegMatrix(Matrix(3, 3, Mode::Rational)) : random_nilpotent(g);
    Analysis a = analyze(p);
    CHECK(a.rho == num("0"));
    CWSets s = cw_sets(a);
    CHECK(s.inf_sigma1 == num("0"));
    CHECK(s.inf_sigma1_attained == p.is_zero());
    zero_seen += p.is_zero();
  }
  CHECK(zero_seen >= 10);
}
