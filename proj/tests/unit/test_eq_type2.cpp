#include <cmath>

#include "helpers.hpp"
#include "pfcone/classes.hpp"
#include "pfcone/eq_type1.hpp"
#include "pfcone/eq_type2.hpp"
#include "pfcone/error.hpp"
#include "pfcone/linalg.hpp"
#include "pfcone/spectral.hpp"

using namespace pfcone;
using namespace pfcone::test;

namespace {

const char* kChain3 = "[[2,1,0],[0,1,0],[0,0,1]]";
const char* kJordan = "[[1,1],[0,1]]";

int class_of(const Analysis& a, int vertex) { return a.classes.vertex_class[vertex]; }

Matrix shifted(const Analysis& a, const Scalar& lambda) { return shift_diagonal(a.p.mat(), -lambda); }

std::vector<Scalar> lambda_sweep(const Analysis& a) {
  std::vector<Scalar> rs = a.radii;
  std::sort(rs.begin(), rs.end());
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].sign() > 0 && (out.empty() || out.back() != rs[i])) out.push_back(rs[i]);
    if (i + 1 < rs.size() && rs[i] != rs[i + 1]) out.push_back((rs[i] + rs[i + 1]) / a.scalar(2));
  }
  if (a.rho.sign() > 0) out.push_back(a.rho / a.scalar(3));
  out.push_back(a.rho + a.scalar(1));
  return out;
}

}  // namespace

TEST_CASE("solvable2 examples") {
  Analysis a = analyze(mat("[[2,0],[1,1]]"));
  SolveReport2 r = solvable2(a, num("2"), vec("[0,1]"));
  CHECK(r.solvable);
  CHECK(r.regime == Regime::Above);
  CHECK(r.certificate == "cor4_2");
  CHECK(*r.x == vec("[1,0]"));
  REQUIRE(r.spectral_pair_of_x);
  CHECK(r.spectral_pair_of_x->rho == num("2"));
  CHECK(r.spectral_pair_of_x->ord == 1);

  CHECK_FALSE(solvable2(analyze(mat("[[1,0],[1,2]]")), num("2"), vec("[1,0]")).solvable);
  CHECK_FALSE(solvable2(analyze(mat(kChain3)), num("3"), vec("[0,1,0]")).solvable);

  SolveReport2 below = solvable2(a, num("1"), vec("[1,0]"));
  CHECK(below.regime == Regime::Below);
  CHECK(below.certificate != "cor4_2");
}

TEST_CASE("solve2_above") {
  CHECK(solve2_above(analyze(mat("[[2,0],[1,1]]")), num("2"), vec("[0,1]")) == vec("[1,0]"));
  CHECK(solve2_above(analyze(mat(kChain3)), num("1"), vec("[0,0,0]")) == vec("[0,0,0]"));
  CHECK_THROWS_AS(solve2_above(analyze(mat("[[2,0],[1,1]]")), num("1"), vec("[1,0]")), PreconditionError);
}

TEST_CASE("necessary_face") {
  CHECK(necessary_face(analyze(mat(kJordan)), num("1")) == ids({0}));
  CHECK(necessary_face(analyze(mat("[[1,0],[0,1]]")), num("1")).empty());
  CHECK(necessary_face(analyze(mat("[[2,0],[1,1]]")), num("2")) == ids({1}));
}

TEST_CASE("solvable_face_probe") {
  CHECK(solvable_face_probe(analyze(mat(kJordan)), num("1")) == ids({0}));
  CHECK(solvable_face_probe(analyze(mat("[[0,1],[1,0]]")), num("1/2")) == ids({0, 1}));
  CHECK(solvable_face_probe(analyze(mat(kChain3)), num("5/2")).empty());
}

TEST_CASE("tracedown_witness") {
  Analysis j = analyze(mat(kJordan));
  Tracedown t = tracedown_witness(j, class_of(j, 1));
  CHECK(t.b == vec("[1,0]"));
  CHECK(t.x[1] == num("1"));
  CHECK(shifted(j, num("1")) * t.x == t.b);

  Analysis id = analyze(mat("[[1,0],[0,1]]"));
  Tracedown u = tracedown_witness(id, class_of(id, 0));
  CHECK(u.x == vec("[1,0]"));
  CHECK(u.b == vec("[0,0]"));

  Analysis a = analyze(mat("[[2,0],[1,1]]"));
  Tracedown w = tracedown_witness(a, class_of(a, 0));
  CHECK(w.x == vec(R"([1,"1/2"])"));
  CHECK(w.b == vec(R"([0,"1/2"])"));

  CHECK_THROWS_AS(tracedown_witness(a, class_of(a, 1)), PreconditionError);
}

TEST_CASE("resolvent_sign") {
  Analysis swap = analyze(mat("[[0,1],[1,0]]"));
  ResolventSign near = resolvent_sign(swap, num("9/10"));
  CHECK(near.inverse_positive == Verdict::True);
  CHECK(near.adjugate_positive);
  CHECK(resolvent_sign(swap, num("11/10")).inverse_positive == Verdict::False);
  CHECK(resolvent_sign(swap, num("0")).inverse_positive == Verdict::False);
  CHECK(resolvent_sign(swap, num("1")).inverse_positive == Verdict::Indeterminate);
  CHECK_THROWS_AS(resolvent_sign(analyze(mat(kJordan)), num("1/2")), PreconditionError);
}

TEST_CASE("subcritical_window") {
  CHECK_FALSE(subcritical_window(analyze(mat(kJordan))).exists());
  SubcriticalWindow d = subcritical_window(analyze(mat("[[1,0],[0,2]]")));
  REQUIRE(d.exact);
  CHECK(*d.exact == 1);
  SubcriticalWindow s = subcritical_window(analyze(mat("[[0,1],[1,0]]")));
  CHECK(s.r == doctest::Approx(-1));
}

TEST_CASE("membership_S") {
  Analysis a = analyze(mat(kJordan));
  MembershipS e1 = membership_S(a, num("1"), vec("[1,0]"));
  CHECK((e1.in_s1 && e1.in_s2 && e1.in_s3));
  MembershipS e2 = membership_S(a, num("1"), vec("[0,1]"));
  CHECK_FALSE((e2.in_s1 || e2.in_s2 || e2.in_s3));
  MembershipS z = membership_S(a, num("1"), vec("[0,0]"));
  CHECK((z.in_s1 && z.in_s2 && z.in_s3));
}

TEST_CASE("regime names") {
  CHECK(std::string(regime_name(Regime::Above)) == "above");
  CHECK(std::string(regime_name(Regime::At)) == "at");
  CHECK(std::string(regime_name(Regime::Below)) == "below");
}

TEST_CASE("solutions across all regimes obey the local-radius trichotomy") {
  auto g = rng(40);
  int above = 0, others = 0;
  for (int t = 0; t < 150; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    std::vector<Vector> rhs{fuzz::random_vector(g, a.n(), 0.5)};
    for (int i = 0; i < a.n(); ++i) rhs.push_back(unit_vector(a.n(), i, Mode::Rational));
    for (const Vector& b : rhs) {
      for (const Scalar& lambda : lambda_sweep(a)) {
        Scalar rho_b = local_rho(a, b);
        Vector witness;
        bool lp = lp_solvable2(a, lambda, b, nullptr, &witness);
        SolveReport2 r = solvable2(a, lambda, b);
        REQUIRE(r.solvable == lp);
        if (!r.solvable) continue;
        CHECK(lambda <= a.rho);
        REQUIRE(r.x);
        for (const Vector& x : {witness, *r.x}) {
          CHECK(shifted(a, lambda) * x == b);
          Scalar rho_x = local_rho(a, x);
          bool all_equal = lambda == rho_x && rho_x == rho_b;
          bool lambda_top = lambda == rho_x && rho_x > rho_b;
          bool lambda_low = rho_x == rho_b && rho_b > lambda;
          CHECK((all_equal || lambda_top || lambda_low));
        }
        if (r.regime == Regime::Above) {
          ++above;
          CHECK(r.spectral_pair_of_x->rho == lambda);
          CHECK(r.spectral_pair_of_x->ord == 1);
          CHECK(above_test(a, lambda, b));
        } else {
          ++others;
        }
      }
    }
  }
  CHECK(above > 20);
  CHECK(others > 20);
}

TEST_CASE("the three solvable sets are nested as predicted") {
  auto g = rng(41);
  for (int t = 0; t < 120; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    for (const Scalar& lambda : distinguished_eigenvalues(a)) {
      if (lambda.sign() <= 0) continue;
      for (int k = 0; k < 3; ++k) {
        Vector b = fuzz::random_vector(g, a.n(), 0.5);
        MembershipS m = membership_S(a, lambda, b);
        CHECK(m.in_s1 == m.in_s2);
        if (m.in_s2) CHECK(m.in_s3);
      }
    }
  }
}

TEST_CASE("the face generated at rho is the necessary face") {
  auto g = rng(42);
  for (int t = 0; t < 150; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    if (a.rho.sign() <= 0) continue;
    IndexSet probe = solvable_face_probe(a, a.rho);
    CHECK(smallest_initial_superset(a.classes, probe) == necessary_face(a, a.rho));
  }
}

TEST_CASE("a nonnegative inverse is the same as the image cone covering the orthant") {
  auto g = rng(43);
  int covered = 0, face_only = 0;
  for (int t = 0; t < 120; ++t) {
    NonnegMatrix p = fuzz::random_matrix(g);
    Analysis a = analyze(p), at = analyze(p.transpose());
    for (const Scalar& lambda : lambda_sweep(a)) {
      auto inv = inverse(shifted(a, lambda));
      if (!inv) continue;
      bool nonneg = true;
      for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) nonneg = nonneg && (*inv)(i, j).sign() >= 0;
      bool every_unit_reached = true;
      for (int i = 0; i < a.n() && every_unit_reached; ++i)
        every_unit_reached = lp_solvable2(a, lambda, unit_vector(a.n(), i, Mode::Rational));
      CHECK(nonneg == every_unit_reached);
      bool probe_full = static_cast<int>(solvable_face_probe(a, lambda).size()) == a.n();
      if (nonneg) {
        ++covered;
        CHECK(probe_full);
        CHECK(lambda < distinguished_eigenvalues(a).front());
        CHECK(lambda < distinguished_eigenvalues(at).front());
      } else if (probe_full) {
        ++face_only;  // the generated face can be everything while the cone itself is not
      }
    }
  }
  CHECK(covered > 0);
  CHECK(face_only > 0);
}

TEST_CASE("below the radius, inside the window, solvable right-hand sides reach a basic class") {
  auto g = rng(44);
  int solvable = 0;
  for (int t = 0; t < 200; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g));
    SubcriticalWindow w = subcritical_window(a);
    if ((w.exists() && !w.exact) || a.rho.sign() <= 0) continue;
    Scalar lo = w.exists() ? Scalar(*w.exact) : a.scalar(0);
    Scalar lambda = (lo + a.rho) / a.scalar(2);
    if (lambda.sign() <= 0) continue;
    for (int k = 0; k < 3; ++k) {
      Vector b = fuzz::random_vector(g, a.n(), 0.5);
      if (!lp_solvable2(a, lambda, b)) continue;
      ++solvable;
      CHECK(reaches_basic(a, b));
    }
  }
  CHECK(solvable > 0);
}

TEST_CASE("irreducible matrices have a positive resolvent just below the radius") {
  auto g = rng(45);
  fuzz::Options opt;
  opt.irreducible = true;
  for (int t = 0; t < 60; ++t) {
    Analysis a = analyze(fuzz::random_matrix(g, opt));
    REQUIRE(a.num_classes() == 1);
    bool found = false;
    Scalar eps = a.rho / a.scalar(2);
    const Scalar floor = a.rho / a.scalar(1000000);
    while (!found && eps >= floor) {
      ResolventSign s = resolvent_sign(a, a.rho - eps);
      found = s.inverse_positive == Verdict::True && s.adjugate_positive;
      eps /= a.scalar(2);
    }
    CHECK(found);
    if (found) {
      Scalar lambda = a.rho - eps * a.scalar(2);
      for (int k = 0; k < 3; ++k) CHECK(lp_solvable2(a, lambda, fuzz::random_vector(g, a.n(), 0.5)));
    }
  }
}
