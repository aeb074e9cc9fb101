#include "pfcone/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "pfcone/error.hpp"
#include "pfcone/oracle/lp.hpp"

namespace pfcone {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

void record(PropertyResult& r, bool ok, const std::function<Json()>& detail) {
  ++r.cases;
  if (ok) return;
  r.pass = false;
  Json& list = r.payload["counterexamples"];
  if (list.is_null()) list = Json::array();
  if (list.size() < kMaxCounterexamples) list.push_back(detail());
}

PropertyResult finish(PropertyResult r) {
  r.payload["pass"] = r.pass;
  r.payload["cases"] = r.cases;
  return r;
}

void require_rational(const Analysis& a, const char* what) {
  if (a.mode() != Mode::Rational) throw ModeMismatch(std::string(what) + " needs exact radii (rational mode)");
}

Scalar third(const Analysis& a) { return a.scalar(1) / a.scalar(3); }

std::vector<Scalar> lambda_sweep(const Analysis& a) {
  std::vector<Scalar> out;
  auto add = [&](const Scalar& s) {
    if (s.sign() <= 0) return;
    for (const Scalar& t : out)
      if (compare_values(s, t, a.tol.eig_tol) == 0) return;
    out.push_back(s);
  };
  for (const Scalar& r : a.radii) {
    add(r - third(a));
    // An approximate radius in float mode makes the exact LP ill-posed.
    if (a.mode() == Mode::Rational) add(r);
    add(r + third(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet basic_access_set(const Analysis& a) {
  std::vector<int> keep;
  for (int c = 0; c < a.num_classes(); ++c)
    for (int d = c; d < a.num_classes(); ++d)
      if (a.taxonomy.flags[d].basic && a.classes.has_access(c, d)) {
        keep.push_back(c);
        break;
      }
  return vertices_of(a.classes, keep);
}

// Small-denominator rational within an eighth of (lo, hi) around target,
// so an endpoint known only to rounding is never hit.
Scalar rational_inside(double lo, double hi, double target, Mode mode) {
  for (const mpq_class& q : rational_convergents(target)) {
    double v = q.get_d();
    if (std::fabs(v - target) < (hi - lo) / 8) return mode == Mode::Rational ? Scalar(q) : Scalar(v);
  }
  return mode == Mode::Rational ? Scalar(mpq_class(target)) : Scalar(target);
}

}  // namespace

std::vector<Vector> probe_vectors(int n, Mode mode) {
  std::vector<Vector> out;
  for (int i = 0; i < n; ++i) out.push_back(unit_vector(n, i, mode));
  if (n > 0) {
    Vector ones(n, Scalar::one(mode));
    out.push_back(ones);
  }
  return out;
}

PropertyResult check_type1_equivalence(const Analysis& a) {
  PropertyResult r;
  auto spaces = transpose_eigenspaces(a, true);
  for (const Scalar& lambda : lambda_sweep(a))
    for (const Vector& b : probe_vectors(a.n(), a.mode())) {
      bool g = solvable1(a, lambda, b);
      bool lp = lp_solvable1(a, lambda, b);
      bool h = condition_h(a, lambda, b);
      bool j = condition_j(a, spaces, lambda, b);
      bool by_rho = a.compare_radius(local_rho(a, b), lambda) < 0;
      bool ok = g == lp && h == lp && j == lp && by_rho == lp;
      if (ok && g) {
        SolveReport1 s = solve1(a, lambda, b);
        ok = s.x0 && support(*s.x0) == smallest_initial_superset(a.classes, support(b)) &&
             (a.mode() != Mode::Rational || s.residual_norm.is_zero());
      }
      record(r, ok, [&] {
        return Json{{"lambda", scalar_to_json(lambda)}, {"b", vector_to_json(b)}, {"lp", lp},
                    {"g", g}, {"h", h}, {"j", j}, {"rho_b_below", by_rho}};
      });
    }
  return finish(std::move(r));
}

PropertyResult check_type2_above(const Analysis& a) {
  PropertyResult r;
  for (const Scalar& lambda : distinguished_eigenvalues(a)) {
    if (lambda.sign() <= 0) continue;
    for (const Vector& b : probe_vectors(a.n(), a.mode())) {
      if (a.compare_radius(local_rho(a, b), lambda) >= 0) continue;
      bool comb = above_test(a, lambda, b);
      bool lp = lp_solvable2(a, lambda, b);
      bool ok = comb == lp;
      if (ok && comb) {
        Vector x = solve2_above(a, lambda, b);
        Vector res = shift_diagonal(a.p.mat(), -lambda) * x - b;
        SpectralPair sp = ord_and_pair(a, x);
        bool exact = a.mode() != Mode::Rational || is_zero(res);
        ok = exact && is_nonneg(x) && a.compare_radius(sp.rho, lambda) == 0 && sp.ord == 1;
      }
      record(r, ok, [&] {
        return Json{{"lambda", scalar_to_json(lambda)}, {"b", vector_to_json(b)}, {"combinatorial", comb}, {"lp", lp}};
      });
    }
  }
  return finish(std::move(r));
}

PropertyResult check_critical_face(const Analysis& a) {
  require_rational(a, "thm4.13");
  PropertyResult r;
  IndexSet probe = solvable_face_probe(a, a.rho);
  IndexSet generated = smallest_initial_superset(a.classes, probe);
  IndexSet expected = necessary_face(a, a.rho);
  record(r, generated == expected, [&] {
    return Json{{"probe", probe}, {"generated_face", generated}, {"strict_access_to_basic", expected}};
  });
  for (int alpha = 0; alpha < a.num_classes(); ++alpha) {
    const ClassFlags& f = a.taxonomy.flags[alpha];
    if (!f.basic || !f.distinguished_for_transpose) continue;
    Tracedown t = tracedown_witness(a, alpha);
    bool ok = shift_diagonal(a.p.mat(), -a.rho) * t.x == t.b && is_nonneg(t.x) && is_nonneg(t.b);
    for (int c = 0; c < a.num_classes() && ok; ++c) {
      IndexSet block = a.classes.classes[c];
      bool b_nonzero = std::any_of(block.begin(), block.end(), [&](int i) { return !t.b[i].is_zero(); });
      bool x_positive = std::all_of(block.begin(), block.end(), [&](int i) { return t.x[i].sign() > 0; });
      bool x_zero = std::all_of(block.begin(), block.end(), [&](int i) { return t.x[i].is_zero(); });
      ok = b_nonzero == a.classes.strictly_accesses(c, alpha) &&
           (a.classes.has_access(c, alpha) ? x_positive : x_zero);
    }
    record(r, ok, [&] { return Json{{"class", alpha}, {"x", vector_to_json(t.x)}, {"b", vector_to_json(t.b)}}; });
  }
  return finish(std::move(r));
}

PropertyResult check_subcritical_face(const Analysis& a) {
  PropertyResult r;
  SubcriticalWindow win = subcritical_window(a);
  const double rho = a.rho.to_double();
  const double lo = win.exists() ? win.r : rho - 1.0;
  IndexSet expected = basic_access_set(a);
  r.payload["r"] = win.exists() ? (win.exact ? scalar_to_json(Scalar(*win.exact)) : Json(win.r)) : Json("-inf");
  for (int k = 1; k <= 3; ++k) {
    Scalar lambda = rational_inside(lo, rho, lo + (rho - lo) * k / 4.0, a.mode());
    IndexSet probe = solvable_face_probe(a, lambda);
    record(r, probe == expected, [&] {
      return Json{{"lambda", scalar_to_json(lambda)}, {"probe", probe}, {"access_to_basic", expected}};
    });
  }
  return finish(std::move(r));
}

PropertyResult check_sigma1_attainment(const Analysis& a) {
  require_rational(a, "thm5.10");
  PropertyResult r;
  bool comb = rho_in_sigma1(a);
  bool lp = lp_rho_in_sigma1(a);
  bool face = eigen_face_covers(a);
  record(r, comb == lp && comb == face, [] { return Json::object(); });
  r.payload["rho_in_sigma1"] = comb;
  r.payload["lp_agrees"] = comb == lp;
  r.payload["face_agrees"] = comb == face;
  r.payload.erase("counterexamples");
  return finish(std::move(r));
}

PropertyResult check_eigencone_equivalence(const Analysis& a) {
  require_rational(a, "thm5.11");
  PropertyResult r;
  Check511 c = check_5_11(a);
  record(r, c.a == c.b && c.b == c.c, [] { return Json::object(); });
  r.payload["a"] = c.a;
  r.payload["b"] = c.b;
  r.payload["c"] = c.c;
  r.payload.erase("counterexamples");
  return finish(std::move(r));
}

PropertyResult check_alternating_bounds(const Analysis& a) {
  PropertyResult r;
  for (const Vector& x : probe_vectors(a.n(), a.mode())) {
    BoundCheck bc = bound_check_6_1(a, x);
    record(r, bc.holds, [&] {
      Json out{{"x", vector_to_json(x)}, {"m_observed", bc.m_observed}, {"ord", bc.ord}, {"nu", bc.nu}};
      out["gamma_bound"] = bc.gamma_bound ? Json(*bc.gamma_bound) : Json(nullptr);
      return out;
    });
  }
  return finish(std::move(r));
}

PropertyResult check_critical_face_gap(const Analysis& a) {
  require_rational(a, "cor4.8-gap");
  PropertyResult r;
  IndexSet probe = solvable_face_probe(a, a.rho);
  IndexSet j = basic_access_set(a);
  std::vector<int> reached;
  for (int c = 0; c < a.num_classes(); ++c)
    for (int d = 0; d <= c; ++d) {
      const ClassFlags& f = a.taxonomy.flags[d];
      if (f.basic && f.distinguished_for_transpose && a.classes.has_access(d, c)) {
        reached.push_back(c);
        break;
      }
    }
  IndexSet t = vertices_of(a.classes, reached);
  IndexSet middle;
  std::set_difference(j.begin(), j.end(), t.begin(), t.end(), std::back_inserter(middle));
  const int nu = index_nu(a, a.rho);
  IndexSet outer;
  for (int i : j)
    if (lex_leq(ord_and_pair(a, unit_vector(a.n(), i, a.mode())), SpectralPair{a.rho, nu - 1})) outer.push_back(i);
  bool first = is_subset(probe, middle);
  bool second = is_subset(middle, outer);
  record(r, first && second, [] { return Json::object(); });
  IndexSet gap;
  std::set_difference(middle.begin(), middle.end(), probe.begin(), probe.end(), std::back_inserter(gap));
  r.payload["probe"] = probe;
  r.payload["dual_face_part"] = middle;
  r.payload["order_bounded_part"] = outer;
  r.payload["first_inclusion"] = first;
  r.payload["second_inclusion"] = second;
  r.payload["gap"] = gap;
  r.payload.erase("counterexamples");
  return finish(std::move(r));
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids{"thm3.1",  "cor4.2",  "thm4.13", "cor4.20",
                                            "thm5.10", "thm5.11", "cor6.4",  "cor4.8-gap"};
  return ids;
}

PropertyResult check_property(const std::string& id, const Analysis& a) {
  static const std::map<std::string, std::function<PropertyResult(const Analysis&)>> table{
      {"thm3.1", check_type1_equivalence},     {"cor4.2", check_type2_above},
      {"thm4.13", check_critical_face},        {"cor4.20", check_subcritical_face},
      {"thm5.10", check_sigma1_attainment},    {"thm5.11", check_eigencone_equivalence},
      {"cor6.4", check_alternating_bounds},    {"cor4.8-gap", check_critical_face_gap}};
  auto it = table.find(id);
  if (it == table.end()) throw InputError("unknown property '" + id + "'");
  PropertyResult r = it->second(a);
  r.payload["property"] = id;
  return r;
}

}  // namespace pfcone
