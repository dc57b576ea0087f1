#include "symspec/optimize.hpp"

#include "symspec/fourier.hpp"
#include "symspec/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symspec {

void check_eps(const Rational& eps) {
  if (eps < 0 || eps >= Rational(1, 2))
    throw Error("eps must lie in [0, 1/2), got " + to_string(eps));
}

namespace {

// Float verdicts within this distance of the decision boundary are re-solved
// exactly.
constexpr double borderline = 1e-9;

std::vector<Rational> to_rational_target(const BoolFn& g) {
  std::vector<Rational> t;
  t.reserve(g.size());
  for (auto v : g.table()) t.emplace_back(v);
  return t;
}

bool target_is_symmetric(int n, std::span<const Rational> target) {
  std::vector<const Rational*> first(static_cast<std::size_t>(n + 1), nullptr);
  for (Mask x = 0; x < target.size(); ++x) {
    auto& slot = first[static_cast<std::size_t>(popcount(x))];
    if (!slot) slot = &target[x];
    else if (*slot != target[x]) return false;
  }
  return true;
}

// Images of every mask under every non-identity permutation of the n coordinates.
std::vector<std::vector<Mask>> coordinate_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Mask>> out;
  const Mask size = Mask{1} << n;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Mask> image(size);
    for (Mask m = 0; m < size; ++m) {
      Mask r = 0;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) r |= Mask{1} << perm[static_cast<std::size_t>(i)];
      image[m] = r;
    }
    out.push_back(std::move(image));
  }
  return out;
}

// A support is canonical when no coordinate permutation maps it to a
// lexicographically smaller sorted support. For a symmetric target the
// lexicographically first feasible support is always canonical.
bool is_canonical(const std::vector<Mask>& support, const std::vector<std::vector<Mask>>& perms,
                  std::vector<Mask>& scratch) {
  for (const auto& image : perms) {
    scratch.clear();
    for (Mask s : support) scratch.push_back(image[s]);
    std::sort(scratch.begin(), scratch.end());
    if (scratch < support) return false;
  }
  return true;
}

// Visits all m-subsets of {0..universe-1} in lexicographic order until `visit`
// returns true; returns whether it did.
template <class Visit>
bool for_each_combination(std::size_t universe, std::size_t m, Visit visit) {
  if (m > universe) return false;
  std::vector<Mask> idx(m);
  std::iota(idx.begin(), idx.end(), Mask{0});
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == universe - m + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// min e s.t. |sum_{S in support} c_S chi_S(x) - target(x)| <= e for all x.
template <class T>
lp::Result<T> min_linf_error(int n, std::span<const T> target, const std::vector<Mask>& support) {
  const std::size_t m = support.size();
  lp::Problem<T> p;
  p.objective.assign(m + 1, T(0));
  p.objective[m] = T(1);
  p.bounds.assign(m + 1, lp::Bound<T>::free());
  p.bounds[m] = lp::Bound<T>{};
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    std::vector<T> row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = T(character(support[i], x));
    row[m] = T(-1);
    p.add_row(row, lp::Sense::le, target[x]);
    row[m] = T(1);
    p.add_row(std::move(row), lp::Sense::ge, target[x]);
  }
  return lp::solve(p);
}

// max delta s.t. sign(x) * phi(x) >= delta, sum |c_S| <= 1; variables are
// (p_S, q_S) with c_S = p_S - q_S, then delta.
template <class T>
lp::Result<T> max_sign_margin(const BoolFn& g, const std::vector<Mask>& support) {
  const std::size_t m = support.size();
  lp::Problem<T> p;
  p.maximize = true;
  p.objective.assign(2 * m + 1, T(0));
  p.objective[2 * m] = T(1);
  p.bounds.assign(2 * m + 1, lp::Bound<T>{});
  p.bounds[2 * m] = lp::Bound<T>{std::nullopt, T(1)};
  for (Mask x = 0; x < g.size(); ++x) {
    const int s = g(x) ? 1 : -1;
    std::vector<T> row(2 * m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      const int v = s * character(support[i], x);
      row[i] = T(v);
      row[m + i] = T(-v);
    }
    row[2 * m] = T(-1);
    p.add_row(std::move(row), lp::Sense::ge, T(0));
  }
  std::vector<T> l1(2 * m + 1, T(1));
  l1[2 * m] = T(0);
  p.add_row(std::move(l1), lp::Sense::le, T(1));
  return lp::solve(p);
}

void require_optimal(lp::Status s, const char* what) {
  if (s != lp::Status::optimal)
    throw Error(std::string(what) + ": exact LP returned " + std::string(lp::to_string(s)));
}

Rational max_error_dense(int n, std::span<const Rational> target, const std::vector<Mask>& support,
                         std::span<const Rational> coeffs) {
  Rational worst = 0;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    Rational v = -target[x];
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (character(support[i], x) > 0) v += coeffs[i];
      else v -= coeffs[i];
    }
    v = abs(v);
    if (v > worst) worst = v;
  }
  return worst;
}

}  // namespace

ApproxResult approx_l1(const SymFn& f, const Rational& eps, const Caps& caps) {
  check_eps(eps);
  const int n = f.n();
  if (n > caps.symmetric_lp_n) throw CapExceeded("approx_l1", n, caps.symmetric_lp_n);
  const auto kraw = krawtchouk_table(n);
  const std::size_t levels = static_cast<std::size_t>(n + 1);
  lp::Problem<Rational> p;
  p.objective.resize(2 * levels);
  for (std::size_t k = 0; k < levels; ++k) {
    p.objective[k] = p.objective[levels + k] = Rational(binomial(n, static_cast<int>(k)));
  }
  for (int j = 0; j <= n; ++j) {
    std::vector<Rational> row(2 * levels);
    for (std::size_t k = 0; k < levels; ++k) {
      row[k] = Rational(kraw[j][k]);  // sum of chi_S over |S| = k, at weight j
      row[levels + k] = -row[k];
    }
    const Rational fj(f(j) ? 1 : 0);
    p.add_row(row, lp::Sense::le, fj + eps);
    p.add_row(std::move(row), lp::Sense::ge, fj - eps);
  }
  const auto r = lp::solve(p);
  require_optimal(r.status, "approx_l1");
  ApproxResult out;
  out.value = r.value;
  out.eps = eps;
  out.ansatz = Ansatz::symmetric_levels;
  out.witness.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) out.witness[k] = r.x[k] - r.x[levels + k];
  out.max_error = 0;
  for (int j = 0; j <= n; ++j) {
    const Rational err = abs(evaluate_levels(out.witness, j) - Rational(f(j) ? 1 : 0));
    if (err > out.max_error) out.max_error = err;
  }
  return out;
}

ApproxResult approx_l1_dense(int n, std::span<const Rational> target, const Rational& eps,
                             const Caps& caps) {
  check_eps(eps);
  if (n > caps.lp_enumeration_n) throw CapExceeded("approx_l1_dense", n, caps.lp_enumeration_n);
  const std::size_t size = std::size_t{1} << n;
  if (target.size() != size) throw Error("approx_l1_dense: target must have 2^n values");
  lp::Problem<Rational> p;
  p.objective.assign(2 * size, Rational(1));
  for (Mask x = 0; x < size; ++x) {
    std::vector<Rational> row(2 * size);
    for (Mask s = 0; s < size; ++s) {
      row[s] = character(s, x);
      row[size + s] = -row[s];
    }
    p.add_row(row, lp::Sense::le, target[x] + eps);
    p.add_row(std::move(row), lp::Sense::ge, target[x] - eps);
  }
  const auto r = lp::solve(p);
  require_optimal(r.status, "approx_l1_dense");
  ApproxResult out;
  out.value = r.value;
  out.eps = eps;
  out.ansatz = Ansatz::dense;
  out.witness.resize(size);
  std::vector<Mask> all(size);
  for (Mask s = 0; s < size; ++s) {
    out.witness[s] = r.x[s] - r.x[size + s];
    all[s] = s;
  }
  out.max_error = max_error_dense(n, target, all, out.witness);
  return out;
}

ApproxResult approx_l1_dense(const BoolFn& g, const Rational& eps, const Caps& caps) {
  const auto target = to_rational_target(g);
  return approx_l1_dense(g.n(), target, eps, caps);
}

DualWitness approx_l1_dual(const BoolFn& g, const Rational& eps, const Caps& caps) {
  check_eps(eps);
  const int n = g.n();
  if (n > caps.lp_enumeration_n) throw CapExceeded("approx_l1_dual", n, caps.lp_enumeration_n);
  const std::size_t size = g.size();
  lp::Problem<Rational> p;
  p.maximize = true;
  p.objective.resize(2 * size);
  for (Mask x = 0; x < size; ++x) {
    const Rational gx(g(x) ? 1 : 0);
    p.objective[x] = gx - eps;
    p.objective[size + x] = -gx - eps;
  }
  for (Mask s = 0; s < size; ++s) {
    std::vector<Rational> row(2 * size);
    for (Mask x = 0; x < size; ++x) {
      row[x] = character(s, x);
      row[size + x] = -row[x];
    }
    p.add_row(row, lp::Sense::le, Rational(1));
    p.add_row(std::move(row), lp::Sense::ge, Rational(-1));
  }
  const auto r = lp::solve(p);
  require_optimal(r.status, "approx_l1_dual");
  DualWitness out;
  out.value = r.value;
  out.psi.resize(size);
  for (Mask x = 0; x < size; ++x) out.psi[x] = r.x[x] - r.x[size + x];
  return out;
}

MonEpsResult mon_eps_exact(int n, std::span<const Rational> target, const Rational& eps,
                           const Caps& caps) {
  check_eps(eps);
  if (n > caps.lp_enumeration_n) throw CapExceeded("mon_eps_exact", n, caps.lp_enumeration_n);
  const std::size_t size = std::size_t{1} << n;
  if (target.size() != size) throw Error("mon_eps_exact: target must have 2^n values");

  MonEpsResult out;
  Rational worst = 0;
  for (const auto& v : target) worst = std::max(worst, Rational(abs(v)));
  if (worst <= eps) {
    out.value = 0;
    out.error = worst;
    return out;
  }

  std::vector<double> target_d(size);
  for (std::size_t x = 0; x < size; ++x) target_d[x] = target[x].get_d();
  const double eps_d = eps.get_d();
  const bool symmetric = target_is_symmetric(n, target);
  const auto perms = symmetric ? coordinate_permutations(n) : std::vector<std::vector<Mask>>{};
  std::vector<Mask> scratch;

  auto feasible = [&](const std::vector<Mask>& support) {
    ++out.supports_tested;
    const auto r = min_linf_error<double>(n, target_d, support);
    if (r.status == lp::Status::optimal) {
      if (r.value < eps_d - borderline) return true;
      if (r.value > eps_d + borderline) return false;
    }
    const auto exact = min_linf_error<Rational>(n, target, support);
    require_optimal(exact.status, "mon_eps_exact");
    return exact.value <= eps;
  };

  for (std::size_t m = 1; m <= size; ++m) {
    std::vector<Mask> found;
    for_each_combination(size, m, [&](const std::vector<Mask>& support) {
      if (symmetric && !is_canonical(support, perms, scratch)) return false;
      if (!feasible(support)) return false;
      found = support;
      return true;
    });
    if (found.empty()) continue;
    const auto exact = min_linf_error<Rational>(n, target, found);
    require_optimal(exact.status, "mon_eps_exact");
    out.value = m;
    out.support = found;
    out.coeffs.assign(exact.x.begin(), exact.x.begin() + static_cast<std::ptrdiff_t>(m));
    out.error = max_error_dense(n, target, out.support, out.coeffs);
    if (out.error > eps) throw Error("mon_eps_exact: witness fails exact re-verification");
    return out;
  }
  throw Error("mon_eps_exact: no support works, which cannot happen for eps >= 0");
}

MonEpsResult mon_eps_exact(const BoolFn& g, const Rational& eps, const Caps& caps) {
  const auto target = to_rational_target(g);
  return mon_eps_exact(g.n(), target, eps, caps);
}

LevelSupportResult mon_eps_symmetric_upper(const SymFn& f, const Rational& eps, const Caps& caps) {
  check_eps(eps);
  const int n = f.n();
  if (n > caps.symmetric_lp_n) throw CapExceeded("mon_eps_symmetric_upper", n, caps.symmetric_lp_n);
  LevelSupportResult out;
  const bool all_small = std::all_of(f.values().begin(), f.values().end(),
                                     [&](auto v) { return Rational(v) <= eps; });
  if (all_small) {
    out.error = f.code() == 0 ? Rational(0) : Rational(1);
    return out;
  }

  const auto kraw = krawtchouk_table(n);
  const std::size_t levels = static_cast<std::size_t>(n + 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order;  // (cost, level mask)
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << levels); ++set) {
    std::uint64_t cost = 0;
    for (std::size_t k = 0; k < levels; ++k)
      if ((set >> k) & 1) cost += binomial_u64(n, static_cast<int>(k));
    order.emplace_back(cost, set);
  }
  std::sort(order.begin(), order.end());

  auto build = [&]<class T>(std::uint64_t set, T eps_v) {
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < levels; ++k)
      if ((set >> k) & 1) chosen.push_back(k);
    const std::size_t m = chosen.size();
    lp::Problem<T> p;
    p.objective.assign(m + 1, T(0));
    p.objective[m] = T(1);
    p.bounds.assign(m + 1, lp::Bound<T>::free());
    p.bounds[m] = lp::Bound<T>{};
    for (int j = 0; j <= n; ++j) {
      std::vector<T> row(m + 1);
      for (std::size_t i = 0; i < m; ++i) {
        if constexpr (std::is_same_v<T, double>) row[i] = kraw[j][chosen[i]].get_d();
        else row[i] = Rational(kraw[j][chosen[i]]);
      }
      const T fj(f(j) ? 1 : 0);
      row[m] = T(-1);
      p.add_row(row, lp::Sense::le, fj);
      row[m] = T(1);
      p.add_row(std::move(row), lp::Sense::ge, fj);
    }
    (void)eps_v;
    return std::make_pair(chosen, lp::solve(p));
  };

  const double eps_d = eps.get_d();
  for (const auto& [cost, set] : order) {
    const auto [chosen, r] = build(set, eps_d);
    bool ok = false;
    bool decided = false;
    if (r.status == lp::Status::optimal) {
      if (r.value < eps_d - borderline) ok = decided = true;
      else if (r.value > eps_d + borderline) decided = true;
    }
    (void)chosen;
    if (decided && !ok) continue;
    auto [chosen_exact, exact] = build(set, eps);
    require_optimal(exact.status, "mon_eps_symmetric_upper");
    if (exact.value > eps) continue;
    out.value = cost;
    for (auto k : chosen_exact) out.levels.push_back(static_cast<int>(k));
    out.coeffs.assign(exact.x.begin(), exact.x.begin() + static_cast<std::ptrdiff_t>(chosen_exact.size()));
    out.error = exact.value;
    return out;
  }
  throw Error("mon_eps_symmetric_upper: no level set works");
}

SignmonResult signmon_exact(const BoolFn& g, const Caps& caps) {
  const int n = g.n();
  if (n > caps.lp_enumeration_n) throw CapExceeded("signmon_exact", n, caps.lp_enumeration_n);
  const std::size_t size = g.size();
  const auto target = to_rational_target(g);
  const bool symmetric = target_is_symmetric(n, target);
  const auto perms = symmetric ? coordinate_permutations(n) : std::vector<std::vector<Mask>>{};
  std::vector<Mask> scratch;
  SignmonResult out;

  // Every entry of the margin LP lies in {0, 1, -1} and so does every
  // right-hand side, so by Cramer's rule a positive optimum is at least
  // 1 / det(B) >= 1 / k^{k/2} for a k-row basis B. Float optima well below
  // that are zero.
  const double rows = static_cast<double>(size + 2);
  const double zero_cutoff = 0.5 / std::pow(rows, rows / 2);
  const double infeasible_below = zero_cutoff > 1e-13 ? zero_cutoff : -borderline;

  auto feasible = [&](const std::vector<Mask>& support) {
    ++out.supports_tested;
    const auto r = max_sign_margin<double>(g, support);
    if (r.status == lp::Status::optimal) {
      if (r.value > borderline) return true;
      if (r.value < infeasible_below) return false;
    }
    const auto exact = max_sign_margin<Rational>(g, support);
    require_optimal(exact.status, "signmon_exact");
    return sgn(exact.value) > 0;
  };

  for (std::size_t m = 1; m <= size; ++m) {
    std::vector<Mask> found;
    for_each_combination(size, m, [&](const std::vector<Mask>& support) {
      if (symmetric && !is_canonical(support, perms, scratch)) return false;
      if (!feasible(support)) return false;
      found = support;
      return true;
    });
    if (found.empty()) continue;
    const auto exact = max_sign_margin<Rational>(g, found);
    require_optimal(exact.status, "signmon_exact");
    std::map<Mask, Rational> terms;
    for (std::size_t i = 0; i < m; ++i) terms[found[i]] = exact.x[i] - exact.x[m + i];
    SignPoly poly = SignPoly::sparse(n, std::move(terms));
    const SignCheck check = verify_sign(poly, g);
    if (!check.ok) throw Error("signmon_exact: witness fails exact re-verification");
    out.value = poly.term_count();
    out.certificate = SignCertificate{std::move(poly), check.margin};
    if (out.value != m) throw Error("signmon_exact: witness has a zero coefficient");
    return out;
  }
  throw Error("signmon_exact: no sign representation found");
}

SignCheck verify_sign(const SignPoly& p, const SymFn& f, const Caps& caps) {
  if (p.n() != f.n()) throw Error("verify_sign: polynomial and function differ in n");
  SignCheck out;
  out.ok = true;
  bool first = true;
  auto account = [&](const Rational& v, bool want_positive) {
    const int s = sgn(v);
    if (want_positive ? s <= 0 : s >= 0) out.ok = false;
    Rational a = abs(v);
    if (first || a < out.margin) out.margin = std::move(a);
    first = false;
  };
  if (p.is_symmetric()) {
    for (int j = 0; j <= f.n(); ++j) account(p.evaluate_weight(j), f(j));
    return out;
  }
  if (f.n() > caps.pointwise_sign_n)
    throw CapExceeded("verify_sign (pointwise)", f.n(), caps.pointwise_sign_n);
  for (Mask x = 0; x < (Mask{1} << f.n()); ++x) account(p.evaluate(x), f(popcount(x)));
  return out;
}

SignCheck verify_sign(const SignPoly& p, const BoolFn& g) {
  if (p.n() != g.n()) throw Error("verify_sign: polynomial and function differ in n");
  SignCheck out;
  out.ok = true;
  for (Mask x = 0; x < g.size(); ++x) {
    const Rational v = p.evaluate(x);
    const int s = sgn(v);
    if (g(x) ? s <= 0 : s >= 0) out.ok = false;
    Rational a = abs(v);
    if (x == 0 || a < out.margin) out.margin = std::move(a);
  }
  return out;
}

}  // namespace symspec
