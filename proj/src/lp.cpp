#include "symspec/lp.hpp"

#include <cmath>

namespace symspec::lp {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

template <class T>
struct Arith;

template <>
struct Arith<double> {
  static constexpr double eps = 1e-9;
  static bool is_zero(double v) { return std::fabs(v) <= eps; }
  static bool is_pos(double v) { return v > eps; }
  static bool is_neg(double v) { return v < -eps; }
  static double magnitude(double v) { return std::fabs(v); }
};

template <>
struct Arith<Rational> {
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static bool is_pos(const Rational& v) { return sgn(v) > 0; }
  static bool is_neg(const Rational& v) { return sgn(v) < 0; }
  static Rational magnitude(const Rational& v) { return abs(v); }
};

// Original variable j = offset + sum of coef * y over its columns.
template <class T>
struct VarMap {
  T offset{};
  std::vector<std::pair<std::size_t, T>> columns;
};

template <class T>
class Tableau {
 public:
  using A = Arith<T>;

  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), data_(rows * (cols + 1)), obj_(cols + 1), basis_(rows) {}

  T& at(std::size_t i, std::size_t j) { return data_[i * (n_ + 1) + j]; }
  T& rhs(std::size_t i) { return at(i, n_); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<T>& objective_row() { return obj_; }

  void pivot(std::size_t r, std::size_t c) {
    const T inv = T(1) / at(r, c);
    for (std::size_t j = 0; j <= n_; ++j) at(r, j) *= inv;
    at(r, c) = T(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const T factor = at(i, c);
      if (A::is_zero(factor)) {
        if constexpr (std::is_same_v<T, double>) at(i, c) = 0;
        continue;
      }
      for (std::size_t j = 0; j <= n_; ++j)
        if (!A::is_zero(at(r, j))) at(i, j) -= factor * at(r, j);
      at(i, c) = T(0);
    }
    const T factor = obj_[c];
    if (!A::is_zero(factor)) {
      for (std::size_t j = 0; j <= n_; ++j)
        if (!A::is_zero(at(r, j))) obj_[j] -= factor * at(r, j);
    }
    obj_[c] = T(0);
    basis_[r] = c;
  }

  enum class Outcome { optimal, unbounded, iteration_limit };

  // Minimizes the objective row over columns allowed by `usable`.
  template <class Usable>
  Outcome run(Usable usable, std::size_t iteration_limit) {
    std::size_t degenerate_run = 0;
    for (std::size_t iter = 0; iter < iteration_limit; ++iter) {
      const bool bland = degenerate_run > 50;
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!usable(j) || !A::is_neg(obj_[j])) continue;
        if (enter == n_ || (!bland && obj_[j] < obj_[enter])) enter = j;
        if (bland) break;
      }
      if (enter == n_) return Outcome::optimal;

      std::size_t leave = m_;
      T best_ratio{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!A::is_pos(at(i, enter))) continue;
        T ratio = rhs(i) / at(i, enter);
        const bool tie = leave != m_ && !(ratio < best_ratio) && !(best_ratio < ratio);
        if (leave == m_ || ratio < best_ratio || (tie && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == m_) return Outcome::unbounded;
      degenerate_run = A::is_zero(best_ratio) ? degenerate_run + 1 : 0;
      pivot(leave, enter);
    }
    return Outcome::iteration_limit;
  }

  void drop_row(std::size_t r) {
    for (std::size_t i = r; i + 1 < m_; ++i) {
      for (std::size_t j = 0; j <= n_; ++j) at(i, j) = std::move(at(i + 1, j));
      basis_[i] = basis_[i + 1];
    }
    --m_;
    data_.resize(m_ * (n_ + 1));
    basis_.resize(m_);
  }

 private:
  std::size_t m_, n_;
  std::vector<T> data_;
  std::vector<T> obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace

template <class T>
Result<T> solve(const Problem<T>& problem) {
  using A = Arith<T>;
  const std::size_t nv = problem.num_vars();
  if (problem.rows.size() != problem.senses.size() || problem.rows.size() != problem.rhs.size())
    throw Error("lp: rows, senses and rhs differ in length");
  for (const auto& row : problem.rows)
    if (row.size() != nv) throw Error("lp: row length differs from objective length");
  if (!problem.bounds.empty() && problem.bounds.size() != nv)
    throw Error("lp: bounds length differs from objective length");

  // Substitute variables so every column is >= 0.
  std::vector<VarMap<T>> vars(nv);
  std::size_t ny = 0;
  struct UpperRow {
    std::size_t column;
    T limit;
  };
  std::vector<UpperRow> uppers;
  for (std::size_t j = 0; j < nv; ++j) {
    const Bound<T> b = problem.bounds.empty() ? Bound<T>{} : problem.bounds[j];
    if (b.lower && b.upper && *b.upper < *b.lower) return {Status::infeasible, T{}, {}};
    if (b.lower) {
      vars[j].offset = *b.lower;
      vars[j].columns.push_back({ny, T(1)});
      if (b.upper) uppers.push_back({ny, *b.upper - *b.lower});
      ++ny;
    } else if (b.upper) {
      vars[j].offset = *b.upper;
      vars[j].columns.push_back({ny++, T(-1)});
    } else {
      vars[j].columns.push_back({ny++, T(1)});
      vars[j].columns.push_back({ny++, T(-1)});
    }
  }

  struct Row {
    std::vector<T> coeffs;
    Sense sense;
    T rhs;
  };
  std::vector<Row> rows;
  rows.reserve(problem.rows.size() + uppers.size());
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    Row row{std::vector<T>(ny, T(0)), problem.senses[i], problem.rhs[i]};
    for (std::size_t j = 0; j < nv; ++j) {
      const T& a = problem.rows[i][j];
      if (A::is_zero(a) && std::is_same_v<T, Rational>) continue;
      row.rhs -= a * vars[j].offset;
      for (const auto& [col, coef] : vars[j].columns) row.coeffs[col] += a * coef;
    }
    rows.push_back(std::move(row));
  }
  for (auto& u : uppers) {
    Row row{std::vector<T>(ny, T(0)), Sense::le, u.limit};
    row.coeffs[u.column] = T(1);
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (A::is_neg(row.rhs)) {
      for (auto& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.sense == Sense::le) row.sense = Sense::ge;
      else if (row.sense == Sense::ge) row.sense = Sense::le;
    }
  }

  const std::size_t m = rows.size();
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& row : rows) {
    if (row.sense != Sense::eq) ++n_slack;
    if (row.sense != Sense::le) ++n_art;
  }
  const std::size_t art_begin = ny + n_slack;
  const std::size_t ncols = art_begin + n_art;
  Tableau<T> tab(m, ncols);
  std::size_t slack = ny, art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ny; ++j) tab.at(i, j) = rows[i].coeffs[j];
    tab.rhs(i) = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::le:
        tab.at(i, slack) = T(1);
        tab.basis()[i] = slack++;
        break;
      case Sense::ge:
        tab.at(i, slack++) = T(-1);
        tab.at(i, art) = T(1);
        tab.basis()[i] = art++;
        break;
      case Sense::eq:
        tab.at(i, art) = T(1);
        tab.basis()[i] = art++;
        break;
    }
  }

  const std::size_t limit = 20000 + 50 * (m + ncols);
  auto& obj = tab.objective_row();

  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    for (std::size_t j = art_begin; j < ncols; ++j) obj[j] = T(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < art_begin) continue;
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= tab.at(i, j);
    }
    const auto outcome = tab.run([](std::size_t) { return true; }, limit);
    if (outcome == Tableau<T>::Outcome::iteration_limit) return {Status::numerical_failure, T{}, {}};
    const T infeasibility = -obj[ncols];
    if constexpr (std::is_same_v<T, double>) {
      if (infeasibility > 1e-7) return {Status::infeasible, T{}, {}};
    } else {
      if (A::is_pos(infeasibility)) return {Status::infeasible, T{}, {}};
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < art_begin) {
        ++i;
        continue;
      }
      std::size_t col = art_begin;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (!A::is_zero(tab.at(i, j))) {
          col = j;
          break;
        }
      }
      if (col == art_begin) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  // Phase 2 objective in minimization form.
  std::vector<T> cost(ncols, T(0));
  T cost_offset = T(0);
  for (std::size_t j = 0; j < nv; ++j) {
    T c = problem.maximize ? -problem.objective[j] : problem.objective[j];
    cost_offset += c * vars[j].offset;
    for (const auto& [col, coef] : vars[j].columns) cost[col] += c * coef;
  }
  for (std::size_t j = 0; j <= ncols; ++j) obj[j] = j < ncols ? cost[j] : T(0);
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const T cb = cost[tab.basis()[i]];
    if (A::is_zero(cb)) continue;
    for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= cb * tab.at(i, j);
  }
  const auto outcome = tab.run([&](std::size_t j) { return j < art_begin; }, limit);
  if (outcome == Tableau<T>::Outcome::iteration_limit) return {Status::numerical_failure, T{}, {}};
  if (outcome == Tableau<T>::Outcome::unbounded) return {Status::unbounded, T{}, {}};

  std::vector<T> y(ncols, T(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
  Result<T> result;
  result.status = Status::optimal;
  result.x.assign(nv, T(0));
  for (std::size_t j = 0; j < nv; ++j) {
    T v = vars[j].offset;
    for (const auto& [col, coef] : vars[j].columns) v += coef * y[col];
    result.x[j] = std::move(v);
  }
  T value = T(0);
  for (std::size_t j = 0; j < nv; ++j) value += problem.objective[j] * result.x[j];
  result.value = value;

  if constexpr (std::is_same_v<T, double>) {
    for (std::size_t i = 0; i < problem.rows.size(); ++i) {
      double lhs = 0, scale = 1 + std::fabs(problem.rhs[i]);
      for (std::size_t j = 0; j < nv; ++j) lhs += problem.rows[i][j] * result.x[j];
      const double slack_v = lhs - problem.rhs[i];
      const double tol = 1e-7 * scale;
      const bool bad = (problem.senses[i] == Sense::le && slack_v > tol) ||
                       (problem.senses[i] == Sense::ge && slack_v < -tol) ||
                       (problem.senses[i] == Sense::eq && std::fabs(slack_v) > tol);
      if (bad || !std::isfinite(lhs)) return {Status::numerical_failure, T{}, {}};
    }
  }
  return result;
}

template Result<double> solve<double>(const Problem<double>&);
template Result<Rational> solve<Rational>(const Problem<Rational>&);

}  // namespace symspec::lp
