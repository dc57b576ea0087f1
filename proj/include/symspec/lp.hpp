#pragma once

#include "symspec/common.hpp"

#include <optional>
#include <string_view>
#include <vector>

/// Dense two-phase tableau simplex, instantiated for double and Rational.
///
/// Pivoting is deterministic: Dantzig's rule with lowest-index tie-breaking,
/// falling back to Bland's rule after a run of degenerate pivots so that the
/// method cannot cycle. The Rational instantiation is exact; the double one
/// uses absolute tolerance 1e-9 and reports numerical_failure (never
/// infeasible) when its final point violates a constraint by more than 1e-7.
namespace symspec::lp {

enum class Sense { le, eq, ge };
enum class Status { optimal, infeasible, unbounded, numerical_failure };

std::string_view to_string(Status s);

template <class T>
struct Bound {
  std::optional<T> lower = T(0);
  std::optional<T> upper;

  static Bound free() { return Bound{std::nullopt, std::nullopt}; }
};

template <class T>
struct Problem {
  bool maximize = false;
  std::vector<T> objective;
  std::vector<std::vector<T>> rows;
  std::vector<Sense> senses;
  std::vector<T> rhs;
  /// Empty means every variable is >= 0.
  std::vector<Bound<T>> bounds;

  std::size_t num_vars() const noexcept { return objective.size(); }
  void add_row(std::vector<T> coeffs, Sense sense, T b) {
    rows.push_back(std::move(coeffs));
    senses.push_back(sense);
    rhs.push_back(std::move(b));
  }
};

template <class T>
struct Result {
  Status status = Status::numerical_failure;
  T value{};
  std::vector<T> x;
};

template <class T>
Result<T> solve(const Problem<T>& problem);

extern template Result<double> solve<double>(const Problem<double>&);
extern template Result<Rational> solve<Rational>(const Problem<Rational>&);

}  // namespace symspec::lp
