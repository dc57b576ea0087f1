#pragma once

#include "symspec/common.hpp"
#include "symspec/config.hpp"
#include "symspec/core.hpp"
#include "symspec/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symspec {

enum class LiftKind { xor_kind, and_kind };

std::string to_string(LiftKind kind);
LiftKind parse_lift_kind(std::string_view text);

struct Promise {
  int k = 0;  // Hamming weight of both inputs
  int t = 0;  // fixed coordinates
  bool operator==(const Promise&) const = default;
};

/// A two-party matrix with entries source(|x op y| + offset).
struct LiftMatrix {
  LiftKind kind = LiftKind::xor_kind;
  SymFn source{std::vector<std::uint8_t>{0, 0}};
  int length = 0;                 // bits per party
  std::optional<Promise> promise;
  int offset = 0;                 // added to |x op y| before evaluating source
  std::vector<Mask> rows;         // lexicographic by bitstring
  std::vector<Mask> cols;
  Matrix<int> data;

  bool full_xor() const noexcept { return kind == LiftKind::xor_kind && !promise; }
};

/// Strings of the given length and weight, lexicographic as bitstrings
/// x_1 x_2 ... (x_1 is the low bit of the mask).
std::vector<Mask> weight_strings(int length, int weight);
/// All strings of the given length, lexicographic as bitstrings.
std::vector<Mask> all_strings(int length);

/// Full 2^n x 2^n lift with entries f(|x and y|) or f(|x xor y|).
LiftMatrix lift(const SymFn& f, LiftKind kind, const Caps& caps = default_caps);

/// Rows and columns: weight-k strings of length n - t. Entries
/// f(|x xor y| + t) for xor, f(|x and y| + t) for and; the t fixed
/// coordinates hold x_i = 1, y_i = 0 (xor) or x_i = y_i = 1 (and).
LiftMatrix promise_lift(const SymFn& f, LiftKind kind, int k, int t,
                        const Caps& caps = default_caps);

/// Weight-k strings of the given length with entries g(|x and y|), g on k bits.
LiftMatrix and_promise_matrix(const SymFn& g, int length, int k,
                              const Caps& caps = default_caps);

struct XorAndIdentity {
  LiftMatrix xor_side;
  LiftMatrix and_side;
  SymFn f_prime{std::vector<std::uint8_t>{0, 0}};  // f'(i) = f(2k - 2i + t), i = 0..k
  std::vector<std::size_t> row_map;  // identity: row i of one is row i of the other
  std::vector<std::size_t> col_map;
  std::uint64_t entries_checked = 0;
  std::uint64_t mismatches = 0;
  bool equal() const noexcept { return mismatches == 0; }
};

/// Builds both promise matrices and checks them entrywise under the shared
/// enumeration; on the promise |x xor y| = 2k - 2|x and y|.
XorAndIdentity xor_to_and_identity(const SymFn& f, int k, int t, const Caps& caps = default_caps);

struct PaddingEmbedding {
  int m = 0;
  std::vector<Mask> row_images;  // x -> (x, complement of x, 0^m)
  std::vector<Mask> col_images;  // y -> (y, 0^m, complement of y)
  std::vector<std::size_t> row_index;  // position of each image in the promise matrix
  std::vector<std::size_t> col_index;
  std::uint64_t pairs_checked = 0;
  std::uint64_t weight_violations = 0;
  std::uint64_t intersection_mismatches = 0;
  std::uint64_t entry_mismatches = 0;
  bool ok() const noexcept {
    return weight_violations == 0 && intersection_mismatches == 0 && entry_mismatches == 0;
  }
};

Mask pad_row(Mask x, int m);
Mask pad_col(Mask y, int m);

/// Embeds the full and-lift of g (on m bits) into the weight-m and-promise
/// matrix of g on 3m bits and checks every entry.
PaddingEmbedding padding_embedding(const SymFn& g, const Caps& caps = default_caps);

struct MatrixStats {
  std::size_t rank = 0;
  std::vector<double> singular_values;  // descending
  double trace_norm = 0;
  double frobenius = 0;
  double spectral = 0;
  bool analytic = false;  // singular values from the Fourier spectrum
};

/// Rank is exact. Full xor lifts take singular values from the spectrum;
/// everything else goes through the eigensolver (dimension <= 2^eigen_n).
MatrixStats matrix_stats(const LiftMatrix& m, const Caps& caps = default_caps);
MatrixStats matrix_stats(const Matrix<int>& m, const Caps& caps = default_caps);

/// Eigenvalues of a full xor lift, verified exactly: F chi_S = lambda_S chi_S
/// for every S, checked on every row. The characters form a basis, so these
/// are all the eigenvalues.
struct XorSpectrumCertificate {
  bool verified = false;
  std::vector<std::int64_t> eigenvalues;  // indexed by S
  std::int64_t spectral() const;
  std::int64_t trace_norm() const;
};
XorSpectrumCertificate certify_xor_spectrum(const LiftMatrix& m);

/// (trace_eps / (dim (1 + eps)))^2, a lower bound on the eps-rank.
Rational trace_rank_bound(const Rational& trace_norm_eps, std::uint64_t dim, const Rational& eps);
/// Same for a full xor lift, with its eps-trace norm 2^n ||f^||_{1,eps}.
Rational trace_rank_bound(const LiftMatrix& m, const Rational& eps, const Caps& caps = default_caps);

/// (<M, Psi> - eps ||Psi||_1) / ||Psi||, a lower bound on ||M||_{tr,eps};
/// 0 when Psi = 0.
double trace_witness_bound(const Matrix<double>& m, const Matrix<double>& psi, double eps);

/// Psi(x, y) = psi(x xor y) from the optimal dual solution for f; rows and
/// columns in the same order as lift(f, xor).
Matrix<double> xor_dual_witness(const SymFn& f, const Rational& eps, const Caps& caps = default_caps);

/// +1 where the lift is 1, -1 where it is 0.
Matrix<int> sign_matrix(const LiftMatrix& m);

/// N / ||M|| for a square +-1 matrix: a lower bound on its sign rank.
double forster_bound(const Matrix<int>& sign, const Caps& caps = default_caps);

struct FtoFItem {
  std::string item;  // "a".."f"
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string note;
};

struct FtoFReport {
  SymFn f{std::vector<std::uint8_t>{0, 0}};
  std::vector<FtoFItem> items;
  bool all_pass() const;
};

/// Compares spectral quantities of f with matrix quantities of its xor lift:
/// (a) mon = rank, (d) 2^n linf = spectral norm, (e) 2^n l1 = trace norm
/// (n <= 8); (f) 2^n ||f^||_{1,eps} = trace norm of the lift of the optimal
/// approximator, (b) mon_eps >= trace_rank_bound, (c) signmon >= forster
/// bound (n <= eps_items_n).
FtoFReport ftoF_check(const SymFn& f, const Rational& eps, const Caps& caps = default_caps,
                      int eps_items_n = 4);

enum class PlanCase { small_s, large_s };
std::string to_string(PlanCase c);

struct ReductionPlan {
  int n = 0;
  bool reversed = false;
  int s = 0;
  int t = 0;
  int k = 0;
  int ell = 0;
  PlanCase plan_case = PlanCase::small_s;
  double k_fraction() const { return static_cast<double>(k) / n; }
  double ell_fraction() const { return static_cast<double>(ell) / n; }
};

struct PlanInvariants {
  bool parity = false;     // t - s - 1 even
  bool k_bound = false;    // 4k <= n - t
  bool ell_bound = false;  // 4 ell <= k, or k < 4
  bool ell_formula = false;
  bool all() const { return parity && k_bound && ell_bound && ell_formula; }
};

/// The case analysis for witness s (1 <= s <= ceil(n/2)).
ReductionPlan plan_for_witness(int n, int s);
PlanInvariants check_plan(const ReductionPlan& p);

/// Reverses f when r1 > r0, then plans for the largest s >= r with
/// f(s-1) != f(s+1). Empty when no such s exists.
std::optional<ReductionPlan> plan_reduction(const SymFn& f);

}  // namespace symspec
