#pragma once

#include "symspec/config.hpp"
#include "symspec/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symspec {

enum class Verdict { pass, fail, report_only, skip, vacuous };
std::string to_string(Verdict v);

struct CheckResult {
  std::string check_id;
  std::string instance;  // "sym:000111", "tt3:0x5a", "maj:10", "n=33", ...
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::pass;
  std::string note;
  double elapsed_ms = 0;
};

/// C1 .. C10
const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);
std::string check_title(std::string_view id);

/// Largest n each check runs at; larger n in a sweep yield one skip entry.
struct CheckCaps {
  int sign_construction_n = 10;  // C1
  int infinity_norm_n = 14;      // C2
  int bruck_n = 4;               // C3
  int bs92_n = 10;               // C4
  int ftoF_n = 8;                // C5
  int ftoF_eps_n = 4;            // C5, items needing LPs
  int identity_n = 10;           // C6
  std::uint64_t identity_dim = 256;
  int padding_m = 5;             // C7
  int complement_mon_n = 4;      // C8
  int complement_r_n = 14;       // C8
  int main4_n = 4;               // C9
  int trend_mon_n = 4;           // C10
  int trend_signrank_n = 8;      // C10
};

std::string sym_instance(const SymFn& f);
std::string table_instance(const BoolFn& g);

// One check on one instance. Errors other than CapExceeded propagate.
CheckResult check_sign_construction(const SymFn& f, const Config& cfg);              // C1
CheckResult check_infinity_norm(const SymFn& f);                                     // C2
CheckResult check_bruck(const BoolFn& g, const Config& cfg);                         // C3
CheckResult check_bs92(const SymFn& f, const std::string& name, const Config& cfg);  // C4
CheckResult check_ftoF(const SymFn& f, const Config& cfg, int eps_items_n);          // C5
CheckResult check_reduction_identity(const SymFn& f, std::uint64_t max_dim, const Config& cfg);  // C6
CheckResult check_planner(int n);                                                     // C6
CheckResult check_padding(const SymFn& g, const Config& cfg);                        // C7
CheckResult check_complement_measures(const SymFn& f);                               // C8
CheckResult check_complement_mon(const SymFn& f, const Config& cfg);                 // C8
CheckResult check_main4(const SymFn& f, const Config& cfg);                          // C9
std::vector<CheckResult> trend_rows(const SymFn& f, const Config& cfg, const CheckCaps& caps);  // C10

/// The bs92 suite at n: and, or, maj, mod3, threshold<ceil(n/3)>.
std::vector<std::pair<std::string, SymFn>> bs92_suite(int n);

/// count truth tables on n bits drawn from one mt19937_64 seeded with seed.
std::vector<BoolFn> random_functions(int n, int count, std::uint64_t seed);

struct SweepOptions {
  int n_lo = 1;
  int n_hi = 8;
  std::vector<std::string> checks;  // empty: all
  int workers = 0;                  // 0: hardware concurrency
  Config config;
  CheckCaps caps;
  std::optional<SymFn> only;  // replay a single function
};

struct Ledger {
  std::vector<CheckResult> results;
  bool any_fail() const;
};

struct SummaryRow {
  std::string check_id;
  std::uint64_t instances = 0;
  std::uint64_t passes = 0;  // includes vacuous passes
  std::uint64_t fails = 0;
  std::uint64_t skips = 0;
  std::uint64_t report_only = 0;
};

/// Throws Error on unknown check ids or an empty/invalid range, before any work.
void validate(const SweepOptions& opt);

/// Results in enumeration order (check, n, function code) whatever the
/// worker count.
Ledger sweep(const SweepOptions& opt);

std::vector<SummaryRow> summarize(const Ledger& ledger);
std::string ledger_jsonl(const Ledger& ledger, bool with_timing = true);
std::string summary_csv(const Ledger& ledger);

}  // namespace symspec
