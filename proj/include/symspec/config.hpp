#pragma once

#include "symspec/common.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace symspec {

/// Largest instance each operation accepts.
struct Caps {
  int expand_n = 20;
  int dense_float_n = 20;
  int dense_exact_n = 16;
  int lp_enumeration_n = 4;
  int symmetric_lp_n = 14;
  int pointwise_sign_n = 16;
  int lift_n = 12;
  std::uint64_t promise_dim = 4096;
  int eigen_n = 10;
};

inline const Caps default_caps{};

struct Config {
  Caps caps;
  Rational eps_main1{1, 4};
  Rational eps_main4{1, 5};
  Rational eps_inner{1, 20};
  Rational margin{1, 10};
  std::uint64_t seed = 1;
  int workers = 0;  // 0: hardware concurrency
  int trials = 50;
  int random_samples = 1000;
  std::filesystem::path output_dir = ".";

  /// Throws Error describing the first violated constraint.
  void validate() const;

  /// Applies "key = value" lines; '#' starts a comment.
  void apply(std::istream& in);
  void apply_kv(const std::string& key, const std::string& value);
};

/// Defaults, overlaid with the file named by SYMSPEC_CONFIG when it is set.
Config load_config();

}  // namespace symspec
