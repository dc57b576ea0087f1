#include "symspec/config.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>

namespace symspec {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error("config: '" + key + "' expects an integer, got '" + value + "'");
  }
}

}  // namespace

void Config::validate() const {
  const int caps_list[] = {caps.expand_n,         caps.dense_float_n,
                           caps.dense_exact_n,    caps.lp_enumeration_n,
                           caps.symmetric_lp_n,   caps.pointwise_sign_n,
                           caps.lift_n,           caps.eigen_n};
  for (int c : caps_list)
    if (c <= 0) throw Error("config: every cap must be positive");
  if (caps.promise_dim == 0) throw Error("config: promise_dim must be positive");
  if (caps.expand_n > 30 || caps.dense_float_n > 30 || caps.dense_exact_n > 30)
    throw Error("config: dense caps above 30 are not supported");
  for (const Rational* e : {&eps_main1, &eps_main4, &eps_inner}) {
    if (*e < 0 || *e >= Rational(1, 2))
      throw Error("config: epsilons must lie in [0, 1/2), got " + to_string(*e));
  }
  if (margin <= 0 || margin >= 2)
    throw Error("config: margin must lie in (0, 2), got " + to_string(margin));
  if (workers < 0) throw Error("config: workers must be >= 0");
  if (trials <= 0) throw Error("config: trials must be positive");
  if (random_samples < 0) throw Error("config: random_samples must be >= 0");
}

void Config::apply_kv(const std::string& key, const std::string& value) {
  if (key == "expand_n") caps.expand_n = to_int(key, value);
  else if (key == "dense_float_n") caps.dense_float_n = to_int(key, value);
  else if (key == "dense_exact_n") caps.dense_exact_n = to_int(key, value);
  else if (key == "lp_enumeration_n") caps.lp_enumeration_n = to_int(key, value);
  else if (key == "symmetric_lp_n") caps.symmetric_lp_n = to_int(key, value);
  else if (key == "pointwise_sign_n") caps.pointwise_sign_n = to_int(key, value);
  else if (key == "lift_n") caps.lift_n = to_int(key, value);
  else if (key == "promise_dim") caps.promise_dim = static_cast<std::uint64_t>(to_int(key, value));
  else if (key == "eigen_n") caps.eigen_n = to_int(key, value);
  else if (key == "eps_main1") eps_main1 = parse_rational(value);
  else if (key == "eps_main4") eps_main4 = parse_rational(value);
  else if (key == "eps_inner") eps_inner = parse_rational(value);
  else if (key == "margin") margin = parse_rational(value);
  else if (key == "seed") seed = std::stoull(value);
  else if (key == "workers") workers = to_int(key, value);
  else if (key == "trials") trials = to_int(key, value);
  else if (key == "random_samples") random_samples = to_int(key, value);
  else if (key == "output_dir") output_dir = value;
  else throw Error("config: unknown key '" + key + "'");
}

void Config::apply(std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) + ": expected key = value");
    apply_kv(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

Config load_config() {
  Config cfg;
  if (const char* path = std::getenv("SYMSPEC_CONFIG"); path && *path) {
    std::ifstream in(path);
    if (!in) throw Error(std::string("cannot open config file ") + path);
    cfg.apply(in);
  }
  return cfg;
}

}  // namespace symspec
