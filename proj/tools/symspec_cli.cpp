// symspec command-line interface: analyze, sweep, matrix, construct.

#include "symspec/construct.hpp"
#include "symspec/fourier.hpp"
#include "symspec/harness.hpp"
#include "symspec/liftmat.hpp"
#include "symspec/optimize.hpp"
#include "symspec/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

namespace fs = std::filesystem;
using namespace symspec;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, certificate_failed = 3 };

struct CertificateFailure : Error {
  using Error::Error;
};

struct FnSpec {
  std::string sym;
  std::string name;
  std::string table;
  int n = -1;

  void add_to(CLI::App* app) {
    app->add_option("--sym", sym, "value vector over weights 0..n, e.g. 000111");
    app->add_option("--name", name, "and, or, parity, maj, const0, const1, mod<m>, threshold<t>");
    app->add_option("--table", table, "truth table as hex (needs --n)");
    app->add_option("--n", n, "number of input bits for --name/--table");
  }

  std::variant<SymFn, BoolFn> resolve() const {
    const int count = !sym.empty() + !name.empty() + !table.empty();
    if (count != 1) throw Error("give exactly one of --sym, --name, --table");
    if (!sym.empty()) return SymFn::parse(sym);
    if (n < 1) throw Error("--name and --table need --n >= 1");
    if (!name.empty()) return named_function(name, n);
    std::string_view hex = table;
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    return BoolFn::parse_hex(n, hex);
  }

  SymFn symmetric() const {
    auto fn = resolve();
    if (auto* f = std::get_if<SymFn>(&fn)) return *f;
    if (auto s = as_symmetric(std::get<BoolFn>(fn))) return *s;
    throw Error("this command needs a symmetric function");
  }
};

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("range must look like 2..6 or 5", 0);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

template <class F>
Json capped(F&& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    return Json{{"skipped", e.what()}};
  }
}

Json analyze_symmetric(const SymFn& f, const Config& cfg) {
  Json j;
  const int n = f.n();
  const Measures m = measures(f);
  j["function"] = f.to_string();
  j["n"] = n;
  j["measures"] = to_json(m);
  const LevelSpectrum ls = level_spectrum(f);
  j["level_spectrum"] = to_json(ls);
  j["spectral_stats"] = to_json(spectral_stats(ls));
  j["signmon_upper"] = capped([&] {
    const SignPoly p = sign_poly_for(f, cfg.margin);
    const SignCheck chk = verify_sign(p, f, cfg.caps);
    if (!chk.ok) throw CertificateFailure("constructed sign polynomial fails verification");
    Integer bound = 1;
    for (int i = 0; i < m.rho; ++i) bound *= n + 2;
    return Json{{"terms", p.term_count()}, {"bound", bound.get_str()}, {"margin", to_string(chk.margin)}};
  });
  j["approx_l1"] = capped([&] {
    return Json{{to_string(cfg.eps_main1), to_string(approx_l1(f, cfg.eps_main1, cfg.caps).value)},
                {to_string(cfg.eps_main4), to_string(approx_l1(f, cfg.eps_main4, cfg.caps).value)}};
  });
  if (n <= cfg.caps.lp_enumeration_n) {
    const BoolFn g = expand(f, cfg.caps);
    j["mon_eps"] = to_json(mon_eps_exact(g, cfg.eps_main1, cfg.caps));
    j["signmon"] = to_json(signmon_exact(g, cfg.caps), cfg.caps);
  }
  if (n <= cfg.caps.eigen_n && n <= cfg.caps.lift_n)
    j["xor_lift_stats"] = capped([&] { return to_json(matrix_stats(lift(f, LiftKind::xor_kind, cfg.caps), cfg.caps)); });
  const auto plan = plan_reduction(f);
  j["plan"] = plan ? to_json(*plan) : Json("no-plan");
  return j;
}

Json analyze_table(const BoolFn& g, const Config& cfg) {
  Json j;
  j["table"] = "0x" + g.to_hex();
  j["n"] = g.n();
  if (auto s = as_symmetric(g)) j["symmetric_as"] = s->to_string();
  j["spectral_stats"] = capped([&] { return to_json(spectral_stats(wht(g, SpectrumMode::exact, cfg.caps))); });
  if (g.n() <= cfg.caps.lp_enumeration_n) {
    j["mon_eps"] = to_json(mon_eps_exact(g, cfg.eps_main1, cfg.caps));
    j["signmon"] = to_json(signmon_exact(g, cfg.caps), cfg.caps);
  }
  return j;
}

void emit(const std::string& text, const std::optional<fs::path>& file) {
  std::cout << text;
  if (file) write_atomic(*file, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral measures, constructions and matrix lifts of symmetric Boolean functions"};
  app.require_subcommand(1);
  std::string config_file;
  app.add_option("--config", config_file, "key=value config file (overrides SYMSPEC_CONFIG)");

  FnSpec analyze_fn;
  std::string analyze_out;
  auto* analyze = app.add_subcommand("analyze", "measures, spectrum, norms and bounds of one function");
  analyze_fn.add_to(analyze);
  analyze->add_option("--out", analyze_out, "also write the report to this file");

  std::string sweep_range = "1..8", sweep_checks, sweep_out, sweep_sym;
  int sweep_workers = -1;
  std::optional<std::uint64_t> sweep_seed;
  bool no_timing = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "run checks C1..C10 over all symmetric functions");
  sweep_cmd->add_option("--n", sweep_range, "n range, e.g. 2..6");
  sweep_cmd->add_option("--checks", sweep_checks, "comma-separated check ids (default: all)");
  sweep_cmd->add_option("--workers", sweep_workers, "worker threads (0: all cores)");
  sweep_cmd->add_option("--seed", sweep_seed, "seed for sampled checks");
  sweep_cmd->add_option("--out", sweep_out, "output directory");
  sweep_cmd->add_option("--sym", sweep_sym, "replay the checks on this one function");
  sweep_cmd->add_flag("--no-timing", no_timing, "omit elapsed times from the ledger");

  FnSpec matrix_fn;
  std::string kind_text = "xor", promise_text, matrix_out;
  bool with_plan = false;
  auto* matrix = app.add_subcommand("matrix", "build a two-party lift and its stats");
  matrix_fn.add_to(matrix);
  matrix->add_option("--kind", kind_text, "xor or and");
  matrix->add_option("--promise", promise_text, "k=<weight>,t=<fixed>");
  matrix->add_flag("--plan", with_plan, "also print the reduction plan");
  matrix->add_option("--out", matrix_out, "output directory for matrix.txt and stats.json");

  FnSpec construct_fn;
  std::string which, eps_text, construct_out;
  std::optional<int> trials;
  std::optional<std::uint64_t> construct_seed;
  auto* construct = app.add_subcommand("construct", "sign polynomial or sampled approximator");
  construct_fn.add_to(construct);
  construct->add_option("which", which, "signpoly or bs92")->required()->check(CLI::IsMember({"signpoly", "bs92"}));
  construct->add_option("--eps", eps_text, "approximation radius for bs92");
  construct->add_option("--trials", trials, "bs92 trials");
  construct->add_option("--seed", construct_seed, "bs92 seed");
  construct->add_option("--out", construct_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    Config cfg = load_config();
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw Error("cannot read config file " + config_file);
      cfg.apply(in);
    }

    if (*analyze) {
      auto fn = analyze_fn.resolve();
      cfg.validate();
      const Json report = std::holds_alternative<SymFn>(fn) ? analyze_symmetric(std::get<SymFn>(fn), cfg)
                                                            : analyze_table(std::get<BoolFn>(fn), cfg);
      std::optional<fs::path> file;
      if (!analyze_out.empty()) file = fs::path(analyze_out);
      emit(report.dump(2) + "\n", file);
      return Exit::ok;
    }

    if (*sweep_cmd) {
      SweepOptions opt;
      if (sweep_seed) cfg.seed = *sweep_seed;
      if (sweep_workers >= 0) cfg.workers = sweep_workers;
      if (!sweep_out.empty()) cfg.output_dir = sweep_out;
      opt.config = cfg;
      opt.workers = cfg.workers;
      std::tie(opt.n_lo, opt.n_hi) = parse_range(sweep_range);
      opt.checks = split(sweep_checks, ',');
      if (!sweep_sym.empty()) opt.only = SymFn::parse(sweep_sym);
      validate(opt);
      const Ledger ledger = sweep(opt);
      write_atomic(cfg.output_dir / "ledger.jsonl", ledger_jsonl(ledger, !no_timing));
      const std::string summary = summary_csv(ledger);
      write_atomic(cfg.output_dir / "summary.csv", summary);
      std::cout << summary;
      for (const auto& r : ledger.results)
        if (r.verdict == Verdict::fail)
          std::cerr << "FAIL " << r.check_id << ' ' << r.instance << ": " << r.lhs << " vs " << r.rhs << " ("
                    << r.note << ")\n";
      return ledger.any_fail() ? Exit::check_failed : Exit::ok;
    }

    if (*matrix) {
      cfg.validate();
      const SymFn f = matrix_fn.symmetric();
      const LiftKind kind = parse_lift_kind(kind_text);
      LiftMatrix m;
      if (promise_text.empty()) {
        m = lift(f, kind, cfg.caps);
      } else {
        std::optional<int> k, t;
        for (const auto& part : split(promise_text, ',')) {
          const auto eq = part.find('=');
          if (eq == std::string::npos) throw ParseError("promise must look like k=3,t=0", 0);
          const std::string key = part.substr(0, eq);
          const int value = std::stoi(part.substr(eq + 1));
          if (key == "k") k = value;
          else if (key == "t") t = value;
          else throw ParseError("unknown promise key '" + key + "'", 0);
        }
        if (!k) throw ParseError("promise needs k", 0);
        m = promise_lift(f, kind, *k, t.value_or(0), cfg.caps);
      }
      const std::string text = matrix_text(m.data);
      Json stats = capped([&] { return to_json(matrix_stats(m, cfg.caps)); });
      stats["kind"] = to_string(m.kind);
      stats["function"] = f.to_string();
      if (m.promise) stats["promise"] = {{"k", m.promise->k}, {"t", m.promise->t}};
      if (!matrix_out.empty()) {
        write_atomic(fs::path(matrix_out) / "matrix.txt", text);
        write_atomic(fs::path(matrix_out) / "stats.json", stats.dump(2) + "\n");
        std::cout << stats.dump(2) << "\n";
      } else {
        std::cout << text;
      }
      if (with_plan) {
        const auto plan = plan_reduction(f);
        if (plan) std::cout << to_json(*plan).dump() << "\n";
        else std::cout << "no-plan: no witness s with f(s-1) != f(s+1) at or above r(f)\n";
      }
      return Exit::ok;
    }

    if (*construct) {
      if (!eps_text.empty()) cfg.eps_main1 = parse_rational(eps_text);
      if (trials) cfg.trials = *trials;
      if (construct_seed) cfg.seed = *construct_seed;
      cfg.validate();
      const fs::path out_dir = construct_out.empty() ? cfg.output_dir : fs::path(construct_out);
      const bool write_files = !construct_out.empty();
      if (which == "signpoly") {
        const SymFn f = construct_fn.symmetric();
        const SignPoly p = sign_poly_for(f, cfg.margin);
        const SignCheck chk = verify_sign(p, f, cfg.caps);
        if (!chk.ok) throw CertificateFailure("constructed sign polynomial fails verification for " + f.to_string());
        Json j = {{"function", f.to_string()},
                  {"rho", measures(f).rho},
                  {"certificate", to_json(SignCertificate{p, chk.margin}, cfg.caps)}};
        const std::string text = j.dump(2) + "\n";
        std::cout << text;
        if (write_files) write_atomic(out_dir / "signpoly.json", text);
      } else {
        auto fn = construct_fn.resolve();
        const Bs92Result r = std::holds_alternative<SymFn>(fn)
                                 ? bs92_sample(std::get<SymFn>(fn), cfg.eps_main1, cfg.trials, cfg.seed, cfg.caps)
                                 : bs92_sample(std::get<BoolFn>(fn), cfg.eps_main1, cfg.trials, cfg.seed, cfg.caps);
        const std::string csv = bs92_csv(r);
        std::cout << csv;
        std::cerr << to_json(r).dump() << "\n";
        if (write_files) {
          write_atomic(out_dir / "bs92.csv", csv);
          write_atomic(out_dir / "bs92.json", to_json(r).dump(2) + "\n");
        }
      }
      return Exit::ok;
    }
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate verification failed: " << e.what() << "\n";
    return Exit::certificate_failed;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::usage;
}
