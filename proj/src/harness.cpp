#include "symspec/harness.hpp"

#include "symspec/construct.hpp"
#include "symspec/fourier.hpp"
#include "symspec/liftmat.hpp"
#include "symspec/optimize.hpp"
#include "symspec/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace symspec {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

CheckResult make(std::string id, std::string instance, std::string lhs, std::string rhs, bool ok,
                 std::string note = {}) {
  return {std::move(id), std::move(instance), std::move(lhs), std::move(rhs),
          ok ? Verdict::pass : Verdict::fail, std::move(note), 0};
}

Integer int_pow(int base, int exp) {
  Integer r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::report_only: return "report-only";
    case Verdict::skip: return "skip";
    case Verdict::vacuous: return "vacuous-pass";
  }
  return "?";
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"C1", "C2", "C3", "C4", "C5",
                                               "C6", "C7", "C8", "C9", "C10"};
  return ids;
}

bool is_check_id(std::string_view id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string check_title(std::string_view id) {
  static const std::map<std::string, std::string, std::less<>> titles = {
      {"C1", "signmon construction bound"},   {"C2", "infinity-norm bound"},
      {"C3", "Bruck bound"},                  {"C4", "BS92 sampling bound"},
      {"C5", "ftoF equalities"},              {"C6", "reduction identity and planner"},
      {"C7", "padding embedding"},            {"C8", "complementation invariances"},
      {"C9", "main4 chain"},                  {"C10", "trend reports"}};
  auto it = titles.find(id);
  return it == titles.end() ? std::string() : it->second;
}

std::string sym_instance(const SymFn& f) { return "sym:" + f.to_string(); }

std::string table_instance(const BoolFn& g) { return "tt" + std::to_string(g.n()) + ":0x" + g.to_hex(); }

CheckResult check_sign_construction(const SymFn& f, const Config& cfg) {
  const SignPoly p = sign_poly_for(f, cfg.margin);
  const SignCheck chk = verify_sign(p, f, cfg.caps);
  const Integer bound = int_pow(f.n() + 2, measures(f).rho);
  const bool ok = chk.ok && Integer(p.term_count()) <= bound;
  return make("C1", sym_instance(f), std::to_string(p.term_count()), bound.get_str(), ok,
              chk.ok ? "margin " + to_string(chk.margin) : "sign verification failed");
}

CheckResult check_infinity_norm(const SymFn& f) {
  const LevelSpectrum ls = level_spectrum(f);
  const Rational linf = spectral_stats(sign_form(ls)).linf;
  const Rational bound = Rational(1) / Rational(int_pow(f.n() + 2, measures(f).rho));
  return make("C2", sym_instance(f), to_string(linf), to_string(bound), linf >= bound,
              "+-1 form; 0/1 form linf " + to_string(spectral_stats(ls).linf));
}

CheckResult check_bruck(const BoolFn& g, const Config& cfg) {
  const auto sym = as_symmetric(g);
  const std::string instance = sym ? sym_instance(*sym) : table_instance(g);
  const SignmonResult sm = signmon_exact(g, cfg.caps);
  const Rational linf = spectral_stats(sign_form(wht(g, SpectrumMode::exact, cfg.caps))).linf;
  const Rational bound = Rational(1) / linf;  // nonzero by Parseval
  return make("C3", instance, std::to_string(sm.value), to_string(bound), Rational(sm.value) >= bound,
              "witness margin " + to_string(sm.certificate.margin));
}

CheckResult check_bs92(const SymFn& f, const std::string& name, const Config& cfg) {
  const Bs92Result r = bs92_sample(f, cfg.eps_main1, cfg.trials, cfg.seed, cfg.caps);
  std::uint64_t max_support = 0;
  for (const auto& t : r.trials) max_support = std::max(max_support, t.support);
  const bool support_ok = max_support <= r.samples;
  const bool error_ok = r.median_error <= cfg.eps_main1.get_d();
  std::ostringstream note;
  note << "max support " << max_support << " <= " << r.samples << (support_ok ? "" : " VIOLATED")
       << "; l1 " << to_string(r.l1) << "; best error " << fmt(r.trials[r.best].linf_error);
  return make("C4", name, fmt(r.median_error), to_string(cfg.eps_main1), support_ok && error_ok,
              note.str());
}

CheckResult check_ftoF(const SymFn& f, const Config& cfg, int eps_items_n) {
  const FtoFReport rep = ftoF_check(f, cfg.eps_main1, cfg.caps, eps_items_n);
  std::size_t passed = 0;
  std::string note;
  for (const auto& i : rep.items) {
    if (i.pass) {
      ++passed;
    } else {
      note += "(" + i.item + ") " + i.lhs + " vs " + i.rhs + "; ";
    }
  }
  std::string items;
  for (const auto& i : rep.items) items += i.item;
  if (note.empty()) note = "items " + items;
  return make("C5", sym_instance(f), std::to_string(passed), std::to_string(rep.items.size()),
              rep.all_pass(), note);
}

CheckResult check_reduction_identity(const SymFn& f, std::uint64_t max_dim, const Config& cfg) {
  const int n = f.n();
  std::uint64_t pairs = 0, entries = 0, mismatches = 0;
  std::string first_bad;
  for (int t = 0; t <= n; ++t)
    for (int k = 0; 2 * k + t <= n; ++k) {
      if (binomial_u64(n - t, k) > max_dim) continue;
      const XorAndIdentity id = xor_to_and_identity(f, k, t, cfg.caps);
      ++pairs;
      entries += id.entries_checked;
      mismatches += id.mismatches;
      if (!id.equal() && first_bad.empty())
        first_bad = "; first mismatch at k=" + std::to_string(k) + ",t=" + std::to_string(t);
    }
  return make("C6", sym_instance(f), std::to_string(mismatches), "0", mismatches == 0,
              std::to_string(pairs) + " (k,t) pairs, " + std::to_string(entries) + " entries" + first_bad);
}

CheckResult check_planner(int n) {
  std::uint64_t violations = 0;
  std::string first_bad;
  for (int s = 1; s <= (n + 1) / 2; ++s) {
    const ReductionPlan p = plan_for_witness(n, s);
    if (!check_plan(p).all()) {
      ++violations;
      if (first_bad.empty())
        first_bad = "; first violation s=" + std::to_string(s) + " t=" + std::to_string(p.t) +
                    " k=" + std::to_string(p.k) + " ell=" + std::to_string(p.ell);
    }
  }
  return make("C6", "n=" + std::to_string(n), std::to_string(violations), "0", violations == 0,
              "planner, s = 1.." + std::to_string((n + 1) / 2) + first_bad);
}

CheckResult check_padding(const SymFn& g, const Config& cfg) {
  const PaddingEmbedding e = padding_embedding(g, cfg.caps);
  const std::uint64_t bad = e.weight_violations + e.intersection_mismatches + e.entry_mismatches;
  return make("C7", sym_instance(g), std::to_string(bad), "0", e.ok(),
              std::to_string(e.pairs_checked) + " pairs checked");
}

CheckResult check_complement_measures(const SymFn& f) {
  const Measures m = measures(f);
  if (m.r1 == 0) {
    CheckResult r = make("C8", sym_instance(f), "-", "0", true, "r1 = 0 is excluded");
    r.verdict = Verdict::vacuous;
    return r;
  }
  const int r0_rev = measures(reverse(f)).r0;
  return make("C8", sym_instance(f), std::to_string(r0_rev), std::to_string(m.r1), r0_rev >= m.r1,
              "r0(reverse f) >= r1(f)");
}

CheckResult check_complement_mon(const SymFn& f, const Config& cfg) {
  const BoolFn g = expand(f, cfg.caps);
  const BoolFn gc = complement_inputs(g);
  const MonEpsResult a = mon_eps_exact(g, cfg.eps_main1, cfg.caps);
  const MonEpsResult b = mon_eps_exact(gc, cfg.eps_main1, cfg.caps);
  const Spectrum sa = wht(g, SpectrumMode::exact, cfg.caps);
  const Spectrum sb = wht(gc, SpectrumMode::exact, cfg.caps);
  bool same_abs = true;
  for (Mask s = 0; s < sa.size(); ++s)
    if (abs(sa.exact[s]) != abs(sb.exact[s])) same_abs = false;
  return make("C8", sym_instance(f), std::to_string(a.value), std::to_string(b.value),
              a.value == b.value && same_abs,
              std::string("mon_eps(g) = mon_eps(g'); |g^| = |g'^| ") + (same_abs ? "holds" : "FAILS"));
}

CheckResult check_main4(const SymFn& f, const Config& cfg) {
  const MonEpsResult mon = mon_eps_exact(expand(f, cfg.caps), cfg.eps_main1, cfg.caps);
  if (mon.value == 0) {
    CheckResult r = make("C9", sym_instance(f), "-", "-", true, "mon_1/4 = 0");
    r.verdict = Verdict::vacuous;
    return r;
  }
  const Rational l1 = approx_l1(f, cfg.eps_main4, cfg.caps).value;
  const int n = f.n();
  // log l1 >= (1/2) log mon - (1/2) log n - log 40  <=>  1600 n l1^2 >= mon
  const bool ok = Rational(1600 * n) * l1 * l1 >= Rational(mon.value);
  const double lhs = log2_rational(l1);
  const double rhs = 0.5 * std::log2(static_cast<double>(mon.value)) - 0.5 * std::log2(n) - std::log2(40.0);
  return make("C9", sym_instance(f), fmt(lhs), fmt(rhs), ok,
              "log2 units; l1_{1/5} = " + to_string(l1) + ", mon_{1/4} = " + std::to_string(mon.value));
}

std::vector<CheckResult> trend_rows(const SymFn& f, const Config& cfg, const CheckCaps& caps) {
  std::vector<CheckResult> rows;
  auto row = [&](std::string lhs, std::string rhs, std::string note) {
    CheckResult r = make("C10", sym_instance(f), std::move(lhs), std::move(rhs), true, std::move(note));
    r.verdict = Verdict::report_only;
    rows.push_back(std::move(r));
  };
  const int n = f.n();
  const Measures m = measures(f);
  const double log_n = std::log2(static_cast<double>(n));

  if (m.r > 1 && n <= cfg.caps.symmetric_lp_n) {
    const Rational l1 = spectral_stats(level_spectrum(f)).l1;
    const double scale = m.r * std::log2(static_cast<double>(n) / m.r);
    row(fmt(log2_rational(l1)), fmt(scale), "afh: log2 l1 vs r log2(n/r), r = " + std::to_string(m.r));
  }

  std::string plan_note = "no plan";
  if (const auto plan = plan_reduction(f))
    plan_note = "s=" + std::to_string(plan->s) + " t=" + std::to_string(plan->t) +
                " k/n=" + fmt(plan->k_fraction()) + " ell/n=" + fmt(plan->ell_fraction());
  if (n <= caps.trend_mon_n) {
    const auto mon = mon_eps_exact(expand(f, cfg.caps), cfg.eps_main1, cfg.caps).value;
    const double lhs = mon == 0 ? -INFINITY : std::log2(static_cast<double>(mon));
    row(fmt(lhs), std::to_string(m.r), "main1: log2 mon_1/4 vs r; " + plan_note);
  } else {
    row("-", std::to_string(m.r), "main1: planner only; " + plan_note);
  }

  int flips = 0, even_flips = 0;
  for (int j = 2; j <= n; ++j)
    if (f(j) != f(j - 2)) {
      ++flips;
      if (j % 2 == 0 && 3 * j <= 2 * n) ++even_flips;
    }
  const std::string fraction = flips ? fmt(static_cast<double>(even_flips) / flips) : "-";
  if (n <= caps.sign_construction_n) {
    const SignPoly p = sign_poly_for(f, cfg.margin);
    row(fmt(std::log2(static_cast<double>(p.term_count()))), fmt(m.rho * log_n),
        "main2: log2 constructed terms vs rho log2 n; even-flip fraction in [2, 2n/3] " + fraction);
    if (n <= caps.trend_signrank_n) {
      const double forster = forster_bound(sign_matrix(lift(f, LiftKind::xor_kind, cfg.caps)), cfg.caps);
      row(fmt(std::log2(forster)), fmt(std::log2(static_cast<double>(p.term_count()))),
          "main3: log2 Forster lower bound vs log2 construction upper bound on signrank, rho = " +
              std::to_string(m.rho));
    }
  }
  return rows;
}

std::vector<std::pair<std::string, SymFn>> bs92_suite(int n) {
  const std::string threshold = "threshold" + std::to_string((n + 2) / 3);
  std::vector<std::pair<std::string, SymFn>> out;
  for (const std::string name : {"and", "or", "maj", "mod3"})
    out.emplace_back(name + ":" + std::to_string(n), named_function(name, n));
  out.emplace_back(threshold + ":" + std::to_string(n), named_function(threshold, n));
  return out;
}

std::vector<BoolFn> random_functions(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BoolFn> out;
  const std::size_t size = std::size_t{1} << n;
  for (int i = 0; i < count; ++i) {
    std::vector<std::uint8_t> table(size);
    for (auto& b : table) b = static_cast<std::uint8_t>(rng() >> 63);
    out.emplace_back(n, std::move(table));
  }
  return out;
}

bool Ledger::any_fail() const {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.verdict == Verdict::fail; });
}

void validate(const SweepOptions& opt) {
  opt.config.validate();
  for (const auto& id : opt.checks)
    if (!is_check_id(id)) throw Error("unknown check id '" + id + "'");
  if (opt.n_lo < 1 || opt.n_hi < opt.n_lo || opt.n_hi > 63)
    throw Error("n range must satisfy 1 <= lo <= hi <= 63");
  if (opt.workers < 0) throw Error("workers must be >= 0");
}

namespace {

using Task = std::function<std::vector<CheckResult>()>;

struct PlannedTask {
  std::string check_id;
  std::string instance;
  Task run;
};

CheckResult skip(const std::string& id, const std::string& instance, const std::string& why) {
  CheckResult r{id, instance, "-", "-", Verdict::skip, why, 0};
  return r;
}

std::vector<SymFn> functions_at(int n, const SweepOptions& opt) {
  if (opt.only) return n == opt.only->n() ? std::vector<SymFn>{*opt.only} : std::vector<SymFn>{};
  std::vector<SymFn> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n + 1)); ++c) out.push_back(SymFn::from_code(n, c));
  return out;
}

void plan_check(const std::string& id, const SweepOptions& opt, std::vector<PlannedTask>& tasks) {
  const Config& cfg = opt.config;
  const CheckCaps& caps = opt.caps;
  const int lo = opt.only ? opt.only->n() : opt.n_lo;
  const int hi = opt.only ? opt.only->n() : opt.n_hi;

  auto per_function = [&](int cap, auto body) {
    for (int n = lo; n <= hi; ++n) {
      const std::string n_inst = "n=" + std::to_string(n);
      if (n > cap) {
        tasks.push_back({id, n_inst, [id, n_inst, cap] {
                           return std::vector<CheckResult>{
                               skip(id, n_inst, "cap: runs for n <= " + std::to_string(cap))};
                         }});
        continue;
      }
      for (const SymFn& f : functions_at(n, opt))
        tasks.push_back({id, sym_instance(f), [f, body] { return body(f); }});
    }
  };
  auto one = [](CheckResult r) { return std::vector<CheckResult>{std::move(r)}; };

  if (id == "C1") {
    per_function(caps.sign_construction_n, [cfg, one](const SymFn& f) { return one(check_sign_construction(f, cfg)); });
  } else if (id == "C2") {
    per_function(caps.infinity_norm_n, [one](const SymFn& f) { return one(check_infinity_norm(f)); });
  } else if (id == "C3") {
    per_function(caps.bruck_n, [cfg, one](const SymFn& f) { return one(check_bruck(expand(f, cfg.caps), cfg)); });
    if (!opt.only && lo <= 3 && 3 <= hi && cfg.random_samples > 0) {
      for (const BoolFn& g : random_functions(3, cfg.random_samples, cfg.seed))
        tasks.push_back({id, table_instance(g), [g, cfg, one] { return one(check_bruck(g, cfg)); }});
    }
  } else if (id == "C4") {
    for (int n = lo; n <= hi; ++n) {
      if (n > caps.bs92_n || n < 2) {
        const std::string n_inst = "n=" + std::to_string(n);
        tasks.push_back({id, n_inst, [id, n_inst, caps] {
                           return std::vector<CheckResult>{skip(
                               id, n_inst, "cap: runs for 2 <= n <= " + std::to_string(caps.bs92_n))};
                         }});
        continue;
      }
      if (opt.only) {
        const SymFn f = *opt.only;
        tasks.push_back({id, sym_instance(f), [f, cfg, one] { return one(check_bs92(f, sym_instance(f), cfg)); }});
        continue;
      }
      for (auto& [name, f] : bs92_suite(n))
        tasks.push_back({id, name, [name, f, cfg, one] { return one(check_bs92(f, name, cfg)); }});
    }
  } else if (id == "C5") {
    const int eps_n = caps.ftoF_eps_n;
    per_function(caps.ftoF_n, [cfg, eps_n, one](const SymFn& f) { return one(check_ftoF(f, cfg, eps_n)); });
  } else if (id == "C6") {
    const std::uint64_t dim = caps.identity_dim;
    per_function(caps.identity_n, [cfg, dim, one](const SymFn& f) {
      return one(check_reduction_identity(f, dim, cfg));
    });
    for (int n = lo; n <= hi; ++n)
      tasks.push_back({id, "n=" + std::to_string(n), [n, one] { return one(check_planner(n)); }});
  } else if (id == "C7") {
    per_function(caps.padding_m, [cfg, one](const SymFn& g) { return one(check_padding(g, cfg)); });
  } else if (id == "C8") {
    const int mon_n = caps.complement_mon_n;
    per_function(caps.complement_r_n, [cfg, mon_n](const SymFn& f) {
      std::vector<CheckResult> out{check_complement_measures(f)};
      if (f.n() <= mon_n) out.push_back(check_complement_mon(f, cfg));
      return out;
    });
  } else if (id == "C9") {
    per_function(caps.main4_n, [cfg, one](const SymFn& f) { return one(check_main4(f, cfg)); });
  } else if (id == "C10") {
    per_function(cfg.caps.symmetric_lp_n, [cfg, caps](const SymFn& f) { return trend_rows(f, cfg, caps); });
  }
}

}  // namespace

Ledger sweep(const SweepOptions& opt) {
  validate(opt);
  const std::vector<std::string> checks = opt.checks.empty() ? check_ids() : opt.checks;
  std::vector<PlannedTask> tasks;
  for (const auto& id : checks) plan_check(id, opt, tasks);

  std::vector<std::vector<CheckResult>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Timer timer;
      try {
        results[i] = tasks[i].run();
      } catch (const CapExceeded& e) {
        results[i] = {skip(tasks[i].check_id, tasks[i].instance, std::string("cap: ") + e.what())};
      } catch (const std::exception& e) {
        CheckResult r{tasks[i].check_id, tasks[i].instance, "-", "-", Verdict::fail,
                      std::string("error: ") + e.what(), 0};
        results[i] = {r};
      }
      const double ms = timer.ms();
      for (auto& r : results[i]) r.elapsed_ms = ms / static_cast<double>(results[i].size());
    }
  };
  int workers = opt.workers > 0 ? opt.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(tasks.size(), 1))));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Ledger ledger;
  for (auto& batch : results)
    for (auto& r : batch) ledger.results.push_back(std::move(r));
  return ledger;
}

std::vector<SummaryRow> summarize(const Ledger& ledger) {
  std::vector<SummaryRow> rows;
  std::map<std::string, std::size_t> index;
  for (const auto& r : ledger.results) {
    auto [it, fresh] = index.emplace(r.check_id, rows.size());
    if (fresh) rows.push_back({r.check_id});
    SummaryRow& row = rows[it->second];
    ++row.instances;
    if (r.verdict == Verdict::pass || r.verdict == Verdict::vacuous) ++row.passes;
    else if (r.verdict == Verdict::fail) ++row.fails;
    else if (r.verdict == Verdict::skip) ++row.skips;
    else ++row.report_only;
  }
  return rows;
}

std::string ledger_jsonl(const Ledger& ledger, bool with_timing) {
  std::string out;
  for (const auto& r : ledger.results) {
    Json j = {{"check_id", r.check_id}, {"instance", r.instance}, {"lhs", r.lhs},
              {"rhs", r.rhs},           {"verdict", to_string(r.verdict)}, {"note", r.note}};
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string summary_csv(const Ledger& ledger) {
  std::ostringstream out;
  out << "check_id,instances,passes,fails,skips,report_only\n";
  for (const auto& row : summarize(ledger))
    out << row.check_id << ',' << row.instances << ',' << row.passes << ',' << row.fails << ','
        << row.skips << ',' << row.report_only << '\n';
  return out.str();
}

}  // namespace symspec
