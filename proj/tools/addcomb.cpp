#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "addcomb/constructions.hpp"
#include "addcomb/decomposition.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/estimates.hpp"
#include "addcomb/io.hpp"
#include "addcomb/limits.hpp"
#include "addcomb/parallel.hpp"
#include "addcomb/report.hpp"
#include "addcomb/verify.hpp"

namespace fs = std::filesystem;
using namespace addcomb;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct Globals {
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool record_time = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

RunManifest manifest(const Globals& g, const std::string& command, const std::vector<std::string>& inputs,
                     Json config) {
  RunManifest m;
  m.command = command;
  for (const auto& p : inputs) m.inputs.emplace_back(p, file_digest(p));
  m.seed = g.seed;
  m.config = std::move(config);
  if (g.record_time)
    m.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - g.start).count();
  return m;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

struct FamilyFlags {
  FamilyConfig config;
  bool no_blocks = false, no_random = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--translates", config.translates, "translates A-a and dilates A/a in the family")
        ->capture_default_str();
    cmd->add_option("--popular", config.popular, "top-m popular differences and quotients")->capture_default_str();
    cmd->add_flag("--no-dyadic-blocks", no_blocks, "drop contiguous dyadic blocks from the family");
    cmd->add_flag("--no-random-subsets", no_random, "drop seeded random subsets from the family");
  }
  FamilyConfig get(std::uint64_t seed) const {
    FamilyConfig c = config;
    c.dyadic_blocks = !no_blocks;
    c.random_subsets = !no_random;
    c.seed = seed;
    return c;
  }
};

struct SlackFlags {
  std::string C;
  unsigned c = 0;
  void attach(CLI::App* cmd, const Slack& defaults) {
    C = to_string(defaults.C);
    c = defaults.c;
    cmd->add_option("--slack-C", C, "constant C of the C*log2^c|A| slack")->capture_default_str();
    cmd->add_option("--slack-c", c, "log exponent c of the slack")->capture_default_str();
  }
  Slack get() const { return Slack{parse_rational(C), c}; }
};

// ---------------------------------------------------------------- energy

struct EnergyCmd {
  std::vector<std::string> files;
  unsigned k = 2;
  std::string kind = "both";
  std::string rep_csv, out;

  CLI::App* attach(CLI::App* app) {
    auto* cmd = app->add_subcommand("energy", "exact energies, sigma_k and representation summaries");
    cmd->add_option("files", files, "one set file, or two for cross energies")->required()->expected(1, 2);
    cmd->add_option("--k", k, "energy order")->capture_default_str()->check(CLI::Range(1u, 64u));
    cmd->add_option("--kind", kind, "add, mult or both")->capture_default_str();
    cmd->add_option("--rep-csv", rep_csv, "write the additive representation function of A-B as CSV");
    cmd->add_option("-o,--out", out, "report path (default stdout)");
    return cmd;
  }

  static Json rep_summary(const FiniteRealSet& a, const FiniteRealSet& b, SetOp op) {
    const RepFunction r = rep_function(a, b, op);
    BigInt mx = 0;
    for (const auto& [x, c] : r.counts) mx = std::max(mx, c);
    static const char* names[] = {"sum", "diff", "prod", "quot"};
    return Json{{"op", names[static_cast<int>(op)]},
                {"support", r.support_size()},
                {"max", to_string(mx)},
                {"total", to_string(r.total)}};
  }

  void run();
};

const Globals* g_globals = nullptr;

void EnergyCmd::run() {
  const Globals& g = *g_globals;
  std::vector<Kind> kinds;
  if (kind == "both")
    kinds = {Kind::additive, Kind::multiplicative};
  else
    kinds = {parse_kind(kind)};
  const FiniteRealSet a = read_set_file(files[0]);
  const FiniteRealSet b = files.size() > 1 ? read_set_file(files[1]) : a;
  const bool cross = files.size() > 1;

  Json energies = Json::array(), reps = Json::array();
  for (Kind kd : kinds) {
    Json e{{"kind", to_string(kd)}, {"k", k}};
    if (k == 2) {
      // E2 counts a1 o b1 = a2 o b2 directly, zeros included.
      e["value"] = to_string(energy2(a, b, kd).value);
    } else if (k == 1) {
      e["value"] = to_string(BigInt(BigInt(a.size()) * b.size()));
    } else {
      const bool zeros = kd == Kind::multiplicative && (a.contains_zero() || b.contains_zero());
      const FiniteRealSet aa = zeros ? without_zero(a) : a, bb = zeros ? without_zero(b) : b;
      e["value"] = aa.empty() || bb.empty() ? "0" : to_string(energy_k_pair(aa, bb, k, kd).value);
      if (zeros) e["zero_removed"] = true;
    }
    energies.push_back(e);
    if (kd == Kind::additive) {
      reps.push_back(rep_summary(a, b, SetOp::sum));
      reps.push_back(rep_summary(a, b, SetOp::diff));
    } else {
      reps.push_back(rep_summary(a, b, SetOp::prod));
      const FiniteRealSet bs = without_zero(b);
      if (!bs.empty()) reps.push_back(rep_summary(a, bs, SetOp::quot));
    }
  }
  Json report{{"manifest", to_json(manifest(g, "energy", files, {{"k", k}, {"kind", kind}}))},
              {"sizes", cross ? Json::array({a.size(), b.size()}) : Json::array({a.size()})},
              {"energies", energies},
              {"rep", reps}};
  if (!cross && k >= 1) report["sigma_k"] = {{"k", k}, {"value", to_string(sigma_k(a, k))}};
  if (!rep_csv.empty()) {
    std::ostringstream os;
    write_rep_csv(os, rep_function(a, b, SetOp::diff));
    write_text_file(rep_csv, os.str());
  }
  emit(out, dump(report));
}

// ---------------------------------------------------------------- estimate

struct EstimateCmd {
  std::string file, quantity = "q", kind = "add", out;
  FamilyFlags family;
  SlackFlags slack;
  std::string cover_q, cover_r, cover_t = "1";

  CLI::App* attach(CLI::App* app) {
    auto* cmd = app->add_subcommand("estimate", "certified interval for q, D, d or d*");
    cmd->add_option("file", file, "set file")->required();
    cmd->add_option("--quantity", quantity, "q, D, d or dstar")->capture_default_str()
        ->check(CLI::IsMember({"q", "D", "d", "dstar"}));
    cmd->add_option("--kind", kind, "add or mult")->capture_default_str();
    family.attach(cmd);
    slack.attach(cmd, Slack{1, 2});
    cmd->add_option("--cover-Q", cover_q, "extra Sym cover witness for d: Q set file");
    cmd->add_option("--cover-R", cover_r, "extra Sym cover witness for d: R set file");
    cmd->add_option("--cover-t", cover_t, "threshold t of the extra cover")->capture_default_str();
    cmd->add_option("-o,--out", out, "report path (default stdout)");
    return cmd;
  }

  void run() {
    const Globals& g = *g_globals;
    const Kind kd = parse_kind(kind);
    const FiniteRealSet a = read_set_file(file);
    const FamilyConfig fc = family.get(g.seed);
    Json config{{"quantity", quantity}, {"family", to_json(fc)}};
    std::vector<std::string> inputs{file};
    Json body;
    if (quantity == "q" || quantity == "D") {
      const CandidateFamily fam = candidate_family(a, fc);
      if (quantity == "D") config["slack"] = to_json(slack.get());
      const CertifiedInterval iv = quantity == "q" ? q_interval(a, fam, kd) : d_sandwich(a, fam, kd, slack.get());
      body = to_json(iv, g.seed, config);
    } else if (quantity == "d") {
      // d⁺ is bounded by multiplicative Sym covers and d× by additive ones.
      const Kind cover_kind = kd == Kind::additive ? Kind::multiplicative : Kind::additive;
      std::vector<SymCoverWitness> ws = universal_witnesses(a, cover_kind);
      std::vector<std::string> tags{"singleton", "full"};
      if (!cover_q.empty() || !cover_r.empty()) {
        if (cover_q.empty() || cover_r.empty()) throw InvalidInput("--cover-Q and --cover-R go together");
        ws.push_back({read_set_file(cover_q), read_set_file(cover_r), parse_rational(cover_t), cover_kind});
        tags.push_back("user");
        inputs.push_back(cover_q);
        inputs.push_back(cover_r);
        config["cover_t"] = cover_t;
      }
      std::optional<Rational> best;
      std::string witness;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const Rational v = d_cover_upper(a, ws[i]);
        if (!best || v < *best) {
          best = v;
          witness = tags[i];
        }
      }
      body = Json{{"quantity", "d"}, {"kind", to_string(kd)}, {"upper", to_string(*best)},
                  {"witness", witness}, {"seed", g.seed},    {"config", config}};
    } else {
      const DStar d = d_star(a, candidate_family(a, fc), kd);
      body = Json{{"quantity", "dstar"}, {"kind", to_string(kd)}, {"upper", to_string(d.value)},
                  {"witness", d.witness},  {"seed", g.seed},    {"config", config}};
    }
    Json report{{"manifest", to_json(manifest(g, "estimate", inputs, config))}, {"interval", body}};
    emit(out, dump(report));
  }
};

// ---------------------------------------------------------------- decompose

struct DecomposeCmd {
  std::string file, M = "auto", out_dir = ".", shift, mode = "mult_shift", round_constant = "8";
  std::vector<std::string> tau;
  std::size_t max_rounds = 0;
  FamilyFlags family;
  SlackFlags slack;

  CLI::App* attach(CLI::App* app) {
    auto* cmd = app->add_subcommand("decompose", "split A = B u C and certify the energy bounds");
    cmd->add_option("file", file, "set file")->required();
    cmd->add_option("-M", M, "stop-test parameter: auto (|A|^(2/5)) or a rational")->capture_default_str();
    cmd->add_option("--tau", tau, "threshold grid (default dyadic 1, 2, 4, ...)");
    cmd->add_option("--round-constant", round_constant, "round guard constant")->capture_default_str();
    cmd->add_option("--max-rounds", max_rounds, "explicit round guard (0: derived)")->capture_default_str();
    cmd->add_option("--shift", shift, "alpha for a shifted frame");
    cmd->add_option("--mode", mode, "mult_shift or add_scale (with --shift)")->capture_default_str()
        ->check(CLI::IsMember({"mult_shift", "add_scale"}));
    family.attach(cmd);
    slack.attach(cmd, Slack{100, 3});
    cmd->add_option("--out-dir", out_dir, "directory for B.set, C.set, trace.json, cert.csv")->capture_default_str();
    return cmd;
  }

  void write_outputs(const DecompositionTrace& t, const Json& config) const {
    const Globals& g = *g_globals;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_set_file((dir / "B.set").string(), t.B, "B of " + file);
    write_set_file((dir / "C.set").string(), t.C, "C of " + file);
    Json trace{{"manifest", to_json(manifest(g, "decompose", {file}, config))}, {"trace", to_json(t)}};
    write_text_file((dir / "trace.json").string(), dump(trace));
    write_text_file((dir / "cert.csv").string(), certificate_csv(t.certificate));
  }

  void run() {
    const Globals& g = *g_globals;
    SplitConfig cfg;
    if (M != "auto") cfg.M = parse_rational(M);
    for (const auto& t : tau) cfg.tau_grid.push_back(parse_rational(t));
    cfg.family = family.get(g.seed);
    cfg.round_constant = parse_rational(round_constant);
    cfg.max_rounds = max_rounds;
    cfg.slack = slack.get();
    Json config = to_json(cfg);
    if (!shift.empty()) {
      config["shift"] = shift;
      config["mode"] = mode;
    }
    const FiniteRealSet a = read_set_file(file);
    DecompositionTrace t;
    try {
      t = shift.empty() ? balog_wooley_split(a, cfg)
                        : shifted_split(a, parse_rational(shift),
                                        mode == "add_scale" ? ShiftMode::add_scale : ShiftMode::mult_shift, cfg);
    } catch (const SplitAborted& e) {
      write_outputs(e.partial(), config);
      throw;
    }
    write_outputs(t, config);
    std::printf("|A|=%zu |B|=%zu |C|=%zu rounds=%zu certificate=%s\n", a.size(), t.B.size(), t.C.size(),
                t.rounds.size(), t.certificate.all_hold() ? "holds" : "fails");
  }
};

// ---------------------------------------------------------------- construct / scan

struct ConstructCmd {
  std::size_t N = 0, K = 0;
  std::string out_dir = ".";
  bool audit = false;
  std::string audit_constant = "50";

  CLI::App* attach(CLI::App* app) {
    auto* cmd = app->add_subcommand("construct", "build the P*G set for a given N");
    cmd->add_option("--N", N, "target size")->required()->check(CLI::Range(std::size_t{4}, std::size_t{1} << 40));
    cmd->add_option("--K", K, "override K (default smallest K with K^4 >= N)");
    cmd->add_flag("--audit", audit, "also audit |A^2*Delta(A)| against C(N^2+N^3/K)log2^2 N");
    cmd->add_option("--audit-constant", audit_constant, "C of the audit")->capture_default_str();
    cmd->add_option("--out-dir", out_dir, "directory for A.set and manifest.json")->capture_default_str();
    return cmd;
  }

  void run() {
    const Globals& g = *g_globals;
    const PGConstruction c = K ? pg_set(N, K) : pg_set(N);
    Json config{{"N", N}, {"K", K ? Json(K) : Json("auto")}};
    if (audit) config["audit_constant"] = audit_constant;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_set_file((dir / "A.set").string(), c.A,
                   "P*G with N=" + std::to_string(c.N) + " K=" + std::to_string(c.K) + " t=" + std::to_string(c.t));
    Json report{{"manifest", to_json(manifest(g, "construct", {}, config))}, {"construction", to_json(c)}};
    if (audit) report["audit"] = to_json(mult_doubling_audit(c, parse_rational(audit_constant)));
    write_text_file((dir / "manifest.json").string(), dump(report));
    std::printf("|A|=%zu K=%zu t=%zu\n", c.A.size(), c.K, c.t);
  }
};

struct ScanCmd {
  std::vector<std::size_t> ns{64, 128, 256, 512, 1024};
  std::string sampler = "full", out, json_out;

  CLI::App* attach(CLI::App* app) {
    auto* cmd = app->add_subcommand("scan", "E3 exponent scan over P*G sets");
    cmd->add_option("--N", ns, "increasing list of N")->capture_default_str();
    cmd->add_option("--sampler", sampler, "full, random_half or adversarial_half")->capture_default_str();
    cmd->add_option("-o,--out", out, "CSV path (default stdout)");
    cmd->add_option("--json", json_out, "also write the scan with its manifest as JSON");
    return cmd;
  }

  void run() {
    const Globals& g = *g_globals;
    const ScanResult r = exponent_scan(ns, parse_sampler(sampler), g.seed);
    emit(out, scan_csv(r));
    if (!json_out.empty()) {
      Json config{{"N", ns}, {"sampler", sampler}};
      write_text_file(json_out, dump(Json{{"manifest", to_json(manifest(g, "scan", {}, config))}, {"scan", to_json(r)}}));
    }
  }
};

// ---------------------------------------------------------------- ratio / verify

struct RatioCmd {
  std::string file, out, out_dir;
  FamilyFlags family;

  CLI::App* attach(CLI::App* app) {
    auto* cmd = app->add_subcommand("ratio", "split the ratio set R[A] into R' and R''");
    cmd->add_option("file", file, "set file, |A| >= 3")->required();
    family.attach(cmd);
    cmd->add_option("-o,--out", out, "report path (default stdout)");
    cmd->add_option("--out-dir", out_dir, "also write R.set, R1.set, R2.set here");
    return cmd;
  }

  void run() {
    const Globals& g = *g_globals;
    SplitConfig cfg;
    cfg.family = family.get(g.seed);
    const FiniteRealSet a = read_set_file(file);
    const RatioSplit r = ratio_split(a, cfg);
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      const fs::path dir(out_dir);
      write_set_file((dir / "R.set").string(), r.R, "R[A] of " + file);
      write_set_file((dir / "R1.set").string(), r.R1, "multiplicatively structured part");
      write_set_file((dir / "R2.set").string(), r.R2, "additively structured part");
    }
    emit(out, dump(Json{{"manifest", to_json(manifest(g, "ratio", {file}, to_json(cfg)))}, {"ratio", to_json(r)}}));
  }
};

struct VerifyCmd {
  std::vector<std::string> suites;
  bool all = false;
  std::size_t samples = 0;
  bool sticky_failure = false;

  CLI::App* attach(CLI::App* app) {
    auto* cmd = app->add_subcommand("verify", "run the property suites");
    auto* s = cmd->add_option("--suite", suites, "suite name (repeatable)")->check(CLI::IsMember(suite_names()));
    auto* a = cmd->add_flag("--all", all, "run every suite");
    s->excludes(a);
    cmd->add_option("--samples", samples, "random cases for the identity and inequality suites");
    return cmd;
  }

  void run() {
    const Globals& g = *g_globals;
    VerifyOptions opt;
    opt.seed = g.seed;
    if (samples) opt.set_samples = samples;
    const std::vector<std::string> names = all || suites.empty() ? suite_names() : suites;
    std::size_t passed = 0;
    for (const auto& name : names) {
      const SuiteResult r = run_suite(name, opt);
      passed += r.passed();
      std::printf("%-15s %s checks=%zu failures=%zu", name.c_str(), r.passed() ? "pass" : "FAIL", r.checks, r.failures);
      if (g.record_time) std::printf(" time=%.2fs", r.total_seconds);
      std::printf("\n");
      for (const auto& w : r.witnesses) std::printf("  witness: %s\n", w.c_str());
      std::fflush(stdout);
    }
    std::printf("%zu/%zu suites passed\n", passed, names.size());
    sticky_failure = passed != names.size();
  }
};

}  // namespace

int main(int argc, char** argv) {
  Globals globals;
  g_globals = &globals;

  CLI::App app{"Exact energies, norms, estimates, decompositions and constructions for finite sets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", globals.threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", globals.seed, "seed for every random choice")->capture_default_str();
  app.add_flag("--record-time", globals.record_time, "record wall-clock time in manifests");

  EnergyCmd energy;
  EstimateCmd estimate;
  DecomposeCmd decompose;
  ConstructCmd construct;
  ScanCmd scan;
  RatioCmd ratio;
  VerifyCmd verify;
  const std::vector<std::pair<CLI::App*, std::function<void()>>> commands{
      {energy.attach(&app), [&] { energy.run(); }},       {estimate.attach(&app), [&] { estimate.run(); }},
      {decompose.attach(&app), [&] { decompose.run(); }}, {construct.attach(&app), [&] { construct.run(); }},
      {scan.attach(&app), [&] { scan.run(); }},           {ratio.attach(&app), [&] { ratio.run(); }},
      {verify.attach(&app), [&] { verify.run(); }}};

  try {
    load_limits_from_env();
    app.parse(argc, argv);
    set_thread_count(globals.threads);
    for (const auto& [cmd, run] : commands)
      if (cmd->parsed()) run();
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  } catch (const ResourceLimit& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return kExitResource;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return verify.sticky_failure ? kExitFailure : 0;
}
