#include "addcomb/report.hpp"

#include <sstream>

namespace addcomb {

namespace {

Json q(const Rational& x) { return to_string(x); }
Json z(const BigInt& x) { return to_string(x); }

Json bound_json(const BoundRow& r) {
  return Json{{"name", r.name},
              {"value", z(r.value)},
              {"bound", r.bound},
              {"bound_value", r.check.bound_decimal},
              {"verdict", to_string(r.check.verdict)},
              {"ratio", r.check.ratio_decimal}};
}

Json interval_body(const CertifiedInterval& iv) {
  return Json{{"quantity", iv.quantity},
              {"kind", to_string(iv.kind)},
              {"lower", q(iv.lower)},
              {"upper", q(iv.upper)},
              {"witness", {{"lower", iv.lower_witness}, {"upper", to_string(iv.upper_source)}}},
              {"heuristic_lower", iv.heuristic_lower}};
}

}  // namespace

Json to_json(const RunManifest& m) {
  Json inputs = Json::array();
  for (const auto& [path, digest] : m.inputs) inputs.push_back({{"path", path}, {"fnv1a64", digest}});
  Json j{{"command", m.command}, {"inputs", inputs}, {"seed", m.seed}, {"config", m.config}, {"version", kToolVersion}};
  if (m.wall_clock_seconds) j["wall_clock_seconds"] = *m.wall_clock_seconds;
  return j;
}

Json to_json(const FiniteRealSet& a) {
  Json j = Json::array();
  for (const auto& x : a) j.push_back(to_string(x));
  return j;
}

Json to_json(const Slack& s) { return Json{{"C", q(s.C)}, {"c", s.c}}; }

Json to_json(const FamilyConfig& f) {
  return Json{{"translates", f.translates},
              {"popular", f.popular},
              {"dyadic_blocks", f.dyadic_blocks},
              {"random_subsets", f.random_subsets},
              {"seed", f.seed}};
}

Json to_json(const SplitConfig& c) {
  Json grid = Json::array();
  for (const auto& t : c.tau_grid) grid.push_back(q(t));
  return Json{{"M", c.M ? Json(q(*c.M)) : Json("auto")},
              {"tau_grid", c.tau_grid.empty() ? Json("dyadic") : grid},
              {"family", to_json(c.family)},
              {"round_constant", q(c.round_constant)},
              {"max_rounds", c.max_rounds},
              {"slack", to_json(c.slack)}};
}

Json to_json(const CertifiedInterval& iv, std::uint64_t seed, const Json& config) {
  Json j = interval_body(iv);
  j["seed"] = seed;
  j["config"] = config;
  return j;
}

Json to_json(const SplitCertificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) rows.push_back(bound_json(r));
  Json j{{"rows", rows}, {"all_hold", c.all_hold()}};
  if (c.q_B) j["q_B"] = interval_body(*c.q_B);
  if (c.q_C) j["q_C"] = interval_body(*c.q_C);
  return j;
}

Json to_json(const DecompositionTrace& t) {
  Json rounds = Json::array();
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const auto& r = t.rounds[i];
    rounds.push_back({{"round", i + 1},
                      {"C_size", r.C.size()},
                      {"witness",
                       {{"kind", to_string(r.witness.kind)},
                        {"G", r.witness.G_tag},
                        {"G_size", r.witness.G.size()},
                        {"tau", q(r.witness.tau)},
                        {"S_tau_size", r.witness.S_tau.size()},
                        {"score", q(r.witness.score)}}},
                      {"q", q(r.extraction.q)},
                      {"dyadic_class", r.extraction.cls},
                      {"nonempty_classes", r.extraction.nonempty_classes},
                      {"count_total", z(r.extraction.total)},
                      {"D", to_json(r.extraction.piece)},
                      {"piece_size_ok", r.piece_size_ok},
                      {"cover_bound", q(r.cover_bound)},
                      {"d_estimate", q(r.d_estimate)},
                      {"d_class", r.d_class}});
  }
  Json hist = Json::object();
  for (const auto& [cls, n] : t.d_class_histogram) hist[std::to_string(cls)] = n;
  return Json{{"frame", t.frame},
              {"witness_kind", to_string(t.witness_kind)},
              {"M", t.M},
              {"round_limit", t.round_limit},
              {"rounds", rounds},
              {"B", to_json(t.B)},
              {"C", to_json(t.C)},
              {"forced", to_json(t.forced)},
              {"d_class_histogram", hist},
              {"certificate", to_json(t.certificate)}};
}

Json to_json(const RatioSplit& r) {
  return Json{{"R_size", r.R.size()},
              {"R1", to_json(r.R1)},
              {"R2", to_json(r.R2)},
              {"reflection_ok", r.reflection_ok},
              {"inversion_ok", r.inversion_ok},
              {"sizes_ok", r.sizes_ok},
              {"E_R1", bound_json(r.e_R1)},
              {"E_R2", bound_json(r.e_R2)},
              {"mult_split", to_json(r.mult)},
              {"add_split", to_json(r.add)}};
}

Json to_json(const DDReport& d) {
  return Json{{"size", q(d.size)},
              {"d_plus_star", {{"value", q(d.d_plus.value)}, {"witness", d.d_plus.witness}}},
              {"d_times_star", {{"value", q(d.d_times.value)}, {"witness", d.d_times.witness}}},
              {"bound", d.bound_decimal},
              {"holds", d.holds}};
}

Json to_json(const GenSigmaReport& g) {
  return Json{{"kind", to_string(g.kind)}, {"q_upper", q(g.q_upper)}, {"E2", z(g.e2)},           {"E3", z(g.e3)},
              {"E2_ratio", g.e2_ratio},    {"E3_ratio", g.e3_ratio},  {"certified", g.certified}};
}

Json to_json(const PGConstruction& c) {
  Json primes = Json::array();
  for (auto p : c.P) primes.push_back(p);
  return Json{{"N", c.N}, {"K", c.K}, {"t", c.t}, {"size", c.A.size()}, {"P", primes}, {"G", to_json(c.G)}};
}

Json to_json(const DoublingAudit& a) {
  return Json{{"value", z(a.value)},
              {"product_set_size", z(a.product_set_size)},
              {"bound", a.check.bound_decimal},
              {"ratio", a.check.ratio_decimal},
              {"verdict", to_string(a.check.verdict)}};
}

Json to_json(const ScanResult& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"N", r.N},
                    {"K", r.K},
                    {"size_A", r.size_A},
                    {"size_B", r.size_B},
                    {"E3_add", z(r.e3_add)},
                    {"E3_mult", z(r.e3_mult)},
                    {"mult_doubling", z(r.mult_doubling)},
                    {"fiber_sum_E3", z(r.fiber_sum_e3)},
                    {"fiber_ok", r.fiber_ok},
                    {"B_doubling", z(r.b_doubling)},
                    {"E3_CS_ok", r.e3_cs_ok}});
  return Json{{"sampler", to_string(s.sampler)},
              {"seed", s.seed},
              {"rows", rows},
              {"slope_add", s.slope_add},
              {"slope_mult", s.slope_mult}};
}

Json to_json(const MultinomialResult& m) {
  Json lhs = Json::array(), rhs = Json::array();
  for (const auto& v : m.lhs) lhs.push_back(z(v));
  for (const auto& v : m.rhs) rhs.push_back(z(v));
  Json j{{"holds", m.holds}, {"lhs", lhs}, {"rhs", rhs}};
  if (m.failing_n) j["failing_n"] = *m.failing_n;
  return j;
}

std::string certificate_csv(const SplitCertificate& c) {
  std::ostringstream os;
  os << "name,value,bound,bound_value,verdict,ratio\n";
  for (const auto& r : c.rows)
    os << r.name << ',' << to_string(r.value) << ',' << r.bound << ',' << r.check.bound_decimal << ','
       << to_string(r.check.verdict) << ',' << r.check.ratio_decimal << '\n';
  return os.str();
}

std::string scan_csv(const ScanResult& s) {
  std::ostringstream os;
  os << "N,K,size_A,size_B,E3_add,E3_mult,mult_doubling,fiber_sum_E3,fiber_ok,B_doubling,E3_CS_ok\n";
  for (const auto& r : s.rows)
    os << r.N << ',' << r.K << ',' << r.size_A << ',' << r.size_B << ',' << to_string(r.e3_add) << ','
       << to_string(r.e3_mult) << ',' << to_string(r.mult_doubling) << ',' << to_string(r.fiber_sum_e3) << ','
       << (r.fiber_ok ? 1 : 0) << ',' << to_string(r.b_doubling) << ',' << (r.e3_cs_ok ? 1 : 0) << '\n';
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace addcomb
