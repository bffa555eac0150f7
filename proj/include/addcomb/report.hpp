#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addcomb/constructions.hpp"
#include "addcomb/decomposition.hpp"
#include "addcomb/estimates.hpp"

namespace addcomb {

/// Key order follows insertion so emitted reports are stable and readable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
  std::string command;
  /// (path, digest)
  std::vector<std::pair<std::string, std::string>> inputs;
  std::uint64_t seed = 0;
  Json config = Json::object();
  /// Only recorded on request; leaving it out keeps reruns byte-identical.
  std::optional<double> wall_clock_seconds;
};

Json to_json(const RunManifest& m);
Json to_json(const FiniteRealSet& a);

Json to_json(const Slack& s);
Json to_json(const FamilyConfig& f);
Json to_json(const SplitConfig& c);

/// {quantity, kind, lower, upper, witness, seed, config}
Json to_json(const CertifiedInterval& iv, std::uint64_t seed, const Json& config);
Json to_json(const SplitCertificate& c);
Json to_json(const DecompositionTrace& t);
Json to_json(const RatioSplit& r);
Json to_json(const DDReport& d);
Json to_json(const GenSigmaReport& g);
Json to_json(const PGConstruction& c);
Json to_json(const DoublingAudit& a);
Json to_json(const ScanResult& s);
Json to_json(const MultinomialResult& m);

/// name,value,bound,verdict,ratio
std::string certificate_csv(const SplitCertificate& c);
/// One row per N, integers as decimal strings.
std::string scan_csv(const ScanResult& s);

/// dump(2) plus a trailing newline.
std::string dump(const Json& j);


}  // namespace addcomb
