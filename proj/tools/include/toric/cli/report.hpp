#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "toric/certificates.hpp"
#include "toric/cremona.hpp"
#include "toric/obstructions.hpp"
#include "toric/rational.hpp"
#include "toric/torus_map.hpp"

namespace toric::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Provenance {
  std::string version;
  std::optional<std::uint64_t> seed;
  Json tolerances = Json::object();
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  Provenance provenance;
  std::optional<double> timing_ms;  // only with --timing, so reports stay byte-identical

  Json to_json() const;
  static Report from_json(const Json& j);
};

// Rationals are always "p/q" strings.
Json to_json(const Rational& q);
// {"exact": "p/q", "value": x} or {"value": x, "error_bar": e}.
Json to_json(const Quantity& q);
Json to_json(const WeightSeq& w);
Json to_json(const PackingResult& r);
Json to_json(const EmbeddingCertificate& c);
Json to_json(const DeltaEllBound& d);
Json to_json(const Verdict& v);
Json to_json(const torus::SpherePoint& p);
Json to_json(const torus::SpherePair& p);
Json to_json(const torus::C2Point& p);
Json to_json(const torus::Tolerances& t);

}  // namespace toric::cli
