#include "gpsw/report_json.hpp"

namespace gpsw {

nlohmann::ordered_json to_json(const VerificationReport& r, bool stable) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["b"] = r.b;
  j["m"] = r.m;
  j["L"] = r.length;
  if (r.level) j["n"] = *r.level;
  j["predicted"] = r.predicted;
  j["observed"] = r.observed;
  j["verdict"] = to_string(r.verdict);
  if (r.witness_index) j["witness_index"] = *r.witness_index;
  if (r.witness_factor) j["witness_factor"] = *r.witness_factor;
  j["scope"] = r.scope;
  if (!stable) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports, bool stable) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : reports) out.push_back(to_json(r, stable));
  return out;
}

nlohmann::ordered_json to_json(const InferenceResult& r) {
  nlohmann::ordered_json j;
  j["max_coverage"] = r.max_coverage;
  j["chain_count"] = r.chain_count;
  j["truncated"] = r.truncated;
  auto chains = nlohmann::ordered_json::array();
  for (const auto& chain : r.chains) {
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : chain) {
      steps.push_back({{"length", s.length}, {"antimorphism", antimorphism_name(s.antimorphism)}, {"letter", s.letter}});
    }
    chains.push_back(std::move(steps));
  }
  j["chains"] = std::move(chains);
  return j;
}

nlohmann::ordered_json to_json(const PalindromeCensus& c) {
  nlohmann::ordered_json j;
  j["length"] = c.length;
  auto per = nlohmann::ordered_json::object();
  for (const auto& [g, count] : c.per_antimorphism) per[g.to_string()] = count;
  j["pseudopalindromes"] = std::move(per);
  j["palindromes"] = c.palindromes;
  j["defect"] = c.defect;
  return j;
}

nlohmann::ordered_json to_json(const std::optional<Overlap>& o) {
  if (!o) return nullptr;
  return {{"position", o->position}, {"x", o->x}, {"v", format_word(o->v)}, {"length", o->length()}};
}

}  // namespace gpsw
