#pragma once

// JSON views of library results. nlohmann::json keeps object keys sorted and
// prints doubles in shortest round-trip form, so parsing a report gives back
// the same bits. Big integers are emitted as decimal strings.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"

#include "complexity.hpp"
#include "discrepancy.hpp"
#include "point_set.hpp"
#include "witness.hpp"

namespace stardisc {

using Json = nlohmann::json;

inline Json to_json(const AnchoredBox& box) { return box.upper(); }

inline Json to_json(const BigInt& x) { return x.str(); }

inline Json to_json(const LocalDiscrepancy& ld) {
  return {{"value", ld.value}, {"side", to_string(ld.side)}, {"box", to_json(ld.box)}};
}

inline Json to_json(const DiscrepancyResult& r) {
  return {{"value", r.value}, {"side", to_string(r.side)}, {"witness", to_json(r.witness)}};
}

inline Json to_json(const KappaPartition& p) {
  return {{"kappa", p.kappa},
          {"p0", p.p0.size()},
          {"p1", p.p1.size()},
          {"p2", p.p2.size()},
          {"c_set", p.c_set}};
}

inline Json to_json(const Case3Trace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"dim", s.dim},
                     {"m", s.size()},
                     {"remaining_before", s.remaining_before},
                     {"removed", s.removed}});
  return {{"M", t.m_big}, {"k", t.k}, {"q", t.q}, {"c_k", t.c_k}, {"steps", steps}};
}

inline Json to_json(const WitnessCertificate& c) {
  Json boxes = Json::array();
  for (const auto& b : c.boxes) boxes.push_back(to_json(b));
  Json j = {{"case", to_string(c.case_label)},
            {"boxes", boxes},
            {"best", to_json(c.best)},
            {"side", to_string(c.side)},
            {"measured", c.measured},
            {"guaranteed", c.guaranteed},
            {"guarantee_valid", c.guarantee_valid},
            {"margin", c.measured - c.guaranteed}};
  if (c.partition) j["partition"] = to_json(*c.partition);
  if (c.trace) j["case3_trace"] = to_json(*c.trace);
  return j;
}

inline Json to_json(const MinimumReport& r, bool two_variables) {
  Json j = {{"minimum", r.minimum},
            {"at_q", r.at_q},
            {"threshold", r.threshold},
            {"verified", r.verified}};
  if (two_variables) j["at_x"] = r.at_x;
  return j;
}

inline Json to_json(const BoundsTable& t) {
  return {{"n", t.n},
          {"d", t.d},
          {"r", t.r},
          {"sauer", to_json(t.sauer)},
          {"n_rec", to_json(t.n_rec)},
          {"hat_n", to_json(t.hat_n)},
          {"claim", to_json(t.claim)},
          {"nbound_real", t.nbound_real},
          {"binom_bound_real", t.binom_bound_real},
          {"thm2_bound", t.thm2_bound},
          {"epsilon", t.epsilon},
          {"packing_ok", t.packing_ok}};
}

inline Json to_json(const ShatterReport& r) {
  return {{"count", to_json(r.count)},
          {"includes_empty", r.includes_empty},
          {"sauer_shelah_bound", to_json(r.sauer_shelah_bound)},
          {"max_boundary", r.max_boundary},
          {"max_boundary_box", to_json(r.max_boundary_box)}};
}

inline std::string hex_digest(std::uint64_t h) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline Json make_report(const std::string& command, const std::string& digest, Json parameters,
                        Json results, double seconds) {
  return {{"command", command},
          {"input_digest", digest},
          {"parameters", std::move(parameters)},
          {"results", std::move(results)},
          {"timing", {{"seconds", seconds}}}};
}

}  // namespace stardisc
