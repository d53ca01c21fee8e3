#pragma once

// Wire formats. All numeric output is locale-independent with '.' decimal
// separator; display rounding is round-half-even at the requested digit
// count. Output is deterministic: fixed key order, no timestamps.

#include <sstream>
#include <string>

#include <json.hpp>

#include "sgspec/gaps.hpp"
#include "sgspec/oracle.hpp"

namespace sgspec {

using ordered_json = nlohmann::ordered_json;

// CSV columns: level,bc,index,value,seed,birth,word (1-based index).
inline std::string spectrum_csv(const FiniteSpectrum& s, int digits = 20) {
  std::ostringstream os;
  os << "level,bc,index,value,seed,birth,word\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& e = s.at(i);
    os << s.level() << ',' << bc_name(s.bc()) << ',' << i + 1 << ','
       << decimal_string(e.value.mid(), digits) << ',' << e.descriptor.seed << ','
       << e.descriptor.birth << ',' << e.descriptor.word.str() << '\n';
  }
  return os.str();
}

inline ordered_json descriptor_json(const EigenDescriptor& d) {
  return ordered_json{{"seed", d.seed}, {"birth", d.birth}, {"word", d.word.str()}};
}

inline ordered_json spectrum_json(const FiniteSpectrum& s, int digits = 20) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& e = s.at(i);
    ordered_json row = descriptor_json(e.descriptor);
    row["level"] = s.level();
    row["bc"] = bc_name(s.bc());
    row["index"] = i + 1;
    row["value"] = decimal_string(e.value.mid(), digits);
    row["radius"] = radius_string(e.value.rad());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ordered_json ball_json(const std::string& name, const Ball& b, mpfr_prec_t precision,
                              const Ball& tol, int digits = 30) {
  return ordered_json{{"name", name},
                      {"midpoint", decimal_string(b.mid(), digits)},
                      {"radius", radius_string(b.rad())},
                      {"precision_bits", precision},
                      {"tolerance", decimal_string(tol.mid(), 6)}};
}

inline ordered_json constants_json(mpfr_prec_t precision = Ball::kDefaultPrecision,
                                   const Ball& tol = default_limit_tolerance()) {
  auto s = constant_set(precision, tol);
  auto [r1, r2] = gap_ratios(precision, tol);
  ordered_json constants = ordered_json::array();
  constants.push_back(ball_json("lambda0_2", s->lambda0_2, precision, tol));
  constants.push_back(ball_json("lambda0_5", s->lambda0_5, precision, tol));
  constants.push_back(ball_json("lambda1_5", s->lambda1_5, precision, tol));
  constants.push_back(ball_json("lambda6", s->lambda6, precision, tol));
  ordered_json out;
  out["precision_bits"] = precision;
  out["tolerance"] = decimal_string(tol.mid(), 6);
  out["constants"] = std::move(constants);
  out["ratios"] = ordered_json{{"r1", ball_json("r1", r1, precision, tol, 12)},
                               {"r2", ball_json("r2", r2, precision, tol, 12)}};
  Ball two(2, precision);
  out["orderings"] =
      ordered_json{{"lambda0_2 < lambda0_5", certified_less(s->lambda0_2, s->lambda0_5)},
                   {"lambda0_5 < lambda6", certified_less(s->lambda0_5, s->lambda6)},
                   {"r1 > 2", certified_less(two, r1)}};
  out["differences"] = ordered_json{
      {"lambda0_5 - lambda0_2",
       ball_json("lambda0_5 - lambda0_2", sub(s->lambda0_5, s->lambda0_2), precision, tol)}};
  return out;
}

// One JSON line per report: claim_id, params, status, witness, margin, precision.
inline std::string report_jsonl(const GapReport& r) {
  ordered_json j;
  j["claim_id"] = r.claim_id;
  ordered_json params;
  for (const auto& [key, value] : r.params) {
    if (key == "bc") {
      params[key] = value == 0 ? "dirichlet" : "neumann";
    } else {
      params[key] = value;
    }
  }
  j["params"] = std::move(params);
  j["status"] = verify_status_name(r.status);
  if (r.witness) {
    j["witness"] = ordered_json{{"lower", descriptor_json(r.witness->first)},
                                {"upper", descriptor_json(r.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  if (r.margin) {
    j["margin_midpoint"] = decimal_string(r.margin->mid(), 20);
    j["margin_radius"] = radius_string(r.margin->rad());
  } else {
    j["margin_midpoint"] = nullptr;
    j["margin_radius"] = nullptr;
  }
  j["precision_bits"] = r.precision_bits;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

// Table 1 as CSV: half-even 4-decimal rounding next to the raw enclosure
// midpoint; the fourth row's discrepancy is flagged in a leading comment.
inline std::string table1_csv(mpfr_prec_t precision = Ball::kDefaultPrecision) {
  std::vector<Table1Row> rows = table1(precision);
  std::ostringstream os;
  os << "# gap 4 note: computed difference is of order 1e-7; the reference table prints"
     << " 7.9131, consistent with units of 1e-7\n";
  os << "gap_index,difference_4dp,difference_raw\n";
  for (const auto& row : rows) {
    os << row.gap_index << ',' << fixed_string(row.difference.mid(), 4) << ','
       << decimal_string(row.difference.mid(), 20) << '\n';
  }
  return os.str();
}

inline ordered_json cross_check_json(const CrossCheckReport& r) {
  ordered_json rows = ordered_json::array();
  char buf[32];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (const auto& row : r.rows) {
    rows.push_back(ordered_json{{"decimation_value", fmt(row.decimation_value)},
                                {"oracle_value", fmt(row.oracle_value)},
                                {"multiplicity", row.multiplicity},
                                {"distance", fmt(row.distance)}});
  }
  return ordered_json{{"level", r.level},          {"bc", bc_name(r.bc)},
                      {"tolerance", fmt(r.tolerance)}, {"hausdorff", fmt(r.hausdorff)},
                      {"match", r.match},          {"values", std::move(rows)}};
}

}  // namespace sgspec
