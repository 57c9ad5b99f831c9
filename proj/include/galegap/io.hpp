#pragma once

// Instance files and report rendering. An instance is a line-based key/value
// document; '#' starts a comment:
//
//   u = 0
//   v = 0
//   beta.prefix = [1]
//   beta.tail = (0, 0, 0)
//   b1 = 1
//   b2 = 0
//
// All numbers are exact rationals ("p/q" or "p", optional leading '-') and
// round-trip bit-exactly. JSON reports carry numbers as strings for the same
// reason. Report field order is fixed so byte-level diffs are meaningful.

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "galegap/gale.hpp"
#include "galegap/lp_oracle.hpp"
#include "galegap/tailseq.hpp"

namespace galegap {

struct Instance {
  CostSpec cost;
  Rhs rhs;
};

inline Instance load_instance(std::istream& in) {
  std::map<std::string, std::pair<std::string, std::size_t>> fields;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string_view sv = detail::trim(line);
    if (sv.empty()) continue;
    const std::size_t eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'key = value'", line_no);
    const std::string key{detail::trim(sv.substr(0, eq))};
    const std::string value{detail::trim(sv.substr(eq + 1))};
    static const char* known[] = {"u", "v", "beta.prefix", "beta.tail", "b1", "b2"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw ParseError("unknown key '" + key + "'", line_no);
    if (!fields.emplace(key, std::make_pair(value, line_no)).second)
      throw ParseError("duplicate key '" + key + "'", line_no);
  }
  auto get = [&](const char* key) -> const std::pair<std::string, std::size_t>& {
    auto it = fields.find(key);
    if (it == fields.end())
      throw ParseError(std::string("missing key '") + key + "'");
    return it->second;
  };
  auto ratio_at = [&](const char* key) {
    const auto& [text, at] = get(key);
    try {
      return Ratio::parse(text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), at);
    }
  };
  const auto& [prefix_text, prefix_at] = get("beta.prefix");
  const auto& [tail_text, tail_at] = get("beta.tail");
  std::vector<Ratio> prefix;
  std::vector<Ratio> tail;
  try {
    prefix = detail::parse_ratio_list(prefix_text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), prefix_at);
  }
  try {
    tail = detail::parse_ratio_tuple(tail_text, 3);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), tail_at);
  }
  CostSpec cost(ratio_at("u"), ratio_at("v"),
                TailSeq(std::move(prefix), TailRule{tail[0], tail[1], tail[2]}));
  return Instance{std::move(cost), Rhs{ratio_at("b1"), ratio_at("b2")}};
}

inline Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  return load_instance(in);
}

enum class Format { json, csv, pretty };

inline Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "pretty") return Format::pretty;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

namespace detail {

// Ordered key/value document; the single rendering core behind all three
// output formats.
class Report {
 public:
  void add(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, const XReal& x) { add(std::move(key), x.str()); }
  void add(std::string key, const Ratio& r) { add(std::move(key), r.str()); }

  std::string render(Format fmt) const {
    std::ostringstream os;
    switch (fmt) {
      case Format::csv: {
        for (std::size_t i = 0; i < rows_.size(); ++i)
          os << (i ? "," : "") << rows_[i].first;
        os << "\n";
        for (std::size_t i = 0; i < rows_.size(); ++i)
          os << (i ? "," : "") << rows_[i].second;
        os << "\n";
        break;
      }
      case Format::json: {
        nlohmann::ordered_json j;
        for (const auto& [k, v] : rows_) j[k] = v;
        os << j.dump(2) << "\n";
        break;
      }
      case Format::pretty: {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        for (const auto& [k, v] : rows_)
          os << k << std::string(width - k.size() + 1, ' ') << "= " << v << "\n";
        break;
      }
    }
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

}  // namespace detail

inline std::string render_gap_report(const GapReport& r, Format fmt) {
  detail::Report doc;
  doc.add("phi", r.phi);
  doc.add("psi", r.psi);
  doc.add("gap", r.gap);
  doc.add("gap_defined", r.gap_defined ? "true" : "false");
  doc.add("beta_bar", r.beta_bar);
  doc.add("u_bar", r.u_bar);
  doc.add("attainment", attain_status_name(r.attainment));
  doc.add("witness_y1", r.witness ? r.witness->y1.str() : "none");
  doc.add("witness_y2", r.witness ? r.witness->y2.str() : "none");
  doc.add("rhs_case", rhs_case_name(r.rhs_case));
  doc.add("psi_lo", r.psi_enclosure ? r.psi_enclosure->first.str() : "none");
  doc.add("psi_hi", r.psi_enclosure ? r.psi_enclosure->second.str() : "none");
  return doc.render(fmt);
}

struct DualCheckResult {
  DualPoint y;
  bool feasible = false;
  XReal conjugate;            // 0 or +inf
  Ratio objective;            // b1 y1 + b2 y2
  std::optional<XReal> psi;   // dual value when exactly known
  std::string verdict;        // "optimal" / "suboptimal" / "infeasible" / "unknown"
};

inline DualCheckResult dual_check(const CostSpec& c, const Rhs& b, const DualPoint& y) {
  DualCheckResult res;
  res.y = y;
  res.feasible = dual_feasible(c, y);
  res.conjugate = hc_conjugate(c, y);
  res.objective = b.b1 * y.y1 + b.b2 * y.y2;
  if (!res.feasible) {
    res.verdict = "infeasible";
    return res;
  }
  if (rhs_classify(b) == RhsCase::infeasible) {
    res.verdict = "unknown";  // dual objective unbounded over the feasible set
    return res;
  }
  const DualValue dv = dual_sup_general(c, b);
  if (dv.enclosure) {
    res.verdict = "unknown";
    return res;
  }
  res.psi = dv.value;
  res.verdict = XReal(res.objective) == dv.value ? "optimal" : "suboptimal";
  return res;
}

inline std::string render_dual_check(const DualCheckResult& r, Format fmt) {
  detail::Report doc;
  doc.add("y1", r.y.y1);
  doc.add("y2", r.y.y2);
  doc.add("feasible", r.feasible ? "true" : "false");
  doc.add("conjugate", r.conjugate);
  doc.add("objective", r.objective);
  doc.add("psi", r.psi ? r.psi->str() : "none");
  doc.add("verdict", r.verdict);
  return doc.render(fmt);
}

inline std::string render_sweep(const std::vector<SweepRow>& rows, Format fmt) {
  if (fmt == Format::csv) return sweep_csv(rows);
  if (fmt == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
      nlohmann::ordered_json j;
      j["N"] = r.n;
      j["primal"] = r.primal.str();
      j["dual"] = r.dual.str();
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const SweepRow& r : rows)
    os << "N=" << r.n << " primal=" << r.primal.str() << " dual=" << r.dual.str()
       << "\n";
  return os.str();
}

}  // namespace galegap
