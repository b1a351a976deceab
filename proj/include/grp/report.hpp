#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grp/properties.hpp"
#include "grp/toolkit.hpp"

namespace grp {

using json = nlohmann::ordered_json;

// All integers are rendered as full decimal strings: psi values exceed 2^53
// and must survive double-precision JSON parsers.

struct VerdictReport {
  std::string property;
  std::string outcome;
  std::string method;
  std::vector<std::pair<std::string, std::string>> evidence;
};

struct GroupReport {
  GroupAnalysis analysis;
  std::vector<VerdictReport> verdicts;
  std::optional<std::string> error;
};

struct TableCell {
  std::string group;
  std::string statistic;
  std::optional<std::string> computed;
  std::optional<std::string> golden;
  bool mismatch = false;  // both present and different
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> invocation;  // echoed flags
  std::vector<GroupReport> groups;
  std::string table_name;
  std::vector<TableCell> cells;
};

inline VerdictReport to_report(const PropertyVerdict& v) {
  VerdictReport r;
  r.property = to_string(v.property);
  r.outcome = to_string(v.outcome);
  r.method = to_string(v.method);
  r.evidence = v.evidence;
  return r;
}

namespace detail {

inline json group_to_json(const GroupReport& g) {
  json o;
  o["spec"] = g.analysis.spec_text;
  if (g.error) {
    o["error"] = *g.error;
    return o;
  }
  if (g.analysis.order) o["order"] = g.analysis.order->str();
  if (g.analysis.psi) o["psi"] = g.analysis.psi->str();
  if (g.analysis.meo) o["meo"] = std::to_string(*g.analysis.meo);
  if (g.analysis.exp) o["exponent"] = std::to_string(*g.analysis.exp);
  if (g.analysis.method) o["method"] = to_string(*g.analysis.method);
  if (g.analysis.lattice) {
    const auto& l = *g.analysis.lattice;
    if (l.subgroup_count) {
      o["subgroups"] = std::to_string(l.subgroup_count);
      o["maximal_subgroups"] = std::to_string(l.maximal_count);
    }
    if (l.m) o["m"] = std::to_string(l.m);
    if (l.m2) o["m2"] = std::to_string(*l.m2);
  }
  if (g.analysis.deep_m) o["m"] = std::to_string(*g.analysis.deep_m);
  if (g.analysis.deep_m2) o["m2"] = std::to_string(*g.analysis.deep_m2);
  if (!g.verdicts.empty()) {
    json vs = json::array();
    for (const auto& v : g.verdicts) {
      json vo;
      vo["property"] = v.property;
      vo["outcome"] = v.outcome;
      vo["method"] = v.method;
      json ev;
      for (const auto& [k, val] : v.evidence) ev[k] = val;
      vo["evidence"] = ev;
      vs.push_back(vo);
    }
    o["verdicts"] = vs;
  }
  return o;
}

inline std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace detail

inline std::string render_json(const Report& r) {
  json o;
  json inv;
  inv["command"] = r.command;
  for (const auto& [k, v] : r.invocation) inv[k] = v;
  o["invocation"] = inv;
  if (!r.groups.empty()) {
    json gs = json::array();
    for (const auto& g : r.groups) gs.push_back(detail::group_to_json(g));
    o["groups"] = gs;
  }
  if (!r.table_name.empty()) {
    o["table"] = r.table_name;
    json cs = json::array();
    std::size_t mismatches = 0;
    for (const auto& c : r.cells) {
      json co;
      co["group"] = c.group;
      co["statistic"] = c.statistic;
      co["computed"] = c.computed ? json(*c.computed) : json(nullptr);
      co["golden"] = c.golden ? json(*c.golden) : json(nullptr);
      co["match"] = (c.computed && c.golden) ? json(!c.mismatch) : json(nullptr);
      cs.push_back(co);
      if (c.mismatch) ++mismatches;
    }
    o["cells"] = cs;
    o["mismatches"] = std::to_string(mismatches);
  }
  return o.dump(2) + "\n";
}

inline std::string render_table(const Report& r) {
  std::ostringstream os;
  if (!r.groups.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"group", "order", "psi", "meo", "exp", "m", "m2", "method"});
    for (const auto& g : r.groups) {
      if (g.error) {
        rows.push_back({g.analysis.spec_text, "error: " + *g.error, "", "", "", "", "", ""});
        continue;
      }
      auto opt = [](const auto& v) { return v ? v->str() : std::string("-"); };
      std::string m = "-", m2 = "-";
      if (g.analysis.lattice && g.analysis.lattice->m) m = std::to_string(g.analysis.lattice->m);
      if (g.analysis.lattice && g.analysis.lattice->m2)
        m2 = std::to_string(*g.analysis.lattice->m2);
      if (g.analysis.deep_m) m = std::to_string(*g.analysis.deep_m);
      if (g.analysis.deep_m2) m2 = std::to_string(*g.analysis.deep_m2);
      rows.push_back({g.analysis.spec_text, opt(g.analysis.order), opt(g.analysis.psi),
                      g.analysis.meo ? std::to_string(*g.analysis.meo) : "-",
                      g.analysis.exp ? std::to_string(*g.analysis.exp) : "-", m, m2,
                      g.analysis.method ? to_string(*g.analysis.method) : "-"});
    }
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << detail::pad(row[i], w[i] + 2);
      os << "\n";
    }
    for (const auto& g : r.groups) {
      for (const auto& v : g.verdicts) {
        os << g.analysis.spec_text << ": " << v.property << " " << v.outcome << " ["
           << v.method << "]";
        for (const auto& [k, val] : v.evidence) os << " " << k << "=" << val;
        os << "\n";
      }
    }
  }
  if (!r.table_name.empty()) {
    os << "table " << r.table_name << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"group", "statistic", "computed", "golden", "match"});
    for (const auto& c : r.cells) {
      std::string match = (c.computed && c.golden) ? (c.mismatch ? "MISMATCH" : "ok") : "-";
      rows.push_back({c.group, c.statistic, c.computed.value_or("-"), c.golden.value_or("-"),
                      match});
    }
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << detail::pad(row[i], w[i] + 2);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace grp
