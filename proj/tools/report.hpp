#pragma once

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "younggraph/younggraph.hpp"

namespace ygraph {

using nlohmann::ordered_json;
using namespace younggraph;

inline ordered_json quadruple_json(const MoveQuadruple& q) {
  return {{"lambda", q.lambda.str()},   {"lambda_hat", q.lambda_hat.str()}, {"mu", q.mu.str()},
          {"mu_hat", q.mu_hat.str()},   {"move", to_string(q.move)},        {"removed", to_string(q.removed)},
          {"case", to_string(q.tag)}};
}

inline ordered_json check_json(const MoveQuadruple& q, const InequalityCheck& check) {
  ordered_json row = quadruple_json(q);
  row["lhs"] = to_string(check.lhs);
  row["rhs"] = to_string(check.rhs);
  row["verdict"] = to_string(check.verdict);
  row["equality"] = check.equality;
  return row;
}

inline ordered_json measure_json(const Measure& m) {
  ordered_json masses = ordered_json::array();
  for (const auto& [lambda, mass] : m.masses()) masses.push_back({{"partition", lambda.str()}, {"mass", to_string(mass)}});
  return {{"level", m.level()}, {"masses", masses}};
}

inline Measure measure_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("masses"))
    throw std::invalid_argument("measure JSON needs \"level\" and \"masses\"");
  Measure m(j.at("level").get<int>());
  for (const auto& entry : j.at("masses")) {
    const auto& mass = entry.at("mass");
    m.add(Partition::parse(entry.at("partition").get<std::string>()),
          parse_rational(mass.is_string() ? mass.get<std::string>() : mass.dump()));
  }
  return m;
}

inline Measure read_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return measure_from_json(j);
}

/// Tallies verdict rows and collects the failing ones.
class VerdictReport {
 public:
  VerdictReport(std::string command, ordered_json parameters)
      : command_(std::move(command)), parameters_(std::move(parameters)) {}

  void add(ordered_json row) {
    const std::string verdict = row.value("verdict", "not-applicable");
    ++total_;
    if (verdict == "holds") ++holds_;
    else if (verdict == "fails") {
      ++fails_;
      counterexamples_.push_back(row);
    } else ++not_applicable_;
    if (row.value("equality", false) && verdict != "not-applicable") ++equalities_;
    rows_.push_back(std::move(row));
  }

  void set(const std::string& key, ordered_json value) { extra_[key] = std::move(value); }
  void add_summary(const std::string& key, ordered_json value) { summary_extra_[key] = std::move(value); }

  bool any_failure() const { return fails_ > 0; }

  ordered_json json() const {
    ordered_json out;
    out["command"] = command_;
    out["parameters"] = parameters_;
    for (const auto& [k, v] : extra_.items()) out[k] = v;
    out["quadruples"] = rows_.is_null() ? ordered_json::array() : rows_;
    out["counterexamples"] = counterexamples_.is_null() ? ordered_json::array() : counterexamples_;
    ordered_json summary = {{"total", total_},
                            {"holds", holds_},
                            {"fails", fails_},
                            {"not_applicable", not_applicable_},
                            {"equalities", equalities_}};
    for (const auto& [k, v] : summary_extra_.items()) summary[k] = v;
    out["summary"] = summary;
    return out;
  }

 private:
  std::string command_;
  ordered_json parameters_;
  ordered_json extra_ = ordered_json::object();
  ordered_json summary_extra_ = ordered_json::object();
  ordered_json rows_ = ordered_json::array();
  ordered_json counterexamples_ = ordered_json::array();
  long total_ = 0, holds_ = 0, fails_ = 0, not_applicable_ = 0, equalities_ = 0;
};

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace ygraph
