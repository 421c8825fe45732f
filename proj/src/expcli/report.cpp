#include <algorithm>
#include <sstream>

#include "repzeta/expcli/experiment.hpp"

namespace repzeta::expcli {

using nlohmann::json;

namespace {

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ",";
    s += cell(x);
  }
  return s;
}

}  // namespace

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

bool Report::passed() const { return failed_checks().empty(); }

std::vector<std::string> Report::failed_checks() const {
  std::vector<std::string> out;
  if (!body.contains("checks")) return out;
  for (const auto& c : body["checks"]) {
    if (!c["ok"].get<bool>()) out.push_back(c["name"].get<std::string>());
  }
  return out;
}

json Report::to_json() const {
  json j = body;
  j["run"] = run;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  std::vector<std::vector<std::string>> head{{"experiment", cell(body.value("experiment", json()))},
                                             {"version", cell(body.value("version", json()))}};
  if (body.contains("spec")) {
    for (const auto& [key, v] : body["spec"].items()) {
      if (key != "budgets" && key != "kind") head.push_back({key, v.is_array() ? join(v) : cell(v)});
    }
  }
  out << render_table(head);

  if (body.contains("groups") && !body["groups"].empty()) {
    std::vector<std::vector<std::string>> rows{{"group", "order", "classes", "commuting pairs", "N", "degrees"}};
    for (const auto& g : body["groups"]) {
      rows.push_back({cell(g["label"]), cell(g["order"]), cell(g["classes"]), cell(g["commuting_pairs"]),
                      cell(g.value("N", json())), cell(g.value("degrees_text", json()))});
    }
    out << "\n" << render_table(rows);
  }
  if (body.contains("table")) {
    std::vector<std::vector<std::string>> rows{{"p", "order", "classes", "N", "dimirr"}};
    for (const auto& r : body["table"]) {
      rows.push_back({cell(r["p"]), cell(r["order"]), cell(r["classes"]), cell(r["N"]), join(r["dimirr"])});
    }
    out << "\n" << render_table(rows);
    out << "max N " << cell(body["max_N"]) << " at p = " << join(body["primes_at_max"])
        << (body["constant"].get<bool>() ? " (constant)" : "") << "\n";
  }
  if (body.contains("verdicts")) {
    std::vector<std::vector<std::string>> rows{{"mode", "equal", "N1", "N2", "points", "witness s"}};
    for (const auto& v : body["verdicts"]) {
      rows.push_back({cell(v["mode"]), cell(v["equal"]), cell(v["n1"]), cell(v["n2"]),
                      std::to_string(v["points"].size()), cell(v["witness_s"])});
    }
    out << "\n" << render_table(rows);
  }
  if (body.contains("orders_equal")) {
    out << "\norders equal            " << cell(body["orders_equal"]) << "\n";
    out << "commuting pairs equal   " << cell(body["commuting_pairs_equal"]) << "\n";
  }
  const auto failed = failed_checks();
  const std::size_t total = body.contains("checks") ? body["checks"].size() : 0;
  out << "\nchecks: " << total - failed.size() << "/" << total << " passed\n";
  for (const auto& f : failed) out << "FAILED " << f << "\n";
  return out.str();
}

std::string Report::to_csv() const {
  if (!body.contains("table")) return {};
  std::ostringstream out;
  out << "p,order,classes,N,dimirr\n";
  for (const auto& r : body["table"]) {
    std::string dims;
    for (const auto& d : r["dimirr"]) dims += (dims.empty() ? "" : " ") + d.dump();
    out << r["p"].dump() << "," << r["order"].dump() << "," << r["classes"].dump() << "," << r["N"].dump() << ","
        << dims << "\n";
  }
  return out.str();
}

}  // namespace repzeta::expcli
