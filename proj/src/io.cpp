// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "adiabat/error.hpp"

namespace adiabat {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse, "instance: " + what); }

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key)) parse_fail(std::string("missing key '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) parse_fail(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

AlphaValue parse_alpha(std::string_view text) {
  AlphaValue out;
  out.label = std::string(text);
  if (auto exact = Rational::parse(text)) {
    out.exact = exact;
    out.value = exact->to_double();
    return out;
  }
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw Error(ErrorCode::parse, "cannot read alpha '" + std::string(text) + "'");
  out.value = value;
  return out;
}

std::vector<AlphaValue> parse_alpha_list(std::string_view text) {
  std::vector<AlphaValue> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw Error(ErrorCode::parse, "empty entry in alpha list");
    values.push_back(parse_alpha(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

InstanceDocument parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  static const std::set<std::string> known = {"n", "k", "alpha", "weights", "edges", "mixer", "basis_order"};
  for (const auto& item : doc.items())
    if (!known.count(item.key())) parse_fail("unknown key '" + item.key() + "'");

  InstanceDocument out;
  ProblemGraph& g = out.graph;
  g.n = require_int(doc, "n");
  g.k = require_int(doc, "k");

  if (!doc.contains("alpha")) parse_fail("missing key 'alpha'");
  const json& alpha = doc.at("alpha");
  if (alpha.is_number()) {
    g.set_alpha(alpha.get<double>());
  } else if (alpha.is_string()) {
    const AlphaValue a = parse_alpha(alpha.get<std::string>());
    if (a.exact)
      g.set_alpha(*a.exact);
    else
      g.set_alpha(a.value);
  } else {
    parse_fail("'alpha' must be a number or a string");
  }

  if (!doc.contains("weights") || !doc.at("weights").is_array()) parse_fail("'weights' must be an array");
  for (const json& w : doc.at("weights")) {
    if (!w.is_number()) parse_fail("weights must be numbers");
    g.weights.push_back(w.get<double>());
  }

  if (!doc.contains("edges") || !doc.at("edges").is_array()) parse_fail("'edges' must be an array");
  for (const json& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      parse_fail("each edge must be a pair of integers");
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    g.edges.push_back({std::min(u, v), std::max(u, v)});
  }

  if (doc.contains("mixer")) {
    if (!doc.at("mixer").is_string()) parse_fail("'mixer' must be a string");
    const auto kind = parse_mixer(doc.at("mixer").get<std::string>());
    if (!kind) parse_fail("unknown mixer '" + doc.at("mixer").get<std::string>() + "'");
    out.mixer = *kind;
  }
  if (doc.contains("basis_order") && doc.at("basis_order") != "lexicographic")
    parse_fail("only the lexicographic basis order is supported");

  g.validate();
  return out;
}

InstanceDocument load_instance(const std::filesystem::path& path) { return parse_instance(read_text(path)); }

std::string instance_to_json(const InstanceDocument& doc) {
  const ProblemGraph& g = doc.graph;
  json out = json::object();
  out["n"] = g.n;
  out["k"] = g.k;
  // Non-dyadic exact values keep their fraction so they survive a round trip.
  if (g.alpha_exact && Rational::from_double(g.alpha) != g.alpha_exact)
    out["alpha"] = g.alpha_exact->to_string();
  else
    out["alpha"] = g.alpha;
  out["weights"] = g.weights;
  json edges = json::array();
  for (const Edge& e : g.edges) edges.push_back({e.u, e.v});
  out["edges"] = edges;
  out["mixer"] = std::string(to_string(doc.mixer));
  out["basis_order"] = "lexicographic";
  return out.dump(2) + "\n";
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc()) throw Error(ErrorCode::numerical, "cannot format a double");
  return std::string(buf, ptr);
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out += ',';
    out += table.header[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw Error(ErrorCode::invalid_argument, "CSV row width differs from header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  auto split = [](std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (header) {
      for (auto c : cells) table.header.emplace_back(c);
      header = false;
      continue;
    }
    if (cells.size() != table.header.size()) throw Error(ErrorCode::parse, "CSV row width differs from header");
    std::vector<double> row;
    for (auto c : cells) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || ptr != c.data() + c.size())
        throw Error(ErrorCode::parse, "bad CSV number '" + std::string(c) + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (header) throw Error(ErrorCode::parse, "CSV has no header");
  return table;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, "error reading '" + path.string() + "'");
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::io, "error writing '" + path.string() + "'");
}

}  // namespace adiabat
