// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adiabat/hamiltonian.hpp"
#include "adiabat/rational.hpp"

namespace adiabat {

/// Instance file: a JSON object with keys n, k, alpha (number or "p/q"
/// string), weights (n numbers), edges (array of 1-based [i, j] pairs) and
/// optionally mixer ("swap_chain", "swap_cycle", "transverse_field") and
/// basis_order (only "lexicographic"). Unknown keys are rejected.
struct InstanceDocument {
  ProblemGraph graph;
  MixerKind mixer = MixerKind::swap_chain;
};

InstanceDocument parse_instance(std::string_view text);
InstanceDocument load_instance(const std::filesystem::path& path);
/// Deterministic serialisation that parse_instance reads back unchanged.
std::string instance_to_json(const InstanceDocument& doc);

/// A value of alpha as written by the user. `exact` is set when the text is
/// a fraction or a plain decimal.
struct AlphaValue {
  double value = 0.0;
  std::optional<Rational> exact;
  std::string label;
};

AlphaValue parse_alpha(std::string_view text);
/// Comma-separated list of alpha values.
std::vector<AlphaValue> parse_alpha_list(std::string_view text);

/// 17 significant digits, '.' decimal point.
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Header row, comma separator, LF line endings.
std::string to_csv(const CsvTable& table);
CsvTable parse_csv(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace adiabat
