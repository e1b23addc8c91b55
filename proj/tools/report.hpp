#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "compmat/matrix.hpp"

namespace compmat::cli {

using Json = nlohmann::ordered_json;

struct RunReport {
  std::string command;
  std::optional<std::string> input_sha256;
  std::optional<std::uint64_t> seed;
  long long elapsed_ms = 0;
  Json results = Json::object();
};

std::string sha256_hex(std::string_view data);

Json to_json(const Rational& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
/// 1-based, e.g. "{1,3}".
Json to_json(const IndexSet& s);

std::string render_json(const RunReport& r);
/// Indented "key: value" lines.
std::string render_text(const RunReport& r);

}  // namespace compmat::cli
