#include "report.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

namespace compmat::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

Json to_json(const Rational& x) { return x.str(); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const IndexSet& s) { return s.str(); }

namespace {

Json envelope(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  if (r.input_sha256) j["input_sha256"] = *r.input_sha256;
  if (r.seed) j["seed"] = std::to_string(*r.seed);
  j["elapsed_ms"] = std::to_string(r.elapsed_ms);
  j["results"] = r.results;
  return j;
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (!x.is_primitive()) return false;
  }
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (is_flat_array(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + scalar(j[i]);
    return s + ")";
  }
  return j.dump();
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!is_flat_array(row) || row.empty()) return false;
  }
  return true;
}

void emit(std::string& out, const Json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || is_flat_array(v)) {
        out += pad + k + ": " + scalar(v) + "\n";
      } else if (is_matrix(v)) {
        out += pad + k + ":\n";
        for (const auto& row : v) out += pad + "  " + scalar(row) + "\n";
      } else if (v.empty()) {
        out += pad + k + ": (none)\n";
      } else {
        out += pad + k + ":\n";
        emit(out, v, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || is_flat_array(v)) {
        out += pad + "- " + scalar(v) + "\n";
      } else if (v.is_object() && !v.empty()) {
        std::string item;
        emit(item, v, depth + 1);
        item.replace(pad.size(), 2, "- ");
        out += item;
      } else {
        out += pad + "-\n";
        emit(out, v, depth + 1);
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

}  // namespace

std::string render_json(const RunReport& r) { return envelope(r).dump(2) + "\n"; }

std::string render_text(const RunReport& r) {
  std::string out;
  emit(out, envelope(r), 0);
  return out;
}

}  // namespace compmat::cli
