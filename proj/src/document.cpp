#include "compmat/document.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "compmat/errors.hpp"

namespace compmat {

namespace {

using nlohmann::json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

/// Semantic errors point at the first occurrence of `needle` in the raw text,
/// or at the start of the document when it cannot be found.
[[noreturn]] void fail_at(std::string_view text, std::string_view needle, const std::string& msg) {
  const std::size_t off = needle.empty() ? std::string_view::npos : text.find(needle);
  const Position p = off == std::string_view::npos ? Position{} : position_at(text, off);
  throw ParseError(msg, p.line, p.column);
}

Rational json_rational(std::string_view text, const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(mpq_class(std::to_string(v.get<std::uint64_t>())));
    return Rational(v.get<long>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (!Rational::is_valid_literal(s)) {
      fail_at(text, "\"" + s + "\"", path + ": invalid rational \"" + s + "\"");
    }
    return Rational::parse(s);
  }
  fail_at(text, v.dump(), path + ": expected an integer or a rational string, got " + v.dump());
}

Vector json_vector(std::string_view text, const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array() || v.size() != n) {
    fail_at(text, "", path + ": expected an array of length " + std::to_string(n));
  }
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = json_rational(text, v[i], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

}  // namespace

MatrixDocument parse_json_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t off = e.byte == 0 ? 0 : e.byte - 1;
    const Position p = position_at(text, off);
    std::string msg = e.what();
    const auto cut = msg.find("syntax error");
    throw ParseError(cut == std::string::npos ? msg : msg.substr(cut), p.line, p.column);
  }
  if (!root.is_object()) fail_at(text, "", "top level must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key != "n" && key != "A" && key != "q") {
      fail_at(text, "\"" + key + "\"", "unknown key \"" + key + "\"");
    }
  }
  if (!root.contains("A")) fail_at(text, "", "missing key \"A\"");
  const json& a = root["A"];
  if (!a.is_array() || a.empty()) fail_at(text, "\"A\"", "A: expected a nonempty array of rows");

  std::size_t n = a.size();
  if (root.contains("n")) {
    const json& jn = root["n"];
    if (!jn.is_number_unsigned() || jn.get<std::size_t>() == 0) {
      fail_at(text, "\"n\"", "n: expected a positive integer");
    }
    n = jn.get<std::size_t>();
    if (a.size() != n) {
      fail_at(text, "\"A\"", "A: has " + std::to_string(a.size()) + " rows but n = " + std::to_string(n));
    }
  }

  MatrixDocument doc;
  doc.n = n;
  doc.A = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector row = json_vector(text, a[i], n, "A[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < n; ++j) doc.A(i, j) = row[j];
  }
  if (root.contains("q") && !root["q"].is_null()) doc.q = json_vector(text, root["q"], n, "q");
  return doc;
}

MatrixDocument parse_text_document(std::string_view text) {
  std::vector<Vector> rows;
  std::optional<Vector> q;
  std::size_t q_line = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string_view, std::size_t>> tokens;  // token, column
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',') ++j;
      tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (!tokens.empty()) {
      bool is_q = false;
      if (tokens.front().first == "q" || tokens.front().first == "q:") {
        if (q) throw ParseError("duplicate q line", line_no, tokens.front().second);
        is_q = true;
        tokens.erase(tokens.begin());
      } else if (q) {
        throw ParseError("matrix row after the q line", line_no, tokens.front().second);
      }
      Vector v;
      for (const auto& [tok, col] : tokens) {
        if (!Rational::is_valid_literal(tok)) {
          throw ParseError("invalid rational \"" + std::string(tok) + "\"", line_no, col);
        }
        v.push_back(Rational::parse(tok));
      }
      if (is_q) {
        q = std::move(v);
        q_line = line_no;
      } else {
        if (!rows.empty() && v.size() != rows.front().size()) {
          throw ParseError("row has " + std::to_string(v.size()) + " entries, expected " +
                               std::to_string(rows.front().size()),
                           line_no, 1);
        }
        rows.push_back(std::move(v));
      }
    }
    start = end + 1;
  }
  if (rows.empty()) throw ParseError("no matrix rows", line_no, 1);
  const std::size_t n = rows.size();
  if (rows.front().size() != n) {
    throw ParseError("matrix is " + std::to_string(n) + "x" + std::to_string(rows.front().size()) +
                         ", expected square",
                     1, 1);
  }
  if (q && q->size() != n) {
    throw ParseError("q has " + std::to_string(q->size()) + " entries, expected " + std::to_string(n),
                     q_line, 1);
  }
  return MatrixDocument{n, Matrix::from_rows(rows), q};
}

MatrixDocument parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_document(text);
  return parse_text_document(text);
}

std::string serialize_document(const MatrixDocument& doc) {
  // ordered_json keeps n, A, q in insertion order.
  nlohmann::ordered_json out;
  out["n"] = doc.n;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < doc.A.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < doc.A.cols(); ++j) row.push_back(doc.A(i, j).str());
    rows.push_back(std::move(row));
  }
  out["A"] = std::move(rows);
  if (doc.q) {
    auto q = nlohmann::ordered_json::array();
    for (const auto& x : *doc.q) q.push_back(x.str());
    out["q"] = std::move(q);
  }
  return out.dump() + "\n";
}

MatrixDocument load_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path, 0, 0);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_document(text);
}

}  // namespace compmat
