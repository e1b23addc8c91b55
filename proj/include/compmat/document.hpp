#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "compmat/matrix.hpp"

namespace compmat {

/// A matrix with an optional right-hand side, as read from disk.
struct MatrixDocument {
  std::size_t n = 0;
  Matrix A;
  std::optional<Vector> q;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

/// JSON when the first non-blank character is '{', otherwise the text format:
/// one matrix row per line, an optional line "q v1 ... vn", '#' comments.
MatrixDocument parse_document(std::string_view text);

/// {"n": 2, "A": [["1","0"],["1","0"]], "q": ["1","-2"]}. Entries are
/// rational strings or integers. Throws ParseError with line and column.
MatrixDocument parse_json_document(std::string_view text);
MatrixDocument parse_text_document(std::string_view text);

/// Canonical JSON: fixed key order, every entry a rational string.
std::string serialize_document(const MatrixDocument& doc);

/// Reads and parses a file ("-" is stdin). Unreadable files raise ParseError
/// at line 0.
MatrixDocument load_document(const std::string& path);

}  // namespace compmat
