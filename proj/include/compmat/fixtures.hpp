#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compmat/document.hpp"

namespace compmat {

/// Named example instances; the same data ships as fixtures/<name>.json.
struct Fixture {
  std::string name;
  std::string summary;
  MatrixDocument doc;
};

const std::vector<Fixture>& builtin_fixtures();

/// Throws std::out_of_range for an unknown name.
const Fixture& builtin_fixture(std::string_view name);

}  // namespace compmat
