#include "compmat/fixtures.hpp"

#include <stdexcept>

namespace compmat {

namespace {

Fixture make(std::string name, std::string summary, Matrix a, std::optional<Vector> q = std::nullopt) {
  const std::size_t n = a.rows();
  return Fixture{std::move(name), std::move(summary), MatrixDocument{n, std::move(a), std::move(q)}};
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> all = {
      make("singular_cc", "singular and column competent", {{1, 0}, {1, 0}}),
      make("not_cc_2x2", "not column competent", {{1, 1}, {0, 0}}),
      make("nonsingular_not_cc", "nonsingular, not column competent", {{1, 4, 3}, {2, 1, 5}, {3, 2, 0}}),
      make("cc_not_p0", "column competent, not P0", {{2, 1}, {1, -1}}),
      make("cc_p0", "column competent and P0, not R0", {{2, -1}, {-4, 2}}),
      make("r0_not_cc", "R0, not column competent", {{1, 1, 4}, {2, 2, 5}, {3, 4, 1}}),
      make("cc_not_adequate", "claimed column competent, not column adequate",
           {{3, -2, 0}, {-2, 1, 1}, {-3, 2, 0}}),
      make("wunique_2x2", "LCP with a ray of solutions and a single w", {{-1, 3}, {2, -6}},
           Vector{1, -2}),
      make("wunique_3x3", "LCP with solution z = (4,4,1)", {{-2, 1, 3}, {4, -2, -6}, {1, -1, -1}},
           Vector{1, -2, 1}),
  };
  return all;
}

const Fixture& builtin_fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture " + std::string(name));
}

}  // namespace compmat
