// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "lmsb/rational.hpp"

namespace lmsb {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

struct Echelon {
  Matrix rows;              // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

// Gauss-Jordan over Q. Columns are eliminated in the given order
// (default: natural order), so earlier columns are preferred as pivots.
Echelon rref(Matrix m, const std::vector<int>& column_order = {});
int rank(const Matrix& m);
std::vector<Vec> nullspace(const Matrix& m, std::size_t ncols);
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace lmsb
