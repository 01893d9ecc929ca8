#pragma once

#include <optional>
#include <vector>

#include "lflab/series.hpp"

namespace lflab {

// Dense linear algebra over the Laurent-series field, pivoting on the entry of
// minimal valuation to limit precision loss.
namespace linalg {

using Row = std::vector<LaurentSeries>;
using Mat = std::vector<Row>;

int rank(Mat m, i64 len);

// Determinant of a square matrix; zero-to-precision pivots yield a series that
// is zero to the tracked precision.
LaurentSeries det(Mat m, i64 len);

// Solve A x = rhs for square nonsingular A; nullopt if A is singular to precision.
std::optional<Row> solve(Mat a, Row rhs, i64 len);

}  // namespace linalg
}  // namespace lflab
