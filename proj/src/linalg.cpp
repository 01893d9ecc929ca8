#include "lflab/linalg.hpp"

#include <algorithm>

namespace lflab::linalg {

namespace {

// index of the known-nonzero entry of minimal valuation in column `col`,
// among rows [from, n); -1 if the column is zero to precision there.
int pivot_row(const Mat& m, size_t col, size_t from) {
    int best = -1;
    i64 best_v = 0;
    for (size_t r = from; r < m.size(); ++r) {
        if (!m[r][col].known_nonzero()) continue;
        i64 v = m[r][col].valuation();
        if (best < 0 || v < best_v) {
            best = static_cast<int>(r);
            best_v = v;
        }
    }
    return best;
}

}  // namespace

int rank(Mat m, i64 len) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t row = 0;
    int rk = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        int pr = pivot_row(m, col, row);
        if (pr < 0) continue;
        std::swap(m[row], m[static_cast<size_t>(pr)]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            if (!m[r][col].known_nonzero()) continue;
            LaurentSeries factor = m[r][col].div(m[row][col], len);
            for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
        }
        ++row;
        ++rk;
    }
    return rk;
}

LaurentSeries det(Mat m, i64 len) {
    const size_t n = m.size();
    if (n == 0) throw DomainError("det of empty matrix");
    const FieldPtr field = m[0][0].field();
    LaurentSeries acc = LaurentSeries::one(field);
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        int pr = pivot_row(m, col, col);
        if (pr < 0) {
            // a fully cancelled column: determinant indistinguishable from zero
            i64 bound = LaurentSeries::kExactPrec;
            for (size_t r = col; r < n; ++r) bound = std::min(bound, m[r][col].prec());
            return LaurentSeries::zero_mod(field, bound);
        }
        if (static_cast<size_t>(pr) != col) {
            std::swap(m[col], m[static_cast<size_t>(pr)]);
            sign = -sign;
        }
        acc = acc * m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (!m[r][col].known_nonzero()) continue;
            LaurentSeries factor = m[r][col].div(m[col][col], len);
            for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return sign < 0 ? -acc : acc;
}

std::optional<Row> solve(Mat a, Row rhs, i64 len) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        int pr = pivot_row(a, col, col);
        if (pr < 0) return std::nullopt;
        std::swap(a[col], a[static_cast<size_t>(pr)]);
        std::swap(rhs[col], rhs[static_cast<size_t>(pr)]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || !a[r][col].known_nonzero()) continue;
            LaurentSeries factor = a[r][col].div(a[col][col], len);
            for (size_t c = 0; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
            rhs[r] = rhs[r] - factor * rhs[col];
        }
    }
    Row out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(rhs[i].div(a[i][i], len));
    return out;
}

}  // namespace lflab::linalg
