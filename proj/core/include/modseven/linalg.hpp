#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modseven/coef.hpp"

namespace modseven {

using Vec = std::vector<Coef>;
using Mat = std::vector<Vec>;  // row-major

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(std::size_t n, Ring r);

/// Rank by Gaussian elimination; entries must lie in a field (or be Loc3
/// units when pivoted on).
std::size_t mat_rank(Mat m);

Coef mat_det(Mat m);

/// Inverse of a square matrix over a field; throws when singular.
Mat mat_inverse(Mat m);

struct SolveOutcome {
    enum Kind { Unique, Inconsistent, Underdetermined } kind;
    Vec x;  // valid when kind == Unique
};

/// Solve A x = b exactly (A given row-major, any shape).
SolveOutcome solve_linear(Mat a, Vec b);

/// Basis of the right kernel of A, as rows.
std::vector<Vec> null_space(Mat a);

// Dense GF(3) matrices for the big rank computations.
using GF3Row = std::vector<std::uint8_t>;
using GF3Mat = std::vector<GF3Row>;

std::size_t gf3_rank(GF3Mat m);

}  // namespace modseven
