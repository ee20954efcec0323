#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segre/series.hpp"

namespace segre {

/// Rectangular matrix of series over one space and order.
class SeriesMatrix {
public:
    SeriesMatrix(int rows, int cols, const Series& fill);
    static SeriesMatrix fromRows(const std::vector<std::vector<Series>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Series& at(int r, int c) const { return data_[r * cols_ + c]; }
    Series& at(int r, int c) { return data_[r * cols_ + c]; }

    SeriesMatrix submatrix(const std::vector<int>& rowIdx,
                           const std::vector<int>& colIdx) const;
    bool isConstant() const;
    bool isZero() const;

private:
    int rows_, cols_;
    std::vector<Series> data_;
};

/// Jacobian of a component list with respect to the given variables
/// (rows = components, cols = variables).
SeriesMatrix jacobian(const std::vector<Series>& components,
                      const std::vector<int>& vars);

/// Symbolic determinant (cofactor expansion, zero-aware pivot column).
Series determinant(const SeriesMatrix& m);

/// Exact rank of a constant matrix over Q(i) by Gaussian elimination.
/// When pivotRows/pivotCols are given, the pivot positions (an invertible
/// rank x rank submatrix of the input) are reported.
int constantRank(const std::vector<std::vector<GaussianRational>>& m,
                 std::vector<int>* pivotRows = nullptr,
                 std::vector<int>* pivotCols = nullptr);

struct RankResult {
    int rank = 0;             // certified lower bound (a nonzero minor exists)
    bool upperCertified = false;  // every larger minor vanishes up to `order`
    int order = 0;            // truncation order of the certificates
    std::string witness;      // the nonzero minor, as an exact term
};

/// Generic rank up to truncation.  Constant matrices are ranked exactly.
/// Small symbolic matrices (both dims <= 6) use deterministic minor
/// enumeration; larger ones use seeded random rational evaluation to locate
/// a candidate minor, which is then confirmed symbolically.
RankResult genericRank(const SeriesMatrix& m, std::uint64_t seed = 0);

}  // namespace segre
