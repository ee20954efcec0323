#include "segre/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace segre {

SeriesMatrix::SeriesMatrix(int rows, int cols, const Series& fill)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

SeriesMatrix SeriesMatrix::fromRows(const std::vector<std::vector<Series>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("empty matrix");
    SeriesMatrix m(static_cast<int>(rows.size()),
                   static_cast<int>(rows[0].size()), rows[0][0]);
    for (int r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

SeriesMatrix SeriesMatrix::submatrix(const std::vector<int>& rowIdx,
                                     const std::vector<int>& colIdx) const {
    SeriesMatrix out(static_cast<int>(rowIdx.size()),
                     static_cast<int>(colIdx.size()), data_[0]);
    for (size_t r = 0; r < rowIdx.size(); ++r)
        for (size_t c = 0; c < colIdx.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) =
                at(rowIdx[r], colIdx[c]);
    return out;
}

bool SeriesMatrix::isConstant() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Series& s) { return s.isConstant(); });
}

bool SeriesMatrix::isZero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Series& s) { return s.isZero(); });
}

SeriesMatrix jacobian(const std::vector<Series>& components,
                      const std::vector<int>& vars) {
    if (components.empty() || vars.empty())
        throw std::invalid_argument("jacobian: empty input");
    SeriesMatrix m(static_cast<int>(components.size()),
                   static_cast<int>(vars.size()), components[0]);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = components[r].derive(vars[c]);
    return m;
}

namespace {

Series detRec(const SeriesMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    // Expand along the column with the most zeros.
    size_t best = 0, bestZeros = 0;
    for (size_t c = 0; c < k; ++c) {
        size_t zeros = 0;
        for (size_t r = 0; r < k; ++r)
            if (m.at(rows[r], cols[c]).isZero()) ++zeros;
        if (zeros >= bestZeros) {
            bestZeros = zeros;
            best = c;
        }
    }
    std::vector<int> subCols;
    for (size_t c = 0; c < k; ++c)
        if (c != best) subCols.push_back(cols[c]);
    Series acc(m.at(0, 0).space(), m.at(0, 0).order());
    for (size_t r = 0; r < k; ++r) {
        const Series& entry = m.at(rows[r], cols[best]);
        if (entry.isZero()) continue;
        std::vector<int> subRows;
        for (size_t rr = 0; rr < k; ++rr)
            if (rr != r) subRows.push_back(rows[rr]);
        Series minor = detRec(m, std::move(subRows), subCols);
        Series term = entry * minor;
        acc = ((r + best) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Series determinant(const SeriesMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    std::vector<int> idx(m.rows());
    for (int j = 0; j < m.rows(); ++j) idx[j] = j;
    return detRec(m, idx, idx);
}

int constantRank(const std::vector<std::vector<GaussianRational>>& m,
                 std::vector<int>* pivotRows, std::vector<int>* pivotCols) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    auto a = m;
    std::vector<int> rowOrig(rows);
    for (int r = 0; r < rows; ++r) rowOrig[r] = r;
    if (pivotRows) pivotRows->clear();
    if (pivotCols) pivotCols->clear();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][c].isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(rowOrig[pivot], rowOrig[rank]);
        GaussianRational inv = a[rank][c].inverse();
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c].isZero()) continue;
            GaussianRational factor = a[r][c] * inv;
            for (int cc = c; cc < cols; ++cc)
                a[r][cc] -= factor * a[rank][cc];
        }
        if (pivotRows) pivotRows->push_back(rowOrig[rank]);
        if (pivotCols) pivotCols->push_back(c);
        ++rank;
    }
    if (pivotRows) std::sort(pivotRows->begin(), pivotRows->end());
    return rank;
}

namespace {

std::string indexList(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t j = 0; j < v.size(); ++j)
        s += (j ? "," : "") + std::to_string(v[j] + 1);
    return s + "}";
}

std::string minorWitness(const std::vector<int>& rows, const std::vector<int>& cols,
                         const Series& det) {
    return "minor rows " + indexList(rows) + " cols " + indexList(cols) +
           ": det = " + det.leadingTermString() + (det.terms().size() > 1 ? " + ..." : "");
}

// Visits all k-subsets of {0..n-1}; stops early when fn returns true.
bool forEachSubset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int j = 0; j < k; ++j) idx[j] = j;
    while (true) {
        if (fn(idx)) return true;
        int j = k - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) return false;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
}

RankResult constantMatrixRank(const SeriesMatrix& m) {
    std::vector<std::vector<GaussianRational>> c(
        m.rows(), std::vector<GaussianRational>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int cc = 0; cc < m.cols(); ++cc)
            c[r][cc] = m.at(r, cc).constantTerm();
    std::vector<int> pr, pc;
    int rank = constantRank(c, &pr, &pc);
    RankResult res;
    res.rank = rank;
    res.upperCertified = true;
    res.order = m.at(0, 0).order();
    res.witness = rank == 0 ? "zero matrix"
                            : "constant pivot minor rows " + indexList(pr) +
                                  " cols " + indexList(pc);
    return res;
}

}  // namespace

RankResult genericRank(const SeriesMatrix& m, std::uint64_t seed) {
    const int order = m.at(0, 0).order();
    if (m.isZero()) return {0, true, order, "zero matrix"};
    if (m.isConstant()) return constantMatrixRank(m);
    const int rmax = std::min(m.rows(), m.cols());

    if (m.rows() <= 6 && m.cols() <= 6) {
        for (int r = rmax; r >= 1; --r) {
            RankResult res;
            bool found = forEachSubset(
                m.rows(), r, [&](const std::vector<int>& rowSel) {
                    return forEachSubset(
                        m.cols(), r, [&](const std::vector<int>& colSel) {
                            Series det = determinant(m.submatrix(rowSel, colSel));
                            if (det.isZero()) return false;
                            res = {r, true, order, minorWitness(rowSel, colSel, det)};
                            return true;
                        });
                });
            if (found) return res;
        }
        return {0, true, order, "all minors vanish"};
    }

    // Large matrix: seeded rational evaluation steers the search, a single
    // symbolic determinant certifies the winner.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> num(1, 19), den(1, 7), sign(0, 1);
    const int dim = m.at(0, 0).space().dim();
    struct Candidate {
        int rank;
        std::vector<int> rows, cols;
    };
    std::vector<Candidate> candidates;
    for (int draw = 0; draw < 5; ++draw) {
        std::vector<GaussianRational> point;
        point.reserve(dim);
        for (int v = 0; v < dim; ++v) {
            mpq_class q(sign(rng) ? num(rng) : -num(rng), den(rng));
            q.canonicalize();
            point.emplace_back(q);
        }
        std::vector<std::vector<GaussianRational>> eval(
            m.rows(), std::vector<GaussianRational>(m.cols()));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                eval[r][c] = m.at(r, c).evaluate(point);
        std::vector<int> pr, pc;
        int rank = constantRank(eval, &pr, &pc);
        if (rank > 0) candidates.push_back({rank, pr, pc});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.rank > b.rank; });
    for (const auto& cand : candidates) {
        for (int r = cand.rank; r >= 1; --r) {
            std::vector<int> rowSel(cand.rows.begin(), cand.rows.begin() + r);
            std::vector<int> colSel(cand.cols.begin(), cand.cols.begin() + r);
            Series det = determinant(m.submatrix(rowSel, colSel));
            if (!det.isZero())
                return {r, false, order, minorWitness(rowSel, colSel, det)};
        }
    }
    return {0, false, order, "no nonzero minor located"};
}

}  // namespace segre
