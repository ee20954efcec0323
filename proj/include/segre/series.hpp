#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segre/gaussian_rational.hpp"

namespace segre {

/// The doubled coordinate space for CR dimension n: variables are, in index
/// order, z1..zn, w, chi1..chin, tau.  Every series of the toolkit lives in
/// this full space; "a series in (z,w)" simply does not mention chi or tau.
struct VarSpace {
    int n = 1;

    int dim() const { return 2 * n + 2; }
    int z(int j) const { return j; }          // j in [0, n)
    int w() const { return n; }
    int chi(int j) const { return n + 1 + j; }  // j in [0, n)
    int tau() const { return 2 * n + 1; }

    bool isZ(int idx) const { return idx < n; }
    bool isChi(int idx) const { return idx > n && idx < 2 * n + 1; }

    /// Index of the block-swapped partner (z_j <-> chi_j, w <-> tau).
    int conjugateIndex(int idx, bool swapWTau = true) const;

    std::string name(int idx) const;
    /// -1 when unknown.  Accepts "z"/"chi" as aliases for z1/chi1 when n == 1.
    int indexOf(std::string_view name) const;

    bool operator==(const VarSpace&) const = default;
};

using Exponents = std::vector<int>;

int totalDegree(const Exponents& e);

/// Graded order: by total degree, ties broken so that z-heavy monomials come
/// first (reverse lexicographic on the exponent vector).
bool gradedLexLess(const Exponents& a, const Exponents& b);

struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return gradedLexLess(a, b);
    }
};

enum class Elementary { Exp, Sin, Cos, Log1p };

/// Sparse formal power series with exact Q(i) coefficients, truncated at a
/// fixed total degree.  Canonical form: no zero coefficients stored, no term
/// of total degree above order().  Immutable once built; all operations are
/// pure and return new values.
class Series {
public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLex>;

    Series(VarSpace space, int order);
    static Series constant(const VarSpace& space, int order, GaussianRational c);
    static Series variable(const VarSpace& space, int order, int varIdx);

    const VarSpace& space() const { return space_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    GaussianRational coefficient(const Exponents& e) const;
    GaussianRational constantTerm() const;

    /// Adds c * x^e (dropped if above order or cancelling to zero).
    void addTerm(const Exponents& e, const GaussianRational& c);

    Series truncated(int newOrder) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    Series scaled(const GaussianRational& c) const;
    Series pow(int k) const;

    /// Exact partial derivative; result order is order() - 1.
    Series derive(int varIdx) const;

    /// Composition: replaces each bound variable by its series.  Bindings
    /// must have zero constant term unless the variable does not occur.
    Series substitute(const std::map<int, Series>& bindings) const;

    /// Multiplicative inverse of a unit (nonzero constant term).
    Series invertUnit() const;

    /// Coefficient conjugation plus block swap z <-> chi (and w <-> tau
    /// unless suppressed); an involution.
    Series conjugateBar(bool swapWTau = true) const;

    /// Minimal total degree with a nonzero coefficient; nullopt when the
    /// series vanishes up to order() (i.e. order of vanishing > order()).
    std::optional<int> orderOfVanishing() const;

    /// First nonzero homogeneous component; throws std::domain_error on the
    /// zero series.
    std::pair<int, Series> lowestHomogeneous() const;

    /// Exact evaluation at a rational point (one coordinate per variable).
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    int maxDegreeOf(int varIdx) const;
    bool dependsOn(int varIdx) const { return maxDegreeOf(varIdx) > 0; }
    bool isConstant() const;

    /// Graded-lex-first nonzero term, as text (witness printing).
    std::string leadingTermString() const;

    /// Canonical text form, graded-lex term order, e.g. "tau + 2*i*z1*chi1".
    std::string str() const;

    /// Equality of canonical term tables at the common truncation order.
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

private:
    VarSpace space_;
    int order_;
    TermMap terms_;
};

/// exp/sin/cos/log1p of a series with zero constant term, via the exact
/// Maclaurin expansion truncated at the argument's order.
Series elementary(Elementary fn, const Series& u);

std::string monomialString(const VarSpace& space, const Exponents& e);

}  // namespace segre
