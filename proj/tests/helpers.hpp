#pragma once

#include <map>
#include <random>
#include <vector>

#include "segre/parser.hpp"
#include "segre/series.hpp"

namespace segre::testing {

inline Series S(const std::string& text, int n = 1, int order = 10) {
    return parseExpression(text, VarSpace{n}, order);
}

inline GaussianRational randomScalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7), im(-4, 4);
    return {mpq_class(num(rng), den(rng)), mpq_class(im(rng), den(rng))};
}

inline GaussianRational randomNonzeroScalar(std::mt19937_64& rng) {
    for (;;) {
        GaussianRational g = randomScalar(rng);
        if (!g.isZero()) return g;
    }
}

/// Random sparse polynomial: up to `terms` monomials of total degree <=
/// degree over the full variable space.
inline Series randomPolynomial(std::mt19937_64& rng, const VarSpace& sp,
                               int order, int terms = 5, int degree = 4,
                               bool zeroConstantTerm = false) {
    Series out(sp, order);
    std::uniform_int_distribution<int> termCount(1, terms);
    std::uniform_int_distribution<int> deg(zeroConstantTerm ? 1 : 0, degree);
    int k = termCount(rng);
    for (int t = 0; t < k; ++t) {
        int d = deg(rng);
        Exponents e(sp.dim(), 0);
        std::uniform_int_distribution<int> pick(0, sp.dim() - 1);
        for (int j = 0; j < d; ++j) ++e[pick(rng)];
        out.addTerm(e, randomScalar(rng));
    }
    return out;
}

/// Independent multiplication oracle: naive convolution of the coefficient
/// tables with a total-degree cut.
inline Series naiveProduct(const Series& a, const Series& b) {
    int order = std::min(a.order(), b.order());
    Series out(a.space(), order);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea.size());
            int total = 0;
            for (size_t j = 0; j < e.size(); ++j) {
                e[j] = ea[j] + eb[j];
                total += e[j];
            }
            if (total <= order) out.addTerm(e, ca * cb);
        }
    return out;
}

/// Independent differentiation oracle: term-by-term power rule.
inline Series naiveDerivative(const Series& a, int var) {
    Series out(a.space(), a.order() - 1);
    for (const auto& [e, c] : a.terms()) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        out.addTerm(d, c * GaussianRational(e[var]));
    }
    return out;
}

}  // namespace segre::testing
