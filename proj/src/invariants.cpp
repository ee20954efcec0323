#include "segre/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace segre {

namespace {

// All exponent vectors over `vars` slots with total degree in [lo, hi].
void enumerateMultiIndices(int vars, int lo, int hi,
                           std::vector<Exponents>& out) {
    Exponents cur(vars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == vars - 1) {
            cur[pos] = remaining;
            int d = totalDegree(cur);
            if (d >= lo && d <= hi) out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            cur[pos] = d;
            self(self, pos + 1, remaining - d);
        }
        cur[pos] = 0;
    };
    for (int total = lo; total <= hi; ++total) rec(rec, 0, total);
}

mpz_class factorialProduct(const Exponents& alpha) {
    mpz_class f = 1;
    for (int a : alpha)
        for (int j = 2; j <= a; ++j) f *= j;
    return f;
}

// Q_{z^alpha}(0, chi, tau): pulled straight from the coefficient table.
Series jetComponent(const NormalHypersurface& m, const Exponents& alpha,
                    bool tauZero) {
    const Series& q = m.q();
    const VarSpace& sp = q.space();
    GaussianRational scale{mpq_class(factorialProduct(alpha))};
    Series out(sp, std::max(q.order() - totalDegree(alpha), 0));
    for (const auto& [e, c] : q.terms()) {
        bool match = true;
        for (int j = 0; j < sp.n && match; ++j) match = e[sp.z(j)] == alpha[j];
        if (!match) continue;
        if (tauZero && e[sp.tau()] > 0) continue;
        Exponents rest(sp.dim(), 0);
        for (int j = 0; j < sp.n; ++j) rest[sp.chi(j)] = e[sp.chi(j)];
        rest[sp.tau()] = e[sp.tau()];
        out.addTerm(rest, c * scale);
    }
    return out;
}

std::vector<int> chiVars(const VarSpace& sp, bool withTau) {
    std::vector<int> v;
    for (int j = 0; j < sp.n; ++j) v.push_back(sp.chi(j));
    if (withTau) v.push_back(sp.tau());
    return v;
}

// Row-reduced basis of a rational vector span (one row per leading index),
// for ideal-membership tests.
class SpanBasis {
public:
    // Reduces v against the basis; returns true if a nonzero residual was
    // added (v was independent).
    bool add(std::vector<GaussianRational> v) {
        if (!reduce(v)) return false;
        size_t lead = leadIndex(v);
        GaussianRational inv = v[lead].inverse();
        for (size_t j = lead; j < v.size(); ++j) v[j] *= inv;
        rows_.emplace(lead, std::move(v));
        return true;
    }

    bool contains(std::vector<GaussianRational> v) const { return !reduce(v); }

    size_t size() const { return rows_.size(); }

private:
    static size_t leadIndex(const std::vector<GaussianRational>& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].isZero()) return j;
        return v.size();
    }
    // Returns true if a nonzero residual remains.
    bool reduce(std::vector<GaussianRational>& v) const {
        while (true) {
            size_t lead = leadIndex(v);
            if (lead == v.size()) return false;
            auto it = rows_.find(lead);
            if (it == rows_.end()) return true;
            GaussianRational factor = v[lead];
            for (size_t j = lead; j < v.size(); ++j)
                v[j] -= factor * it->second[j];
        }
    }
    std::map<size_t, std::vector<GaussianRational>> rows_;
};

int jetEscalationBound(const NormalHypersurface& m, int requested) {
    return std::min(requested, m.order());
}

}  // namespace

JetMap jetMap(const NormalHypersurface& m, JetVariant variant, int orderBound) {
    if (orderBound > m.order())
        throw std::invalid_argument("jet order exceeds truncation order");
    JetMap jm{variant, orderBound, {}, {}};
    int lo = variant == JetVariant::Full ? 0 : 1;
    enumerateMultiIndices(m.n(), lo, orderBound, jm.alphas);
    for (const auto& alpha : jm.alphas)
        jm.components.push_back(
            jetComponent(m, alpha, variant == JetVariant::TauZero));
    return jm;
}

Verdict isFiniteType(const NormalHypersurface& m) {
    Series slice = m.qSlice(QSlice::TauZero);
    if (!slice.isZero())
        return Verdict::proved("Q(z,chi,0) contains " + slice.leadingTermString());
    return Verdict::unknownUpTo(m.order(), "infinite type up to truncation");
}

namespace {

Verdict genericRankReaches(const NormalHypersurface& m, JetVariant variant,
                           int targetRank, int maxJetOrder, std::uint64_t seed) {
    int bound = jetEscalationBound(m, maxJetOrder);
    for (int k = 1; k <= bound; ++k) {
        JetMap jm = jetMap(m, variant, k);
        SeriesMatrix jac = jacobian(
            jm.components, chiVars(m.q().space(), variant == JetVariant::Full));
        RankResult rr = genericRank(jac, seed);
        if (rr.rank >= targetRank)
            return Verdict::proved("jet order " + std::to_string(k) + ", " +
                                       rr.witness,
                                   k);
    }
    return Verdict::unknownUpTo(bound, "generic rank below target at every jet order");
}

}  // namespace

Verdict isHolomorphicallyNondegenerate(const NormalHypersurface& m,
                                       int maxJetOrder, std::uint64_t seed) {
    return genericRankReaches(m, JetVariant::Full, m.n() + 1, maxJetOrder, seed);
}

Verdict isClassC(const NormalHypersurface& m, int maxJetOrder,
                 std::uint64_t seed) {
    return genericRankReaches(m, JetVariant::TauZero, m.n(), maxJetOrder, seed);
}

Verdict isEssentiallyFinite(const NormalHypersurface& m, int maxJetOrder) {
    const VarSpace& sp = m.q().space();
    const int n = m.n();
    int bound = jetEscalationBound(m, maxJetOrder);
    for (int k = 1; k <= bound; ++k) {
        JetMap jm = jetMap(m, JetVariant::TauZero, k);
        std::vector<Series> gens;
        for (const auto& h : jm.components)
            if (!h.isZero()) gens.push_back(h);
        if (gens.empty()) continue;
        for (int degree = 1; degree <= bound; ++degree) {
            // Monomial basis of chi-polynomials of total degree <= degree.
            std::vector<Exponents> gammas;
            enumerateMultiIndices(n, 0, degree, gammas);
            std::map<Exponents, size_t, GradedLex> indexOf;
            for (const auto& g : gammas) {
                Exponents e(sp.dim(), 0);
                for (int j = 0; j < n; ++j) e[sp.chi(j)] = g[j];
                indexOf.emplace(e, indexOf.size());
            }
            auto toVector = [&](const Series& s) {
                std::vector<GaussianRational> v(indexOf.size());
                for (const auto& [e, c] : s.terms()) {
                    auto it = indexOf.find(e);
                    if (it != indexOf.end()) v[it->second] = c;
                }
                return v;
            };
            SpanBasis basis;
            for (const auto& h : gens) {
                Series ht = h.truncated(std::min(degree, h.order()));
                for (const auto& g : gammas) {
                    // Soundness: h is only known up to h.order(), so the
                    // product h * chi^g is exact modulo degree only when
                    // |g| + h.order() covers the working degree.
                    if (totalDegree(g) + h.order() < degree) continue;
                    Series mono(sp, degree);
                    Exponents e(sp.dim(), 0);
                    for (int j = 0; j < n; ++j) e[sp.chi(j)] = g[j];
                    mono.addTerm(e, GaussianRational(1));
                    basis.add(toVector((ht * mono).truncated(degree)));
                }
            }
            std::vector<int> powerOf(n, 0);
            bool all = true;
            for (int j = 0; j < n && all; ++j) {
                for (int p = 1; p <= degree; ++p) {
                    Series mono(sp, degree);
                    Exponents e(sp.dim(), 0);
                    e[sp.chi(j)] = p;
                    mono.addTerm(e, GaussianRational(1));
                    if (basis.contains(toVector(mono))) {
                        powerOf[j] = p;
                        break;
                    }
                }
                all = powerOf[j] > 0;
            }
            if (all) {
                std::string witness = "jet order " + std::to_string(k) +
                                      ", ideal contains";
                for (int j = 0; j < n; ++j) {
                    witness += std::string(j ? "," : "") + " chi" +
                               std::to_string(j + 1) + "^" +
                               std::to_string(powerOf[j]);
                }
                return Verdict::proved(witness, k);
            }
        }
    }
    return Verdict::unknownUpTo(bound,
                                "no power-membership certificate found");
}

Verdict isFinitelyNondegenerate(const NormalHypersurface& m, int maxJetOrder) {
    const Series& q = m.q();
    const VarSpace& sp = q.space();
    const int n = m.n();
    int bound = jetEscalationBound(m, maxJetOrder);
    for (int k = 1; k <= bound; ++k) {
        std::vector<Exponents> alphas;
        enumerateMultiIndices(n, 0, k, alphas);
        // Entry (j, alpha): coefficient of z^alpha * chi_j in Q, times alpha!.
        std::vector<std::vector<GaussianRational>> matrix(
            n, std::vector<GaussianRational>(alphas.size()));
        for (size_t a = 0; a < alphas.size(); ++a) {
            GaussianRational scale{mpq_class(factorialProduct(alphas[a]))};
            for (int j = 0; j < n; ++j) {
                Exponents e(sp.dim(), 0);
                for (int l = 0; l < n; ++l) e[sp.z(l)] = alphas[a][l];
                e[sp.chi(j)] = 1;
                matrix[j][a] = q.coefficient(e) * scale;
            }
        }
        std::vector<int> pr, pc;
        if (constantRank(matrix, &pr, &pc) == n)
            return Verdict::proved("rank n at jet order " + std::to_string(k), k);
    }
    return Verdict::unknownUpTo(
        bound, "mixed-derivative matrix rank below n at every jet order");
}

ClassificationReport classify(const NormalHypersurface& m, std::uint64_t seed) {
    const int bound = std::min(m.order(), 6);
    ClassificationReport rep{
        isFiniteType(m),
        isHolomorphicallyNondegenerate(m, bound, seed),
        isClassC(m, bound, seed),
        isEssentiallyFinite(m, bound),
        isFinitelyNondegenerate(m, bound),
    };
    auto implies = [](const Verdict& a, const Verdict& b, const char* what) {
        if (a.isProved() && !b.isProved())
            throw std::logic_error(std::string("classification chain violated: ") +
                                   what + " (" + a.str() + " vs " + b.str() + ")");
    };
    implies(rep.finNondeg, rep.essFinite, "finite nondegeneracy => essential finiteness");
    implies(rep.essFinite, rep.classC, "essential finiteness => class C");
    implies(rep.classC, rep.holNondeg, "class C => holomorphic nondegeneracy");
    return rep;
}

MnrsResult observationMnrs(const NormalHypersurface& m) {
    if (m.n() != 1)
        throw std::domain_error("observationMnrs requires CR dimension 1");
    Verdict reality = m.validateReality();
    if (!reality.isProved())
        throw std::domain_error("observationMnrs refused: " + reality.str());
    Series slice = m.qSlice(QSlice::TauZero);
    if (slice.isZero())
        throw std::domain_error("observationMnrs: infinite type up to truncation");

    const VarSpace& sp = slice.space();
    const int zi = sp.z(0), ci = sp.chi(0);
    MnrsResult res;
    int minChi = -1, minZ = -1;
    for (const auto& [e, c] : slice.terms()) {
        if (minChi < 0 || e[ci] < minChi) minChi = e[ci];
        if (minZ < 0 || e[zi] < minZ) minZ = e[zi];
    }
    int rMin = -1, sMin = -1;
    for (const auto& [e, c] : slice.terms()) {
        if (e[ci] == minChi && (rMin < 0 || e[zi] < rMin)) rMin = e[zi];
        if (e[zi] == minZ && (sMin < 0 || e[ci] < sMin)) sMin = e[ci];
    }
    res.m = minChi;
    res.r = rMin;
    res.n = minZ;
    res.s = sMin;
    if (res.m == res.n && res.r == res.s)
        res.verdict = Verdict::proved(
            "m = n = " + std::to_string(res.m) + ", r = s = " + std::to_string(res.r));
    else
        res.verdict = Verdict::refuted(
            "(m,r) = (" + std::to_string(res.m) + "," + std::to_string(res.r) +
            ") vs (n,s) = (" + std::to_string(res.n) + "," + std::to_string(res.s) + ")");
    return res;
}

}  // namespace segre
