#include "segre/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace segre {

int VarSpace::conjugateIndex(int idx, bool swapWTau) const {
    if (idx < n) return chi(idx);
    if (isChi(idx)) return z(idx - n - 1);
    if (!swapWTau) return idx;
    return idx == w() ? tau() : w();
}

std::string VarSpace::name(int idx) const {
    if (idx < n) return n == 1 ? "z" : "z" + std::to_string(idx + 1);
    if (idx == w()) return "w";
    if (isChi(idx))
        return n == 1 ? "chi" : "chi" + std::to_string(idx - n);
    return "tau";
}

int VarSpace::indexOf(std::string_view s) const {
    if (s == "w") return w();
    if (s == "tau") return tau();
    if (n == 1) {
        if (s == "z") return z(0);
        if (s == "chi") return chi(0);
    }
    auto numbered = [&](std::string_view prefix) -> int {
        if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return -1;
        int j = 0;
        for (char c : s.substr(prefix.size())) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
            j = j * 10 + (c - '0');
        }
        return (j >= 1 && j <= n) ? j : -1;
    };
    if (int j = numbered("chi"); j > 0) return chi(j - 1);
    if (int j = numbered("z"); j > 0) return z(j - 1);
    return -1;
}

int totalDegree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool gradedLexLess(const Exponents& a, const Exponents& b) {
    int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    return a > b;  // z-heavy monomials first within a degree
}

Series::Series(VarSpace space, int order) : space_(space), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

Series Series::constant(const VarSpace& space, int order, GaussianRational c) {
    Series s(space, order);
    s.addTerm(Exponents(space.dim(), 0), c);
    return s;
}

Series Series::variable(const VarSpace& space, int order, int varIdx) {
    Series s(space, order);
    Exponents e(space.dim(), 0);
    e[varIdx] = 1;
    s.addTerm(e, GaussianRational(1));
    return s;
}

GaussianRational Series::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational Series::constantTerm() const {
    return coefficient(Exponents(space_.dim(), 0));
}

void Series::addTerm(const Exponents& e, const GaussianRational& c) {
    if (c.isZero() || totalDegree(e) > order_) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Series Series::truncated(int newOrder) const {
    Series out(space_, newOrder);
    for (const auto& [e, c] : terms_) out.addTerm(e, c);
    return out;
}

namespace {

void requireSameSpace(const Series& a, const Series& b) {
    if (!(a.space() == b.space()))
        throw std::invalid_argument("series variable spaces differ");
}

}  // namespace

Series Series::operator+(const Series& o) const {
    requireSameSpace(*this, o);
    Series out(space_, std::min(order_, o.order_));
    for (const auto& [e, c] : terms_) out.addTerm(e, c);
    for (const auto& [e, c] : o.terms_) out.addTerm(e, c);
    return out;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
    Series out(space_, order_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Series Series::scaled(const GaussianRational& c) const {
    Series out(space_, order_);
    if (c.isZero()) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

Series Series::operator*(const Series& o) const {
    requireSameSpace(*this, o);
    Series out(space_, std::min(order_, o.order_));
    // Grouped by degree so products past the truncation bound are skipped.
    for (const auto& [ea, ca] : terms_) {
        int da = totalDegree(ea);
        if (da > out.order_) break;
        for (const auto& [eb, cb] : o.terms_) {
            if (da + totalDegree(eb) > out.order_) break;
            Exponents e(ea);
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            out.addTerm(e, ca * cb);
        }
    }
    return out;
}

Series Series::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative series power");
    Series acc = Series::constant(space_, order_, GaussianRational(1));
    for (int j = 0; j < k; ++j) {
        acc = acc * *this;
        if (acc.isZero()) break;
    }
    return acc;
}

Series Series::derive(int varIdx) const {
    if (varIdx < 0 || varIdx >= space_.dim())
        throw std::invalid_argument("derive: variable outside space");
    Series out(space_, std::max(order_ - 1, 0));
    for (const auto& [e, c] : terms_) {
        if (e[varIdx] == 0) continue;
        Exponents d(e);
        --d[varIdx];
        out.addTerm(d, c * GaussianRational(e[varIdx]));
    }
    return out;
}

Series Series::substitute(const std::map<int, Series>& bindings) const {
    int outOrder = order_;
    for (const auto& [v, s] : bindings) {
        if (v < 0 || v >= space_.dim())
            throw std::invalid_argument("substitute: variable outside space");
        requireSameSpace(*this, s);
        if (!s.constantTerm().isZero() && dependsOn(v))
            throw std::invalid_argument(
                "substitute: binding for " + space_.name(v) +
                " has a nonzero constant term");
        if (dependsOn(v)) outOrder = std::min(outOrder, s.order());
    }
    // Precompute binding powers up to the degree actually used.
    std::map<int, std::vector<Series>> powers;  // powers[v][k] = binding^k
    for (const auto& [v, s] : bindings) {
        int maxDeg = maxDegreeOf(v);
        if (maxDeg == 0) continue;
        std::vector<Series> p;
        p.push_back(Series::constant(space_, outOrder, GaussianRational(1)));
        for (int k = 1; k <= maxDeg; ++k) p.push_back(p.back() * s);
        powers.emplace(v, std::move(p));
    }
    Series out(space_, outOrder);
    for (const auto& [e, c] : terms_) {
        Exponents freePart(e);
        Series factor = Series::constant(space_, outOrder, c);
        bool dead = false;
        for (const auto& [v, p] : powers) {
            if (e[v] == 0) continue;
            factor = factor * p[e[v]];
            freePart[v] = 0;
            if (factor.isZero()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        if (totalDegree(freePart) > 0) {
            Series mono(space_, outOrder);
            mono.addTerm(freePart, GaussianRational(1));
            factor = factor * mono;
        }
        out = out + factor;
    }
    return out;
}

Series Series::invertUnit() const {
    GaussianRational c = constantTerm();
    if (c.isZero())
        throw std::domain_error("invertUnit: zero constant term");
    // a = c (1 + v);  a^{-1} = c^{-1} sum (-v)^k.
    Series v = scaled(c.inverse()) - Series::constant(space_, order_, GaussianRational(1));
    Series acc = Series::constant(space_, order_, GaussianRational(1));
    Series vp = acc;
    for (int k = 1; k <= order_; ++k) {
        vp = vp * (-v);
        if (vp.isZero()) break;
        acc = acc + vp;
    }
    return acc.scaled(c.inverse());
}

Series Series::conjugateBar(bool swapWTau) const {
    Series out(space_, order_);
    for (const auto& [e, c] : terms_) {
        Exponents m(space_.dim(), 0);
        for (int v = 0; v < space_.dim(); ++v)
            m[space_.conjugateIndex(v, swapWTau)] = e[v];
        out.addTerm(m, c.conjugate());
    }
    return out;
}

std::optional<int> Series::orderOfVanishing() const {
    if (terms_.empty()) return std::nullopt;
    return totalDegree(terms_.begin()->first);
}

std::pair<int, Series> Series::lowestHomogeneous() const {
    auto d = orderOfVanishing();
    if (!d) throw std::domain_error("lowestHomogeneous: zero series");
    Series out(space_, order_);
    for (const auto& [e, c] : terms_) {
        if (totalDegree(e) > *d) break;
        out.addTerm(e, c);
    }
    return {*d, out};
}

GaussianRational Series::evaluate(const std::vector<GaussianRational>& point) const {
    if (static_cast<int>(point.size()) != space_.dim())
        throw std::invalid_argument("evaluate: wrong point dimension");
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (int v = 0; v < space_.dim(); ++v)
            for (int k = 0; k < e[v]; ++k) t *= point[v];
        sum += t;
    }
    return sum;
}

int Series::maxDegreeOf(int varIdx) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[varIdx]);
    return m;
}

bool Series::isConstant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && totalDegree(terms_.begin()->first) == 0);
}

std::string monomialString(const VarSpace& space, const Exponents& e) {
    std::string s;
    for (int v = 0; v < space.dim(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += space.name(v);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

namespace {

std::string termString(const VarSpace& space, const Exponents& e,
                       const GaussianRational& c) {
    std::string mono = monomialString(space, e);
    if (mono.empty()) {
        if (c.isReal() || c.re() == 0) return c.str();
        return "(" + c.str() + ")";
    }
    if (c.isOne()) return mono;
    if ((-c).isOne()) return "-" + mono;
    std::string coeff =
        (c.isReal() || c.re() == 0) ? c.str() : "(" + c.str() + ")";
    return coeff + "*" + mono;
}

}  // namespace

std::string Series::leadingTermString() const {
    if (terms_.empty()) return "0";
    const auto& [e, c] = *terms_.begin();
    return termString(space_, e, c);
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string t = termString(space_, e, c);
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

bool Series::operator==(const Series& o) const {
    if (!(space_ == o.space_)) return false;
    int common = std::min(order_, o.order_);
    auto trim = [common](const Series& s) {
        Series::TermMap m;
        for (const auto& [e, c] : s.terms())
            if (totalDegree(e) <= common) m.emplace(e, c);
        return m;
    };
    return trim(*this) == trim(o);
}

Series elementary(Elementary fn, const Series& u) {
    if (!u.constantTerm().isZero())
        throw std::domain_error("elementary: argument has nonzero constant term");
    const int order = u.order();
    auto coefficientOf = [fn](int k) -> GaussianRational {
        mpq_class q;
        switch (fn) {
            case Elementary::Exp: {
                mpz_class fact = 1;
                for (int j = 2; j <= k; ++j) fact *= j;
                q = mpq_class(1, 1) / mpq_class(fact);
                break;
            }
            case Elementary::Sin: {
                if (k % 2 == 0) return {};
                mpz_class fact = 1;
                for (int j = 2; j <= k; ++j) fact *= j;
                q = mpq_class(((k - 1) / 2) % 2 == 0 ? 1 : -1) / mpq_class(fact);
                break;
            }
            case Elementary::Cos: {
                if (k % 2 == 1) return {};
                mpz_class fact = 1;
                for (int j = 2; j <= k; ++j) fact *= j;
                q = mpq_class((k / 2) % 2 == 0 ? 1 : -1) / mpq_class(fact);
                break;
            }
            case Elementary::Log1p: {
                if (k == 0) return {};
                q = mpq_class(k % 2 == 1 ? 1 : -1, k);
                break;
            }
        }
        q.canonicalize();
        return {q};
    };
    Series acc(u.space(), order);
    Series uk = Series::constant(u.space(), order, GaussianRational(1));
    for (int k = 0; k <= order; ++k) {
        GaussianRational c = coefficientOf(k);
        if (!c.isZero()) acc = acc + uk.scaled(c);
        uk = uk * u;
        if (uk.isZero()) break;
    }
    return acc;
}

}  // namespace segre
