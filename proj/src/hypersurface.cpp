#include "segre/hypersurface.hpp"

#include <algorithm>

namespace segre {

namespace {

// First surviving monomial of a difference, for witness reporting.
std::string offendingTerm(const Series& s) { return s.leadingTermString(); }

std::map<int, Series> zeroBindings(const VarSpace& sp, int order, bool zBlock) {
    std::map<int, Series> b;
    for (int j = 0; j < sp.n; ++j)
        b.emplace(zBlock ? sp.z(j) : sp.chi(j), Series(sp, order));
    return b;
}

}  // namespace

NormalHypersurface::NormalHypersurface(int n, Series q)
    : n_(n), q_(std::move(q)) {
    if (n < 1) throw std::invalid_argument("CR dimension must be >= 1");
    if (q_.space().n != n)
        throw std::invalid_argument("Q lives in the wrong variable space");
    if (q_.dependsOn(q_.space().w()))
        throw std::invalid_argument("Q must not depend on w");
}

Series NormalHypersurface::qSlice(QSlice which) const {
    const VarSpace& sp = q_.space();
    std::map<int, Series> b;
    if (which == QSlice::ChiZero || which == QSlice::Both)
        b.merge(zeroBindings(sp, q_.order(), /*zBlock=*/false));
    if (which == QSlice::TauZero || which == QSlice::Both)
        b.emplace(sp.tau(), Series(sp, q_.order()));
    return q_.substitute(b);
}

Verdict NormalHypersurface::validateNormal() const {
    const VarSpace& sp = q_.space();
    Series tauVar = Series::variable(sp, q_.order(), sp.tau());
    Series atChi0 = qSlice(QSlice::ChiZero);
    if (atChi0 != tauVar)
        return Verdict::refuted("Q(z,0,tau) - tau contains " +
                                offendingTerm(atChi0 - tauVar));
    Series atZ0 = q_.substitute(zeroBindings(sp, q_.order(), /*zBlock=*/true));
    if (atZ0 != tauVar)
        return Verdict::refuted("Q(0,chi,tau) - tau contains " +
                                offendingTerm(atZ0 - tauVar));
    return Verdict::proved("Q(0,chi,tau) = Q(z,0,tau) = tau", q_.order());
}

Verdict NormalHypersurface::validateReality() const {
    const VarSpace& sp = q_.space();
    Series qbar = qBar();
    Series qbarAtW0 = qbar.substitute({{sp.w(), Series(sp, q_.order())}});
    Series cited = q_.substitute({{sp.tau(), qbarAtW0}});
    if (!cited.isZero())
        return Verdict::refuted("Q(z,chi,Qbar(chi,z,0)) contains " +
                                offendingTerm(cited));
    Series involution = q_.substitute({{sp.tau(), qbar}});
    Series wVar = Series::variable(sp, involution.order(), sp.w());
    if (involution != wVar)
        return Verdict::refuted("Q(z,chi,Qbar(chi,z,w)) - w contains " +
                                offendingTerm(involution - wVar));
    return Verdict::proved("reality identities hold", q_.order());
}

RealDefiningFunction::RealDefiningFunction(int n, Series phi)
    : n_(n), phi_(std::move(phi)) {
    if (phi_.space().n != n)
        throw std::invalid_argument("phi lives in the wrong variable space");
    if (phi_.dependsOn(phi_.space().tau()))
        throw std::invalid_argument("phi must use only z, chi and s");
}

Verdict RealDefiningFunction::validate() const {
    if (!phi_.constantTerm().isZero())
        return Verdict::refuted("phi has constant term " +
                                phi_.constantTerm().str());
    Series mirrored = phi_.conjugateBar(/*swapWTau=*/false);
    if (mirrored != phi_)
        return Verdict::refuted("phi not real: difference contains " +
                                (mirrored - phi_).leadingTermString());
    return Verdict::proved("phi real with zero constant term", phi_.order());
}

NormalHypersurface complexify(const RealDefiningFunction& f) {
    const Series& phi = f.phi();
    const VarSpace& sp = phi.space();
    const int order = phi.order();
    const GaussianRational half = GaussianRational::fraction(1, 2);
    const GaussianRational twoI = GaussianRational(2) * GaussianRational::i();

    Series tauVar = Series::variable(sp, order, sp.tau());
    Series current = tauVar;
    for (int it = 0; it < order + 2; ++it) {
        Series reW = (current + tauVar).scaled(half);
        Series next = tauVar + phi.substitute({{sp.w(), reW}}).scaled(twoI);
        if (next == current) return {sp.n, next};
        current = next;
    }
    // Diagnose: the lowest degree still moving between the last two iterates.
    Series reW = (current + tauVar).scaled(half);
    Series next = tauVar + phi.substitute({{sp.w(), reW}}).scaled(twoI);
    int degree = (next - current).orderOfVanishing().value_or(order + 1);
    throw ComplexifyError(
        "complexify: fixed-point iteration failed to stabilize at total degree " +
            std::to_string(degree),
        degree);
}

}  // namespace segre
