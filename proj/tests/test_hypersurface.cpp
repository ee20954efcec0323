#include "doctest.h"
#include "helpers.hpp"
#include "segre/hypersurface.hpp"

using namespace segre;
namespace st = segre::testing;

TEST_CASE("normality validation") {
    NormalHypersurface lewy(1, st::S("tau + 2*i*z*chi"));
    CHECK(lewy.validateNormal().isProved());
    CHECK(lewy.validateReality().isProved());

    // Q(z,0,tau) != tau: a pure-z term survives the chi := 0 slice.
    NormalHypersurface bad(1, st::S("tau + z^2 + 2*i*z*chi"));
    Verdict v = bad.validateNormal();
    CHECK(v.isRefuted());
    CHECK(v.witness.find("z^2") != std::string::npos);

    CHECK_THROWS_AS(NormalHypersurface(1, st::S("w + tau")),
                    std::invalid_argument);
}

TEST_CASE("reality check flags a non-real surface") {
    // tau + z*chi^2 is not invariant under coefficient conjugation with the
    // block swap, so it defines no real hypersurface.
    NormalHypersurface m(1, st::S("tau + z*chi^2"));
    CHECK(m.validateNormal().isProved());
    CHECK(m.validateReality().isRefuted());
}

TEST_CASE("complexification of Im w = |z|^2") {
    VarSpace sp{1};
    RealDefiningFunction phi(1, st::S("z*chi", 1));
    CHECK(phi.validate().isProved());
    NormalHypersurface m = complexify(phi);
    CHECK(m.q() == st::S("tau + 2*i*z*chi"));
}

TEST_CASE("complexification matching the exponential closed form") {
    // Im w = Re(w) sin|z|^2 / (cos|z|^2 + 1) complexifies to
    // w = tau * exp(i z chi); the right side of the defining equation is
    // s * tan(|z|^2 / 2).
    const int K = 12;
    Series u = st::S("z*chi", 1, K);
    Series s = Series::variable(VarSpace{1}, K, VarSpace{1}.w());
    Series phiExpr = s * elementary(Elementary::Sin, u) *
                     (elementary(Elementary::Cos, u) +
                      Series::constant(VarSpace{1}, K, GaussianRational(1)))
                         .invertUnit();
    RealDefiningFunction phi(1, phiExpr);
    CHECK(phi.validate().isProved());
    NormalHypersurface m = complexify(phi);

    // Independent Maclaurin oracle for tau * exp(i z chi).
    VarSpace sp{1};
    Series oracle(sp, K);
    GaussianRational coef(1);
    for (int k = 0; 2 * k + 1 <= K; ++k) {
        Exponents e(sp.dim(), 0);
        e[sp.z(0)] = k;
        e[sp.chi(0)] = k;
        e[sp.tau()] = 1;
        oracle.addTerm(e, coef);
        coef = coef * GaussianRational::i() *
               GaussianRational(1) / GaussianRational(k + 1);
    }
    CHECK(m.q() == oracle);
    CHECK(m.validateNormal().isProved());
    CHECK(m.validateReality().isProved());
}

TEST_CASE("complexification failure names the unstable degree") {
    // Im w = Re w has no graph form w = Q(z, chi, tau): the fixed-point
    // iteration keeps moving the degree-1 coefficient.
    RealDefiningFunction phi(1, st::S("w", 1));  // w slot holds s
    CHECK_THROWS_AS(complexify(phi), ComplexifyError);
    try {
        complexify(phi);
    } catch (const ComplexifyError& e) {
        CHECK(e.degree == 1);
    }
}

TEST_CASE("qSlice selects the advertised restrictions") {
    NormalHypersurface m(2, st::S("tau + 2*i*z1*chi1 + 2*i*z2*chi2*tau", 2));
    CHECK(m.qSlice(QSlice::TauZero) == st::S("2*i*z1*chi1", 2));
    CHECK(m.qSlice(QSlice::ChiZero) == st::S("tau", 2));
    CHECK(m.qSlice(QSlice::Both).isZero());
}
