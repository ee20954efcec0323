#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "segre/corpus.hpp"
#include "segre/invariants.hpp"
#include "segre/maps.hpp"

using namespace segre;
namespace st = segre::testing;

namespace {

constexpr int kOrder = 8;

/// Applies the reality symmetry to a polynomial in (z, chi, s): conjugate
/// every coefficient while swapping the z and chi exponent blocks (the s
/// exponent, stored in the w slot, stays put).
Series swapConjugate(const Series& p) {
    const VarSpace& sp = p.space();
    Series out(sp, p.order());
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        for (int j = 0; j < sp.n; ++j) std::swap(d[sp.z(j)], d[sp.chi(j)]);
        out.addTerm(d, c.conjugate());
    }
    return out;
}

/// Random real defining function with a guaranteed z1*chi1 term (so the
/// complexified surface has finite type) plus mixed higher-order noise.
RealDefiningFunction randomRealPhi(std::mt19937_64& rng, int n) {
    VarSpace sp{n};
    Series p(sp, kOrder);
    std::uniform_int_distribution<int> termCount(0, 4), zdeg(1, 2),
        sdeg(0, 2), var(0, n - 1);
    int k = termCount(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(sp.dim(), 0);
        int dz = zdeg(rng), dchi = zdeg(rng);
        if (dz + dchi < 3) ++dchi;  // keep the noise above degree 2
        for (int j = 0; j < dz; ++j) ++e[sp.z(var(rng))];
        for (int j = 0; j < dchi; ++j) ++e[sp.chi(var(rng))];
        e[sp.w()] = sdeg(rng);
        p.addTerm(e, st::randomScalar(rng));
    }
    Series phi = p + swapConjugate(p);
    Exponents mixed(sp.dim(), 0);
    mixed[sp.z(0)] = 1;
    mixed[sp.chi(0)] = 1;
    phi.addTerm(mixed, GaussianRational(1));
    return {n, phi};
}

SegreMap identityMap(int n, int order) {
    VarSpace sp{n};
    std::vector<Series> f, ft;
    for (int j = 0; j < n; ++j) {
        f.push_back(Series::variable(sp, order, sp.z(j)));
        ft.push_back(Series::variable(sp, order, sp.chi(j)));
    }
    return {n, f, Series::variable(sp, order, sp.w()), ft,
            Series::variable(sp, order, sp.tau())};
}

SegreMap swappedMap(const SegreMap& h) {
    std::vector<Series> f, ft;
    for (const Series& c : h.ft()) f.push_back(c.conjugateBar());
    for (const Series& c : h.f()) ft.push_back(c.conjugateBar());
    return {h.n(), std::move(f), h.gt().conjugateBar(), std::move(ft),
            h.g().conjugateBar()};
}

/// Random polynomial supported on the given variables, zero constant term.
Series randomBlockPolynomial(std::mt19937_64& rng, const VarSpace& sp,
                             const std::vector<int>& vars, int order) {
    Series out(sp, order);
    std::uniform_int_distribution<int> termCount(1, 4), deg(1, 3),
        pick(0, static_cast<int>(vars.size()) - 1);
    int k = termCount(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(sp.dim(), 0);
        int d = deg(rng);
        for (int j = 0; j < d; ++j) ++e[vars[pick(rng)]];
        out.addTerm(e, st::randomScalar(rng));
    }
    return out;
}

}  // namespace

TEST_CASE("random real defining functions complexify to normal real surfaces") {
    std::mt19937_64 rng(11011);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 2;
        RealDefiningFunction phi = randomRealPhi(rng, n);
        REQUIRE(phi.validate().isProved());
        NormalHypersurface m = complexify(phi);
        CHECK(m.validateNormal().isProved());
        CHECK(m.validateReality().isProved());
        // classify() itself enforces the implication chain (it throws on any
        // violation), so running it is the property under test.
        ClassificationReport r = classify(m, trial);
        CHECK(r.finiteType.isProved());
        if (r.finNondeg.isProved()) CHECK(r.essFinite.isProved());
        if (r.essFinite.isProved()) CHECK(r.classC.isProved());
        if (r.classC.isProved()) CHECK(r.holNondeg.isProved());
    }
}

TEST_CASE("leading-exponent symmetry on random real surfaces in C^2") {
    std::mt19937_64 rng(22022);
    for (int trial = 0; trial < 200; ++trial) {
        NormalHypersurface m = complexify(randomRealPhi(rng, 1));
        MnrsResult r = observationMnrs(m);
        CHECK(r.verdict.isProved());
        CHECK(r.m == r.n);
        CHECK(r.r == r.s);
    }
}

TEST_CASE("scaling self-maps of the Lewy surface verify and stay rigid") {
    NormalHypersurface lewy(1, st::S("tau + 2*i*z*chi", 1, kOrder));
    std::mt19937_64 rng(33033);
    VarSpace sp{1};
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational a = st::randomNonzeroScalar(rng);
        GaussianRational at = st::randomNonzeroScalar(rng);
        SegreMap h(1,
                   {Series::variable(sp, kOrder, sp.z(0)).scaled(a)},
                   Series::variable(sp, kOrder, sp.w()).scaled(a * at),
                   {Series::variable(sp, kOrder, sp.chi(0)).scaled(at)},
                   Series::variable(sp, kOrder, sp.tau()).scaled(a * at));
        CHECK(verifyHspm(lewy, lewy, h).isProved());
        CHECK(isSegreTransversal(h).isProved());
        CHECK(segreNondegeneracy(h).kind == NondegKind::Total);
        DetRelation rel = detConjugateRelation(h);
        CHECK(rel.verdict.isProved());
        CHECK(rel.j0 == 0);
        CHECK(rel.k0 == 0);
        CHECK(rel.c == a * at.conjugate().inverse());
        OrderMatchResult om = orderMatch(h);
        CHECK(om.verdict.isProved());
        // The source and target are real, so the block-swapped conjugate map
        // is again a verified map between them.
        CHECK(verifyHspm(lewy, lewy, swappedMap(h)).isProved());
    }
}

TEST_CASE("identity maps on random real surfaces audit without contradiction") {
    std::mt19937_64 rng(44044);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 2;
        NormalHypersurface m = complexify(randomRealPhi(rng, n));
        SegreMap id = identityMap(n, m.order());
        AuditReport rep = audit(m, m, id, trial);  // throws on contradiction
        CHECK(rep.membership.isProved());
        for (const AuditEntry& e : rep.entries)
            CHECK(!(e.hypotheses.isProved() && e.conclusion.isRefuted()));
        // The swapped conjugate of the identity is the identity again, but
        // run the generic closure property anyway.
        CHECK(verifyHspm(m, m, swappedMap(id)).isProved());
    }
}

TEST_CASE("null maps into an infinite-type target are transversally null") {
    NormalHypersurface expTarget(1, st::S("tau * exp(i*z*chi)", 1, kOrder));
    std::mt19937_64 rng(55055);
    VarSpace sp{1};
    for (int trial = 0; trial < 200; ++trial) {
        NormalHypersurface m = complexify(randomRealPhi(rng, 1));
        Series f = randomBlockPolynomial(rng, sp, {sp.z(0), sp.w()}, kOrder);
        Series ft =
            randomBlockPolynomial(rng, sp, {sp.chi(0), sp.tau()}, kOrder);
        SegreMap h(1, {f}, Series(sp, kOrder), {ft}, Series(sp, kOrder));
        CHECK(verifyHspm(m, expTarget, h).isProved());
        CHECK(isTransversallyNull(h).isProved());
        if (trial % 10 == 0) {  // the audit is the expensive part
            AuditReport rep = audit(m, expTarget, h, trial);
            bool saw = false;
            for (const AuditEntry& e : rep.entries)
                if (e.name == "infinite-type-target-nullity") {
                    saw = true;
                    CHECK(e.hypotheses.isProved());
                    CHECK(e.conclusion.isProved());
                }
            CHECK(saw);
        }
    }
}

TEST_CASE("shipped corpus passes end to end") {
    std::vector<CorpusRun> runs = runCorpusDir(SEGRE_CORPUS_DIR, std::nullopt);
    CHECK(runs.size() >= 6);
    for (const CorpusRun& run : runs) {
        INFO(run.name);
        for (const CorpusCheck& c : run.checks) {
            INFO(c.key << ": expected " << c.expected << ", got " << c.actual);
            CHECK(c.pass);
        }
    }
}
