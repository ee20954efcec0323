#include "doctest.h"
#include "helpers.hpp"
#include "segre/maps.hpp"

using namespace segre;
namespace st = segre::testing;

namespace {

NormalHypersurface lewy() { return {1, st::S("tau + 2*i*z*chi")}; }

NormalHypersurface quadric2() { return {2, st::S("tau + 2*i*z1*chi1", 2)}; }

NormalHypersurface sphere2() {
    return {2, st::S("tau + 2*i*z1*chi1 + 2*i*z2*chi2", 2)};
}

SegreMap quadricMap() {
    return {2,
            {st::S("z2 + z1*z2", 2), st::S("-z2", 2)},
            st::S("2*w*z2", 2),
            {st::S("2*chi1", 2), st::S("2*chi1 + i*tau", 2)},
            Series(VarSpace{2}, 10)};
}

SegreMap lewyMap() {
    return {1,
            {st::S("2*z / (1 - 2*i*z)")},
            st::S("w / (1 - 2*i*z)"),
            {st::S("chi/2 + tau/2")},
            st::S("tau")};
}

SegreMap identityMap(int n) {
    VarSpace sp{n};
    std::vector<Series> f, ft;
    for (int j = 0; j < n; ++j) {
        f.push_back(Series::variable(sp, 10, sp.z(j)));
        ft.push_back(Series::variable(sp, 10, sp.chi(j)));
    }
    return {n, f, Series::variable(sp, 10, sp.w()), ft,
            Series::variable(sp, 10, sp.tau())};
}

}  // namespace

TEST_CASE("construction rejects broken block structure") {
    VarSpace sp{1};
    // f depending on chi breaks the split form.
    CHECK_THROWS_AS(SegreMap(1, {st::S("chi")}, st::S("w"), {st::S("chi")},
                             st::S("tau")),
                    std::invalid_argument);
    // Components must vanish at the origin.
    CHECK_THROWS_AS(SegreMap(1, {st::S("1 + z")}, st::S("w"), {st::S("chi")},
                             st::S("tau")),
                    std::invalid_argument);
}

TEST_CASE("membership identity on the quadric pair") {
    Verdict v = verifyHspm(quadric2(), sphere2(), quadricMap());
    CHECK(v.isProved());

    // Independent cofactor check: the residue before the graph substitution
    // equals 2 z2 (w - Q) exactly.
    VarSpace sp{2};
    const SegreMap h = quadricMap();
    std::map<int, Series> into;
    for (int j = 0; j < 2; ++j) {
        into.emplace(sp.z(j), h.f()[j]);
        into.emplace(sp.chi(j), h.ft()[j]);
    }
    into.emplace(sp.tau(), h.gt());
    Series residue = h.g() - sphere2().q().substitute(into);
    Series expected = st::S("2*z2", 2) * st::S("w - tau - 2*i*z1*chi1", 2);
    CHECK(residue == expected);
}

TEST_CASE("membership failures carry the first surviving monomial") {
    // The identity map is an HSPM from Lewy to itself but not into the
    // sphere-like rescaling below.
    NormalHypersurface scaled(1, st::S("tau + 4*i*z*chi"));
    CHECK(verifyHspm(lewy(), lewy(), identityMap(1)).isProved());
    Verdict v = verifyHspm(lewy(), scaled, identityMap(1));
    CHECK(v.isRefuted());
    CHECK(v.witness.find("z*chi") != std::string::npos);
}

TEST_CASE("normality consequences") {
    CHECK(normalityConsequences(lewyMap()).isProved());
    CHECK(normalityConsequences(quadricMap()).isProved());
    // g with a pure-z linear part violates g(z,0) = 0.
    SegreMap bad(1, {st::S("z")}, st::S("z + w"), {st::S("chi")},
                 st::S("tau"));
    CHECK(normalityConsequences(bad).isRefuted());
}

TEST_CASE("Segre transversality is exact") {
    Verdict v = isSegreTransversal(lewyMap());
    CHECK(v.isProved());
    CHECK(v.witness.find("g_w(0) = 1") != std::string::npos);
    CHECK(isSegreTransversal(quadricMap()).isRefuted());
    SegreMap squares(1, {st::S("2*z")}, st::S("w^2"), {st::S("chi")},
                     st::S("tau^2"));
    CHECK(isSegreTransversal(squares).isRefuted());
}

TEST_CASE("Segre nondegeneracy kinds with exact determinants") {
    NondegResult quadric = segreNondegeneracy(quadricMap());
    CHECK(quadric.kind == NondegKind::Partial);
    CHECK(quadric.detFz == st::S("-z2", 2, 9));
    CHECK(quadric.detFtChi.isZero());

    NondegResult lewyKind = segreNondegeneracy(lewyMap());
    CHECK(lewyKind.kind == NondegKind::Total);
    CHECK(lewyKind.detFz == st::S("2 / (1 - 2*i*z)^2", 1, 9));
    CHECK(lewyKind.detFtChi == st::S("1/2", 1, 9));

    SegreMap degenerate(2, {st::S("z1^2", 2), st::S("2*z1", 2)},
                        st::S("w^2", 2),
                        {st::S("2*i*chi1^2", 2), st::S("chi1*tau", 2)},
                        st::S("tau^2", 2));
    CHECK(segreNondegeneracy(degenerate).kind == NondegKind::Neither);
    CHECK(segreNondegeneracy(identityMap(2)).kind == NondegKind::Total);
}

TEST_CASE("transversal nullity") {
    VarSpace sp{1};
    SegreMap null(1, {st::S("z^2")}, Series(sp, 10), {st::S("chi")},
                  Series(sp, 10));
    CHECK(isTransversallyNull(null).isProved());
    Verdict v = isTransversallyNull(quadricMap());
    CHECK(v.isRefuted());
    CHECK(v.witness.find("2*z2*w") != std::string::npos);
}

TEST_CASE("mapping the whole space into the target") {
    NormalHypersurface expTarget(1, st::S("tau * exp(i*z*chi)"));
    VarSpace sp{1};
    SegreMap null(1, {st::S("z")}, Series(sp, 10), {st::S("chi")},
                  Series(sp, 10));
    CHECK(mapsIntoTarget(expTarget, null).isProved());
    CHECK(mapsIntoTarget(lewy(), null).isRefuted());
    SegreMap zero(1, {Series(sp, 10)}, Series(sp, 10), {Series(sp, 10)},
                  Series(sp, 10));
    CHECK(mapsIntoTarget(lewy(), zero).isProved());
}

TEST_CASE("determinant conjugate proportionality") {
    DetRelation rel = detConjugateRelation(lewyMap());
    CHECK(rel.verdict.isProved());
    CHECK(rel.j0 == 0);
    CHECK(rel.k0 == 0);
    CHECK(rel.c == GaussianRational(4));

    DetRelation id = detConjugateRelation(identityMap(2));
    CHECK(id.verdict.isProved());
    CHECK(id.c == GaussianRational(1));

    CHECK_THROWS_AS(detConjugateRelation(quadricMap()), std::domain_error);
}

TEST_CASE("order-of-vanishing comparison in dimension one") {
    OrderMatchResult om = orderMatch(lewyMap());
    CHECK(om.verdict.isProved());
    CHECK(om.fOrder == 1);
    CHECK(om.ftOrder == 1);

    SegreMap mismatch(1, {st::S("z^2")}, st::S("w"), {st::S("chi^3")},
                      st::S("tau"));
    OrderMatchResult bad = orderMatch(mismatch);
    CHECK(bad.verdict.isRefuted());
    CHECK(bad.fOrder == 2);
    CHECK(bad.ftOrder == 3);

    CHECK_THROWS_AS(orderMatch(quadricMap()), std::domain_error);
}

TEST_CASE("Jacobian ranks") {
    CHECK(jacobianRankAt0(lewyMap()) == 4);
    CHECK(jacobianRankAt0(identityMap(2)) == 6);
    RankResult full = jacobianGenericRank(lewyMap());
    CHECK(full.rank == 4);
    SegreMap degenerate(2, {st::S("z1^2", 2), st::S("2*z1", 2)},
                        st::S("w^2", 2),
                        {st::S("2*i*chi1^2", 2), st::S("chi1*tau", 2)},
                        st::S("tau^2", 2));
    RankResult r = jacobianGenericRank(degenerate);
    CHECK(r.rank == 4);
    CHECK(r.upperCertified);
    CHECK(jacobianRankAt0(degenerate) == 1);
}

TEST_CASE("audit on the Lewy self-map confirms every entry") {
    AuditReport rep = audit(lewy(), lewy(), lewyMap());
    CHECK(rep.membership.isProved());
    bool sawEquivalence = false;
    for (const AuditEntry& e : rep.entries) {
        CHECK(!(e.hypotheses.isProved() && e.conclusion.isRefuted()));
        if (e.name == "dimension-one-equivalence") {
            sawEquivalence = true;
            CHECK(e.hypotheses.isProved());
            CHECK(e.conclusion.isProved());
        }
        if (e.name == "finite-nondegeneracy-dichotomy") {
            CHECK(e.branch == "(ii)");
        }
    }
    CHECK(sawEquivalence);
}

TEST_CASE("audit rejects a non-member map") {
    NormalHypersurface scaled(1, st::S("tau + 4*i*z*chi"));
    CHECK_THROWS_AS(audit(lewy(), scaled, identityMap(1)),
                    std::invalid_argument);
}
