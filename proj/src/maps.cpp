#include "segre/maps.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace segre {

namespace {

void requireBlock(const Series& s, bool zwBlock, const std::string& label) {
    const VarSpace& sp = s.space();
    for (int j = 0; j < sp.n; ++j) {
        int foreign = zwBlock ? sp.chi(j) : sp.z(j);
        if (s.dependsOn(foreign))
            throw std::invalid_argument(label + " must not depend on " +
                                        sp.name(foreign));
    }
    int foreign = zwBlock ? sp.tau() : sp.w();
    if (s.dependsOn(foreign))
        throw std::invalid_argument(label + " must not depend on " +
                                    sp.name(foreign));
}

std::map<int, Series> zeroAt(const VarSpace& sp, int order,
                             const std::vector<int>& vars) {
    std::map<int, Series> b;
    for (int v : vars) b.emplace(v, Series(sp, order));
    return b;
}

std::vector<int> zVars(const VarSpace& sp) {
    std::vector<int> v;
    for (int j = 0; j < sp.n; ++j) v.push_back(sp.z(j));
    return v;
}

std::vector<int> chiVars(const VarSpace& sp) {
    std::vector<int> v;
    for (int j = 0; j < sp.n; ++j) v.push_back(sp.chi(j));
    return v;
}

// det f_z(z,0) (tilde = false) or det ft_chi(chi,0) (tilde = true).
Series restrictedJacobianDet(const SegreMap& h, bool tilde) {
    const VarSpace& sp = h.space();
    const std::vector<Series>& comps = tilde ? h.ft() : h.f();
    SeriesMatrix j = jacobian(comps, tilde ? chiVars(sp) : zVars(sp));
    std::map<int, Series> atZero =
        zeroAt(sp, j.at(0, 0).order(), {tilde ? sp.tau() : sp.w()});
    for (int r = 0; r < j.rows(); ++r)
        for (int c = 0; c < j.cols(); ++c)
            j.at(r, c) = j.at(r, c).substitute(atZero);
    return determinant(j);
}

struct LabeledVerdict {
    std::string label;
    Verdict verdict;
};

Verdict allOf(const std::vector<LabeledVerdict>& parts) {
    for (const auto& p : parts)
        if (p.verdict.isRefuted())
            return Verdict::refuted(p.label + ": " + p.verdict.witness,
                                    p.verdict.order);
    int order = 0;
    std::string pendingNote;
    bool pending = false;
    std::string witness;
    for (const auto& p : parts) {
        order = std::max(order, p.verdict.order);
        if (p.verdict.isUnknown()) {
            pending = true;
            if (pendingNote.empty())
                pendingNote = p.label + " undecided" +
                              (p.verdict.witness.empty()
                                   ? ""
                                   : " (" + p.verdict.witness + ")");
        } else {
            if (!witness.empty()) witness += "; ";
            witness += p.label + ": " + p.verdict.witness;
        }
    }
    if (pending) return Verdict::unknownUpTo(order, pendingNote);
    return Verdict::proved(witness, order);
}

Verdict anyOf(const std::vector<LabeledVerdict>& parts) {
    for (const auto& p : parts)
        if (p.verdict.isProved())
            return Verdict::proved(p.label + ": " + p.verdict.witness,
                                   p.verdict.order);
    int order = 0;
    std::string witness;
    bool pending = false;
    for (const auto& p : parts) {
        order = std::max(order, p.verdict.order);
        if (p.verdict.isUnknown()) pending = true;
        if (!witness.empty()) witness += "; ";
        witness += p.label + ": " + statusName(p.verdict.status) +
                   (p.verdict.witness.empty() ? "" : " (" + p.verdict.witness + ")");
    }
    if (pending) return Verdict::unknownUpTo(order, witness);
    return Verdict::refuted(witness, order);
}

Verdict notOf(const Verdict& v) {
    if (v.isProved()) return Verdict::refuted(v.witness, v.order);
    if (v.isRefuted()) return Verdict::proved(v.witness, v.order);
    return v;
}

}  // namespace

SegreMap::SegreMap(int n, std::vector<Series> f, Series g,
                   std::vector<Series> ft, Series gt)
    : n_(n), f_(std::move(f)), g_(std::move(g)), ft_(std::move(ft)),
      gt_(std::move(gt)) {
    if (n < 1) throw std::invalid_argument("CR dimension must be >= 1");
    if (static_cast<int>(f_.size()) != n || static_cast<int>(ft_.size()) != n)
        throw std::invalid_argument("f and ft must each have n components");
    const VarSpace& sp = g_.space();
    if (sp.n != n) throw std::invalid_argument("map lives in the wrong space");
    auto check = [&](const Series& s, bool zw, const std::string& label) {
        if (s.space() != sp)
            throw std::invalid_argument(label + " lives in the wrong space");
        if (!s.constantTerm().isZero())
            throw std::invalid_argument(label + " does not vanish at the origin");
        requireBlock(s, zw, label);
    };
    for (int j = 0; j < n; ++j) {
        check(f_[j], true, "f" + std::to_string(j + 1));
        check(ft_[j], false, "ft" + std::to_string(j + 1));
    }
    check(g_, true, "g");
    check(gt_, false, "gt");
}

Verdict normalityConsequences(const SegreMap& h) {
    const VarSpace& sp = h.space();
    const int order = h.order();
    Series gAtW0 = h.g().substitute(zeroAt(sp, order, {sp.w()}));
    if (!gAtW0.isZero())
        return Verdict::refuted("g(z,0) contains " + gAtW0.leadingTermString(),
                                order);
    Series gtAtTau0 = h.gt().substitute(zeroAt(sp, order, {sp.tau()}));
    if (!gtAtTau0.isZero())
        return Verdict::refuted(
            "gt(chi,0) contains " + gtAtTau0.leadingTermString(), order);
    GaussianRational gw0 = h.g().derive(sp.w()).constantTerm();
    GaussianRational gtTau0 = h.gt().derive(sp.tau()).constantTerm();
    if (gw0 != gtTau0)
        return Verdict::refuted("g_w(0) = " + gw0.str() + " but gt_tau(0) = " +
                                gtTau0.str());
    return Verdict::proved("g(z,0) = 0, gt(chi,0) = 0, g_w(0) = gt_tau(0) = " +
                               gw0.str(),
                           order);
}

Verdict verifyHspm(const NormalHypersurface& m, const NormalHypersurface& mp,
                   const SegreMap& h) {
    if (m.n() != h.n() || mp.n() != h.n())
        throw std::invalid_argument("CR dimensions of M, M' and H must agree");
    const VarSpace& sp = h.space();
    std::map<int, Series> intoTarget;
    for (int j = 0; j < h.n(); ++j) {
        intoTarget.emplace(sp.z(j), h.f()[j]);
        intoTarget.emplace(sp.chi(j), h.ft()[j]);
    }
    intoTarget.emplace(sp.tau(), h.gt());
    Series composed = mp.q().substitute(intoTarget);
    Series r = h.g() - composed;
    Series onGraph = r.substitute({{sp.w(), m.q()}});
    if (onGraph.isZero())
        return Verdict::proved("g - Q'(f,ft,gt) vanishes on the graph w = Q",
                               onGraph.order());
    return Verdict::refuted("residue on the graph contains " +
                                onGraph.leadingTermString(),
                            onGraph.order());
}

Verdict isSegreTransversal(const SegreMap& h) {
    const VarSpace& sp = h.space();
    GaussianRational gw0 = h.g().derive(sp.w()).constantTerm();
    GaussianRational gtTau0 = h.gt().derive(sp.tau()).constantTerm();
    std::string witness = "g_w(0) = " + gw0.str();
    if (gw0 != gtTau0)
        witness += " (violates g_w(0) = gt_tau(0); gt_tau(0) = " +
                   gtTau0.str() + ")";
    return gw0.isZero() ? Verdict::refuted(witness)
                        : Verdict::proved(witness);
}

std::string nondegKindName(NondegKind k) {
    switch (k) {
        case NondegKind::Total: return "total";
        case NondegKind::Partial: return "partial";
        case NondegKind::Neither: return "neither";
    }
    return "?";
}

NondegResult segreNondegeneracy(const SegreMap& h) {
    Series detFz = restrictedJacobianDet(h, /*tilde=*/false);
    Series detFt = restrictedJacobianDet(h, /*tilde=*/true);
    auto judge = [](const Series& det, const std::string& label) {
        if (det.isZero())
            return Verdict::unknownUpTo(det.order(),
                                        label + " vanishes up to truncation");
        return Verdict::proved(label + " contains " + det.leadingTermString(),
                               det.order());
    };
    Verdict fDet = judge(detFz, "det f_z(z,0)");
    Verdict ftDet = judge(detFt, "det ft_chi(chi,0)");
    int count = (fDet.isProved() ? 1 : 0) + (ftDet.isProved() ? 1 : 0);
    NondegKind kind = count == 2 ? NondegKind::Total
                      : count == 1 ? NondegKind::Partial
                                   : NondegKind::Neither;
    return {kind, std::move(fDet), std::move(ftDet), std::move(detFz),
            std::move(detFt)};
}

Verdict isTransversallyNull(const SegreMap& h) {
    if (!h.g().isZero())
        return Verdict::refuted("g contains " + h.g().leadingTermString(),
                                h.order());
    if (!h.gt().isZero())
        return Verdict::refuted("gt contains " + h.gt().leadingTermString(),
                                h.order());
    return Verdict::proved("g and gt vanish up to truncation", h.order());
}

Verdict mapsIntoTarget(const NormalHypersurface& mp, const SegreMap& h) {
    if (mp.n() != h.n())
        throw std::invalid_argument("CR dimensions of M' and H must agree");
    const VarSpace& sp = h.space();
    std::map<int, Series> b;
    for (int j = 0; j < h.n(); ++j) {
        b.emplace(sp.z(j), h.f()[j]);
        b.emplace(sp.chi(j), h.ft()[j]);
    }
    b.emplace(sp.tau(), Series(sp, h.order()));
    Series composed = mp.q().substitute(b);
    if (composed.isZero())
        return Verdict::proved("Q'(f, ft, 0) vanishes up to truncation",
                               composed.order());
    return Verdict::refuted("Q'(f, ft, 0) contains " +
                                composed.leadingTermString(),
                            composed.order());
}

DetRelation detConjugateRelation(const SegreMap& h) {
    Series detFz = restrictedJacobianDet(h, /*tilde=*/false);
    Series detFt = restrictedJacobianDet(h, /*tilde=*/true);
    if (detFz.isZero() || detFt.isZero())
        throw std::domain_error(
            "a restricted Jacobian determinant vanishes up to truncation");
    DetRelation rel;
    auto [j0, p] = detFz.lowestHomogeneous();
    auto [k0, q] = detFt.lowestHomogeneous();
    rel.j0 = j0;
    rel.k0 = k0;
    if (j0 != k0) {
        rel.verdict = Verdict::refuted(
            "vanishing orders differ: j0 = " + std::to_string(j0) +
            ", k0 = " + std::to_string(k0));
        return rel;
    }
    Series qbar = q.conjugateBar();
    const auto& lead = *p.terms().begin();
    GaussianRational qbarLead = qbar.coefficient(lead.first);
    if (qbarLead.isZero()) {
        rel.verdict = Verdict::refuted(
            "monomial " + monomialString(p.space(), lead.first) +
            " present in p_" + std::to_string(j0) + " but absent from bar q_" +
            std::to_string(k0));
        return rel;
    }
    rel.c = lead.second * qbarLead.inverse();
    Series diff = p - qbar.scaled(rel.c);
    if (!diff.isZero()) {
        rel.verdict = Verdict::refuted(
            "p_" + std::to_string(j0) + " - c*bar q_" + std::to_string(k0) +
            " contains " + diff.leadingTermString() + " with c = " + rel.c.str());
        return rel;
    }
    rel.verdict = Verdict::proved("j0 = k0 = " + std::to_string(j0) +
                                      ", c = " + rel.c.str(),
                                  detFz.order());
    return rel;
}

OrderMatchResult orderMatch(const SegreMap& h) {
    if (h.n() != 1)
        throw std::domain_error("order comparison is defined for CR dimension 1");
    const VarSpace& sp = h.space();
    OrderMatchResult res;
    Series fz0 = h.f()[0].substitute(zeroAt(sp, h.order(), {sp.w()}));
    Series ft0 = h.ft()[0].substitute(zeroAt(sp, h.order(), {sp.tau()}));
    res.fOrder = fz0.orderOfVanishing();
    res.ftOrder = ft0.orderOfVanishing();
    if (!res.fOrder || !res.ftOrder) {
        res.verdict = Verdict::unknownUpTo(
            h.order(), "a component vanishes up to truncation");
        return res;
    }
    std::string witness = "f(z,0) has order " + std::to_string(*res.fOrder) +
                          ", ft(chi,0) has order " +
                          std::to_string(*res.ftOrder);
    res.verdict = *res.fOrder == *res.ftOrder
                      ? Verdict::proved(witness, h.order())
                      : Verdict::refuted(witness, h.order());
    return res;
}

int jacobianRankAt0(const SegreMap& h) {
    const VarSpace& sp = h.space();
    std::vector<Series> comps = h.f();
    comps.push_back(h.g());
    for (const Series& s : h.ft()) comps.push_back(s);
    comps.push_back(h.gt());
    std::vector<std::vector<GaussianRational>> m(
        comps.size(), std::vector<GaussianRational>(sp.dim()));
    for (size_t r = 0; r < comps.size(); ++r)
        for (int c = 0; c < sp.dim(); ++c) {
            Exponents e(sp.dim(), 0);
            e[c] = 1;
            m[r][c] = comps[r].coefficient(e);
        }
    return constantRank(m);
}

RankResult jacobianGenericRank(const SegreMap& h, std::uint64_t seed) {
    const VarSpace& sp = h.space();
    std::vector<Series> zw = h.f();
    zw.push_back(h.g());
    std::vector<int> zwVars = zVars(sp);
    zwVars.push_back(sp.w());
    std::vector<Series> ct = h.ft();
    ct.push_back(h.gt());
    std::vector<int> ctVars = chiVars(sp);
    ctVars.push_back(sp.tau());
    RankResult a = genericRank(jacobian(zw, zwVars), seed);
    RankResult b = genericRank(jacobian(ct, ctVars), seed + 1);
    return {a.rank + b.rank, a.upperCertified && b.upperCertified,
            std::min(a.order, b.order),
            "(z,w) block rank " + std::to_string(a.rank) + " [" + a.witness +
                "]; (chi,tau) block rank " + std::to_string(b.rank) + " [" +
                b.witness + "]"};
}

AuditReport audit(const NormalHypersurface& m, const NormalHypersurface& mp,
                  const SegreMap& h, std::uint64_t seed) {
    AuditReport rep;
    rep.membership = verifyHspm(m, mp, h);
    if (!rep.membership.isProved())
        throw std::invalid_argument("audit requires a verified map: " +
                                    rep.membership.witness);
    rep.source = classify(m, seed);
    rep.target = classify(mp, seed);

    NondegResult nd = segreNondegeneracy(h);
    Verdict totalNd = allOf({{"det f_z(z,0) nonzero", nd.fDet},
                             {"det ft_chi(chi,0) nonzero", nd.ftDet}});
    Verdict transversal = isSegreTransversal(h);
    Verdict tnull = isTransversallyNull(h);
    Verdict intoTarget = mapsIntoTarget(mp, h);
    Verdict branchNull = allOf({{"transversally null", tnull},
                                {"maps into target", intoTarget}});

    RankResult jgen = jacobianGenericRank(h, seed);
    const int full = 2 * h.n() + 2;
    Verdict genFull =
        jgen.rank == full
            ? Verdict::proved(jgen.witness, jgen.order)
            : Verdict::unknownUpTo(jgen.order,
                                   "generic Jacobian rank " +
                                       std::to_string(jgen.rank) + " of " +
                                       std::to_string(full) +
                                       " up to truncation");
    int rank0 = jacobianRankAt0(h);
    Verdict rank0Full =
        rank0 == full
            ? Verdict::proved("Jacobian rank at 0 is " + std::to_string(full))
            : Verdict::refuted("Jacobian rank at 0 is " + std::to_string(rank0) +
                               " of " + std::to_string(full));

    GaussianRational detFz0 = nd.detFz.constantTerm();
    GaussianRational detFt0 = nd.detFtChi.constantTerm();
    auto exactNonzero = [](const GaussianRational& v, const std::string& label) {
        return v.isZero() ? Verdict::refuted(label + " = 0")
                          : Verdict::proved(label + " = " + v.str());
    };

    // Total nondegeneracy forces transversality when the target has finite
    // type.
    rep.entries.push_back(
        {"total-nondegeneracy-forces-transversality",
         allOf({{"target finite type", rep.target.finiteType},
                {"totally Segre nondegenerate", totalNd}}),
         transversal, "n/a"});

    auto dichotomy = [&](const std::string& name, const Verdict& hyp,
                         const Verdict& branchII) {
        Verdict concl = anyOf({{"(i)", branchNull}, {"(ii)", branchII}});
        std::string branch = branchNull.isProved() ? "(i)"
                             : branchII.isProved() ? "(ii)"
                                                   : "n/a";
        rep.entries.push_back({name, hyp, concl, branch});
    };

    dichotomy("holomorphic-nondegeneracy-dichotomy", rep.source.holNondeg,
              allOf({{"generic Jacobian rank full", genFull},
                     {"target holomorphically nondegenerate",
                      rep.target.holNondeg}}));

    dichotomy("class-c-dichotomy", rep.source.classC,
              allOf({{"Segre transversal", transversal},
                     {"totally Segre nondegenerate", totalNd},
                     {"generic Jacobian rank full", genFull},
                     {"target of class C", rep.target.classC}}));

    dichotomy("finite-nondegeneracy-dichotomy", rep.source.finNondeg,
              allOf({{"Segre transversal", transversal},
                     {"det f_z(0) nonzero", exactNonzero(detFz0, "det f_z(0)")},
                     {"det ft_chi(0) nonzero",
                      exactNonzero(detFt0, "det ft_chi(0)")},
                     {"Jacobian rank at 0 full", rank0Full},
                     {"target finitely nondegenerate", rep.target.finNondeg}}));

    {
        Verdict hyp = allOf({{"target finitely nondegenerate",
                              rep.target.finNondeg},
                             {"totally Segre nondegenerate", totalNd}});
        Verdict concl;
        if (nd.fDet.isProved() && nd.ftDet.isProved())
            concl = detConjugateRelation(h).verdict;
        else
            concl = Verdict::unknownUpTo(
                h.order(),
                "a restricted Jacobian determinant vanishes up to truncation");
        rep.entries.push_back(
            {"determinant-conjugate-proportionality", hyp, concl, "n/a"});
    }

    if (h.n() == 1) {
        Verdict itemI = totalNd;
        Verdict itemII = allOf({{"source finite type", rep.source.finiteType},
                                {"not transversally null", notOf(tnull)}});
        Verdict itemIII = allOf({{"source finite type", rep.source.finiteType},
                                 {"Segre transversal", transversal}});
        std::vector<LabeledVerdict> items = {
            {"(i) totally Segre nondegenerate", itemI},
            {"(ii) finite type and not transversally null", itemII},
            {"(iii) finite type and Segre transversal", itemIII}};
        Verdict equivalence;
        bool anyUnknown = false, anyProved = false, anyRefuted = false;
        std::string statuses;
        for (const auto& it : items) {
            anyUnknown |= it.verdict.isUnknown();
            anyProved |= it.verdict.isProved();
            anyRefuted |= it.verdict.isRefuted();
            if (!statuses.empty()) statuses += "; ";
            statuses += it.label + ": " + statusName(it.verdict.status);
        }
        if (anyUnknown)
            equivalence = Verdict::unknownUpTo(h.order(), statuses);
        else if (anyProved && anyRefuted)
            equivalence = Verdict::refuted(statuses, h.order());
        else
            equivalence = Verdict::proved(statuses, h.order());
        std::vector<LabeledVerdict> conclParts = {{"equivalence", equivalence}};
        if (anyProved && !anyUnknown && !anyRefuted) {
            conclParts.push_back(
                {"orders of vanishing match", orderMatch(h).verdict});
            if (m.q() == mp.q())
                conclParts.push_back(
                    {"biholomorphism at 0 (M = M')", rank0Full});
        }
        rep.entries.push_back({"dimension-one-equivalence",
                               rep.target.finiteType, allOf(conclParts),
                               "n/a"});
    }

    {
        Series targetSlice = mp.qSlice(QSlice::TauZero);
        Verdict targetInfinite =
            targetSlice.isZero()
                ? Verdict::proved("Q'(z,chi,0) vanishes up to truncation",
                                  targetSlice.order())
                : Verdict::refuted("Q'(z,chi,0) contains " +
                                   targetSlice.leadingTermString());
        rep.entries.push_back(
            {"infinite-type-target-nullity",
             allOf({{"source finite type", rep.source.finiteType},
                    {"target infinite type", targetInfinite}}),
             tnull, "n/a"});
    }

    auto nonzero = [&](const Series& s, const std::string& label) {
        return s.isZero()
                   ? Verdict::unknownUpTo(s.order(),
                                          label + " vanishes up to truncation")
                   : Verdict::proved(label + " contains " +
                                     s.leadingTermString());
    };
    rep.entries.push_back(
        {"nonzero-g-forces-ft-determinant",
         allOf({{"source of class C", rep.source.classC},
                {"g nonzero", nonzero(h.g(), "g")}}),
         nd.ftDet, "n/a"});
    rep.entries.push_back(
        {"nonzero-gt-forces-f-determinant",
         allOf({{"source of class C", rep.source.classC},
                {"gt nonzero", nonzero(h.gt(), "gt")}}),
         nd.fDet, "n/a"});

    for (const AuditEntry& e : rep.entries)
        if (e.hypotheses.isProved() && e.conclusion.isRefuted())
            throw std::logic_error(
                "audit contradiction in " + e.name + ": hypotheses [" +
                e.hypotheses.witness + "] but conclusion refuted [" +
                e.conclusion.witness + "]");
    return rep;
}

}  // namespace segre
