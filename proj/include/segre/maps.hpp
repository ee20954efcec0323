#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segre/hypersurface.hpp"
#include "segre/invariants.hpp"
#include "segre/linalg.hpp"
#include "segre/verdict.hpp"

namespace segre {

/// Candidate map between complexifications, in split form
/// H = (f(z,w), g(z,w), ft(chi,tau), gt(chi,tau)).  Construction enforces the
/// block structure (f, g free of chi and tau; ft, gt free of z and w) and
/// that every component vanishes at the origin.
class SegreMap {
public:
    SegreMap(int n, std::vector<Series> f, Series g, std::vector<Series> ft,
             Series gt);

    int n() const { return n_; }
    int order() const { return g_.order(); }
    const VarSpace& space() const { return g_.space(); }

    const std::vector<Series>& f() const { return f_; }
    const Series& g() const { return g_; }
    const std::vector<Series>& ft() const { return ft_; }
    const Series& gt() const { return gt_; }

private:
    int n_;
    std::vector<Series> f_;
    Series g_;
    std::vector<Series> ft_;
    Series gt_;
};

/// Consequences of normal coordinates on the source and target:
/// g(z,0) == 0, gt(chi,0) == 0 up to K, and g_w(0) == gt_tau(0) exactly.
Verdict normalityConsequences(const SegreMap& h);

/// Membership identity on the graph: R := g - Q'(f, ft, gt) must vanish after
/// the substitution w := Q(z,chi,tau).  Since w - Q is monic linear in w,
/// R == 0 on the graph iff (w - Q) divides R.
Verdict verifyHspm(const NormalHypersurface& m, const NormalHypersurface& mp,
                   const SegreMap& h);

/// Exact: Proved iff g_w(0) != 0.  The witness also reports any violation of
/// g_w(0) == gt_tau(0).
Verdict isSegreTransversal(const SegreMap& h);

enum class NondegKind { Total, Partial, Neither };

std::string nondegKindName(NondegKind k);

struct NondegResult {
    NondegKind kind;
    Verdict fDet;   // det f_z(z,0) not identically 0?
    Verdict ftDet;  // det ft_chi(chi,0) not identically 0?
    Series detFz;
    Series detFtChi;
};

/// det f_z(z,0) and det ft_chi(chi,0): each is Proved nonzero with a witness
/// monomial or Unknown when it vanishes up to K.  Total iff both Proved,
/// partial iff exactly one.
NondegResult segreNondegeneracy(const SegreMap& h);

/// Both g and gt vanish up to K (Proved carries the truncation order);
/// Refuted with the first surviving monomial.
Verdict isTransversallyNull(const SegreMap& h);

/// Q'(f(z,w), ft(chi,tau), 0) == 0 up to K: the whole space maps into the
/// target complexification.
Verdict mapsIntoTarget(const NormalHypersurface& mp, const SegreMap& h);

struct DetRelation {
    Verdict verdict;
    int j0 = -1;  // vanishing order of det f_z(z,0)
    int k0 = -1;  // vanishing order of det ft_chi(chi,0)
    GaussianRational c;  // p_{j0} == c * conjugate_bar(q_{k0}) when Proved
};

/// Lowest homogeneous parts p_{j0} of det f_z(z,0) and q_{k0} of
/// det ft_chi(chi,0) must satisfy j0 == k0 and p_{j0} == c * bar(q_{k0}); the
/// constant c is fixed by the graded-lex-first monomial ratio and then
/// verified on every monomial.  Throws std::domain_error when either
/// determinant vanishes up to K.
DetRelation detConjugateRelation(const SegreMap& h);

struct OrderMatchResult {
    Verdict verdict;
    std::optional<int> fOrder;   // order of vanishing of f(z,0)
    std::optional<int> ftOrder;  // order of vanishing of ft(chi,0)
};

/// CR dimension 1 only (throws std::domain_error otherwise): compares the
/// orders of vanishing of f(z,0) and ft(chi,0).
OrderMatchResult orderMatch(const SegreMap& h);

/// Exact rank of the constant (2n+2)x(2n+2) Jacobian at the origin.
int jacobianRankAt0(const SegreMap& h);

/// Generic rank of the symbolic Jacobian; the block structure (H depends
/// only on (z,w), the tilde half only on (chi,tau)) is exploited, so this is
/// the sum of the two (n+1)x(n+1) block ranks.
RankResult jacobianGenericRank(const SegreMap& h, std::uint64_t seed = 0);

struct AuditEntry {
    std::string name;
    Verdict hypotheses;
    Verdict conclusion;
    std::string branch;  // "(i)", "(ii)" or "n/a"
};

struct AuditReport {
    Verdict membership;
    ClassificationReport source;
    ClassificationReport target;
    std::vector<AuditEntry> entries;
};

/// Checks every implication of the audited results on one instance.  Entries
/// with hypotheses not Proved are recorded as such; the conclusion is still
/// evaluated whenever it is computable (sharpness witnesses).  A combination
/// of Proved hypotheses and Refuted conclusion throws std::logic_error with
/// a full witness dump: it would contradict a proved result, so it can only
/// be an internal bug.  Throws std::invalid_argument when the membership
/// identity fails (non-HSPM input).
AuditReport audit(const NormalHypersurface& m, const NormalHypersurface& mp,
                  const SegreMap& h, std::uint64_t seed = 0);

}  // namespace segre
