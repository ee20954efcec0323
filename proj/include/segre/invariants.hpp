#pragma once

#include <cstdint>
#include <vector>

#include "segre/hypersurface.hpp"
#include "segre/linalg.hpp"
#include "segre/verdict.hpp"

namespace segre {

enum class JetVariant { Full, TauZero };

/// The jet map of a hypersurface at 0: components Q_{z^alpha}(0,chi,tau)
/// (Full, includes alpha = 0) or Q_{z^alpha}(0,chi,0) (TauZero, |alpha| >= 1).
struct JetMap {
    JetVariant variant;
    int orderBound;                 // K': |alpha| <= K'
    std::vector<Exponents> alphas;  // exponent over z variables only (size n)
    std::vector<Series> components;
};

JetMap jetMap(const NormalHypersurface& m, JetVariant variant, int orderBound);

/// Proved with a witness monomial of Q(z,chi,0), or unknown up to the
/// truncation order (infinite type is not certifiable at finite order).
Verdict isFiniteType(const NormalHypersurface& m);

Verdict isHolomorphicallyNondegenerate(const NormalHypersurface& m,
                                       int maxJetOrder, std::uint64_t seed = 0);

Verdict isClassC(const NormalHypersurface& m, int maxJetOrder,
                 std::uint64_t seed = 0);

/// Sufficient certificate: for every j some power chi_j^m lies in the
/// degree-truncated ideal spanned by the tau=0 jet components.
Verdict isEssentiallyFinite(const NormalHypersurface& m, int maxJetOrder);

/// Exact rank of the constant matrix (Q_{chi_j z^alpha}(0,0,0)); Proved
/// carries the minimal jet order K0 in Verdict::order.
Verdict isFinitelyNondegenerate(const NormalHypersurface& m, int maxJetOrder);

struct ClassificationReport {
    Verdict finiteType;
    Verdict holNondeg;
    Verdict classC;
    Verdict essFinite;
    Verdict finNondeg;
};

/// Runs all five checks with jet order escalating to min(order, 6) and
/// asserts the implication chain finNondeg => essFinite => classC =>
/// holNondeg; a violation throws std::logic_error (an internal bug, never a
/// reportable verdict).
ClassificationReport classify(const NormalHypersurface& m, std::uint64_t seed = 0);

struct MnrsResult {
    int m = 0, r = 0, n = 0, s = 0;
    Verdict verdict;  // m == n and r == s
};

/// Leading-exponent symmetry of Q(z,chi,0) for real hypersurfaces in C^2.
/// Throws std::domain_error on n != 1, infinite type up to the truncation
/// order, or a hypersurface whose reality check fails.
MnrsResult observationMnrs(const NormalHypersurface& m);

}  // namespace segre
