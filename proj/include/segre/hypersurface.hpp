#pragma once

#include <stdexcept>

#include "segre/series.hpp"
#include "segre/verdict.hpp"

namespace segre {

enum class QSlice { ChiZero, TauZero, Both };

/// Hypersurface in normal coordinates: w = Q(z, chi, tau).  Construction only
/// checks the variable space; normality and reality are validated, reported
/// verdicts (a non-real Q is accepted and flagged, not rejected).
class NormalHypersurface {
public:
    NormalHypersurface(int n, Series q);

    int n() const { return n_; }
    int order() const { return q_.order(); }
    const Series& q() const { return q_; }

    /// conjugateBar(Q): the series Qbar(chi, z, w).
    Series qBar() const { return q_.conjugateBar(); }

    Series qSlice(QSlice which) const;

    /// Q(0,chi,tau) == tau and Q(z,0,tau) == tau up to the truncation order.
    Verdict validateNormal() const;

    /// Q(z,chi,Qbar(chi,z,0)) == 0 and the involution
    /// Q(z,chi,Qbar(chi,z,w)) == w, both up to the truncation order.
    Verdict validateReality() const;

private:
    int n_;
    Series q_;
};

/// Right side of Im w = phi(z, zbar, Re w), complexified as phi(z, chi, s).
/// The placeholder s (for Re w) is stored in the w slot of the space.
class RealDefiningFunction {
public:
    RealDefiningFunction(int n, Series phi);

    int n() const { return n_; }
    const Series& phi() const { return phi_; }

    /// Zero constant term, and reality: conjugating coefficients while
    /// swapping z <-> chi (s fixed) leaves phi unchanged.
    Verdict validate() const;

private:
    int n_;
    Series phi_;
};

struct ComplexifyError : std::runtime_error {
    ComplexifyError(const std::string& msg, int degree)
        : std::runtime_error(msg), degree(degree) {}
    int degree;
};

/// Solves w = tau + 2i*phi(z, chi, (w+tau)/2) for w = Q(z,chi,tau) by
/// degree-graded fixed-point iteration.  Throws ComplexifyError naming the
/// first unstable degree when the iteration fails to settle.
NormalHypersurface complexify(const RealDefiningFunction& f);

}  // namespace segre
