#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace segre {

/// Exact element of Q(i): a + b*i with arbitrary-precision rational a, b.
/// Values are immutable in spirit; every operation returns a new value in
/// canonical form (mpq_class keeps fractions reduced with positive
/// denominator).
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) { canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {
        canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussianRational fraction(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isOne() const { return re_ == 1 && im_ == 0; }
    bool isReal() const { return im_ == 0; }

    GaussianRational operator-() const { return make(-re_, -im_); }
    GaussianRational operator+(const GaussianRational& o) const {
        return make(re_ + o.re_, im_ + o.im_);
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return make(re_ - o.re_, im_ - o.im_);
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return make(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussianRational operator/(const GaussianRational& o) const {
        return *this * o.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational conjugate() const { return make(re_, -im_); }

    bool operator==(const GaussianRational& o) const {
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Canonical text form, e.g. "0", "3/4", "i", "-2/3*i", "1/2 + 1/3*i".
    std::string str() const;

    /// Parses the canonical text form (round-trip inverse of str()).
    /// Throws std::invalid_argument on malformed input.
    static GaussianRational parse(std::string_view text);

private:
    static GaussianRational make(mpq_class re, mpq_class im) {
        GaussianRational g;
        g.re_ = std::move(re);
        g.im_ = std::move(im);
        g.canonicalize();
        return g;
    }
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }

    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace segre
