#include "segre/gaussian_rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace segre {

GaussianRational GaussianRational::fraction(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return {q};
}

GaussianRational GaussianRational::inverse() const {
    if (isZero()) throw std::domain_error("division by zero in Q(i)");
    mpq_class norm = re_ * re_ + im_ * im_;
    return make(re_ / norm, -im_ / norm);
}

namespace {

std::string rationalStr(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Prints one component, the imaginary one carrying "*i" (with "i" and "-i"
// shortened).
std::string imagStr(const mpq_class& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rationalStr(q) + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
    if (isZero()) return "0";
    if (im_ == 0) return rationalStr(re_);
    if (re_ == 0) return imagStr(im_);
    std::string s = rationalStr(re_);
    if (im_ > 0)
        s += " + " + imagStr(im_);
    else
        s += " - " + imagStr(-im_);
    return s;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    size_t pos = 0;
    auto fail = [&]() -> GaussianRational {
        throw std::invalid_argument("malformed Gaussian rational: '" +
                                    std::string(text) + "'");
    };
    auto skipSpace = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    // One signed component: [-]digits[/digits][*i] or [-]i.
    auto component = [&](bool negative, mpq_class& re, mpq_class& im) {
        skipSpace();
        if (pos < text.size() && text[pos] == '-') {
            negative = !negative;
            ++pos;
            skipSpace();
        }
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            im += negative ? -1 : 1;
            return;
        }
        size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '/'))
            ++pos;
        if (pos == start) fail();
        mpq_class q;
        if (q.set_str(std::string(text.substr(start, pos - start)), 10) != 0) fail();
        q.canonicalize();
        if (negative) q = -q;
        if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == 'i') {
            pos += 2;
            im += q;
        } else {
            re += q;
        }
    };

    mpq_class re(0), im(0);
    component(false, re, im);
    skipSpace();
    if (pos < text.size()) {
        char op = text[pos];
        if (op != '+' && op != '-') fail();
        ++pos;
        component(op == '-', re, im);
        skipSpace();
    }
    if (pos != text.size()) fail();
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.str();
}

}  // namespace segre
