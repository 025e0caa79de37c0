#pragma once

// Exact rational arithmetic for every bound comparison in the project.
// Floating point is never used to decide an inequality.

#include <boost/rational.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace clawsq {

using Rational = boost::rational<long long>;

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

// Accepts "p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        long long p = std::stoll(text.substr(0, slash));
        long long q = std::stoll(text.substr(slash + 1));
        return Rational(p, q);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("zero denominator in rational: " + text);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

inline long long floor_of(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

}  // namespace clawsq
