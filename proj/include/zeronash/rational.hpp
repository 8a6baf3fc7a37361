// Exact rational arithmetic for priors, mixture weights and error
// probabilities.  Backed by boost::rational over long long; the magnitudes
// that occur here (denominators bounded by products of type-space and
// profile counts) stay far below the overflow range.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zeronash {

using Rational = boost::rational<long long>;

// Renders "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Parses "p/q" or a bare integer "p".  Throws std::invalid_argument on
// malformed input or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(text), 1);
        }
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("bad rational: " + text);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + text);
    }
}

}  // namespace zeronash
