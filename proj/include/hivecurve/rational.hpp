#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace hivecurve {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Exact: every finite double is a dyadic rational.
inline Rational from_double(double x) {
    require(std::isfinite(x), ErrorKind::InvalidArgument, "non-finite value");
    return Rational(x);
}

/// p/q with either sign on q (the two-integer constructor of mpq_rational
/// treats the denominator as unsigned).
inline Rational ratio(long p, long q) {
    require(q != 0, ErrorKind::InvalidArgument, "zero denominator");
    return Rational(BigInt(p), BigInt(q));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline long double to_long_double(const Rational& q) {
    return static_cast<long double>(mpq_get_d(q.backend().data()));
}

// Natural log without overflow for huge numerators/denominators.
inline double log_abs(const Rational& q) {
    require(q != 0, ErrorKind::InvalidArgument, "log of zero");
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, mpq_numref(q.backend().data()));
    double md = mpz_get_d_2exp(&ed, mpq_denref(q.backend().data()));
    return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
           static_cast<double>(en - ed) * std::log(2.0);
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

// Canonical "p/q" text, q >= 1, always with the slash.
inline std::string format_rational(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

// Accepts "p/q", "p", or a decimal literal (converted exactly).
inline Rational parse_rational(std::string_view s) {
    std::string t(s);
    require(!t.empty(), ErrorKind::InvalidArgument, "empty rational");
    auto slash = t.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt p(t.substr(0, slash)), d(t.substr(slash + 1));
            require(d != 0, ErrorKind::InvalidArgument, "zero denominator in " + t);
            return Rational(p, d);
        }
        if (t.find_first_of(".eE") != std::string::npos) {
            auto dot = t.find_first_of("eE");
            std::string mant = t.substr(0, dot);
            long exp10 = dot == std::string::npos ? 0 : std::stol(t.substr(dot + 1));
            auto pt = mant.find('.');
            if (pt != std::string::npos) {
                exp10 -= static_cast<long>(mant.size() - pt - 1);
                mant.erase(pt, 1);
            }
            Rational r{BigInt(mant)};
            BigInt ten = 1;
            for (long e = 0; e < std::labs(exp10); ++e) ten *= 10;
            return exp10 >= 0 ? Rational(r * ten) : Rational(r / ten);
        }
        return Rational(BigInt(t));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "malformed rational '" + t + "'");
    }
}

inline Rational rational_pow(const Rational& base, long e) {
    Rational r = 1;
    Rational b = e >= 0 ? base : Rational(1 / base);
    for (long k = 0; k < std::labs(e); ++k) r *= b;
    return r;
}

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational abs_value(const Rational& q) { return abs(q); }
inline double abs_value(double x) { return std::fabs(x); }

} // namespace hivecurve
