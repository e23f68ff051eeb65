/*
   Copyright 2026 The cyclomac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOMAC_RATIONAL_HPP
#define CYCLOMAC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclomac {

/// Arbitrary-precision integer (GMP).
using Integer = mpz_class;

/// Arbitrary-precision rational number (GMP). Every arithmetic result is
/// kept in canonical form: positive denominator, coprime numerator.
using Rational = mpq_class;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Rational inverse(const Rational& r) {
    if (is_zero(r)) throw DivisionByZero();
    return Rational(1) / r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q" (optional leading sign). Throws Error on malformed input.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational '" + s + "'");
    }
}

/// Integer power of a rational; negative exponents invert.
inline Rational pow(const Rational& base, long e) {
    if (e < 0) return pow(inverse(base), -e);
    Rational result(1);
    Rational b = base;
    auto n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1UL) result *= b;
        b *= b;
        n >>= 1;
    }
    return result;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_RATIONAL_HPP
