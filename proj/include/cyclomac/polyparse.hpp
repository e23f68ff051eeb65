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

// Recursive-descent parser for univariate rational polynomials in x:
//
//   expr  := sign? term (('+' | '-') term)*
//   term  := coeff ('*'? 'x' ('^' int)?)?  |  'x' ('^' int)?
//   coeff := int ('/' int)?
//
// Whitespace is ignored between tokens; like terms are combined.

#ifndef CYCLOMAC_POLYPARSE_HPP
#define CYCLOMAC_POLYPARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "polynomial.hpp"
#include "rational.hpp"

namespace cyclomac {

class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t offset)
        : Error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

   private:
    std::size_t offset_;
};

namespace detail {

class PolyParser {
   public:
    explicit PolyParser(std::string_view src) : src_(src) {}

    Polynomial parse() {
        Polynomial result;
        skip_ws();
        Rational sign(1);
        if (peek() == '-' || peek() == '+') {
            if (get() == '-') sign = -1;
        }
        result += term() * sign;
        while (true) {
            skip_ws();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', got '") + op + "'", pos_);
            ++pos_;
            Polynomial t = term();
            if (op == '+')
                result += t;
            else
                result -= t;
        }
        return result;
    }

   private:
    Polynomial term() {
        skip_ws();
        if (peek() == 'x') return Polynomial::monomial(power());
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            if (at_end()) throw ParseError("unexpected end of input, expected a term", pos_);
            throw ParseError(std::string("expected a coefficient or 'x', got '") + peek() + "'", pos_);
        }
        Rational c = coefficient();
        skip_ws();
        if (peek() == '*') {
            ++pos_;
            skip_ws();
            if (peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
        }
        if (peek() == 'x') return Polynomial::monomial(power(), c);
        return Polynomial::constant(c);
    }

    // 'x' ('^' int)?
    std::size_t power() {
        ++pos_;  // 'x'
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        Integer e = integer();
        if (e > 100000) throw ParseError("exponent too large", at);
        return e.get_ui();
    }

    Rational coefficient() {
        Integer num = integer();
        skip_ws();
        if (peek() != '/') return Rational(num);
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        Integer den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
        return make_rational(num, den);
    }

    Integer integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a nonnegative integer", start);
        return Integer(std::string(src_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }
    char get() { return src_[pos_++]; }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in x with rational coefficients. Throws ParseError
/// (carrying the byte offset) on malformed input or a zero denominator.
inline Polynomial parse_polynomial(std::string_view src) { return detail::PolyParser(src).parse(); }

}  // namespace cyclomac

#endif  // CYCLOMAC_POLYPARSE_HPP
