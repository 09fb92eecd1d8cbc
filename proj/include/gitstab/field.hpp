#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <variant>

namespace gitstab {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

class FieldElement;

// Q when characteristic() == 0, otherwise GF(p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field{}; }
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_finite() const { return p_ != 0; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long v) const;
    FieldElement from_rational(const Rational& v) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class FieldElement;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

class FieldElement {
public:
    FieldElement() = default;

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    // Only meaningful for the matching field kind.
    const Rational& rational() const;
    std::uint32_t residue() const;

    FieldElement inverse() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    // Total order: numeric on Q, by residue on GF(p).
    friend bool operator<(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    friend class Field;
    struct Residue {
        std::uint32_t r = 0;
        std::uint32_t p = 0;
    };
    explicit FieldElement(Rational q) : v_(std::move(q)) {}
    explicit FieldElement(Residue r) : v_(r) {}
    void check_same(const FieldElement& o) const;

    std::variant<Rational, Residue> v_;
};

}  // namespace gitstab
