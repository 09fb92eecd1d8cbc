#include "gitstab/field.hpp"

#include <stdexcept>

namespace gitstab {

std::string to_string(const Rational& r)
{
    return r.str();
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const Integer& z, std::uint32_t p)
{
    Integer r = z % p;
    if (r < 0)
        r += p;
    return r.convert_to<std::uint32_t>();
}

}  // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p) || p > 65521)
        throw std::invalid_argument("field characteristic must be a prime below 65536, got " + std::to_string(p));
    return Field(p);
}

FieldElement Field::zero() const
{
    return from_int(0);
}

FieldElement Field::one() const
{
    return from_int(1);
}

FieldElement Field::from_int(long long v) const
{
    if (p_ == 0)
        return FieldElement(Rational(v));
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return FieldElement(FieldElement::Residue{static_cast<std::uint32_t>(r), p_});
}

FieldElement Field::from_rational(const Rational& v) const
{
    if (p_ == 0)
        return FieldElement(v);
    std::uint32_t num = reduce(numerator(v), p_);
    std::uint32_t den = reduce(denominator(v), p_);
    if (den == 0)
        throw std::invalid_argument("denominator of " + v.str() + " vanishes mod " + std::to_string(p_));
    std::uint32_t r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) * mod_pow(den, p_ - 2, p_) % p_);
    return FieldElement(FieldElement::Residue{r, p_});
}

Field FieldElement::field() const
{
    if (auto* r = std::get_if<Residue>(&v_))
        return Field(r->p);
    return Field::rationals();
}

bool FieldElement::is_zero() const
{
    if (auto* r = std::get_if<Residue>(&v_))
        return r->r == 0;
    return std::get<Rational>(v_) == 0;
}

bool FieldElement::is_one() const
{
    if (auto* r = std::get_if<Residue>(&v_))
        return r->r == 1;
    return std::get<Rational>(v_) == 1;
}

const Rational& FieldElement::rational() const
{
    if (auto* q = std::get_if<Rational>(&v_))
        return *q;
    throw std::logic_error("rational() on a prime-field element");
}

std::uint32_t FieldElement::residue() const
{
    if (auto* r = std::get_if<Residue>(&v_))
        return r->r;
    throw std::logic_error("residue() on a rational element");
}

void FieldElement::check_same(const FieldElement& o) const
{
    if (v_.index() != o.v_.index())
        throw std::invalid_argument("mixed-field arithmetic");
    if (auto* r = std::get_if<Residue>(&v_))
        if (r->p != std::get<Residue>(o.v_).p)
            throw std::invalid_argument("mixed-field arithmetic");
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    if (auto* r = std::get_if<Residue>(&v_))
        return FieldElement(Residue{mod_pow(r->r, r->p - 2, r->p), r->p});
    return FieldElement(Rational(1) / std::get<Rational>(v_));
}

FieldElement FieldElement::operator-() const
{
    if (auto* r = std::get_if<Residue>(&v_))
        return FieldElement(Residue{r->r == 0 ? 0 : r->p - r->r, r->p});
    return FieldElement(Rational(-std::get<Rational>(v_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    check_same(o);
    if (auto* r = std::get_if<Residue>(&v_))
        r->r = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r->r) + std::get<Residue>(o.v_).r) % r->p);
    else
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    check_same(o);
    if (auto* r = std::get_if<Residue>(&v_))
        r->r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r->r) * std::get<Residue>(o.v_).r % r->p);
    else
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    a.check_same(b);
    if (auto* r = std::get_if<FieldElement::Residue>(&a.v_))
        return r->r == std::get<FieldElement::Residue>(b.v_).r;
    return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
}

bool operator<(const FieldElement& a, const FieldElement& b)
{
    a.check_same(b);
    if (auto* r = std::get_if<FieldElement::Residue>(&a.v_))
        return r->r < std::get<FieldElement::Residue>(b.v_).r;
    return std::get<Rational>(a.v_) < std::get<Rational>(b.v_);
}

std::string FieldElement::to_string() const
{
    if (auto* r = std::get_if<Residue>(&v_))
        return std::to_string(r->r);
    return std::get<Rational>(v_).str();
}

}  // namespace gitstab
