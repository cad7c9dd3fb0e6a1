#pragma once

// Exact coefficient fields. Both classes expose the same element-level
// interface so that the linear algebra and module code can be written once
// as templates over the field type.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ppa/errors.hpp"

namespace ppa {

struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    bool operator==(const FieldSpec&) const = default;
    std::string tag() const { return kind == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

bool is_prime(std::uint64_t n);

/// Parse "a", "-a", "a/b" into a canonical rational.
mpq_class parse_rational(const std::string& text);
std::string format_rational(const mpq_class& q);

class Rationals {
public:
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long v) const { return Element(static_cast<long>(v)); }
    Element from_rational(const mpq_class& q) const { return q; }
    mpq_class to_rational(const Element& e) const { return e; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (sgn(a) == 0) throw internal_error("DivisionByZero", "inverse of zero");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool less(const Element& a, const Element& b) const { return a < b; }

    std::string to_string(const Element& a) const { return format_rational(a); }
    Element parse(const std::string& s) const { return parse_rational(s); }

    FieldSpec spec() const { return {}; }
    bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Element>(r < 0 ? r + p_ : r);
    }
    /// Reduction of a rational; the denominator must be a unit mod p.
    Element from_rational(const mpq_class& q) const;
    mpq_class to_rational(const Element& e) const { return mpq_class(static_cast<unsigned long>(e)); }

    Element add(Element a, Element b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }
    bool less(Element a, Element b) const { return a < b; }

    std::string to_string(Element a) const { return std::to_string(a); }
    Element parse(const std::string& s) const { return from_rational(parse_rational(s)); }

    FieldSpec spec() const { return {FieldSpec::Kind::Prime, p_}; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

}  // namespace ppa
