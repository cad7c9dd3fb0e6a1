#include "ppa/field.hpp"

#include <cctype>

namespace ppa {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

mpq_class parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw validation_error("BadNumber", "empty rational literal");
    auto valid_int = [](const std::string& t) {
        std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (start == t.size()) return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw validation_error("BadNumber", "not an exact rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw validation_error("BadNumber", "zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw validation_error("NotPrime", std::to_string(p) + " is not a supported prime");
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % p_;
    if (num < 0) num += p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0)
        throw validation_error("BadReduction",
                               "denominator of " + format_rational(q) + " vanishes mod " + std::to_string(p_));
    return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw internal_error("DivisionByZero", "inverse of zero mod " + std::to_string(p_));
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Element>(result);
}

}  // namespace ppa
