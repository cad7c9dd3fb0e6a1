#pragma once

#include <doctest.h>

#include <string>

#include "ppa/errors.hpp"
#include "ppa/rep.hpp"

namespace unit {

// Runs fn and reports the error code it threw, or "" if it returned.
template <class Fn>
std::string error_code(Fn&& fn) {
    try {
        fn();
    } catch (const ppa::Error& e) {
        return e.code();
    }
    return "";
}

inline ppa::Matrix<ppa::Rationals> qmat(std::size_t r, std::size_t c, std::initializer_list<long> entries) {
    ppa::Rationals f;
    ppa::Matrix<ppa::Rationals> m(f, r, c);
    std::size_t k = 0;
    for (long e : entries) {
        m(k / c, k % c) = mpq_class(e);
        ++k;
    }
    return m;
}

// A2 double quiver: arrow 0 is a : 1 -> 2, arrow 1 is a* : 2 -> 1.
inline ppa::Rep<ppa::Rationals> a2_rep(ppa::DimVector d, ppa::Matrix<ppa::Rationals> xa,
                                       ppa::Matrix<ppa::Rationals> xb, bool check = true) {
    auto dq = ppa::standard_quiver("A2").double_quiver();
    return ppa::make_rep(ppa::Rationals{}, dq, d, {std::move(xa), std::move(xb)}, check);
}

}  // namespace unit
