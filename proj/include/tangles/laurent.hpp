#pragma once

/**
 * @file laurent.hpp
 * @brief Exact integer Laurent polynomials in the bracket variable A.
 */

#include <cstdint>
#include <map>
#include <string>

namespace tangles {

struct LaurentPoly {
    // exponent of A -> coefficient; zero coefficients are never stored.
    std::map<int, std::int64_t> c;

    LaurentPoly() = default;
    static LaurentPoly monomial(std::int64_t coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.c[exp] = coeff;
        return p;
    }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly zero() { return {}; }

    bool is_zero() const { return c.empty(); }

    void add_term(int exp, std::int64_t coeff) {
        if (coeff == 0) return;
        auto it = c.find(exp);
        if (it == c.end()) { c[exp] = coeff; return; }
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (auto [e, k] : b.c) out.add_term(e, k);
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (auto [e, k] : b.c) out.add_term(e, -k);
        return out;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (auto [ea, ka] : a.c)
            for (auto [eb, kb] : b.c) out.add_term(ea + eb, ka * kb);
        return out;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c == b.c; }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.c < b.c; }

    // Substitute A -> A^-1.
    LaurentPoly mirror() const {
        LaurentPoly out;
        for (auto [e, k] : c) out.c[-e] = k;
        return out;
    }

    // Human-readable, e.g. "-A^5 - A^-3 + A^-7" (descending exponents).
    std::string str() const {
        if (c.empty()) return "0";
        std::string out;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            auto [e, k] = *it;
            std::int64_t a = k < 0 ? -k : k;
            if (out.empty()) out += (k < 0 ? "-" : "");
            else out += (k < 0 ? " - " : " + ");
            if (a != 1 || e == 0) out += std::to_string(a);
            if (e != 0) {
                if (a != 1) out += "*";
                out += "A^" + std::to_string(e);
            }
        }
        return out;
    }
};

// delta = -A^2 - A^-2, the loop value of the bracket.
inline LaurentPoly bracket_delta() {
    LaurentPoly d;
    d.c[2] = -1;
    d.c[-2] = -1;
    return d;
}

}  // namespace tangles
