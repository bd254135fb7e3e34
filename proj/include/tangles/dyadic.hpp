#pragma once

/**
 * @file dyadic.hpp
 * @brief Exact dyadic rationals k / 2^m used for interval partitions.
 */

#include <cstdint>
#include <compare>
#include <string>

namespace tangles {

// An exact dyadic rational num / 2^exp, kept in lowest terms (num odd or zero).
struct Dyadic {
    std::int64_t num = 0;
    int exp = 0;  // nonnegative

    Dyadic() = default;
    Dyadic(std::int64_t n, int e) : num(n), exp(e) { normalize(); }

    void normalize() {
        if (num == 0) { exp = 0; return; }
        while (exp > 0 && (num % 2) == 0) { num /= 2; --exp; }
    }

    friend Dyadic operator+(Dyadic a, Dyadic b) {
        int e = a.exp > b.exp ? a.exp : b.exp;
        std::int64_t an = a.num << (e - a.exp);
        std::int64_t bn = b.num << (e - b.exp);
        return Dyadic(an + bn, e);
    }
    friend Dyadic operator-(Dyadic a, Dyadic b) { return a + Dyadic(-b.num, b.exp); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.exp == b.exp;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        Dyadic d = a - b;
        if (d.num < 0) return std::strong_ordering::less;
        if (d.num > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "k/2^m" (or "k" when m == 0), e.g. "3/8".
    std::string str() const {
        if (exp == 0) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(std::int64_t(1) << exp);
    }
};

}  // namespace tangles
