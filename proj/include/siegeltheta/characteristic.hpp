#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace siegeltheta {

using rational = boost::rational<long long>;

// r reduced into [0, 1).
inline rational mod1(const rational& r) {
    long long fl = r.numerator() / r.denominator();
    if (r < 0 && fl * r.denominator() != r.numerator()) --fl;
    return r - fl;
}

inline double to_double(const rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Theta characteristic (a, b): two rational shift vectors stored exactly,
/// reduced mod 1. Reduction is idempotent; parity is only defined for
/// half-integral characteristics.
class characteristic {
public:
    characteristic(std::vector<rational> a, std::vector<rational> b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.size() != b_.size() || a_.empty())
            throw std::invalid_argument("characteristic: a and b must have equal positive length");
        for (auto& r : a_) r = mod1(r);
        for (auto& r : b_) r = mod1(r);
    }

    static characteristic zero(int g) {
        return characteristic(std::vector<rational>(g, rational(0)), std::vector<rational>(g, rational(0)));
    }
    // Half-integral characteristic from bit vectors: entries in {0, 1} mean {0, 1/2}.
    static characteristic half(const std::vector<int>& abits, const std::vector<int>& bbits) {
        std::vector<rational> a, b;
        for (int x : abits) a.emplace_back(x, 2);
        for (int x : bbits) b.emplace_back(x, 2);
        return characteristic(std::move(a), std::move(b));
    }

    int genus() const { return static_cast<int>(a_.size()); }
    const std::vector<rational>& a() const { return a_; }
    const std::vector<rational>& b() const { return b_; }

    bool is_half_integral() const {
        for (const auto& r : a_)
            if (r.denominator() > 2) return false;
        for (const auto& r : b_)
            if (r.denominator() > 2) return false;
        return true;
    }

    // 4 * a.b mod 2; 0 = even, 1 = odd.
    int parity() const {
        if (!is_half_integral())
            throw std::logic_error("parity: characteristic must be half-integral");
        rational dot(0);
        for (std::size_t i = 0; i < a_.size(); ++i) dot += a_[i] * b_[i];
        const rational four_dot = dot * 4;
        if (four_dot.denominator() != 1)
            throw std::logic_error("parity: 4 a.b is not an integer");
        return static_cast<int>(((four_dot.numerator() % 2) + 2) % 2);
    }
    bool is_even() const { return parity() == 0; }

    bool operator==(const characteristic& o) const { return a_ == o.a_ && b_ == o.b_; }

private:
    std::vector<rational> a_, b_;
};

/// All even half-integral characteristics of genus g, in lexicographic
/// order of the (a, b) bit patterns. Their count is 2^{g-1} (2^g + 1).
inline std::vector<characteristic> even_characteristics(int g) {
    if (g < 1) throw std::invalid_argument("even_characteristics: g must be >= 1");
    std::vector<characteristic> out;
    const std::uint32_t lim = 1u << g;
    for (std::uint32_t am = 0; am < lim; ++am) {
        for (std::uint32_t bm = 0; bm < lim; ++bm) {
            int dot = 0;
            for (int i = 0; i < g; ++i) dot += static_cast<int>((am >> i) & 1u) * static_cast<int>((bm >> i) & 1u);
            if (dot % 2 != 0) continue;
            std::vector<int> ab(g), bb(g);
            for (int i = 0; i < g; ++i) {
                ab[i] = static_cast<int>((am >> i) & 1u);
                bb[i] = static_cast<int>((bm >> i) & 1u);
            }
            out.push_back(characteristic::half(ab, bb));
        }
    }
    return out;
}

inline std::size_t even_characteristic_count(int g) {
    return (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) + 1);
}

} // namespace siegeltheta
