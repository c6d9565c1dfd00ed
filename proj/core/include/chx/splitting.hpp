#pragma once

#include "chx/rational.hpp"

#include <concepts>
#include <stdexcept>
#include <vector>

// Ring-generic splitting-principle kernels.  Everything that converts
// between Chern classes, power sums of Chern roots and Chern characters
// lives here, once, and is instantiated for the univariate ring, the
// Schubert ring and the universal polynomial ring alike.

namespace chx {

template <class C>
concept GradedRingElement = requires(const C a, const C b, int k, const Rational& q) {
    { a + b } -> std::same_as<C>;
    { a - b } -> std::same_as<C>;
    { a * b } -> std::same_as<C>;
    { a.scaled(q) } -> std::same_as<C>;
    { a.component(k) } -> std::same_as<C>;
    { a.zero_like() } -> std::same_as<C>;
    { a.one_like() } -> std::same_as<C>;
    { a.truncation() } -> std::convertible_to<int>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

// Power sums of the Chern roots of a total class, via Newton's identity
//   p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
// where e_i is the degree-i component of `total`.  Index 0 of the result is
// unused (zero); entries run up to the ring truncation.
template <GradedRingElement C>
[[nodiscard]] std::vector<C> power_sums(const C& total) {
    const int upto = total.truncation();
    std::vector<C> p(upto + 1, total.zero_like());
    for (int k = 1; k <= upto; ++k) {
        C acc = total.zero_like();
        for (int i = 1; i < k; ++i) {
            const C term = total.component(i) * p[k - i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        const C tail = total.component(k).scaled(Rational(k));
        p[k] = (k % 2 == 1) ? acc + tail : acc - tail;
    }
    return p;
}

// Inverse direction: e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i,
// assembled into the total class 1 + e_1 + e_2 + ...
template <GradedRingElement C>
[[nodiscard]] C total_from_power_sums(const std::vector<C>& p) {
    if (p.empty()) {
        throw std::invalid_argument("empty power sum sequence");
    }
    const int upto = p[0].truncation();
    std::vector<C> e;
    e.push_back(p[0].one_like());
    C total = p[0].one_like();
    for (int k = 1; k <= upto && k < static_cast<int>(p.size()); ++k) {
        C acc = p[0].zero_like();
        for (int i = 1; i <= k; ++i) {
            const C term = e[k - i] * p[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(acc.scaled(Rational(1, k)));
        total = total + e.back();
    }
    return total;
}

// exp of a class with vanishing degree-0 part; the sum is finite because
// the argument is nilpotent in the truncated ring.
template <GradedRingElement C>
[[nodiscard]] C exp_class(const C& x) {
    if (!x.component(0).is_zero()) {
        throw std::invalid_argument("exp of a class with a degree-0 part");
    }
    C acc = x.one_like();
    C power = x.one_like();
    for (int k = 1; k <= x.truncation(); ++k) {
        power = power * x;
        if (power.is_zero()) {
            break;
        }
        acc = acc + power.scaled(Rational(1, factorial(k)));
    }
    return acc;
}

// ch(E) = rank + sum_k p_k / k!.
template <GradedRingElement C>
[[nodiscard]] C chern_character(const C& total, const Rational& rank) {
    const std::vector<C> p = power_sums(total);
    C ch = total.one_like().scaled(rank);
    for (int k = 1; k < static_cast<int>(p.size()); ++k) {
        ch = ch + p[k].scaled(Rational(1, factorial(k)));
    }
    return ch;
}

// Recovers the total Chern class from a Chern character (p_k = k! ch_k).
template <GradedRingElement C>
[[nodiscard]] C total_from_character(const C& ch) {
    std::vector<C> p(ch.truncation() + 1, ch.zero_like());
    for (int k = 1; k <= ch.truncation(); ++k) {
        p[k] = ch.component(k).scaled(Rational(factorial(k)));
    }
    if (p.empty()) {
        return ch.one_like();
    }
    p[0] = ch.zero_like();
    return total_from_power_sums(p);
}

// c_i(E*) = (-1)^i c_i(E).
template <GradedRingElement C>
[[nodiscard]] C dual_total(const C& total) {
    C out = total.zero_like();
    for (int i = 0; i <= total.truncation(); ++i) {
        const C part = total.component(i);
        out = (i % 2 == 0) ? out + part : out - part;
    }
    return out;
}

inline constexpr int kTensorRankCap = 4;

// Total Chern class of a tensor product, through ch(A (x) B) = ch A . ch B.
// Factor ranks are capped at 4: that covers every bundle the engine builds,
// and refusing larger ranks beats silently mis-expanding them.
template <GradedRingElement C>
[[nodiscard]] C tensor_total(const C& a, int rank_a, const C& b, int rank_b) {
    if (rank_a < 0 || rank_b < 0) {
        throw std::invalid_argument("negative bundle rank");
    }
    if (rank_a > kTensorRankCap || rank_b > kTensorRankCap) {
        throw std::invalid_argument("tensor factor rank " +
                                    std::to_string(std::max(rank_a, rank_b)) +
                                    " exceeds the supported cap of " +
                                    std::to_string(kTensorRankCap));
    }
    const C ch = chern_character(a, Rational(rank_a)) * chern_character(b, Rational(rank_b));
    return total_from_character(ch);
}

}  // namespace chx
