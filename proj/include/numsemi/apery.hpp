#pragma once

#include <cassert>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numsemi/core.hpp"

namespace numsemi {

/// Apéry set of a numerical semigroup with respect to some modulus n, as a
/// list: the members x with x - n outside the semigroup (trivially so for
/// x < n). When n is a nonzero member the list has exactly n elements, one
/// per residue class mod n, each the least member of its class.
struct apery_list {
    std::vector<nat> elements;
    nat modulus = 0;

    friend bool operator==(const apery_list&, const apery_list&) = default;
};

/// Apéry set computed from the gaps: remove the gaps from the concatenation
/// of [0..n-1] and the gaps shifted up by n, keeping that order (so the
/// output is the ascending members below n followed by the ascending shifted
/// gaps that are members). Total in n; n = 0 yields the empty list.
inline apery_list apery(const gaps_list& g, nat n) {
    std::vector<nat> out;
    for (nat x = 0; x < n; ++x)
        if (is_member(g, x)) out.push_back(x);
    for (nat gap : g.values()) {
        const nat shifted = checked_add(gap, n);
        if (is_member(g, shifted)) out.push_back(shifted);
    }
    return {std::move(out), n};
}

/// First element of the ascending list congruent to a mod n; when no element
/// qualifies, the least such value greater than the last element (a mod n
/// itself when the list is empty).
inline nat find_mod(std::span<const nat> values, nat n, nat a) {
    if (n == 0) throw zero_modulus{};
    const nat r = a % n;
    for (nat x : values)
        if (x % n == r) return x;
    if (values.empty()) return r;
    const nat start = checked_add(values.back(), 1);
    return checked_add(start, (checked_add(r, n) - start % n) % n);
}

/// Apéry set computed residue class by residue class from the small-elements
/// list: entry i is the least member congruent to i mod n. Requires n to be
/// a nonzero member; output order is residue order 0..n-1, not ascending.
inline apery_list apery_residue(const small_elements& se, nat n) {
    if (n == 0 || !is_member(se, n)) throw not_a_member(n, true);
    std::vector<nat> out;
    out.reserve(static_cast<std::size_t>(n));
    for (nat r = 0;; ++r) {
        out.push_back(find_mod(se.values(), n, r));
        if (r == n - 1) break;
    }
    return {std::move(out), n};
}

/// Decomposition of the member a over the Apéry set of n: a = k*n + w.
struct apery_decomposition {
    nat k = 0;
    nat w = 0;

    friend bool operator==(const apery_decomposition&, const apery_decomposition&) = default;
};

/// Unique (k, w) with w in the Apéry set of n, w congruent to a mod n and
/// w <= a. Both n (nonzero) and a must be members.
inline apery_decomposition apery_decompose(const gaps_list& g, nat n, nat a) {
    if (n == 0 || !is_member(g, n)) throw not_a_member(n, true);
    if (!is_member(g, a)) throw not_a_member(a);
    const apery_list ap = apery(g, n);
    const nat r = a % n;
    for (nat w : ap.elements)
        if (w % n == r && w <= a) return {(a - w) / n, w};
    throw std::logic_error("apery set misses a residue class of one of its members");
}

}  // namespace numsemi
