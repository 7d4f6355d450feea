#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "numsemi/base.hpp"
#include "numsemi/errors.hpp"

namespace numsemi {

/// Canonical representation of a numerical semigroup: the strictly ascending
/// list of its gaps, the finitely many naturals missing from the semigroup.
/// The empty list stands for the whole monoid of naturals.
class gaps_list {
public:
    gaps_list() = default;  // no gaps

    /// Checks the three representation invariants and wraps the list:
    /// strictly ascending, no zero, and complement closure (for every gap g
    /// and every split g = a + b with a, b >= 1, at least one of a, b is a
    /// gap too). The first violating witness in scan order (ascending g,
    /// then ascending a) is reported.
    static gaps_list validate(std::vector<nat> raw) {
        for (std::size_t i = 1; i < raw.size(); ++i)
            if (raw[i - 1] >= raw[i]) throw not_sorted{};
        if (!raw.empty() && raw.front() == 0) throw contains_zero{};
        auto in_gaps = [&raw](nat v) { return std::binary_search(raw.begin(), raw.end(), v); };
        for (nat g : raw)
            for (nat a = 1; a < g; ++a)
                if (!in_gaps(a) && !in_gaps(g - a)) throw not_closed(g, a);
        return gaps_list(std::move(raw));
    }

    /// Wraps a list the caller guarantees to satisfy the invariants already
    /// (used where validity follows from the producing algorithm).
    static gaps_list unchecked(std::vector<nat> raw) { return gaps_list(std::move(raw)); }

    const std::vector<nat>& values() const noexcept { return gaps_; }
    bool empty() const noexcept { return gaps_.empty(); }
    std::size_t size() const noexcept { return gaps_.size(); }

    friend bool operator==(const gaps_list&, const gaps_list&) = default;

private:
    explicit gaps_list(std::vector<nat> g) : gaps_(std::move(g)) {}
    std::vector<nat> gaps_;
};

inline gaps_list validate_gaps(std::vector<nat> raw) { return gaps_list::validate(std::move(raw)); }

/// Membership is decidable by list lookup: x is in the semigroup iff it does
/// not occur among the gaps.
inline bool is_member(const gaps_list& g, nat x) {
    return !std::binary_search(g.values().begin(), g.values().end(), x);
}

// Smallest value not covered by the run of consecutive entries x, x+1, ...
// at the front of the list: the empty list yields x, a head equal to x
// recurses on x+1, any other head yields x.
constexpr nat find_gap(nat x, std::span<const nat> values) {
    for (nat h : values) {
        if (h != x) return x;
        x = checked_add(x, 1);
    }
    return x;
}

/// Least nonzero member of the semigroup.
inline nat multiplicity(const gaps_list& g) { return find_gap(1, g.values()); }

/// One past the largest gap; 0 when there are no gaps. Every natural at or
/// beyond the conductor is a member.
inline nat conductor(const gaps_list& g) {
    return g.empty() ? nat{0} : checked_add(g.values().back(), 1);
}

/// Largest natural outside the semigroup; absent for the full monoid (whose
/// Frobenius number is not representable over the naturals).
inline std::optional<nat> frobenius(const gaps_list& g) {
    if (g.empty()) return std::nullopt;
    return g.values().back();
}

/// Members of the semigroup from 0 up to and including the conductor. The
/// first element is always 0 and the last is the conductor.
class small_elements {
public:
    /// Checks the invariants: strictly ascending starting at 0, the implied
    /// complement is a valid gaps list, and the last element is exactly the
    /// conductor of that complement.
    static small_elements validate(std::vector<nat> raw);

    static small_elements unchecked(std::vector<nat> raw) { return small_elements(std::move(raw)); }

    const std::vector<nat>& values() const noexcept { return elements_; }
    nat conductor() const noexcept { return elements_.back(); }

    friend bool operator==(const small_elements&, const small_elements&) = default;

private:
    explicit small_elements(std::vector<nat> e) : elements_(std::move(e)) {
        assert(!elements_.empty() && elements_.front() == 0);
    }
    std::vector<nat> elements_;
};

/// Membership decided through a small-elements list: values up to the
/// conductor are looked up, everything beyond it is a member.
inline bool is_member(const small_elements& se, nat x) {
    if (x > se.conductor()) return true;
    return std::binary_search(se.values().begin(), se.values().end(), x);
}

inline small_elements small_elements_from_gaps(const gaps_list& g) {
    const nat c = conductor(g);
    const auto& gs = g.values();
    std::vector<nat> out;
    out.reserve(static_cast<std::size_t>(c - gs.size()) + 1);
    std::size_t gi = 0;
    for (nat x = 0;; ++x) {
        if (gi < gs.size() && gs[gi] == x)
            ++gi;
        else
            out.push_back(x);
        if (x == c) break;
    }
    return small_elements::unchecked(std::move(out));
}

/// Inverse of small_elements_from_gaps: the complement of the small elements
/// inside [0, conductor].
inline gaps_list gaps_from_small_elements(const small_elements& se) {
    const auto& es = se.values();
    const nat c = se.conductor();
    std::vector<nat> out;
    std::size_t si = 0;
    for (nat x = 0;; ++x) {
        if (si < es.size() && es[si] == x)
            ++si;
        else
            out.push_back(x);
        if (x == c) break;
    }
    return gaps_list::unchecked(std::move(out));
}

inline small_elements small_elements::validate(std::vector<nat> raw) {
    if (raw.empty() || raw.front() != 0)
        throw validation_error("small-elements list must start at 0");
    for (std::size_t i = 1; i < raw.size(); ++i)
        if (raw[i - 1] >= raw[i]) throw not_sorted{};
    small_elements candidate(std::move(raw));
    const gaps_list implied = gaps_from_small_elements(candidate);
    if (numsemi::conductor(implied) != candidate.conductor())
        throw validation_error("last element " + std::to_string(candidate.conductor()) +
                               " is not the conductor of the listed semigroup");
    (void)gaps_list::validate(implied.values());
    return candidate;
}

/// Scalar invariants of a semigroup, bundled for reporting.
struct invariant_report {
    nat multiplicity = 0;
    nat conductor = 0;
    std::optional<nat> frobenius;  // absent iff there are no gaps
    nat genus = 0;                 // number of gaps
    small_elements small_els;
};

inline invariant_report compute_invariants(const gaps_list& g) {
    return {multiplicity(g), conductor(g), frobenius(g), g.size(), small_elements_from_gaps(g)};
}

/// Builds the gaps list of the semigroup decided by `member`, given a witness
/// pair of consecutive members a and a+1. Every natural at or beyond
/// (a-1)*(a+1) is then a member, so the gaps are collected below that bound.
/// The predicate is trusted to describe an additive submonoid of the
/// naturals; only the witness pair is verified.
template <typename MemberPredicate>
gaps_list gaps_from_membership(MemberPredicate&& member, nat a) {
    if (!member(a) || !member(checked_add(a, 1))) throw witness_invalid(a);
    const nat bound = a == 0 ? nat{0} : checked_mul(a - 1, checked_add(a, 1));
    std::vector<nat> out;
    for (nat x = 0; x < bound; ++x)
        if (!member(x)) out.push_back(x);
    return gaps_list::unchecked(std::move(out));
}

}  // namespace numsemi
