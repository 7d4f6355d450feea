#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "numsemi/base.hpp"

namespace numsemi {

/// Number of entries of the list that are >= i. count_ge(0, L) is the length.
constexpr nat count_ge(nat i, std::span<const nat> xs) {
    nat c = 0;
    for (nat x : xs)
        if (x >= i) ++c;
    return c;
}

/// Non-increasing list of generator indices, every entry <= bound. Encodes a
/// multiset over the indices {0..bound}, i.e. one linear combination of a
/// generator list of length bound+1. The bound travels with the list so the
/// invariants are checkable without context; equality compares indices only.
class index_list {
public:
    explicit index_list(nat bound) : bound_(bound) {}
    index_list(nat bound, std::vector<nat> indices) : indices_(std::move(indices)), bound_(bound) {
        assert(well_formed());
    }

    const std::vector<nat>& indices() const noexcept { return indices_; }
    nat bound() const noexcept { return bound_; }
    std::size_t length() const noexcept { return indices_.size(); }

    bool well_formed() const noexcept {
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (indices_[i] > bound_) return false;
            if (i > 0 && indices_[i - 1] < indices_[i]) return false;
        }
        return true;
    }

    friend bool operator==(const index_list& a, const index_list& b) {
        return a.indices_ == b.indices_;
    }

private:
    std::vector<nat> indices_;
    nat bound_;
};

inline std::ostream& operator<<(std::ostream& os, const index_list& l) {
    return os << format_semicolon_list(l.indices());
}

/// Successor in the enumeration of bounded non-increasing lists: bumps the
/// leftmost entry that is still below the bound and levels everything before
/// it to the bumped value; when nothing can be bumped, the result is the
/// all-zero list one entry longer. The length therefore never shrinks.
inline index_list next(const index_list& l) {
    const auto& xs = l.indices();
    const nat m = l.bound();
    std::vector<nat> out;
    const auto bump = std::find_if(xs.begin(), xs.end(), [m](nat v) { return v < m; });
    if (bump != xs.end()) {
        out.assign(xs.begin(), xs.end());
        std::fill(out.begin(), out.begin() + (bump - xs.begin()) + 1, *bump + 1);
    } else {
        out.assign(xs.size() + 1, 0);
    }
    assert(!out.empty());  // the successor of any list is nonempty
    return index_list(m, std::move(out));
}

/// Cursor over the enumeration: after k calls to advance(), current() is the
/// k-th list (the empty list is the 0-th). Each advance costs one successor.
class lgen_stream {
public:
    explicit lgen_stream(nat bound) : current_(bound) {}

    const index_list& current() const noexcept { return current_; }

    const index_list& advance() {
        current_ = next(current_);
        return current_;
    }

private:
    index_list current_;
};

/// n-th list of the enumeration: n successor steps from the empty list.
inline index_list lgen(nat bound, nat n) {
    lgen_stream cursor(bound);
    for (nat i = 0; i < n; ++i) cursor.advance();
    return cursor.current();
}

/// Counting key (count_ge(0,L), ..., count_ge(n,L)); the enumeration emits
/// lists in strictly increasing lexicographic order of this key. The counts
/// are non-increasing left to right and start with the list length.
class lex_key {
public:
    lex_key(nat n, std::span<const nat> xs) {
        counts_.reserve(static_cast<std::size_t>(n) + 1);
        for (nat i = 0;; ++i) {
            counts_.push_back(count_ge(i, xs));
            if (i == n) break;
        }
    }

    const std::vector<nat>& counts() const noexcept { return counts_; }

    friend bool operator==(const lex_key&, const lex_key&) = default;
    friend auto operator<=>(const lex_key& a, const lex_key& b) {
        return std::lexicographical_compare_three_way(a.counts_.begin(), a.counts_.end(),
                                                      b.counts_.begin(), b.counts_.end());
    }

private:
    std::vector<nat> counts_;
};

}  // namespace numsemi
