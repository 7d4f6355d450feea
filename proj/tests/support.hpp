#pragma once

// Shared test helpers: deterministic random corpora and the heavyweight
// property checks run by both the unit suites and the acceptance binary.
// Checks return an explanation of the first failure, or nothing on success.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "numsemi/numsemi.hpp"
#include "oracle.hpp"

namespace testsupport {

using numsemi::nat;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Up to max_count generators drawn from [1, max_value], resampled until the
// gcd is 1.
inline numsemi::generator_list random_coprime_generators(std::mt19937_64& rng,
                                                         std::size_t max_count = 4,
                                                         nat max_value = 25) {
    std::uniform_int_distribution<std::size_t> count_dist(1, max_count);
    std::uniform_int_distribution<nat> value_dist(1, max_value);
    for (;;) {
        std::vector<nat> vals(count_dist(rng));
        for (nat& v : vals) v = value_dist(rng);
        nat g = 0;
        for (nat v : vals) g = std::gcd(g, v);
        if (g == 1) return numsemi::normalize_generators(std::move(vals), true);
    }
}

// Ascending duplicate-free list with up to max_size values from [lo, hi].
inline std::vector<nat> random_ascending(std::mt19937_64& rng, nat lo, nat hi,
                                         std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
    std::uniform_int_distribution<nat> value_dist(lo, hi);
    std::size_t target = size_dist(rng);
    target = std::min<std::size_t>(target, static_cast<std::size_t>(hi - lo + 1));
    std::set<nat> values;
    while (values.size() < target) values.insert(value_dist(rng));
    return {values.begin(), values.end()};
}

// Fixed gaps lists plus semigroups of random coprime generator sets, all of
// them revalidated; random entries are kept only while their conductor stays
// within max_conductor so the exhaustive properties stay cheap.
inline std::vector<numsemi::gaps_list> gaps_corpus(std::size_t random_count = 12,
                                                   nat max_conductor = 80,
                                                   std::uint64_t seed = 917) {
    std::vector<numsemi::gaps_list> out;
    out.push_back(numsemi::validate_gaps({}));
    out.push_back(numsemi::validate_gaps({1}));
    out.push_back(numsemi::validate_gaps({1, 2}));
    out.push_back(numsemi::validate_gaps({1, 3}));
    out.push_back(numsemi::validate_gaps({1, 2, 3, 5, 6, 9, 13}));
    out.push_back(numsemi::validate_gaps({1, 2, 3, 4, 5, 6, 7, 8}));
    auto rng = make_rng(seed);
    while (out.size() < 6 + random_count) {
        const auto gen = random_coprime_generators(rng);
        const auto g = numsemi::gaps_from_generators(gen);
        if (numsemi::conductor(g) > max_conductor) continue;
        out.push_back(numsemi::validate_gaps(g.values()));
    }
    return out;
}

// Every member produced by the oracle below |lgen(k)| * min(gen) must have
// been emitted by the combination enumeration before step k, for each
// k <= max_steps.
inline std::optional<std::string> check_mgen_cutoff(const numsemi::generator_list& gen,
                                                    nat max_steps) {
    numsemi::lgen_stream probe(gen.size() - 1);
    for (nat k = 0; k < max_steps; ++k) probe.advance();
    const nat final_bound = static_cast<nat>(probe.current().length()) * gen.least();
    const auto members =
        numsemi::oracle::reachable_set(gen, final_bound == 0 ? nat{0} : final_bound - 1);

    std::vector<char> produced(static_cast<std::size_t>(final_bound) + 1, 0);
    numsemi::lgen_stream cursor(gen.size() - 1);
    std::size_t member_idx = 0;
    for (nat k = 0;; ++k) {
        const nat bound_k = static_cast<nat>(cursor.current().length()) * gen.least();
        while (member_idx < members.size() && members[member_idx] < bound_k) {
            const nat x = members[member_idx];
            if (!produced[static_cast<std::size_t>(x)])
                return "member " + std::to_string(x) + " below cutoff " + std::to_string(bound_k) +
                       " not generated before step " + std::to_string(k) + " for generators " +
                       numsemi::format_semicolon_list(gen.values());
            ++member_idx;
        }
        if (k == max_steps) break;
        const nat value = numsemi::combination_value(gen, cursor.current());
        if (value <= final_bound) produced[static_cast<std::size_t>(value)] = 1;
        cursor.advance();
    }
    return std::nullopt;
}

// Membership induced by the generated gaps list must agree with the oracle's
// reachability table on [0, conductor + 2 * max(gen)].
inline std::optional<std::string> check_end_to_end(const numsemi::generator_list& gen) {
    const auto g = numsemi::gaps_from_generators(gen);
    const nat bound = numsemi::conductor(g) + 2 * gen.values().back();
    const auto members = numsemi::oracle::reachable_set(gen, bound);
    std::size_t mi = 0;
    for (nat x = 0; x <= bound; ++x) {
        const bool oracle_member = mi < members.size() && members[mi] == x;
        if (oracle_member) ++mi;
        if (numsemi::is_member(g, x) != oracle_member)
            return "membership of " + std::to_string(x) + " disagrees with the oracle for " +
                   numsemi::format_semicolon_list(gen.values());
    }
    return std::nullopt;
}

// Every member a <= conductor + 2n must decompose uniquely as k*n + w with w
// in the Apéry set; uniqueness by exhaustive search over k' <= a/n and the
// Apéry elements.
inline std::optional<std::string> check_decomposition(const numsemi::gaps_list& g, nat n) {
    const auto ap = numsemi::apery(g, n);
    const nat limit = numsemi::conductor(g) + 2 * n;
    for (nat a = 0; a <= limit; ++a) {
        if (!numsemi::is_member(g, a)) continue;
        const auto d = numsemi::apery_decompose(g, n, a);
        if (d.k * n + d.w != a)
            return "decomposition of " + std::to_string(a) + " does not recompose";
        if (std::find(ap.elements.begin(), ap.elements.end(), d.w) == ap.elements.end())
            return "decomposition remainder " + std::to_string(d.w) + " is not an Apéry element";
        std::size_t solutions = 0;
        for (nat k = 0; k <= a / n; ++k)
            for (nat w : ap.elements)
                if (k * n + w == a) ++solutions;
        if (solutions != 1)
            return "member " + std::to_string(a) + " has " + std::to_string(solutions) +
                   " decompositions over the Apéry set of " + std::to_string(n);
    }
    return std::nullopt;
}

// For a nonzero member n: exactly n Apéry elements, pairwise distinct
// residues, and each element is the least member of its residue class
// (established by scanning members upward).
inline std::optional<std::string> check_residue_minimality(const numsemi::gaps_list& g, nat n) {
    const auto ap = numsemi::apery(g, n);
    if (ap.elements.size() != n)
        return "Apéry set of " + std::to_string(n) + " has " +
               std::to_string(ap.elements.size()) + " elements";
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (nat w : ap.elements) {
        auto& flag = seen[static_cast<std::size_t>(w % n)];
        if (flag) return "duplicate residue " + std::to_string(w % n);
        flag = 1;
    }
    std::vector<std::optional<nat>> least(static_cast<std::size_t>(n));
    nat found = 0;
    for (nat x = 0; found < n; ++x) {
        if (!numsemi::is_member(g, x)) continue;
        auto& slot = least[static_cast<std::size_t>(x % n)];
        if (!slot) {
            slot = x;
            ++found;
        }
    }
    for (nat w : ap.elements)
        if (least[static_cast<std::size_t>(w % n)] != w)
            return std::to_string(w) + " is not the least member of its residue class mod " +
                   std::to_string(n);
    return std::nullopt;
}

// Gaps -> small elements -> gaps and the converse, plus gaps -> generating
// set -> gaps.
inline std::optional<std::string> check_round_trips(const numsemi::gaps_list& g) {
    const auto se = numsemi::small_elements_from_gaps(g);
    if (!(numsemi::gaps_from_small_elements(se) == g))
        return "gaps -> small elements -> gaps is not the identity for " +
               numsemi::format_semicolon_list(g.values());
    if (!(numsemi::small_elements_from_gaps(numsemi::gaps_from_small_elements(se)) == se))
        return "small elements -> gaps -> small elements is not the identity for " +
               numsemi::format_semicolon_list(se.values());
    const auto gen = numsemi::generating_set_from_gaps(g);
    if (!(numsemi::gaps_from_generators(gen) == g))
        return "generating set " + numsemi::format_semicolon_list(gen.values()) +
               " does not regenerate " + numsemi::format_semicolon_list(g.values());
    return std::nullopt;
}

// The first C outputs of the enumeration, where C counts every descending
// list over {0..m} of length <= max_len, must be exactly those lists, each
// exactly once.
inline std::optional<std::string> check_lgen_completeness(nat m, std::size_t max_len) {
    const auto all = numsemi::oracle::enumerate_gelists(m, max_len);
    std::map<std::vector<nat>, int> counts;
    for (const auto& l : all) counts[l] = 0;
    numsemi::lgen_stream cursor(m);
    for (std::size_t k = 0; k < all.size(); ++k) {
        const auto it = counts.find(cursor.current().indices());
        if (it == counts.end())
            return "output " + std::to_string(k) + " = " +
                   numsemi::format_semicolon_list(cursor.current().indices()) +
                   " is not a list of length <= " + std::to_string(max_len);
        ++it->second;
        cursor.advance();
    }
    for (const auto& [list, c] : counts)
        if (c != 1)
            return numsemi::format_semicolon_list(list) + " enumerated " + std::to_string(c) +
                   " times";
    return std::nullopt;
}

}  // namespace testsupport
