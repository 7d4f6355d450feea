#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "numsemi/apery.hpp"
#include "numsemi/core.hpp"
#include "numsemi/enumerator.hpp"
#include "numsemi/errors.hpp"

namespace numsemi {

class generator_list;
generator_list normalize_generators(std::vector<nat> raw, bool require_coprime);

/// Nonempty, strictly ascending list of positive generators. Construct via
/// normalize_generators.
class generator_list {
public:
    const std::vector<nat>& values() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    nat least() const noexcept { return gens_.front(); }

    friend bool operator==(const generator_list&, const generator_list&) = default;

private:
    explicit generator_list(std::vector<nat> g) : gens_(std::move(g)) {}
    std::vector<nat> gens_;
    friend generator_list normalize_generators(std::vector<nat>, bool);
};

/// Sorts and deduplicates the raw list, rejecting empty input and zeros.
/// With require_coprime set, also demands gcd 1 (the condition for the
/// generated monoid to be co-finite, i.e. a numerical semigroup).
inline generator_list normalize_generators(std::vector<nat> raw, bool require_coprime) {
    if (raw.empty()) throw empty_generators{};
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.front() == 0) throw contains_zero{};
    if (require_coprime) {
        nat g = 0;
        for (nat v : raw) g = std::gcd(g, v);
        if (g != 1) throw not_coprime(g);
    }
    return generator_list(std::move(raw));
}

/// Sum of the generators selected by one multiplicity index list.
inline nat combination_value(const generator_list& gen, const index_list& l) {
    nat sum = 0;
    for (nat i : l.indices()) {
        assert(i < gen.size());
        sum = checked_add(sum, gen.values()[static_cast<std::size_t>(i)]);
    }
    return sum;
}

/// n-th linear combination of the generators: the value of the n-th
/// multiplicity index list. Enumerates every element of the generated
/// monoid, though not in ascending order.
inline nat mgen(const generator_list& gen, nat n) {
    return combination_value(gen, lgen(gen.size() - 1, n));
}

/// Index of the first element x <= start_limit of the ascending list that
/// begins a run of run_length consecutive naturals inside the list; empty
/// when no such run exists. Once an element beyond start_limit breaks the
/// current run, no later run can start in range, so the scan stops.
inline std::optional<std::size_t> consecutive_values(std::span<const nat> values, nat run_length,
                                                     nat start_limit) {
    assert(run_length >= 1);
    nat expected = 0;
    nat count = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == expected)
            ++count;
        else if (values[i] <= start_limit)
            count = 1;
        else
            return std::nullopt;
        if (count == run_length) return i + 1 - static_cast<std::size_t>(run_length);
        expected = checked_add(values[i], 1);
    }
    return std::nullopt;
}

/// Small elements computed from the generators. Pulls linear-combination
/// values one length band at a time: at step i the pool holds every value of
/// an index list shorter than i plus the first of length i (which is always
/// i times the least generator). After sorting and deduplicating, the pool
/// is complete below that floor, so a run of least-generator many
/// consecutive values starting at or below it pins down the conductor and
/// the pool prefix up to the run start is exactly the small elements.
///
/// Coprimality guarantees such a run exists; max_iterations is an optional
/// safety cap on the number of length bands processed.
inline small_elements small_elements_from_generators(
    const generator_list& gen, std::optional<nat> max_iterations = std::nullopt) {
    {
        nat g = 0;
        for (nat v : gen.values()) g = std::gcd(g, v);
        if (g != 1) throw not_coprime(g);
    }
    const nat least = gen.least();
    std::vector<nat> pool;
    lgen_stream cursor(gen.size() - 1);
    for (nat i = 1;; ++i) {
        if (max_iterations && i > *max_iterations) throw iteration_cap_exceeded(*max_iterations);
        while (cursor.current().length() < i) {
            pool.push_back(combination_value(gen, cursor.current()));
            cursor.advance();
        }
        const nat band_floor = checked_mul(i, least);
        assert(combination_value(gen, cursor.current()) == band_floor);
        pool.push_back(band_floor);
        cursor.advance();
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        if (const auto run_start = consecutive_values(pool, least, band_floor)) {
            pool.resize(*run_start + 1);
            return small_elements::unchecked(std::move(pool));
        }
    }
}

/// Gaps of the semigroup generated by a coprime generator list: the
/// complement of its small elements inside [0, conductor].
inline gaps_list gaps_from_generators(const generator_list& gen,
                                      std::optional<nat> max_iterations = std::nullopt) {
    return gaps_from_small_elements(small_elements_from_generators(gen, max_iterations));
}

/// A finite generating set recovered from the gaps list: the nonzero
/// elements of the Apéry set with respect to the multiplicity, together with
/// the multiplicity itself.
inline generator_list generating_set_from_gaps(const gaps_list& g) {
    const nat m = multiplicity(g);
    const apery_list ap = apery(g, m);
    std::vector<nat> gens;
    gens.reserve(ap.elements.size() + 1);
    for (nat w : ap.elements)
        if (w != 0) gens.push_back(w);
    gens.push_back(m);
    return normalize_generators(std::move(gens), true);
}

}  // namespace numsemi
