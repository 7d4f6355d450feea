#pragma once

#include <stdexcept>
#include <string>

#include "numsemi/base.hpp"

namespace numsemi {

// Base class for rejected inputs. The CLI maps anything derived from this to
// exit code 2; everything else is an internal error.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_sorted : public validation_error {
public:
    not_sorted() : validation_error("list must be strictly ascending (sorted, duplicate-free)") {}
};

class contains_zero : public validation_error {
public:
    contains_zero() : validation_error("0 belongs to every numerical semigroup and cannot appear here") {}
};

// Witness that the complement of the candidate gaps list is not closed under
// addition: gap = summand + (gap - summand) with both summands outside the list.
class not_closed : public validation_error {
public:
    not_closed(nat gap, nat summand)
        : validation_error("complement not closed under addition: gap " + std::to_string(gap) + " = " +
                           std::to_string(summand) + " + " + std::to_string(gap - summand) +
                           " with both summands outside the gaps"),
          gap_(gap),
          summand_(summand) {}
    nat gap() const noexcept { return gap_; }
    nat summand() const noexcept { return summand_; }

private:
    nat gap_;
    nat summand_;
};

class zero_modulus : public validation_error {
public:
    zero_modulus() : validation_error("modulus must be nonzero") {}
};

class not_a_member : public validation_error {
public:
    explicit not_a_member(nat value, bool require_nonzero = false)
        : validation_error(std::to_string(value) + (require_nonzero
                               ? " is not a nonzero member of the semigroup"
                               : " is not a member of the semigroup")),
          value_(value) {}
    nat value() const noexcept { return value_; }

private:
    nat value_;
};

class witness_invalid : public validation_error {
public:
    explicit witness_invalid(nat a)
        : validation_error("witness pair (" + std::to_string(a) + ", " + std::to_string(a + 1) +
                           ") is not contained in the monoid"),
          value_(a) {}
    nat value() const noexcept { return value_; }

private:
    nat value_;
};

class empty_generators : public validation_error {
public:
    empty_generators() : validation_error("generator list is empty") {}
};

class not_coprime : public validation_error {
public:
    explicit not_coprime(nat gcd)
        : validation_error("generators have gcd " + std::to_string(gcd) +
                           " != 1, so the complement would be infinite"),
          gcd_(gcd) {}
    nat gcd() const noexcept { return gcd_; }

private:
    nat gcd_;
};

class iteration_cap_exceeded : public validation_error {
public:
    explicit iteration_cap_exceeded(nat cap)
        : validation_error("no run of consecutive members found within " + std::to_string(cap) +
                           " iterations"),
          cap_(cap) {}
    nat cap() const noexcept { return cap_; }

private:
    nat cap_;
};

}  // namespace numsemi
