#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

#include "uberhom/errors.hpp"

namespace uberhom {

// Coefficient rings. Each ring is a small value object carrying whatever
// runtime parameter it needs; elements are plain values of `value_type`.

template <class R>
concept Ring = requires(const R& r, const typename R::value_type& a, long n) {
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
    { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.neg(a) } -> std::convertible_to<typename R::value_type>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.name() } -> std::convertible_to<std::string>;
};

template <class F>
concept Field = Ring<F> && requires(const F& f, const typename F::value_type& a) {
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
};

bool is_prime(std::uint64_t n);

/// Z/p for a prime p. Z2 is PrimeField{2}.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p = 2);

    std::uint32_t characteristic() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(long n) const noexcept {
        long r = n % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
    }
    value_type add(value_type a, value_type b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const noexcept {
        return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
    }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>((std::uint64_t{a} * b) % p_);
    }
    value_type inv(value_type a) const;
    bool is_zero(value_type a) const noexcept { return a == 0; }
    std::string name() const { return p_ == 2 ? "Z2" : "F" + std::to_string(p_); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// The rationals, with arbitrary-precision fractions.
class RationalField {
public:
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long n) const { return n; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const;
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// The integers, with arbitrary-precision entries. Not a field.
class IntegerRing {
public:
    using value_type = mpz_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long n) const { return n; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    std::string name() const { return "Z"; }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);
static_assert(Ring<IntegerRing> && !Field<IntegerRing>);

/// Runtime choice of coefficients, as selected on the command line.
using Coefficients = std::variant<PrimeField, RationalField, IntegerRing>;
using FieldCoefficients = std::variant<PrimeField, RationalField>;

/// Parses "z2", "q", "z", or "p:<prime>".
Coefficients parse_coefficients(const std::string& text);

std::string coefficient_name(const Coefficients& c);

}  // namespace uberhom
