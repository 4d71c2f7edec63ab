#pragma once

#include <concepts>
#include <stdexcept>
#include <string>

namespace whitetet {

class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string &what) : std::overflow_error(what) {}
};

// Overflow-checked integer arithmetic. Every lattice computation in the
// library funnels through these so a wrapped value can never reach a verdict.
template <std::integral Scalar>
constexpr Scalar checked_add(Scalar lhs, Scalar rhs)
{
    Scalar out{};
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow in addition");
    }
    return out;
}

template <std::integral Scalar>
constexpr Scalar checked_sub(Scalar lhs, Scalar rhs)
{
    Scalar out{};
    if (__builtin_sub_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return out;
}

template <std::integral Scalar>
constexpr Scalar checked_mul(Scalar lhs, Scalar rhs)
{
    Scalar out{};
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return out;
}

template <std::integral Scalar>
constexpr Scalar checked_neg(Scalar value)
{
    return checked_sub(Scalar{0}, value);
}

template <std::integral Scalar>
constexpr Scalar checked_abs(Scalar value)
{
    return value < 0 ? checked_neg(value) : value;
}

/// Floor division; `divisor` must be nonzero.
template <std::integral Scalar>
constexpr Scalar floor_div(Scalar dividend, Scalar divisor)
{
    if (divisor == 0) {
        throw std::domain_error("division by zero");
    }
    if (divisor == -1) {
        return checked_neg(dividend);
    }
    Scalar q = dividend / divisor;
    if ((dividend % divisor != 0) && ((dividend < 0) != (divisor < 0))) {
        --q;
    }
    return q;
}

/// Least nonnegative residue modulo a positive `modulus`.
template <std::integral Scalar>
constexpr Scalar floor_mod(Scalar dividend, Scalar modulus)
{
    if (modulus <= 0) {
        throw std::domain_error("modulus must be positive");
    }
    Scalar r = dividend % modulus;
    return r < 0 ? r + modulus : r;
}

} // namespace whitetet
