#ifndef EISENTRIG_PRECISION_HPP
#define EISENTRIG_PRECISION_HPP

#include <cstdint>
#include <string_view>

#include "eisentrig/real.hpp"

namespace eisentrig
{

// How lattice and zeta sums are truncated.
enum class SumMethod {
    // Head sum plus Euler-Maclaurin tail correction (zeta(2): telescoping).
    accelerated,
    // Plain symmetric partial sums with the integral-test tail bound.
    direct,
};

// Working precision and the absolute error every numeric operation must
// meet. Immutable; the with_* members return adjusted copies.
//
// Invariants: bits >= 64, tolerance > 0, and tolerance >= 2^-(bits - guard)
// (the working precision exceeds what the tolerance needs by `guard` bits).
class PrecisionContext
{
public:
    static constexpr mpfr_prec_t min_bits = 64;
    static constexpr unsigned default_guard_bits = 16;
    static constexpr std::uint64_t default_max_terms = 100'000'000;
    static constexpr unsigned default_max_correction_terms = 100;

    // Throws ConfigError when the invariants fail.
    PrecisionContext(mpfr_prec_t bits, const Real &tolerance, unsigned guard_bits = default_guard_bits);
    PrecisionContext(mpfr_prec_t bits, std::string_view tolerance, unsigned guard_bits = default_guard_bits);

    // 128 bits, 1e-12.
    static PrecisionContext standard();

    [[nodiscard]] mpfr_prec_t bits() const noexcept
    {
        return bits_;
    }
    [[nodiscard]] const Real &tolerance() const noexcept
    {
        return tolerance_;
    }
    [[nodiscard]] unsigned guard_bits() const noexcept
    {
        return guard_bits_;
    }
    [[nodiscard]] SumMethod method() const noexcept
    {
        return method_;
    }
    [[nodiscard]] std::uint64_t max_terms() const noexcept
    {
        return max_terms_;
    }
    // 0 selects the number of telescoping rounds from the tolerance.
    [[nodiscard]] unsigned telescoping_rounds() const noexcept
    {
        return telescoping_rounds_;
    }
    [[nodiscard]] unsigned max_correction_terms() const noexcept
    {
        return max_correction_terms_;
    }

    // Smallest tolerance this precision admits: 2^-(bits - guard).
    [[nodiscard]] Real tolerance_floor() const;
    // 2^(1 - bits): relative spacing of floating-point numbers near 1.
    [[nodiscard]] Real unit_roundoff() const;

    // Same context with a new tolerance, clamped to [tolerance_floor, inf).
    [[nodiscard]] PrecisionContext with_tolerance(const Real &tolerance) const;
    [[nodiscard]] PrecisionContext with_method(SumMethod method) const;
    [[nodiscard]] PrecisionContext with_max_terms(std::uint64_t max_terms) const;
    [[nodiscard]] PrecisionContext with_telescoping_rounds(unsigned rounds) const;
    [[nodiscard]] PrecisionContext with_max_correction_terms(unsigned terms) const;

    // Convenience constructors at the working precision.
    [[nodiscard]] Real real(long value) const
    {
        return Real(value, bits_);
    }
    [[nodiscard]] Real real(std::string_view decimal) const
    {
        return Real::parse(decimal, bits_);
    }

private:
    mpfr_prec_t bits_;
    Real tolerance_;
    unsigned guard_bits_;
    SumMethod method_ = SumMethod::accelerated;
    std::uint64_t max_terms_ = default_max_terms;
    unsigned telescoping_rounds_ = 0;
    unsigned max_correction_terms_ = default_max_correction_terms;
};

} // namespace eisentrig

#endif
