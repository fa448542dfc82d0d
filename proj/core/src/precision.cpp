#include "eisentrig/precision.hpp"

#include <string>

#include "eisentrig/errors.hpp"

namespace eisentrig
{

namespace
{

constexpr mpfr_prec_t tolerance_bits = 64;

} // namespace

PrecisionContext::PrecisionContext(mpfr_prec_t bits, const Real &tolerance, unsigned guard_bits)
    : bits_(bits), tolerance_(tolerance.rounded(tolerance_bits)), guard_bits_(guard_bits)
{
    if (bits_ < min_bits) {
        throw ConfigError("working precision must be at least " + std::to_string(min_bits) + " bits, got "
                          + std::to_string(bits_));
    }
    if (!tolerance_.is_finite() || tolerance_ <= 0L) {
        throw ConfigError("target tolerance must be a positive finite number");
    }
    if (static_cast<mpfr_prec_t>(guard_bits_) >= bits_) {
        throw ConfigError("guard margin exceeds the working precision");
    }
    if (tolerance_ < tolerance_floor()) {
        throw ConfigError("guard-margin violation: tolerance " + tolerance_.to_sci(3) + " needs more than "
                          + std::to_string(bits_ - static_cast<mpfr_prec_t>(guard_bits_))
                          + " bits, but the working precision is " + std::to_string(bits_) + " bits with a "
                          + std::to_string(guard_bits_) + "-bit guard margin");
    }
}

PrecisionContext::PrecisionContext(mpfr_prec_t bits, std::string_view tolerance, unsigned guard_bits)
    : PrecisionContext(bits, Real::parse(tolerance, tolerance_bits), guard_bits)
{
}

PrecisionContext PrecisionContext::standard()
{
    return PrecisionContext(128, "1e-12");
}

Real PrecisionContext::tolerance_floor() const
{
    return Real::pow2(-(bits_ - static_cast<mpfr_prec_t>(guard_bits_)), tolerance_bits);
}

Real PrecisionContext::unit_roundoff() const
{
    return Real::pow2(1 - bits_, tolerance_bits);
}

PrecisionContext PrecisionContext::with_tolerance(const Real &tolerance) const
{
    PrecisionContext out = *this;
    Real floor = tolerance_floor();
    out.tolerance_ = (tolerance < floor) ? floor : tolerance.rounded(tolerance_bits);
    if (!out.tolerance_.is_finite() || out.tolerance_ <= 0L) {
        throw ConfigError("target tolerance must be a positive finite number");
    }
    return out;
}

PrecisionContext PrecisionContext::with_method(SumMethod method) const
{
    PrecisionContext out = *this;
    out.method_ = method;
    return out;
}

PrecisionContext PrecisionContext::with_max_terms(std::uint64_t max_terms) const
{
    PrecisionContext out = *this;
    out.max_terms_ = max_terms;
    return out;
}

PrecisionContext PrecisionContext::with_telescoping_rounds(unsigned rounds) const
{
    PrecisionContext out = *this;
    out.telescoping_rounds_ = rounds;
    return out;
}

PrecisionContext PrecisionContext::with_max_correction_terms(unsigned terms) const
{
    PrecisionContext out = *this;
    out.max_correction_terms_ = terms;
    return out;
}

} // namespace eisentrig
