#ifndef EISENTRIG_NUMERIC_REFINE_HPP
#define EISENTRIG_NUMERIC_REFINE_HPP

#include <string>

#include "eisentrig/bounded_value.hpp"
#include "eisentrig/errors.hpp"
#include "eisentrig/precision.hpp"

namespace eisentrig::numeric
{

// Runs eval(inner_ctx) with progressively tighter inner tolerances until the
// returned radius is within ctx.tolerance(). Composite results (products,
// reciprocals, differences) amplify input radii; this loop picks the input
// tolerance that absorbs the amplification. Throws
// ToleranceUnreachableError once the inner tolerance hits the precision
// floor without success.
template <class Eval>
BoundedValue refine_to_tolerance(const PrecisionContext &ctx, Eval &&eval, const char *what)
{
    PrecisionContext inner = ctx;
    const Real &target = ctx.tolerance();
    const Real floor = ctx.tolerance_floor();
    for (int attempt = 0; attempt < 16; ++attempt) {
        BoundedValue result = eval(inner);
        if (result.radius <= target) {
            return result;
        }
        if (inner.tolerance() <= floor) {
            throw ToleranceUnreachableError(std::string(what) + ": error radius " + result.radius.to_sci(3)
                                            + " exceeds the tolerance " + target.to_sci(3) + " at "
                                            + std::to_string(ctx.bits()) + " bits");
        }
        // The radius scales roughly linearly with the inner tolerance.
        Real next = inner.tolerance() * (target / result.radius.rounded(64));
        next = ldexp(next, -3);
        inner = inner.with_tolerance(next);
    }
    throw ToleranceUnreachableError(std::string(what) + ": tolerance refinement did not converge");
}

} // namespace eisentrig::numeric

#endif
