#ifndef EISENTRIG_NUMERIC_SUMMATION_HPP
#define EISENTRIG_NUMERIC_SUMMATION_HPP

#include <cstdint>

#include "eisentrig/bounded_value.hpp"
#include "eisentrig/complex.hpp"
#include "eisentrig/precision.hpp"
#include "eisentrig/symbolic/rational.hpp"

// Truncation machinery shared by the zeta and lattice sums: Bernoulli
// numbers, Euler-Maclaurin tails of sum_{n>N} (n + w)^-s with rigorous
// remainder bounds, and the closed-form integral-test bounds used by plain
// partial sums.
namespace eisentrig::numeric
{

// Largest j for which bernoulli_even(j) is available.
inline constexpr unsigned max_bernoulli_index = 150;

// B_{2j} (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...). Computed once, exactly;
// thread-safe. Throws DomainError for j > max_bernoulli_index.
[[nodiscard]] const symbolic::Rational &bernoulli_even(unsigned j);

// Head length and number of Euler-Maclaurin correction terms.
struct TailPlan {
    std::uint64_t head = 0;
    unsigned corrections = 0;
    Real remainder_bound;
};

// Upper bound on |R| after `corrections` correction terms:
//   |B_2M| / (2M)! * (s)_2M / (s + 2M - 1) * (N + re_w)^(1 - s - 2M)
// where (s)_j is the rising factorial and N + re_w > 0 lower-bounds
// |t + w| on t >= N. Rounded up.
[[nodiscard]] Real em_remainder_bound(unsigned s, std::uint64_t head, const Real &re_w, unsigned corrections);

// Smallest head N >= min_head from the sequence min_head * 2^i, and for it
// the fewest corrections M <= ctx.max_correction_terms(), with remainder
// bound <= target. Throws ToleranceUnreachableError past ctx.max_terms().
[[nodiscard]] TailPlan plan_em_tail(unsigned s, const Real &re_w, std::uint64_t min_head, const Real &target,
                                    const PrecisionContext &ctx);

// Euler-Maclaurin value of sum_{n>N} (n + w)^-s (s >= 2) with the plan's
// remainder bound plus a rounding allowance in the radius.
[[nodiscard]] BoundedValue em_tail(unsigned s, const Complex &w, const TailPlan &plan, mpfr_prec_t bits);

// Integral test: sum_{n>N} n^-s <= N^(1-s) / (s - 1).
[[nodiscard]] Real zeta_tail_bound(unsigned s, std::uint64_t head);
// Smallest N with zeta_tail_bound(s, N) <= target; 0 if it exceeds `cap`.
[[nodiscard]] std::uint64_t zeta_direct_terms(unsigned s, const Real &target, std::uint64_t cap);

// Symmetric lattice tail with |Re z| <= 1/2:
//   sum_{|n|>N} |z - n|^-k <= 2 (N - 1/2)^(1-k) / (k - 1).
[[nodiscard]] Real lattice_tail_bound(unsigned k, std::uint64_t head);
// Smallest N with lattice_tail_bound(k, N) <= target; 0 if it exceeds `cap`.
[[nodiscard]] std::uint64_t lattice_direct_terms(unsigned k, const Real &target, std::uint64_t cap);

// Telescoping form of zeta(2) after R rounds:
//   zeta(2) = sum_{n<=R} n^-2 + sum_{n>=1} R! / (n^2 (n+1) ... (n+R)),
// the second sum truncated at N with tail <= R! N^-(R+1) / (R+1).
[[nodiscard]] Real telescoping_tail_bound(unsigned rounds, std::uint64_t head);
[[nodiscard]] std::uint64_t telescoping_terms(unsigned rounds, const Real &target, std::uint64_t cap);

// 4 ulp of `scale` per floating-point step, times `steps`; rounded up.
[[nodiscard]] Real rounding_allowance(const Real &scale, std::uint64_t steps, mpfr_prec_t bits);

} // namespace eisentrig::numeric

#endif
