#pragma once

#include <optional>

#include <sumprod/dist.hpp>

namespace sumprod {

/// Summation tolerance used by every inequality check in this project.
inline constexpr double kEntropyTol = 1e-9;

/* An entropy in bits. When the quantity is -log2 of a single rational
   (min-entropy, collision entropy, Shannon entropy of a uniform law),
   that exact rational is retained so threshold comparisons can be done
   in exact arithmetic. */
struct EntropyValue {
  double bits = 0.0;
  std::optional<Rational> point_prob; // exact 2^(-bits) when applicable
};

/// Deterministic compensated sum of p*log2(1/p) over atoms in canonical
/// key order. Absolute error stays far below the 1e-9 check tolerance.
double shannon_bits(const std::map<Scalar, Rational>& atoms);
double shannon_bits(const std::map<Tuple, Rational>& atoms);

EntropyValue shannon(const Dist& d);
EntropyValue shannon(const JointLaw& d);
EntropyValue min_entropy(const Dist& d);
EntropyValue min_entropy(const JointLaw& d);
EntropyValue collision_entropy(const Dist& d);
EntropyValue collision_entropy(const JointLaw& d);

/// H(second | first) for a law over pairs, via the chain rule
/// H(T|C) = H(C,T) - H(C). Pairs are read as (condition, target).
double conditional_entropy(const JointLaw& pair_law);

} // namespace sumprod
