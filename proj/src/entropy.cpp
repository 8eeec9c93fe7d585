#include <sumprod/entropy.hpp>

namespace sumprod {

namespace {

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double t) {
    double y = t - c;
    double u = s + y;
    c = (u - s) - y;
    s = u;
  }
};

template <typename Map>
double shannon_bits_impl(const Map& atoms) {
  KahanSum acc;
  for (const auto& [key, q] : atoms) {
    if (q == 1) continue; // 0 log 0 = 0 convention covers the complement
    acc.add(-mpq_get_d(q.get_mpq_t()) * log2_rational(q));
  }
  return acc.s < 0.0 ? 0.0 : acc.s;
}

template <typename Law>
bool is_uniform(const Law& d) {
  const Rational w = d.atoms().begin()->second;
  for (const auto& [key, q] : d.atoms())
    if (q != w) return false;
  return true;
}

template <typename Law>
EntropyValue shannon_impl(const Law& d) {
  EntropyValue v;
  v.bits = shannon_bits(d.atoms());
  if (is_uniform(d)) {
    v.point_prob = d.atoms().begin()->second;
    v.bits = -log2_rational(*v.point_prob);
  }
  return v;
}

template <typename Law>
EntropyValue min_entropy_impl(const Law& d) {
  EntropyValue v;
  v.point_prob = d.p_max();
  v.bits = -log2_rational(*v.point_prob);
  return v;
}

template <typename Law>
EntropyValue collision_entropy_impl(const Law& d) {
  EntropyValue v;
  v.point_prob = d.collision_sum();
  v.bits = -log2_rational(*v.point_prob);
  return v;
}

} // namespace

double shannon_bits(const std::map<Scalar, Rational>& atoms) {
  return shannon_bits_impl(atoms);
}
double shannon_bits(const std::map<Tuple, Rational>& atoms) {
  return shannon_bits_impl(atoms);
}

EntropyValue shannon(const Dist& d) { return shannon_impl(d); }
EntropyValue shannon(const JointLaw& d) { return shannon_impl(d); }
EntropyValue min_entropy(const Dist& d) { return min_entropy_impl(d); }
EntropyValue min_entropy(const JointLaw& d) { return min_entropy_impl(d); }
EntropyValue collision_entropy(const Dist& d) {
  return collision_entropy_impl(d);
}
EntropyValue collision_entropy(const JointLaw& d) {
  return collision_entropy_impl(d);
}

double conditional_entropy(const JointLaw& pair_law) {
  if (pair_law.arity() != 2)
    throw usage_error("conditional_entropy expects a law over pairs");
  return shannon(pair_law).bits - shannon(pair_law.marginal(0)).bits;
}

} // namespace sumprod
