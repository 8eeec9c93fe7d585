#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <sumprod/field.hpp>

namespace sumprod {

using Tuple = std::vector<Scalar>;

/* Finitely supported probability distribution with exact rational masses.
   Invariants: all masses strictly positive, atoms distinct canonical
   scalars, masses sum to exactly 1. */
class Dist {
public:
  static Dist from_atoms(const FieldSpec& f,
                         std::vector<std::pair<Scalar, Rational>> atoms);
  static Dist uniform(const FieldSpec& f, const std::vector<Scalar>& support);
  static Dist point_mass(const Scalar& a);
  /// Binomial(n, 1/2) over Q: masses C(n,k)/2^n on atoms 0..n.
  static Dist binomial(unsigned n);

  const FieldSpec& field() const { return field_; }
  const std::map<Scalar, Rational>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  Rational mass(const Scalar& a) const;
  Rational p_max() const;
  Rational collision_sum() const; // sum of squared masses
  bool operator==(const Dist& o) const;

private:
  explicit Dist(const FieldSpec& f) : field_(f) {}
  FieldSpec field_;
  std::map<Scalar, Rational> atoms_;
};

/* Exact joint law over k-tuples, the result type of pushforwards. */
class JointLaw {
public:
  JointLaw(const FieldSpec& f, std::size_t arity,
           std::map<Tuple, Rational> atoms);

  const FieldSpec& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const std::map<Tuple, Rational>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  Rational p_max() const;
  Rational collision_sum() const;

  Dist to_dist() const;                    // arity-1 laws only
  Dist marginal(std::size_t coord) const;  // law of one coordinate
  static JointLaw product(const Dist& a, const Dist& b); // independent pair

private:
  FieldSpec field_;
  std::size_t arity_;
  std::map<Tuple, Rational> atoms_;
};

} // namespace sumprod
