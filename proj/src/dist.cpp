#include <sumprod/dist.hpp>

namespace sumprod {

Dist Dist::from_atoms(const FieldSpec& f,
                      std::vector<std::pair<Scalar, Rational>> atoms) {
  Dist d(f);
  Rational total = 0;
  for (auto& [a, q] : atoms) {
    if (!(a.field() == f))
      throw usage_error("Dist atom field mismatch: " + a.field().str() +
                        " vs " + f.str());
    if (sgn(q) <= 0)
      throw usage_error("Dist mass must be strictly positive at atom " +
                        a.str());
    auto [it, inserted] = d.atoms_.emplace(a, q);
    if (!inserted)
      throw usage_error("Dist has duplicate atom " + a.str());
    total += q;
  }
  if (total != 1)
    throw usage_error("Dist masses sum to " + rational_str(total) +
                      ", expected exactly 1");
  return d;
}

Dist Dist::uniform(const FieldSpec& f, const std::vector<Scalar>& support) {
  if (support.empty()) throw usage_error("uniform distribution on empty set");
  Rational w(1, static_cast<unsigned long>(support.size()));
  w.canonicalize();
  std::vector<std::pair<Scalar, Rational>> atoms;
  atoms.reserve(support.size());
  for (const auto& a : support) atoms.emplace_back(a, w);
  return from_atoms(f, std::move(atoms));
}

Dist Dist::point_mass(const Scalar& a) {
  return from_atoms(a.field(), {{a, Rational(1)}});
}

Dist Dist::binomial(unsigned n) {
  const FieldSpec q = FieldSpec::rationals();
  Integer den = 1;
  den <<= n;
  std::vector<std::pair<Scalar, Rational>> atoms;
  atoms.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    Rational m(c, den);
    m.canonicalize();
    atoms.emplace_back(Scalar::from_int(q, static_cast<long long>(k)), m);
  }
  return from_atoms(q, std::move(atoms));
}

Rational Dist::mass(const Scalar& a) const {
  auto it = atoms_.find(a);
  return it == atoms_.end() ? Rational(0) : it->second;
}

Rational Dist::p_max() const {
  Rational m = 0;
  for (const auto& [a, q] : atoms_)
    if (q > m) m = q;
  return m;
}

Rational Dist::collision_sum() const {
  Rational s = 0;
  for (const auto& [a, q] : atoms_) s += q * q;
  return s;
}

bool Dist::operator==(const Dist& o) const {
  return field_ == o.field_ && atoms_ == o.atoms_;
}

JointLaw::JointLaw(const FieldSpec& f, std::size_t arity,
                   std::map<Tuple, Rational> atoms)
    : field_(f), arity_(arity), atoms_(std::move(atoms)) {
  if (arity_ == 0) throw usage_error("JointLaw arity must be >= 1");
  Rational total = 0;
  for (const auto& [t, q] : atoms_) {
    if (t.size() != arity_)
      throw usage_error("JointLaw tuple arity mismatch");
    if (sgn(q) <= 0) throw usage_error("JointLaw mass must be positive");
    total += q;
  }
  if (total != 1)
    throw usage_error("JointLaw masses sum to " + rational_str(total) +
                      ", expected exactly 1");
}

Rational JointLaw::p_max() const {
  Rational m = 0;
  for (const auto& [t, q] : atoms_)
    if (q > m) m = q;
  return m;
}

Rational JointLaw::collision_sum() const {
  Rational s = 0;
  for (const auto& [t, q] : atoms_) s += q * q;
  return s;
}

Dist JointLaw::to_dist() const {
  if (arity_ != 1) throw usage_error("JointLaw::to_dist on arity > 1");
  std::vector<std::pair<Scalar, Rational>> atoms;
  atoms.reserve(atoms_.size());
  for (const auto& [t, q] : atoms_) atoms.emplace_back(t[0], q);
  return Dist::from_atoms(field_, std::move(atoms));
}

Dist JointLaw::marginal(std::size_t coord) const {
  if (coord >= arity_) throw usage_error("JointLaw::marginal: bad coordinate");
  std::map<Scalar, Rational> acc;
  for (const auto& [t, q] : atoms_) acc[t[coord]] += q;
  std::vector<std::pair<Scalar, Rational>> atoms(acc.begin(), acc.end());
  return Dist::from_atoms(field_, std::move(atoms));
}

JointLaw JointLaw::product(const Dist& a, const Dist& b) {
  if (!(a.field() == b.field()))
    throw usage_error("JointLaw::product field mismatch");
  std::map<Tuple, Rational> atoms;
  for (const auto& [x, px] : a.atoms())
    for (const auto& [y, py] : b.atoms())
      atoms.emplace(Tuple{x, y}, px * py);
  return JointLaw(a.field(), 2, std::move(atoms));
}

} // namespace sumprod
