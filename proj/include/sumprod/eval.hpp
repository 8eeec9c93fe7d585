#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <sumprod/dist.hpp>
#include <sumprod/entropy.hpp>
#include <sumprod/expr.hpp>

namespace sumprod {

/* Variable bindings for query evaluation. Every name denotes a fresh
   independent variable; one sample reused twice must be written as two
   distinct names bound to the same Dist. */
struct Bindings {
  std::map<std::string, Dist> vars;

  Bindings& bind(std::string name, Dist d) {
    vars.insert_or_assign(std::move(name), std::move(d));
    return *this;
  }
  const FieldSpec& field() const;
};

struct EvalBudget {
  std::uint64_t max_points = 10'000'000;
};

/// Exact joint law of the component tuple under the product measure of
/// the bound variables, by enumeration of the product of supports.
JointLaw pushforward(const std::vector<ExprPtr>& comps, const Bindings& b,
                     const EvalBudget& budget = {});

/// Entropy of a component tuple without retaining the joint law.
EntropyValue query_entropy(const std::vector<ExprPtr>& comps,
                           const Bindings& b, QueryKind kind,
                           const EvalBudget& budget = {});

/// Full query dispatch, including the two-argument Ruzsa form.
EntropyValue evaluate_query(const QueryAst& q, const Bindings& b,
                            const EvalBudget& budget = {});

/// d(X,Y) = H(X' - Y') - H(X)/2 - H(Y)/2 with fresh independent copies.
EntropyValue ruzsa_distance(const Dist& x, const Dist& y,
                            const EvalBudget& budget = {});

/// Law of `target` conditioned on {Z in A}, A = {z : P(Z=z) >= delta},
/// together with the exact probability P(Z in A). Conditioning an
/// independent binding replaces Z's law by its renormalized restriction.
std::pair<Dist, Rational> threshold_condition(const ExprPtr& target,
                                              const Bindings& b,
                                              const std::string& z_name,
                                              const Rational& delta,
                                              const EvalBudget& budget = {});

/// Convenience: parse and evaluate "H[...]"-style text against bindings.
EntropyValue evaluate_query_text(std::string_view text, const Bindings& b,
                                 const EvalBudget& budget = {});

} // namespace sumprod
