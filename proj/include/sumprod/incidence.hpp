#pragma once

#include <array>
#include <cstdint>

#include <sumprod/progression.hpp>

namespace sumprod {

/* Points of F^3, distinct. */
struct PointSet3 {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::array<Scalar, 3>> pts;

  static PointSet3 of(const FieldSpec& f,
                      std::vector<std::array<Scalar, 3>> pts);
};

/* Planes alpha x + beta y + gamma z = delta with (alpha,beta,gamma) != 0,
   stored with the first nonzero coefficient normalized to 1 so that set
   semantics have a unique key. */
struct PlaneSet3 {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::array<Scalar, 4>> planes;

  static PlaneSet3 of(const FieldSpec& f,
                      std::vector<std::array<Scalar, 4>> planes);
  static std::array<Scalar, 4> canonical(std::array<Scalar, 4> plane);
};

/// Exact I(P,Q) by testing every (point, plane) pair.
std::uint64_t count_incidences(const PointSet3& p, const PlaneSet3& q,
                               const EvalBudget& budget = {});

/// N = |{(a,b,c,a',b',c') : a(b+c) = a'(b'+c')}| via one pass that
/// buckets triples by the value a(b+c) and sums squared multiplicities.
std::uint64_t energy_product_sum(const SetOfScalars& a, const SetOfScalars& b,
                                 const SetOfScalars& c,
                                 const EvalBudget& budget = {});

/// Ordered 8-tuple count of (a-b)(c-d) = (a'-b')(c'-d') != 0 over pairs
/// drawn from P; the zero bucket is skipped, matching the proposition.
std::uint64_t energy_rnr(const std::vector<std::pair<Scalar, Scalar>>& pts,
                         const EvalBudget& budget = {});

/// |A(B+C)|.
std::uint64_t expander_size(const SetOfScalars& a, const SetOfScalars& b,
                            const SetOfScalars& c,
                            const EvalBudget& budget = {});

/* The point/plane system whose incidence count equals the energy N:
   points (a, b', ac) and planes bx - a'y + z = a'c'. The triple-to-point
   and triple-to-plane maps are injective when 0 is not in A. */
struct KohConstruction {
  PointSet3 points;
  PlaneSet3 planes;
};
KohConstruction koh_construction(const SetOfScalars& a, const SetOfScalars& b,
                                 const SetOfScalars& c);

} // namespace sumprod
