#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <sumprod/dist.hpp>
#include <sumprod/eval.hpp>

namespace sumprod {

/* Finite set of field elements, kept sorted and deduplicated. */
struct SetOfScalars {
  FieldSpec field = FieldSpec::rationals();
  std::vector<Scalar> elems;

  static SetOfScalars of(const FieldSpec& f, std::vector<Scalar> elems);
  std::size_t size() const { return elems.size(); }
  bool contains(const Scalar& x) const;
};

SetOfScalars sumset(const SetOfScalars& a, const SetOfScalars& b);
SetOfScalars productset(const SetOfScalars& a, const SetOfScalars& b);

/* Generalised arithmetic progression a + n_1 r_1 + ... + n_d r_d with
   n_i in [0, N_i) (one-sided) or n_i in [-N_i, N_i] (symmetric). */
struct GapSpec {
  Scalar base;
  std::vector<Scalar> gens;
  std::vector<std::uint64_t> bounds; // N_i >= 1
  bool symmetric = false;

  std::size_t rank() const { return gens.size(); }
  Integer index_count() const;
  void validate() const;
};

/* H + P with H an explicit finite subgroup. Construction checks that H
   contains 0 and is closed under addition and negation; over F_p the
   only possibilities are {0} and the whole field. */
struct CosetProgression {
  std::vector<Scalar> subgroup;
  GapSpec prog;

  static CosetProgression make(const FieldSpec& f, std::vector<Scalar> subgroup,
                               GapSpec prog);
  static CosetProgression trivial(GapSpec prog); // H = {0}
  const FieldSpec& field() const { return prog.base.field(); }
  Integer index_count() const;
};

struct EnumerationResult {
  SetOfScalars set;
  Integer index_count;
  bool proper() const {
    return Integer(static_cast<unsigned long>(set.size())) == index_count;
  }
};

EnumerationResult enumerate_progression(const CosetProgression& cp,
                                        const EvalBudget& budget = {});

/// Exhaustive test: all sums with t-dilated index boxes (and h in H)
/// distinct. Dilation keeps integers n in [0, t N_i) resp. [-tN_i, tN_i].
bool is_t_proper(const CosetProgression& cp, const Rational& t,
                 const EvalBudget& budget = {});

struct SymmetrizeResult {
  CosetProgression output; // symmetric, rank <= d+1, contains the input
  std::size_t input_size = 0;
  std::size_t padded_size = 0; // after making every N_i odd
  std::size_t output_size = 0;
  double ratio() const {
    return padded_size ? static_cast<double>(output_size) /
                             static_cast<double>(padded_size)
                       : 1.0;
  }
};

/// Cover H+P by a symmetric coset progression H+P'+{-x,0,x} of rank at
/// most d+1; the containment is verified by enumeration.
SymmetrizeResult symmetrize(const CosetProgression& cp,
                            const EvalBudget& budget = {});

/* The coordinate map of a 3-proper symmetric progression: each element
   a + n_1 r_1 + ... + n_d r_d corresponds to a unique tuple in the box
   [-N_1,N_1] x ... x [-N_d,N_d], and the induced map is a Freiman
   isomorphism onto the box. 3-properness is verified at construction. */
class FreimanBoxMap {
public:
  FreimanBoxMap(const GapSpec& q, const EvalBudget& budget = {});

  std::vector<long long> map(const Scalar& x) const;
  Scalar preimage(const std::vector<long long>& coords) const;
  const std::vector<Scalar>& elements() const { return elements_; }
  const GapSpec& gap() const { return gap_; }

private:
  GapSpec gap_;
  std::vector<Scalar> elements_; // sorted
  std::map<Scalar, std::vector<long long>> coords_;
};

/// Exhaustive quadruple test of the Freiman property for the bijection
/// a_elems[i] -> b_elems[i]. The two sides may live in different fields.
bool is_freiman_isomorphism(const std::vector<Scalar>& a_elems,
                            const std::vector<Scalar>& b_elems,
                            const EvalBudget& budget = {});

/// Equivalent pair-bucketing form of the quadruple test, usable when
/// |A|^4 is out of budget but |A|^2 is not.
bool freiman_preserved_pairs(const std::vector<Scalar>& a_elems,
                             const std::vector<Scalar>& b_elems,
                             const EvalBudget& budget = {});

/// Same pair test against integer-tuple images (the box map case).
bool freiman_preserved_pairs_box(const std::vector<Scalar>& a_elems,
                                 const std::vector<std::vector<long long>>& b,
                                 const EvalBudget& budget = {});

/// H(T_1 + T_2) for independent copies of a tuple-valued law; used to
/// check that Freiman isomorphisms preserve entropies of sums.
double box_convolution_entropy(
    const std::map<std::vector<long long>, Rational>& law);

} // namespace sumprod
