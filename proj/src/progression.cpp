#include <sumprod/progression.hpp>

#include <algorithm>
#include <set>

namespace sumprod {

SetOfScalars SetOfScalars::of(const FieldSpec& f, std::vector<Scalar> elems) {
  for (const auto& e : elems)
    if (!(e.field() == f))
      throw usage_error("set element field mismatch: " + e.field().str() +
                        " vs " + f.str());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return SetOfScalars{f, std::move(elems)};
}

bool SetOfScalars::contains(const Scalar& x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

SetOfScalars sumset(const SetOfScalars& a, const SetOfScalars& b) {
  if (!(a.field == b.field)) throw usage_error("sumset field mismatch");
  std::vector<Scalar> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.elems)
    for (const auto& y : b.elems) out.push_back(x + y);
  return SetOfScalars::of(a.field, std::move(out));
}

SetOfScalars productset(const SetOfScalars& a, const SetOfScalars& b) {
  if (!(a.field == b.field)) throw usage_error("productset field mismatch");
  std::vector<Scalar> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.elems)
    for (const auto& y : b.elems) out.push_back(x * y);
  return SetOfScalars::of(a.field, std::move(out));
}

Integer GapSpec::index_count() const {
  Integer n = 1;
  for (auto b : bounds)
    n *= symmetric ? Integer(2 * static_cast<unsigned long>(b) + 1)
                   : Integer(static_cast<unsigned long>(b));
  return n;
}

void GapSpec::validate() const {
  if (gens.size() != bounds.size())
    throw usage_error("GapSpec: generator/bound count mismatch");
  for (auto b : bounds)
    if (b < 1) throw usage_error("GapSpec: bounds must be >= 1");
  for (const auto& g : gens)
    if (!(g.field() == base.field()))
      throw usage_error("GapSpec: generator field mismatch");
}

CosetProgression CosetProgression::make(const FieldSpec& f,
                                        std::vector<Scalar> subgroup,
                                        GapSpec prog) {
  prog.validate();
  if (!(prog.base.field() == f))
    throw usage_error("CosetProgression: progression field mismatch");
  auto h = SetOfScalars::of(f, std::move(subgroup));
  if (!h.contains(Scalar::zero(f)))
    throw usage_error("subgroup must contain 0");
  for (const auto& x : h.elems) {
    if (!h.contains(x.neg()))
      throw usage_error("subgroup not closed under negation");
    for (const auto& y : h.elems)
      if (!h.contains(x + y))
        throw usage_error("subgroup not closed under addition");
  }
  if (f.is_prime_field() && h.size() != 1 && h.size() != f.p())
    throw usage_error("over F_p the subgroup must be {0} or all of F_p");
  if (!f.is_prime_field() && h.size() != 1)
    throw usage_error("over Q the only finite subgroup is {0}");
  return CosetProgression{std::move(h.elems), std::move(prog)};
}

CosetProgression CosetProgression::trivial(GapSpec prog) {
  const FieldSpec f = prog.base.field();
  return make(f, {Scalar::zero(f)}, std::move(prog));
}

Integer CosetProgression::index_count() const {
  return Integer(static_cast<unsigned long>(subgroup.size())) *
         prog.index_count();
}

namespace {

// Walk all index tuples of (possibly dilated) boxes, calling fn with the
// progression element h + a + sum n_i r_i for every h in H.
template <typename Fn>
void walk_indices(const CosetProgression& cp,
                  const std::vector<long long>& lo,
                  const std::vector<long long>& hi, Fn&& fn) {
  const GapSpec& g = cp.prog;
  const std::size_t d = g.rank();
  std::vector<long long> n(d);
  // Partial sums a + sum_{i<k} n_i r_i to avoid rescanning the prefix.
  std::vector<Scalar> partial(d + 1);
  partial[0] = g.base;

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == d) {
      for (const auto& h : cp.subgroup) fn(partial[d] + h);
      return;
    }
    for (long long v = lo[k]; v <= hi[k]; ++v) {
      n[k] = v;
      Scalar step = partial[k];
      if (v != 0) {
        Scalar gv = g.gens[k];
        // n_i * r_i by repeated doubling on the integer coefficient.
        Scalar acc = Scalar::zero(cp.field());
        unsigned long long mag = static_cast<unsigned long long>(v < 0 ? -v : v);
        Scalar base = v < 0 ? gv.neg() : gv;
        while (mag > 0) {
          if (mag & 1) acc = acc + base;
          base = base + base;
          mag >>= 1;
        }
        step = step + acc;
      }
      partial[k + 1] = step;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

void index_ranges(const GapSpec& g, std::vector<long long>& lo,
                  std::vector<long long>& hi) {
  lo.resize(g.rank());
  hi.resize(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g.symmetric) {
      lo[i] = -static_cast<long long>(g.bounds[i]);
      hi[i] = static_cast<long long>(g.bounds[i]);
    } else {
      lo[i] = 0;
      hi[i] = static_cast<long long>(g.bounds[i]) - 1;
    }
  }
}

void check_budget(const Integer& n, const EvalBudget& budget,
                  const char* what) {
  if (n > Integer(static_cast<unsigned long>(budget.max_points)))
    throw budget_error(what, n.get_d(),
                       static_cast<double>(budget.max_points));
}

} // namespace

EnumerationResult enumerate_progression(const CosetProgression& cp,
                                        const EvalBudget& budget) {
  check_budget(cp.index_count(), budget, "progression enumeration");
  std::vector<long long> lo, hi;
  index_ranges(cp.prog, lo, hi);
  std::vector<Scalar> elems;
  walk_indices(cp, lo, hi, [&](const Scalar& x) { elems.push_back(x); });
  return EnumerationResult{SetOfScalars::of(cp.field(), std::move(elems)),
                           cp.index_count()};
}

bool is_t_proper(const CosetProgression& cp, const Rational& t,
                 const EvalBudget& budget) {
  if (sgn(t) <= 0) throw usage_error("t-properness requires t > 0");
  const GapSpec& g = cp.prog;
  std::vector<long long> lo(g.rank()), hi(g.rank());
  Integer count(static_cast<unsigned long>(cp.subgroup.size()));
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Rational tn = t * static_cast<unsigned long>(g.bounds[i]);
    if (g.symmetric) {
      // integers n with |n| <= t*N_i
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), tn.get_num().get_mpz_t(),
                 tn.get_den().get_mpz_t());
      long long m = f.get_si();
      lo[i] = -m;
      hi[i] = m;
      count *= Integer(2 * m + 1);
    } else {
      // integers n with 0 <= n < t*N_i
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), tn.get_num().get_mpz_t(),
                 tn.get_den().get_mpz_t());
      long long m = c.get_si();
      lo[i] = 0;
      hi[i] = m - 1;
      count *= Integer(m);
    }
  }
  check_budget(count, budget, "t-properness enumeration");

  std::set<Scalar> seen;
  bool proper = true;
  walk_indices(cp, lo, hi, [&](const Scalar& x) {
    if (!proper) return;
    if (!seen.insert(x).second) proper = false;
  });
  return proper;
}

SymmetrizeResult symmetrize(const CosetProgression& cp,
                            const EvalBudget& budget) {
  SymmetrizeResult res;
  auto input = enumerate_progression(cp, budget);
  res.input_size = input.set.size();

  if (cp.prog.symmetric) {
    res.output = cp;
    res.padded_size = res.input_size;
    res.output_size = res.input_size;
    return res;
  }

  // Pad every N_i to odd, so the progression is a translate of a
  // symmetric one centred at x = a + sum ((N_i-1)/2) r_i.
  GapSpec padded = cp.prog;
  for (auto& b : padded.bounds)
    if (b % 2 == 0) b += 1;
  auto padded_enum = enumerate_progression(
      CosetProgression{cp.subgroup, padded}, budget);
  res.padded_size = padded_enum.set.size();

  const FieldSpec f = cp.field();
  Scalar x = padded.base;
  GapSpec sym;
  sym.base = Scalar::zero(f);
  sym.symmetric = true;
  for (std::size_t i = 0; i < padded.rank(); ++i) {
    std::uint64_t m = (padded.bounds[i] - 1) / 2;
    Scalar half = Scalar::zero(f);
    for (std::uint64_t k = 0; k < m; ++k) half = half + padded.gens[i];
    x = x + half;
    if (m >= 1) {
      sym.gens.push_back(padded.gens[i]);
      sym.bounds.push_back(m);
    }
  }
  // The direction {-x, 0, x} raises the rank by at most one.
  if (!x.is_zero()) {
    sym.gens.push_back(x);
    sym.bounds.push_back(1);
  }
  if (sym.gens.empty()) {
    // Degenerate: the input was {base} (+H); keep a rank-1 cover.
    sym.gens.push_back(cp.prog.base);
    sym.bounds.push_back(1);
  }

  res.output = CosetProgression{cp.subgroup, std::move(sym)};
  auto out_enum = enumerate_progression(res.output, budget);
  res.output_size = out_enum.set.size();
  for (const auto& e : input.set.elems)
    if (!out_enum.set.contains(e))
      throw check_violation("symmetrize: output does not contain input");
  return res;
}

FreimanBoxMap::FreimanBoxMap(const GapSpec& q, const EvalBudget& budget)
    : gap_(q) {
  gap_.validate();
  if (!gap_.symmetric)
    throw usage_error("FreimanBoxMap requires a symmetric progression");
  auto cp = CosetProgression::trivial(gap_);
  if (!is_t_proper(cp, Rational(3), budget))
    throw usage_error("FreimanBoxMap: progression is not 3-proper");

  const std::size_t d = gap_.rank();
  std::vector<long long> n(d, 0);
  auto rec = [&](auto&& self, std::size_t k, const Scalar& acc) -> void {
    if (k == d) {
      auto [it, fresh] = coords_.emplace(acc, n);
      if (!fresh)
        throw check_violation("FreimanBoxMap: collision in a proper box");
      return;
    }
    const long long N = static_cast<long long>(gap_.bounds[k]);
    for (long long v = -N; v <= N; ++v) {
      n[k] = v;
      Scalar term = Scalar::zero(acc.field());
      Scalar base = v < 0 ? gap_.gens[k].neg() : gap_.gens[k];
      for (long long i = 0; i < (v < 0 ? -v : v); ++i) term = term + base;
      self(self, k + 1, acc + term);
    }
  };
  rec(rec, 0, gap_.base);
  elements_.reserve(coords_.size());
  for (const auto& [e, c] : coords_) elements_.push_back(e);
}

std::vector<long long> FreimanBoxMap::map(const Scalar& x) const {
  auto it = coords_.find(x);
  if (it == coords_.end())
    throw usage_error("FreimanBoxMap: element " + x.str() +
                      " is not in the progression");
  return it->second;
}

Scalar FreimanBoxMap::preimage(const std::vector<long long>& coords) const {
  if (coords.size() != gap_.rank())
    throw usage_error("FreimanBoxMap::preimage: wrong rank");
  Scalar acc = gap_.base;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    long long v = coords[k];
    if (static_cast<std::uint64_t>(v < 0 ? -v : v) > gap_.bounds[k])
      throw usage_error("FreimanBoxMap::preimage: coordinate out of box");
    Scalar base = v < 0 ? gap_.gens[k].neg() : gap_.gens[k];
    for (long long i = 0; i < (v < 0 ? -v : v); ++i) acc = acc + base;
  }
  return acc;
}

namespace {

void require_bijection_input(const std::vector<Scalar>& a,
                             const std::vector<Scalar>& b) {
  if (a.size() != b.size())
    throw usage_error("Freiman check: |A| != |B|");
  if (a.empty()) throw usage_error("Freiman check: empty sets");
}

} // namespace

bool is_freiman_isomorphism(const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b,
                            const EvalBudget& budget) {
  require_bijection_input(a, b);
  const std::size_t n = a.size();
  Integer quads = Integer(static_cast<unsigned long>(n));
  quads = quads * quads * quads * quads;
  check_budget(quads, budget, "Freiman quadruple enumeration");

  // Precomputed pair sums; the quadruple loop compares them directly.
  std::vector<Scalar> sa(n * n), sb(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      sa[i * n + j] = a[i] + a[j];
      sb[i * n + j] = b[i] + b[j];
    }
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t kl = 0; kl < n * n; ++kl) {
      const bool ea = sa[ij] == sa[kl];
      const bool eb = sb[ij] == sb[kl];
      if (ea != eb) return false;
    }
  return true;
}

bool freiman_preserved_pairs(const std::vector<Scalar>& a,
                             const std::vector<Scalar>& b,
                             const EvalBudget& budget) {
  require_bijection_input(a, b);
  const std::size_t n = a.size();
  check_budget(Integer(static_cast<unsigned long>(n)) *
                   static_cast<unsigned long>(n),
               budget, "Freiman pair enumeration");
  // The quadruple condition says pair sums on the two sides induce the
  // same partition of index pairs, i.e. sumA <-> sumB is a bijection.
  std::map<Scalar, Scalar> fwd;
  std::map<Scalar, Scalar> rev;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar x = a[i] + a[j];
      Scalar y = b[i] + b[j];
      auto [f, fresh_f] = fwd.emplace(x, y);
      if (!fresh_f && !(f->second == y)) return false;
      auto [r, fresh_r] = rev.emplace(y, x);
      if (!fresh_r && !(r->second == x)) return false;
    }
  return true;
}

bool freiman_preserved_pairs_box(const std::vector<Scalar>& a,
                                 const std::vector<std::vector<long long>>& b,
                                 const EvalBudget& budget) {
  if (a.size() != b.size() || a.empty())
    throw usage_error("Freiman check: bad bijection input");
  const std::size_t n = a.size();
  check_budget(Integer(static_cast<unsigned long>(n)) *
                   static_cast<unsigned long>(n),
               budget, "Freiman pair enumeration");
  std::map<Scalar, std::vector<long long>> fwd;
  std::map<std::vector<long long>, Scalar> rev;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar x = a[i] + a[j];
      std::vector<long long> y(b[i].size());
      for (std::size_t k = 0; k < y.size(); ++k) y[k] = b[i][k] + b[j][k];
      auto [f, fresh_f] = fwd.emplace(x, y);
      if (!fresh_f && f->second != y) return false;
      auto [r, fresh_r] = rev.emplace(std::move(y), x);
      if (!fresh_r && !(r->second == x)) return false;
    }
  return true;
}

double box_convolution_entropy(
    const std::map<std::vector<long long>, Rational>& law) {
  std::map<std::vector<long long>, Rational> conv;
  for (const auto& [t1, q1] : law)
    for (const auto& [t2, q2] : law) {
      std::vector<long long> s(t1.size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = t1[k] + t2[k];
      conv[std::move(s)] += q1 * q2;
    }
  double sum = 0.0, comp = 0.0;
  for (const auto& [t, q] : conv) {
    if (q == 1) continue;
    double term = -mpq_get_d(q.get_mpq_t()) * log2_rational(q);
    double y = term - comp;
    double u = sum + y;
    comp = (u - sum) - y;
    sum = u;
  }
  return sum;
}

} // namespace sumprod
