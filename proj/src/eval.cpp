#include <sumprod/eval.hpp>

#include <algorithm>
#include <memory>

namespace sumprod {

const FieldSpec& Bindings::field() const {
  if (vars.empty()) throw usage_error("empty bindings");
  const FieldSpec& f = vars.begin()->second.field();
  for (const auto& [name, d] : vars)
    if (!(d.field() == f))
      throw usage_error("binding '" + name + "' uses field " +
                        d.field().str() + ", expected " + f.str());
  return f;
}

namespace {

// AST compiled against a field and a variable layout, so the hot loop
// never touches names or shared_ptrs.
struct CNode {
  Expr::Op op;
  int var_idx = -1;
  std::uint64_t lit_fp = 0;
  Rational lit_q;
  std::unique_ptr<CNode> lhs, rhs;
};

std::unique_ptr<CNode> compile(const ExprPtr& e, const FieldSpec& field,
                               const std::map<std::string, int>& layout) {
  auto n = std::make_unique<CNode>();
  n->op = e->op;
  switch (e->op) {
    case Expr::Op::var: {
      auto it = layout.find(e->name);
      if (it == layout.end())
        throw usage_error("unbound variable '" + e->name + "'");
      n->var_idx = it->second;
      break;
    }
    case Expr::Op::literal: {
      Scalar c = Scalar::from_int(field, e->value);
      if (field.is_prime_field())
        n->lit_fp = c.res();
      else
        n->lit_q = c.rat();
      break;
    }
    case Expr::Op::neg:
      n->lhs = compile(e->lhs, field, layout);
      break;
    default:
      n->lhs = compile(e->lhs, field, layout);
      n->rhs = compile(e->rhs, field, layout);
      break;
  }
  return n;
}

std::uint64_t eval_fp(const CNode& n, const std::vector<std::uint64_t>& cur,
                      std::uint64_t p) {
  switch (n.op) {
    case Expr::Op::var: return cur[static_cast<std::size_t>(n.var_idx)];
    case Expr::Op::literal: return n.lit_fp;
    case Expr::Op::add: {
      std::uint64_t a = eval_fp(*n.lhs, cur, p), b = eval_fp(*n.rhs, cur, p);
      std::uint64_t t = p - b;
      return a >= t ? a - t : a + b;
    }
    case Expr::Op::sub: {
      std::uint64_t a = eval_fp(*n.lhs, cur, p), b = eval_fp(*n.rhs, cur, p);
      return a >= b ? a - b : a + (p - b);
    }
    case Expr::Op::mul:
      return mulmod_u64(eval_fp(*n.lhs, cur, p), eval_fp(*n.rhs, cur, p), p);
    case Expr::Op::neg: {
      std::uint64_t a = eval_fp(*n.lhs, cur, p);
      return a == 0 ? 0 : p - a;
    }
  }
  return 0;
}

Rational eval_q(const CNode& n, const std::vector<const Rational*>& cur) {
  switch (n.op) {
    case Expr::Op::var: return *cur[static_cast<std::size_t>(n.var_idx)];
    case Expr::Op::literal: return n.lit_q;
    case Expr::Op::add: return eval_q(*n.lhs, cur) + eval_q(*n.rhs, cur);
    case Expr::Op::sub: return eval_q(*n.lhs, cur) - eval_q(*n.rhs, cur);
    case Expr::Op::mul: return eval_q(*n.lhs, cur) * eval_q(*n.rhs, cur);
    case Expr::Op::neg: return -eval_q(*n.lhs, cur);
  }
  return Rational(0);
}

struct VarData {
  std::vector<std::uint64_t> fp_vals;
  std::vector<Rational> q_vals;
  std::vector<Integer> nums; // mass numerators over this var's denominator
  Integer denom;
};

// Law of the query tuple as integer numerators over one common
// denominator; entries sorted in canonical key order.
struct RawLaw {
  FieldSpec field = FieldSpec::rationals();
  std::size_t arity = 1;
  Integer denom;
  std::vector<std::pair<Tuple, Integer>> entries;

  JointLaw to_law() const {
    std::map<Tuple, Rational> atoms;
    for (const auto& [key, n] : entries) {
      Rational q(n, denom);
      q.canonicalize();
      atoms.emplace(key, std::move(q));
    }
    return JointLaw(field, arity, std::move(atoms));
  }

  EntropyValue entropy(QueryKind kind) const {
    EntropyValue v;
    if (kind == QueryKind::min_entropy) {
      Integer best = 0;
      for (const auto& [key, n] : entries)
        if (n > best) best = n;
      Rational q(best, denom);
      q.canonicalize();
      v.point_prob = q;
      v.bits = -log2_rational(q);
      return v;
    }
    if (kind == QueryKind::collision) {
      Integer ssq = 0;
      for (const auto& [key, n] : entries) ssq += n * n;
      Rational q(ssq, denom * denom);
      q.canonicalize();
      v.point_prob = q;
      v.bits = -log2_rational(q);
      return v;
    }
    // Shannon, compensated summation in canonical entry order.
    double s = 0.0, c = 0.0;
    bool uniform = true;
    for (const auto& [key, n] : entries) {
      if (n != entries.front().second) uniform = false;
      Rational q(n, denom);
      q.canonicalize();
      if (q == 1) continue;
      double t = -mpq_get_d(q.get_mpq_t()) * log2_rational(q);
      double y = t - c;
      double u = s + y;
      c = (u - s) - y;
      s = u;
    }
    v.bits = s < 0.0 ? 0.0 : s;
    if (uniform && !entries.empty()) {
      Rational q(entries.front().second, denom);
      q.canonicalize();
      v.point_prob = q;
      v.bits = -log2_rational(q);
    }
    return v;
  }
};

constexpr std::uint64_t kDenseCap = 1u << 22;

template <typename Num>
Num to_num(const Integer& z);
template <>
std::uint64_t to_num<std::uint64_t>(const Integer& z) {
  return mpz_get_ui(z.get_mpz_t());
}
template <>
Integer to_num<Integer>(const Integer& z) { return z; }

Integer num_to_mpz(std::uint64_t n) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return z;
}
Integer num_to_mpz(const Integer& n) { return n; }

template <typename Num>
RawLaw enumerate_impl(const FieldSpec& field,
                      const std::vector<VarData>& vars,
                      const std::vector<std::unique_ptr<CNode>>& comps,
                      const Integer& denom) {
  RawLaw out;
  out.field = field;
  out.arity = comps.size();
  out.denom = denom;

  const std::size_t nv = vars.size();
  const bool prime = field.is_prime_field();
  const std::uint64_t p = prime ? field.p() : 0;

  const bool dense = prime && comps.size() == 1 && p <= kDenseCap;
  std::vector<Num> dense_buckets;
  if (dense) dense_buckets.assign(p, Num(0));
  std::map<std::vector<std::uint64_t>, Num> sparse_fp;
  std::map<std::vector<Rational>, Num> sparse_q;

  std::vector<std::uint64_t> cur_fp(nv);
  std::vector<const Rational*> cur_q(nv);
  std::vector<std::uint64_t> key_fp(comps.size());
  std::vector<Rational> key_q(comps.size());

  // Numerator products along the running assignment prefix.
  std::vector<Num> prefix(nv + 1);
  prefix[0] = Num(1);

  auto emit = [&](const Num& w) {
    if (dense) {
      dense_buckets[eval_fp(*comps[0], cur_fp, p)] += w;
      return;
    }
    if (prime) {
      for (std::size_t i = 0; i < comps.size(); ++i)
        key_fp[i] = eval_fp(*comps[i], cur_fp, p);
      sparse_fp[key_fp] += w;
    } else {
      for (std::size_t i = 0; i < comps.size(); ++i)
        key_q[i] = eval_q(*comps[i], cur_q);
      sparse_q[key_q] += w;
    }
  };

  // Odometer over the product of supports.
  auto recurse = [&](auto&& self, std::size_t vi) -> void {
    if (vi == nv) {
      emit(prefix[nv]);
      return;
    }
    const VarData& vd = vars[vi];
    const std::size_t sz = vd.nums.size();
    for (std::size_t j = 0; j < sz; ++j) {
      if (prime)
        cur_fp[vi] = vd.fp_vals[j];
      else
        cur_q[vi] = &vd.q_vals[j];
      prefix[vi + 1] = prefix[vi] * to_num<Num>(vd.nums[j]);
      self(self, vi + 1);
    }
  };
  recurse(recurse, 0);

  // Collect into canonical sorted entries.
  if (dense) {
    for (std::uint64_t r = 0; r < p; ++r) {
      if (dense_buckets[r] == Num(0)) continue;
      out.entries.emplace_back(Tuple{Scalar::residue(field, r)},
                               num_to_mpz(dense_buckets[r]));
    }
  } else if (prime) {
    for (const auto& [key, n] : sparse_fp) {
      Tuple t;
      t.reserve(key.size());
      for (auto r : key) t.push_back(Scalar::residue(field, r));
      out.entries.emplace_back(std::move(t), num_to_mpz(n));
    }
  } else {
    for (const auto& [key, n] : sparse_q) {
      Tuple t;
      t.reserve(key.size());
      for (const auto& q : key) t.push_back(Scalar::rational(q));
      out.entries.emplace_back(std::move(t), num_to_mpz(n));
    }
  }
  return out;
}

RawLaw enumerate_query(const std::vector<ExprPtr>& comps, const Bindings& b,
                       const EvalBudget& budget) {
  if (comps.empty()) throw usage_error("query tuple must be non-empty");
  const FieldSpec field = b.field();

  // Only variables actually referenced take part in the enumeration.
  std::vector<std::string> used = collect_vars(comps);
  std::map<std::string, int> layout;
  std::vector<VarData> vars;
  Integer denom = 1;
  Integer points = 1;
  for (const auto& name : used) {
    auto it = b.vars.find(name);
    if (it == b.vars.end())
      throw usage_error("unbound variable '" + name + "'");
    const Dist& d = it->second;
    VarData vd;
    vd.denom = 1;
    for (const auto& [a, q] : d.atoms())
      mpz_lcm(vd.denom.get_mpz_t(), vd.denom.get_mpz_t(),
              q.get_den().get_mpz_t());
    for (const auto& [a, q] : d.atoms()) {
      if (field.is_prime_field())
        vd.fp_vals.push_back(a.res());
      else
        vd.q_vals.push_back(a.rat());
      vd.nums.push_back(Integer(q.get_num() * (vd.denom / q.get_den())));
    }
    denom *= vd.denom;
    points *= static_cast<unsigned long>(d.support_size());
    layout.emplace(name, static_cast<int>(vars.size()));
    vars.push_back(std::move(vd));
  }
  if (points > Integer(static_cast<unsigned long>(budget.max_points)))
    throw budget_error("pushforward enumeration", points.get_d(),
                       static_cast<double>(budget.max_points));

  std::vector<std::unique_ptr<CNode>> cn;
  cn.reserve(comps.size());
  for (const auto& c : comps) cn.push_back(compile(c, field, layout));

  // All per-point numerator products are bounded by the common
  // denominator, so a u64 fast path is exact whenever D fits.
  if (mpz_sizeinbase(denom.get_mpz_t(), 2) <= 63)
    return enumerate_impl<std::uint64_t>(field, vars, cn, denom);
  return enumerate_impl<Integer>(field, vars, cn, denom);
}

} // namespace

JointLaw pushforward(const std::vector<ExprPtr>& comps, const Bindings& b,
                     const EvalBudget& budget) {
  return enumerate_query(comps, b, budget).to_law();
}

EntropyValue query_entropy(const std::vector<ExprPtr>& comps,
                           const Bindings& b, QueryKind kind,
                           const EvalBudget& budget) {
  if (kind == QueryKind::ruzsa)
    throw usage_error("query_entropy: dR takes two component laws");
  return enumerate_query(comps, b, budget).entropy(kind);
}

EntropyValue ruzsa_distance(const Dist& x, const Dist& y,
                            const EvalBudget& budget) {
  Bindings joint;
  joint.bind("A", x).bind("B", y);
  std::vector<ExprPtr> diff = {
      Expr::make_sub(Expr::make_var("A"), Expr::make_var("B"))};
  double h_diff = query_entropy(diff, joint, QueryKind::shannon, budget).bits;
  double hx = shannon(x).bits;
  double hy = shannon(y).bits;
  EntropyValue v;
  v.bits = h_diff - 0.5 * hx - 0.5 * hy;
  return v;
}

EntropyValue evaluate_query(const QueryAst& q, const Bindings& b,
                            const EvalBudget& budget) {
  if (q.kind != QueryKind::ruzsa)
    return query_entropy(q.components, b, q.kind, budget);
  if (q.components.size() != 2)
    throw usage_error("dR takes exactly two components");
  Dist lhs = pushforward({q.components[0]}, b, budget).to_dist();
  Dist rhs = pushforward({q.components[1]}, b, budget).to_dist();
  return ruzsa_distance(lhs, rhs, budget);
}

EntropyValue evaluate_query_text(std::string_view text, const Bindings& b,
                                 const EvalBudget& budget) {
  return evaluate_query(parse_query(text), b, budget);
}

std::pair<Dist, Rational> threshold_condition(const ExprPtr& target,
                                              const Bindings& b,
                                              const std::string& z_name,
                                              const Rational& delta,
                                              const EvalBudget& budget) {
  if (sgn(delta) <= 0 || delta >= 1)
    throw usage_error("threshold delta must satisfy 0 < delta < 1");
  auto it = b.vars.find(z_name);
  if (it == b.vars.end())
    throw usage_error("threshold variable '" + z_name + "' is not bound");
  const Dist& z = it->second;

  Rational kept = 0;
  std::vector<std::pair<Scalar, Rational>> atoms;
  for (const auto& [a, q] : z.atoms())
    if (q >= delta) {
      atoms.emplace_back(a, q);
      kept += q;
    }
  if (atoms.empty())
    throw std::domain_error(
        "threshold set A is empty (delta exceeds the largest mass of " +
        z_name + ")");
  for (auto& [a, q] : atoms) {
    q /= kept;
    q.canonicalize();
  }

  Bindings conditioned = b;
  conditioned.bind(z_name, Dist::from_atoms(z.field(), std::move(atoms)));
  Dist law = pushforward({target}, conditioned, budget).to_dist();
  return {std::move(law), kept};
}

} // namespace sumprod
