#include <sumprod/incidence.hpp>

#include <algorithm>

namespace sumprod {

namespace {

void check_budget(const Integer& n, const EvalBudget& budget,
                  const char* what) {
  if (n > Integer(static_cast<unsigned long>(budget.max_points)))
    throw budget_error(what, n.get_d(),
                       static_cast<double>(budget.max_points));
}

} // namespace

PointSet3 PointSet3::of(const FieldSpec& f,
                        std::vector<std::array<Scalar, 3>> pts) {
  for (const auto& p : pts)
    for (const auto& coord : p)
      if (!(coord.field() == f)) throw usage_error("point field mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointSet3{f, std::move(pts)};
}

std::array<Scalar, 4> PlaneSet3::canonical(std::array<Scalar, 4> plane) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (plane[i].is_zero()) continue;
    Scalar s = plane[i].inv();
    for (auto& c : plane) c = c * s;
    return plane;
  }
  throw usage_error("plane has zero normal vector");
}

PlaneSet3 PlaneSet3::of(const FieldSpec& f,
                        std::vector<std::array<Scalar, 4>> planes) {
  for (auto& p : planes) {
    for (const auto& coord : p)
      if (!(coord.field() == f)) throw usage_error("plane field mismatch");
    p = canonical(p);
  }
  std::sort(planes.begin(), planes.end());
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
  return PlaneSet3{f, std::move(planes)};
}

std::uint64_t count_incidences(const PointSet3& p, const PlaneSet3& q,
                               const EvalBudget& budget) {
  if (!(p.field == q.field)) throw usage_error("incidence field mismatch");
  check_budget(Integer(static_cast<unsigned long>(p.pts.size())) *
                   static_cast<unsigned long>(q.planes.size()),
               budget, "incidence counting");
  std::uint64_t count = 0;
  for (const auto& pt : p.pts)
    for (const auto& pl : q.planes) {
      Scalar lhs = pl[0] * pt[0] + pl[1] * pt[1] + pl[2] * pt[2];
      if (lhs == pl[3]) ++count;
    }
  return count;
}

std::uint64_t energy_product_sum(const SetOfScalars& a, const SetOfScalars& b,
                                 const SetOfScalars& c,
                                 const EvalBudget& budget) {
  if (!(a.field == b.field) || !(a.field == c.field))
    throw usage_error("energy field mismatch");
  Integer triples = Integer(static_cast<unsigned long>(a.size())) *
                    static_cast<unsigned long>(b.size()) *
                    static_cast<unsigned long>(c.size());
  check_budget(triples, budget, "energy triple enumeration");

  std::map<Scalar, std::uint64_t> mult;
  for (const auto& x : a.elems)
    for (const auto& y : b.elems)
      for (const auto& z : c.elems) ++mult[x * (y + z)];
  std::uint64_t n = 0;
  for (const auto& [v, m] : mult) n += m * m;
  return n;
}

std::uint64_t energy_rnr(const std::vector<std::pair<Scalar, Scalar>>& pts,
                         const EvalBudget& budget) {
  Integer pairs = Integer(static_cast<unsigned long>(pts.size())) *
                  static_cast<unsigned long>(pts.size());
  check_budget(pairs, budget, "difference-product pair enumeration");
  std::map<Scalar, std::uint64_t> mult;
  for (const auto& [a, c] : pts)
    for (const auto& [b, d] : pts) {
      Scalar u = (a - b) * (c - d);
      if (!u.is_zero()) ++mult[u];
    }
  std::uint64_t n = 0;
  for (const auto& [v, m] : mult) n += m * m;
  return n;
}

std::uint64_t expander_size(const SetOfScalars& a, const SetOfScalars& b,
                            const SetOfScalars& c, const EvalBudget& budget) {
  Integer work = Integer(static_cast<unsigned long>(a.size())) *
                 static_cast<unsigned long>(b.size()) *
                 static_cast<unsigned long>(c.size());
  check_budget(work, budget, "expander enumeration");
  return productset(a, sumset(b, c)).size();
}

KohConstruction koh_construction(const SetOfScalars& a, const SetOfScalars& b,
                                 const SetOfScalars& c) {
  if (!(a.field == b.field) || !(a.field == c.field))
    throw usage_error("construction field mismatch");
  const FieldSpec& f = a.field;
  const Scalar one = Scalar::one(f);
  std::vector<std::array<Scalar, 3>> pts;
  std::vector<std::array<Scalar, 4>> planes;
  for (const auto& x : a.elems)       // a resp. a'
    for (const auto& y : b.elems)     // b' resp. b
      for (const auto& z : c.elems) { // c resp. c'
        pts.push_back({x, y, x * z});
        planes.push_back({y, x.neg(), one, x * z});
      }
  return KohConstruction{PointSet3::of(f, std::move(pts)),
                         PlaneSet3::of(f, std::move(planes))};
}

} // namespace sumprod
