#include "shadows/cxpoints.hpp"

#include <algorithm>
#include <sstream>

#include "shadows/invariants.hpp"

namespace shadows {

char sign_char(PointSign s) { return s == PointSign::Positive ? '+' : '-'; }

DecoratedShadow::DecoratedShadow(BranchedShadow s) : shadow(std::move(s)), points(shadow.poly.region_count()) {}

void DecoratedShadow::add(int region, ComplexPoint p) {
  if (region < 0 || region >= static_cast<int>(points.size()))
    throw ShadowError(ErrorCode::InvalidArgument, "region " + std::to_string(region) + " does not exist");
  if (p.index == 0) throw ShadowError(ErrorCode::InvalidArgument, "complex point of index 0");
  auto& v = points[region];
  v.insert(std::upper_bound(v.begin(), v.end(), p), p);
}

int DecoratedShadow::count(PointSign sign) const {
  int n = 0;
  for (const auto& v : points)
    for (const ComplexPoint& p : v) n += p.sign == sign;
  return n;
}

void validate(const DecoratedShadow& d) {
  if (static_cast<int>(d.points.size()) != d.shadow.poly.region_count())
    throw ShadowError(ErrorCode::InvalidArgument, "decoration size differs from region count");
  for (const auto& v : d.points) {
    if (!std::is_sorted(v.begin(), v.end())) throw ShadowError(ErrorCode::InvalidArgument, "unsorted point multiset");
    for (const ComplexPoint& p : v)
      if (p.index == 0) throw ShadowError(ErrorCode::InvalidArgument, "complex point of index 0");
  }
}

DecoratedShadow normalize(const DecoratedShadow& d) {
  DecoratedShadow out(d.shadow);
  for (int r = 0; r < static_cast<int>(d.points.size()); ++r)
    for (const ComplexPoint& p : d.points[r])
      for (int k = 0; k < std::abs(p.index); ++k) out.add(r, {p.sign, p.index > 0 ? 1 : -1});
  return out;
}

namespace {

IntVector index_vector(const DecoratedShadow& d, PointSign sign) {
  IntVector v(d.points.size(), 0);
  for (std::size_t r = 0; r < d.points.size(); ++r)
    for (const ComplexPoint& p : d.points[r])
      if (p.sign == sign) v[r] += p.index;
  return v;
}

void check_region(const DecoratedShadow& d, int region) {
  if (region < 0 || region >= static_cast<int>(d.points.size()))
    throw ShadowError(ErrorCode::InvalidArgument, "region " + std::to_string(region) + " does not exist");
}

bool take(std::vector<ComplexPoint>& v, const ComplexPoint& p) {
  const auto it = std::find(v.begin(), v.end(), p);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

}  // namespace

IndexCochains index_cochains(const DecoratedShadow& d) {
  auto pres = branched_presentation(d.shadow);
  return {make_class(pres, index_vector(d, PointSign::Positive)), make_class(pres, index_vector(d, PointSign::Negative))};
}

DecoratedShadow rewrite_annihilate(const DecoratedShadow& d, int region, ComplexPoint p1, ComplexPoint p2) {
  check_region(d, region);
  if (p1.sign != p2.sign) throw ShadowError(ErrorCode::PreconditionViolated, "annihilated points differ in sign");
  if (p1.index + p2.index != 0 || std::abs(p1.index) != 1)
    throw ShadowError(ErrorCode::PreconditionViolated, "annihilated points need indices +1 and -1");
  DecoratedShadow out = d;
  if (!take(out.points[region], p1) || !take(out.points[region], p2))
    throw ShadowError(ErrorCode::PreconditionViolated, "point not present in region " + std::to_string(region));
  return out;
}

DecoratedShadow rewrite_create(const DecoratedShadow& d, int region, PointSign sign) {
  check_region(d, region);
  DecoratedShadow out = d;
  out.add(region, {sign, 1});
  out.add(region, {sign, -1});
  return out;
}

DecoratedShadow rewrite_edge_push(const DecoratedShadow& d, int edge, PointSign sign, int epsilon) {
  const Polyhedron& p = d.shadow.poly;
  if (edge < 0 || edge >= p.edge_count())
    throw ShadowError(ErrorCode::InvalidArgument, "edge " + std::to_string(edge) + " does not exist");
  if (epsilon != 1 && epsilon != -1) throw ShadowError(ErrorCode::InvalidArgument, "push epsilon must be +1 or -1");
  const int pw = preferred_wing(d.shadow, edge).wing;
  DecoratedShadow out = d;
  for (int w = 0; w < 3; ++w) out.add(p.region_of(edge, w), {sign, w == pw ? epsilon : -epsilon});
  return out;
}

std::string format_rewrite(const CxRewrite& r) {
  std::ostringstream os;
  switch (r.kind) {
    case RewriteKind::Create: os << "create " << r.target << ' ' << sign_char(r.sign); break;
    case RewriteKind::Annihilate: os << "annihilate " << r.target << ' ' << sign_char(r.sign); break;
    case RewriteKind::Push:
      os << "push " << r.target << ' ' << sign_char(r.sign) << ' ' << (r.epsilon > 0 ? "+1" : "-1");
      break;
  }
  return os.str();
}

CxRewrite parse_rewrite(const std::string& line) {
  std::istringstream is(line);
  std::string word, sg, eps;
  CxRewrite r;
  if (!(is >> word >> r.target >> sg) || (sg != "+" && sg != "-"))
    throw ShadowError(ErrorCode::ParseError, "bad rewrite line: " + line);
  r.sign = sg == "+" ? PointSign::Positive : PointSign::Negative;
  if (word == "create") {
    r.kind = RewriteKind::Create;
  } else if (word == "annihilate") {
    r.kind = RewriteKind::Annihilate;
  } else if (word == "push") {
    r.kind = RewriteKind::Push;
    if (!(is >> eps) || (eps != "+1" && eps != "-1")) throw ShadowError(ErrorCode::ParseError, "bad push epsilon: " + line);
    r.epsilon = eps == "+1" ? 1 : -1;
  } else {
    throw ShadowError(ErrorCode::ParseError, "unknown rewrite: " + word);
  }
  std::string extra;
  if (is >> extra) throw ShadowError(ErrorCode::ParseError, "trailing text in rewrite: " + line);
  return r;
}

DecoratedShadow apply_rewrite(const DecoratedShadow& d, const CxRewrite& r) {
  switch (r.kind) {
    case RewriteKind::Create: return rewrite_create(d, r.target, r.sign);
    case RewriteKind::Annihilate: return rewrite_annihilate(d, r.target, {r.sign, 1}, {r.sign, -1});
    case RewriteKind::Push: return rewrite_edge_push(d, r.target, r.sign, r.epsilon);
  }
  return d;
}

namespace {

mpz_class l1(const IntVector& v) {
  mpz_class t = 0;
  for (const mpz_class& x : v) t += abs(x);
  return t;
}

// Shortens a solution of y * rel = v along the left kernel of rel.
void shorten(IntVector& y, const IntMatrix& rel) {
  const std::vector<IntVector> ker = integer_kernel(rel.transpose());
  bool improved = true;
  while (improved) {
    improved = false;
    for (const IntVector& k : ker)
      for (int s : {1, -1}) {
        IntVector t = y;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += s * k[i];
        if (l1(t) < l1(y)) {
          y = std::move(t);
          improved = true;
        }
      }
  }
}

}  // namespace

Elimination eliminate_negative(const DecoratedShadow& d, int budget) {
  validate(d);
  Elimination res;
  auto pres = branched_presentation(d.shadow);
  const IntVector v = index_vector(d, PointSign::Negative);
  res.residual = make_class(pres, v);
  std::optional<IntVector> y = pres->solve(v);
  if (!y) {
    res.obstructed = true;
    return res;
  }
  shorten(*y, pres->relations());
  res.residual = zero_class(pres);
  DecoratedShadow cur = normalize(d);
  auto emit = [&](const CxRewrite& r) {
    if (static_cast<int>(res.steps.size()) >= budget)
      throw ShadowError(ErrorCode::BudgetExceeded, "negative point elimination needs more than " +
                                                       std::to_string(budget) + " rewrites");
    cur = apply_rewrite(cur, r);
    res.steps.push_back(r);
  };
  for (int e = 0; e < static_cast<int>(y->size()); ++e) {
    const mpz_class& n = (*y)[e];
    for (mpz_class k = 0; k < abs(n); ++k) emit({RewriteKind::Push, e, PointSign::Negative, n > 0 ? 1 : -1});
  }
  for (int r = 0; r < static_cast<int>(cur.points.size()); ++r) {
    const ComplexPoint up{PointSign::Negative, 1}, down{PointSign::Negative, -1};
    while (std::count(cur.points[r].begin(), cur.points[r].end(), up) > 0 &&
           std::count(cur.points[r].begin(), cur.points[r].end(), down) > 0)
      emit({RewriteKind::Annihilate, r, PointSign::Negative, 1});
  }
  if (cur.count(PointSign::Negative) != 0)
    throw ShadowError(ErrorCode::InvalidArgument, "internal: negative points left after elimination");
  res.result = std::move(cur);
  return res;
}

BishopReport bishop_check(const std::vector<ComplexPoint>& points, const RegionGeometry& geom) {
  if ((geom.chi + geom.nu + geom.c1) % 2 != 0)
    throw ShadowError(ErrorCode::ParityViolation, "chi + nu + c1 is odd");
  BishopReport rep;
  for (const ComplexPoint& p : points) (p.sign == PointSign::Positive ? rep.plus : rep.minus) += p.index;
  rep.plus_residual = 2 * rep.plus - (geom.chi + geom.nu + geom.c1);
  rep.minus_residual = 2 * rep.minus - (geom.chi + geom.nu - geom.c1);
  rep.pass = rep.plus_residual == 0 && rep.minus_residual == 0;
  return rep;
}

}  // namespace shadows
