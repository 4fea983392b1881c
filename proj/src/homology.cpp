#include "shadows/homology.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace shadows {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw ShadowError(ErrorCode::InvalidArgument, "matrix shapes do not compose");
  IntMatrix c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool IntMatrix::operator==(const IntMatrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

IntVector IntMatrix::row(int i) const {
  return IntVector(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ShadowError(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void row_addmul(IntMatrix& m, int dst, int src, const mpz_class& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}
void col_addmul(IntMatrix& m, int dst, int src, const mpz_class& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}
void row_swap(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void col_swap(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s;
  const int m = a.rows();
  const int n = a.cols();
  s.D = a;
  s.U = IntMatrix::identity(m);
  s.V = IntMatrix::identity(n);
  IntMatrix& D = s.D;
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) goto finished;
      row_swap(D, t, pi);
      row_swap(s.U, t, pi);
      col_swap(D, t, pj);
      col_swap(s.V, t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_addmul(D, i, t, -q);
        row_addmul(s.U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_addmul(D, j, t, -q);
        col_addmul(s.V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        row_addmul(D, t, bad, 1);
        row_addmul(s.U, t, bad, 1);
        continue;
      }
      break;
    }
    if (D(t, t) < 0) {
      for (int j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (int j = 0; j < m; ++j) s.U(t, j) = -s.U(t, j);
    }
  }
finished:
  s.rank = t;
  for (int i = 0; i < s.rank; ++i) s.diagonal.push_back(D(i, i));
  return s;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (int j = s.rank; j < a.cols(); ++j) {
    IntVector v(a.cols());
    for (int i = 0; i < a.cols(); ++i) v[i] = s.V(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

Presentation::Presentation(int generators, IntMatrix relations, std::vector<std::string> labels)
    : generators_(generators), relations_(std::move(relations)), labels_(std::move(labels)) {
  if (relations_.rows() > 0 && relations_.cols() != generators_) {
    throw ShadowError(ErrorCode::InvalidArgument, "relation width differs from generator count");
  }
  if (relations_.rows() == 0) relations_ = IntMatrix(0, generators_);
  snf_ = smith_normal_form(relations_);
}

namespace {

IntVector times_v(const IntVector& v, const IntMatrix& V) {
  IntVector w(V.cols());
  for (int i = 0; i < V.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < V.cols(); ++j) w[j] += v[i] * V(i, j);
  }
  return w;
}

}  // namespace

bool Presentation::in_lattice(const IntVector& v) const {
  if (static_cast<int>(v.size()) != generators_) throw ShadowError(ErrorCode::InvalidArgument, "vector width");
  const IntVector w = times_v(v, snf_.V);
  for (int i = 0; i < generators_; ++i) {
    if (i < snf_.rank) {
      if (w[i] % snf_.diagonal[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

std::optional<IntVector> Presentation::solve(const IntVector& v) const {
  if (!in_lattice(v)) return std::nullopt;
  const IntVector w = times_v(v, snf_.V);
  IntVector z(relations_.rows());
  for (int i = 0; i < snf_.rank; ++i) z[i] = w[i] / snf_.diagonal[i];
  return times_v(z, snf_.U);
}

IntVector Presentation::class_key(const IntVector& v) const {
  const IntVector w = times_v(v, snf_.V);
  IntVector key;
  for (int i = 0; i < generators_; ++i) {
    if (i < snf_.rank) {
      if (snf_.diagonal[i] == 1) continue;
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t());
      key.push_back(r);
    } else {
      key.push_back(w[i]);
    }
  }
  return key;
}

IntVector Presentation::torsion() const {
  IntVector out;
  for (const auto& d : snf_.diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

bool Presentation::has_two_torsion() const {
  for (const auto& d : snf_.diagonal)
    if (d % 2 == 0) return true;
  return false;
}

IntVector torsion(const Presentation& pres) { return pres.torsion(); }

CochainClass make_class(std::shared_ptr<const Presentation> pres, IntVector rep, int scale) {
  if (static_cast<int>(rep.size()) != pres->generators()) {
    throw ShadowError(ErrorCode::InvalidArgument, "cochain width differs from generator count");
  }
  return CochainClass{std::move(rep), scale, std::move(pres)};
}

CochainClass unit_class(std::shared_ptr<const Presentation> pres, int generator, int coefficient) {
  IntVector v(pres->generators());
  v.at(generator) = coefficient;
  return make_class(std::move(pres), std::move(v), 1);
}

CochainClass zero_class(std::shared_ptr<const Presentation> pres, int scale) {
  IntVector v(pres->generators());
  return make_class(std::move(pres), std::move(v), scale);
}

CochainClass CochainClass::doubled() const {
  if (scale == 2) return *this;
  CochainClass c = *this;
  for (auto& x : c.rep) x *= 2;
  c.scale = 2;
  return c;
}

std::string CochainClass::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (i) os << ' ';
    if (scale == 2 && rep[i] % 2 != 0)
      os << rep[i] << "/2";
    else
      os << (scale == 2 ? mpz_class(rep[i] / 2) : rep[i]);
  }
  os << ']';
  return os.str();
}

namespace {

void check_compatible(const CochainClass& x, const CochainClass& y) {
  if (x.scale != y.scale) throw ShadowError(ErrorCode::ScaleMismatch, "classes live at different scales");
  if (x.pres != y.pres && !(x.pres && y.pres && x.pres->relations() == y.pres->relations())) {
    throw ShadowError(ErrorCode::InvalidArgument, "classes belong to different presentations");
  }
}

}  // namespace

bool class_equal(const CochainClass& x, const CochainClass& y) {
  check_compatible(x, y);
  IntVector d(x.rep.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = x.rep[i] - y.rep[i];
  return x.pres->in_lattice(d);
}

bool is_zero_class(const CochainClass& x) { return class_equal(x, zero_class(x.pres, x.scale)); }

CochainClass operator+(const CochainClass& x, const CochainClass& y) {
  check_compatible(x, y);
  CochainClass c = x;
  for (std::size_t i = 0; i < c.rep.size(); ++i) c.rep[i] += y.rep[i];
  return c;
}

CochainClass operator-(const CochainClass& x) {
  CochainClass c = x;
  for (auto& v : c.rep) v = -v;
  return c;
}

CochainClass operator-(const CochainClass& x, const CochainClass& y) { return x + (-y); }

CochainClass operator*(long k, const CochainClass& x) {
  CochainClass c = x;
  for (auto& v : c.rep) v *= k;
  return c;
}

namespace {

// v in region coordinates from SNF coordinates a (v = a * V^-1).
IntVector from_snf_coords(const SmithForm& s, const IntVector& a) {
  const SmithForm inv = smith_normal_form(s.V);
  // V is unimodular, so its inverse is inv.V * inv.U.
  return times_v(a, inv.V * inv.U);
}

mpz_class inverse_mod(long k, const mpz_class& d) {
  mpz_class inv, kk = k;
  mpz_invert(inv.get_mpz_t(), kk.get_mpz_t(), d.get_mpz_t());
  return inv;
}

// Integer class a with divisor * a equal to the doubled-scale class x.
// divisor is 2 (recover the integral class x/2) or 4 (halve it).
CochainClass integral_quotient(const CochainClass& x, long divisor) {
  const Presentation& p = *x.pres;
  const SmithForm& s = p.smith();
  const int n = p.generators();
  const IntVector w = times_v(x.rep, s.V);
  IntVector a(n);
  for (int i = 0; i < n; ++i) {
    if (i < s.rank) {
      const mpz_class& d = s.diagonal[i];
      if (d == 1) continue;
      if (d % 2 == 0) throw ShadowError(ErrorCode::TorsionObstruction, "2-torsion makes the integral class ambiguous");
      mpz_class r = w[i] * inverse_mod(divisor, d);
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
      a[i] = r;
    } else {
      if (w[i] % divisor != 0) throw ShadowError(ErrorCode::InvalidArgument, "class is not divisible");
      a[i] = w[i] / divisor;
    }
  }
  return make_class(x.pres, from_snf_coords(s, a), 1);
}

}  // namespace

CochainClass to_integer_scale(const CochainClass& x) {
  if (x.scale == 1) return x;
  bool even = true;
  for (const auto& v : x.rep) even = even && v % 2 == 0;
  if (even) {
    CochainClass c = x;
    for (auto& v : c.rep) v /= 2;
    c.scale = 1;
    return c;
  }
  return integral_quotient(x, 2);
}

CochainClass divide_by_two(const CochainClass& x) {
  if (x.scale == 1) {
    if (x.pres->has_two_torsion())
      throw ShadowError(ErrorCode::TorsionObstruction, "2-torsion makes the half class ambiguous");
    return integral_quotient(x.doubled(), 4);
  }
  if (x.pres->has_two_torsion())
    throw ShadowError(ErrorCode::TorsionObstruction, "2-torsion makes the half class ambiguous");
  return integral_quotient(x, 4);
}

IntVector to_int_vector(const std::vector<int>& v) {
  IntVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

Presentation local_presentation(const IntMatrix& boundary, const std::vector<int>& regions,
                                const std::vector<int>& edges) {
  std::vector<int> col(boundary.cols(), -1);
  for (std::size_t k = 0; k < regions.size(); ++k) col.at(regions[k]) = static_cast<int>(k);
  IntMatrix rel(static_cast<int>(edges.size()), static_cast<int>(regions.size()));
  std::vector<std::string> labels;
  for (int r : regions) labels.push_back("R" + std::to_string(r));
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (int r = 0; r < boundary.cols(); ++r) {
      const mpz_class& v = boundary(edges[i], r);
      if (v == 0) continue;
      if (col[r] < 0)
        throw ShadowError(ErrorCode::DanglingEdge,
                          "edge " + std::to_string(edges[i]) + " meets region " + std::to_string(r) + " outside the set");
      rel(static_cast<int>(i), col[r]) = v;
    }
  return Presentation(static_cast<int>(regions.size()), std::move(rel), std::move(labels));
}

}  // namespace shadows
