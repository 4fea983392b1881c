#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shadows/common.hpp"

namespace shadows {

using IntVector = std::vector<mpz_class>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& b) const;
  bool operator==(const IntMatrix& b) const;
  IntVector row(int i) const;
  IntMatrix transpose() const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

// Exact determinant by fraction-free elimination.
mpz_class determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix U, D, V;  // U * A * V == D
  int rank = 0;
  IntVector diagonal;  // d_1 | d_2 | ... , length rank, all positive
};

SmithForm smith_normal_form(const IntMatrix& a);

// Basis (as columns of the returned list) of {x : A x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

// Z^n modulo the row lattice of a relation matrix.
class Presentation {
 public:
  Presentation(int generators, IntMatrix relations, std::vector<std::string> labels = {});

  int generators() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool in_lattice(const IntVector& v) const;
  // y with y * relations == v, when it exists.
  std::optional<IntVector> solve(const IntVector& v) const;
  // Canonical coordinates of v's class: torsion residues then free coordinates.
  IntVector class_key(const IntVector& v) const;

  // Invariant factors > 1 of the cokernel.
  IntVector torsion() const;
  int free_rank() const { return generators_ - snf_.rank; }
  bool has_two_torsion() const;
  const SmithForm& smith() const { return snf_; }

 private:
  int generators_;
  IntMatrix relations_;
  std::vector<std::string> labels_;
  SmithForm snf_;
};

// A cochain over regions. scale 1: rep is the cochain and equality is modulo
// the lattice L. scale 2: rep holds twice the (half-integer) coefficients and
// two classes are equal when the cochains differ by an element of L/2, i.e.
// when the doubled representatives differ by an element of L. On integral
// classes this agrees with scale-1 equality up to elements of order two.
struct CochainClass {
  IntVector rep;
  int scale = 1;
  std::shared_ptr<const Presentation> pres;

  CochainClass doubled() const;
  std::string to_string() const;
};

CochainClass make_class(std::shared_ptr<const Presentation> pres, IntVector rep, int scale = 1);
CochainClass unit_class(std::shared_ptr<const Presentation> pres, int generator, int coefficient = 1);
CochainClass zero_class(std::shared_ptr<const Presentation> pres, int scale = 1);

bool class_equal(const CochainClass& x, const CochainClass& y);
bool is_zero_class(const CochainClass& x);
CochainClass operator+(const CochainClass& x, const CochainClass& y);
CochainClass operator-(const CochainClass& x, const CochainClass& y);
CochainClass operator-(const CochainClass& x);
CochainClass operator*(long k, const CochainClass& x);

// An integral class equal to a scale-2 class: halves the coefficients when they
// are all even, otherwise lifts through the Smith form (TorsionObstruction
// with 2-torsion, InvalidArgument when the free part is not integral).
CochainClass to_integer_scale(const CochainClass& x);

// The unique integral class a with 2a = x. Throws TorsionObstruction when
// 2-torsion makes the answer ambiguous and InvalidArgument when x is not
// divisible.
CochainClass divide_by_two(const CochainClass& x);

IntVector torsion(const Presentation& pres);

// Restriction of a region/edge boundary matrix to some regions and edges:
// generators are the listed regions in order, relations the listed edge
// rows. DanglingEdge when a listed edge meets a region outside the list.
Presentation local_presentation(const IntMatrix& boundary, const std::vector<int>& regions,
                                const std::vector<int>& edges);

IntVector to_int_vector(const std::vector<int>& v);

}  // namespace shadows
