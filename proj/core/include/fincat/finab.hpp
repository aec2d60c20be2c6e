#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "fincat/error.hpp"

namespace fincat {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, row major. Zero
// rows or columns are allowed; they come up as empty relation lists.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;  // Error ShapeMismatch
  IntMatrix operator-() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);  // Error ShapeMismatch
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Determinant by fraction-free elimination; exact at every step.
// Throws ShapeMismatch on non-square input.
Int determinant(const IntMatrix& m);

// s = u * m * v with u, v unimodular, s diagonal, nonnegative, and each
// diagonal entry dividing the next.
struct SmithResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

// True iff c (a column vector) lies in the integer column span of m.
bool in_column_span(const IntMatrix& m, const IntMatrix& c);

// A finitely presented abelian group: Z^generators modulo the column span
// of the relation matrix (generators rows, one column per relation).
struct AbPresentation {
  std::size_t generators = 0;
  IntMatrix relations;
};

// Canonical form: free rank plus the invariant factor chain (each factor
// > 1 and dividing the next).
struct FgAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  // "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/4", ...
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

FgAbGroup canonical_form(const AbPresentation& p);

// True iff the generator-image matrix f (b.generators x a.generators) sends
// every relation of a into the relation span of b, so it defines a
// homomorphism of the presented groups.
bool preserves_relations(const AbPresentation& a, const AbPresentation& b, const IntMatrix& f);

// Coequalizer of two homomorphisms a -> b: the target modulo the image of
// their difference. Throws InvalidHomomorphism when a matrix does not
// define a map of the presented groups.
FgAbGroup coequalizer_ab(const AbPresentation& a, const AbPresentation& b, const IntMatrix& f,
                         const IntMatrix& g);

// Pushout of b <-f- a -g-> c: the direct sum of b and c with the two images
// of every a-generator identified.
FgAbGroup pushout_ab(const AbPresentation& a, const AbPresentation& b, const AbPresentation& c,
                     const IntMatrix& f, const IntMatrix& g);

// Tensor product over Z: generators are pairs, relations are the two
// families "relation of a tensor a generator of b" and symmetrically.
FgAbGroup tensor_ab(const AbPresentation& a, const AbPresentation& b);

// The tensor product as a presentation on generator pairs (row-major pair
// order), for callers that need the bilinear structure and not only the
// isomorphism type.
AbPresentation tensor_presentation(const AbPresentation& a, const AbPresentation& b);

}  // namespace fincat
