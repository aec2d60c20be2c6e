#include "fincat/finab.hpp"

#include <algorithm>

namespace fincat {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  for (const auto& row : rows)
    if (row.size() != c) throw Error("ShapeMismatch", "ragged rows");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw Error("ShapeMismatch", std::to_string(cols_) + " columns against " +
                                     std::to_string(other.rows_) + " rows");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& left = at(i, k);
      if (left == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += left * other.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error("ShapeMismatch", "row counts differ");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error("ShapeMismatch", "column counts differ");
  IntMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
  }
  return out;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("ShapeMismatch", "determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

SmithResult smith_normal_form(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  SmithResult out{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(s.at(a, j), s.at(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(s.at(i, a), s.at(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t j = 0; j < cols; ++j) s.at(dst, j) += k * s.at(src, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += k * u.at(src, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t i = 0; i < rows; ++i) s.at(i, dst) += k * s.at(i, src);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) += k * v.at(i, src);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // move a nonzero entry of smallest magnitude to the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s.at(i, j) == 0) continue;
        Int mag = abs(s.at(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    // clear the pivot row and column; remainders become smaller pivots
    while (true) {
      std::size_t i = t + 1;
      while (i < rows && s.at(i, t) == 0) ++i;
      std::size_t j = t + 1;
      while (j < cols && s.at(t, j) == 0) ++j;
      if (i == rows && j == cols) break;
      if (i < rows) {
        Int q = s.at(i, t) / s.at(t, t);
        row_add(i, t, -q);
        if (s.at(i, t) != 0) row_swap(t, i);
      } else {
        Int q = s.at(t, j) / s.at(t, t);
        col_add(j, t, -q);
        if (s.at(t, j) != 0) col_swap(t, j);
      }
    }

    // the pivot must divide the whole remaining block; if not, pull the
    // offending row in and start the clearing over with a smaller pivot
    bool redo = false;
    for (std::size_t i = t + 1; i < rows && !redo; ++i)
      for (std::size_t j = t + 1; j < cols && !redo; ++j)
        if (s.at(i, j) % s.at(t, t) != 0) {
          row_add(t, i, 1);
          redo = true;
        }
    if (redo) continue;

    if (s.at(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) s.at(t, j) = -s.at(t, j);
      for (std::size_t j = 0; j < rows; ++j) u.at(t, j) = -u.at(t, j);
    }
    ++t;
  }
  return out;
}

bool in_column_span(const IntMatrix& m, const IntMatrix& c) {
  if (c.cols() != 1 || c.rows() != m.rows())
    throw Error("ShapeMismatch", "membership test needs a column of matching height");
  SmithResult snf = smith_normal_form(m);
  IntMatrix lifted = snf.u * c;
  std::size_t diag = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int& value = lifted.at(i, 0);
    if (i < diag && snf.s.at(i, i) != 0) {
      if (value % snf.s.at(i, i) != 0) return false;
    } else if (value != 0) {
      return false;
    }
  }
  return true;
}

std::string FgAbGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : invariant_factors) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

FgAbGroup canonical_form(const AbPresentation& p) {
  if (p.relations.rows() != p.generators && p.relations.cols() != 0)
    throw Error("ShapeMismatch", "relation matrix must have one row per generator");
  FgAbGroup out;
  if (p.relations.cols() == 0 || p.relations.rows() == 0) {
    out.free_rank = p.generators;
    return out;
  }
  SmithResult snf = smith_normal_form(p.relations);
  std::size_t nonzero = 0;
  std::size_t diag = std::min(p.relations.rows(), p.relations.cols());
  for (std::size_t i = 0; i < diag; ++i) {
    if (snf.s.at(i, i) == 0) continue;
    ++nonzero;
    if (snf.s.at(i, i) > 1) out.invariant_factors.push_back(snf.s.at(i, i));
  }
  out.free_rank = p.generators - nonzero;
  return out;
}

bool preserves_relations(const AbPresentation& a, const AbPresentation& b, const IntMatrix& f) {
  if (f.rows() != b.generators || f.cols() != a.generators)
    throw Error("ShapeMismatch", "generator-image matrix has the wrong shape");
  if (a.relations.cols() == 0) return true;
  IntMatrix mapped = f * a.relations;
  IntMatrix rel = b.relations.cols() == 0 ? IntMatrix(b.generators, 0) : b.relations;
  for (std::size_t j = 0; j < mapped.cols(); ++j) {
    IntMatrix col(mapped.rows(), 1);
    for (std::size_t i = 0; i < mapped.rows(); ++i) col.at(i, 0) = mapped.at(i, j);
    if (rel.cols() == 0) {
      for (std::size_t i = 0; i < col.rows(); ++i)
        if (col.at(i, 0) != 0) return false;
    } else if (!in_column_span(rel, col)) {
      return false;
    }
  }
  return true;
}

namespace {

void require_hom(const AbPresentation& a, const AbPresentation& b, const IntMatrix& f,
                 const std::string& name) {
  if (!preserves_relations(a, b, f))
    throw Error("InvalidHomomorphism", name + " does not send relations into relations");
}

IntMatrix relations_or_empty(const AbPresentation& p) {
  return p.relations.cols() == 0 ? IntMatrix(p.generators, 0) : p.relations;
}

}  // namespace

FgAbGroup coequalizer_ab(const AbPresentation& a, const AbPresentation& b, const IntMatrix& f,
                         const IntMatrix& g) {
  require_hom(a, b, f, "first map");
  require_hom(a, b, g, "second map");
  IntMatrix diff(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) diff.at(i, j) = f.at(i, j) - g.at(i, j);
  AbPresentation q{b.generators, hstack(relations_or_empty(b), diff)};
  return canonical_form(q);
}

FgAbGroup pushout_ab(const AbPresentation& a, const AbPresentation& b, const AbPresentation& c,
                     const IntMatrix& f, const IntMatrix& g) {
  require_hom(a, b, f, "left map");
  require_hom(a, c, g, "right map");
  // generators of b then c; relations of both, plus (f(x), -g(x)) glued
  IntMatrix glue = vstack(f, -g);
  AbPresentation q{b.generators + c.generators,
                   hstack(block_diag(relations_or_empty(b), relations_or_empty(c)), glue)};
  return canonical_form(q);
}

AbPresentation tensor_presentation(const AbPresentation& a, const AbPresentation& b) {
  IntMatrix ia = IntMatrix::identity(a.generators);
  IntMatrix ib = IntMatrix::identity(b.generators);
  IntMatrix left = kronecker(relations_or_empty(a), ib);
  IntMatrix right = kronecker(ia, relations_or_empty(b));
  return AbPresentation{a.generators * b.generators, hstack(left, right)};
}

FgAbGroup tensor_ab(const AbPresentation& a, const AbPresentation& b) {
  return canonical_form(tensor_presentation(a, b));
}

}  // namespace fincat
