#include "cyfano/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "cyfano/errors.hpp"

namespace cyfano {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

HermiteForm hermite_normal_form(IntMatrix A) {
  const Index m = A.rows(), n = A.cols();
  IntMatrix U = IntMatrix::Identity(m, m);
  Index pr = m - 1;  // row where the next pivot lands, moving upward
  for (Index col = n - 1; col >= 0 && pr >= 0; --col) {
    for (;;) {
      Index best = -1;
      for (Index i = 0; i <= pr; ++i) {
        if (A(i, col) != 0 && (best < 0 || abs(A(i, col)) < abs(A(best, col)))) best = i;
      }
      if (best < 0) break;
      if (best != pr) {
        A.row(best).swap(A.row(pr));
        U.row(best).swap(U.row(pr));
      }
      bool leftover = false;
      for (Index i = 0; i < pr; ++i) {
        if (A(i, col) == 0) continue;
        Int q = A(i, col) / A(pr, col);
        if (q != 0) {
          A.row(i) -= A.row(pr) * q;
          U.row(i) -= U.row(pr) * q;
        }
        if (A(i, col) != 0) leftover = true;
      }
      if (!leftover) break;
    }
    if (A(pr, col) == 0) continue;
    if (A(pr, col) < 0) {
      A.row(pr) = -A.row(pr);
      U.row(pr) = -U.row(pr);
    }
    for (Index i = pr + 1; i < m; ++i) {
      Int q = floor_div(A(i, col), A(pr, col));
      if (q != 0) {
        A.row(i) -= A.row(pr) * q;
        U.row(i) -= U.row(pr) * q;
      }
    }
    --pr;
  }
  return {std::move(A), std::move(U)};
}

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  const Index k = std::min(D.rows(), D.cols());
  for (Index i = 0; i < k; ++i) {
    if (D(i, i) != 0) out.push_back(D(i, i));
  }
  return out;
}

SmithForm smith_normal_form(IntMatrix A) {
  const Index m = A.rows(), n = A.cols();
  IntMatrix U = IntMatrix::Identity(m, m);
  IntMatrix V = IntMatrix::Identity(n, n);

  for (Index t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest-magnitude nonzero of the trailing block to (t, t).
    Index pi = -1, pj = -1;
    for (Index i = t; i < m; ++i) {
      for (Index j = t; j < n; ++j) {
        if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < abs(A(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) {
      A.row(pi).swap(A.row(t));
      U.row(pi).swap(U.row(t));
    }
    if (pj != t) {
      A.col(pj).swap(A.col(t));
      V.col(pj).swap(V.col(t));
    }

    for (bool dirty = true; dirty;) {
      // Clear column t and row t; a nonzero remainder becomes the new, strictly
      // smaller pivot, so this terminates.
      for (;;) {
        Index i = -1;
        for (Index k = t + 1; k < m && i < 0; ++k)
          if (A(k, t) != 0) i = k;
        if (i >= 0) {
          Int q = A(i, t) / A(t, t);
          if (q != 0) {
            A.row(i) -= A.row(t) * q;
            U.row(i) -= U.row(t) * q;
          }
          if (A(i, t) != 0) {
            A.row(i).swap(A.row(t));
            U.row(i).swap(U.row(t));
          }
          continue;
        }
        Index j = -1;
        for (Index k = t + 1; k < n && j < 0; ++k)
          if (A(t, k) != 0) j = k;
        if (j >= 0) {
          Int q = A(t, j) / A(t, t);
          if (q != 0) {
            A.col(j) -= A.col(t) * q;
            V.col(j) -= V.col(t) * q;
          }
          if (A(t, j) != 0) {
            A.col(j).swap(A.col(t));
            V.col(j).swap(V.col(t));
          }
          continue;
        }
        break;
      }
      dirty = false;
      for (Index i = t + 1; i < m && !dirty; ++i) {
        for (Index j = t + 1; j < n && !dirty; ++j) {
          if (A(i, j) % A(t, t) != 0) {
            A.row(t) += A.row(i);
            U.row(t) += U.row(i);
            dirty = true;
          }
        }
      }
    }
    if (A(t, t) < 0) {
      A.row(t) = -A.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return {std::move(A), std::move(U), std::move(V)};
}

Index rank_of(const IntMatrix& A) {
  HermiteForm hf = hermite_normal_form(A);
  Index r = 0;
  for (Index i = 0; i < hf.H.rows(); ++i) {
    bool nonzero = false;
    for (Index j = 0; j < hf.H.cols() && !nonzero; ++j) nonzero = hf.H(i, j) != 0;
    if (nonzero) ++r;
  }
  return r;
}

Int determinant(IntMatrix A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const Index n = A.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n && swap < 0; ++i)
        if (A(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      A.row(k).swap(A.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;  // exact division
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

std::optional<LinearSolution> solve_rational(const IntMatrix& A, const IntVector& b) {
  if (A.rows() != b.size()) throw DimensionMismatch("solve_rational: A rows != b size");
  // Gauss-Jordan over Q; Eigen row expressions keep everything exact.
  const Index m = A.rows(), n = A.cols();
  RatMatrix T(m, n + 1);
  T.leftCols(n) = to_rat(A);
  T.col(n) = to_rat(b);
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m && p < 0; ++i)
      if (T(i, c) != 0) p = i;
    if (p < 0) continue;
    if (p != r) T.row(p).swap(T.row(r));
    T.row(r) /= T(r, c);
    for (Index i = 0; i < m; ++i) {
      if (i != r && T(i, c) != 0) T.row(i) -= T.row(r) * T(i, c);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Index i = r; i < m; ++i) {
    if (T(i, n) != 0) return std::nullopt;  // 0 = nonzero row: inconsistent
  }
  RatVector x = RatVector::Constant(n, Rat(0));
  for (Index i = 0; i < r; ++i) x(pivot_col[static_cast<size_t>(i)]) = T(i, n);
  return LinearSolution{std::move(x), r == n};
}

namespace {

// Dense-tableau simplex over Q, maximization, Bland's rule.  Variables are
// x = p - q with p, q >= 0 plus one slack per halfspace; rows with negative
// right-hand side get a phase-one artificial.
class Simplex {
 public:
  Simplex(const RationalPolytope& P) : d_(P.dim), m_(static_cast<Index>(P.halfspaces.size())) {
    const Index cols = 2 * d_ + m_;
    T_ = RatMatrix::Constant(m_, cols + 1, Rat(0));
    basis_.assign(static_cast<size_t>(m_), 0);
    for (Index i = 0; i < m_; ++i) {
      const Halfspace& h = P.halfspaces[static_cast<size_t>(i)];
      if (h.normal.size() != d_)
        throw DimensionMismatch("halfspace normal size != polytope dimension");
      // <n, x> >= -a  written as  -<n, x> <= a
      for (Index j = 0; j < d_; ++j) {
        T_(i, j) = Rat(-h.normal(j));
        T_(i, d_ + j) = Rat(h.normal(j));
      }
      T_(i, 2 * d_ + i) = 1;
      T_(i, cols) = Rat(h.offset);
    }
    // Artificials for rows whose slack basis would be negative.
    for (Index i = 0; i < m_; ++i) {
      if (T_(i, cols) < 0) art_rows_.push_back(i);
    }
    if (!art_rows_.empty()) {
      RatMatrix wide = RatMatrix::Constant(m_, cols + static_cast<Index>(art_rows_.size()) + 1, Rat(0));
      wide.leftCols(cols) = T_.leftCols(cols);
      wide.col(wide.cols() - 1) = T_.col(cols);
      T_ = std::move(wide);
      for (size_t k = 0; k < art_rows_.size(); ++k) {
        Index i = art_rows_[k];
        T_.row(i) = -T_.row(i);
        T_(i, cols + static_cast<Index>(k)) = 1;
      }
    }
    n_ = T_.cols() - 1;
    for (Index i = 0; i < m_; ++i) basis_[static_cast<size_t>(i)] = 2 * d_ + i;
    for (size_t k = 0; k < art_rows_.size(); ++k)
      basis_[static_cast<size_t>(art_rows_[k])] = 2 * d_ + m_ + static_cast<Index>(k);
  }

  // Returns false when phase one cannot reach feasibility.
  bool solve_phase1() {
    if (art_rows_.empty()) return true;
    RatVector c = RatVector::Constant(n_, Rat(0));
    for (Index j = 2 * d_ + m_; j < n_; ++j) c(j) = -1;
    Rat value = run(c);
    if (value != 0) return false;
    // Pivot any degenerate artificial out of the basis, then drop the columns.
    for (Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<size_t>(i)] < 2 * d_ + m_) continue;
      Index enter = -1;
      for (Index j = 0; j < 2 * d_ + m_ && enter < 0; ++j)
        if (T_(i, j) != 0) enter = j;
      if (enter >= 0) pivot(i, enter);
      // A fully zero row is a redundant constraint; harmless to keep.
    }
    n_ = 2 * d_ + m_;
    return true;
  }

  LpResult solve_phase2(const RatVector& objective) {
    RatVector c = RatVector::Constant(n_, Rat(0));
    for (Index j = 0; j < d_; ++j) {
      c(j) = objective(j);
      c(d_ + j) = -objective(j);
    }
    Rat value = run(c);
    if (unbounded_) return {LpStatus::Unbounded, Rat(0), {}};
    RatVector x = RatVector::Constant(d_, Rat(0));
    for (Index i = 0; i < m_; ++i) {
      Index b = basis_[static_cast<size_t>(i)];
      if (b < d_) x(b) += T_(i, T_.cols() - 1);
      else if (b < 2 * d_) x(b - d_) -= T_(i, T_.cols() - 1);
    }
    return {LpStatus::Optimal, value, std::move(x)};
  }

 private:
  void pivot(Index row, Index col) {
    T_.row(row) /= T_(row, col);
    for (Index i = 0; i < m_; ++i) {
      if (i != row && T_(i, col) != 0) T_.row(i) -= T_.row(row) * T_(i, col);
    }
    basis_[static_cast<size_t>(row)] = col;
  }

  Rat run(const RatVector& c) {
    unbounded_ = false;
    const Index rhs = T_.cols() - 1;
    RatVector red = RatVector::Constant(T_.cols() - 1, Rat(0));
    red.head(c.size()) = c;
    Rat value = 0;
    for (Index i = 0; i < m_; ++i) {
      Index b = basis_[static_cast<size_t>(i)];
      if (b < c.size() && c(b) != 0) {
        red -= T_.row(i).head(T_.cols() - 1).transpose() * c(b);
        value += c(b) * T_(i, rhs);
      }
    }
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < n_ && enter < 0; ++j)
        if (red(j) > 0) enter = j;  // Bland: first improving column
      if (enter < 0) return value;
      Index leave = -1;
      for (Index i = 0; i < m_; ++i) {
        if (T_(i, enter) <= 0) continue;
        if (leave < 0) {
          leave = i;
          continue;
        }
        Rat cur = T_(i, rhs) / T_(i, enter);
        Rat best = T_(leave, rhs) / T_(leave, enter);
        if (cur < best ||
            (cur == best && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)]))
          leave = i;
      }
      if (leave < 0) {
        unbounded_ = true;
        return value;
      }
      pivot(leave, enter);
      value += red(enter) * T_(leave, rhs);
      red -= T_.row(leave).head(T_.cols() - 1).transpose() * red(enter);
    }
  }

  Index d_, m_, n_ = 0;
  RatMatrix T_;
  std::vector<Index> basis_;
  std::vector<Index> art_rows_;
  bool unbounded_ = false;
};

}  // namespace

LpResult linear_program_max(const RationalPolytope& P, const RatVector& objective) {
  if (objective.size() != P.dim) throw DimensionMismatch("objective size != polytope dimension");
  if (P.dim == 0) {
    for (const Halfspace& h : P.halfspaces) {
      if (h.offset < 0) return {LpStatus::Infeasible, Rat(0), {}};
    }
    return {LpStatus::Optimal, Rat(0), RatVector(0)};
  }
  Simplex s(P);
  if (!s.solve_phase1()) return {LpStatus::Infeasible, Rat(0), {}};
  return s.solve_phase2(objective);
}

bool polytope_feasible(const RationalPolytope& P) {
  return linear_program_max(P, RatVector::Constant(P.dim, Rat(0))).status == LpStatus::Optimal;
}

namespace {

void enumerate_points(const RationalPolytope& P, const std::vector<std::pair<Int, Int>>& bounds,
                      Index level, IntVector& point, std::vector<Rat>& partial,
                      std::vector<IntVector>& out) {
  if (level == P.dim) {
    for (size_t i = 0; i < P.halfspaces.size(); ++i) {
      if (partial[i] < Rat(-P.halfspaces[i].offset)) return;
    }
    out.push_back(point);
    return;
  }
  const auto& [lo, hi] = bounds[static_cast<size_t>(level)];
  std::vector<Rat> saved = partial;
  for (Int v = lo; v <= hi; ++v) {
    point(level) = v;
    for (size_t i = 0; i < P.halfspaces.size(); ++i)
      partial[i] = saved[i] + Rat(P.halfspaces[i].normal(level) * v);
    enumerate_points(P, bounds, level + 1, point, partial, out);
  }
  partial = saved;
}

}  // namespace

std::vector<IntVector> lattice_points(const RationalPolytope& P) {
  if (P.dim == 0) {
    for (const Halfspace& h : P.halfspaces) {
      if (h.offset < 0) return {};
    }
    return {IntVector(0)};
  }
  if (!polytope_feasible(P)) return {};
  std::vector<std::pair<Int, Int>> bounds;
  for (Index k = 0; k < P.dim; ++k) {
    RatVector obj = RatVector::Constant(P.dim, Rat(0));
    obj(k) = 1;
    LpResult hi = linear_program_max(P, obj);
    obj(k) = -1;
    LpResult lo = linear_program_max(P, obj);
    if (hi.status == LpStatus::Unbounded || lo.status == LpStatus::Unbounded)
      throw UnboundedPolytope("polytope unbounded in coordinate " + std::to_string(k));
    bounds.emplace_back(ceil_rat(-lo.value), floor_rat(hi.value));
  }
  IntVector point = IntVector::Constant(P.dim, Int(0));
  std::vector<Rat> partial(P.halfspaces.size(), Rat(0));
  std::vector<IntVector> out;
  enumerate_points(P, bounds, 0, point, partial, out);
  return out;
}

}  // namespace cyfano
