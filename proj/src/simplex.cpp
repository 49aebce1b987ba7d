#include "polarcut/error.hpp"
#include "polarcut/lp.hpp"

#include <algorithm>
#include <utility>

namespace polarcut {

LinearProgram::LinearProgram(std::size_t num_vars, Sense sense)
    : sense_(sense), objective_(num_vars), lower_(num_vars), upper_(num_vars) {
  if (num_vars == 0) throw Error(Errc::InvalidArgument, "linear program needs at least one variable");
}

void LinearProgram::set_objective(Vector objective) {
  if (objective.size() != num_vars()) throw Error(Errc::DimensionMismatch, "objective length");
  objective_ = std::move(objective);
}

std::size_t LinearProgram::add_row(Vector coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != num_vars()) throw Error(Errc::DimensionMismatch, "row length");
  rows_.push_back({std::move(coeffs), relation, std::move(rhs)});
  return rows_.size() - 1;
}

void LinearProgram::set_lower_bound(std::size_t var, Rational bound) { lower_.at(var) = std::move(bound); }
void LinearProgram::set_upper_bound(std::size_t var, Rational bound) { upper_.at(var) = std::move(bound); }

void LinearProgram::set_nonnegative(std::size_t first, std::size_t last) {
  for (std::size_t j = first; j < last; ++j) set_lower_bound(j, 0);
}

bool LinearProgram::is_feasible(std::span<const Rational> x) const {
  if (x.size() != num_vars()) throw Error(Errc::DimensionMismatch, "point length");
  for (std::size_t j = 0; j < num_vars(); ++j) {
    if (lower_[j] && x[j] < *lower_[j]) return false;
    if (upper_[j] && x[j] > *upper_[j]) return false;
  }
  for (const auto& row : rows_) {
    const Rational lhs = dot(row.coeffs, x);
    switch (row.relation) {
      case Relation::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

using kernels::PivotKernel;
using kernels::TableauView;

enum class VarKind { Free, Lower, Upper, Boxed };

struct VarMap {
  VarKind kind = VarKind::Free;
  std::size_t col = 0;      // z column (positive part for free variables)
  std::size_t neg_col = 0;  // negative part, free variables only
  Rational offset;          // x = offset + z (Lower/Boxed), offset - z (Upper)
  std::size_t bound_row = 0;  // standard row of z <= u - l, Boxed only
};

enum class RowOrigin { User, UpperBound };

struct RowMap {
  RowOrigin origin = RowOrigin::User;
  std::size_t index = 0;  // user row or variable
  int flip = 1;           // standard row = flip * (<=-form row in z)
};

// min c^T z  s.t.  A z = b (b >= 0), z >= 0; slack columns follow the
// structural columns.
struct StandardForm {
  std::vector<VarMap> vars;
  std::vector<RowMap> rows;
  std::size_t num_struct = 0;
  std::size_t num_cols = 0;  // structural + slack
  Matrix a;
  Vector b;
  Vector c;
};

int relation_sign(Relation r) { return r == Relation::GreaterEqual ? -1 : 1; }

StandardForm to_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  const std::size_t n = lp.num_vars();
  sf.vars.resize(n);
  std::size_t next = 0;
  std::size_t boxed = 0;
  for (std::size_t j = 0; j < n; ++j) {
    auto& v = sf.vars[j];
    const auto& lo = lp.lower_bound(j);
    const auto& up = lp.upper_bound(j);
    if (!lo && !up) {
      v.kind = VarKind::Free;
      v.col = next++;
      v.neg_col = next++;
      v.offset = 0;
    } else if (lo && !up) {
      v.kind = VarKind::Lower;
      v.col = next++;
      v.offset = *lo;
    } else if (!lo && up) {
      v.kind = VarKind::Upper;
      v.col = next++;
      v.offset = *up;
    } else {
      v.kind = VarKind::Boxed;
      v.col = next++;
      v.offset = *lo;
      ++boxed;
    }
  }
  sf.num_struct = next;

  std::size_t inequality_rows = boxed;
  for (const auto& row : lp.rows())
    if (row.relation != Relation::Equal) ++inequality_rows;
  const std::size_t num_rows = lp.num_rows() + boxed;
  sf.num_cols = sf.num_struct + inequality_rows;
  sf.a = Matrix(num_rows, sf.num_cols);
  sf.b = Vector(num_rows);
  sf.rows.resize(num_rows);

  std::size_t slack = sf.num_struct;
  auto finish_row = [&](std::size_t r, bool with_slack) {
    if (with_slack) sf.a(r, slack++) = 1;
    if (sf.b[r] < 0) {
      sf.rows[r].flip = -1;
      sf.a.scale_row(r, -1);
      sf.b[r] = -sf.b[r];
    }
  };

  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const auto& row = lp.rows()[i];
    const int s = relation_sign(row.relation);
    Rational rhs = s * row.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (row.coeffs[j] == 0) continue;
      const Rational g = s * row.coeffs[j];
      const auto& v = sf.vars[j];
      switch (v.kind) {
        case VarKind::Free:
          sf.a(i, v.col) += g;
          sf.a(i, v.neg_col) -= g;
          break;
        case VarKind::Lower:
        case VarKind::Boxed:
          sf.a(i, v.col) += g;
          rhs -= g * v.offset;
          break;
        case VarKind::Upper:
          sf.a(i, v.col) -= g;
          rhs -= g * v.offset;
          break;
      }
    }
    sf.b[i] = std::move(rhs);
    sf.rows[i] = {RowOrigin::User, i, 1};
    finish_row(i, row.relation != Relation::Equal);
  }

  std::size_t r = lp.num_rows();
  for (std::size_t j = 0; j < n; ++j) {
    auto& v = sf.vars[j];
    if (v.kind != VarKind::Boxed) continue;
    v.bound_row = r;
    sf.a(r, v.col) = 1;
    sf.b[r] = *lp.upper_bound(j) - *lp.lower_bound(j);
    sf.rows[r] = {RowOrigin::UpperBound, j, 1};
    finish_row(r, true);
    ++r;
  }

  const int sigma = lp.sense() == Sense::Minimize ? 1 : -1;
  sf.c = zeros(sf.num_cols);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational cj = sigma * lp.objective()[j];
    if (cj == 0) continue;
    const auto& v = sf.vars[j];
    switch (v.kind) {
      case VarKind::Free:
        sf.c[v.col] += cj;
        sf.c[v.neg_col] -= cj;
        break;
      case VarKind::Lower:
      case VarKind::Boxed:
        sf.c[v.col] += cj;
        break;
      case VarKind::Upper:
        sf.c[v.col] -= cj;
        break;
    }
  }
  return sf;
}

// Maps a z-space vector back to x (direction=true drops the offsets).
Vector to_original(const StandardForm& sf, const Vector& z, bool direction) {
  Vector x(sf.vars.size());
  for (std::size_t j = 0; j < sf.vars.size(); ++j) {
    const auto& v = sf.vars[j];
    const Rational base = direction ? Rational(0) : v.offset;
    switch (v.kind) {
      case VarKind::Free: x[j] = z[v.col] - z[v.neg_col]; break;
      case VarKind::Lower:
      case VarKind::Boxed: x[j] = base + z[v.col]; break;
      case VarKind::Upper: x[j] = base - z[v.col]; break;
    }
  }
  return x;
}

// Tableau rows: constraint rows, then the phase-2 and phase-1 reduced-cost
// rows. Columns: standard-form columns, one artificial per row, rhs.
class Tableau {
 public:
  Tableau(const StandardForm& sf, PivotKernel kernel)
      : m_(sf.a.rows()), s_(sf.num_cols), cols_(s_ + m_ + 1), kernel_(kernel),
        cells_((m_ + 2) * cols_), basis_(m_) {
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t c = 0; c < s_; ++c) at(r, c) = sf.a(r, c);
      at(r, s_ + r) = 1;
      at(r, rhs_col()) = sf.b[r];
      basis_[r] = s_ + r;
    }
    for (std::size_t c = 0; c < s_; ++c) at(phase2_row(), c) = sf.c[c];
    for (std::size_t c = 0; c < s_; ++c) {
      Rational sum = 0;
      for (std::size_t r = 0; r < m_; ++r) sum += at(r, c);
      at(phase1_row(), c) = -sum;
    }
    Rational total = 0;
    for (std::size_t r = 0; r < m_; ++r) total += sf.b[r];
    at(phase1_row(), rhs_col()) = -total;
  }

  std::size_t rows() const { return m_; }
  std::size_t structural_cols() const { return s_; }
  std::size_t rhs_col() const { return s_ + m_; }
  std::size_t phase2_row() const { return m_; }
  std::size_t phase1_row() const { return m_ + 1; }
  std::size_t artificial(std::size_t r) const { return s_ + r; }
  bool is_artificial(std::size_t col) const { return col >= s_ && col < s_ + m_; }

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  const Basis& basis() const { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    kernels::pivot(TableauView{cells_, m_ + 2, cols_}, row, col, kernel_);
    basis_[row] = col;
    ++pivots_;
  }
  std::size_t pivots() const { return pivots_; }

  enum class Result { Optimal, Unbounded };

  // Bland's rule over columns [0, s_).
  Result optimize(std::size_t cost_row, std::size_t& unbounded_col) {
    for (;;) {
      std::size_t enter = s_;
      for (std::size_t c = 0; c < s_; ++c) {
        if (at(cost_row, c) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == s_) return Result::Optimal;
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (at(r, enter) <= 0) continue;
        Rational ratio = at(r, rhs_col()) / at(r, enter);
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == m_) {
        unbounded_col = enter;
        return Result::Unbounded;
      }
      pivot(leave, enter);
    }
  }

  // After a zero-cost phase 1, pivots remaining (zero-valued) artificials out
  // wherever a structural entry allows it; rows where none does are redundant.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (std::size_t c = 0; c < s_; ++c) {
        if (at(r, c) != 0) {
          pivot(r, c);
          break;
        }
      }
    }
  }

  bool try_warm_start(const Basis& hint) {
    if (hint.size() != m_) return false;
    for (std::size_t r = 0; r < m_; ++r) {
      if (hint[r] >= s_ || at(r, hint[r]) == 0) return false;
      pivot(r, hint[r]);
    }
    for (std::size_t r = 0; r < m_; ++r)
      if (at(r, rhs_col()) < 0) return false;
    return true;
  }

  Vector basic_solution() const {
    Vector z = zeros(s_);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < s_) z[basis_[r]] = at(r, rhs_col());
    return z;
  }

 private:
  std::size_t m_;
  std::size_t s_;
  std::size_t cols_;
  PivotKernel kernel_;
  std::vector<Rational> cells_;
  Basis basis_;
  std::size_t pivots_ = 0;
};

void fill_optimal(const LinearProgram& lp, const StandardForm& sf, const Tableau& t, LpOutcome& out) {
  out.status = LpStatus::Optimal;
  out.primal = to_original(sf, t.basic_solution(), false);
  out.objective_value = lp.evaluate(out.primal);

  const std::size_t n = lp.num_vars();
  out.dual = zeros(lp.num_rows());
  out.lower_dual = zeros(n);
  out.upper_dual = zeros(n);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    // Reduced cost of an artificial (cost 0 in phase 2) is -y_r.
    const Rational y = -t.at(t.phase2_row(), t.artificial(r)) * sf.rows[r].flip;
    if (sf.rows[r].origin == RowOrigin::User)
      out.dual[sf.rows[r].index] = y;
    else
      out.upper_dual[sf.rows[r].index] = y;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = sf.vars[j];
    const Rational mu = -t.at(t.phase2_row(), v.col);
    if (v.kind == VarKind::Lower || v.kind == VarKind::Boxed) out.lower_dual[j] = mu;
    if (v.kind == VarKind::Upper) out.upper_dual[j] = mu;
  }
}

void fill_infeasible(const LinearProgram& lp, const StandardForm& sf, const Tableau& t, LpOutcome& out) {
  out.status = LpStatus::Infeasible;
  const std::size_t n = lp.num_vars();
  out.farkas = zeros(lp.num_rows());
  out.farkas_lower = zeros(n);
  out.farkas_upper = zeros(n);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    // Phase-1 artificial reduced cost is 1 - y_r; the certificate is -y.
    const Rational w = (t.at(t.phase1_row(), t.artificial(r)) - 1) * sf.rows[r].flip;
    if (sf.rows[r].origin == RowOrigin::User)
      out.farkas[sf.rows[r].index] = w;
    else
      out.farkas_upper[sf.rows[r].index] = w;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = sf.vars[j];
    const Rational mult = t.at(t.phase1_row(), v.col);
    if (v.kind == VarKind::Lower || v.kind == VarKind::Boxed) out.farkas_lower[j] = mult;
    if (v.kind == VarKind::Upper) out.farkas_upper[j] = mult;
  }

  // Aggregated rhs of the <=-form rows; rescale it to exactly -1.
  Rational rhs = 0;
  for (std::size_t i = 0; i < lp.num_rows(); ++i)
    rhs += out.farkas[i] * relation_sign(lp.rows()[i].relation) * lp.rows()[i].rhs;
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower_bound(j)) rhs -= out.farkas_lower[j] * *lp.lower_bound(j);
    if (lp.upper_bound(j)) rhs += out.farkas_upper[j] * *lp.upper_bound(j);
  }
  const Rational scale = -1 / rhs;
  for (auto* vec : {&out.farkas, &out.farkas_lower, &out.farkas_upper})
    for (auto& v : *vec) v *= scale;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp, const SolveOptions& options) {
  const StandardForm sf = to_standard_form(lp);
  LpOutcome out;

  Tableau t(sf, options.kernel);
  bool feasible_basis = false;
  if (options.warm_start != nullptr) {
    Tableau warm(sf, options.kernel);
    if (warm.try_warm_start(*options.warm_start)) {
      t = std::move(warm);
      feasible_basis = true;
    }
  }

  std::size_t unbounded_col = 0;
  if (!feasible_basis) {
    t.optimize(t.phase1_row(), unbounded_col);
    if (t.at(t.phase1_row(), t.rhs_col()) != 0) {
      fill_infeasible(lp, sf, t, out);
      out.basis = t.basis();
      out.pivots = t.pivots();
      return out;
    }
    t.drive_out_artificials();
  }

  if (t.optimize(t.phase2_row(), unbounded_col) == Tableau::Result::Unbounded) {
    out.status = LpStatus::Unbounded;
    Vector dz = zeros(t.structural_cols());
    dz[unbounded_col] = 1;
    for (std::size_t r = 0; r < t.rows(); ++r)
      if (t.basis()[r] < t.structural_cols()) dz[t.basis()[r]] = -t.at(r, unbounded_col);
    out.ray = to_original(sf, dz, true);
    out.primal = to_original(sf, t.basic_solution(), false);
  } else {
    fill_optimal(lp, sf, t, out);
  }
  out.basis = t.basis();
  out.pivots = t.pivots();
  return out;
}

}  // namespace polarcut
