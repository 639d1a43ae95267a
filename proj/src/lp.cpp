#include "pcw/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "pcw/pseudodist.hpp"

namespace pcw {

ConeMatrix build_cone_matrix(const ParityCheckMatrix& H) {
  if (!validate_matrix(H).ok()) {
    throw HypothesesUnmetError(
        "cone construction requires every nonzero entry to be a unit mod q");
  }
  ConeMatrix K;
  K.n = H.n;
  for (int j = 0; j < H.m; ++j) {
    const std::vector<int> support = H.row_support(j);
    if (support.size() < 2) {
      throw HypothesesUnmetError(
          "parity row " + std::to_string(j + 1) +
          " has weight 1; the cone collapses to x = 0 there");
    }
    for (const int l : support) {
      std::vector<std::int8_t> row(H.n, 0);
      for (const int i : support) row[i] = (i == l) ? -1 : 1;
      K.entries.insert(K.entries.end(), row.begin(), row.end());
      K.row_labels.emplace_back(j, l);
      ++K.rows;
    }
  }
  return K;
}

LpInstance build_lp(const ParityCheckMatrix& H) {
  LpInstance inst;
  inst.n = H.n;
  inst.cone = build_cone_matrix(H);
  return inst;
}

namespace {

// Dense tableau over variables [y | slacks | artificial], one row per
// constraint, RHS in the last column. Bland's rule: entering = lowest
// eligible variable index, leaving = lowest basic variable index among the
// minimum-ratio rows.
class SimplexTableau {
 public:
  SimplexTableau(int rows, int vars)
      : rows_(rows), vars_(vars), t_(static_cast<std::size_t>(rows) * (vars + 1), 0.0),
        basis_(rows, -1), is_basic_(vars, 0), allowed_(vars, 1), red_(vars, 0.0) {}

  double& at(int r, int c) { return t_[static_cast<std::size_t>(r) * (vars_ + 1) + c]; }
  double at(int r, int c) const { return t_[static_cast<std::size_t>(r) * (vars_ + 1) + c]; }
  double& rhs(int r) { return at(r, vars_); }
  double rhs(int r) const { return at(r, vars_); }

  void set_basis(int r, int var) {
    basis_[r] = var;
    is_basic_[var] = 1;
  }

  void disallow(int var) { allowed_[var] = 0; }

  void price(const std::vector<double>& c) {
    red_ = c;
    for (int r = 0; r < rows_; ++r) {
      const double cb = c[basis_[r]];
      if (cb == 0.0) continue;
      for (int j = 0; j < vars_; ++j) red_[j] -= cb * at(r, j);
    }
    for (int r = 0; r < rows_; ++r) red_[basis_[r]] = 0.0;
  }

  enum class Step { Optimal, Pivoted, Unbounded };

  Step step(double tol) {
    int enter = -1;
    for (int j = 0; j < vars_; ++j) {
      if (allowed_[j] && !is_basic_[j] && red_[j] > tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Step::Optimal;

    int leave_row = -1;
    double best = 0.0;
    for (int r = 0; r < rows_; ++r) {
      const double a = at(r, enter);
      if (a <= tol) continue;
      const double ratio = rhs(r) / a;
      if (leave_row < 0) {
        best = ratio;
        leave_row = r;
        continue;
      }
      const double window = 1e-12 * std::max(1.0, std::abs(best));
      if (ratio < best - window) {
        best = ratio;
        leave_row = r;
      } else if (ratio <= best + window && basis_[r] < basis_[leave_row]) {
        leave_row = r;
      }
    }
    if (leave_row < 0) return Step::Unbounded;
    pivot(leave_row, enter);
    return Step::Pivoted;
  }

  void pivot(int pr, int pc) {
    const double piv = at(pr, pc);
    for (int j = 0; j <= vars_; ++j) at(pr, j) /= piv;
    at(pr, pc) = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (int j = 0; j <= vars_; ++j) at(r, j) -= f * at(pr, j);
      at(r, pc) = 0.0;
    }
    const double fr = red_[pc];
    if (fr != 0.0) {
      for (int j = 0; j < vars_; ++j) red_[j] -= fr * at(pr, j);
    }
    red_[pc] = 0.0;
    is_basic_[basis_[pr]] = 0;
    set_basis(pr, pc);
    ++iterations;
  }

  int basis(int r) const { return basis_[r]; }
  bool basic(int var) const { return is_basic_[var] != 0; }
  int find_basis_row(int var) const {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] == var) return r;
    }
    return -1;
  }
  int rows() const { return rows_; }
  int vars() const { return vars_; }

  long iterations = 0;

 private:
  int rows_, vars_;
  std::vector<double> t_;
  std::vector<int> basis_;
  std::vector<char> is_basic_;
  std::vector<char> allowed_;
  std::vector<double> red_;
};

}  // namespace

LpSolution solve_lp(const LpInstance& inst, double tol) {
  const int n = inst.n;
  const int ny = n * n;
  const int K = inst.cone.rows;
  const int nslack = 2 * n * K;
  const int art = ny + nslack;
  const int nvars = ny + nslack + 1;
  const int nrows = 1 + nslack;

  SimplexTableau tab(nrows, nvars);

  // Row 0: total mass, with the artificial variable as the starting basis.
  for (int v = 0; v < ny; ++v) tab.at(0, v) = 1.0;
  tab.at(0, art) = 1.0;
  tab.rhs(0) = 1.0;
  tab.set_basis(0, art);

  // Cone rows, written as -K.slice + s = 0 so the slack starts basic at 0:
  // first all row slices y_(i,:), then all column slices y_(:,i).
  int row = 1;
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < K; ++k) {
        for (int c = 0; c < n; ++c) {
          const double coeff = static_cast<double>(inst.cone.at(k, c));
          if (coeff == 0.0) continue;
          const int var = side == 0 ? i * n + c : c * n + i;
          tab.at(row, var) -= coeff;
        }
        const int slack = ny + (row - 1);
        tab.at(row, slack) = 1.0;
        tab.rhs(row) = 0.0;
        tab.set_basis(row, slack);
        ++row;
      }
    }
  }

  LpSolution sol;
  const long max_iter = 50L * (nvars + nrows);

  auto run = [&](const std::vector<double>& objective) -> SimplexTableau::Step {
    tab.price(objective);
    for (;;) {
      const auto s = tab.step(tol);
      if (s != SimplexTableau::Step::Pivoted) return s;
      if (tab.iterations > max_iter) return SimplexTableau::Step::Unbounded;
      if (!tab.basic(art)) tab.disallow(art);
    }
  };

  // Phase 1: drive the artificial variable to zero.
  std::vector<double> c1(nvars, 0.0);
  c1[art] = -1.0;
  auto s = run(c1);
  sol.iterations = tab.iterations;
  if (s == SimplexTableau::Step::Unbounded || tab.iterations > max_iter) {
    sol.status = LpStatus::NumericFailure;
    return sol;
  }
  double art_value = 0.0;
  if (tab.basic(art)) art_value = tab.rhs(tab.find_basis_row(art));
  if (art_value > 1e-7) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  if (tab.basic(art)) {
    // Degenerate: pivot the artificial variable out if any column admits it;
    // otherwise its row is identically zero and stays inert.
    const int r = tab.find_basis_row(art);
    for (int j = 0; j < art; ++j) {
      if (!tab.basic(j) && std::abs(tab.at(r, j)) > tol) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  tab.disallow(art);

  // Phase 2: maximize the diagonal mass.
  std::vector<double> c2(nvars, 0.0);
  for (int i = 0; i < n; ++i) c2[i * n + i] = 1.0;
  s = run(c2);
  sol.iterations = tab.iterations;
  if (s == SimplexTableau::Step::Unbounded || tab.iterations > max_iter) {
    sol.status = LpStatus::NumericFailure;
    return sol;
  }

  sol.y.assign(ny, 0.0);
  for (int r = 0; r < tab.rows(); ++r) {
    const int v = tab.basis(r);
    if (v < ny) sol.y[v] = tab.rhs(r);
  }
  sol.objective = 0.0;
  for (int i = 0; i < n; ++i) sol.objective += sol.y[i * n + i];

  const LpFeasibility feas = check_lp_point(inst, sol.y, tol);
  sol.status = feas.feasible ? LpStatus::Optimal : LpStatus::NumericFailure;
  return sol;
}

LpFeasibility check_lp_point(const LpInstance& inst,
                             const std::vector<double>& y, double tol) {
  LpFeasibility out;
  const int n = inst.n;
  if (y.size() != static_cast<std::size_t>(n) * n) {
    out.max_violation = std::numeric_limits<double>::infinity();
    return out;
  }
  double worst = 0.0;
  double mass = 0.0;
  for (const double v : y) {
    mass += v;
    worst = std::max(worst, -v);
  }
  worst = std::max(worst, std::abs(mass - 1.0));
  for (int k = 0; k < inst.cone.rows; ++k) {
    for (int i = 0; i < n; ++i) {
      double row_slice = 0.0, col_slice = 0.0;
      for (int c = 0; c < n; ++c) {
        const double coeff = static_cast<double>(inst.cone.at(k, c));
        if (coeff == 0.0) continue;
        row_slice += coeff * y[static_cast<std::size_t>(i) * n + c];
        col_slice += coeff * y[static_cast<std::size_t>(c) * n + i];
      }
      worst = std::max(worst, -row_slice);
      worst = std::max(worst, -col_slice);
    }
  }
  out.max_violation = worst;
  out.feasible = worst <= tol;
  return out;
}

LpBoundReport lp_pseudodistance_bound(const ParityCheckMatrix& H, double tol) {
  LpBoundReport report;
  report.q = H.q;
  report.n = H.n;
  const LpInstance inst = build_lp(H);
  report.solution = solve_lp(inst, tol);
  if (report.solution.status != LpStatus::Optimal) {
    throw std::runtime_error(
        report.solution.status == LpStatus::Infeasible
            ? "lp solver reported an infeasible instance"
            : "lp solver numeric failure");
  }
  report.optimum = report.solution.objective;
  report.kappa_used = kappa(H.q);
  report.kappa_generic_value = kappa_generic(H.q);
  report.bound = report.kappa_used / report.optimum;
  report.bound_generic = report.kappa_generic_value / report.optimum;
  return report;
}

namespace {

// Term-by-term writer with line wrapping; coefficients are always +-1 here.
class TermWriter {
 public:
  explicit TermWriter(std::ostream& out) : out_(out) {}

  void term(int coeff, const std::string& name) {
    std::string piece;
    if (first_) {
      piece = (coeff < 0 ? "- " : "") + name;
      first_ = false;
    } else {
      piece = (coeff < 0 ? "- " : "+ ") + name;
    }
    if (col_ + piece.size() + 1 > 72) {
      out_ << "\n   ";
      col_ = 3;
    }
    out_ << " " << piece;
    col_ += piece.size() + 1;
  }

  void finish(const std::string& tail) {
    if (!tail.empty()) out_ << " " << tail;
    out_ << "\n";
    first_ = true;
    col_ = 0;
  }

 private:
  std::ostream& out_;
  bool first_ = true;
  std::size_t col_ = 0;
};

std::string var_name(int i, int ip) {
  return "y_" + std::to_string(i + 1) + "_" + std::to_string(ip + 1);
}

}  // namespace

void export_lp(const LpInstance& inst, std::ostream& out) {
  const int n = inst.n;
  out << "\\ diagonal-mass maximization over the cone-sliced simplex, n=" << n
      << ", cone rows=" << inst.cone.rows << "\n";
  TermWriter w(out);

  out << "Maximize\n obj:";
  for (int i = 0; i < n; ++i) w.term(1, var_name(i, i));
  w.finish("");

  out << "Subject To\n mass:";
  for (int i = 0; i < n; ++i) {
    for (int ip = 0; ip < n; ++ip) w.term(1, var_name(i, ip));
  }
  w.finish("= 1");

  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < inst.cone.rows; ++k) {
        const auto [j, l] = inst.cone.row_labels[k];
        out << " " << (side == 0 ? "rs" : "cs") << "_" << i + 1 << "_"
            << j + 1 << "_" << l + 1 << ":";
        for (int c = 0; c < n; ++c) {
          const int coeff = inst.cone.at(k, c);
          if (coeff == 0) continue;
          w.term(coeff, side == 0 ? var_name(i, c) : var_name(c, i));
        }
        w.finish(">= 0");
      }
    }
  }

  out << "Bounds\n";
  for (int i = 0; i < n; ++i) {
    for (int ip = 0; ip < n; ++ip) {
      out << " 0 <= " << var_name(i, ip) << "\n";
    }
  }
  out << "End\n";
}

}  // namespace pcw
