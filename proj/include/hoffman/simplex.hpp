// Dense two-phase primal simplex for the small LPs issued by every
// algorithm in this library.
//
// Conventions:
//   * minimisation;
//   * row senses <=, =, >= (>= rows are negated to <= internally);
//   * variable bounds may be -inf / +inf;
//   * duals are reported against the ORIGINAL row senses: in a
//     minimisation, y_i <= 0 for a <= row, y_i >= 0 for a >= row, and
//     y_i is free for an = row;
//   * deterministic: identical inputs produce bit-identical solutions.
//
// Pricing is Dantzig with a Bland's-rule fallback that engages after
// 2*(rows+cols) consecutive degenerate pivots and disengages on the next
// nondegenerate pivot.  Ratio-test ties go to the smallest row index.
#pragma once

#include <vector>

#include "hoffman/core.hpp"

namespace hoffman {

enum class RowSense { LessEqual, Equal, GreaterEqual };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpProblem {
  int num_vars = 0;
  std::vector<double> objective;                // size num_vars
  std::vector<std::vector<double>> row_coeffs;  // each size num_vars
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<double> lower;  // -inf allowed
  std::vector<double> upper;  // +inf allowed

  int num_rows() const { return static_cast<int>(row_coeffs.size()); }
  void add_row(std::vector<double> coeffs, RowSense sense, double b);
  // Throws PreconditionError on inconsistent dimensions or non-finite data.
  void validate() const;
};

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;
  std::vector<double> y;  // one multiplier per row, original sense convention
  double objective = 0.0;
  long long pivots = 0;
};

// One solve at a time per instance; the workspace is reused across solves.
// Distinct instances are independent and may run on different threads.
class SimplexSolver {
 public:
  LpSolution solve(const LpProblem& problem);

  long long last_pivot_count() const { return pivots_; }

 private:
  enum class VarState : unsigned char { Basic, AtLower, AtUpper, FreeAtZero };

  void build(const LpProblem& problem);
  void refresh_basic_values();
  double current_cost(const std::vector<double>& cost) const;
  void compute_reduced_costs(const std::vector<double>& cost);
  // Returns false when no improving column exists (optimal for `cost`).
  bool price(bool bland, int& enter, int& direction) const;
  // Core loop; returns true when optimal, false on unboundedness.
  bool iterate(const std::vector<double>& cost, bool phase_one);
  void pivot(int row, int col);

  int rows_ = 0;
  int total_cols_ = 0;
  int structural_ = 0;
  std::vector<std::vector<double>> tab_;  // rows_ x total_cols_
  std::vector<double> rhs_col_;           // B^{-1} b
  std::vector<double> reduced_;           // current reduced costs
  std::vector<double> values_;            // current value of every column
  std::vector<double> lower_, upper_;
  std::vector<VarState> state_;
  std::vector<int> basis_;        // basic column of each row
  std::vector<int> row_column_;   // identity column attached to each row
  std::vector<bool> flipped_;     // >= rows negated on input
  double pivot_tol_ = 1e-12;
  double feas_tol_ = 1e-9;
  double dual_tol_ = 1e-9;
  double degen_tol_ = 1e-11;
  long long pivots_ = 0;
  long long pivot_limit_ = 0;
  long long degenerate_run_ = 0;
};

// Convenience wrapper; bumps *lp_tally when provided.
LpSolution solve_lp(const LpProblem& problem, long long* lp_tally = nullptr);

}  // namespace hoffman
