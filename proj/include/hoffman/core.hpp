// Shared domain types for Hoffman-constant computations: dense matrices,
// 1-based row index sets, norm conventions, and result/certificate containers.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoffman {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class HoffmanError : public std::runtime_error {
 public:
  explicit HoffmanError(const std::string& what) : std::runtime_error(what) {}
};

class ZeroMatrixError : public HoffmanError {
 public:
  ZeroMatrixError() : HoffmanError("matrix has no nonzero entry") {}
};

class EmptySetError : public HoffmanError {
 public:
  EmptySetError() : HoffmanError("operation requires a nonempty index set") {}
};

class InvalidWitnessError : public HoffmanError {
 public:
  explicit InvalidWitnessError(const std::string& what) : HoffmanError(what) {}
};

class EmptyPolyhedronError : public HoffmanError {
 public:
  EmptyPolyhedronError() : HoffmanError("polyhedron {x : Ax <= b} is empty") {}
};

class TooLargeError : public HoffmanError {
 public:
  explicit TooLargeError(const std::string& what) : HoffmanError(what) {}
};

class NumericalFailure : public HoffmanError {
 public:
  explicit NumericalFailure(const std::string& what) : HoffmanError(what) {}
};

class PreconditionError : public HoffmanError {
 public:
  explicit PreconditionError(const std::string& what) : HoffmanError(what) {}
};

// Thrown when an iterative method hits its step/node budget.  Carries the
// best bounds known at that point so callers can still report them.
class BudgetExceededError : public HoffmanError {
 public:
  BudgetExceededError(const std::string& what, double lower, double upper)
      : HoffmanError(what), lower_bound(lower), upper_bound(upper) {}
  double lower_bound;  // valid lower bound on H(A)
  double upper_bound;  // +inf when no upper bound is known
};

// ---------------------------------------------------------------------------
// RealMatrix
// ---------------------------------------------------------------------------

// Dense m x n matrix, row-major.  Entries must be finite; emptiness and the
// "A != 0" requirement of the Hoffman operations are checked by scale().
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(int rows, int cols);
  RealMatrix(int rows, int cols, std::vector<double> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<double>& data() const { return data_; }

  bool operator==(const RealMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Largest absolute entry; anchor for all relative tolerances.
// Throws ZeroMatrixError when every entry is zero.
double scale(const RealMatrix& a);

// Relative tolerance knobs.  zero_factor decides "rho is zero"; feas_factor
// is the LP feasibility slack used when validating solutions.
struct Tolerances {
  double zero_factor = 1e-7;
  double feas_factor = 1e-9;

  double zero(const RealMatrix& a) const { return zero_factor * scale(a); }
  double feas(const RealMatrix& a) const {
    return feas_factor * (1.0 + scale(a));
  }
};

// ---------------------------------------------------------------------------
// IndexSet
// ---------------------------------------------------------------------------

// Subset of {1,...,m}, kept sorted.  Indices are 1-based throughout the
// library and in every file format.  The empty set is a valid value.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe);
  IndexSet(int universe, std::vector<int> members);

  static IndexSet full(int universe);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;

  const std::vector<int>& values() const { return members_; }

  IndexSet set_union(const IndexSet& other) const;
  IndexSet complement() const;
  bool is_subset_of(const IndexSet& other) const;

  IndexSet with(int i) const;
  IndexSet without(int i) const;

  bool operator==(const IndexSet& other) const {
    return members_ == other.members_;
  }
  // Lexicographic order on the sorted member sequences.
  bool operator<(const IndexSet& other) const {
    return members_ < other.members_;
  }

 private:
  int universe_ = 0;
  std::vector<int> members_;  // sorted, 1-based, within [1, universe_]
};

// Rows of `a` selected by `j` (order of j.values()).
RealMatrix submatrix(const RealMatrix& a, const IndexSet& j);

// ---------------------------------------------------------------------------
// Norm configuration
// ---------------------------------------------------------------------------

// The library is specialised to the l1 norm on the domain and the l-infinity
// norm on the codomain (dual pair: l-infinity / l1).  Every subproblem is a
// linear program exactly because of this choice; other pairs are rejected.
struct NormConfig {
  std::string domain = "l1";
  std::string codomain = "linf";

  static NormConfig l1_linf() { return NormConfig{}; }
  // Validates a requested pair; throws PreconditionError for anything else.
  static NormConfig make(const std::string& domain, const std::string& codomain);
};

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

// Outcome of testing J against S(A).  Either rho_J > 0 together with the
// attaining simplex vector v (J in S(A), H_J = 1/rho), or a Gordan-style
// certificate: an inclusion-minimal support I with a null witness.
struct MembershipOutcome {
  bool in_s = false;
  double rho = 0.0;
  // InS: v over J attaining rho.  NotInS: null witness restricted to
  // `support` (sums to one, support exactly `support`).
  std::vector<double> witness;
  IndexSet support;  // NotInS only
};

struct CoverCertificate {
  std::vector<IndexSet> feasible;     // the collection F (maximal sets of S(A))
  std::vector<IndexSet> infeasible;   // the collection I (minimal non-members)
  std::vector<double> rho_values;     // rho_F for each member of `feasible`
  double hoffman = 0.0;               // max over F of 1/rho_F
  IndexSet argmax;                    // member of F attaining the max
  long long iterations = 0;
  long long lp_solves = 0;
};

enum class Method {
  Cover,
  Lpcc,
  Enum,
  BruteForce,
  FastPath,
  RelativeCone,
};

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct SolveStats {
  long long iterations = 0;
  long long lp_solves = 0;
  double wall_seconds = 0.0;
};

struct HoffmanResult {
  double value = 0.0;
  Method method = Method::Cover;
  NormConfig norms;
  std::optional<CoverCertificate> certificate;
  std::vector<double> dual_witness;  // v attaining the optimal rho, if any
  SolveStats stats;
};

}  // namespace hoffman
