#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewcat/partition.hpp"
#include "skewcat/util.hpp"

namespace skewcat {

// All functor identities are exact, so coefficients are exact rationals:
// integers suffice for single functor values, compositions introduce integer
// factors and span solving needs division. No floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using Tuple = std::vector<int>;  // index tuple over 1..n

// An exact sparse linear map (C^n)^{tensor k} -> (C^n)^{tensor l}, stored as
// (out-tuple, in-tuple) -> coefficient with no explicit zeros.
class LinMap {
 public:
  LinMap(int n, int k, int l);

  int dim() const { return n_; }
  int domain_arity() const { return k_; }
  int codomain_arity() const { return l_; }

  const std::map<std::pair<Tuple, Tuple>, Rat>& entries() const { return entries_; }
  Rat coefficient(const Tuple& out, const Tuple& in) const;
  void add_entry(const Tuple& out, const Tuple& in, const Rat& value);

  bool is_zero() const { return entries_.empty(); }
  // A scalar map C -> C (k = l = 0) with the given value.
  bool is_scalar(const Rat& value) const;

  bool operator==(const LinMap&) const = default;

 private:
  int n_, k_, l_;
  std::map<std::pair<Tuple, Tuple>, Rat> entries_;
};

// The fiber functor value with exact-kernel indicator entries: entry at
// (j, i) is delta_hat(p, (i, j)). The zero map when p has more than n blocks.
LinMap t_hat(const Partition& p, int n);

// The fiber functor value with constant-on-blocks indicator entries: entry at
// (j, i) is delta(p, (i, j)). Coincides with t_hat when p has one block.
LinMap t_map(const Partition& p, int n);

LinMap identity_map_on(int n, int arity);

LinMap adjoint(const LinMap& t);                       // transpose; entries are real
LinMap tensor(const LinMap& t, const LinMap& s);       // Kronecker on tensor factors
LinMap compose(const LinMap& s, const LinMap& t);      // s after t
LinMap add(const LinMap& t, const LinMap& s);
LinMap scale(const LinMap& t, const Rat& c);

// Residual of the tensor identity: t_hat(p) (x) t_hat(q) minus the sum of
// t_hat over the connected tensor set L. Zero iff the identity holds.
LinMap tensor_identity_residual(const Partition& p, const Partition& q, int n);

// Residual of the composition identity: t_hat(q) . t_hat(p) minus the
// predicted combination over the connected conditioned composition set M.
// For an incompatible pair the prediction is the zero map. For a compatible
// pair each term t_hat(r) is weighted by the number of admissible middle
// labellings: with L = b - a loops, that is the falling product
// (n - bl(r))(n - bl(r) - 1) ... over L factors, which collapses to the
// single factor prod_{c=a}^{b-1}(n-c) whenever p has no upper-only and q no
// lower-only blocks (then bl(r) = a for the unique element of M).
LinMap compose_identity_residual(const Partition& p, const Partition& q, int n);

// The predicted coefficient of t_hat(r) in t_hat(q) . t_hat(p).
Int compose_coefficient(int n, int loops, int result_blocks);

struct RankResult {
  int rank = 0;
  bool independent = false;
};

// Exact rank over the rationals of the vectorised maps; independent iff the
// rank equals the list length. All maps must share (n, k, l).
RankResult linearly_independent(const std::vector<LinMap>& maps);

struct SpanResult {
  bool contained = false;
  std::vector<Rat> coefficients;  // per basis element when contained
};

SpanResult span_contains(const std::vector<LinMap>& basis, const LinMap& target);

// Incremental exact Gaussian elimination over a fixed basis, for repeated
// span queries against the same family.
class SpanSolver {
 public:
  SpanSolver(int n, int k, int l);
  // Returns true if the map enlarged the span (i.e. was independent).
  bool insert(const LinMap& m);
  bool contains(const LinMap& m, std::vector<Rat>* coefficients = nullptr) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int basis_size() const { return basis_count_; }

 private:
  using SparseRow = std::map<std::uint64_t, Rat>;
  SparseRow vectorise(const LinMap& m) const;
  // Reduces the row against the echelon rows; returns the residual.
  SparseRow reduce(SparseRow row, std::vector<Rat>* coefficients) const;

  int n_, k_, l_;
  int basis_count_ = 0;
  std::map<std::uint64_t, std::size_t> pivot_of_;  // pivot column -> row index
  std::vector<SparseRow> rows_;                    // echelon rows, leading coeff 1
  std::vector<std::vector<Rat>> combos_;           // row = combo of inserted maps
};

struct TensorCategoryViolation {
  std::string check;        // which axiom or closure property failed
  std::string witness;      // offending elements / missing map
};

struct TensorCategoryReport {
  bool ok = false;
  int checks_run = 0;
  int checks_skipped = 0;  // products whose result arity exceeds the data horizon
  std::vector<TensorCategoryViolation> violations;
};

// Verifies the tensor-category-with-duals axioms on span{t_hat(p)}: closure
// of the spans under tensor products, compositions and adjoints for all
// operand pairs with at most arity_bound points each, presence of the
// identity in the (1,1) span and of the duality map (the t_hat value of the
// cup) in the (0,2) span. Products whose result arity carries no basis data
// within the supplied set are counted as skipped unless the product is
// nonzero and no basis exists at all, which is a violation.
TensorCategoryReport check_tensor_category(const std::vector<Partition>& partitions,
                                           int n, int arity_bound);

// Integer coefficients of the expansion of t_hat(p) over {t_map(q)} for q in
// coarsenings(p); the inverse expansion of t_map(p) over t_hat has all
// coefficients 1. The coefficients do not depend on n.
std::vector<std::pair<Partition, Int>> mobius_expand_hat(const Partition& p);

// t_hat(p, n) minus the evaluated expansion; zero iff the expansion is exact.
LinMap mobius_residual(const Partition& p, int n);

}  // namespace skewcat
