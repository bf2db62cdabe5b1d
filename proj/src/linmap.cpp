#include "skewcat/linmap.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewcat/skew_ops.hpp"
#include "skewcat/util.hpp"

namespace skewcat {

namespace {

void check_dense_guard(int n, int k, int l) {
  double size = 1.0;
  for (int i = 0; i < k + l; ++i) size *= n;
  if (size > 1e6)
    throw ResourceError("linmap: dense index space exceeds 10^6 entries");
}

void check_tuple(const Tuple& t, int n, int arity, const char* what) {
  if (static_cast<int>(t.size()) != arity)
    throw std::invalid_argument(std::string("linmap: ") + what + " arity mismatch");
  for (int x : t)
    if (x < 1 || x > n)
      throw std::invalid_argument(std::string("linmap: ") + what + " index out of range");
}

}  // namespace

LinMap::LinMap(int n, int k, int l) : n_(n), k_(k), l_(l) {
  if (n < 1 || k < 0 || l < 0) throw std::invalid_argument("linmap: bad shape");
  check_dense_guard(n, k, l);
}

Rat LinMap::coefficient(const Tuple& out, const Tuple& in) const {
  auto it = entries_.find({out, in});
  return it == entries_.end() ? Rat(0) : it->second;
}

void LinMap::add_entry(const Tuple& out, const Tuple& in, const Rat& value) {
  check_tuple(out, n_, l_, "out");
  check_tuple(in, n_, k_, "in");
  if (value == 0) return;
  auto key = std::make_pair(out, in);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), value);
  } else {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

bool LinMap::is_scalar(const Rat& value) const {
  if (k_ != 0 || l_ != 0) return false;
  if (value == 0) return entries_.empty();
  return entries_.size() == 1 && coefficient({}, {}) == value;
}

namespace {

// Emits the (i, j) labelling rows of p under a block labelling.
void labelled_rows(const Partition& p, const std::vector<int>& block_label, Tuple& in,
                   Tuple& out) {
  in.clear();
  out.clear();
  for (int b : p.upper_labels()) in.push_back(block_label[static_cast<std::size_t>(b)]);
  for (int b : p.lower_labels()) out.push_back(block_label[static_cast<std::size_t>(b)]);
}

}  // namespace

LinMap t_hat(const Partition& p, int n) {
  LinMap out(n, p.upper_arity(), p.lower_arity());
  const int b = p.block_count();
  if (b > n) return out;  // no injective labelling exists
  // One entry per injective labelling of the blocks into 1..n.
  std::vector<int> block_label(static_cast<std::size_t>(b) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  Tuple in, in_buf, out_buf;
  auto rec = [&](auto&& self, int block) -> void {
    if (block > b) {
      labelled_rows(p, block_label, in_buf, out_buf);
      out.add_entry(out_buf, in_buf, 1);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      block_label[static_cast<std::size_t>(block)] = v;
      self(self, block + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 1);
  return out;
}

LinMap t_map(const Partition& p, int n) {
  LinMap out(n, p.upper_arity(), p.lower_arity());
  const int b = p.block_count();
  std::vector<int> block_label(static_cast<std::size_t>(b) + 1, 1);
  Tuple in_buf, out_buf;
  // One entry per arbitrary labelling of the blocks (constant on blocks).
  auto rec = [&](auto&& self, int block) -> void {
    if (block > b) {
      labelled_rows(p, block_label, in_buf, out_buf);
      out.add_entry(out_buf, in_buf, 1);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      block_label[static_cast<std::size_t>(block)] = v;
      self(self, block + 1);
    }
  };
  rec(rec, 1);
  return out;
}

LinMap identity_map_on(int n, int arity) {
  LinMap out(n, arity, arity);
  Tuple t(static_cast<std::size_t>(arity), 1);
  while (true) {
    out.add_entry(t, t, 1);
    int pos = 0;
    while (pos < arity && t[static_cast<std::size_t>(pos)] == n)
      t[static_cast<std::size_t>(pos++)] = 1;
    if (pos == arity) break;
    ++t[static_cast<std::size_t>(pos)];
  }
  return out;
}

LinMap adjoint(const LinMap& t) {
  LinMap out(t.dim(), t.codomain_arity(), t.domain_arity());
  for (const auto& [key, c] : t.entries()) out.add_entry(key.second, key.first, c);
  return out;
}

LinMap tensor(const LinMap& t, const LinMap& s) {
  if (t.dim() != s.dim()) throw std::invalid_argument("tensor: dimension mismatch");
  LinMap out(t.dim(), t.domain_arity() + s.domain_arity(),
             t.codomain_arity() + s.codomain_arity());
  for (const auto& [tk, tc] : t.entries())
    for (const auto& [sk, sc] : s.entries()) {
      Tuple o = tk.first;
      o.insert(o.end(), sk.first.begin(), sk.first.end());
      Tuple i = tk.second;
      i.insert(i.end(), sk.second.begin(), sk.second.end());
      out.add_entry(o, i, tc * sc);
    }
  return out;
}

LinMap compose(const LinMap& s, const LinMap& t) {
  if (s.dim() != t.dim()) throw std::invalid_argument("compose: dimension mismatch");
  if (s.domain_arity() != t.codomain_arity())
    throw std::invalid_argument("compose: arity mismatch");
  LinMap out(t.dim(), t.domain_arity(), s.codomain_arity());
  std::map<Tuple, std::vector<std::pair<Tuple, Rat>>> by_mid;
  for (const auto& [key, c] : t.entries()) by_mid[key.first].emplace_back(key.second, c);
  for (const auto& [key, c2] : s.entries()) {
    auto it = by_mid.find(key.second);
    if (it == by_mid.end()) continue;
    for (const auto& [in, c1] : it->second) out.add_entry(key.first, in, c1 * c2);
  }
  return out;
}

LinMap add(const LinMap& t, const LinMap& s) {
  if (t.dim() != s.dim() || t.domain_arity() != s.domain_arity() ||
      t.codomain_arity() != s.codomain_arity())
    throw std::invalid_argument("add: shape mismatch");
  LinMap out = t;
  for (const auto& [key, c] : s.entries()) out.add_entry(key.first, key.second, c);
  return out;
}

LinMap scale(const LinMap& t, const Rat& c) {
  LinMap out(t.dim(), t.domain_arity(), t.codomain_arity());
  if (c == 0) return out;
  for (const auto& [key, v] : t.entries()) out.add_entry(key.first, key.second, v * c);
  return out;
}

LinMap tensor_identity_residual(const Partition& p, const Partition& q, int n) {
  LinMap residual = tensor(t_hat(p, n), t_hat(q, n));
  for (const auto& r : connected_tensor_set(p, q))
    residual = add(residual, scale(t_hat(r, n), -1));
  return residual;
}

Int compose_coefficient(int n, int loops, int result_blocks) {
  Int c = 1;
  for (int d = 0; d < loops; ++d) c *= (n - result_blocks - d);
  return c;
}

LinMap compose_identity_residual(const Partition& p, const Partition& q, int n) {
  LinMap residual = compose(t_hat(q, n), t_hat(p, n));
  if (!compatible(p, q)) return residual;  // prediction is the zero map
  const LoopFactors lf = loop_factors(q, p);
  const int loops = lf.b - lf.a;
  for (const auto& r : connected_composition_set(q, p)) {
    const Int c = compose_coefficient(n, loops, r.block_count());
    residual = add(residual, scale(t_hat(r, n), Rat(-c)));
  }
  return residual;
}

SpanSolver::SpanSolver(int n, int k, int l) : n_(n), k_(k), l_(l) {
  check_dense_guard(n, k, l);
}

SpanSolver::SparseRow SpanSolver::vectorise(const LinMap& m) const {
  if (m.dim() != n_ || m.domain_arity() != k_ || m.codomain_arity() != l_)
    throw std::invalid_argument("span solver: shape mismatch");
  SparseRow row;
  for (const auto& [key, c] : m.entries()) {
    std::uint64_t idx = 0;
    for (int x : key.first) idx = idx * static_cast<std::uint64_t>(n_) +
                                  static_cast<std::uint64_t>(x - 1);
    for (int x : key.second) idx = idx * static_cast<std::uint64_t>(n_) +
                                   static_cast<std::uint64_t>(x - 1);
    row[idx] = c;
  }
  return row;
}

SpanSolver::SparseRow SpanSolver::reduce(SparseRow row, std::vector<Rat>* coefficients) const {
  if (coefficients) coefficients->assign(static_cast<std::size_t>(basis_count_), Rat(0));
  while (!row.empty()) {
    const auto lead = row.begin()->first;
    auto pivot = pivot_of_.find(lead);
    if (pivot == pivot_of_.end()) break;
    const Rat factor = row.begin()->second;
    const SparseRow& prow = rows_[pivot->second];
    for (const auto& [col, v] : prow) {
      auto it = row.find(col);
      if (it == row.end()) {
        row.emplace(col, -factor * v);
      } else {
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
      }
    }
    if (coefficients) {
      const auto& combo = combos_[pivot->second];
      for (std::size_t i = 0; i < combo.size(); ++i)
        (*coefficients)[i] += factor * combo[i];
    }
  }
  return row;
}

bool SpanSolver::insert(const LinMap& m) {
  SparseRow row = vectorise(m);
  std::vector<Rat> combo;
  // The combo tracks this row as a combination of all maps inserted so far,
  // including the one being inserted.
  row = reduce(std::move(row), nullptr);
  ++basis_count_;
  for (auto& c : combos_) c.resize(static_cast<std::size_t>(basis_count_), Rat(0));
  if (row.empty()) return false;
  const Rat lead = row.begin()->second;
  for (auto& [col, v] : row) v /= lead;
  // Recompute the combination exactly by reducing again with tracking.
  SparseRow fresh = vectorise(m);
  std::vector<Rat> coeffs;
  reduce(std::move(fresh), &coeffs);
  combo.assign(static_cast<std::size_t>(basis_count_), Rat(0));
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(basis_count_); ++i)
    combo[i] = -coeffs[i] / lead;
  combo[static_cast<std::size_t>(basis_count_) - 1] = Rat(1) / lead;
  pivot_of_[row.begin()->first] = rows_.size();
  rows_.push_back(std::move(row));
  combos_.push_back(std::move(combo));
  return true;
}

bool SpanSolver::contains(const LinMap& m, std::vector<Rat>* coefficients) const {
  std::vector<Rat> coeffs;
  SparseRow residual = reduce(vectorise(m), coefficients ? &coeffs : nullptr);
  if (!residual.empty()) return false;
  if (coefficients) *coefficients = std::move(coeffs);
  return true;
}

RankResult linearly_independent(const std::vector<LinMap>& maps) {
  if (maps.empty()) return {0, true};
  SpanSolver solver(maps.front().dim(), maps.front().domain_arity(),
                    maps.front().codomain_arity());
  for (const auto& m : maps) solver.insert(m);
  return {solver.rank(), solver.rank() == static_cast<int>(maps.size())};
}

SpanResult span_contains(const std::vector<LinMap>& basis, const LinMap& target) {
  SpanSolver solver(target.dim(), target.domain_arity(), target.codomain_arity());
  for (const auto& m : basis) solver.insert(m);
  SpanResult out;
  std::vector<Rat> coeffs;
  out.contained = solver.contains(target, &coeffs);
  if (out.contained) out.coefficients = std::move(coeffs);
  return out;
}

namespace {

using Arity = std::pair<int, int>;

struct SpanTable {
  std::map<Arity, SpanSolver> solvers;

  SpanSolver* find(const Arity& a) {
    auto it = solvers.find(a);
    return it == solvers.end() ? nullptr : &it->second;
  }
};

}  // namespace

TensorCategoryReport check_tensor_category(const std::vector<Partition>& partitions, int n,
                                           int arity_bound) {
  TensorCategoryReport report;
  SpanTable table;
  std::vector<Partition> parts = partitions;
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

  for (const auto& p : parts) {
    const Arity a{p.upper_arity(), p.lower_arity()};
    auto [it, fresh] = table.solvers.try_emplace(a, n, a.first, a.second);
    it->second.insert(t_hat(p, n));
  }

  auto span_check = [&](const LinMap& product, const std::string& check,
                        const std::string& witness) {
    if (product.is_zero()) {
      ++report.checks_run;
      return;
    }
    const Arity a{product.domain_arity(), product.codomain_arity()};
    SpanSolver* solver = table.find(a);
    if (solver == nullptr) {
      ++report.checks_run;
      report.violations.push_back(
          {check, witness + " -> nonzero product at arity (" + std::to_string(a.first) + "," +
                      std::to_string(a.second) + ") with no basis elements"});
      return;
    }
    ++report.checks_run;
    if (!solver->contains(product))
      report.violations.push_back({check, witness + " -> product escapes the span"});
  };

  // Axiom (iv): the identity lies in the (1,1) span.
  {
    const LinMap id = identity_map_on(n, 1);
    SpanSolver* solver = table.find({1, 1});
    ++report.checks_run;
    if (solver == nullptr || !solver->contains(id))
      report.violations.push_back({"identity", "identity map missing from the (1,1) span"});
  }
  // Axiom (v): the duality map lies in the (0,2) span.
  {
    const LinMap zeta = t_hat(cup(), n);
    SpanSolver* solver = table.find({0, 2});
    ++report.checks_run;
    if (solver == nullptr || !solver->contains(zeta))
      report.violations.push_back({"duality", "duality map missing from the (0,2) span"});
  }

  const int max_data_points = [&] {
    int m = 0;
    for (const auto& p : parts) m = std::max(m, p.points());
    return m;
  }();

  std::vector<Partition> operands;
  for (const auto& p : parts)
    if (p.points() <= arity_bound) operands.push_back(p);

  // Axiom (iii): adjoints stay in the span.
  for (const auto& p : operands)
    span_check(adjoint(t_hat(p, n)), "adjoint", "adjoint of " + to_text(p));

  // Axioms (i) and (ii): tensor products and compositions stay in the span.
  for (const auto& x : operands)
    for (const auto& y : operands) {
      if (x.points() + y.points() <= max_data_points) {
        span_check(tensor(t_hat(x, n), t_hat(y, n)), "tensor",
                   to_text(x) + " (x) " + to_text(y));
      } else {
        ++report.checks_skipped;
      }
      if (x.lower_arity() == y.upper_arity()) {
        if (x.upper_arity() + y.lower_arity() <= max_data_points) {
          span_check(compose(t_hat(y, n), t_hat(x, n)), "compose",
                     to_text(y) + " . " + to_text(x));
        } else {
          ++report.checks_skipped;
        }
      }
    }

  report.ok = report.violations.empty();
  return report;
}

std::vector<std::pair<Partition, Int>> mobius_expand_hat(const Partition& p) {
  // t_hat(p) = t_map(p) - sum over proper coarsenings q of t_hat(q),
  // expanded recursively. Coarser partitions have fewer blocks, so the
  // recursion grounds at one block.
  std::map<Partition, std::map<Partition, Int>> memo;
  auto expand = [&](auto&& self, const Partition& x) -> const std::map<Partition, Int>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::map<Partition, Int> coeffs;
    coeffs[x] = 1;
    for (const auto& q : coarsenings(x)) {
      if (q == x) continue;
      for (const auto& [r, c] : self(self, q)) coeffs[r] -= c;
    }
    for (auto it2 = coeffs.begin(); it2 != coeffs.end();)
      it2 = it2->second == 0 ? coeffs.erase(it2) : std::next(it2);
    return memo.emplace(x, std::move(coeffs)).first->second;
  };
  const auto& coeffs = expand(expand, p);
  return {coeffs.begin(), coeffs.end()};
}

LinMap mobius_residual(const Partition& p, int n) {
  LinMap residual = t_hat(p, n);
  for (const auto& [q, c] : mobius_expand_hat(p))
    residual = add(residual, scale(t_map(q, n), Rat(-c)));
  return residual;
}

}  // namespace skewcat
