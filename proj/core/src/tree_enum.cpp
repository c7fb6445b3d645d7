#include "celltrees/tree_enum.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "celltrees/errors.hpp"
#include "celltrees/laplacian.hpp"

namespace celltrees {

namespace {

// The k-skeleton must be APC for the tree definition to apply; its Betti
// numbers below k agree with the ambient complex's.
void require_skeleton_apc(const CellComplex& cx, int k) {
  for (int j = -1; j < k; ++j)
    if (reduced_betti(cx, j) != 0)
      throw unsupported_input_error("the " + std::to_string(k) +
                                    "-skeleton is not acyclic in positive codimension");
}

IntegerMatrix column_submatrix(const IntegerMatrix& m, const std::vector<std::size_t>& cols) {
  IntegerMatrix sub(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) sub(i, j) = m(i, cols[j]);
  return sub;
}

// Depth-first enumeration of column bases of the boundary matrix in
// lexicographic order. A column dependent on the current prefix cannot lie
// in any basis extending it, so entire subtrees are pruned by the rank test.
class BasisEnumerator {
public:
  BasisEnumerator(const IntegerMatrix& bd, std::size_t target_rank)
      : bd_(bd), target_(target_rank) {}

  using Leaf = std::function<void(const std::vector<std::size_t>&, const Int&)>;

  // Enumerates bases whose first column index is `first`; used both for the
  // full run (loop over all valid `first`) and for parallel partitioning.
  void run_from(std::size_t first, const Leaf& leaf) {
    reset();
    if (target_ == 0) return;
    if (!push(first)) return;
    recurse(first + 1, leaf);
  }

  void run_all(const Leaf& leaf) {
    if (target_ == 0) {
      std::vector<std::size_t> none;
      Int one(1);
      leaf(none, one);
      return;
    }
    for (std::size_t c = 0; c + target_ <= bd_.cols(); ++c) run_from(c, leaf);
  }

private:
  void reset() {
    rows_.clear();
    pivots_.clear();
    chosen_.clear();
  }

  void recurse(std::size_t next, const Leaf& leaf) {
    if (chosen_.size() == target_) {
      Int h = torsion_of(chosen_);
      leaf(chosen_, h);
      return;
    }
    for (std::size_t c = next; c + (target_ - chosen_.size()) <= bd_.cols(); ++c) {
      if (push(c)) {
        recurse(c + 1, leaf);
        pop();
      }
    }
  }

  // Reduces column c against the echelon rows; a nonzero remainder becomes a
  // new pivot row (normalized to pivot 1) and the column joins the basis.
  bool push(std::size_t c) {
    const std::size_t m = bd_.rows();
    std::vector<Rat> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = Rat(bd_(i, c));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat& x = v[pivots_[r]];
      if (x == 0) continue;
      Rat factor = x;
      const std::vector<Rat>& row = rows_[r];
      for (std::size_t i = 0; i < m; ++i)
        if (row[i] != 0) v[i] -= factor * row[i];
    }
    std::size_t p = m;
    for (std::size_t i = 0; i < m; ++i)
      if (v[i] != 0) {
        p = i;
        break;
      }
    if (p == m) return false;
    Rat inv = Rat(1) / v[p];
    for (std::size_t i = 0; i < m; ++i)
      if (v[i] != 0) v[i] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    chosen_.push_back(c);
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
    chosen_.pop_back();
  }

  Int torsion_of(const std::vector<std::size_t>& cols) const {
    return smith_normal_form(column_submatrix(bd_, cols)).product();
  }

  const IntegerMatrix& bd_;
  std::size_t target_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> chosen_;
};

struct Accumulator {
  Int tau = 0;
  std::uint64_t count = 0;
  Int max_torsion = 0;
  Rat tau_hat = 0;
  bool want_hat = false;

  void take(const Int& h, const Rat& monomial) {
    tau += h * h;
    ++count;
    if (h > max_torsion) max_torsion = h;
    if (want_hat) tau_hat += Rat(h * h) * monomial;
  }

  void merge(const Accumulator& other) {
    tau += other.tau;
    count += other.count;
    if (other.max_torsion > max_torsion) max_torsion = other.max_torsion;
    tau_hat += other.tau_hat;
  }
};

}  // namespace

void enumerate_trees(const CellComplex& cx, int k,
                     const std::function<void(const TreeRecord&)>& emit,
                     const EnumOptions& options) {
  if (k < -1 || k > cx.dim())
    throw argument_error("tree dimension " + std::to_string(k) + " out of range");
  if (k == -1) {
    emit(TreeRecord{});
    return;
  }
  require_skeleton_apc(cx, k);

  IntegerMatrix bd = cx.boundary_matrix(k);
  const std::size_t r = rank(bd);
  const auto& level = cx.cells(k);

  CellComplex skel;
  if (options.cross_check) skel = (k == cx.dim()) ? cx : cx.skeleton(k);

  std::uint64_t seen = 0;
  BasisEnumerator en(bd, r);
  en.run_all([&](const std::vector<std::size_t>& cols, const Int& h) {
    TreeRecord rec;
    rec.torsion_order = h;
    for (std::size_t c : cols) rec.cells.push_back(level[c].id);
    if (options.cross_check && (seen % 50 == 0)) {
      auto order = homology_order(skel.top_subcomplex(rec.cells), k - 1);
      if (!order || *order != h)
        throw invariant_violation("tree torsion disagrees with subcomplex homology order");
    }
    ++seen;
    emit(rec);
  });
}

std::vector<TreeRecord> collect_trees(const CellComplex& cx, int k, const EnumOptions& options) {
  std::vector<TreeRecord> out;
  enumerate_trees(cx, k, [&](const TreeRecord& r) { out.push_back(r); }, options);
  return out;
}

TreeCountReport tree_count_report(const CellComplex& cx, int k, const Specialization* spec,
                                  unsigned threads) {
  if (k < -1 || k > cx.dim())
    throw argument_error("tree dimension " + std::to_string(k) + " out of range");

  TreeCountReport report;
  report.k = k;
  if (k == -1) {
    report.tau = 1;
    report.tree_count = 1;
    report.max_torsion = 1;
    if (spec) report.tau_hat = Rat(1);
    return report;
  }
  require_skeleton_apc(cx, k);

  IntegerMatrix bd = cx.boundary_matrix(k);
  const std::size_t r = rank(bd);
  const auto& level = cx.cells(k);

  std::vector<Rat> col_weight;
  if (spec)
    for (const Cell& c : level) col_weight.push_back(weight_of_cell(c, *spec));

  const auto monomial_of = [&](const std::vector<std::size_t>& cols) {
    Rat m(1);
    for (std::size_t c : cols) m *= col_weight[c];
    return m;
  };

  Accumulator total;
  total.want_hat = spec != nullptr;

  if (threads <= 1 || r == 0 || bd.cols() < 2) {
    BasisEnumerator en(bd, r);
    en.run_all([&](const std::vector<std::size_t>& cols, const Int& h) {
      total.take(h, spec ? monomial_of(cols) : Rat(0));
    });
  } else {
    // Workers claim first-column prefixes dynamically; exact sums make the
    // merge order irrelevant.
    const std::size_t first_max = bd.cols() - r;  // inclusive upper bound
    std::atomic<std::size_t> next_first{0};
    std::mutex merge_mutex;
    unsigned n_workers = std::min<unsigned>(threads, static_cast<unsigned>(first_max + 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_workers; ++t) {
      pool.emplace_back([&] {
        Accumulator local;
        local.want_hat = spec != nullptr;
        BasisEnumerator en(bd, r);
        for (;;) {
          std::size_t first = next_first.fetch_add(1);
          if (first > first_max) break;
          en.run_from(first, [&](const std::vector<std::size_t>& cols, const Int& h) {
            local.take(h, spec ? monomial_of(cols) : Rat(0));
          });
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.merge(local);
      });
    }
    for (auto& th : pool) th.join();
  }

  report.tau = total.tau;
  report.tree_count = total.count;
  report.max_torsion = total.max_torsion;
  if (spec) report.tau_hat = total.tau_hat;
  return report;
}

Int tau(const CellComplex& cx, int k, unsigned threads) {
  return tree_count_report(cx, k, nullptr, threads).tau;
}

Rat tau_hat(const CellComplex& cx, int k, const Specialization& spec, unsigned threads) {
  return *tree_count_report(cx, k, &spec, threads).tau_hat;
}

Rat tau_hat_of_records(const CellComplex& cx, int k, const std::vector<TreeRecord>& records,
                       const Specialization& spec) {
  std::map<std::string, Rat> weight;
  for (const Cell& c : cx.cells(k)) weight.emplace(c.id, weight_of_cell(c, spec));
  Rat acc(0);
  for (const TreeRecord& rec : records) {
    Rat m(1);
    for (const auto& id : rec.cells) m *= weight.at(id);
    acc += Rat(rec.torsion_order * rec.torsion_order) * m;
  }
  return acc;
}

bool verify_cmtt(const CellComplex& cx, int k, const Specialization& spec) {
  if (!is_apc(cx))
    throw unsupported_input_error("matrix-tree identity requires an APC complex");
  if (k < 0 || k > cx.dim()) throw argument_error("degree out of range for matrix-tree identity");
  auto h = homology_order(cx, k - 2);
  if (!h) throw unsupported_input_error("infinite homology in codimension 2");
  Rat lhs = pi_hat(cx, k, spec) * Rat(*h * *h) * weight_product(cx, k - 1, spec);
  Rat rhs = tau_hat(cx, k, spec) * tau_hat(cx, k - 1, spec);
  return lhs == rhs;
}

Rat graph_tau_hat(const CellComplex& cx, const Specialization& spec) {
  if (cx.dim() != 1) throw unsupported_input_error("weighted Kirchhoff form needs a graph");
  if (reduced_betti(cx, 0) != 0)
    throw unsupported_input_error("weighted Kirchhoff form needs a connected graph");
  Rat prod(1), sum(0);
  for (const Cell& v : cx.cells(0)) {
    Rat x = weight_of_cell(v, spec);
    prod *= x;
    sum += x;
  }
  return prod / sum * pdet(updown_laplacian(cx, 0, spec));
}

bool verify_submatrix_determinant(const CellComplex& cx, const std::vector<std::string>& s_cells,
                                  const std::vector<std::string>& t_cells,
                                  const Specialization& spec) {
  const int d = cx.dim();
  if (d < 0) throw argument_error("empty complex");
  if (!is_apc(cx)) throw unsupported_input_error("submatrix identity requires an APC complex");

  IntegerMatrix bd_top = cx.boundary_matrix(d);
  IntegerMatrix bd_below = cx.boundary_matrix(d - 1);
  const std::size_t expected = rank(bd_top);  // f_d - beta_d
  if (s_cells.size() != expected || t_cells.size() != expected)
    throw argument_error("S and T must both have size f_d - beta_d");

  const auto positions = [&](const std::vector<std::string>& ids, int dim_wanted) {
    const auto& level = cx.cells(dim_wanted);
    std::vector<std::size_t> pos;
    for (const auto& id : ids) {
      auto it = std::lower_bound(level.begin(), level.end(), id,
                                 [](const Cell& c, const std::string& s) { return c.id < s; });
      if (it == level.end() || it->id != id)
        throw argument_error("'" + id + "' is not a cell of dimension " + std::to_string(dim_wanted));
      pos.push_back(static_cast<std::size_t>(it - level.begin()));
    }
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (pos.size() != ids.size()) throw argument_error("duplicate ids in S or T");
    return pos;
  };

  std::vector<std::size_t> s_pos = positions(s_cells, d - 1);
  std::vector<std::size_t> t_pos = positions(t_cells, d);

  IntegerMatrix minor(expected, expected);
  for (std::size_t i = 0; i < expected; ++i)
    for (std::size_t j = 0; j < expected; ++j) minor(i, j) = bd_top(s_pos[i], t_pos[j]);
  Int det_st = determinant(minor);

  bool t_is_tree = rank(column_submatrix(bd_top, t_pos)) == expected;

  std::vector<std::size_t> sbar;
  {
    std::vector<bool> in_s(cx.cells(d - 1).size(), false);
    for (std::size_t p : s_pos) in_s[p] = true;
    for (std::size_t p = 0; p < in_s.size(); ++p)
      if (!in_s[p]) sbar.push_back(p);
  }
  IntegerMatrix sbar_cols = column_submatrix(bd_below, sbar);
  bool sbar_is_tree = rank(sbar_cols) == sbar.size();

  if ((det_st != 0) != (t_is_tree && sbar_is_tree)) return false;
  if (det_st == 0) return true;

  Int h_t = smith_normal_form(column_submatrix(bd_top, t_pos)).product();
  Int h_sbar = smith_normal_form(sbar_cols).product();
  auto h_cx = homology_order(cx, d - 2);
  if (!h_cx) throw unsupported_input_error("infinite homology in codimension 2");

  Rat ratio(1);
  const auto& top_level = cx.cells(d);
  const auto& low_level = cx.cells(d - 1);
  for (std::size_t p : t_pos) ratio *= weight_of_cell(top_level[p], spec);
  for (std::size_t p : s_pos) ratio /= weight_of_cell(low_level[p], spec);

  Rat lhs = Rat(det_st * det_st) * ratio;
  Rat factor = Rat(h_t * h_sbar, *h_cx);
  Rat rhs = factor * factor * ratio;
  return lhs == rhs;
}

}  // namespace celltrees
