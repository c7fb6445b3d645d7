#include "celltrees/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "celltrees/closed_forms.hpp"
#include "celltrees/errors.hpp"
#include "celltrees/families.hpp"
#include "celltrees/laplacian.hpp"
#include "celltrees/tree_enum.hpp"

namespace celltrees {

Specialization battery_point(const CellComplex& cx, std::uint64_t seed, long point) {
  if (point < 0) return Specialization::all_ones(cx.variables());
  return random_specialization(cx.variables(), seed, static_cast<std::uint64_t>(point));
}

namespace {

using ComplexPtr = std::shared_ptr<const CellComplex>;

CheckOutcome outcome(std::string expected, std::string actual) {
  CheckOutcome o;
  o.pass = expected == actual;
  o.expected = std::move(expected);
  o.actual = std::move(actual);
  return o;
}

CheckOutcome outcome_rat(const Rat& expected, const Rat& actual) {
  return outcome(rat_to_string(expected), rat_to_string(actual));
}

CheckOutcome outcome_count(long violations) {
  return outcome("0 violations", std::to_string(violations) + " violations");
}

std::string sizes_label(const std::vector<int>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sizes[i]);
  }
  return s;
}

// Every suite evaluates each identity at the all-ones point (point -1) and
// at `points` seeded pseudo-random positive-rational points.
std::vector<long> point_list(long points) {
  std::vector<long> p{-1};
  for (long i = 0; i < points; ++i) p.push_back(i);
  return p;
}

void for_subsets(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(r);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
    if (pos == r) {
      fn(idx);
      return;
    }
    for (std::size_t c = next; c + (r - pos) <= n; ++c) {
      idx[pos] = c;
      self(self, pos + 1, c + 1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::size_t> seeded_subset(std::size_t n, std::size_t r, std::uint64_t& state) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = i + static_cast<std::size_t>(detail::splitmix64(state) % (n - i));
    std::swap(all[i], all[j]);
  }
  std::vector<std::size_t> out(all.begin(), all.begin() + static_cast<long>(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> ids_at(const CellComplex& cx, int dim, const std::vector<std::size_t>& pos) {
  std::vector<std::string> out;
  for (std::size_t p : pos) out.push_back(cx.cells(dim)[p].id);
  return out;
}

// ----- battery complexes ------------------------------------------------

struct Battery {
  std::vector<std::pair<ComplexPtr, std::vector<int>>> colorful;  // complex, sizes
  std::vector<ComplexPtr> cubes;                                  // n = 1..3
  ComplexPtr k3, k4;                                              // complete graphs
  ComplexPtr simplex52;                                           // 2-skeleton, 5 vertices
};

Battery make_battery() {
  Battery b;
  for (const std::vector<int>& sizes :
       {std::vector<int>{2, 2}, {2, 3}, {2, 2, 2}, {2, 2, 3}, {3, 3}})
    b.colorful.emplace_back(std::make_shared<CellComplex>(complete_colorful({sizes})), sizes);
  for (int n = 1; n <= 3; ++n)
    b.cubes.push_back(std::make_shared<CellComplex>(hypercube({n})));
  b.k3 = std::make_shared<CellComplex>(simplex_skeleton(3, 1));
  b.k4 = std::make_shared<CellComplex>(simplex_skeleton(4, 1));
  b.simplex52 = std::make_shared<CellComplex>(simplex_skeleton(5, 2));
  return b;
}

// ----- suspension-of-complete-graph closed forms (join worked example) ---

struct SuspensionForms {
  Rat sx, sy, prod_x, prod_y;
  long n;

  static SuspensionForms eval(int n, const Specialization& spec) {
    SuspensionForms f;
    f.n = n;
    f.sx = 0;
    f.prod_x = 1;
    for (int i = 1; i <= n; ++i) {
      const Rat& v = spec.value("v[" + std::to_string(i) + "]");
      f.sx += v;
      f.prod_x *= v;
    }
    const Rat& y1 = spec.value("X[1.1]");
    const Rat& y2 = spec.value("X[1.2]");
    f.sy = y1 + y2;
    f.prod_y = y1 * y2;
    return f;
  }

  long choose2() const { return (n - 1) * (n - 2) / 2; }

  SpectrumDescriptor total_spectrum(int k) const {
    SpectrumDescriptor s;
    switch (k) {
      case -1:
        s.add(sx + sy, 1);
        break;
      case 0:
        s.add(sx + sy, n + 1);
        s.add(sx, 1);
        break;
      case 1:
        s.add(sy, choose2());
        s.add(sx + sy, 2 * n - 1);
        s.add(sx, n);
        break;
      case 2:
        s.add(Rat(0), choose2());
        s.add(sx, n - 1);
        s.add(sy, choose2());
        s.add(sx + sy, n - 1);
        break;
      default:
        throw argument_error("suspension spectrum degree out of range");
    }
    return s;
  }

  Rat pi(int k) const {
    switch (k) {
      case 0:
        return sx + sy;
      case 1:
        return sx * rat_pow(sx + sy, n);
      case 2:
        return rat_pow(sx, n - 1) * rat_pow(sy, choose2()) * rat_pow(sx + sy, n - 1);
      default:
        throw argument_error("suspension pi degree out of range");
    }
  }

  Rat tau(int k) const {
    switch (k) {
      case 1:
        return prod_x * prod_y * rat_pow(sx + sy, n - 1) * sx;
      case 2:
        return rat_pow(prod_x, n) * rat_pow(prod_y, n - 1) * rat_pow(sx, n - 2) *
               rat_pow(sy, choose2());
      default:
        throw argument_error("suspension tau degree out of range");
    }
  }

  // Displayed factor spectra: the complete graph on n vertices and the
  // two-vertex edgeless complex.
  FactorSpectra complete_graph_factor() const {
    FactorSpectra f;
    SpectrumDescriptor sm1, s0, s1;
    sm1.add(sx, 1);
    s0.add(sx, n);
    s1.add(sx, n - 1);
    s1.add(Rat(0), choose2());
    f.by_dim = {sm1, s0, s1};
    return f;
  }
  FactorSpectra edgeless_factor() const {
    FactorSpectra f;
    SpectrumDescriptor sm1, s0;
    sm1.add(sy, 1);
    s0.add(sy, 1);
    s0.add(Rat(0), 1);
    f.by_dim = {sm1, s0};
    return f;
  }
};

// ----- suite builders ----------------------------------------------------

void add_cmtt_checks(std::vector<Check>& out, const Battery& b, std::uint64_t seed, long points) {
  std::vector<ComplexPtr> all;
  for (const auto& [cx, sizes] : b.colorful) all.push_back(cx);
  for (const auto& cx : b.cubes) all.push_back(cx);
  all.push_back(b.k4);
  all.push_back(b.simplex52);

  for (const ComplexPtr& cx : all)
    for (int k = 0; k <= cx->dim(); ++k)
      for (long p : point_list(points)) {
        Check c;
        c.name = "cmtt/" + cx->name() + "/k=" + std::to_string(k) + "/p=" + std::to_string(p);
        c.complex_name = cx->name();
        c.k = k;
        c.point = p;
        c.run = [cx, k, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          auto h = homology_order(*cx, k - 2);
          Rat lhs = pi_hat(*cx, k, spec) * Rat(*h * *h) * weight_product(*cx, k - 1, spec);
          Rat rhs = tau_hat(*cx, k, spec) * tau_hat(*cx, k - 1, spec);
          return outcome_rat(rhs, lhs);
        };
        out.push_back(std::move(c));
      }
}

void add_colorful_checks(std::vector<Check>& out, const Battery& b, std::uint64_t seed,
                         long points) {
  // Brute force against the closed forms on the standard family list.
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{2, 2}, {1}}, {{2, 3}, {1}}, {{2, 2, 2}, {1, 2}}, {{2, 2, 3}, {2}}, {{3, 3}, {1}}};

  for (const auto& [sizes, ks] : cases) {
    ComplexPtr cx;
    for (const auto& [cand, cand_sizes] : b.colorful)
      if (cand_sizes == sizes) cx = cand;
    for (int k : ks) {
      {
        Check c;
        c.name = "colorful/adin/" + sizes_label(sizes) + "/k=" + std::to_string(k);
        c.complex_name = cx->name();
        c.k = k;
        c.run = [cx, k, sizes = sizes] {
          Int brute = tau(*cx, k);
          return outcome(adin_tau(k, sizes).str(), brute.str());
        };
        out.push_back(std::move(c));
      }
      for (long p : point_list(points)) {
        Check c;
        c.name = "colorful/tau-hat/" + sizes_label(sizes) + "/k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = cx->name();
        c.k = k;
        c.point = p;
        c.run = [cx, k, sizes = sizes, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          return outcome_rat(colorful_tau_hat(k, sizes, spec), tau_hat(*cx, k, spec));
        };
        out.push_back(std::move(c));
      }
    }
    {
      Check c;
      c.name = "colorful/ones-specializes/" + sizes_label(sizes);
      c.complex_name = cx->name();
      c.run = [cx, sizes = sizes] {
        long violations = 0;
        for (int k = 0; k < static_cast<int>(sizes.size()); ++k) {
          Specialization ones = Specialization::all_ones(cx->variables());
          if (colorful_tau_hat(k, sizes, ones) != Rat(adin_tau(k, sizes))) ++violations;
        }
        return outcome_count(violations);
      };
      out.push_back(std::move(c));
    }
  }

  // Degree-weighted octahedron worked example: both displayed polynomials.
  {
    ComplexPtr octa;
    for (const auto& [cand, cand_sizes] : b.colorful)
      if (cand_sizes == std::vector<int>{2, 2, 2}) octa = cand;
    for (long p : point_list(points)) {
      Check c2;
      c2.name = "colorful/octahedron-top/p=" + std::to_string(p);
      c2.complex_name = octa->name();
      c2.k = 2;
      c2.point = p;
      c2.run = [octa, seed, p] {
        Specialization spec = battery_point(*octa, seed, p);
        Rat prod(1), s1(0), s2(0), s3(0);
        for (int q = 1; q <= 3; ++q)
          for (int i = 1; i <= 2; ++i) {
            const Rat& x = spec.value("X[" + std::to_string(q) + "." + std::to_string(i) + "]");
            prod *= x;
            (q == 1 ? s1 : q == 2 ? s2 : s3) += x;
          }
        Rat closed = rat_pow(prod, 3) * s1 * s2 * s3;
        return outcome_rat(closed, tau_hat(*octa, 2, spec));
      };
      out.push_back(std::move(c2));

      Check c1;
      c1.name = "colorful/octahedron-graph/p=" + std::to_string(p);
      c1.complex_name = octa->name();
      c1.k = 1;
      c1.point = p;
      c1.run = [octa, seed, p] {
        Specialization spec = battery_point(*octa, seed, p);
        Rat prod(1), s1(0), s2(0), s3(0);
        for (int q = 1; q <= 3; ++q)
          for (int i = 1; i <= 2; ++i) {
            const Rat& x = spec.value("X[" + std::to_string(q) + "." + std::to_string(i) + "]");
            prod *= x;
            (q == 1 ? s1 : q == 2 ? s2 : s3) += x;
          }
        Rat closed = prod * (s2 + s3) * (s1 + s3) * (s1 + s2) * (s1 + s2 + s3);
        return outcome_rat(closed, tau_hat(*octa, 1, spec));
      };
      out.push_back(std::move(c1));
    }
  }

  // Multipartite graph case: closed form in graph language and at all-ones.
  for (const std::vector<int>& sizes : {std::vector<int>{2, 3}, {2, 2, 2}, {3, 3}}) {
    {
      Check c;
      c.name = "colorful/austin/" + sizes_label(sizes);
      c.run = [sizes] {
        return outcome(adin_tau(1, sizes).str(), austin_tau(sizes).str());
      };
      out.push_back(std::move(c));
    }
    for (long p : point_list(points)) {
      Check c;
      c.name = "colorful/clark/" + sizes_label(sizes) + "/p=" + std::to_string(p);
      c.point = p;
      c.run = [sizes, seed, p] {
        CellComplex cx = complete_colorful({sizes});
        Specialization spec = battery_point(cx, seed, p);
        return outcome_rat(colorful_tau_hat(1, sizes, spec), clark_tau_hat(sizes, spec));
      };
      out.push_back(std::move(c));
    }
  }

  // Top-degree closed form.
  for (const std::vector<int>& sizes : {std::vector<int>{2, 2}, {2, 2, 2}, {2, 2, 3}})
    for (long p : point_list(points)) {
      Check c;
      c.name = "colorful/top-degree/" + sizes_label(sizes) + "/p=" + std::to_string(p);
      c.point = p;
      c.run = [sizes, seed, p] {
        CellComplex cx = complete_colorful({sizes});
        Specialization spec = battery_point(cx, seed, p);
        int top = static_cast<int>(sizes.size()) - 1;
        return outcome_rat(colorful_tau_hat(top, sizes, spec), colorful_top_tau_hat(sizes, spec));
      };
      out.push_back(std::move(c));
    }

  // Simplex skeleta: unweighted counts and the degree-weighted form.
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {4, 2}, {5, 2}}) {
    Check c;
    c.name = "simplex/count/n=" + std::to_string(n) + ",d=" + std::to_string(d);
    c.k = d;
    c.run = [n, d] {
      CellComplex cx = simplex_skeleton(n, d);
      return outcome(kalai_tau(n, d).str(), tau(cx, d).str());
    };
    out.push_back(std::move(c));
  }
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}})
    for (long p : point_list(points)) {
      Check c;
      c.name = "simplex/tau-hat/n=" + std::to_string(n) + ",d=" + std::to_string(d) +
               "/p=" + std::to_string(p);
      c.k = d;
      c.point = p;
      c.run = [n, d, seed, p] {
        CellComplex cx = simplex_skeleton(n, d);
        Specialization spec = battery_point(cx, seed, p);
        return outcome_rat(kalai_tau_hat(n, d, spec), tau_hat(cx, d, spec));
      };
      out.push_back(std::move(c));
    }

  // Degenerate colorful data (all classes of size 1) reproduces the simplex
  // closed form.
  {
    Check c;
    c.name = "colorful/degenerate-simplex/n=5,d=2";
    c.run = [seed] {
      CellComplex cx = simplex_skeleton(5, 2);
      long violations = 0;
      for (long p : {0L, 1L}) {
        Specialization sp = battery_point(cx, seed, p);
        std::map<std::string, Rat> renamed;
        for (int i = 1; i <= 5; ++i)
          renamed.emplace("X[" + std::to_string(i) + ".1]",
                          sp.value("v[" + std::to_string(i) + "]"));
        Specialization cs(std::move(renamed));
        if (colorful_tau_hat(2, {1, 1, 1, 1, 1}, cs) != kalai_tau_hat(5, 2, sp)) ++violations;
      }
      return outcome_count(violations);
    };
    out.push_back(std::move(c));
  }
}

void add_cube_checks(std::vector<Check>& out, const Battery& b, std::uint64_t seed, long points) {
  const std::vector<std::pair<int, int>> cases = {{1, 0}, {1, 1}, {2, 0}, {2, 1},
                                                  {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  for (const auto& [n, k] : cases) {
    ComplexPtr cx = b.cubes[static_cast<std::size_t>(n - 1)];
    for (long p : point_list(points)) {
      Check c;
      c.name = "cube/tau-hat/n=" + std::to_string(n) + ",k=" + std::to_string(k) +
               "/p=" + std::to_string(p);
      c.complex_name = cx->name();
      c.k = k;
      c.point = p;
      c.run = [cx, n = n, k = k, seed, p] {
        Specialization spec = battery_point(*cx, seed, p);
        Rat brute = (n == 3 && k == 1) ? graph_tau_hat(cx->skeleton(1), spec)
                                       : tau_hat(*cx, k, spec);
        return outcome_rat(cube_tau_hat(n, k, spec), brute);
      };
      out.push_back(std::move(c));
    }
  }

  for (int n = 1; n <= 3; ++n) {
    ComplexPtr cx = b.cubes[static_cast<std::size_t>(n - 1)];
    for (int k = 1; k <= n; ++k) {
      for (long p : point_list(points)) {
        Check c;
        c.name = "cube/spectrum/n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = cx->name();
        c.k = k;
        c.point = p;
        c.run = [cx, n, k, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          UniPoly predicted = cube_spectrum(n, k, spec).nonzero_char_poly();
          UniPoly computed = char_poly(updown_laplacian(*cx, k - 1, spec)).strip_lambda();
          return outcome(predicted.to_string("L"), computed.to_string("L"));
        };
        out.push_back(std::move(c));
      }
      {
        Check c;
        c.name = "cube/spectrum-rank/n=" + std::to_string(n) + ",k=" + std::to_string(k);
        c.complex_name = cx->name();
        c.k = k;
        c.run = [cx, n, k, seed] {
          Specialization spec = battery_point(*cx, seed, 0);
          long mult = cube_spectrum(n, k, spec).total_multiplicity();
          long rk = static_cast<long>(rank(cx->boundary_matrix(k)));
          return outcome(std::to_string(rk), std::to_string(mult));
        };
        out.push_back(std::move(c));
      }
    }
    for (int k = -1; k <= n; ++k)
      for (long p : point_list(points)) {
        Check c;
        c.name = "cube/weight-product/n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = cx->name();
        c.k = k;
        c.point = p;
        c.run = [cx, n, k, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          return outcome_rat(cube_weight_product(n, k, spec), weight_product(*cx, k, spec));
        };
        out.push_back(std::move(c));
      }
    // Closed-form recurrence: tau-hat_k tau-hat_{k-1} = pdet * X_(k-1) with
    // the pdet taken from the predicted spectrum.
    for (int k = 1; k <= n; ++k)
      for (long p : point_list(points)) {
        Check c;
        c.name = "cube/recurrence/n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = cx->name();
        c.k = k;
        c.point = p;
        c.run = [cx, n, k, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          Rat lhs = cube_tau_hat(n, k, spec) * cube_tau_hat(n, k - 1, spec);
          Rat rhs = cube_spectrum(n, k, spec).pdet() * cube_weight_product(n, k - 1, spec);
          return outcome_rat(rhs, lhs);
        };
        out.push_back(std::move(c));
      }
  }
}

void add_spectra_checks(std::vector<Check>& out, const Battery& b, std::uint64_t seed,
                        long points) {
  std::vector<ComplexPtr> prop_battery{b.k3};
  for (const auto& [cx, sizes] : b.colorful)
    if (sizes == std::vector<int>{2, 2} || sizes == std::vector<int>{2, 2, 2})
      prop_battery.push_back(cx);
  prop_battery.push_back(b.cubes[1]);
  prop_battery.push_back(b.cubes[2]);

  for (const ComplexPtr& cx : prop_battery)
    for (int k = 0; k < cx->dim(); ++k)
      for (long p : point_list(points)) {
        Check c1;
        c1.name = "spectra/updown-downup/" + cx->name() + "/k=" + std::to_string(k) +
                  "/p=" + std::to_string(p);
        c1.complex_name = cx->name();
        c1.k = k;
        c1.point = p;
        c1.run = [cx, k, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          return outcome("true", verify_updown_downup_identity(*cx, k, spec) ? "true" : "false");
        };
        out.push_back(std::move(c1));

        Check c2;
        c2.name = "spectra/total-decomposition/" + cx->name() + "/k=" + std::to_string(k) +
                  "/p=" + std::to_string(p);
        c2.complex_name = cx->name();
        c2.k = k;
        c2.point = p;
        c2.run = [cx, k, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          return outcome("true", verify_total_decomposition(*cx, k, spec) ? "true" : "false");
        };
        out.push_back(std::move(c2));
      }

  // Colorful total-Laplacian spectra in closed form.
  for (const auto& [cx, sizes] : b.colorful) {
    if (sizes == std::vector<int>{2, 2, 3} || sizes == std::vector<int>{3, 3}) continue;
    const int r = static_cast<int>(sizes.size());
    for (int k = -1; k <= r - 1; ++k) {
      for (long p : point_list(points)) {
        Check c;
        c.name = "spectra/colorful-total/" + sizes_label(sizes) + "/k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = cx->name();
        c.k = k;
        c.point = p;
        c.run = [cx, k, sizes = sizes, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          UniPoly predicted = colorful_spectrum(k, sizes, spec).char_poly();
          UniPoly computed = char_poly(total_laplacian(*cx, k, spec));
          return outcome(predicted.to_string("L"), computed.to_string("L"));
        };
        out.push_back(std::move(c));
      }
      {
        Check c;
        c.name = "spectra/colorful-size/" + sizes_label(sizes) + "/k=" + std::to_string(k);
        c.complex_name = cx->name();
        c.k = k;
        c.run = [cx, k, sizes = sizes, seed] {
          Specialization spec = battery_point(*cx, seed, 0);
          long mult = colorful_spectrum(k, sizes, spec).total_multiplicity();
          return outcome(std::to_string(cx->f(k)), std::to_string(mult));
        };
        out.push_back(std::move(c));
      }
      for (long p : point_list(points)) {
        Check c;
        c.name = "spectra/join-vs-colorful/" + sizes_label(sizes) + "/k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = cx->name();
        c.k = k;
        c.point = p;
        c.run = [cx, k, sizes = sizes, seed, p] {
          Specialization spec = battery_point(*cx, seed, p);
          // Factor spectra of the edgeless complexes, assembled by the join
          // convolution; must reproduce the one-shot closed form.
          std::vector<FactorSpectra> parts;
          for (int q = 1; q <= static_cast<int>(sizes.size()); ++q) {
            FactorSpectra f;
            SpectrumDescriptor sm1, s0;
            Rat sq(0);
            for (int i = 1; i <= sizes[static_cast<std::size_t>(q - 1)]; ++i)
              sq += spec.value("X[" + std::to_string(q) + "." + std::to_string(i) + "]");
            sm1.add(sq, 1);
            s0.add(sq, 1);
            s0.add(Rat(0), sizes[static_cast<std::size_t>(q - 1)] - 1);
            f.by_dim = {sm1, s0};
            parts.push_back(std::move(f));
          }
          UniPoly via_join = join_spectrum(parts, k).char_poly();
          UniPoly direct = colorful_spectrum(k, sizes, spec).char_poly();
          return outcome(direct.to_string("L"), via_join.to_string("L"));
        };
        out.push_back(std::move(c));
      }
    }
  }

  // Suspension of a complete graph: the worked join example.
  for (int n : {3, 4}) {
    auto susp = std::make_shared<CellComplex>(
        join(simplex_skeleton(n, 1), edgeless_complex(1, 2)));
    auto kn = std::make_shared<CellComplex>(simplex_skeleton(n, 1));
    for (long p : point_list(points)) {
      for (int k = -1; k <= 2; ++k) {
        Check c;
        c.name = "spectra/suspension-total/n=" + std::to_string(n) + "/k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = susp->name();
        c.k = k;
        c.point = p;
        c.run = [susp, n, k, seed, p] {
          Specialization spec = battery_point(*susp, seed, p);
          auto forms = SuspensionForms::eval(n, spec);
          UniPoly predicted = forms.total_spectrum(k).char_poly();
          UniPoly computed = char_poly(total_laplacian(*susp, k, spec));
          return outcome(predicted.to_string("L"), computed.to_string("L"));
        };
        out.push_back(std::move(c));
      }
      for (int k = -1; k <= 1; ++k) {
        Check c;
        c.name = "spectra/complete-graph-total/n=" + std::to_string(n) +
                 "/k=" + std::to_string(k) + "/p=" + std::to_string(p);
        c.complex_name = kn->name();
        c.k = k;
        c.point = p;
        c.run = [susp, kn, n, k, seed, p] {
          Specialization spec = battery_point(*susp, seed, p);
          auto forms = SuspensionForms::eval(n, spec);
          UniPoly predicted = forms.complete_graph_factor()
                                  .by_dim[static_cast<std::size_t>(k + 1)]
                                  .char_poly();
          UniPoly computed = char_poly(total_laplacian(*kn, k, spec));
          return outcome(predicted.to_string("L"), computed.to_string("L"));
        };
        out.push_back(std::move(c));
      }
      {
        Check c;
        c.name = "spectra/suspension-join/n=" + std::to_string(n) + "/p=" + std::to_string(p);
        c.complex_name = susp->name();
        c.point = p;
        c.run = [susp, n, seed, p] {
          Specialization spec = battery_point(*susp, seed, p);
          auto forms = SuspensionForms::eval(n, spec);
          std::vector<FactorSpectra> parts{forms.complete_graph_factor(),
                                           forms.edgeless_factor()};
          long violations = 0;
          for (int k = -1; k <= 2; ++k)
            if (!(join_spectrum(parts, k) == forms.total_spectrum(k))) ++violations;
          return outcome_count(violations);
        };
        out.push_back(std::move(c));
      }
      for (int k = 0; k <= 2; ++k) {
        Check c;
        c.name = "spectra/suspension-pdet/n=" + std::to_string(n) + "/k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = susp->name();
        c.k = k;
        c.point = p;
        c.run = [susp, n, k, seed, p] {
          Specialization spec = battery_point(*susp, seed, p);
          auto forms = SuspensionForms::eval(n, spec);
          return outcome_rat(forms.pi(k), pi_hat(*susp, k, spec));
        };
        out.push_back(std::move(c));
      }
      for (int k = 1; k <= 2; ++k) {
        Check c;
        c.name = "spectra/suspension-tau/n=" + std::to_string(n) + "/k=" + std::to_string(k) +
                 "/p=" + std::to_string(p);
        c.complex_name = susp->name();
        c.k = k;
        c.point = p;
        c.run = [susp, n, k, seed, p] {
          Specialization spec = battery_point(*susp, seed, p);
          auto forms = SuspensionForms::eval(n, spec);
          return outcome_rat(forms.tau(k), tau_hat(*susp, k, spec));
        };
        out.push_back(std::move(c));
      }
    }
  }
}

void add_identity_checks(std::vector<Check>& out, const Battery& b, std::uint64_t seed,
                         long points) {
  // Square-submatrix determinant identity, exhaustive on small graphs.
  for (const auto& [label, maker] : std::vector<std::pair<std::string, std::function<CellComplex()>>>{
           {"K3", [] { return simplex_skeleton(3, 1); }},
           {"K4", [] { return simplex_skeleton(4, 1); }}})
    for (long p : point_list(std::min<long>(points, 2))) {
      Check c;
      c.name = "identities/submatrix-det/" + label + "/p=" + std::to_string(p);
      c.point = p;
      c.run = [maker, seed, p] {
        CellComplex cx = maker();
        Specialization spec = battery_point(cx, seed, p);
        std::size_t r = rank(cx.boundary_matrix(1));
        long violations = 0;
        for_subsets(static_cast<std::size_t>(cx.f(0)), r, [&](const std::vector<std::size_t>& s) {
          for_subsets(static_cast<std::size_t>(cx.f(1)), r, [&](const std::vector<std::size_t>& t) {
            if (!verify_submatrix_determinant(cx, ids_at(cx, 0, s), ids_at(cx, 1, t), spec))
              ++violations;
          });
        });
        return outcome_count(violations);
      };
      out.push_back(std::move(c));
    }

  ComplexPtr octa;
  for (const auto& [cand, sizes] : b.colorful)
    if (sizes == std::vector<int>{2, 2, 2}) octa = cand;
  for (long p : point_list(std::min<long>(points, 2))) {
    Check c;
    c.name = "identities/submatrix-det/octahedron/p=" + std::to_string(p);
    c.point = p;
    c.run = [octa, seed, p] {
      Specialization spec = battery_point(*octa, seed, p);
      std::size_t r = rank(octa->boundary_matrix(2));
      std::uint64_t state = seed ^ 0x5eededULL;
      long violations = 0;
      for (int trial = 0; trial < 50; ++trial) {
        auto s = seeded_subset(static_cast<std::size_t>(octa->f(1)), r, state);
        auto t = seeded_subset(static_cast<std::size_t>(octa->f(2)), r, state);
        if (!verify_submatrix_determinant(*octa, ids_at(*octa, 1, s), ids_at(*octa, 2, t), spec))
          ++violations;
      }
      return outcome_count(violations);
    };
    out.push_back(std::move(c));
  }

  // Weighted Kirchhoff corollary on connected graphs.
  for (const auto& [label, maker] : std::vector<std::pair<std::string, std::function<CellComplex()>>>{
           {"K4", [] { return simplex_skeleton(4, 1); }},
           {"K23", [] { return complete_colorful({{2, 3}}); }},
           {"cube-graph", [] { return hypercube({3}).skeleton(1); }}})
    for (long p : point_list(points)) {
      Check c;
      c.name = "identities/kirchhoff/" + label + "/p=" + std::to_string(p);
      c.point = p;
      c.run = [maker, seed, p] {
        CellComplex cx = maker();
        Specialization spec = battery_point(cx, seed, p);
        return outcome_rat(tau_hat(cx, 1, spec), graph_tau_hat(cx, spec));
      };
      out.push_back(std::move(c));
    }

  // Binet-Cauchy expansion of the top pseudodeterminant.
  for (const auto& [label, maker] : std::vector<std::pair<std::string, std::function<CellComplex()>>>{
           {"K4", [] { return simplex_skeleton(4, 1); }},
           {"K22", [] { return complete_colorful({{2, 2}}); }}})
    for (long p : point_list(std::min<long>(points, 2))) {
      Check c;
      c.name = "identities/binet-cauchy/" + label + "/p=" + std::to_string(p);
      c.point = p;
      c.run = [maker, seed, p] {
        CellComplex cx = maker();
        Specialization spec = battery_point(cx, seed, p);
        const int d = cx.dim();
        IntegerMatrix bd = cx.boundary_matrix(d);
        std::size_t r = rank(bd);
        Rat sum(0);
        const auto& rows_cells = cx.cells(d - 1);
        const auto& cols_cells = cx.cells(d);
        for_subsets(bd.rows(), r, [&](const std::vector<std::size_t>& s) {
          for_subsets(bd.cols(), r, [&](const std::vector<std::size_t>& t) {
            IntegerMatrix minor(r, r);
            for (std::size_t i = 0; i < r; ++i)
              for (std::size_t j = 0; j < r; ++j) minor(i, j) = bd(s[i], t[j]);
            Int det = determinant(minor);
            if (det == 0) return;
            Rat ratio(1);
            for (std::size_t j : t) ratio *= weight_of_cell(cols_cells[j], spec);
            for (std::size_t i : s) ratio /= weight_of_cell(rows_cells[i], spec);
            sum += Rat(det * det) * ratio;
          });
        });
        return outcome_rat(pi_hat(cx, d, spec), sum);
      };
      out.push_back(std::move(c));
    }

  // Binomial-coefficient convention checks.
  {
    Check c;
    c.name = "identities/binomial-doubling-grid";
    c.run = [] {
      long violations = 0;
      for (long n = 0; n <= 12; ++n)
        for (long k = -3; k <= n + 2; ++k)
          if (!binomial_doubling_identity(n, k)) ++violations;
      return outcome_count(violations);
    };
    out.push_back(std::move(c));
  }
  {
    Check c;
    c.name = "identities/binomial-anchors";
    c.run = [] {
      long violations = 0;
      if (binom_ext(-1, 0) != 1) ++violations;
      if (binom_ext(0, -1) != 0) ++violations;
      for (long n = -10; n <= 10; ++n)
        if (binom_ext(n, 1) != n) ++violations;
      return outcome_count(violations);
    };
    out.push_back(std::move(c));
  }
  {
    Check c;
    c.name = "identities/pascal-grid";
    c.run = [] {
      long violations = 0;
      for (long n = -10; n <= 10; ++n)
        for (long k = -10; k <= 10; ++k) {
          bool holds = binom_ext(n, k) == binom_ext(n - 1, k) + binom_ext(n - 1, k - 1);
          bool expected = !(n == 0 && k == 0);
          if (holds != expected) ++violations;
        }
      return outcome_count(violations);
    };
    out.push_back(std::move(c));
  }
}

}  // namespace

std::vector<Check> build_suite(const std::string& suite, std::uint64_t seed, long points) {
  if (points < 0) throw argument_error("points must be nonnegative");
  Battery b = make_battery();
  std::vector<Check> checks;
  bool known = false;
  if (suite == "all" || suite == "cmtt") {
    add_cmtt_checks(checks, b, seed, points);
    known = true;
  }
  if (suite == "all" || suite == "colorful") {
    add_colorful_checks(checks, b, seed, points);
    known = true;
  }
  if (suite == "all" || suite == "cube") {
    add_cube_checks(checks, b, seed, points);
    known = true;
  }
  if (suite == "all" || suite == "spectra") {
    add_spectra_checks(checks, b, seed, points);
    known = true;
  }
  if (suite == "all" || suite == "identities") {
    add_identity_checks(checks, b, seed, points);
    known = true;
  }
  if (!known) throw argument_error("unknown suite '" + suite + "'");
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& c) { return a.name < c.name; });
  return checks;
}

VerificationReport run_suite(const std::string& suite, std::uint64_t seed, long points,
                             unsigned threads) {
  auto started = std::chrono::steady_clock::now();
  std::vector<Check> checks = build_suite(suite, seed, points);

  std::vector<CheckRecord> records(checks.size());
  const auto run_one = [&](std::size_t i) {
    CheckRecord rec;
    rec.name = checks[i].name;
    rec.complex_name = checks[i].complex_name;
    rec.k = checks[i].k;
    rec.point = checks[i].point;
    try {
      CheckOutcome o = checks[i].run();
      rec.expected = std::move(o.expected);
      rec.actual = std::move(o.actual);
      rec.pass = o.pass;
    } catch (const std::exception& e) {
      rec.expected = "no exception";
      rec.actual = std::string("exception: ") + e.what();
      rec.pass = false;
    }
    records[i] = std::move(rec);
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= checks.size()) break;
          run_one(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.suite = suite;
  report.seed = seed;
  report.points = points;
  report.checks = std::move(records);  // already in stable key order
  for (const CheckRecord& r : report.checks) (r.pass ? report.passed : report.failed)++;
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& r : report.checks) {
    nlohmann::json jc = nlohmann::json::object();
    jc["name"] = r.name;
    jc["complex"] = r.complex_name;
    if (r.k)
      jc["k"] = *r.k;
    else
      jc["k"] = nullptr;
    if (r.point)
      jc["point"] = *r.point;
    else
      jc["point"] = nullptr;
    jc["expected"] = r.expected;
    jc["actual"] = r.actual;
    jc["pass"] = r.pass;
    checks.push_back(jc);
  }
  nlohmann::json results = nlohmann::json::object();
  results["suite"] = report.suite;
  results["seed"] = report.seed;
  results["points"] = report.points;
  results["checks"] = checks;
  results["summary"] = {{"passed", report.passed},
                        {"failed", report.failed},
                        {"total", report.passed + report.failed}};
  nlohmann::json doc = nlohmann::json::object();
  doc["results"] = results;
  doc["timing"] = {{"wall_ms", report.wall_ms}};
  return doc.dump();
}

}  // namespace celltrees
