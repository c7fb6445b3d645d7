#include "celltrees/closed_forms.hpp"

#include <limits>
#include <string>

#include "celltrees/errors.hpp"

namespace celltrees {

namespace {

long long to_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw argument_error("exponent out of range");
  return static_cast<long long>(x);
}

Rat as_integer_checked(const Rat& x, const char* what) {
  if (rat_den(x) != 1) throw invariant_violation(std::string(what) + " is not an integer");
  return x;
}

std::string color_var(int q, int i) {
  return "X[" + std::to_string(q) + "." + std::to_string(i) + "]";
}

std::vector<Rat> colorful_sums(const std::vector<int>& sizes, const Specialization& spec) {
  std::vector<Rat> s;
  for (int q = 1; q <= static_cast<int>(sizes.size()); ++q) {
    Rat acc(0);
    for (int i = 1; i <= sizes[static_cast<std::size_t>(q - 1)]; ++i)
      acc += spec.value(color_var(q, i));
    s.push_back(acc);
  }
  return s;
}

std::vector<Rat> colorful_products(const std::vector<int>& sizes, const Specialization& spec) {
  std::vector<Rat> p;
  for (int q = 1; q <= static_cast<int>(sizes.size()); ++q) {
    Rat acc(1);
    for (int i = 1; i <= sizes[static_cast<std::size_t>(q - 1)]; ++i)
      acc *= spec.value(color_var(q, i));
    p.push_back(acc);
  }
  return p;
}

void check_sizes(const std::vector<int>& sizes) {
  if (sizes.empty()) throw argument_error("at least one color class required");
  for (int n : sizes)
    if (n < 1) throw argument_error("color class sizes must be positive");
}

std::string cube_var(char kind, int i) {
  return std::string(1, kind) + "[" + std::to_string(i) + "]";
}

}  // namespace

Int binom_ext(long n, long k) {
  if (k > 0) {
    Int num(1);
    for (long i = 0; i < k; ++i) num *= Int(n - i);
    Int den(1);
    for (long i = 2; i <= k; ++i) den *= Int(i);
    return num / den;  // falling factorial is divisible by k!
  }
  if (n == k || k == 0) return Int(1);
  return binom_ext(n + 1, k + 1) - binom_ext(n, k + 1);
}

Int e_kq(int k, int q, const std::vector<int>& sizes) {
  check_sizes(sizes);
  const int r = static_cast<int>(sizes.size());
  if (q < 1 || q > r) throw argument_error("color index out of range");
  std::vector<int> others;
  for (int t = 1; t <= r; ++t)
    if (t != q) others.push_back(sizes[static_cast<std::size_t>(t - 1)]);
  Int total(0);
  const int m = static_cast<int>(others.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int j = __builtin_popcount(mask);
    if (j > k - 1) continue;
    Int prod(1);
    for (int t = 0; t < m; ++t)
      if (mask & (1u << t)) prod *= others[static_cast<std::size_t>(t)];
    total += ((k - 1 - j) % 2 == 0) ? prod : -prod;
  }
  return total;
}

Int kalai_tau(int n, int d) {
  if (d < 1 || d > n - 1) throw argument_error("need 1 <= d <= n-1");
  return int_pow(Int(n), static_cast<unsigned long long>(to_ll(binom_ext(n - 2, d))));
}

Rat kalai_tau_hat(int n, int d, const Specialization& spec) {
  if (d < 1 || d > n - 1) throw argument_error("need 1 <= d <= n-1");
  Rat prod(1), sum(0);
  for (int i = 1; i <= n; ++i) {
    const Rat& x = spec.value("v[" + std::to_string(i) + "]");
    prod *= x;
    sum += x;
  }
  return rat_pow(prod, to_ll(binom_ext(n - 2, d - 1))) * rat_pow(sum, to_ll(binom_ext(n - 2, d)));
}

Int adin_tau(int k, const std::vector<int>& sizes) {
  check_sizes(sizes);
  const int r = static_cast<int>(sizes.size());
  if (k < 0 || k > r - 1) throw argument_error("need 0 <= k <= r-1");
  Rat result(1);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    int j = __builtin_popcount(mask);
    if (j > k) continue;
    Int outside(0), ones(1);
    for (int q = 0; q < r; ++q) {
      if (mask & (1u << q))
        ones *= Int(sizes[static_cast<std::size_t>(q)] - 1);
      else
        outside += sizes[static_cast<std::size_t>(q)];
    }
    Int expo = binom_ext(r - 2 - j, k - j) * ones;
    result *= rat_pow(Rat(outside), to_ll(expo));
  }
  return rat_num(as_integer_checked(result, "colorful unweighted count"));
}

Rat colorful_tau_hat(int k, const std::vector<int>& sizes, const Specialization& spec) {
  check_sizes(sizes);
  const int r = static_cast<int>(sizes.size());
  if (k < 0 || k > r - 1) throw argument_error("need 0 <= k <= r-1");
  std::vector<Rat> s = colorful_sums(sizes, spec);
  std::vector<Rat> p = colorful_products(sizes, spec);

  Rat a(1);
  for (int q = 1; q <= r; ++q)
    a *= rat_pow(p[static_cast<std::size_t>(q - 1)], to_ll(e_kq(k, q, sizes)));

  Rat b(1);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    int j = __builtin_popcount(mask);
    if (j > k) continue;
    Rat lambda(0);
    Int ones(1);
    for (int q = 0; q < r; ++q) {
      if (mask & (1u << q))
        ones *= Int(sizes[static_cast<std::size_t>(q)] - 1);
      else
        lambda += s[static_cast<std::size_t>(q)];
    }
    Int expo = binom_ext(r - 2 - j, k - j) * ones;
    b *= rat_pow(lambda, to_ll(expo));
  }
  return a * b;
}

Rat clark_tau_hat(const std::vector<int>& sizes, const Specialization& spec) {
  check_sizes(sizes);
  const int r = static_cast<int>(sizes.size());
  if (r < 2) throw argument_error("need at least two color classes");
  std::vector<Rat> s = colorful_sums(sizes, spec);
  std::vector<Rat> p = colorful_products(sizes, spec);
  Rat all_p(1), all_s(0);
  for (int q = 0; q < r; ++q) {
    all_p *= p[static_cast<std::size_t>(q)];
    all_s += s[static_cast<std::size_t>(q)];
  }
  Rat result = all_p * rat_pow(all_s, r - 2);
  for (int t = 0; t < r; ++t)
    result *= rat_pow(all_s - s[static_cast<std::size_t>(t)],
                      sizes[static_cast<std::size_t>(t)] - 1);
  return result;
}

Int austin_tau(const std::vector<int>& sizes) {
  check_sizes(sizes);
  const int r = static_cast<int>(sizes.size());
  if (r < 2) throw argument_error("need at least two color classes");
  Int n(0);
  for (int nq : sizes) n += nq;
  Rat result = rat_pow(Rat(n), r - 2);
  for (int nq : sizes) result *= rat_pow(Rat(n - nq), nq - 1);
  return rat_num(as_integer_checked(result, "multipartite count"));
}

Rat colorful_top_tau_hat(const std::vector<int>& sizes, const Specialization& spec) {
  check_sizes(sizes);
  const int r = static_cast<int>(sizes.size());
  std::vector<Rat> s = colorful_sums(sizes, spec);
  std::vector<Rat> p = colorful_products(sizes, spec);
  Rat result(1);
  for (int q = 0; q < r; ++q) {
    Int full(1), dec(1);
    for (int i = 0; i < r; ++i) {
      if (i == q) continue;
      full *= Int(sizes[static_cast<std::size_t>(i)]);
      dec *= Int(sizes[static_cast<std::size_t>(i)] - 1);
    }
    result *= rat_pow(p[static_cast<std::size_t>(q)], to_ll(full - dec));
    result *= rat_pow(s[static_cast<std::size_t>(q)], to_ll(dec));
  }
  return result;
}

SpectrumDescriptor colorful_spectrum(int k, const std::vector<int>& sizes,
                                     const Specialization& spec) {
  check_sizes(sizes);
  const int r = static_cast<int>(sizes.size());
  if (k < -1 || k > r - 1) throw argument_error("need -1 <= k <= r-1");
  std::vector<Rat> s = colorful_sums(sizes, spec);
  SpectrumDescriptor out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    int j = __builtin_popcount(mask);
    if (j > k + 1) continue;
    Rat lambda(0);
    Int ones(1);
    for (int q = 0; q < r; ++q) {
      if (mask & (1u << q))
        ones *= Int(sizes[static_cast<std::size_t>(q)] - 1);
      else
        lambda += s[static_cast<std::size_t>(q)];
    }
    Int mult = binom_ext(r - j, k + 1 - j) * ones;
    out.add(lambda, static_cast<long>(to_ll(mult)));
  }
  return out;
}

SpectrumDescriptor join_spectrum(const std::vector<FactorSpectra>& parts, int k) {
  const int r = static_cast<int>(parts.size());
  if (r == 0) throw argument_error("join of zero factors");
  for (const FactorSpectra& f : parts)
    if (f.by_dim.empty())
      throw argument_error("factor without spectra (need degrees -1..dim)");

  SpectrumDescriptor out;
  const int budget = k - r + 1;  // sum of the factor degrees
  // Depth-first over degree tuples (k_1, ..., k_r) with k_q in [-1, dim_q].
  std::vector<int> degree(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int q, int remaining, const Rat& value_sum, long mult) -> void {
    if (q == r) {
      if (remaining == 0) out.add(value_sum, mult);
      return;
    }
    // Remaining factors can contribute between -1 and dim each.
    int left = r - q - 1;
    for (int kq = -1; kq <= parts[static_cast<std::size_t>(q)].dim(); ++kq) {
      int rest = remaining - kq;
      // Feasibility window for the rest of the tuple.
      int lo = -left, hi = 0;
      for (int t = q + 1; t < r; ++t) hi += parts[static_cast<std::size_t>(t)].dim();
      if (rest < lo || rest > hi) continue;
      const SpectrumDescriptor& sd =
          parts[static_cast<std::size_t>(q)].by_dim[static_cast<std::size_t>(kq + 1)];
      for (const auto& [v, m] : sd.entries())
        self(self, q + 1, rest, value_sum + v, mult * m);
    }
  };
  rec(rec, 0, budget, Rat(0), 1);
  return out;
}

Rat cube_tau_hat(int n, int k, const Specialization& spec) {
  if (n < 0 || k < 0 || k > n) throw argument_error("need n >= k >= 0");
  Rat q_all(1);
  for (int i = 1; i <= n; ++i) q_all *= spec.value(cube_var('q', i));
  Int a_exp(0);
  for (int i = k - 1; i <= n - 1; ++i) a_exp += binom_ext(n - 1, i) * binom_ext(i - 1, k - 2);
  Rat result = rat_pow(q_all, to_ll(a_exp));

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= k) continue;
    Rat base(0);
    for (int i = 1; i <= n; ++i) {
      if (!(mask & (1u << (i - 1)))) continue;
      Rat term = spec.value(cube_var('q', i)) *
                 (spec.value(cube_var('y', i)) + spec.value(cube_var('z', i)));
      for (int j = 1; j <= n; ++j) {
        if (j == i || !(mask & (1u << (j - 1)))) continue;
        term *= spec.value(cube_var('y', j)) * spec.value(cube_var('z', j));
      }
      base += term;
    }
    result *= rat_pow(base, to_ll(binom_ext(size - 2, k - 1)));
  }
  return result;
}

SpectrumDescriptor cube_spectrum(int n, int k, const Specialization& spec) {
  if (k < 1 || k > n) throw argument_error("need 1 <= k <= n");
  SpectrumDescriptor out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < k) continue;
    Rat u(0);
    for (int i = 1; i <= n; ++i) {
      if (!(mask & (1u << (i - 1)))) continue;
      u += spec.value(cube_var('q', i)) * (Rat(1) / spec.value(cube_var('y', i)) +
                                           Rat(1) / spec.value(cube_var('z', i)));
    }
    out.add(u, static_cast<long>(to_ll(binom_ext(size - 1, k - 1))));
  }
  return out;
}

Rat cube_weight_product(int n, int k, const Specialization& spec) {
  if (n < 0) throw argument_error("need n >= 0");
  Rat q_all(1), yz_all(1);
  for (int i = 1; i <= n; ++i) {
    q_all *= spec.value(cube_var('q', i));
    yz_all *= spec.value(cube_var('y', i)) * spec.value(cube_var('z', i));
  }
  Rat q_exp = Rat(binom_ext(n - 1, k - 1)) * rat_pow(Rat(2), n - k);
  Rat yz_exp = Rat(binom_ext(n - 1, k)) * rat_pow(Rat(2), n - k - 1);
  as_integer_checked(q_exp, "cube weight-product exponent");
  as_integer_checked(yz_exp, "cube weight-product exponent");
  return rat_pow(q_all, to_ll(rat_num(q_exp))) * rat_pow(yz_all, to_ll(rat_num(yz_exp)));
}

bool binomial_doubling_identity(long n_upper, long k_lower) {
  if (n_upper < 0) throw argument_error("need N >= 0");
  Int lhs(0);
  for (long i = k_lower; i <= n_upper; ++i)
    lhs += binom_ext(i, k_lower) * binom_ext(n_upper, i);
  Rat rhs = Rat(binom_ext(n_upper, k_lower)) * rat_pow(Rat(2), n_upper - k_lower);
  return Rat(lhs) == rhs;
}

}  // namespace celltrees
