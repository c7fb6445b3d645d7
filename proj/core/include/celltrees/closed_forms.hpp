#pragma once

#include <vector>

#include "celltrees/spectrum.hpp"
#include "celltrees/weights.hpp"

namespace celltrees {

/// Binomial coefficient extended to all integer pairs:
///   falling factorial / k!          for k > 0,
///   1                               for n = k or k = 0,
///   C(n+1, k+1) - C(n, k+1)         otherwise (k < 0, recursing upward).
/// Satisfies the Pascal recurrence everywhere except (n, k) = (0, 0).
Int binom_ext(long n, long k);

/// Alternating partial sum over subsets J of the colors other than q with
/// |J| <= k-1 of (-1)^(k-1-|J|) * prod_{t in J} n_t; the exponent of P_q in
/// the colorful weighted count. q is 1-based.
Int e_kq(int k, int q, const std::vector<int>& sizes);

/// n^C(n-2, d): trees in the d-skeleton of the n-vertex simplex.
Int kalai_tau(int n, int d);

/// (X_1...X_n)^C(n-2, d-1) * (X_1+...+X_n)^C(n-2, d), vertex variables v[i].
Rat kalai_tau_hat(int n, int d, const Specialization& spec);

/// Unweighted tree count of the k-skeleton of the complete colorful complex:
/// product over D subset of [r], |D| <= k, of
///   (sum_{q not in D} n_q)^(C(r-2-|D|, k-|D|) * prod_{t in D}(n_t - 1)).
Int adin_tau(int k, const std::vector<int>& sizes);

/// Weighted colorful count A_k * B_k with A_k = prod_q P_q^E_{k,q} and
/// B_k = prod_{J, |J| <= k} (sum_{q not in J} S_q)^(C(r-2-|J|, k-|J|) *
/// prod_{t in J}(n_t - 1)); S_q / P_q are the sum / product of the vertex
/// values X[q.i] in color class q.
Rat colorful_tau_hat(int k, const std::vector<int>& sizes, const Specialization& spec);

/// The k = 1 case in closed multipartite-graph form.
Rat clark_tau_hat(const std::vector<int>& sizes, const Specialization& spec);

/// Unweighted multipartite graph count n^(r-2) * prod_t (n - n_t)^(n_t - 1).
Int austin_tau(const std::vector<int>& sizes);

/// The top case k = r-1 in closed form:
/// prod_q P_q^(prod_{i != q} n_i - prod_{i != q}(n_i - 1)) *
///        S_q^(prod_{i != q}(n_i - 1)).
Rat colorful_top_tau_hat(const std::vector<int>& sizes, const Specialization& spec);

/// Full predicted spectrum of the degree-k weighted total Laplacian of the
/// complete colorful complex: eigenvalue sum_{q not in J} S_q with
/// multiplicity C(r-|J|, k+1-|J|) * prod_{t in J}(n_t - 1) over J with
/// |J| <= k+1. Total multiplicity equals f_k.
SpectrumDescriptor colorful_spectrum(int k, const std::vector<int>& sizes,
                                     const Specialization& spec);

/// Complete total-Laplacian spectra of one join factor, indexed by dimension
/// starting at -1 (so by_dim[0] describes degree -1).
struct FactorSpectra {
  std::vector<SpectrumDescriptor> by_dim;
  int dim() const { return static_cast<int>(by_dim.size()) - 2; }
};

/// Total-Laplacian spectrum of a join in degree k: all sums
/// lambda_1 + ... + lambda_r with lambda_q drawn from factor q in degree k_q
/// and sum k_q = k - r + 1, multiplicities multiplied.
SpectrumDescriptor join_spectrum(const std::vector<FactorSpectra>& parts, int k);

/// Weighted tree count of the k-skeleton of the n-cube (variables q[i],
/// y[i], z[i]):
///   q_[n]^(sum_{i=k-1}^{n-1} C(n-1,i) C(i-1,k-2)) *
///   prod_{S subset of [n], |S| > k}
///     (sum_{i in S} q_i (y_i + z_i) prod_{j in S, j != i} y_j z_j)^C(|S|-2, k-1).
Rat cube_tau_hat(int n, int k, const Specialization& spec);

/// Nonzero spectrum of the degree-(k-1) up-down weighted Laplacian of the
/// n-cube: u_S = sum_{i in S} q_i (1/y_i + 1/z_i) with multiplicity
/// C(|S|-1, k-1) over S with |S| >= k. 1 <= k <= n.
SpectrumDescriptor cube_spectrum(int n, int k, const Specialization& spec);

/// Closed form for the product of all k-cell weights of the n-cube:
/// q_[n]^(C(n-1,k-1) 2^(n-k)) * (y_[n] z_[n])^(C(n-1,k) 2^(n-k-1)).
Rat cube_weight_product(int n, int k, const Specialization& spec);

/// sum_{i=K}^{N} C(i,K) C(N,i) == C(N,K) 2^(N-K), evaluated literally with
/// the extended binomial (both sides vanish for K < 0). Requires N >= 0.
bool binomial_doubling_identity(long n_upper, long k_lower);

}  // namespace celltrees
