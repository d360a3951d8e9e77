// Copyright 2026 The strgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Closed-form size targets and the certified edge-density bound for graphs
/// without a balanced biclique K_{t,t}.
///
/// All logarithms are base 2.

#ifndef STRGRAPH_BOUNDS_HPP
#define STRGRAPH_BOUNDS_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strgraph/separators.hpp"

namespace strgraph {

/// Density below which the independent-set recursion splits along a separator:
/// (4 d log^2 n)^-2.
inline double separator_density_threshold(std::size_t n, const ParamSet& params) {
  const double log_n = std::log2(static_cast<double>(n));
  const double root = 4.0 * params.d * log_n * log_n;
  return 1.0 / (root * root);
}

/// Guaranteed independent-set size n (log n)^(-C log t) for K_t-free string graphs.
inline std::optional<double> independence_target(std::size_t n, std::size_t t,
                                                 const ParamSet& params) {
  if (n < 3 || t < 2) return std::nullopt;
  const double log_n = std::log2(static_cast<double>(n));
  return static_cast<double>(n) *
         std::pow(log_n, -params.C * std::log2(static_cast<double>(t)));
}

/// Colour budget 4 (log n)^(C log t + 1) of the repeated-extraction colouring.
inline std::optional<double> coloring_bound(std::size_t n, std::size_t t,
                                            const ParamSet& params) {
  if (n < 3 || t < 2) return std::nullopt;
  const double log_n = std::log2(static_cast<double>(n));
  return 4.0 * std::pow(log_n, params.C * std::log2(static_cast<double>(t)) + 1.0);
}

/// Edge budget 3 n (2 log n)^(C log t) for t-quasi-planar drawings on n > 2 vertices.
inline std::optional<double> quasi_planar_edge_bound(std::size_t n, std::size_t t,
                                                     const ParamSet& params) {
  if (n < 3 || t < 2) return std::nullopt;
  const double log_n = std::log2(static_cast<double>(n));
  return 3.0 * static_cast<double>(n) *
         std::pow(2.0 * log_n, params.C * std::log2(static_cast<double>(t)));
}

/// Balanced-biclique side eps^b n / log n guaranteed in a string graph with
/// eps n^2 edges.
inline double biclique_size_target(std::size_t n, std::size_t m, const ParamSet& params) {
  if (n < 3) throw std::invalid_argument("biclique target needs n >= 3");
  if (m < 1) throw std::invalid_argument("biclique target needs m >= 1");
  const auto nn = static_cast<double>(n);
  const double eps = static_cast<double>(m) / (nn * nn);
  return std::pow(eps, params.b) * nn / std::log2(nn);
}

/// t (log t)^c n, the shape of the edge bound for K_{t,t}-free string graphs,
/// with the exponent c left to the caller.
inline double biclique_free_edge_estimate(std::size_t n, std::size_t t, double c) {
  const auto tt = static_cast<double>(t);
  return tt * std::pow(std::log2(tt), c) * static_cast<double>(n);
}

/// Two-sided enclosure of an infinite product prod_i (1 + phi_i).
struct ProductBracket {
  double lower = 1.0;     ///< product of the evaluated factors
  double upper = 1.0;     ///< lower * exp(certified bound on the remaining sum)
  double tail_sum = 0.0;  ///< bound on sum_{i >= terms} phi_i
  std::size_t terms = 0;  ///< number of factors multiplied explicitly
};

/// Multiplies factors (1 + phi(i)) until phi(i) < cutoff.
///
/// `ratio_bound(i)` must bound phi(j + 1) / phi(j) from above for every
/// j >= i and be below 1; the remaining factors are then enclosed by
/// exp(phi(i) / (1 - ratio_bound(i))).
inline ProductBracket certified_product(const std::function<double(std::size_t)>& phi,
                                        const std::function<double(std::size_t)>& ratio_bound,
                                        double cutoff = 1e-12,
                                        std::size_t max_terms = 1'000'000) {
  ProductBracket out;
  for (std::size_t i = 0;; ++i) {
    const double value = phi(i);
    if (!(value >= 0.0)) throw std::domain_error("product term is negative or NaN");
    if (value < cutoff) {
      const double r = ratio_bound(i);
      if (!(r < 1.0)) throw std::domain_error("tail ratio bound is not below 1");
      out.terms = i;
      out.tail_sum = value / (1.0 - r);
      out.upper = out.lower * std::exp(out.tail_sum);
      return out;
    }
    if (i >= max_terms) throw std::domain_error("product did not reach the cutoff");
    out.lower *= 1.0 + value;
  }
}

/// Everything derived from (t, d, b) in the edge-density argument.
///
/// phi(n) = 2 d t^(1/2b) (log n)^(1 + 1/2b) n^(-1/2b) is the separator
/// fraction, n0 = x t (log t)^a with x = (2^8 d b)^(16 b) and a = 8 b is the
/// threshold, and every graph without K_{t,t} has fewer than q n0 / 2 edges
/// per vertex where q = prod_i (1 + phi((4/3)^i n0)). Huge quantities are
/// kept as base-2 logarithms next to their (possibly infinite) values.
struct EdgeBoundCertificate {
  std::size_t t = 0;
  double d = 1.0;
  double b = 1.0;
  double a = 0.0;
  double log2_x = 0.0;
  double x = 0.0;
  double log2_n0 = 0.0;
  double n0 = 0.0;
  double phi_n0 = 0.0;
  double ratio_n0 = 0.0;        ///< phi((4/3) n0) / phi(n0)
  double ratio_limit = 0.0;     ///< 1 - 1/(12 b)
  ProductBracket q;
  double q_limit = 0.0;         ///< e^b
  double log2_bound_per_vertex = 0.0;
  double bound_per_vertex = 0.0;  ///< q.upper * n0 / 2

  bool monotone_ok = false;  ///< n0 >= e^(2b+1), where phi starts decreasing
  bool phi_ok = false;       ///< phi(n0) <= 1/12
  bool ratio_ok = false;     ///< ratio_n0 <= 1 - 1/(12 b)
  bool q_ok = false;         ///< q.upper <= e^b

  bool hypotheses_hold() const { return monotone_ok && phi_ok && ratio_ok && q_ok; }

  /// phi at n = 2^log2_n.
  double phi_at_log2(double log2_n) const {
    const double e = 1.0 / (2.0 * b);
    return 2.0 * d * std::pow(static_cast<double>(t), e) * std::pow(log2_n, 1.0 + e) *
           std::exp2(-log2_n * e);
  }

  double phi(double n) const { return phi_at_log2(std::log2(n)); }

  std::vector<std::string> failed_checks() const {
    std::vector<std::string> out;
    if (!monotone_ok) out.emplace_back("n0 < e^(2b+1)");
    if (!phi_ok) out.emplace_back("phi(n0) > 1/12");
    if (!ratio_ok) out.emplace_back("phi(4n0/3)/phi(n0) > 1 - 1/(12b)");
    if (!q_ok) out.emplace_back("q > e^b");
    return out;
  }
};

/// Thrown when (t, d, b) do not satisfy the hypotheses of the edge bound.
class BoundHypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluates the edge-density bound and records each hypothesis check.
inline EdgeBoundCertificate evaluate_edge_bound(std::size_t t, const ParamSet& params) {
  if (t < 2) throw std::invalid_argument("edge bound needs t >= 2");
  params.validate();
  EdgeBoundCertificate c;
  c.t = t;
  c.d = params.d;
  c.b = params.b;
  c.a = 8.0 * params.b;
  c.log2_x = 16.0 * params.b * (8.0 + std::log2(params.d * params.b));
  c.x = std::exp2(c.log2_x);
  const double log_t = std::log2(static_cast<double>(t));
  c.log2_n0 = c.log2_x + log_t + c.a * std::log2(log_t);
  c.n0 = std::exp2(c.log2_n0);

  const double step = std::log2(4.0 / 3.0);
  c.phi_n0 = c.phi_at_log2(c.log2_n0);
  c.ratio_n0 = c.phi_at_log2(c.log2_n0 + step) / c.phi_n0;
  c.ratio_limit = 1.0 - 1.0 / (12.0 * params.b);
  c.q_limit = std::exp(params.b);

  c.monotone_ok = c.log2_n0 * std::log(2.0) >= 2.0 * params.b + 1.0;
  c.phi_ok = c.phi_n0 <= 1.0 / 12.0;
  c.ratio_ok = c.ratio_n0 <= c.ratio_limit;

  if (c.monotone_ok && c.ratio_n0 < 1.0) {
    // phi(4n/3)/phi(n) decreases in n beyond n0, so the ratio at step i
    // bounds every later ratio.
    c.q = certified_product(
        [&](std::size_t i) { return c.phi_at_log2(c.log2_n0 + step * static_cast<double>(i)); },
        [&](std::size_t i) {
          const double l = c.log2_n0 + step * static_cast<double>(i);
          return c.phi_at_log2(l + step) / c.phi_at_log2(l);
        });
    c.q_ok = c.q.upper <= c.q_limit;
  } else {
    c.q.lower = c.q.upper = std::numeric_limits<double>::infinity();
  }
  c.log2_bound_per_vertex = std::log2(c.q.upper) + c.log2_n0 - 1.0;
  c.bound_per_vertex = std::exp2(c.log2_bound_per_vertex);
  return c;
}

/// evaluate_edge_bound, throwing BoundHypothesisError if any check fails.
inline EdgeBoundCertificate certified_edge_bound(std::size_t t, const ParamSet& params) {
  auto c = evaluate_edge_bound(t, params);
  if (!c.hypotheses_hold()) {
    std::string what = "edge bound hypotheses fail for t=" + std::to_string(t) + ":";
    for (const auto& f : c.failed_checks()) what += " [" + f + "]";
    throw BoundHypothesisError(what);
  }
  return c;
}

}  // namespace strgraph

#endif  // STRGRAPH_BOUNDS_HPP
