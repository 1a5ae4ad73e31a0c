#pragma once

#include <cassert>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnf/graph.hpp"
#include "lnf/predicates.hpp"

namespace lnf {

// Exact rational with normalized sign and gcd; all comparisons
// cross-multiply, no floating point anywhere.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  static Rational integer(long long v) { return Rational(v, 1); }

  bool is_integer() const noexcept { return den == 1; }

  Rational operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>(const Rational& a, long long v) {
  return a.num > v * a.den;
}
inline bool operator<(const Rational& a, long long v) {
  return a.num < v * a.den;
}
inline bool operator==(const Rational& a, long long v) {
  return a.den == 1 && a.num == v;
}

// n = 8k + r with 0 <= r <= 7, defined for n >= 8.
struct ResidueDecomposition {
  long long n = 0;
  long long k = 0;
  int r = 0;
};

inline ResidueDecomposition decompose(long long n) {
  if (n < 8) throw std::domain_error("order below 8");
  return {n, n / 8, static_cast<int>(n % 8)};
}

// Minimum size of a 3-connected locally nonforesty graph of order n >= 8,
// floor form: 2n - floor(n/8), plus 1 unless n = 0, 4, 7 (mod 8).
inline long long extremal_size_floor_form(long long n) {
  if (n < 8) throw std::domain_error("extremal size defined for n >= 8");
  long long r = n % 8;
  long long v = 2 * n - n / 8;
  if (r != 0 && r != 4 && r != 7) v += 1;
  return v;
}

// Same value in residue form: 15k + 2r, plus 1 unless r = 0, 4, 7.
inline long long extremal_size_residue_form(long long n) {
  auto [nn, k, r] = decompose(n);
  long long v = 15 * k + 2 * r;
  if (r != 0 && r != 4 && r != 7) v += 1;
  return v;
}

inline long long extremal_size(long long n) {
  long long v = extremal_size_floor_form(n);
  assert(v == extremal_size_residue_form(n));
  return v;
}

// The conjectured (and refuted) lower bound 7(n-1)/3.
inline Rational conjectured_bound(long long n) {
  if (n < 1) throw std::domain_error("order below 1");
  return Rational(7 * (n - 1), 3);
}

// max(ceil(2n - s/2), ceil(3(n+s)/2)) where s counts degree-3 vertices.
inline long long phi(long long n, long long s) {
  if (s < 1 || s > n) throw std::invalid_argument("s must be in 1..n");
  long long a = 2 * n - s / 2;
  long long b = (3 * (n + s) + 1) / 2;
  return a > b ? a : b;
}

struct PhiMin {
  long long value = 0;
  std::vector<long long> argmins;
};

// Plain scan over s in 1..n; the analytic argmins are test expectations.
inline PhiMin phi_min(long long n) {
  if (n < 8) throw std::domain_error("order below 8");
  PhiMin out;
  for (long long s = 1; s <= n; ++s) {
    long long v = phi(n, s);
    if (out.argmins.empty() || v < out.value) {
      out.value = v;
      out.argmins = {s};
    } else if (v == out.value) {
      out.argmins.push_back(s);
    }
  }
  return out;
}

// Partition of V by the proof's degree classification: the degree-3
// vertices, their neighborhood, and the rest, with the neighborhood
// bucketed by the number of degree-3 neighbors.
struct DegreeClassification {
  VertexSet deg3;                          // vertices of degree exactly 3
  VertexSet deg3_neighbors;                // N(deg3), excluding deg3 itself
  VertexSet rest;                          // everything else
  std::vector<VertexSet> by_deg3_count;    // [i] = neighbors with i deg-3 neighbors
  long long deg3_count = 0;
  bool deg3_independent = false;
};

inline DegreeClassification classify_degrees(const Graph& g) {
  const int n = g.order();
  DegreeClassification out;
  Bitset in_deg3(n == 0 ? 1 : n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 3) {
      out.deg3.push_back(v);
      in_deg3.set(v);
    }
  out.deg3_count = static_cast<long long>(out.deg3.size());
  out.deg3_independent = true;
  for (int v : out.deg3)
    if (g.row(v).intersects(in_deg3)) out.deg3_independent = false;
  int max_bucket = 0;
  std::vector<int> bucket_of(n, 0);
  for (int v = 0; v < n; ++v) {
    if (in_deg3.test(v)) continue;
    int i = g.row(v).intersection_count(in_deg3);
    bucket_of[v] = i;
    if (i > 0) {
      out.deg3_neighbors.push_back(v);
      max_bucket = std::max(max_bucket, i);
    } else {
      out.rest.push_back(v);
    }
  }
  out.by_deg3_count.assign(max_bucket + 1, {});
  for (int v : out.deg3_neighbors) out.by_deg3_count[bucket_of[v]].push_back(v);
  return out;
}

// Certified size lower bound for a 3-connected locally nonforesty graph,
// mirroring the case split: minimum degree >= 4 gives 2n; a neighborhood
// vertex u with deg(u) = i+2 forces the triangle-join graph (bound 3n-6);
// otherwise the two degree-sum bounds apply and the bound is phi(s).
struct LowerBoundCertificate {
  enum class Branch { min_degree_4, triangle_join, degree_split };
  bool refused = false;
  std::string refusal_reason;
  Branch branch = Branch::degree_split;
  long long bound = 0;
  bool holds = false;
  long long deg3_count = 0;
  long long edges = 0;
};

inline const char* to_string(LowerBoundCertificate::Branch b) {
  switch (b) {
    case LowerBoundCertificate::Branch::min_degree_4: return "min-degree-4";
    case LowerBoundCertificate::Branch::triangle_join: return "triangle-join";
    case LowerBoundCertificate::Branch::degree_split: return "degree-split";
  }
  return "?";
}

inline LowerBoundCertificate lower_bound_certificate(const Graph& g) {
  LowerBoundCertificate cert;
  cert.edges = g.size();
  if (g.order() == 0 || !is_k_connected(g, 3).value) {
    cert.refused = true;
    cert.refusal_reason = "graph is not 3-connected";
    return cert;
  }
  if (!is_locally_nonforesty(g).value) {
    cert.refused = true;
    cert.refusal_reason = "graph is not locally nonforesty";
    return cert;
  }
  const long long n = g.order();
  if (min_degree(g) >= 4) {
    cert.branch = LowerBoundCertificate::Branch::min_degree_4;
    cert.bound = 2 * n;
    cert.holds = g.size() >= cert.bound;
    return cert;
  }
  DegreeClassification cls = classify_degrees(g);
  cert.deg3_count = cls.deg3_count;
  for (std::size_t i = 1; i < cls.by_deg3_count.size(); ++i)
    for (int u : cls.by_deg3_count[i])
      if (g.degree(u) == static_cast<int>(i) + 2) {
        cert.branch = LowerBoundCertificate::Branch::triangle_join;
        cert.bound = 3 * n - 6;
        cert.holds = g.size() >= cert.bound;
        return cert;
      }
  cert.branch = LowerBoundCertificate::Branch::degree_split;
  cert.bound = phi(n, cls.deg3_count);
  cert.holds = g.size() >= cert.bound;
  return cert;
}

}  // namespace lnf
