#pragma once

// Brute-force reference computations for the test suites. None of these
// call into the code paths they are used to check.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "mvstate/geometry.hpp"

namespace mvstate::oracle {

/// Number of m in N^n with sum k_i m_i = t (coin-change counting).
inline std::uint64_t count_weighted_compositions(const IntVector& k, Integer t) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(t) + 1, 0);
  ways[0] = 1;
  for (Integer ki : k)
    for (Integer s = ki; s <= t; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - ki)];
  return ways[static_cast<std::size_t>(t)];
}

/// States A -> N correspond to one weighted composition of t_j per chain
/// of N, chosen independently.
inline std::uint64_t count_states(const IntVector& domain_chains, const IntVector& codomain_chains) {
  std::uint64_t total = 1;
  for (Integer t : codomain_chains) total *= count_weighted_compositions(domain_chains, t);
  return total;
}

/// Number of m in {0..t}^n with sum m_i = t, by plain nested iteration.
inline std::uint64_t count_compositions_brute(std::size_t n, Integer t) {
  std::uint64_t count = 0;
  std::vector<Integer> m(n, 0);
  while (true) {
    Integer s = 0;
    for (Integer v : m) s += v;
    if (s == t) ++count;
    std::size_t i = n;
    while (i-- > 0) {
      if (++m[i] <= t) break;
      m[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return count;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

/// Homomorphisms into a product of chains factor through one chain of the
/// domain per codomain chain, with k_i | t_j.
inline std::uint64_t count_homomorphisms(const IntVector& domain_chains, const IntVector& codomain_chains) {
  if (domain_chains.empty()) return codomain_chains.empty() ? 1 : 0;
  std::uint64_t total = 1;
  for (Integer t : codomain_chains) {
    std::uint64_t options = 0;
    for (Integer k : domain_chains)
      if (t % k == 0) ++options;
    total *= options;
  }
  return total;
}

/// Regularity straight from the definition: no rational point in the
/// relative interior of a face has den(x) < sum of that face's vertex
/// denominators. The search enumerates every point x = p / q, q below the
/// face bound, in the face's bounding box, and tests membership by exact
/// barycentric coordinates.
inline bool regular_by_definition(const RationalSimplex& s) {
  const auto& vs = s.vertices();
  const std::size_t d = s.ambient_dimension();
  const std::size_t nv = vs.size();
  for (std::uint32_t mask = 1; mask < (1u << nv); ++mask) {
    std::vector<RationalPoint> face;
    Integer bound = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (mask & (1u << i)) {
        face.push_back(vs[i]);
        bound += den(vs[i]);
      }
    if (face.size() < 2) continue;
    const RationalSimplex tau(face);
    std::vector<Rational> lo(d), hi(d);
    for (std::size_t c = 0; c < d; ++c) {
      lo[c] = hi[c] = face[0].coords[c];
      for (const auto& v : face) {
        lo[c] = std::min(lo[c], v.coords[c]);
        hi[c] = std::max(hi[c], v.coords[c]);
      }
    }
    for (Integer q = 1; q < bound; ++q) {
      std::vector<Integer> from(d), to(d), p(d);
      bool empty = false;
      for (std::size_t c = 0; c < d; ++c) {
        Rational a = lo[c] * q, b = hi[c] * q;
        // ceil(a), floor(b)
        from[c] = a.numerator() / a.denominator() + ((a.numerator() % a.denominator()) > 0 ? 1 : 0);
        to[c] = b.numerator() / b.denominator() - ((b.numerator() % b.denominator()) < 0 ? 1 : 0);
        if (from[c] > to[c]) empty = true;
        p[c] = from[c];
      }
      if (empty) continue;
      while (true) {
        RatVector coords;
        for (std::size_t c = 0; c < d; ++c) coords.emplace_back(p[c], q);
        const RationalPoint x(coords);
        if (den(x) < bound && tau.in_relative_interior(x)) return false;
        std::size_t c = d;
        while (c-- > 0) {
          if (++p[c] <= to[c]) break;
          p[c] = from[c];
        }
        if (c == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return true;
}

}  // namespace mvstate::oracle
