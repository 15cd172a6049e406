#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mvstate/algebra.hpp"

namespace mvstate {

/// A total map between finite MV-algebras, stored as a full table indexed
/// by domain element index. Nothing about it is assumed; see
/// homomorphism_violation().
struct MvHom {
  FiniteMvAlgebra domain;
  FiniteMvAlgebra codomain;
  std::vector<MvElement> values;

  const MvElement& operator()(const MvElement& a) const { return values[domain.index_of(a)]; }
  bool operator==(const MvHom&) const = default;
};

inline MvHom tabulate(const FiniteMvAlgebra& A, const FiniteMvAlgebra& B,
                      const std::function<MvElement(const MvElement&)>& f) {
  MvHom h{A, B, {}};
  h.values.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    MvElement v = f(A.element(i));
    B.require(v);
    h.values.push_back(std::move(v));
  }
  return h;
}

/// The map a = sum c_i a_i |-> (+)-sum of c_i copies of images[i]. It is a
/// homomorphism only for suitable images; callers verify.
inline MvHom extend_atom_images(const FiniteMvAlgebra& A, const FiniteMvAlgebra& B,
                                const std::vector<MvElement>& images) {
  if (images.size() != A.rank())
    throw DimensionMismatch("need one image per atom of " + A.to_string());
  for (const auto& img : images) B.require(img);
  return tabulate(A, B, [&](const MvElement& a) {
    IntVector out(B.rank(), 0);
    for (std::size_t i = 0; i < A.rank(); ++i)
      for (std::size_t j = 0; j < B.rank(); ++j) out[j] += a[i] * images[i][j];
    for (std::size_t j = 0; j < B.rank(); ++j) out[j] = std::min(out[j], B.chains()[j]);
    return MvElement(std::move(out));
  });
}

struct HomViolation {
  std::string law;
  std::vector<MvElement> witness;
};

inline std::optional<HomViolation> homomorphism_violation(const MvHom& h) {
  const auto& A = h.domain;
  const auto& B = h.codomain;
  if (h.values.size() != A.size()) return HomViolation{"total table", {}};
  const OperationTables D = build_tables(A);
  const auto& v = h.values;
  if (v[D.zero] != B.zero()) return HomViolation{"h(0) = 0", {A.zero()}};
  const auto n = static_cast<std::uint32_t>(D.size);
  for (std::uint32_t a = 0; a < n; ++a)
    if (v[D.neg[a]] != neg(B, v[a])) return HomViolation{"h(neg a) = neg h(a)", {A.element(a)}};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a; b < n; ++b)
      if (v[D.sum(a, b)] != oplus(B, v[a], v[b]))
        return HomViolation{"h(a (+) b) = h(a) (+) h(b)", {A.element(a), A.element(b)}};
  return std::nullopt;
}

inline bool is_homomorphism(const MvHom& h) { return !homomorphism_violation(h).has_value(); }

inline void require_homomorphism(const MvHom& h) {
  if (auto v = homomorphism_violation(h))
    throw NotAHomomorphism("map " + h.domain.to_string() + " -> " + h.codomain.to_string() +
                           " violates " + v->law);
}

inline bool is_injective(const MvHom& h) {
  std::set<MvElement> seen(h.values.begin(), h.values.end());
  return seen.size() == h.values.size();
}

inline MvHom compose(const MvHom& second, const MvHom& first) {
  if (!(first.codomain == second.domain)) throw DimensionMismatch("compose: algebras do not match");
  return tabulate(first.domain, second.codomain,
                  [&](const MvElement& a) { return second(first(a)); });
}

inline MvHom identity_hom(const FiniteMvAlgebra& A) {
  return tabulate(A, A, [](const MvElement& a) { return a; });
}

/// All homomorphisms A -> B by exhaustive search. A map into a product is a
/// homomorphism iff each coordinate is, so the search runs per target chain
/// over all atom-image tuples in that chain, checking every law on full
/// tables, and the survivors are combined in lexicographic order.
inline std::vector<MvHom> enumerate_homomorphisms(const FiniteMvAlgebra& A, const FiniteMvAlgebra& B) {
  const OperationTables D = build_tables(A);
  const auto size = static_cast<std::uint32_t>(D.size);
  std::vector<MvElement> elems = A.elements();
  std::vector<std::vector<MvElement>> per_chain;  // coordinate j -> atom-image tuples (as rank-n vectors)
  for (Integer t : B.chains()) {
    std::vector<MvElement> found;
    const std::size_t n = A.rank();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(t + 1);
    IntVector tuple(n), image(size);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t i = n; i-- > 0;) {
        tuple[i] = static_cast<Integer>(rest % static_cast<std::size_t>(t + 1));
        rest /= static_cast<std::size_t>(t + 1);
      }
      for (std::uint32_t x = 0; x < size; ++x) {
        Integer acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += elems[x][i] * tuple[i];
        image[x] = std::min(acc, t);
      }
      bool ok = image[D.zero] == 0;
      for (std::uint32_t a = 0; ok && a < size; ++a) {
        if (image[D.neg[a]] != t - image[a]) ok = false;
        for (std::uint32_t b = a; ok && b < size; ++b)
          if (image[D.sum(a, b)] != std::min(image[a] + image[b], t)) ok = false;
      }
      if (ok) found.emplace_back(tuple);
    }
    per_chain.push_back(std::move(found));
  }
  std::vector<MvHom> out;
  if (A.is_terminal() && !B.is_terminal()) return out;
  std::vector<std::size_t> pick(B.rank(), 0);
  for (const auto& options : per_chain)
    if (options.empty()) return out;
  while (true) {
    std::vector<MvElement> images(A.rank(), MvElement(IntVector(B.rank(), 0)));
    for (std::size_t j = 0; j < B.rank(); ++j)
      for (std::size_t i = 0; i < A.rank(); ++i)
        images[i].numerators[j] = per_chain[j][pick[j]][i];
    MvHom h = extend_atom_images(A, B, images);
    require_homomorphism(h);
    out.push_back(std::move(h));
    std::size_t j = B.rank();
    while (j-- > 0) {
      if (++pick[j] < per_chain[j].size()) break;
      pick[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace mvstate
