#pragma once

// Good sequences and the lattice-group Xi A they generate. For a finite
// A = M_{k_1} x ... x M_{k_n}, Xi A is Z^n with unit (k_1, ..., k_n); the
// pair-of-good-sequences form is kept alongside so the construction itself
// can be exercised and compared against the integer model.

#include <variant>
#include <vector>

#include "mvstate/algebra.hpp"

namespace mvstate {

struct GoodSequence {
  FiniteMvAlgebra parent;
  std::vector<MvElement> entries;  // trailing zeros trimmed

  bool empty() const { return entries.empty(); }
  bool operator==(const GoodSequence&) const = default;
};

namespace detail {
inline std::vector<MvElement> trimmed(const FiniteMvAlgebra& A, std::vector<MvElement> seq) {
  const MvElement zero = A.zero();
  while (!seq.empty() && seq.back() == zero) seq.pop_back();
  return seq;
}
}  // namespace detail

inline bool is_good_sequence(const FiniteMvAlgebra& A, const std::vector<MvElement>& seq) {
  for (const auto& a : seq) A.require(a);
  const auto s = detail::trimmed(A, seq);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (oplus(A, s[i], s[i + 1]) != s[i]) return false;
  return true;
}

inline GoodSequence make_good_sequence(const FiniteMvAlgebra& A, std::vector<MvElement> seq) {
  if (!is_good_sequence(A, seq)) throw InputError("not a good sequence in " + A.to_string());
  return GoodSequence{A, detail::trimmed(A, std::move(seq))};
}

/// c_i = a_i (+) (a_{i-1} (.) b_1) (+) ... (+) (a_1 (.) b_{i-1}) (+) b_i.
inline GoodSequence good_seq_add(const GoodSequence& s, const GoodSequence& t) {
  if (!(s.parent == t.parent)) throw DimensionMismatch("good sequences over different algebras");
  const auto& A = s.parent;
  if (!is_good_sequence(A, s.entries) || !is_good_sequence(A, t.entries))
    throw InputError("good_seq_add: operand is not a good sequence");
  // index 0 stands for the constant 1 so that a_i (.) b_0 = a_i.
  auto at = [&](const std::vector<MvElement>& seq, std::size_t i) -> MvElement {
    if (i == 0) return A.one();
    return i <= seq.size() ? seq[i - 1] : A.zero();
  };
  const std::size_t len = s.entries.size() + t.entries.size();
  std::vector<MvElement> out;
  for (std::size_t i = 1; i <= len; ++i) {
    MvElement c = A.zero();
    for (std::size_t j = 0; j <= i; ++j) c = oplus(A, c, odot(A, at(s.entries, j), at(t.entries, i - j)));
    out.push_back(std::move(c));
  }
  return GoodSequence{A, detail::trimmed(A, std::move(out))};
}

/// Image in Z^n of a good sequence: the sum of its entries' numerators.
inline IntVector sum_entries(const GoodSequence& s) {
  IntVector out(s.parent.rank(), 0);
  for (const auto& a : s.entries)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a[i];
  return out;
}

/// The unique good sequence whose entries sum to v >= 0: peel off v /\ 1
/// repeatedly.
inline GoodSequence g_decompose(const FiniteMvAlgebra& A, IntVector v) {
  if (v.size() != A.rank()) throw DimensionMismatch("g_decompose: vector length");
  for (Integer c : v)
    if (c < 0) throw InputError("g_decompose: negative coordinate");
  std::vector<MvElement> out;
  while (std::any_of(v.begin(), v.end(), [](Integer c) { return c > 0; })) {
    IntVector head(A.rank());
    for (std::size_t i = 0; i < A.rank(); ++i) {
      head[i] = std::min(v[i], A.chains()[i]);
      v[i] -= head[i];
    }
    out.emplace_back(std::move(head));
  }
  return GoodSequence{A, std::move(out)};
}

/// Equivalence class [pos, neg] of a pair of good sequences.
struct XiPair {
  GoodSequence pos;
  GoodSequence neg;
};

/// Canonical form over a finite algebra: a vector of Z^n with its unit.
struct XiVector {
  IntVector vector;
  IntVector unit;
  bool operator==(const XiVector&) const = default;
};

using XiElement = std::variant<XiPair, XiVector>;

inline XiVector canonicalize(const XiElement& x) {
  if (const auto* v = std::get_if<XiVector>(&x)) return *v;
  const auto& p = std::get<XiPair>(x);
  IntVector out = sum_entries(p.pos);
  const IntVector minus = sum_entries(p.neg);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= minus[i];
  return XiVector{std::move(out), p.pos.parent.unit()};
}

inline const IntVector& unit_of(const XiElement& x) {
  if (const auto* v = std::get_if<XiVector>(&x)) return v->unit;
  return std::get<XiPair>(x).pos.parent.unit();
}

/// phi: a |-> [(a), ()].
inline XiPair phi(const FiniteMvAlgebra& A, const MvElement& a) {
  A.require(a);
  return XiPair{make_good_sequence(A, {a}), GoodSequence{A, {}}};
}

inline XiVector phi_vector(const FiniteMvAlgebra& A, const MvElement& a) {
  A.require(a);
  return XiVector{a.numerators, A.unit()};
}

/// epsilon: v |-> [g(v+), g(v-)].
inline XiPair epsilon(const FiniteMvAlgebra& A, const IntVector& v) {
  if (v.size() != A.rank()) throw DimensionMismatch("epsilon: vector length");
  IntVector plus(v.size()), minus(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    plus[i] = std::max<Integer>(v[i], 0);
    minus[i] = std::max<Integer>(-v[i], 0);
  }
  return XiPair{g_decompose(A, plus), g_decompose(A, minus)};
}

/// Inverse of phi on the unit interval of (Z^n, k): the element with
/// numerators v. Requires 0 <= v <= k.
inline MvElement gamma_element(const FiniteMvAlgebra& A, const XiVector& v) {
  if (v.unit != A.unit()) throw DimensionMismatch("gamma_element: unit mismatch");
  MvElement a(v.vector);
  if (!A.contains(a)) throw InputError("vector lies outside the unit interval");
  return a;
}

/// Gamma(Z^n, k) = M_{k_1} x ... x M_{k_n}.
inline FiniteMvAlgebra gamma_of(const IntVector& unit) {
  for (Integer k : unit)
    if (k <= 0) throw InputError("unit coordinates must be strictly positive");
  return FiniteMvAlgebra(unit);
}

/// [a, b] = [a', b'] iff a + b' = a' + b. Mixed forms compare canonically;
/// the two tests agree.
inline bool xi_equal(const XiElement& x, const XiElement& y) {
  if (unit_of(x) != unit_of(y)) throw DimensionMismatch("xi_equal: different parent algebras");
  const auto* px = std::get_if<XiPair>(&x);
  const auto* py = std::get_if<XiPair>(&y);
  if (px && py) {
    if (!(px->pos.parent == py->pos.parent)) throw DimensionMismatch("xi_equal: different parent algebras");
    return good_seq_add(px->pos, py->neg) == good_seq_add(py->pos, px->neg);
  }
  return canonicalize(x) == canonicalize(y);
}

inline XiPair xi_add(const XiPair& x, const XiPair& y) {
  return XiPair{good_seq_add(x.pos, y.pos), good_seq_add(x.neg, y.neg)};
}

inline XiPair xi_negate(const XiPair& x) { return XiPair{x.neg, x.pos}; }

namespace detail {
template <class Op>
XiVector zip(const XiVector& x, const XiVector& y, Op op) {
  if (x.unit != y.unit) throw DimensionMismatch("Xi vectors with different units");
  XiVector out{IntVector(x.vector.size()), x.unit};
  for (std::size_t i = 0; i < out.vector.size(); ++i) out.vector[i] = op(x.vector[i], y.vector[i]);
  return out;
}
}  // namespace detail

inline XiVector xi_add(const XiVector& x, const XiVector& y) {
  return detail::zip(x, y, [](Integer a, Integer b) { return a + b; });
}
inline XiVector xi_sub(const XiVector& x, const XiVector& y) {
  return detail::zip(x, y, [](Integer a, Integer b) { return a - b; });
}
inline XiVector xi_meet(const XiVector& x, const XiVector& y) {
  return detail::zip(x, y, [](Integer a, Integer b) { return std::min(a, b); });
}
inline XiVector xi_join(const XiVector& x, const XiVector& y) {
  return detail::zip(x, y, [](Integer a, Integer b) { return std::max(a, b); });
}
inline bool xi_leq(const XiVector& x, const XiVector& y) {
  if (x.unit != y.unit) throw DimensionMismatch("Xi vectors with different units");
  for (std::size_t i = 0; i < x.vector.size(); ++i)
    if (x.vector[i] > y.vector[i]) return false;
  return true;
}

}  // namespace mvstate
