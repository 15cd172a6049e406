#pragma once

// Finite MV-algebras presented as products of finite chains
// M_{k_1} x ... x M_{k_n}. An element stores one integer numerator per
// chain; coordinate i stands for c_i / k_i.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvstate/errors.hpp"
#include "mvstate/rational.hpp"

namespace mvstate {

struct MvElement {
  IntVector numerators;

  MvElement() = default;
  explicit MvElement(IntVector nums) : numerators(std::move(nums)) {}
  MvElement(std::initializer_list<Integer> nums) : numerators(nums) {}

  std::size_t rank() const { return numerators.size(); }
  Integer operator[](std::size_t i) const { return numerators[i]; }

  auto operator<=>(const MvElement&) const = default;
  bool operator==(const MvElement&) const = default;
};

class FiniteMvAlgebra {
public:
  /// Largest element count for which elements are indexed. Bigger products
  /// are still valid algebras (all operations are coordinatewise) but
  /// cannot be enumerated.
  static constexpr std::size_t kMaxElements = std::size_t{1} << 24;

  FiniteMvAlgebra() = default;  // the terminal algebra {0 = 1}

  explicit FiniteMvAlgebra(IntVector chains) : chains_(std::move(chains)) {
    std::size_t size = 1;
    for (Integer k : chains_) {
      if (k < 1) throw InputError("chain parameter must be >= 1, got " + std::to_string(k));
      if (size > kMaxElements / static_cast<std::size_t>(k + 1)) {
        size = 0;
      } else if (size != 0) {
        size *= static_cast<std::size_t>(k + 1);
      }
    }
    size_ = size;
  }

  const IntVector& chains() const { return chains_; }
  std::size_t rank() const { return chains_.size(); }
  bool indexable() const { return size_ != 0; }
  std::size_t size() const {
    require_indexable();
    return size_;
  }
  bool is_terminal() const { return chains_.empty(); }

  /// Unit of the associated group Z^n.
  const IntVector& unit() const { return chains_; }

  MvElement zero() const { return MvElement(IntVector(rank(), 0)); }
  MvElement one() const { return MvElement(chains_); }

  bool contains(const MvElement& a) const {
    if (a.rank() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
      if (a[i] < 0 || a[i] > chains_[i]) return false;
    return true;
  }

  void require(const MvElement& a) const {
    if (a.rank() != rank())
      throw DimensionMismatch("element has " + std::to_string(a.rank()) +
                              " coordinates, algebra " + to_string() + " has " +
                              std::to_string(rank()));
    if (!contains(a)) throw InputError("element is not in " + to_string());
  }

  /// Elements are indexed in lexicographic numerator order, so index order
  /// and element order agree.
  MvElement element(std::size_t index) const {
    require_indexable();
    IntVector nums(rank());
    for (std::size_t i = rank(); i-- > 0;) {
      auto radix = static_cast<std::size_t>(chains_[i] + 1);
      nums[i] = static_cast<Integer>(index % radix);
      index /= radix;
    }
    return MvElement(std::move(nums));
  }

  std::size_t index_of(const MvElement& a) const {
    require_indexable();
    require(a);
    std::size_t index = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      index = index * static_cast<std::size_t>(chains_[i] + 1) + static_cast<std::size_t>(a[i]);
    return index;
  }

  std::vector<MvElement> elements() const {
    require_indexable();
    std::vector<MvElement> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
    return out;
  }

  /// Signature literal, e.g. "M3*M1*M2"; the terminal algebra prints as "T".
  std::string to_string() const {
    if (chains_.empty()) return "T";
    std::string out;
    for (std::size_t i = 0; i < chains_.size(); ++i) {
      if (i) out += "*";
      out += "M" + std::to_string(chains_[i]);
    }
    return out;
  }

  bool operator==(const FiniteMvAlgebra& other) const { return chains_ == other.chains_; }

private:
  void require_indexable() const {
    if (size_ == 0) throw CapExceeded("algebra " + to_string() + " has too many elements to enumerate");
  }

  IntVector chains_;
  std::size_t size_ = 1;  // 0 when the element count exceeds kMaxElements
};

namespace detail {
inline void require_pair(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  A.require(a);
  A.require(b);
}
}  // namespace detail

inline MvElement oplus(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  detail::require_pair(A, a, b);
  IntVector out(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) out[i] = std::min(a[i] + b[i], A.chains()[i]);
  return MvElement(std::move(out));
}

inline MvElement neg(const FiniteMvAlgebra& A, const MvElement& a) {
  A.require(a);
  IntVector out(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) out[i] = A.chains()[i] - a[i];
  return MvElement(std::move(out));
}

inline MvElement odot(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  return neg(A, oplus(A, neg(A, a), neg(A, b)));
}

inline MvElement ominus(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  return odot(A, a, neg(A, b));
}

inline MvElement meet(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  return odot(A, a, oplus(A, neg(A, a), b));
}

inline MvElement join(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  return neg(A, meet(A, neg(A, a), neg(A, b)));
}

inline bool leq(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  detail::require_pair(A, a, b);
  for (std::size_t i = 0; i < A.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Untruncated sum in the group Z^n (the natural addition of the
/// associated unital lattice-group).
inline IntVector natural_sum(const FiniteMvAlgebra& A, const MvElement& a, const MvElement& b) {
  detail::require_pair(A, a, b);
  IntVector out(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline std::vector<MvElement> atoms(const FiniteMvAlgebra& A) {
  std::vector<MvElement> out;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    IntVector e(A.rank(), 0);
    e[i] = 1;
    out.emplace_back(std::move(e));
  }
  return out;
}

inline bool is_atom(const FiniteMvAlgebra& A, const MvElement& a) {
  A.require(a);
  Integer total = 0;
  for (Integer c : a.numerators) {
    if (c > 1) return false;
    total += c;
  }
  return total == 1;
}

namespace detail {
// Least m >= 1 with (m+1)a = ma under iterated truncated sum.
template <class Oplus>
Integer saturation(const MvElement& a, Oplus&& plus) {
  MvElement current = a;
  for (Integer m = 1;; ++m) {
    MvElement next = plus(current, a);
    if (next == current) return m;
    current = std::move(next);
  }
}
}  // namespace detail

inline Integer atom_multiplicity(const FiniteMvAlgebra& A, const MvElement& a) {
  if (!is_atom(A, a)) throw InputError("atom_multiplicity: argument is not an atom");
  return detail::saturation(a, [&](const MvElement& x, const MvElement& y) { return oplus(A, x, y); });
}

/// Cayley tables on element indices.
struct OperationTables {
  std::size_t size = 0;
  std::vector<std::uint32_t> oplus;  // size * size
  std::vector<std::uint32_t> neg;
  std::uint32_t zero = 0;

  std::uint32_t sum(std::uint32_t a, std::uint32_t b) const { return oplus[a * size + b]; }
  std::uint32_t one() const { return neg[zero]; }
  std::uint32_t odot(std::uint32_t a, std::uint32_t b) const { return neg[sum(neg[a], neg[b])]; }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const { return odot(a, sum(neg[a], b)); }
};

inline OperationTables build_tables(const FiniteMvAlgebra& A) {
  if (A.size() > 4096) throw CapExceeded("operation tables limited to 4096 elements");
  OperationTables t;
  t.size = A.size();
  t.oplus.resize(t.size * t.size);
  t.neg.resize(t.size);
  const auto elems = A.elements();
  for (std::size_t i = 0; i < t.size; ++i) {
    t.neg[i] = static_cast<std::uint32_t>(A.index_of(neg(A, elems[i])));
    for (std::size_t j = 0; j < t.size; ++j)
      t.oplus[i * t.size + j] = static_cast<std::uint32_t>(A.index_of(oplus(A, elems[i], elems[j])));
  }
  t.zero = static_cast<std::uint32_t>(A.index_of(A.zero()));
  return t;
}

struct AxiomReport {
  bool ok = true;
  std::string identity;                 // name of the first violated identity
  std::vector<std::size_t> witness;     // element indices, in variable order
};

inline constexpr std::size_t kDefaultTupleCap = 10'000;

/// Exhaustively checks the MV-algebra identities on the given tables.
/// Throws CapExceeded if some identity would need more than `cap` tuples.
inline AxiomReport check_mv_axioms(const OperationTables& t, std::size_t cap = kDefaultTupleCap) {
  const std::size_t n = t.size;
  if (n > 0 && n * n * n > cap)
    throw CapExceeded("exhaustive check needs " + std::to_string(n * n * n) +
                      " tuples, cap is " + std::to_string(cap));
  AxiomReport r;
  auto fail = [&](const char* name, std::vector<std::size_t> w) {
    r.ok = false;
    r.identity = name;
    r.witness = std::move(w);
    return r;
  };
  const std::uint32_t one = t.one();
  for (std::uint32_t x = 0; x < n; ++x) {
    if (t.sum(x, t.zero) != x) return fail("x (+) 0 = x", {x});
    if (t.neg[t.neg[x]] != x) return fail("neg(neg(x)) = x", {x});
    if (t.sum(x, one) != one) return fail("x (+) 1 = 1", {x});
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (t.sum(x, y) != t.sum(y, x)) return fail("x (+) y = y (+) x", {x, y});
      if (t.sum(t.neg[t.sum(t.neg[x], y)], y) != t.sum(t.neg[t.sum(t.neg[y], x)], x))
        return fail("neg(neg(x) (+) y) (+) y = neg(neg(y) (+) x) (+) x", {x, y});
    }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (t.sum(t.sum(x, y), z) != t.sum(x, t.sum(y, z)))
          return fail("(x (+) y) (+) z = x (+) (y (+) z)", {x, y, z});
  return r;
}

inline AxiomReport check_mv_axioms(const FiniteMvAlgebra& A, std::size_t cap = kDefaultTupleCap) {
  if (A.size() * A.size() * A.size() > cap)
    throw CapExceeded("exhaustive check of " + A.to_string() + " exceeds the tuple cap");
  return check_mv_axioms(build_tables(A), cap);
}

/// A finite subalgebra of a product of chains, re-presented through its
/// atoms and their saturation multiplicities.
struct Subalgebra {
  FiniteMvAlgebra parent;
  std::vector<MvElement> elements;   // sorted, closed under (+) and neg
  std::vector<MvElement> atoms;      // minimal nonzero elements, sorted
  IntVector multiplicities;          // one per atom
  FiniteMvAlgebra presented() const { return FiniteMvAlgebra(multiplicities); }
};

inline Subalgebra subalgebra_generated(const FiniteMvAlgebra& A, const std::vector<MvElement>& gens) {
  std::set<MvElement> closed{A.zero(), A.one()};
  for (const auto& g : gens) {
    A.require(g);
    closed.insert(g);
  }
  std::vector<MvElement> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<MvElement> fresh;
    auto add = [&](MvElement e) {
      if (closed.insert(e).second) fresh.push_back(std::move(e));
    };
    const std::vector<MvElement> snapshot(closed.begin(), closed.end());
    for (const auto& x : frontier) {
      add(neg(A, x));
      for (const auto& y : snapshot) add(oplus(A, x, y));
    }
    frontier = std::move(fresh);
  }

  Subalgebra sub{A, {closed.begin(), closed.end()}, {}, {}};
  const MvElement zero = A.zero();
  for (const auto& x : sub.elements) {
    if (x == zero) continue;
    bool minimal = true;
    for (const auto& y : sub.elements)
      if (y != zero && y != x && leq(A, y, x)) {
        minimal = false;
        break;
      }
    if (minimal) sub.atoms.push_back(x);
  }
  for (const auto& a : sub.atoms)
    sub.multiplicities.push_back(
        detail::saturation(a, [&](const MvElement& x, const MvElement& y) { return oplus(A, x, y); }));
  return sub;
}

}  // namespace mvstate
