#pragma once

// States between finite MV-algebras. A state is checked two ways: by the
// equational axioms
//   (A1) s(a (+) b) = s(a) (+) s(b /\ neg a)
//   (A2) s(neg a) = neg s(a)
//   (A3) s(1) = 1
// and by additivity on orthogonal pairs (a (.) b = 0 implies
// s(a (+) b) = s(a) + s(b) in the group Xi N). The two predicates agree on
// every function; prop34_equivalence_harness tests exactly that.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mvstate/algebra.hpp"
#include "mvstate/homomorphism.hpp"

namespace mvstate {

struct StateTable {
  FiniteMvAlgebra domain;
  FiniteMvAlgebra codomain;
  std::vector<MvElement> values;  // indexed by domain element index

  const MvElement& operator()(const MvElement& a) const { return values[domain.index_of(a)]; }

  std::vector<MvElement> atom_values() const {
    std::vector<MvElement> out;
    for (const auto& a : atoms(domain)) out.push_back((*this)(a));
    return out;
  }

  bool operator==(const StateTable&) const = default;
};

class PartitionOfUnityViolation : public PropertyViolation {
public:
  PartitionOfUnityViolation(IntVector sum, IntVector unit)
      : PropertyViolation("atom values do not sum to the unit"), sum_(std::move(sum)), unit_(std::move(unit)) {}
  /// sum_i k_i s(a_i), as a vector of the codomain's group.
  const IntVector& sum() const { return sum_; }
  const IntVector& unit() const { return unit_; }

private:
  IntVector sum_;
  IntVector unit_;
};

/// Builds a table from explicit (argument, value) pairs; every element of
/// the domain must appear exactly once.
inline StateTable make_state_table(const FiniteMvAlgebra& A, const FiniteMvAlgebra& N,
                                   const std::map<MvElement, MvElement>& entries) {
  StateTable t{A, N, {}};
  for (const auto& [a, v] : entries) {
    A.require(a);
    N.require(v);
  }
  for (std::size_t i = 0; i < A.size(); ++i) {
    auto it = entries.find(A.element(i));
    if (it == entries.end()) throw PartialTable("table has no value for an element of " + A.to_string());
    t.values.push_back(it->second);
  }
  return t;
}

struct ConformanceReport {
  bool ok = true;
  std::string axiom;               // empty when ok
  std::vector<MvElement> witness;  // arguments of the violated law
};

namespace detail {

// The two predicates are written once against a small codomain interface.
// The harness runs them over precomputed operation tables; the public
// checks compute codomain operations directly, so the codomain may be far
// too large to tabulate.
struct TabulatedCodomain {
  using Value = std::uint32_t;
  OperationTables tables;
  std::vector<IntVector> numerators;

  explicit TabulatedCodomain(const FiniteMvAlgebra& N) : tables(build_tables(N)) {
    for (std::size_t i = 0; i < N.size(); ++i) numerators.push_back(N.element(i).numerators);
  }
  Value oplus(Value x, Value y) const { return tables.sum(x, y); }
  Value neg(Value x) const { return tables.neg[x]; }
  Value one() const { return tables.one(); }
  const IntVector& numerators_of(Value x) const { return numerators[x]; }
};

struct DirectCodomain {
  using Value = MvElement;
  const FiniteMvAlgebra& algebra;

  Value oplus(const Value& x, const Value& y) const { return mvstate::oplus(algebra, x, y); }
  Value neg(const Value& x) const { return mvstate::neg(algebra, x); }
  Value one() const { return algebra.one(); }
  const IntVector& numerators_of(const Value& x) const { return x.numerators; }
};

struct IndexWitness {
  const char* axiom = nullptr;
  std::vector<std::uint32_t> args;
};

template <class Codomain>
std::optional<IndexWitness> axioms_violation(const OperationTables& D, const Codomain& C,
                                             const std::vector<typename Codomain::Value>& s) {
  const auto n = static_cast<std::uint32_t>(D.size);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (s[D.sum(a, b)] != C.oplus(s[a], s[D.meet(b, D.neg[a])]))
        return IndexWitness{"A1: s(a (+) b) = s(a) (+) s(b /\\ neg a)", {a, b}};
  for (std::uint32_t a = 0; a < n; ++a)
    if (s[D.neg[a]] != C.neg(s[a])) return IndexWitness{"A2: s(neg a) = neg s(a)", {a}};
  if (s[D.one()] != C.one()) return IndexWitness{"A3: s(1) = 1", {D.one()}};
  return std::nullopt;
}

template <class Codomain>
std::optional<IndexWitness> additivity_violation(const OperationTables& D, const Codomain& C,
                                                 const std::vector<typename Codomain::Value>& s) {
  const auto n = static_cast<std::uint32_t>(D.size);
  if (s[D.one()] != C.one()) return IndexWitness{"s(1) = 1", {D.one()}};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (D.odot(a, b) != D.zero) continue;
      const IntVector& sa = C.numerators_of(s[a]);
      const IntVector& sb = C.numerators_of(s[b]);
      const IntVector& sab = C.numerators_of(s[D.sum(a, b)]);
      for (std::size_t j = 0; j < sab.size(); ++j)
        if (sa[j] + sb[j] != sab[j])
          return IndexWitness{"additivity: a (.) b = 0 implies s(a (+) b) = s(a) + s(b)", {a, b}};
    }
  return std::nullopt;
}

inline void require_total(const StateTable& t) {
  if (t.values.size() != t.domain.size()) throw PartialTable("state table is not total");
  for (const auto& v : t.values) t.codomain.require(v);
}

inline ConformanceReport to_report(const FiniteMvAlgebra& A, const std::optional<IndexWitness>& w) {
  ConformanceReport r;
  if (!w) return r;
  r.ok = false;
  r.axiom = w->axiom;
  for (auto i : w->args) r.witness.push_back(A.element(i));
  return r;
}

}  // namespace detail

/// `domain_tables` must be build_tables(t.domain); callers checking many
/// tables over one domain pass it to avoid rebuilding it.
inline ConformanceReport check_state_axioms(const StateTable& t, const OperationTables& domain_tables) {
  detail::require_total(t);
  const detail::DirectCodomain cod{t.codomain};
  return detail::to_report(t.domain, detail::axioms_violation(domain_tables, cod, t.values));
}

inline ConformanceReport check_state_axioms(const StateTable& t) {
  return check_state_axioms(t, build_tables(t.domain));
}

inline ConformanceReport check_state_additive(const StateTable& t) {
  detail::require_total(t);
  const detail::DirectCodomain cod{t.codomain};
  return detail::to_report(t.domain, detail::additivity_violation(build_tables(t.domain), cod, t.values));
}

inline void require_state(const StateTable& t) {
  auto r = check_state_axioms(t);
  if (!r.ok) throw NotAState("not a state: violates " + r.axiom);
}

struct HarnessOptions {
  std::uint64_t exhaustive_cap = 2'000'000;
  std::uint64_t sample_size = 100'000;
  bool allow_sampling = false;
  std::uint64_t seed = 0x5EED5EEDULL;
};

struct HarnessReport {
  bool exhaustive = true;
  std::uint64_t functions_checked = 0;
  std::uint64_t states = 0;  // functions both predicates accept
  bool agree = true;
  std::vector<MvElement> disagreement;  // full table of the first disagreeing function
};

/// Runs both state predicates over every function A -> N (or over a seeded
/// uniform sample when the function space exceeds the cap and sampling is
/// allowed) and reports whether they classify identically.
inline HarnessReport prop34_equivalence_harness(const FiniteMvAlgebra& A, const FiniteMvAlgebra& N,
                                                const HarnessOptions& opt = {}) {
  const OperationTables dom = build_tables(A);
  const detail::TabulatedCodomain cod(N);
  const std::size_t n = A.size(), m = N.size();
  bool exhaustive = true;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > opt.exhaustive_cap / m) {
      exhaustive = false;
      break;
    }
    space *= m;
  }
  if (space > opt.exhaustive_cap) exhaustive = false;
  if (!exhaustive && !opt.allow_sampling)
    throw CapExceeded("function space " + A.to_string() + " -> " + N.to_string() +
                      " exceeds the exhaustive cap; enable sampling");

  HarnessReport report;
  report.exhaustive = exhaustive;
  std::vector<std::uint32_t> s(n, 0);
  auto classify = [&]() {
    const bool by_axioms = !detail::axioms_violation(dom, cod, s).has_value();
    const bool by_additivity = !detail::additivity_violation(dom, cod, s).has_value();
    ++report.functions_checked;
    if (by_axioms && by_additivity) ++report.states;
    if (by_axioms != by_additivity && report.agree) {
      report.agree = false;
      for (auto v : s) report.disagreement.push_back(N.element(v));
    }
  };
  if (exhaustive) {
    for (std::uint64_t f = 0; f < space; ++f) {
      classify();
      for (std::size_t i = n; i-- > 0;) {
        if (++s[i] < m) break;
        s[i] = 0;
      }
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(m - 1));
    for (std::uint64_t f = 0; f < opt.sample_size; ++f) {
      for (auto& v : s) v = pick(rng);
      classify();
    }
  }
  return report;
}

/// The unique state with prescribed atom values, a = sum c_i a_i |->
/// sum c_i s(a_i) computed in Xi N. Throws PartitionOfUnityViolation when
/// sum k_i s(a_i) differs from the unit of Xi N.
inline StateTable extend_from_atoms(const FiniteMvAlgebra& A, const FiniteMvAlgebra& N,
                                    const std::vector<MvElement>& atom_values) {
  if (atom_values.size() != A.rank())
    throw DimensionMismatch("need one value per atom of " + A.to_string());
  for (const auto& v : atom_values) N.require(v);
  IntVector total(N.rank(), 0);
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t j = 0; j < N.rank(); ++j) total[j] += A.chains()[i] * atom_values[i][j];
  if (total != N.unit()) throw PartitionOfUnityViolation(total, N.unit());
  StateTable t{A, N, {}};
  for (std::size_t idx = 0; idx < A.size(); ++idx) {
    const MvElement a = A.element(idx);
    IntVector v(N.rank(), 0);
    for (std::size_t i = 0; i < A.rank(); ++i)
      for (std::size_t j = 0; j < N.rank(); ++j) v[j] += a[i] * atom_values[i][j];
    t.values.emplace_back(std::move(v));
  }
  return t;
}

/// Atom-value tuples of all states A -> N, in lexicographic numerator order.
inline std::vector<std::vector<MvElement>> enumerate_state_atom_values(const FiniteMvAlgebra& A,
                                                                       const FiniteMvAlgebra& N) {
  std::vector<std::vector<MvElement>> out;
  const std::size_t n = A.rank();
  std::vector<MvElement> current;
  IntVector partial(N.rank(), 0);
  const auto candidates = N.elements();
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (partial == N.unit()) out.push_back(current);
      return;
    }
    const Integer k = A.chains()[i];
    for (const auto& v : candidates) {
      bool fits = true;
      for (std::size_t j = 0; j < N.rank(); ++j)
        if (partial[j] + k * v[j] > N.unit()[j]) fits = false;
      if (!fits) continue;
      for (std::size_t j = 0; j < N.rank(); ++j) partial[j] += k * v[j];
      current.push_back(v);
      self(self, i + 1);
      current.pop_back();
      for (std::size_t j = 0; j < N.rank(); ++j) partial[j] -= k * v[j];
    }
  };
  recurse(recurse, 0);
  return out;
}

inline std::vector<StateTable> enumerate_states(const FiniteMvAlgebra& A, const FiniteMvAlgebra& N) {
  std::vector<StateTable> out;
  for (const auto& values : enumerate_state_atom_values(A, N)) out.push_back(extend_from_atoms(A, N, values));
  return out;
}

/// A state between the groups Z^n and Z^m: column i is the image of the
/// i-th standard basis vector.
struct XiStateMatrix {
  IntMatrix matrix;  // m rows, n columns
  IntVector source_unit;
  IntVector target_unit;

  IntVector apply(const IntVector& v) const {
    IntVector out(matrix.size(), 0);
    for (std::size_t r = 0; r < matrix.size(); ++r)
      for (std::size_t c = 0; c < v.size(); ++c) out[r] += matrix[r][c] * v[c];
    return out;
  }
  bool operator==(const XiStateMatrix&) const = default;
};

/// The unique extension of a state A -> N to a state Xi A -> Xi N.
inline XiStateMatrix xi_extend_state(const StateTable& t) {
  require_state(t);
  const auto& A = t.domain;
  const auto& N = t.codomain;
  XiStateMatrix x{IntMatrix(N.rank(), IntVector(A.rank(), 0)), A.unit(), N.unit()};
  const auto atom_vals = t.atom_values();
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t j = 0; j < N.rank(); ++j) x.matrix[j][i] = atom_vals[i][j];
  return x;
}

/// Restriction of a positive unit-preserving Z^n -> Z^m map to the unit
/// intervals.
inline StateTable gamma_restrict_state(const XiStateMatrix& x) {
  const std::size_t m = x.target_unit.size(), n = x.source_unit.size();
  if (x.matrix.size() != m) throw DimensionMismatch("matrix row count differs from target rank");
  for (const auto& row : x.matrix)
    if (row.size() != n) throw DimensionMismatch("matrix column count differs from source rank");
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (x.matrix[r][c] < 0)
        throw PositivityViolation("negative entry at (" + std::to_string(r) + "," + std::to_string(c) +
                                  "): a positive-cone generator maps outside the cone");
  if (x.apply(x.source_unit) != x.target_unit) throw UnitViolation("matrix does not map unit to unit");
  const FiniteMvAlgebra A(x.source_unit), N(x.target_unit);
  StateTable t{A, N, {}};
  for (std::size_t i = 0; i < A.size(); ++i) t.values.emplace_back(x.apply(A.element(i).numerators));
  return t;
}

/// A morphism (m, n) from the state s1: M1 -> N1 to the state s2: M2 -> N2.
struct TwoSortedHom {
  MvHom first;   // M1 -> M2
  MvHom second;  // N1 -> N2
  StateTable source;
  StateTable target;
};

/// s2 . m = n . s1 pointwise on M1. Throws if m or n is not a homomorphism.
inline ConformanceReport check_two_sorted_hom(const TwoSortedHom& h) {
  require_homomorphism(h.first);
  require_homomorphism(h.second);
  if (!(h.first.domain == h.source.domain) || !(h.first.codomain == h.target.domain) ||
      !(h.second.domain == h.source.codomain) || !(h.second.codomain == h.target.codomain))
    throw DimensionMismatch("two-sorted homomorphism: algebras do not line up");
  ConformanceReport r;
  for (const auto& a : h.first.domain.elements())
    if (h.target(h.first(a)) != h.second(h.source(a))) {
      r.ok = false;
      r.axiom = "s2(m(a)) = n(s1(a))";
      r.witness = {a};
      break;
    }
  return r;
}

}  // namespace mvstate
