#pragma once

// Universal states of finite MV-algebras. For A = M_{k_1} x ... x M_{k_n}
// the universal state sends a = sum c_i a_i to the affine function
// x |-> sum c_i x_i on Delta_k; a state s: A -> N factors through it via
// one point of Delta_k per chain of N.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mvstate/geometry.hpp"
#include "mvstate/homomorphism.hpp"
#include "mvstate/state.hpp"

namespace mvstate {

struct UniversalState {
  FiniteMvAlgebra source;
  RationalSimplex simplex;
  std::vector<AffineZMap> assignment;  // indexed by source element index; 1 x n, offset 0

  const AffineZMap& operator()(const MvElement& a) const { return assignment[source.index_of(a)]; }
};

inline UniversalState universal_state(const FiniteMvAlgebra& A) {
  if (A.is_terminal()) throw InputError("the terminal algebra has no universal state on a simplex");
  UniversalState u{A, delta_k(A.chains()), {}};
  for (std::size_t idx = 0; idx < A.size(); ++idx)
    u.assignment.push_back(make_affine_map({A.element(idx).numerators}, {0}, u.simplex));
  return u;
}

/// sum c_i x_i for x in Delta_k; always in [0, 1].
inline Rational eval_universal(const UniversalState& u, const MvElement& a, const RationalPoint& x) {
  return apply_affine(u(a), x).coords[0];
}

/// The universal state read on the grid of points of Delta_k whose
/// denominator divides `grid`: a table A -> (M_grid)^P, one chain per point.
inline StateTable materialize_universal(const UniversalState& u, Integer grid) {
  const auto points = points_with_denominator_dividing(u.source.chains(), grid);
  const FiniteMvAlgebra codomain(IntVector(points.size(), grid));
  StateTable t{u.source, codomain, {}};
  for (std::size_t idx = 0; idx < u.source.size(); ++idx) {
    IntVector v;
    for (const auto& p : points) {
      Rational value = u.assignment[idx].evaluate(p).coords[0] * grid;
      if (value.denominator() != 1) throw Error("grid value is not a multiple of 1/grid");
      v.push_back(value.numerator());
    }
    t.values.emplace_back(std::move(v));
  }
  return t;
}

/// A homomorphism out of the universal codomain, given dually by one point
/// of Delta_k per chain t_j of the target, with den(point_j) | t_j.
struct DualHom {
  IntVector target_chains;
  std::vector<RationalPoint> points;
  bool operator==(const DualHom&) const = default;
  bool operator<(const DualHom& other) const { return points < other.points; }
};

/// h . upsilon: evaluate each assigned function at each dual point.
inline StateTable induced_state(const UniversalState& u, const DualHom& h) {
  const FiniteMvAlgebra N(h.target_chains);
  if (h.points.size() != N.rank()) throw DimensionMismatch("need one dual point per target chain");
  // Membership is checked once per point; evaluation then needs no solve.
  for (const auto& p : h.points)
    if (!u.simplex.contains(p)) throw OutsideDomain("dual point lies outside Delta_k");
  StateTable t{u.source, N, {}};
  for (std::size_t idx = 0; idx < u.source.size(); ++idx) {
    IntVector v;
    for (std::size_t j = 0; j < h.points.size(); ++j) {
      Rational value = u.assignment[idx].evaluate(h.points[j]).coords[0] * h.target_chains[j];
      if (value.denominator() != 1) throw PropertyViolation("dual point denominator does not divide its chain");
      v.push_back(value.numerator());
    }
    t.values.emplace_back(std::move(v));
  }
  return t;
}

namespace detail {

// factor_state without the state check, for callers that have done it.
inline DualHom factor_checked_state(const UniversalState& u, const StateTable& s) {
  const auto& N = s.codomain;
  DualHom h{N.chains(), {}};
  const auto vals = s.atom_values();
  for (std::size_t j = 0; j < N.rank(); ++j) {
    RatVector c;
    for (const auto& v : vals) c.emplace_back(v[j], N.chains()[j]);
    RationalPoint p(std::move(c));
    if (!u.simplex.contains(p)) throw PropertyViolation("dual point lies outside Delta_k");
    if (N.chains()[j] % den(p) != 0) throw PropertyViolation("dual point denominator does not divide its chain");
    h.points.push_back(std::move(p));
  }
  if (induced_state(u, h) != s) throw PropertyViolation("factorization does not reproduce the state");
  return h;
}

}  // namespace detail

/// The unique h with h . upsilon_A = s.
inline DualHom factor_state(const UniversalState& u, const StateTable& s) {
  if (!(s.domain == u.source)) throw DimensionMismatch("state domain differs from the universal state's source");
  require_state(s);
  return detail::factor_checked_state(u, s);
}

/// All dual homomorphisms into N: tuples of points of Delta_k with
/// den | t_j, in lexicographic order.
inline std::vector<DualHom> enumerate_dual_homs(const FiniteMvAlgebra& A, const FiniteMvAlgebra& N) {
  std::vector<std::vector<RationalPoint>> options;
  for (Integer t : N.chains()) options.push_back(points_with_denominator_dividing(A.chains(), t));
  std::vector<DualHom> out;
  for (const auto& o : options)
    if (o.empty()) return out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    DualHom h{N.chains(), {}};
    for (std::size_t j = 0; j < options.size(); ++j) h.points.push_back(options[j][pick[j]]);
    out.push_back(std::move(h));
    std::size_t j = options.size();
    while (j-- > 0) {
      if (++pick[j] < options[j].size()) break;
      pick[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

struct UniversalReport {
  bool ok = true;
  std::size_t states = 0;
  std::size_t dual_homs = 0;
  std::vector<std::string> failures;
};

/// Checks that factor_state is a bijection from the states A -> N onto the
/// dual homomorphisms, that each factorization reproduces its state, and
/// that no other dual homomorphism does.
inline UniversalReport verify_universal_property(const FiniteMvAlgebra& A, const FiniteMvAlgebra& N) {
  UniversalReport r;
  const UniversalState u = universal_state(A);
  const auto states = enumerate_states(A, N);
  const auto duals = enumerate_dual_homs(A, N);
  r.states = states.size();
  r.dual_homs = duals.size();
  auto fail = [&](std::string why) {
    r.ok = false;
    if (r.failures.size() < 16) r.failures.push_back(std::move(why));
  };

  const OperationTables tables = build_tables(A);
  std::map<DualHom, std::size_t> image;
  for (std::size_t i = 0; i < states.size(); ++i) {
    try {
      if (!check_state_axioms(states[i], tables).ok) throw NotAState("enumerated table is not a state");
      DualHom h = detail::factor_checked_state(u, states[i]);
      if (!image.emplace(std::move(h), i).second) fail("two states factor through the same dual point tuple");
    } catch (const Error& e) {
      fail(std::string("state ") + std::to_string(i) + ": " + e.what());
    }
  }
  const std::set<DualHom> dual_set(duals.begin(), duals.end());
  for (const auto& [h, i] : image)
    if (!dual_set.count(h)) fail("factorization of state " + std::to_string(i) + " is not an enumerated dual point tuple");

  std::set<MvElement> seen_states;
  for (const auto& h : duals) {
    StateTable s = induced_state(u, h);
    if (!check_state_axioms(s, tables).ok) {
      fail("a dual point tuple induces a non-state");
      continue;
    }
    // uniqueness of h: h is the only tuple inducing s
    if (!image.count(h)) fail("a dual point tuple is not the factorization of any state");
    MvElement key;
    for (const auto& v : s.values) key.numerators.insert(key.numerators.end(), v.numerators.begin(), v.numerators.end());
    if (!seen_states.insert(std::move(key)).second) fail("two dual point tuples induce the same state");
  }
  if (r.states != r.dual_homs) fail("cardinalities differ");
  return r;
}

/// For each chain j of B, the unique atom i of A on which project_j . h is
/// nonzero; that value must be 1/k_i, so k_i | t_j.
inline std::vector<std::size_t> dual_of_hom(const MvHom& h) {
  require_homomorphism(h);
  const auto& A = h.domain;
  const auto& B = h.codomain;
  const auto atom_list = atoms(A);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < B.rank(); ++j) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < atom_list.size(); ++i)
      if (h(atom_list[i])[j] != 0) support.push_back(i);
    if (support.size() != 1)
      throw NotAHomomorphism("chain " + std::to_string(j) + " of the codomain sees " +
                             std::to_string(support.size()) + " atoms");
    const std::size_t i = support[0];
    const Integer k = A.chains()[i], t = B.chains()[j];
    if (t % k != 0 || h(atom_list[i])[j] * k != t)
      throw NotAHomomorphism("atom value is not 1/k_i on chain " + std::to_string(j));
    out.push_back(i);
  }
  return out;
}

struct UpsilonCertificate {
  std::vector<std::size_t> dual_map;  // chain j of B -> atom i of A
  AffineZMap alpha;                   // Delta_t -> Delta_k
  bool surjective = false;
  bool precomposition_injective = false;
  bool square_commutes = false;

  bool ok() const { return surjective && precomposition_injective && square_commutes; }
};

/// The affine Z-map Delta_t -> Delta_k dual to an injective h: A -> B,
/// with checks that it is onto, that pulling back along it is injective
/// on affine functions, and that upsilon_B . h = (pullback) . upsilon_A.
/// Integrality is enforced by affine_extension.
inline UpsilonCertificate upsilon_of_hom(const MvHom& h) {
  require_homomorphism(h);
  if (!is_injective(h)) throw NotInjective("homomorphism " + h.domain.to_string() + " -> " +
                                           h.codomain.to_string() + " is not injective");
  const auto& A = h.domain;
  const auto& B = h.codomain;
  if (A.is_terminal() || B.is_terminal()) throw InputError("upsilon_of_hom: terminal algebra");
  const auto dual = dual_of_hom(h);
  const RationalSimplex source = delta_k(B.chains());
  const RationalSimplex target = delta_k(A.chains());
  std::vector<RationalPoint> images;
  for (std::size_t i : dual) images.push_back(target.vertices()[i]);

  UpsilonCertificate c{dual, affine_extension(source, images)};
  c.surjective = is_surjective_onto_simplex(c.alpha, target);

  // Affine functions on a simplex are determined by their vertex values.
  // Pullback sends the vertex values of f (indexed by atoms of A) to those
  // of f . alpha (indexed by chains of B) through the 0/1 matrix below.
  IntMatrix pullback(B.rank(), IntVector(A.rank(), 0));
  for (std::size_t j = 0; j < dual.size(); ++j) pullback[j][dual[j]] = 1;
  c.precomposition_injective = linalg::rank(pullback) == A.rank();

  const auto atom_list = atoms(A);
  c.square_commutes = true;
  for (std::size_t i = 0; i < atom_list.size(); ++i)
    if (c.alpha.matrix[i] != h(atom_list[i]).numerators || c.alpha.offset[i] != 0) c.square_commutes = false;
  return c;
}

struct ChainReport {
  bool ok = true;
  std::vector<IntVector> simplices;  // k^(j) of each Delta in the chain
  std::vector<UpsilonCertificate> steps;
};

inline ChainReport colimit_chain_check(const std::vector<FiniteMvAlgebra>& algebras, const std::vector<MvHom>& maps) {
  if (algebras.empty()) throw InputError("chain needs at least one algebra");
  if (maps.size() + 1 != algebras.size()) throw DimensionMismatch("chain needs one map between consecutive algebras");
  ChainReport r;
  for (const auto& A : algebras) r.simplices.push_back(A.chains());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].domain == algebras[i]) || !(maps[i].codomain == algebras[i + 1]))
      throw DimensionMismatch("map " + std::to_string(i) + " does not connect consecutive algebras");
    r.steps.push_back(upsilon_of_hom(maps[i]));
    if (!r.steps.back().ok()) r.ok = false;
  }
  return r;
}

struct AffineRepReport {
  bool ok = true;
  std::size_t points = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> failures;
};

/// Compares the evaluation map a |-> (s |-> s(a)) over the rational states
/// of A with the universal state, at every point of Delta_k with
/// denominator <= bound. The state at x is built from its atom values by
/// extend_from_atoms into M_{den x}.
inline AffineRepReport affine_rep_compare(const FiniteMvAlgebra& A, Integer bound) {
  if (bound < 1) throw InputError("bound must be >= 1");
  const UniversalState u = universal_state(A);
  AffineRepReport r;
  for (Integer t = 1; t <= bound; ++t) {
    const FiniteMvAlgebra chain(IntVector{t});
    for (const auto& x : points_with_denominator_dividing(A.chains(), t)) {
      if (den(x) != t) continue;
      ++r.points;
      std::vector<MvElement> atom_vals;
      for (const auto& c : x.coords) atom_vals.push_back(MvElement{(c * t).numerator()});
      const StateTable s = extend_from_atoms(A, chain, atom_vals);
      for (std::size_t idx = 0; idx < A.size(); ++idx) {
        const MvElement a = A.element(idx);
        ++r.comparisons;
        if (Rational(s.values[idx][0], t) != eval_universal(u, a, x)) {
          r.ok = false;
          if (r.failures.size() < 16) r.failures.push_back("disagreement at element index " + std::to_string(idx));
        }
      }
    }
  }
  return r;
}

struct RadicalReport {
  std::vector<std::vector<MvElement>> kernels;  // one per chain projection
  std::vector<MvElement> radical;               // their intersection
};

inline RadicalReport radical_finite(const FiniteMvAlgebra& A) {
  RadicalReport r;
  const auto elems = A.elements();
  for (std::size_t i = 0; i < A.rank(); ++i) {
    std::vector<MvElement> ker;
    for (const auto& a : elems)
      if (a[i] == 0) ker.push_back(a);
    r.kernels.push_back(std::move(ker));
  }
  for (const auto& a : elems) {
    bool everywhere = true;
    for (const auto& ker : r.kernels)
      if (std::find(ker.begin(), ker.end(), a) == ker.end()) everywhere = false;
    if (everywhere) r.radical.push_back(a);
  }
  return r;
}

}  // namespace mvstate
