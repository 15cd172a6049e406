#pragma once

// Exact rational geometry: rational points and their denominators,
// rational simplices, affine maps with integer coefficients, and the
// simplices Delta_k = conv{e_1/k_1, ..., e_n/k_n}.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mvstate/linalg.hpp"
#include "mvstate/rational.hpp"

namespace mvstate {

struct RationalPoint {
  RatVector coords;

  RationalPoint() = default;
  explicit RationalPoint(RatVector c) : coords(std::move(c)) {}

  std::size_t dimension() const { return coords.size(); }
  bool operator==(const RationalPoint&) const = default;
  bool operator<(const RationalPoint& other) const { return coords < other.coords; }
};

/// lcm of the reduced coordinate denominators; 1 for the empty point.
inline Integer den(const RationalPoint& x) {
  Integer d = 1;
  for (const auto& c : x.coords) d = std::lcm(d, c.denominator());
  return d;
}

class RationalSimplex {
public:
  explicit RationalSimplex(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw DegenerateSimplex("a simplex needs at least one vertex");
    dim_ = vertices_[0].dimension();
    for (const auto& v : vertices_)
      if (v.dimension() != dim_) throw DimensionMismatch("simplex vertices of different dimensions");
    if (linalg::rank(homogenized_columns()) != vertices_.size())
      throw DegenerateSimplex("vertices are affinely dependent");
  }

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  /// Dimension of the ambient space.
  std::size_t ambient_dimension() const { return dim_; }
  /// t for a t-simplex.
  std::size_t dimension() const { return vertices_.size() - 1; }

  /// Barycentric coordinates of x with respect to the vertices, if x lies
  /// in the affine hull.
  std::optional<RatVector> barycentric(const RationalPoint& x) const {
    if (x.dimension() != dim_) throw DimensionMismatch("point and simplex dimensions differ");
    RatVector rhs = x.coords;
    rhs.push_back(Rational(1));
    auto sol = linalg::solve(homogenized_columns(), rhs);
    if (!sol.consistent) return std::nullopt;
    return sol.x;
  }

  bool contains(const RationalPoint& x) const {
    auto lambda = barycentric(x);
    if (!lambda) return false;
    for (const auto& l : *lambda)
      if (l < 0) return false;
    return true;
  }

  bool in_relative_interior(const RationalPoint& x) const {
    auto lambda = barycentric(x);
    if (!lambda) return false;
    for (const auto& l : *lambda)
      if (l <= 0) return false;
    return true;
  }

  bool operator==(const RationalSimplex& other) const { return vertices_ == other.vertices_; }

private:
  // (d+1) x (t+1) matrix whose columns are (v_i, 1).
  RatMatrix homogenized_columns() const {
    RatMatrix m(dim_ + 1, RatVector(vertices_.size()));
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t r = 0; r < dim_; ++r) m[r][i] = vertices_[i].coords[r];
      m[dim_][i] = Rational(1);
    }
    return m;
  }

  std::vector<RationalPoint> vertices_;
  std::size_t dim_ = 0;
};

/// den(v) * (v, 1): the primitive integer vector on the ray through (v, 1).
inline IntVector homogenize(const RationalPoint& v) {
  const Integer d = den(v);
  IntVector w;
  for (const auto& c : v.coords) w.push_back((c * d).numerator());
  w.push_back(d);
  return w;
}

/// Regularity via the unimodularity criterion: the homogenized vertices
/// must extend to a basis of Z^{d+1}, i.e. their maximal minors are coprime.
inline bool is_regular_simplex(const RationalSimplex& s) {
  IntMatrix rows;
  for (const auto& v : s.vertices()) rows.push_back(homogenize(v));
  return linalg::gcd_of_maximal_minors(rows) == 1;
}

inline RationalSimplex delta_k(const IntVector& k) {
  if (k.empty()) throw InputError("delta_k: empty chain vector");
  std::vector<RationalPoint> vertices;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) throw InputError("delta_k: chain parameter must be >= 1");
    RatVector c(k.size(), Rational(0));
    c[i] = Rational(1, k[i]);
    vertices.emplace_back(std::move(c));
  }
  return RationalSimplex(std::move(vertices));
}

/// All x in Delta_k with den(x) | t, i.e. x = m / t with m >= 0 and
/// sum k_i m_i = t, ordered lexicographically in m.
inline std::vector<RationalPoint> points_with_denominator_dividing(const IntVector& k, Integer t) {
  if (t < 1) throw InputError("denominator bound must be >= 1");
  if (k.empty()) throw InputError("empty chain vector");
  std::vector<RationalPoint> out;
  IntVector m(k.size(), 0);
  auto recurse = [&](auto&& self, std::size_t i, Integer remaining) -> void {
    if (i + 1 == k.size()) {
      if (remaining % k[i] != 0) return;
      m[i] = remaining / k[i];
      RatVector c;
      for (Integer mi : m) c.emplace_back(mi, t);
      out.emplace_back(std::move(c));
      return;
    }
    for (Integer v = 0; k[i] * v <= remaining; ++v) {
      m[i] = v;
      self(self, i + 1, remaining - k[i] * v);
    }
  };
  recurse(recurse, 0, t);
  return out;
}

/// x |-> M x + c with integer M and c, restricted to a simplex.
struct AffineZMap {
  IntMatrix matrix;  // rows = target dimension, cols = source dimension
  IntVector offset;
  RationalSimplex domain;

  std::size_t target_dimension() const { return offset.size(); }

  RationalPoint evaluate(const RationalPoint& x) const {
    RatVector out(offset.size());
    for (std::size_t r = 0; r < offset.size(); ++r) {
      Rational acc(offset[r]);
      for (std::size_t c = 0; c < x.dimension(); ++c) acc += matrix[r][c] * x.coords[c];
      out[r] = acc;
    }
    return RationalPoint(std::move(out));
  }

  bool operator==(const AffineZMap&) const = default;
};

inline AffineZMap make_affine_map(IntMatrix matrix, IntVector offset, RationalSimplex domain) {
  for (const auto& row : matrix)
    if (row.size() != domain.ambient_dimension()) throw DimensionMismatch("affine map column count");
  if (matrix.size() != offset.size()) throw DimensionMismatch("affine map row count");
  return AffineZMap{std::move(matrix), std::move(offset), std::move(domain)};
}

/// f(x) for x in f's domain. den(f x) divides den(x).
inline RationalPoint apply_affine(const AffineZMap& f, const RationalPoint& x) {
  if (!f.domain.contains(x)) throw OutsideDomain("point lies outside the map's domain simplex");
  return f.evaluate(x);
}

class NonIntegerAffineExtension : public PropertyViolation {
public:
  NonIntegerAffineExtension(RatMatrix matrix, RatVector offset)
      : PropertyViolation("affine extension has non-integer coefficients"),
        matrix_(std::move(matrix)), offset_(std::move(offset)) {}
  const RatMatrix& matrix() const { return matrix_; }
  const RatVector& offset() const { return offset_; }

private:
  RatMatrix matrix_;
  RatVector offset_;
};

/// The affine map sending vertex i of src to images[i].
///
/// On a full-dimensional simplex the affine map is unique. When the
/// vertices instead form a linear basis of the ambient space (as for
/// Delta_k), the map is taken linear (offset 0), which is the unique such
/// extension. Other configurations are rejected.
inline AffineZMap affine_extension(const RationalSimplex& src, const std::vector<RationalPoint>& images) {
  const auto& vs = src.vertices();
  if (images.size() != vs.size()) throw DimensionMismatch("need one image per vertex");
  const std::size_t d = src.ambient_dimension();
  const std::size_t target = images[0].dimension();
  for (const auto& p : images)
    if (p.dimension() != target) throw DimensionMismatch("images of different dimensions");

  bool with_offset;
  if (vs.size() == d + 1) {
    with_offset = true;
  } else {
    RatMatrix cols(d, RatVector(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t r = 0; r < d; ++r) cols[r][i] = vs[i].coords[r];
    if (vs.size() != d || linalg::rank(cols) != d)
      throw InputError("affine extension is not determined by the vertices of this simplex");
    with_offset = false;
  }

  const std::size_t unknowns = d + (with_offset ? 1 : 0);
  RatMatrix system(vs.size(), RatVector(unknowns));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) system[i][c] = vs[i].coords[c];
    if (with_offset) system[i][d] = Rational(1);
  }
  RatMatrix rmat(target, RatVector(d));
  RatVector roff(target, Rational(0));
  for (std::size_t r = 0; r < target; ++r) {
    RatVector rhs;
    for (const auto& p : images) rhs.push_back(p.coords[r]);
    auto sol = linalg::solve(system, rhs);
    if (!sol.consistent || !sol.unique) throw Error("affine extension: singular vertex system");
    for (std::size_t c = 0; c < d; ++c) rmat[r][c] = sol.x[c];
    if (with_offset) roff[r] = sol.x[d];
  }
  IntMatrix matrix(target, IntVector(d));
  IntVector offset(target);
  bool integral = true;
  for (std::size_t r = 0; r < target; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (rmat[r][c].denominator() != 1) integral = false;
      matrix[r][c] = rmat[r][c].numerator();
    }
    if (roff[r].denominator() != 1) integral = false;
    offset[r] = roff[r].numerator();
  }
  if (!integral) throw NonIntegerAffineExtension(std::move(rmat), std::move(roff));
  return AffineZMap{std::move(matrix), std::move(offset), src};
}

/// The image of a simplex under an affine map is the convex hull of the
/// vertex images, and the vertices of the target are its extreme points,
/// so f is onto the target iff every target vertex is a vertex image.
inline bool is_surjective_onto_simplex(const AffineZMap& f, const RationalSimplex& target) {
  std::vector<RationalPoint> images;
  for (const auto& v : f.domain.vertices()) {
    RationalPoint y = f.evaluate(v);
    if (y.dimension() != target.ambient_dimension() || !target.contains(y))
      throw OutsideDomain("image of the domain is not contained in the target simplex");
    images.push_back(std::move(y));
  }
  for (const auto& w : target.vertices())
    if (std::find(images.begin(), images.end(), w) == images.end()) return false;
  return true;
}

}  // namespace mvstate
