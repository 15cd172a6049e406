#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "mvstate/algebra.hpp"

namespace mvstate {

/// Syntax tree over variables, 0, (+) and neg. The remaining connectives
/// are sugar and disappear under expand().
class MvTerm {
public:
  enum class Kind { Var, Zero, One, Oplus, Neg, Odot, Ominus, Meet, Join };

  static MvTerm var(std::string name) { return MvTerm(Kind::Var, std::move(name)); }
  static MvTerm zero() { return MvTerm(Kind::Zero); }
  static MvTerm one() { return MvTerm(Kind::One); }
  static MvTerm neg(MvTerm a) { return MvTerm(Kind::Neg, std::move(a)); }
  static MvTerm binary(Kind k, MvTerm a, MvTerm b) { return MvTerm(k, std::move(a), std::move(b)); }
  static MvTerm oplus(MvTerm a, MvTerm b) { return binary(Kind::Oplus, std::move(a), std::move(b)); }
  static MvTerm odot(MvTerm a, MvTerm b) { return binary(Kind::Odot, std::move(a), std::move(b)); }
  static MvTerm ominus(MvTerm a, MvTerm b) { return binary(Kind::Ominus, std::move(a), std::move(b)); }
  static MvTerm meet(MvTerm a, MvTerm b) { return binary(Kind::Meet, std::move(a), std::move(b)); }
  static MvTerm join(MvTerm a, MvTerm b) { return binary(Kind::Join, std::move(a), std::move(b)); }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const MvTerm& lhs() const { return *lhs_; }
  const MvTerm& rhs() const { return *rhs_; }

  bool is_core() const {
    switch (kind_) {
      case Kind::Var:
      case Kind::Zero: return true;
      case Kind::Neg: return lhs().is_core();
      case Kind::Oplus: return lhs().is_core() && rhs().is_core();
      default: return false;
    }
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    collect(out);
    return out;
  }

  /// ASCII rendering in the input syntax; fully parenthesized binaries.
  std::string to_string() const {
    switch (kind_) {
      case Kind::Var: return name_;
      case Kind::Zero: return "0";
      case Kind::One: return "1";
      case Kind::Neg: return "neg(" + lhs().to_string() + ")";
      default: break;
    }
    return "(" + lhs().to_string() + " " + symbol(kind_) + " " + rhs().to_string() + ")";
  }

  static const char* symbol(Kind k) {
    switch (k) {
      case Kind::Oplus: return "(+)";
      case Kind::Odot: return "(.)";
      case Kind::Ominus: return "(-)";
      case Kind::Meet: return "/\\";
      case Kind::Join: return "\\/";
      default: return "?";
    }
  }

  friend bool operator==(const MvTerm& a, const MvTerm& b) {
    if (a.kind_ != b.kind_ || a.name_ != b.name_) return false;
    if (static_cast<bool>(a.lhs_) != static_cast<bool>(b.lhs_)) return false;
    if (static_cast<bool>(a.rhs_) != static_cast<bool>(b.rhs_)) return false;
    return (!a.lhs_ || *a.lhs_ == *b.lhs_) && (!a.rhs_ || *a.rhs_ == *b.rhs_);
  }

private:
  explicit MvTerm(Kind k, std::string name = {}) : kind_(k), name_(std::move(name)) {}
  MvTerm(Kind k, MvTerm a) : kind_(k), lhs_(std::make_shared<const MvTerm>(std::move(a))) {}
  MvTerm(Kind k, MvTerm a, MvTerm b)
      : kind_(k),
        lhs_(std::make_shared<const MvTerm>(std::move(a))),
        rhs_(std::make_shared<const MvTerm>(std::move(b))) {}

  void collect(std::set<std::string>& out) const {
    if (kind_ == Kind::Var) out.insert(name_);
    if (lhs_) lhs_->collect(out);
    if (rhs_) rhs_->collect(out);
  }

  Kind kind_;
  std::string name_;
  std::shared_ptr<const MvTerm> lhs_;
  std::shared_ptr<const MvTerm> rhs_;
};

/// Rewrites derived connectives into (+), neg and 0:
///   1 = neg 0,  a (.) b = neg(neg a (+) neg b),  a (-) b = a (.) neg b,
///   a /\ b = a (.) (neg a (+) b),  a \/ b = neg(neg a /\ neg b).
inline MvTerm expand(const MvTerm& t) {
  using K = MvTerm::Kind;
  switch (t.kind()) {
    case K::Var:
    case K::Zero: return t;
    case K::One: return MvTerm::neg(MvTerm::zero());
    case K::Neg: return MvTerm::neg(expand(t.lhs()));
    case K::Oplus: return MvTerm::oplus(expand(t.lhs()), expand(t.rhs()));
    default: break;
  }
  const MvTerm a = expand(t.lhs());
  const MvTerm b = expand(t.rhs());
  auto odot = [](const MvTerm& x, const MvTerm& y) {
    return MvTerm::neg(MvTerm::oplus(MvTerm::neg(x), MvTerm::neg(y)));
  };
  auto meet = [&](const MvTerm& x, const MvTerm& y) {
    return odot(x, MvTerm::oplus(MvTerm::neg(x), y));
  };
  switch (t.kind()) {
    case K::Odot: return odot(a, b);
    case K::Ominus: return odot(a, MvTerm::neg(b));
    case K::Meet: return meet(a, b);
    case K::Join: return MvTerm::neg(meet(MvTerm::neg(a), MvTerm::neg(b)));
    default: break;
  }
  throw Error("expand: unreachable term kind");
}

using Environment = std::map<std::string, MvElement>;

namespace detail {
inline MvElement eval_core(const MvTerm& t, const Environment& env, const FiniteMvAlgebra& A) {
  using K = MvTerm::Kind;
  switch (t.kind()) {
    case K::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw InputError("unbound variable '" + t.name() + "'");
      A.require(it->second);
      return it->second;
    }
    case K::Zero: return A.zero();
    case K::Neg: return neg(A, eval_core(t.lhs(), env, A));
    case K::Oplus: return oplus(A, eval_core(t.lhs(), env, A), eval_core(t.rhs(), env, A));
    default: throw Error("eval_core: derived connective survived expansion");
  }
}
}  // namespace detail

/// Evaluates t in A; only (+) and neg are ever applied.
inline MvElement eval_term(const MvTerm& t, const Environment& env, const FiniteMvAlgebra& A) {
  return detail::eval_core(t.is_core() ? t : expand(t), env, A);
}

struct IdentityReport {
  bool holds = true;
  Environment witness;
  std::size_t tuples_checked = 0;
};

/// Checks lhs = rhs for every assignment of the variables in A.
inline IdentityReport check_identity(const FiniteMvAlgebra& A, const MvTerm& lhs, const MvTerm& rhs,
                                     std::size_t cap = kDefaultTupleCap) {
  auto vars = lhs.variables();
  for (const auto& v : rhs.variables()) vars.insert(v);
  const std::vector<std::string> names(vars.begin(), vars.end());
  std::size_t total = 1;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (total > cap / A.size()) throw CapExceeded("identity check exceeds the tuple cap");
    total *= A.size();
  }
  const MvTerm l = expand(lhs), r = expand(rhs);
  IdentityReport report;
  std::vector<std::size_t> idx(names.size(), 0);
  for (std::size_t step = 0; step < total; ++step) {
    Environment env;
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = A.element(idx[i]);
    ++report.tuples_checked;
    if (eval_term(l, env, A) != eval_term(r, env, A)) {
      report.holds = false;
      report.witness = std::move(env);
      return report;
    }
    for (std::size_t i = names.size(); i-- > 0;) {
      if (++idx[i] < A.size()) break;
      idx[i] = 0;
    }
  }
  return report;
}

}  // namespace mvstate
