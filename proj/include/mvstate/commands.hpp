#pragma once

// Command-line front end. Every command writes one JSON report to the
// output stream and returns the process exit code:
//   0  success / the checked property holds
//   1  the checked property fails (the report carries a witness)
//   2  input error (bad syntax, inconsistent sizes, caps exceeded)

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvstate/io.hpp"
#include "mvstate/term.hpp"

namespace mvstate::cli {

using nlohmann::json;

struct Outcome {
  int exit_code = 0;
  json payload;
};

/// Inline JSON, or "@path" to read the JSON from a file.
inline json load_json(const std::string& text) {
  std::string source = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InputError("cannot open '" + text.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    source = ss.str();
  }
  try {
    return json::parse(source);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

/// Algebra flag: a signature literal, JSON, or @file.
inline FiniteMvAlgebra load_algebra(const std::string& text) {
  if (!text.empty() && (text[0] == '{' || text[0] == '@' || text[0] == '"')) return io::algebra_from_json(load_json(text));
  return parse_algebra(text);
}

namespace detail {

inline Outcome algebra_check(const std::string& alg, const std::string& identity, const std::string& gens,
                             std::size_t cap) {
  const FiniteMvAlgebra A = load_algebra(alg);
  json p{{"algebra", A.to_string()}, {"size", A.size()}};
  json mult = json::array();
  for (const auto& a : atoms(A)) mult.push_back(atom_multiplicity(A, a));
  p["atoms"] = io::to_json(atoms(A));
  p["multiplicities"] = mult;
  const AxiomReport axioms = check_mv_axioms(A, cap);
  json ax{{"ok", axioms.ok}};
  if (!axioms.ok) {
    ax["identity"] = axioms.identity;
    json w = json::array();
    for (auto i : axioms.witness) w.push_back(io::to_json(A.element(i)));
    ax["witness"] = w;
  }
  p["axioms"] = ax;
  const RadicalReport rad = radical_finite(A);
  p["radical"] = io::to_json(rad.radical);
  bool ok = axioms.ok;
  if (!identity.empty()) {
    const auto [lhs, rhs] = parse_identity(identity);
    const IdentityReport r = check_identity(A, lhs, rhs, cap);
    json id{{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"holds", r.holds}, {"tuples", r.tuples_checked}};
    if (!r.holds) {
      json w = json::object();
      for (const auto& [name, value] : r.witness) w[name] = io::to_json(value);
      id["witness"] = w;
    }
    p["identity"] = id;
    ok = ok && r.holds;
  }
  if (!gens.empty()) {
    const Subalgebra sub = subalgebra_generated(A, io::elements_from_json(A, load_json(gens)));
    p["subalgebra"] = json{{"elements", io::to_json(sub.elements)},
                           {"atoms", io::to_json(sub.atoms)},
                           {"signature", sub.presented().to_string()}};
  }
  return {ok ? 0 : 1, p};
}

inline Outcome state_check(const std::string& state) {
  const StateTable t = io::state_from_json(load_json(state));
  const auto axioms = check_state_axioms(t);
  const auto additive = check_state_additive(t);
  json p{{"state", io::to_json(t, true)},
         {"axioms", io::to_json(axioms)},
         {"additive", io::to_json(additive)},
         {"agree", axioms.ok == additive.ok}};
  return {axioms.ok && additive.ok ? 0 : 1, p};
}

inline Outcome state_enumerate(const std::string& dom, const std::string& cod) {
  const FiniteMvAlgebra A = load_algebra(dom), N = load_algebra(cod);
  json states = json::array();
  const auto all = enumerate_state_atom_values(A, N);
  for (const auto& vals : all) states.push_back(io::to_json(vals));
  return {0, json{{"domain", A.to_string()}, {"codomain", N.to_string()}, {"count", all.size()}, {"atom_values", states}}};
}

inline Outcome state_extend(const std::string& dom, const std::string& cod, const std::string& values) {
  const FiniteMvAlgebra A = load_algebra(dom), N = load_algebra(cod);
  try {
    const StateTable t = extend_from_atoms(A, N, io::elements_from_json(N, load_json(values)));
    return {0, json{{"state", io::to_json(t, true)}, {"axioms", io::to_json(check_state_axioms(t))}}};
  } catch (const PartitionOfUnityViolation& e) {
    return {1, json{{"error", "PartitionOfUnityViolation"}, {"sum", e.sum()}, {"unit", e.unit()}}};
  }
}

inline Outcome state_harness(const std::string& dom, const std::string& cod, bool sample, std::uint64_t seed) {
  const FiniteMvAlgebra A = load_algebra(dom), N = load_algebra(cod);
  HarnessOptions opt;
  opt.allow_sampling = sample;
  opt.seed = seed;
  const HarnessReport r = prop34_equivalence_harness(A, N, opt);
  json p{{"domain", A.to_string()},
         {"codomain", N.to_string()},
         {"exhaustive", r.exhaustive},
         {"functions", r.functions_checked},
         {"states", r.states},
         {"agree", r.agree}};
  if (!r.agree) p["disagreement"] = io::to_json(r.disagreement);
  return {r.agree ? 0 : 1, p};
}

inline Outcome universal_build(const std::string& alg) {
  return {0, io::to_json(universal_state(load_algebra(alg)))};
}

inline Outcome universal_verify(const std::string& dom, const std::string& cod) {
  const FiniteMvAlgebra A = load_algebra(dom), N = load_algebra(cod);
  const UniversalReport r = verify_universal_property(A, N);
  return {r.ok ? 0 : 1, json{{"domain", A.to_string()},
                             {"codomain", N.to_string()},
                             {"status", r.ok ? "bijection" : "failed"},
                             {"cardinalities", json{{"states", r.states}, {"dual_homs", r.dual_homs}}},
                             {"failures", r.failures}}};
}

inline Outcome dual_map(const std::string& hom) {
  const MvHom h = io::hom_from_json(load_json(hom));
  json p{{"hom", io::to_json(h)}, {"dual_map", dual_of_hom(h)}, {"injective", is_injective(h)}};
  bool ok = true;
  if (is_injective(h)) {
    const auto cert = upsilon_of_hom(h);
    p["upsilon"] = io::to_json(cert);
    ok = cert.ok();
  }
  return {ok ? 0 : 1, p};
}

inline Outcome chain_check(const std::string& chain) {
  const io::Chain c = io::chain_from_json(load_json(chain));
  const ChainReport r = colimit_chain_check(c.algebras, c.maps);
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back(io::to_json(s));
  return {r.ok ? 0 : 1, json{{"ok", r.ok}, {"simplices", r.simplices}, {"steps", steps}}};
}

inline Outcome geometry_den(const std::string& point) {
  const RationalPoint x = io::point_from_json(load_json(point));
  return {0, json{{"point", io::to_json(x)}, {"den", den(x)}}};
}

inline Outcome geometry_regular(const std::string& simplex) {
  const RationalSimplex s = io::simplex_from_json(load_json(simplex));
  json dens = json::array();
  for (const auto& v : s.vertices()) dens.push_back(den(v));
  const bool regular = is_regular_simplex(s);
  return {regular ? 0 : 1, json{{"simplex", io::to_json(s)}, {"vertex_dens", dens}, {"regular", regular}}};
}

inline Outcome geometry_points(const std::string& chains, Integer t) {
  const FiniteMvAlgebra A = load_algebra(chains);
  const auto pts = points_with_denominator_dividing(A.chains(), t);
  return {0, json{{"k", A.chains()}, {"t", t}, {"count", pts.size()}, {"points", io::to_json(pts)}}};
}

inline Outcome roundtrip_gamma_xi(const std::string& alg, Integer bound, const std::string& codomain) {
  const FiniteMvAlgebra A = load_algebra(alg);
  std::size_t phi_checked = 0, eps_checked = 0, state_checked = 0;
  json failures = json::array();
  for (const auto& a : A.elements()) {
    ++phi_checked;
    const XiVector v = canonicalize(phi(A, a));
    if (!(v == phi_vector(A, a)) || gamma_element(gamma_of(v.unit), v) != a) failures.push_back(json{{"phi", io::to_json(a)}});
  }
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    vectors *= static_cast<std::size_t>(2 * bound + 1);
    if (vectors > 10'000'000) throw CapExceeded("epsilon round trip: too many vectors");
  }
  IntVector v(A.rank(), -bound);
  for (std::size_t step = 0; step < vectors; ++step) {
    ++eps_checked;
    if (canonicalize(epsilon(A, v)).vector != v) failures.push_back(json{{"epsilon", v}});
    for (std::size_t i = A.rank(); i-- > 0;) {
      if (++v[i] <= bound) break;
      v[i] = -bound;
    }
  }
  if (!codomain.empty()) {
    for (const auto& s : enumerate_states(A, load_algebra(codomain))) {
      ++state_checked;
      if (gamma_restrict_state(xi_extend_state(s)) != s) failures.push_back(json{{"state", io::to_json(s)}});
    }
  }
  const bool ok = failures.empty();
  return {ok ? 0 : 1, json{{"algebra", A.to_string()},
                           {"phi_checked", phi_checked},
                           {"epsilon_checked", eps_checked},
                           {"states_checked", state_checked},
                           {"failures", failures}}};
}

inline Outcome affine_compare(const std::string& alg, Integer bound) {
  const FiniteMvAlgebra A = load_algebra(alg);
  const AffineRepReport r = affine_rep_compare(A, bound);
  return {r.ok ? 0 : 1, json{{"algebra", A.to_string()},
                             {"bound", bound},
                             {"points", r.points},
                             {"comparisons", r.comparisons},
                             {"agree", r.ok},
                             {"failures", r.failures}}};
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact computation with finite MV-algebras, their states, and universal states", "mvstate"};
  app.require_subcommand(1);
  std::function<Outcome()> action;
  std::string command;

  std::string algebra, domain, codomain, identity, generators, state, values, hom, chain, point, simplex;
  std::size_t cap = kDefaultTupleCap;
  bool sample = false;
  std::uint64_t seed = HarnessOptions{}.seed;
  Integer bound = 6, t = 1, xi_bound = 10;

  auto* c = app.add_subcommand("algebra-check", "check the MV-algebra axioms (and an optional identity)");
  c->add_option("--algebra", algebra, "signature, e.g. M3*M1*M2")->required();
  c->add_option("--identity", identity, "identity to check exhaustively, e.g. \"x (+) y = y (+) x\"");
  c->add_option("--generators", generators, "JSON element list; report the generated subalgebra");
  c->add_option("--cap", cap, "tuple cap per identity")->capture_default_str();
  c->callback([&] { command = "algebra-check"; action = [&] { return detail::algebra_check(algebra, identity, generators, cap); }; });

  c = app.add_subcommand("state-check", "check a state table against both state definitions");
  c->add_option("--state", state, "state JSON or @file")->required();
  c->callback([&] { command = "state-check"; action = [&] { return detail::state_check(state); }; });

  c = app.add_subcommand("state-enumerate", "list all states between two algebras");
  c->add_option("--domain", domain)->required();
  c->add_option("--codomain", codomain)->required();
  c->callback([&] { command = "state-enumerate"; action = [&] { return detail::state_enumerate(domain, codomain); }; });

  c = app.add_subcommand("state-extend", "extend atom values to a state");
  c->add_option("--domain", domain)->required();
  c->add_option("--codomain", codomain)->required();
  c->add_option("--atom-values", values, "JSON list of codomain elements")->required();
  c->callback([&] { command = "state-extend"; action = [&] { return detail::state_extend(domain, codomain, values); }; });

  c = app.add_subcommand("state-harness", "compare both state definitions over a function space");
  c->add_option("--domain", domain)->required();
  c->add_option("--codomain", codomain)->required();
  c->add_flag("--sample", sample, "sample when the space exceeds the exhaustive cap");
  c->add_option("--seed", seed)->capture_default_str();
  c->callback([&] { command = "state-harness"; action = [&] { return detail::state_harness(domain, codomain, sample, seed); }; });

  c = app.add_subcommand("universal-build", "print the universal state of an algebra");
  c->add_option("--algebra", algebra)->required();
  c->callback([&] { command = "universal-build"; action = [&] { return detail::universal_build(algebra); }; });

  c = app.add_subcommand("universal-verify", "check the universal property against a codomain");
  c->add_option("--domain", domain)->required();
  c->add_option("--codomain", codomain)->required();
  c->callback([&] { command = "universal-verify"; action = [&] { return detail::universal_verify(domain, codomain); }; });

  c = app.add_subcommand("dual-map", "dual point map of a homomorphism, with its affine extension");
  c->add_option("--hom", hom, "homomorphism JSON or @file")->required();
  c->callback([&] { command = "dual-map"; action = [&] { return detail::dual_map(hom); }; });

  c = app.add_subcommand("chain-check", "certify every transition of a chain of injective homomorphisms");
  c->add_option("--chain", chain, "chain JSON or @file")->required();
  c->callback([&] { command = "chain-check"; action = [&] { return detail::chain_check(chain); }; });

  auto* geo = app.add_subcommand("geometry", "rational geometry utilities");
  geo->require_subcommand(1);
  c = geo->add_subcommand("den", "denominator of a rational point");
  c->add_option("--point", point, "JSON array of \"p/q\" strings")->required();
  c->callback([&] { command = "geometry den"; action = [&] { return detail::geometry_den(point); }; });
  c = geo->add_subcommand("regular", "decide regularity of a rational simplex");
  c->add_option("--simplex", simplex, "JSON array of points")->required();
  c->callback([&] { command = "geometry regular"; action = [&] { return detail::geometry_regular(simplex); }; });
  c = geo->add_subcommand("points", "points of Delta_k whose denominator divides t");
  c->add_option("--k", algebra, "chains k as a signature (M1*M1) or {\"chains\":[1,1]}")->required();
  c->add_option("--t", t)->required();
  c->callback([&] { command = "geometry points"; action = [&] { return detail::geometry_points(algebra, t); }; });

  auto* rt = app.add_subcommand("roundtrip", "round-trip checks");
  rt->require_subcommand(1);
  c = rt->add_subcommand("gamma-xi", "phi / epsilon round trips, and Xi-extension of states");
  c->add_option("--algebra", algebra)->required();
  c->add_option("--bound", xi_bound, "|v_i| bound for epsilon")->capture_default_str();
  c->add_option("--codomain", codomain, "also round-trip every state into this codomain");
  c->callback([&] { command = "roundtrip gamma-xi"; action = [&] { return detail::roundtrip_gamma_xi(algebra, xi_bound, codomain); }; });

  c = app.add_subcommand("affine-compare", "compare the universal state with the evaluation map at rational points");
  c->add_option("--algebra", algebra)->required();
  c->add_option("--bound", bound, "largest point denominator")->capture_default_str();
  c->callback([&] { command = "affine-compare"; action = [&] { return detail::affine_compare(algebra, bound); }; });

  json report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report = json{{"command", command}, {"status", "error"}, {"error", e.what()}};
    out << report.dump(2) << "\n";
    return 2;
  }

  int code = 2;
  try {
    Outcome o = action();
    code = o.exit_code;
    report = json{{"command", command}, {"status", code == 0 ? "ok" : "fail"}, {"payload", std::move(o.payload)}};
  } catch (const PropertyViolation& e) {
    code = 1;
    report = json{{"command", command}, {"status", "fail"}, {"error", e.what()}};
  } catch (const std::exception& e) {
    code = 2;
    report = json{{"command", command}, {"status", "error"}, {"error", e.what()}};
  }
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace mvstate::cli
