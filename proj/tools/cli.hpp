/*
 * Copyright 2026 The comod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. `run` is separate from main() so tests can drive it
// in-process with captured streams.
//
// Exit codes: 0 success or pass, 1 axiom fail or fit refusal, 2 usage/IO error.

#ifndef COMOD_TOOLS_CLI_HPP
#define COMOD_TOOLS_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <comod/comod.hpp>

namespace comod::cli {

struct Options {
  std::string verb;
  std::string integral;
  std::string fn;
  std::string capacity_path;
  std::string phi_path;
  std::string x;
  std::string box;
  std::string codomain;
  std::size_t k = 5;
  std::string axioms;
  std::string fit;
  std::string side = "pos";
  std::uint64_t seed = 1;
  std::size_t n = 2;
  std::string role = "signed";
  std::string interval = "[0,1]";
  std::string format = "text";
  std::string mode = "rational";
  std::string eps = "1/1000000000";
};

/// "1e-9", "1/1000000000" and "1/10^9" all work.
inline double parse_eps(const std::string& text) {
  auto caret = text.find('^');
  if (caret == std::string::npos) return Rational::parse(text).to_double();
  auto slash = text.find('/');
  if (slash == std::string::npos || slash > caret) throw error(errc::parse_error, "eps must look like p/b^e");
  const Rational num = Rational::parse(text.substr(0, slash));
  const Rational base = Rational::parse(text.substr(slash + 1, caret - slash - 1));
  const long exponent = std::stol(text.substr(caret + 1));
  if (exponent < 0 || exponent > 64) throw error(errc::parse_error, "eps exponent out of range");
  Rational den(1);
  for (long i = 0; i < exponent; ++i) den *= base;
  return (num / den).to_double();
}

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <Scalar S>
class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out), json_(opt.format == "json") {
    tol_.eps = parse_eps(opt.eps);
    if (tol_.eps < 0) throw usage_error("--eps must be nonnegative");
  }

  int run() {
    if (opt_.verb == "eval") return eval();
    if (opt_.verb == "audit") return audit_verb();
    if (opt_.verb == "fit") return fit_verb();
    if (opt_.verb == "gen") return gen();
    throw usage_error("unknown verb '" + opt_.verb + "'");
  }

 private:
  void header() {
    if (!scalar_traits<S>::exact && !json_) out_ << "# mode: float (eps=" << tol_.eps << ")\n";
  }

  json base_json() const {
    json j;
    j["mode"] = std::string(scalar_traits<S>::mode_name);
    if (!scalar_traits<S>::exact) j["eps"] = tol_.eps;
    return j;
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  SetFunction<S> capacity() const {
    if (opt_.capacity_path.empty()) throw usage_error("--capacity FILE is required");
    return capacity_from_json<S>(read_json_file(opt_.capacity_path)).function;
  }

  std::optional<TransformFn<S>> phi() const {
    if (opt_.phi_path.empty()) return std::nullopt;
    return transform_from_json<S>(read_json_file(opt_.phi_path));
  }

  TransformFn<S> require_phi() const {
    auto p = phi();
    if (!p) throw usage_error("--phi FILE is required");
    return *p;
  }

  /// Sugeno-type integrals need an I-valued capacity; a plain capacity is
  /// read as I-valued over [μ(∅), μ(X)].
  static SetFunction<S> as_ivalued(const SetFunction<S>& mu) {
    if (mu.is_ivalued()) return mu;
    const S& lo = mu.values().front();
    const S& hi = mu.values().back();
    if (!(lo < hi)) throw error(errc::bad_role, "Sugeno integrals need an I-valued capacity with mu(empty) < mu(X)");
    return mu.with_codomain(Interval<S>(lo, hi));
  }

  Function<S> builtin(const std::string& name) const {
    if (name == "mean") {
      return make_function<S>(opt_.n, [](std::span<const S> x) { return arithmetic_mean<S>(x); }, "mean");
    }
    SetFunction<S> v = capacity();
    const std::size_t n = v.n();
    if (name == "choquet")
      return make_function<S>(n, [v](std::span<const S> x) { return choquet<S>(v, x); }, name);
    if (name == "choquet-plus")
      return make_function<S>(n, [v](std::span<const S> x) { return choquet<S>(v, positive_part<S>(x)); }, name);
    if (name == "symmetric")
      return make_function<S>(n, [v](std::span<const S> x) { return symmetric_choquet<S>(v, x, Checking::off); }, name);
    if (name == "sugeno") {
      auto mu = as_ivalued(v);
      return make_function<S>(n, [mu](std::span<const S> x) { return sugeno<S>(mu, x); }, name);
    }
    if (name == "shilkret")
      return make_function<S>(n, [v](std::span<const S> x) { return shilkret<S>(v, x); }, name);
    if (name == "quasi-choquet") {
      auto p = require_phi();
      return make_function<S>(n, [v, p](std::span<const S> x) { return quasi_choquet<S>(v, p, x); }, name);
    }
    if (name == "symmetric-quasi-choquet") {
      auto p = require_phi();
      return make_function<S>(
          n, [v, p](std::span<const S> x) { return symmetric_quasi_choquet<S>(v, p, x, Checking::off); }, name);
    }
    if (name == "quasi-sugeno") {
      auto p = require_phi();
      auto mu = as_ivalued(v);
      return make_function<S>(n, [mu, p](std::span<const S> x) { return quasi_sugeno<S>(mu, p, x); }, name);
    }
    throw usage_error("unknown function '" + name + "'");
  }

  int eval() {
    if (opt_.integral.empty()) throw usage_error("--integral is required");
    if (opt_.x.empty()) throw usage_error("--x is required");
    const std::vector<S> x = parse_tuple<S>(opt_.x);
    static const std::vector<std::string> known{"choquet", "symmetric", "sugeno", "quasi-choquet", "quasi-sugeno",
                                                "shilkret"};
    if (std::find(known.begin(), known.end(), opt_.integral) == known.end())
      throw usage_error("unknown integral '" + opt_.integral + "'");
    Function<S> f = builtin(opt_.integral);
    const S value = f(x);
    if (json_) {
      json j = base_json();
      j["integral"] = opt_.integral;
      j["x"] = tuple_to_json<S>(x);
      j["value"] = scalar_to_json(value);
      emit(j);
    } else {
      header();
      out_ << to_string(value) << "\n";
    }
    return 0;
  }

  Interval<S> box() const {
    if (opt_.box.empty()) throw usage_error("--box is required");
    return parse_interval<S>(opt_.box);
  }

  GridSpec<S> grid() const {
    if (opt_.k < 2) throw usage_error("--k must be at least 2");
    return GridSpec<S>(box(), opt_.k);
  }

  std::vector<Axiom> axiom_list(bool have_phi) const {
    std::vector<Axiom> out;
    if (opt_.axioms.empty() || opt_.axioms == "all") {
      for (Axiom a : all_axioms)
        if (have_phi || !requires_transform(a)) out.push_back(a);
      return out;
    }
    std::stringstream ss(opt_.axioms);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      out.push_back(parse_axiom(item));
    }
    if (out.empty()) throw usage_error("--axioms is empty");
    return out;
  }

  static std::string operands_text(const Operands<S>& op) {
    std::string s;
    auto add = [&](const std::string& part) { s += (s.empty() ? "" : " ") + part; };
    if (op.x) add("x=" + format_tuple<S>(*op.x));
    if (op.y) add("x'=" + format_tuple<S>(*op.y));
    if (op.t) add("t=" + to_string(*op.t));
    if (op.c) add("c=" + to_string(*op.c));
    if (op.subset) add("S=" + op.subset->str());
    return s;
  }

  void witness_text(const Witness<S>& w) {
    out_ << "    witness: " << operands_text(w.operands) << "\n";
    out_ << "    lhs=" << to_string(w.lhs) << (w.relation == Relation::equal ? " != " : " > ")
         << "rhs=" << to_string(w.rhs) << "\n";
  }

  int audit_verb() {
    if (opt_.fn.empty()) throw usage_error("--fn is required");
    Function<S> f = builtin(opt_.fn);
    auto p = phi();
    const auto axioms = axiom_list(p.has_value());
    for (Axiom a : axioms)
      if (requires_transform(a) && !p)
        throw error(errc::missing_transform, std::string(axiom_name(a)) + " needs --phi");
    AuditResult<S> result = audit(f, grid(), axioms, p ? &*p : nullptr, tol_);
    if (json_) {
      json j = base_json();
      j["fn"] = opt_.fn;
      j["box"] = opt_.box;
      j["k"] = opt_.k;
      json body = audit_to_json(result);
      j["reports"] = body["reports"];
      j["summary"] = body["summary"];
      emit(j);
    } else {
      header();
      out_ << "audit of " << opt_.fn << " on " << grid().box.str() << ", k=" << opt_.k << " (verdicts hold on this grid)\n";
      for (const auto& r : result.reports) {
        out_ << "  " << std::left << std::setw(24) << axiom_name(r.axiom) << verdict_name(r.verdict) << "  tested "
             << r.tested << ", skipped " << r.skipped << "\n";
        if (r.witness) witness_text(*r.witness);
      }
      out_ << "summary:\n";
      for (const auto& c : result.summary) out_ << "  " << c.label << ": " << c.status << "\n";
    }
    return result.all_passed() ? 0 : 1;
  }

  int refusal(const Refusal<S>& r) {
    if (json_) {
      json j = base_json();
      j["fit"] = opt_.fit;
      const json body = refusal_to_json(r);
      for (const auto& [key, value] : body.items()) j[key] = value;
      emit(j);
    } else {
      header();
      out_ << "refused: " << r.condition << "\n  " << r.detail << "\n";
      if (r.witness) witness_text(*r.witness);
    }
    return 1;
  }

  int fit_verb() {
    if (opt_.fit.empty()) throw usage_error("--fit is required");
    if (opt_.fn.empty()) throw usage_error("--fn is required");
    Function<S> f = builtin(opt_.fn);
    const GridSpec<S> spec = grid();
    json j = base_json();
    j["fit"] = opt_.fit;
    if (opt_.fit == "signed-choquet" || opt_.fit == "symmetric") {
      auto result = opt_.fit == "signed-choquet" ? fit_signed_choquet(f, spec) : fit_symmetric_choquet(f, spec);
      if (auto* r = std::get_if<Refusal<S>>(&result)) return refusal(*r);
      const auto& v = std::get<SetFunction<S>>(result);
      j["capacity"] = capacity_to_json(v, Role::signed_capacity);
      if (!json_) {
        header();
        out_ << "fitted v:";
        for (std::uint32_t mask = 0; mask < v.size(); ++mask)
          out_ << " " << Subset(mask).str() << "=" << to_string(v.at(mask));
        out_ << "\n";
        return 0;
      }
    } else if (opt_.fit == "quasi-choquet") {
      auto result = fit_quasi_choquet(f, spec, parse_side(opt_.side));
      if (auto* r = std::get_if<Refusal<S>>(&result)) return refusal(*r);
      const auto& q = std::get<QuasiChoquetFit<S>>(result);
      j["capacity"] = capacity_to_json(q.v, Role::signed_capacity);
      j["phi"] = transform_to_json(q.phi);
      j["pivot"] = q.pivot.elements();
      if (!json_) {
        header();
        out_ << "fitted v:";
        for (std::uint32_t mask = 0; mask < q.v.size(); ++mask)
          out_ << " " << Subset(mask).str() << "=" << to_string(q.v.at(mask));
        out_ << "\nfitted phi: " << q.phi.describe() << "\npivot S0: " << q.pivot.str() << "\n";
        return 0;
      }
    } else if (opt_.fit == "quasi-sugeno") {
      const Interval<S> codomain = opt_.codomain.empty() ? spec.box : parse_interval<S>(opt_.codomain);
      auto result = factorize_quasi_sugeno(f, spec, codomain);
      if (auto* r = std::get_if<Refusal<S>>(&result)) return refusal(*r);
      const auto& form = std::get<QuasiSugenoForm<S>>(result);
      j["form"] = quasi_sugeno_form_to_json(form);
      if (!json_) {
        header();
        out_ << "mu:";
        for (std::uint32_t mask = 0; mask < form.mu_values.size(); ++mask)
          out_ << " " << Subset(mask).str() << "=" << to_string(form.mu_values[mask]);
        out_ << "\nphi:";
        for (std::size_t i = 0; i < form.axis.size(); ++i)
          out_ << " " << to_string(form.axis[i]) << "->" << to_string(form.phi_values[i]);
        out_ << "\n";
        return 0;
      }
    } else {
      throw usage_error("unknown fit '" + opt_.fit + "'");
    }
    emit(j);
    return 0;
  }

  int gen() {
    const Role role = parse_role(opt_.role);
    const Interval<S> interval = parse_interval<S>(opt_.interval);
    SetFunction<S> v = random_set_function<S>(opt_.seed, opt_.n, role, interval);
    out_ << capacity_to_json(v, role).dump(2) << "\n";
    return 0;
  }

  const Options& opt_;
  std::ostream& out_;
  bool json_;
  Tolerance tol_;
};

inline int selftest_verb(const Options& opt, std::ostream& out) {
  auto first = run_selftest();
  auto second = run_selftest();
  const std::string a = selftest_to_json(first).dump(2);
  const std::string b = selftest_to_json(second).dump(2);
  first.push_back(determinism_result(a, b, 0));
  const bool all = std::all_of(first.begin(), first.end(), [](const CriterionResult& r) { return r.correct; });
  if (opt.format == "json") {
    out << selftest_to_json(first).dump(2) << "\n";
  } else {
    for (const auto& r : first) {
      out << (r.correct ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
  }
  return all ? 0 : 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"comod: discrete integrals, axiom audits and decompositions"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--mode", opt.mode, "rational or float")->check(CLI::IsMember({"rational", "float"}));
    sub->add_option("--eps", opt.eps, "absolute tolerance, float mode only");
  };
  auto with_functions = [&](CLI::App* sub) {
    sub->add_option("--capacity", opt.capacity_path, "capacity JSON file");
    sub->add_option("--phi", opt.phi_path, "transform JSON file");
    sub->add_option("--n", opt.n, "arity (for --fn mean)");
  };
  auto with_grid = [&](CLI::App* sub) {
    sub->add_option("--box", opt.box, "domain interval, e.g. [-1,1]")->required();
    sub->add_option("--k", opt.k, "equispaced points per axis");
  };

  auto* eval = app.add_subcommand("eval", "evaluate an integral at a tuple");
  eval->add_option("--integral", opt.integral, "choquet|symmetric|sugeno|quasi-choquet|quasi-sugeno|shilkret")->required();
  eval->add_option("--x", opt.x, "tuple, e.g. [1/5,7/10]")->required();
  with_functions(eval);
  common(eval);

  auto* audit_cmd = app.add_subcommand("audit", "audit a function against axioms on a grid");
  audit_cmd->add_option("--fn", opt.fn, "function to audit")->required();
  audit_cmd->add_option("--axioms", opt.axioms, "comma-separated axiom ids (default: all)");
  with_functions(audit_cmd);
  with_grid(audit_cmd);
  common(audit_cmd);

  auto* fit = app.add_subcommand("fit", "extract a representation or refuse with a witness");
  fit->add_option("--fit", opt.fit, "signed-choquet|symmetric|quasi-choquet|quasi-sugeno")->required();
  fit->add_option("--fn", opt.fn, "function to fit")->required();
  fit->add_option("--side", opt.side, "pos or neg (quasi-choquet)");
  fit->add_option("--codomain", opt.codomain, "codomain interval (quasi-sugeno; default: the box)");
  with_functions(fit);
  with_grid(fit);
  common(fit);

  auto* gen = app.add_subcommand("gen", "generate a seeded random set function");
  gen->add_option("--seed", opt.seed, "seed");
  gen->add_option("--n", opt.n, "number of criteria (<= 8)");
  gen->add_option("--role", opt.role, "capacity|signed|ivalued");
  gen->add_option("--interval", opt.interval, "codomain for ivalued, e.g. [0,1]");
  common(gen);

  auto* self = app.add_subcommand("selftest", "run the acceptance battery");
  common(self);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  opt.verb = app.get_subcommands().front()->get_name();

  try {
    if (opt.verb == "selftest") return selftest_verb(opt, out);
    if (opt.mode == "float") return Runner<double>(opt, out).run();
    return Runner<Rational>(opt, out).run();
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace comod::cli

#endif  // COMOD_TOOLS_CLI_HPP
