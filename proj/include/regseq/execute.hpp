#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regseq/criteria.hpp"
#include "regseq/session.hpp"
#include "regseq/version.hpp"

namespace regseq::exec {

using ordered_json = nlohmann::ordered_json;

enum class Verb {
  check,
  strong_check,
  depth,
  local_depth,
  koszul,
  ass,
  ext,
  dim,
  theorem,
  corollary2,
  sop,
};

inline const char* verb_name(Verb v) {
  switch (v) {
    case Verb::check: return "check";
    case Verb::strong_check: return "strong-check";
    case Verb::depth: return "depth";
    case Verb::local_depth: return "local-depth";
    case Verb::koszul: return "koszul";
    case Verb::ass: return "ass";
    case Verb::ext: return "ext";
    case Verb::dim: return "dim";
    case Verb::theorem: return "theorem";
    case Verb::corollary2: return "corollary2";
    case Verb::sop: return "sop";
  }
  return "?";
}

inline std::optional<Verb> verb_from_name(const std::string& s) {
  static const std::map<std::string, Verb> table = {
      {"check", Verb::check},           {"strong-check", Verb::strong_check},
      {"depth", Verb::depth},           {"local-depth", Verb::local_depth},
      {"koszul", Verb::koszul},         {"ass", Verb::ass},
      {"ext", Verb::ext},               {"dim", Verb::dim},
      {"theorem", Verb::theorem},       {"corollary2", Verb::corollary2},
      {"sop", Verb::sop},
  };
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

struct Request {
  Verb verb = Verb::check;
  std::vector<std::string> args;  // positional tokens after the verb
  std::string format = "json";    // "json" | "text"
  std::optional<std::string> field_override;   // "q" | "gf:<p>"
  std::optional<unsigned> degree_cap_override;
  bool strict = false;
  bool forge_inconsistent = false;  // test hook: flips consistency flags
};

namespace detail {

// ---------------------------------------------------------------------------
// Binding session definitions to typed objects

template <class F>
class Binder {
 public:
  Binder(const session::SessionData& S, const F& field, unsigned cap)
      : S_(S), R_(make_ring(S, field, cap)) {}

  const PolyRing<F>& ring() const { return R_; }

  Polynomial<F> poly(const session::RawExpr& e) const {
    try {
      return R_.parse(e.text);
    } catch (const ParseError& pe) {
      throw session::remap(e, pe);
    }
  }

  const session::Definition& lookup(const std::string& name,
                                    session::DefKind want) const {
    const session::Definition* def = S_.find(name);
    if (def == nullptr) throw NameError("unknown name '" + name + "'");
    bool ok = def->kind == want;
    // Ideals and primes are interchangeable where an ideal is expected.
    if (want == session::DefKind::ideal &&
        def->kind == session::DefKind::prime)
      ok = true;
    if (want == session::DefKind::prime &&
        def->kind == session::DefKind::ideal)
      ok = true;
    if (!ok)
      throw NameError("'" + name + "' is a " + kind_name(def->kind) +
                      ", not a " + kind_name(want));
    return *def;
  }

  FPModule<F> module(const std::string& name) const {
    const auto& def = lookup(name, session::DefKind::module).module;
    if (def.is_free) {
      if (def.shifts.has_value())
        return FPModule<F>(R_, def.free_rank, {}, *def.shifts);
      return free_module(R_, def.free_rank, def.graded);
    }
    const unsigned rank = static_cast<unsigned>(def.matrix.size());
    const std::size_t cols = def.matrix.front().size();
    FreeModule<F> amb(R_, rank);
    std::vector<FreeElement<F>> gens;
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Polynomial<F>> comps;
      for (unsigned i = 0; i < rank; ++i)
        comps.push_back(poly(def.matrix[i][j]));
      gens.push_back(amb.from_components(comps));
    }
    try {
      if (def.graded) {
        std::vector<long> shifts =
            def.shifts.value_or(std::vector<long>(rank, 0));
        return FPModule<F>(R_, rank, gens, shifts);
      }
      return FPModule<F>(R_, rank, gens);
    } catch (const UngradedError& e) {
      throw UngradedError("module '" + name + "': " + e.what());
    }
  }

  std::vector<Polynomial<F>> sequence(const std::string& name) const {
    const auto& def = lookup(name, session::DefKind::sequence).list;
    std::vector<Polynomial<F>> out;
    for (const auto& e : def.entries) out.push_back(poly(e));
    return out;
  }

  Ideal<F> ideal(const std::string& name) const {
    const auto& def = lookup(name, session::DefKind::ideal).list;
    std::vector<Polynomial<F>> gens;
    for (const auto& e : def.entries) gens.push_back(poly(e));
    return Ideal<F>(R_, gens);
  }

  PrimeCandidate<F> prime(const std::string& name) const {
    const auto& def = lookup(name, session::DefKind::prime).list;
    std::vector<Polynomial<F>> gens;
    for (const auto& e : def.entries) gens.push_back(poly(e));
    return PrimeCandidate<F>::make(name, Ideal<F>(R_, gens));
  }

 private:
  static PolyRing<F> make_ring(const session::SessionData& S, const F& field,
                               unsigned cap) {
    if (S.vars.empty())
      throw PrecondError("the session declares no ring");
    TermOrder ord = TermOrder::grevlex();
    if (S.order_name == "lex")
      ord = TermOrder::lex();
    else if (S.order_name == "block")
      ord = TermOrder::elim_block(S.block_split,
                                  static_cast<unsigned>(S.vars.size()));
    return PolyRing<F>(S.vars, field, ord, cap);
  }

  const session::SessionData& S_;
  PolyRing<F> R_;
};

// ---------------------------------------------------------------------------
// Argument shapes

inline std::vector<std::string> drop_fillers(
    const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args)
    if (a != "on" && a != "at") out.push_back(a);
  return out;
}

[[noreturn]] inline void usage_error(Verb v) {
  std::string shape;
  switch (v) {
    case Verb::check: shape = "check <seq> on <module>"; break;
    case Verb::strong_check: shape = "strong-check <seq> on <module>"; break;
    case Verb::depth: shape = "depth <module>"; break;
    case Verb::local_depth: shape = "local-depth <module> at <prime>"; break;
    case Verb::koszul: shape = "koszul <seq> on <module>"; break;
    case Verb::ass: shape = "ass <module>"; break;
    case Verb::ext: shape = "ext <i> <ideal> on <module>"; break;
    case Verb::dim: shape = "dim <module>"; break;
    case Verb::theorem:
      shape = "theorem <seq> on <module> [using <prime>...]";
      break;
    case Verb::corollary2:
      shape = "corollary2 <f> <g> on <module>";
      break;
    case Verb::sop: shape = "sop <seq> on <module>"; break;
  }
  throw PrecondError("usage: " + shape);
}

// ---------------------------------------------------------------------------
// Rendering

template <class F>
std::string element_str(const FreeModule<F>& amb, const FreeElement<F>& v) {
  if (amb.rank() == 1) {
    auto comps = amb.to_components(v);
    return amb.ring().to_string(comps[0]);
  }
  return amb.to_string(v);
}

template <class F>
ordered_json seq_json(const PolyRing<F>& R,
                      const std::vector<Polynomial<F>>& f) {
  ordered_json a = ordered_json::array();
  for (const auto& p : f) a.push_back(R.to_string(p));
  return a;
}

inline ordered_json depth_json(const DepthValue& d) {
  if (d.is_infinite()) return ordered_json("inf");
  return ordered_json(d.value());
}

inline void render_text_value(std::ostream& out, const ordered_json& v) {
  if (v.is_string())
    out << v.get<std::string>();
  else
    out << v.dump();
}

inline void render_text(std::ostream& out, const ordered_json& j) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      for (const auto& row : value) {
        bool first = true;
        for (const auto& [k2, v2] : row.items()) {
          out << (first ? "  - " : "    ") << k2 << ": ";
          render_text_value(out, v2);
          out << "\n";
          first = false;
        }
      }
    } else {
      out << key << ": ";
      render_text_value(out, value);
      out << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// The typed runner

template <class F>
int run_typed(const session::SessionData& S, const Request& req,
              const F& field, std::ostream& out) {
  unsigned cap = 60;
  if (S.degree_cap.has_value()) cap = *S.degree_cap;
  if (const char* env = std::getenv("REGSEQ_DEGREE_CAP")) {
    std::string text(env);
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos ||
        text.size() > 9 || std::stoul(text) == 0)
      throw PrecondError("invalid REGSEQ_DEGREE_CAP value");
    cap = static_cast<unsigned>(std::stoul(text));
  }
  if (req.degree_cap_override.has_value()) cap = *req.degree_cap_override;

  Binder<F> B(S, field, cap);
  const PolyRing<F>& R = B.ring();

  ordered_json j;
  j["version"] = kVersion;
  j["command"] = verb_name(req.verb);
  j["field"] = field.name();
  ordered_json ring_vars = ordered_json::array();
  for (const auto& v : S.vars) ring_vars.push_back(v);
  j["ring"] = ring_vars;
  j["order"] = R.order().name();

  std::vector<std::string> args = drop_fillers(req.args);
  int exit_code = 0;

  switch (req.verb) {
    case Verb::check:
    case Verb::strong_check: {
      if (args.size() != 2) usage_error(req.verb);
      FPModule<F> M = B.module(args[1]);
      std::vector<Polynomial<F>> f = B.sequence(args[0]);
      j["sequence_name"] = args[0];
      j["module"] = args[1];
      j["sequence"] = seq_json(R, f);
      Verdict<F> strong = is_strongly_regular(f, M);
      if (req.verb == Verb::check) {
        Verdict<F> reg = is_regular(f, M);
        if (strong.holds && !reg.holds)
          throw InternalError(
              "strongly regular sequence failed the Koszul criterion");
        j["regular"] = reg.holds;
        j["strongly_regular"] = strong.holds;
        exit_code = reg.holds ? 0 : 1;
      } else {
        j["strongly_regular"] = strong.holds;
        exit_code = strong.holds ? 0 : 1;
      }
      if (!strong.holds && strong.zero_divisor.has_value()) {
        j["witness"] = element_str(M.ambient(), strong.zero_divisor->element);
        j["witness_step"] = strong.zero_divisor->step;
        j["witness_multiplier"] =
            R.to_string(strong.zero_divisor->multiplier);
      } else {
        j["witness"] = nullptr;
        j["witness_step"] = nullptr;
        j["witness_multiplier"] = nullptr;
      }
      break;
    }

    case Verb::depth: {
      if (args.size() != 1) usage_error(req.verb);
      FPModule<F> M = B.module(args[0]);
      j["module"] = args[0];
      j["depth"] = depth_json(depth_ext(M));
      break;
    }

    case Verb::local_depth: {
      if (args.size() != 2) usage_error(req.verb);
      FPModule<F> M = B.module(args[0]);
      PrimeCandidate<F> p = B.prime(args[1]);
      j["module"] = args[0];
      j["prime"] = p.label();
      j["prime_verified"] = p.verified;
      j["depth"] = depth_json(local_depth(M, p));
      break;
    }

    case Verb::koszul: {
      if (args.size() != 2) usage_error(req.verb);
      FPModule<F> M = B.module(args[1]);
      std::vector<Polynomial<F>> f = B.sequence(args[0]);
      j["sequence_name"] = args[0];
      j["module"] = args[1];
      j["sequence"] = seq_json(R, f);
      KoszulComplex<F> K = build_koszul(f, M);
      ordered_json rows = ordered_json::array();
      for (unsigned i = 0; i <= K.length(); ++i) {
        ordered_json row;
        row["i"] = i;
        row["zero"] = koszul_homology(K, i).module.is_zero();
        rows.push_back(std::move(row));
      }
      j["homology"] = std::move(rows);
      break;
    }

    case Verb::ass: {
      if (args.size() != 1) usage_error(req.verb);
      FPModule<F> M = B.module(args[0]);
      j["module"] = args[0];
      PrimeSet<F> ps = monomial_ass(M);
      ordered_json rows = ordered_json::array();
      for (const auto& p : ps.primes) {
        ordered_json row;
        row["prime"] = p.label();
        row["verified"] = p.verified;
        rows.push_back(std::move(row));
      }
      j["associated_primes"] = std::move(rows);
      j["complete"] = ps.complete;
      break;
    }

    case Verb::ext: {
      if (args.size() != 3) usage_error(req.verb);
      const std::string& itext = args[0];
      if (itext.empty() ||
          itext.find_first_not_of("0123456789") != std::string::npos ||
          itext.size() > 3)
        usage_error(req.verb);
      unsigned i = static_cast<unsigned>(std::stoul(itext));
      Ideal<F> I = B.ideal(args[1]);
      FPModule<F> M = B.module(args[2]);
      j["i"] = i;
      j["ideal"] = args[1];
      j["module"] = args[2];
      FPModule<F> E = ext_module(i, I, M);
      j["rank"] = E.rank();
      j["relations"] =
          static_cast<unsigned>(E.relations().generators().size());
      j["zero"] = E.is_zero();
      break;
    }

    case Verb::dim: {
      if (args.size() != 1) usage_error(req.verb);
      FPModule<F> M = B.module(args[0]);
      j["module"] = args[0];
      j["dim"] = krull_dimension(M);
      break;
    }

    case Verb::theorem: {
      std::vector<std::string> head;
      std::vector<std::string> prime_names;
      bool in_using = false;
      for (const auto& a : args) {
        if (a == "using") {
          in_using = true;
          continue;
        }
        (in_using ? prime_names : head).push_back(a);
      }
      if (head.size() != 2 || (in_using && prime_names.empty()))
        usage_error(req.verb);
      FPModule<F> M = B.module(head[1]);
      std::vector<Polynomial<F>> f = B.sequence(head[0]);
      j["sequence_name"] = head[0];
      j["module"] = head[1];
      j["sequence"] = seq_json(R, f);
      std::optional<std::vector<PrimeCandidate<F>>> candidates;
      if (in_using) {
        candidates.emplace();
        for (const auto& nm : prime_names)
          candidates->push_back(B.prime(nm));
      }
      TheoremReport<F> rep =
          theorem_crosscheck(f, M, candidates, req.strict);
      if (req.forge_inconsistent) rep.consistent = !rep.consistent;
      j["r"] = rep.r;
      j["regular"] = rep.regular.holds;
      ordered_json rows = ordered_json::array();
      for (const auto& row : rep.rows) {
        ordered_json rj;
        rj["prime"] = row.prime.label();
        rj["verified"] = row.prime.verified;
        rj["in_supp"] = row.in_supp;
        rj["in_ass"] = row.in_ass;
        rj["depth"] = row.depth.has_value() ? depth_json(*row.depth)
                                            : ordered_json(nullptr);
        rows.push_back(std::move(rj));
      }
      j["rows"] = std::move(rows);
      j["complete"] = rep.complete;
      j["iii_holds"] = rep.iii_holds;
      j["ii_consistent"] = rep.ii_consistent;
      j["consistent"] = rep.consistent;
      exit_code = !rep.consistent ? 2 : (rep.regular.holds ? 0 : 1);
      break;
    }

    case Verb::corollary2: {
      if (args.size() != 3) usage_error(req.verb);
      FPModule<F> M = B.module(args[2]);
      std::vector<Polynomial<F>> f = B.sequence(args[0]);
      std::vector<Polynomial<F>> g = B.sequence(args[1]);
      j["module"] = args[2];
      j["f"] = seq_json(R, f);
      j["g"] = seq_json(R, g);
      Corollary2Report<F> rep = corollary2_check(f, g, M);
      if (req.forge_inconsistent) rep.consistent = !rep.consistent;
      j["hypothesis"] = rep.hypothesis;
      j["f_regular"] = rep.f_verdict.holds;
      j["g_regular"] = rep.g_verdict.has_value()
                           ? ordered_json(rep.g_verdict->holds)
                           : ordered_json(nullptr);
      j["applicable"] = rep.applicable;
      j["consistent"] = rep.consistent;
      exit_code = rep.consistent ? 0 : 2;
      break;
    }

    case Verb::sop: {
      if (args.size() != 2) usage_error(req.verb);
      FPModule<F> M = B.module(args[1]);
      std::vector<Polynomial<F>> f = B.sequence(args[0]);
      j["sequence_name"] = args[0];
      j["module"] = args[1];
      j["sequence"] = seq_json(R, f);
      SopReport<F> rep = sop_regular_check(f, M);
      if (req.forge_inconsistent) rep.consistent = !rep.consistent;
      j["dim"] = rep.dim;
      j["depth"] = depth_json(rep.depth);
      j["is_sop"] = rep.is_sop;
      j["is_cm"] = rep.is_cm;
      j["regular"] = rep.regular.has_value()
                         ? ordered_json(rep.regular->holds)
                         : ordered_json(nullptr);
      j["consistent"] = rep.consistent;
      exit_code = rep.consistent ? 0 : 2;
      break;
    }
  }

  if (req.format == "text")
    render_text(out, j);
  else
    out << j.dump(2) << "\n";
  return exit_code;
}

inline std::pair<bool, unsigned long> parse_field_spec(std::string s) {
  for (auto& ch : s)
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "q" || s == "qq") return {true, 0};
  if (s.rfind("gf:", 0) == 0) {
    std::string digits = s.substr(3);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 9)
      throw PrecondError("invalid field spec '" + s + "'");
    return {false, std::stoul(digits)};
  }
  throw PrecondError("invalid field spec '" + s + "' (use q or gf:<p>)");
}

}  // namespace detail

// Runs one command against a parsed session.  Writes the report to `out`
// and diagnostics to `err`; returns the process exit code.
inline int run(const session::SessionData& S, const Request& req,
               std::ostream& out, std::ostream& err) {
  try {
    bool rationals = false;
    unsigned long modulus = 32003;
    if (req.field_override.has_value()) {
      auto [q, p] = detail::parse_field_spec(*req.field_override);
      rationals = q;
      modulus = p;
    } else if (S.field.has_value()) {
      rationals = S.field->rationals;
      modulus = S.field->modulus;
    }
    if (rationals) return detail::run_typed(S, req, QQ(), out);
    if (modulus > 0x7fffffffUL)
      throw PrecondError("field modulus is too large");
    return detail::run_typed(S, req, GF(static_cast<std::uint32_t>(modulus)),
                             out);
  } catch (const InternalError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace regseq::exec
