/*
   Copyright 2026 The lad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lad/dsl.hpp"
#include "lad/harness.hpp"
#include "lad/oracle.hpp"

namespace lad {
namespace cli {

using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 success/verified, 1 verification failed, 2 input or
// validation error, 3 resource cap exceeded.
enum ExitCode {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kResourceCap = 3,
};

namespace detail {

inline std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationFailed("cannot open fixture file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string ideal_text(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string();
  }
  return s + ")";
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

struct Output {
  std::string format = "human";  // human | json | csv
  std::string path;              // empty: standard output
  std::ostream* out = nullptr;

  void write(const std::string& text) const {
    if (path.empty()) {
      *out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationFailed("cannot open output file: " + path);
    f << text;
  }
};

// The fixture with constructed rings, built lazily and cached by name.
class FixtureContext {
 public:
  FixtureContext(Fixture fx, Limits limits)
      : fx_(std::move(fx)), limits_(std::move(limits)) {}

  const Fixture& fixture() const { return fx_; }
  const Limits& limits() const { return limits_; }

  const RingDecl& ring_decl(const std::string& name) const {
    const RingDecl* r = fx_.find_ring(name);
    if (!r) throw ValidationFailed("no ring named '" + name + "'");
    return *r;
  }

  LocalRingPtr ring(const std::string& name) {
    for (const auto& [n, r] : cache_)
      if (n == name) return r;
    const RingDecl& decl = ring_decl(name);
    LocalRingPtr r = make_local_ring(decl.ambient, decl.defining, limits_);
    cache_.emplace_back(name, r);
    return r;
  }

  const EndoDecl& endo_decl(const std::string& name) const {
    const EndoDecl* e = fx_.find_endo(name);
    if (!e) throw ValidationFailed("no endomorphism named '" + name + "'");
    return *e;
  }

  // The single endomorphism declared on a ring; verify commands resolve the
  // two systems of a map this way.
  const EndoDecl& unique_endo_on(const std::string& ring_name) const {
    const EndoDecl* found = nullptr;
    for (const EndoDecl& e : fx_.endos)
      if (e.ring == ring_name) {
        if (found)
          throw ValidationFailed("ring '" + ring_name +
                                 "' has more than one endomorphism; cannot "
                                 "resolve the dynamical system");
        found = &e;
      }
    if (!found)
      throw ValidationFailed("ring '" + ring_name +
                             "' has no endomorphism declared");
    return *found;
  }

  Endomorphism build_endo(const EndoDecl& decl) {
    return make_endomorphism(ring(decl.ring), decl.images, limits_);
  }

  Morphism build_morphism(const std::string& map_name) {
    const MapDecl* m = fx_.find_map(map_name);
    if (!m) throw ValidationFailed("no map named '" + map_name + "'");
    DynamicalSystem source =
        make_system(build_endo(unique_endo_on(m->source)), limits_);
    DynamicalSystem target =
        make_system(build_endo(unique_endo_on(m->target)), limits_);
    return make_morphism(source, target, m->images, limits_);
  }

 private:
  Fixture fx_;
  Limits limits_;
  std::vector<std::pair<std::string, LocalRingPtr>> cache_;
};

inline void print_advisory(const FlatnessReport& rep, std::ostream& err,
                           const std::string& map_name) {
  if (!rep.dimension_pass)
    err << "warning: flatness advisory for map '" << map_name
        << "': dimension check failed (" << rep.dim_target
        << " != " << rep.dim_source << " + " << rep.dim_fiber << ")\n";
  if (rep.pattern == FlatnessReport::Pattern::fail)
    err << "warning: flatness advisory for map '" << map_name
        << "': the image variables are not a regular sequence\n";
}

inline std::string pattern_text(FlatnessReport::Pattern p) {
  switch (p) {
    case FlatnessReport::Pattern::pass:
      return "pass";
    case FlatnessReport::Pattern::fail:
      return "fail";
    default:
      return "not-applicable";
  }
}

// ---- entropy report rendering ----------------------------------------

inline std::string entropy_human(const std::string& ideal,
                                 std::uint64_t lambda0,
                                 const EntropyReport& rep) {
  std::ostringstream os;
  os << "ideal: " << ideal << "\n";
  os << "lambda_0 = " << lambda0 << "\n";
  os << "n\tlength\tnaive\tfekete\tratio\n";
  for (std::size_t i = 0; i < rep.lengths.size(); ++i) {
    os << (i + 1) << "\t" << rep.lengths[i] << "\t" << fmt(rep.naive[i])
       << "\t" << fmt(rep.fekete[i]) << "\t"
       << (i == 0 ? std::string("-") : fmt(rep.ratio[i - 1])) << "\n";
  }
  os << "headline = " << fmt(rep.headline) << "\n";
  if (rep.exact_ratio)
    os << "exact ratio observed: lengths grow by a factor of "
       << *rep.exact_ratio << " (entropy = log " << *rep.exact_ratio
       << ")\n";
  return os.str();
}

inline ordered_json entropy_json(const std::string& ideal,
                                 const EntropyReport& rep) {
  ordered_json j;
  j["ideal"] = ideal;
  ordered_json n = ordered_json::array();
  for (std::size_t i = 0; i < rep.lengths.size(); ++i) n.push_back(i + 1);
  j["n"] = n;
  j["length"] = rep.lengths;
  j["naive"] = rep.naive;
  j["fekete"] = rep.fekete;
  j["ratio"] = rep.ratio;
  j["headline"] = rep.headline;
  if (rep.exact_ratio)
    j["exact_ratio"] = *rep.exact_ratio;
  else
    j["exact_ratio"] = nullptr;
  return j;
}

inline std::string entropy_csv(const EntropyReport& rep) {
  std::string s = "n,length,naive,fekete,ratio\n";
  for (std::size_t i = 0; i < rep.lengths.size(); ++i) {
    s += std::to_string(i + 1) + "," + std::to_string(rep.lengths[i]) + "," +
         fmt(rep.naive[i]) + "," + fmt(rep.fekete[i]) + "," +
         (i == 0 ? std::string() : fmt(rep.ratio[i - 1])) + "\n";
  }
  return s;
}

}  // namespace detail

// Runs the command line. `args` excludes the program name. All reports go to
// `out` (or the --output path); diagnostics and traces go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"local entropy of finite-length endomorphisms"};
  app.require_subcommand(1);

  struct {
    std::string fixture;
    std::string format = "human";
    std::string output;
    std::string ring, ideal, endo, map, q, qprime;
    std::uint32_t max_iter = 3;
    int truncation_cap = 128;
    std::size_t gb_basis_cap = 10000;
    std::uint32_t gb_degree_cap = 4096;
    bool quiet = false;
  } opt;

  if (const char* env = std::getenv("LAD_MAX_TRUNCATION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      opt.truncation_cap = static_cast<int>(v);
    else
      err << "warning: ignoring invalid LAD_MAX_TRUNCATION='" << env << "'\n";
  }

  auto add_common = [&](CLI::App* cmd, bool with_iter) {
    cmd->add_option("fixture", opt.fixture, "fixture file (.lad)")
        ->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "write the report to this path");
    cmd->add_option("--truncation-cap", opt.truncation_cap,
                    "max truncation degree for local colengths")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--gb-basis-cap", opt.gb_basis_cap,
                    "max intermediate basis size");
    cmd->add_option("--gb-degree-cap", opt.gb_degree_cap,
                    "max leading degree of basis elements");
    cmd->add_flag("--quiet", opt.quiet, "suppress progress traces");
    if (with_iter)
      cmd->add_option("--max-iter", opt.max_iter, "largest iterate n")
          ->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "validate all declarations");
  add_common(check, false);

  CLI::App* length =
      app.add_subcommand("length", "local colength of an ideal");
  add_common(length, false);
  length->add_option("--ring", opt.ring, "ring name")->required();
  length->add_option("--ideal", opt.ideal, "ideal generators, e.g. \"(y^3)\"")
      ->required();

  CLI::App* entropy =
      app.add_subcommand("entropy", "length sequence and entropy estimates");
  add_common(entropy, true);
  entropy->add_option("--endo", opt.endo, "endomorphism name")->required();
  entropy->add_option("--ideal", opt.ideal,
                      "primary ideal (default: the maximal ideal)");

  CLI::App* dim = app.add_subcommand("dim", "dimension of a presented ring");
  add_common(dim, false);
  dim->add_option("--ring", opt.ring, "ring name")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle-length", "brute-force local colength (cross-check)");
  oracle->group("");  // hidden
  add_common(oracle, false);
  oracle->add_option("--ring", opt.ring, "ring name")->required();
  oracle->add_option("--ideal", opt.ideal, "ideal generators")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "verify the per-iterate identities");
  verify->require_subcommand(1);
  CLI::App* additivity = verify->add_subcommand(
      "additivity", "exact length additivity along a flat morphism");
  add_common(additivity, true);
  additivity->add_option("--map", opt.map, "morphism name")->required();
  additivity->add_option("--q", opt.q, "primary ideal of the source")
      ->required();
  additivity->add_option("--qprime", opt.qprime, "fiber sop ideal")
      ->required();
  CLI::App* inequality = verify->add_subcommand(
      "inequality", "the unconditional length inequality");
  add_common(inequality, true);
  inequality->add_option("--map", opt.map, "morphism name")->required();

  std::vector<const char*> argv;
  argv.push_back("lad");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Limits limits;
  limits.truncation_cap = opt.truncation_cap;
  limits.gb_basis_cap = opt.gb_basis_cap;
  limits.gb_degree_cap = opt.gb_degree_cap;
  if (!opt.quiet)
    limits.trace = [&err](std::string_view line) { err << line << "\n"; };

  detail::Output output{opt.format, opt.output, &out};

  try {
    detail::FixtureContext ctx(parse_fixture(detail::read_file(opt.fixture)),
                               limits);
    const Fixture& fx = ctx.fixture();

    if (check->parsed()) {
      std::ostringstream human;
      ordered_json jrings = ordered_json::array();
      ordered_json jendos = ordered_json::array();
      ordered_json jmaps = ordered_json::array();
      std::string csv = "kind,name,status\n";
      bool ok = true;

      if (fx.p != 0) human << "field: " << fx.p << "\n";
      for (const RingDecl& r : fx.rings) {
        ctx.ring(r.name);  // throws ValidationFailed when invalid
        human << "ring " << r.name << ": ok (" << r.ambient->nvars()
              << " variable" << (r.ambient->nvars() == 1 ? "" : "s") << ", "
              << r.defining.size() << " defining generator"
              << (r.defining.size() == 1 ? "" : "s") << ")\n";
        jrings.push_back({{"name", r.name}, {"status", "ok"}});
        csv += "ring," + r.name + ",ok\n";
      }
      for (const EndoDecl& e : fx.endos) {
        Endomorphism endo = ctx.build_endo(e);
        TriState fl = check_finite_length(endo, limits);
        human << "endo " << e.name << " on " << e.ring
              << ": well-defined; finite length: " << to_string(fl) << "\n";
        jendos.push_back({{"name", e.name},
                          {"ring", e.ring},
                          {"well_defined", true},
                          {"finite_length", to_string(fl)}});
        csv += "endo," + e.name + "," + to_string(fl) + "\n";
        if (fl == TriState::no) {
          err << "error: endomorphism '" << e.name
              << "' is not finite length\n";
          ok = false;
        }
      }
      for (const MapDecl& m : fx.maps) {
        bool has_endos = true;
        try {
          ctx.unique_endo_on(m.source);
          ctx.unique_endo_on(m.target);
        } catch (const ValidationFailed&) {
          has_endos = false;
        }
        if (!has_endos) {
          human << "map " << m.name << ": " << m.source << " -> " << m.target
                << ": skipped (needs one endomorphism on each ring)\n";
          jmaps.push_back({{"name", m.name}, {"status", "skipped"}});
          csv += "map," + m.name + ",skipped\n";
          continue;
        }
        Morphism mor = ctx.build_morphism(m.name);
        bool commutes = check_morphism(mor);
        FlatnessReport adv = flatness_advisory(mor, limits);
        detail::print_advisory(adv, err, m.name);
        human << "map " << m.name << ": " << m.source << " -> " << m.target
              << ": commutes: " << (commutes ? "yes" : "no") << "\n";
        human << "  flatness advisory: dimension check "
              << (adv.dimension_pass ? "pass" : "fail") << " ("
              << adv.dim_target << " vs " << adv.dim_source << " + "
              << adv.dim_fiber << "); pattern check "
              << detail::pattern_text(adv.pattern) << "\n";
        jmaps.push_back(
            {{"name", m.name},
             {"commutes", commutes},
             {"advisory",
              {{"dimension_check", adv.dimension_pass ? "pass" : "fail"},
               {"pattern_check", detail::pattern_text(adv.pattern)}}}});
        csv += "map," + m.name + "," +
               (commutes ? std::string("ok") : std::string("no-commute")) +
               "\n";
        if (!commutes) {
          err << "error: map '" << m.name
              << "' does not commute with the endomorphisms\n";
          ok = false;
        }
      }
      if (fx.rings.empty() && fx.endos.empty() && fx.maps.empty())
        human << "nothing to check\n";
      human << "check: " << (ok ? "ok" : "failed") << "\n";

      if (opt.format == "json") {
        ordered_json j;
        j["rings"] = jrings;
        j["endos"] = jendos;
        j["maps"] = jmaps;
        j["ok"] = ok;
        output.write(j.dump(2) + "\n");
      } else if (opt.format == "csv") {
        output.write(csv);
      } else {
        output.write(human.str());
      }
      return ok ? kOk : kInputError;
    }

    if (length->parsed() || oracle->parsed()) {
      LocalRingPtr R = ctx.ring(opt.ring);
      std::vector<Polynomial> gens = parse_ideal_list(opt.ideal, R->ambient);
      LocalIdeal J = make_local_ideal(R, gens);
      std::uint64_t value =
          length->parsed()
              ? local_colength(J, limits)
              : oracle_colength(
                    J, static_cast<std::uint32_t>(limits.truncation_cap),
                    limits);
      std::string ideal = detail::ideal_text(gens);
      if (opt.format == "json") {
        ordered_json j;
        j["ring"] = opt.ring;
        j["ideal"] = ideal;
        j["length"] = value;
        output.write(j.dump(2) + "\n");
      } else if (opt.format == "csv") {
        output.write("ring,ideal,length\n" + opt.ring + "," +
                     detail::csv_quote(ideal) + "," + std::to_string(value) +
                     "\n");
      } else {
        output.write("length of " + ideal + " in " + opt.ring + " = " +
                     std::to_string(value) + "\n");
      }
      return kOk;
    }

    if (entropy->parsed()) {
      const EndoDecl& decl = ctx.endo_decl(opt.endo);
      Endomorphism endo = ctx.build_endo(decl);
      DynamicalSystem sys = make_system(endo, limits);
      if (!sys.validated_finite_length)
        throw ValidationFailed("endomorphism '" + opt.endo +
                               "' is not (certifiably) finite length");
      std::vector<Polynomial> gens;
      if (opt.ideal.empty()) {
        for (std::size_t i = 0; i < sys.ring()->ambient->nvars(); ++i)
          gens.push_back(Polynomial::variable(sys.ring()->ambient, i));
      } else {
        gens = parse_ideal_list(opt.ideal, sys.ring()->ambient);
      }
      LocalIdeal q = make_local_ideal(sys.ring(), gens);
      EntropyRun run = entropy_run(sys, q, opt.max_iter, limits);
      std::string ideal = detail::ideal_text(gens);
      if (opt.format == "json")
        output.write(detail::entropy_json(ideal, run.report).dump(2) + "\n");
      else if (opt.format == "csv")
        output.write(detail::entropy_csv(run.report));
      else
        output.write(detail::entropy_human(ideal, run.lambda0, run.report));
      return kOk;
    }

    if (dim->parsed()) {
      LocalRingPtr R = ctx.ring(opt.ring);
      std::size_t d = krull_dim_leading(R->defining_gb);
      if (opt.format == "json") {
        ordered_json j;
        j["ring"] = opt.ring;
        j["dim"] = d;
        output.write(j.dump(2) + "\n");
      } else if (opt.format == "csv") {
        output.write("ring,dim\n" + opt.ring + "," + std::to_string(d) +
                     "\n");
      } else {
        output.write("dim " + opt.ring + " = " + std::to_string(d) + "\n");
      }
      return kOk;
    }

    if (additivity->parsed()) {
      Morphism mor = ctx.build_morphism(opt.map);
      const MapDecl* mdecl = fx.find_map(opt.map);
      if (!fx.assumed("flat", opt.map))
        throw ValidationFailed("additivity needs 'assume flat " + opt.map +
                               "' in the fixture");
      if (!fx.assumed("cm", mdecl->target))
        throw ValidationFailed("additivity needs 'assume cm " +
                               mdecl->target + "' in the fixture");
      LocalIdeal q = make_local_ideal(
          mor.source.ring(),
          parse_ideal_list(opt.q, mor.source.ring()->ambient));
      LocalIdeal qprime = make_local_ideal(
          mor.target.ring(),
          parse_ideal_list(opt.qprime, mor.target.ring()->ambient));
      AdditivityCheck chk =
          verify_additivity(mor, q, qprime, opt.max_iter, limits);
      detail::print_advisory(chk.advisory, err, opt.map);

      std::ostringstream human;
      human << "additivity along map " << opt.map << " (q = "
            << detail::ideal_text(q.gens)
            << ", q' = " << detail::ideal_text(qprime.gens) << ")\n";
      human << "n\tlhs\trhs_r\trhs_fiber\tproduct\tpass\n";
      ordered_json jn = ordered_json::array(), jl = ordered_json::array(),
                   jr = ordered_json::array(), jf = ordered_json::array(),
                   jp = ordered_json::array();
      std::string csv = "n,lhs,rhs_r,rhs_fiber,pass\n";
      for (const AdditivityRow& row : chk.rows) {
        human << row.n << "\t" << row.lhs << "\t" << row.rhs_r << "\t"
              << row.rhs_fiber << "\t" << (row.rhs_r * row.rhs_fiber) << "\t"
              << (row.pass ? "yes" : "NO") << "\n";
        jn.push_back(row.n);
        jl.push_back(row.lhs);
        jr.push_back(row.rhs_r);
        jf.push_back(row.rhs_fiber);
        jp.push_back(row.pass);
        csv += std::to_string(row.n) + "," + std::to_string(row.lhs) + "," +
               std::to_string(row.rhs_r) + "," +
               std::to_string(row.rhs_fiber) + "," +
               (row.pass ? "true" : "false") + "\n";
      }
      human << "all passed: " << (chk.all_pass ? "yes" : "no") << "\n";
      if (opt.max_iter >= 1) {
        human << "entropy headlines: target "
              << detail::fmt(chk.lhs_entropy.headline) << " vs source "
              << detail::fmt(chk.source_entropy.headline) << " + fiber "
              << detail::fmt(chk.fiber_entropy.headline) << " = "
              << detail::fmt(chk.source_entropy.headline +
                             chk.fiber_entropy.headline)
              << "\n";
      }
      if (opt.format == "json") {
        ordered_json j;
        j["map"] = opt.map;
        j["q"] = detail::ideal_text(q.gens);
        j["qprime"] = detail::ideal_text(qprime.gens);
        j["n"] = jn;
        j["lhs"] = jl;
        j["rhs_r"] = jr;
        j["rhs_fiber"] = jf;
        j["pass"] = jp;
        j["all_pass"] = chk.all_pass;
        if (opt.max_iter >= 1) {
          j["headline_target"] = chk.lhs_entropy.headline;
          j["headline_source"] = chk.source_entropy.headline;
          j["headline_fiber"] = chk.fiber_entropy.headline;
        }
        output.write(j.dump(2) + "\n");
      } else if (opt.format == "csv") {
        output.write(csv);
      } else {
        output.write(human.str());
      }
      return chk.all_pass ? kOk : kVerificationFailed;
    }

    if (inequality->parsed()) {
      Morphism mor = ctx.build_morphism(opt.map);
      InequalityCheck chk = verify_inequality(mor, opt.max_iter, limits);

      std::ostringstream human;
      human << "inequality along map " << opt.map << "\n";
      human << "n\tlhs\trhs_r\trhs_fiber\tbound\tpass\n";
      ordered_json jn = ordered_json::array(), jl = ordered_json::array(),
                   jr = ordered_json::array(), jf = ordered_json::array(),
                   jp = ordered_json::array();
      std::string csv = "n,lhs,rhs_r,rhs_fiber,pass\n";
      for (const InequalityRow& row : chk.rows) {
        human << row.n << "\t" << row.lhs << "\t" << row.rhs_r << "\t"
              << row.rhs_fiber << "\t" << (row.rhs_r * row.rhs_fiber) << "\t"
              << (row.pass ? "yes" : "NO") << "\n";
        jn.push_back(row.n);
        jl.push_back(row.lhs);
        jr.push_back(row.rhs_r);
        jf.push_back(row.rhs_fiber);
        jp.push_back(row.pass);
        csv += std::to_string(row.n) + "," + std::to_string(row.lhs) + "," +
               std::to_string(row.rhs_r) + "," +
               std::to_string(row.rhs_fiber) + "," +
               (row.pass ? "true" : "false") + "\n";
      }
      human << "all passed: " << (chk.all_pass ? "yes" : "no") << "\n";
      if (opt.max_iter >= 1)
        human << "entropy headlines: lhs "
              << detail::fmt(chk.lhs_entropy.headline) << " <= rhs "
              << detail::fmt(chk.rhs_entropy.headline) << "\n";
      if (opt.format == "json") {
        ordered_json j;
        j["map"] = opt.map;
        j["n"] = jn;
        j["lhs"] = jl;
        j["rhs_r"] = jr;
        j["rhs_fiber"] = jf;
        j["pass"] = jp;
        j["all_pass"] = chk.all_pass;
        output.write(j.dump(2) + "\n");
      } else if (opt.format == "csv") {
        output.write(csv);
      } else {
        output.write(human.str());
      }
      return chk.all_pass ? kOk : kVerificationFailed;
    }

    err << "error: no subcommand\n";
    return kInputError;
  } catch (const NotFiniteColength& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const ResourceExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cli
}  // namespace lad
