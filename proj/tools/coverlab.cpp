#include "coverlab/automorphisms.hpp"
#include "coverlab/casecheck.hpp"
#include "coverlab/constructions.hpp"
#include "coverlab/cover_groups.hpp"
#include "coverlab/frames.hpp"
#include "coverlab/io.hpp"
#include "coverlab/numtheory.hpp"
#include "coverlab/params.hpp"
#include "coverlab/subgroups.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>

using namespace coverlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

struct Global {
  std::string output = "json";
  std::uint64_t seed = kDefaultGroupSeed;
};

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array()) && j.size() <= 64) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << " = " << canonical_dump(j) << "\n";
  }
}

void emit(const Global& g, const Json& j) {
  if (g.output == "text") {
    print_text(j, "", std::cout);
  } else {
    std::cout << canonical_dump(j) << "\n";
  }
}

Json envelope(Json config, Json result) { return Json{{"config", std::move(config)}, {"result", std::move(result)}}; }

Json verify_result(const CoverGraph& g, bool& ok) {
  const CoverReport rep = verify_cover(g);
  Json result{{"report", to_json(rep)}};
  ok = rep.is_cover;
  if (rep.is_cover) {
    const CoverParams p = derive_params(rep.n, rep.r, *rep.mu);
    const SpectrumCheck s = spectrum_check(g, p);
    result["params"] = to_json(p);
    result["spectrum"] = to_json(s);
    ok = ok && s.ok;
  }
  return result;
}

Json audit_summary(const std::vector<AuditItem>& items) {
  Json j = Json::array();
  for (const auto& a : items) j.push_back(to_json(a));
  return j;
}

/// Subgroup argument: "gens:<json list of image arrays>" or "order:<k>[:<index>]"
/// (subgroups of the covering group of that order, index into their list).
PermGroup parse_subgroup(const std::string& text, const CoverGraph& cover, const PermGroup& kernel, std::uint64_t seed) {
  if (text.rfind("gens:", 0) == 0) {
    Json list;
    try {
      list = Json::parse(text.substr(5));
    } catch (const Json::exception& e) {
      throw InputError(std::string("subgroup generators: ") + e.what());
    }
    std::vector<Permutation> gens;
    for (const auto& img : list) gens.emplace_back(img.get<std::vector<int>>());
    return PermGroup(cover.vertex_count(), std::move(gens), seed);
  }
  if (text.rfind("order:", 0) == 0) {
    const std::string rest = text.substr(6);
    const auto colon = rest.find(':');
    const long order = std::stol(rest.substr(0, colon));
    const std::size_t index = colon == std::string::npos ? 0 : std::stoul(rest.substr(colon + 1));
    const auto subs = subgroups_of_order(kernel, order);
    if (index >= subs.size()) {
      throw InputError("covering group has " + std::to_string(subs.size()) + " subgroups of order " + std::to_string(order));
    }
    return subs[index];
  }
  throw InputError("subgroup must be gens:<json> or order:<k>[:<index>]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antipodal distance-regular covers of complete graphs: construction, verification and analysis"};
  Global global;
  app.add_option("--output", global.output, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", global.seed, "Seed for randomized group algorithms");
  app.require_subcommand(1);

  // params
  auto* params = app.add_subcommand("params", "Derive parameters or print feasibility tables");
  std::optional<long long> pn, pr, pmu, fb_max, fa_max, ft, frr;
  params->add_option("--n", pn);
  params->add_option("--r", pr);
  params->add_option("--mu", pmu);
  params->add_option("--feasible-b", fb_max, "Odd-r family table up to t_max");
  params->add_option("--feasible-a", fa_max, "Even-r family table up to t_max");
  params->add_option("--t", ft, "Family parameter t (with --family-r)");
  params->add_option("--family-r", frr, "Family parameter r (with --t)");

  // build
  auto* build = app.add_subcommand("build", "Build a cover and print its canonical file");
  std::string build_name;
  int bq = 3, bm = 1;
  std::string seidel_path, sign_name = "negated";
  build->add_option("name", build_name, "hexagon | cube | icosahedron | thas-somma | taylor")->required();
  build->add_option("--q", bq);
  build->add_option("--m", bm);
  build->add_option("--seidel", seidel_path, "JSON file with a Seidel matrix (taylor)");
  build->add_option("--sign", sign_name)->check(CLI::IsMember({"negated", "direct"}));

  // verify / analyze
  auto* verify = app.add_subcommand("verify", "Verify the cover axioms and the spectrum");
  std::string input;
  verify->add_option("cover", input, "Cover file, - for stdin")->required();

  auto* analyze = app.add_subcommand("analyze", "Automorphisms, covering group, rank, arc orbits and audits");
  analyze->add_option("cover", input)->required();
  std::size_t max_involutions = 256;
  analyze->add_option("--max-involutions", max_involutions, "Involutions audited (in element order)");

  auto* quotient = app.add_subcommand("quotient", "Quotient by a subgroup of the covering group");
  std::string subgroup_arg;
  quotient->add_option("cover", input)->required();
  quotient->add_option("--subgroup", subgroup_arg, "gens:<json> or order:<k>[:<index>]")->required();

  auto* etf = app.add_subcommand("etf", "Equiangular lines from a character of the covering group");
  std::size_t char_index = 1;
  std::string side = "tau";
  double tol = 1e-9;
  etf->add_option("cover", input)->required();
  etf->add_option("--char", char_index, "Character index (0 is trivial)");
  etf->add_option("--side", side)->check(CLI::IsMember({"theta", "tau"}));
  etf->add_option("--tol", tol);

  auto* lemma = app.add_subcommand("lemma-check", "Number-theoretic identity checks");
  std::string lemma_kind;
  bool sweep = false;
  lemma->add_option("kind", lemma_kind)->required()->check(CLI::IsMember({"nt"}));
  lemma->add_flag("--sweep", sweep, "Run the exhaustive sweeps");

  auto* cases = app.add_subcommand("cases", "Finite case analyses");
  std::string case_id;
  cases->add_option("id", case_id, "Case id or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitBadInput;
  }

  Json config{{"seed", global.seed}, {"output", global.output}};
  try {
    if (params->parsed()) {
      config["subcommand"] = "params";
      Json result = Json::object();
      if (pn && pr && pmu) {
        config["n"] = *pn;
        config["r"] = *pr;
        config["mu"] = *pmu;
        result["params"] = to_json(derive_params(*pn, *pr, *pmu));
      }
      if (ft && frr) {
        config["t"] = *ft;
        config["family_r"] = *frr;
        result["family_b"] = to_json(family_B(*ft, *frr).cover);
      }
      if (fb_max) {
        config["feasible_b"] = *fb_max;
        Json rows = Json::array();
        for (const auto& e : feasible_B(*fb_max)) rows.push_back(to_json(e));
        result["feasible_b"] = rows;
      }
      if (fa_max) {
        config["feasible_a"] = *fa_max;
        Json rows = Json::array();
        for (const auto& e : feasible_A(*fa_max)) rows.push_back(to_json(e));
        result["feasible_a"] = rows;
      }
      if (result.empty()) throw InputError("params needs --n --r --mu, --t --family-r, --feasible-b or --feasible-a");
      emit(global, envelope(config, result));
      return kExitOk;
    }

    if (build->parsed()) {
      std::optional<CoverGraph> g;
      if (build_name == "hexagon") g = hexagon();
      else if (build_name == "cube") g = cube();
      else if (build_name == "icosahedron") g = icosahedron();
      else if (build_name == "thas-somma") g = thas_somma(bq, bm);
      else if (build_name == "taylor") {
        if (seidel_path.empty()) throw InputError("taylor needs --seidel");
        const Json s = read_json_file(seidel_path);
        SeidelMatrix S;
        try {
          S = s.get<SeidelMatrix>();
        } catch (const Json::exception& e) {
          throw InputError(std::string("Seidel matrix: ") + e.what());
        }
        g = taylor_from_seidel(S, sign_name == "direct" ? TaylorSign::kDirect : TaylorSign::kNegated);
      } else {
        throw InputError("unknown construction " + build_name);
      }
      emit(global, cover_to_json(*g));
      return kExitOk;
    }

    if (verify->parsed()) {
      config["subcommand"] = "verify";
      config["input"] = input;
      const CoverGraph g = read_cover_file(input);
      bool ok = false;
      Json result = verify_result(g, ok);
      emit(global, envelope(config, result));
      return ok ? kExitOk : kExitFailed;
    }

    if (analyze->parsed()) {
      config["subcommand"] = "analyze";
      config["input"] = input;
      config["max_involutions"] = max_involutions;
      const CoverGraph g = read_cover_file(input);
      bool ok = false;
      Json result = verify_result(g, ok);
      if (!ok) {
        emit(global, envelope(config, result));
        return kExitFailed;
      }
      AutomorphismOptions opts;
      opts.seed = global.seed;
      const PermGroup G = automorphism_group(g, opts);
      result["automorphisms"] = to_json(G);
      const CoveringGroupReport cg = covering_group(g, G);
      result["covering_group"] = {{"order", big_to_json(cg.order)},
                                  {"abelian", cg.abelian},
                                  {"regular_on_fibres", cg.regular_on_fibres},
                                  {"abelian_cover", cg.abelian_cover},
                                  {"semiregular", cg.semiregular},
                                  {"generators", to_json(cg.kernel)["generators"]}};
      result["fibre_action"] = to_json(fibre_action(g, G));
      result["arc_orbits"] = to_json(arc_orbit_count(g, G));
      result["stabilizer_audit"] = audit_summary(lemma3_audit(g, G));
      result["subdegree_check"] = to_json(subdegree_identity_check(g, G));
      Json inv = Json::array();
      std::size_t audited = 0, failed = 0;
      if (G.order() <= 100000) {
        for (const auto& x : G.elements()) {
          if (audited >= max_involutions) break;
          if (x.is_identity() || !(x * x).is_identity()) continue;
          const InvolutionAudit a = involution_audit(g, x);
          ++audited;
          bool bad = false;
          for (const auto& item : a.items) bad = bad || item.status == "fail";
          if (bad) {
            ++failed;
            inv.push_back(to_json(a));
          }
        }
      }
      result["involution_audits"] = {{"audited", audited}, {"failed", failed}, {"failures", inv}};
      emit(global, envelope(config, result));
      return failed == 0 ? kExitOk : kExitFailed;
    }

    if (quotient->parsed()) {
      config["subcommand"] = "quotient";
      config["input"] = input;
      config["subgroup"] = subgroup_arg;
      const CoverGraph g = read_cover_file(input);
      AutomorphismOptions opts;
      opts.seed = global.seed;
      const PermGroup G = automorphism_group(g, opts);
      const PermGroup K = covering_group(g, G).kernel;
      const PermGroup U = parse_subgroup(subgroup_arg, g, K, global.seed);
      const QuotientCover q = quotient_cover(g, U);
      bool ok = false;
      Json result = verify_result(q.cover, ok);
      result["subgroup"] = to_json(U);
      result["cover"] = cover_to_json(q.cover);
      result["vertex_map"] = q.vertex_map;
      emit(global, envelope(config, result));
      return ok ? kExitOk : kExitFailed;
    }

    if (etf->parsed()) {
      config["subcommand"] = "etf";
      config["input"] = input;
      config["char"] = char_index;
      config["side"] = side;
      config["tol"] = tol;
      const CoverGraph g = read_cover_file(input);
      const CoverReport rep = verify_cover(g);
      if (!rep.is_cover) {
        emit(global, envelope(config, Json{{"report", to_json(rep)}}));
        return kExitFailed;
      }
      const CoverParams p = derive_params(rep.n, rep.r, *rep.mu);
      AutomorphismOptions opts;
      opts.seed = global.seed;
      const PermGroup K = covering_group(g, automorphism_group(g, opts)).kernel;
      const CharacterMatrix cm = character_matrix(g, K, char_index);
      const double theta = p.theta.to_double();
      const double tau = p.tau.to_double();
      const SpectrumCertificate cert = certify_spectrum(cm.S, theta, tau);
      const LineSystem lines = extract_lines(cm.S, theta, tau, side == "theta" ? LineSide::kTheta : LineSide::kTau);
      const EtfReport report = verify_etf(lines, tol, TauContext{tau, rep.n, rep.r});
      Json result = to_json(lines, report, cert);
      result["params"] = to_json(p);
      emit(global, envelope(config, result));
      return report.ok && cert.ok ? kExitOk : kExitFailed;
    }

    if (lemma->parsed()) {
      config["subcommand"] = "lemma-check";
      config["kind"] = lemma_kind;
      config["sweep"] = sweep;
      Json result = Json::object();
      bool ok = true;
      Json nl = Json::array();
      for (const auto& s : nagell_ljunggren_search(200, 20)) nl.push_back({{"x", s.x}, {"i", s.i}, {"y", big_to_json(s.y)}});
      result["nagell_ljunggren"] = nl;
      const auto z = zsigmondy_corollary_solve(10000);
      Json zs = Json::array();
      for (const auto& s : z) {
        zs.push_back({{"p", s.p}, {"m", s.m}, {"q", s.q}, {"n", s.n}, {"case", s.lemma_case}});
        ok = ok && s.lemma_case != 0;
      }
      result["zsigmondy"] = zs;
      if (sweep) {
        SweepBounds b;
        const SweepReport lift = lifting_sweep(b);
        const SweepReport gcd = gcd_sweep(b);
        ok = ok && lift.counterexamples.empty() && gcd.counterexamples.empty();
        result["sweeps"] = Json::array({to_json(lift), to_json(gcd)});
        config["bounds"] = {{"lifting_q", b.lifting_q}, {"lifting_m", b.lifting_m}, {"lifting_p", b.lifting_p},
                            {"gcd_q", b.gcd_q},         {"gcd_km", b.gcd_km}};
      }
      result["ok"] = ok;
      emit(global, envelope(config, result));
      return ok ? kExitOk : kExitFailed;
    }

    if (cases->parsed()) {
      config["subcommand"] = "cases";
      config["id"] = case_id;
      std::vector<std::string> ids = case_id == "all" ? case_ids() : std::vector<std::string>{case_id};
      Json reports = Json::array();
      bool ok = true;
      for (const auto& id : ids) {
        const CaseReport r = run_case(id);
        ok = ok && r.match;
        reports.push_back(to_json(r));
      }
      emit(global, envelope(config, ids.size() == 1 ? reports.front() : reports));
      return ok ? kExitOk : kExitFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  std::cerr << app.help();
  return kExitBadInput;
}
