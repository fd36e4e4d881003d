#include "coverlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace coverlab {

namespace {

void dump_string(const std::string& s, std::string& out) { out += Json(s).dump(); }

void dump(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map: sorted keys
        if (!first) out += ',';
        first = false;
        dump_string(key, out);
        out += ':';
        dump(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

Json violation_to_json(const Violation& v) {
  return Json{{"axiom", to_string(v.axiom)}, {"witness", v.witness}, {"detail", v.detail}};
}

Json solution_to_json(const CaseSolution& s) {
  Json j = Json::object();
  for (const auto& [k, v] : s.fields) j[k] = big_to_json(v);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  dump(j, out);
  return out;
}

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(x));
  }
  return Json(x.str());
}

Json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) return big_to_json(numerator(q));
  return Json(to_string(q));
}

Json surd_to_json(const Surd& s) {
  return Json{{"a", rational_to_json(s.rational_part())}, {"b", rational_to_json(s.radical_coefficient())},
              {"D", big_to_json(s.radicand())}};
}

namespace {
Json multiplicity_to_json(const Surd& m) { return m.is_integer() ? big_to_json(m.to_integer()) : surd_to_json(m); }
}  // namespace

Json to_json(const CoverParams& p) {
  return Json{{"n", big_to_json(p.n)},          {"r", big_to_json(p.r)},
              {"mu", big_to_json(p.mu)},        {"lambda", big_to_json(p.lambda)},
              {"theta", surd_to_json(p.theta)}, {"tau", surd_to_json(p.tau)},
              {"m_theta", multiplicity_to_json(p.m_theta)}, {"m_tau", multiplicity_to_json(p.m_tau)},
              {"v", big_to_json(p.v)}};
}

Json to_json(const FeasibleB& e) {
  return Json{{"t", big_to_json(e.t)}, {"r", big_to_json(e.r)}, {"special", e.special}, {"params", to_json(e.cover)}};
}

Json to_json(const FeasibleA& e) {
  return Json{{"t", surd_to_json(e.t)},
              {"r", big_to_json(e.r)},
              {"branch", to_string(e.branch)},
              {"conditions", e.conditions},
              {"params", to_json(e.cover)}};
}

Json cover_to_json(const CoverGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.graph().edges()) edges.push_back({u, v});
  return Json{{"v", g.vertex_count()}, {"fibres", g.fibres()}, {"edges", edges}};
}

CoverGraph cover_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("v") || !j.contains("fibres") || !j.contains("edges")) {
      throw InputError("cover file needs keys v, fibres and edges");
    }
    const int v = j.at("v").get<int>();
    if (v < 0) throw InputError("cover file: negative vertex count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("cover file: every edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    auto fibres = j.at("fibres").get<std::vector<std::vector<int>>>();
    return CoverGraph(Graph(v, edges), std::move(fibres));
  } catch (const Json::exception& e) {
    throw InputError(std::string("cover file: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

CoverGraph read_cover_file(const std::string& path) { return cover_from_json(read_json_file(path)); }

Json to_json(const CoverReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(violation_to_json(f));
  Json totals = Json::object();
  for (const auto& [axiom, count] : r.violation_totals) totals[to_string(axiom)] = count;
  Json j{{"is_cover", r.is_cover},
         {"n", r.n},
         {"r", r.r},
         {"failures", failures},
         {"violation_totals", totals},
         {"antipodality_confirmed", r.antipodality_confirmed},
         {"diameter", r.diameter}};
  j["mu"] = r.mu ? Json(*r.mu) : Json(nullptr);
  j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
  return j;
}

Json to_json(const SpectrumCheck& s) { return Json{{"ok", s.ok}, {"failures", s.failures}}; }

Json to_json(const Permutation& p) { return Json(p.images()); }

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(to_json(x));
  return Json{{"degree", g.degree()}, {"order", big_to_json(g.order())}, {"generators", gens}};
}

Json to_json(const AuditItem& a) {
  return Json{{"lemma", a.lemma}, {"item", a.item}, {"status", a.status}, {"witness", a.witness}};
}

namespace {
Json items_to_json(const std::vector<AuditItem>& items) {
  Json out = Json::array();
  for (const auto& a : items) out.push_back(to_json(a));
  return out;
}
}  // namespace

Json to_json(const InvolutionAudit& a) {
  return Json{{"applicable", a.applicable}, {"f", a.f},         {"l", a.l},
              {"alpha", a.alpha},           {"fixed", a.fixed}, {"items", items_to_json(a.items)}};
}

Json to_json(const SubdegreeCheck& s) {
  Json mus = Json::array();
  for (const auto& m : s.mu_checks) {
    mus.push_back({{"a_star", m.a_star}, {"mu", m.mu}, {"mu1", m.mu1}, {"mu2", m.mu2}, {"holds", m.holds}});
  }
  return Json{{"applicable", s.applicable}, {"a", s.a},
              {"k1", s.k1},                 {"k2", s.k2},
              {"lambda", s.lambda},         {"lambda1", s.lambda1},
              {"lambda2", s.lambda2},       {"lambda_identity", s.lambda_identity},
              {"mu_checks", mus},           {"items", items_to_json(s.items)}};
}

Json to_json(const ArcOrbitReport& a) {
  return Json{{"arc_orbits", a.arc_orbits},
              {"vertex_transitive", a.vertex_transitive},
              {"kernel_order", big_to_json(a.kernel_order)},
              {"rank", a.rank},
              {"hypotheses_hold", a.hypotheses_hold},
              {"lemma_holds", a.lemma_holds}};
}

Json to_json(const FibreAction& f) {
  return Json{{"order", big_to_json(f.induced.order())},
              {"transitive", f.transitive},
              {"rank", f.rank},
              {"subdegrees", f.subdegrees}};
}

Json to_json(const SpectrumCertificate& s) {
  return Json{{"eigenvalues", s.eigenvalues},
              {"count_theta", s.count_theta},
              {"count_tau", s.count_tau},
              {"max_deviation", s.max_deviation},
              {"ok", s.ok}};
}

Json to_json(const EtfReport& r) {
  Json j{{"equiangular_deviation", r.equiangular_deviation},
         {"equiangular", r.equiangular},
         {"tight_residual", r.tight_residual},
         {"tight", r.tight},
         {"relative_bound_residual", r.relative_bound_residual},
         {"relative_bound_equality", r.relative_bound_equality},
         {"angle_identity_residual", r.angle_identity_residual},
         {"sic", r.sic},
         {"imaginary_max", r.imaginary_max},
         {"real", r.real},
         {"real_absolute_bound", r.real_absolute_bound},
         {"absolute_bound_attained", r.absolute_bound_attained},
         {"ok", r.ok}};
  if (r.tau_lower) {
    j["tau_lower"] = *r.tau_lower;
    j["tau_upper"] = *r.tau_upper;
    j["tau_endpoint"] = r.tau_endpoint;
  }
  return j;
}

Json to_json(const LineSystem& l, const EtfReport& report, const SpectrumCertificate& cert) {
  Json gram = Json::array();
  for (int i = 0; i < l.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < l.n; ++j) row.push_back({{"re", l.gram(i, j).real()}, {"im", l.gram(i, j).imag()}});
    gram.push_back(row);
  }
  return Json{{"d", l.d},
              {"n", l.n},
              {"alpha", l.alpha},
              {"gram", gram},
              {"certificates", {{"etf", to_json(report)}, {"spectrum", to_json(cert)}}}};
}

Json to_json(const CaseReport& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(solution_to_json(s));
  Json exp = Json::array();
  for (const auto& s : r.expected) exp.push_back(solution_to_json(s));
  return Json{{"case_id", r.case_id}, {"search_space", r.search_space}, {"solutions", sols},
              {"expected", exp},      {"match", r.match},               {"details", r.details}};
}

Json to_json(const SweepReport& r) {
  return Json{{"name", r.name},
              {"checked", r.checked},
              {"applicable", r.applicable},
              {"counterexamples", r.counterexamples}};
}

}  // namespace coverlab
