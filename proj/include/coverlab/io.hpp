#pragma once

#include "coverlab/casecheck.hpp"
#include "coverlab/cover_groups.hpp"
#include "coverlab/frames.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/numtheory.hpp"
#include "coverlab/params.hpp"
#include "coverlab/perm_group.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace coverlab {

using Json = nlohmann::json;

/// Malformed input file or JSON document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted keys, no whitespace, doubles printed with 15 significant digits.
std::string canonical_dump(const Json& j);

/// Integers that fit in int64 become JSON numbers, others decimal strings.
Json big_to_json(const BigInt& x);
/// Integer or "p/q" string.
Json rational_to_json(const Rational& q);
Json surd_to_json(const Surd& s);

Json to_json(const CoverParams& p);
Json to_json(const FeasibleB& e);
Json to_json(const FeasibleA& e);

/// {"v", "fibres", "edges"} in canonical order.
Json cover_to_json(const CoverGraph& g);
/// Accepts any order of edges and fibres. Throws InputError on malformed
/// documents and StructuralError on invalid partitions.
CoverGraph cover_from_json(const Json& j);
/// `path` "-" reads standard input.
CoverGraph read_cover_file(const std::string& path);
Json read_json_file(const std::string& path);

Json to_json(const CoverReport& r);
Json to_json(const SpectrumCheck& s);
Json to_json(const Permutation& p);
Json to_json(const PermGroup& g);
Json to_json(const AuditItem& a);
Json to_json(const InvolutionAudit& a);
Json to_json(const SubdegreeCheck& s);
Json to_json(const ArcOrbitReport& a);
Json to_json(const FibreAction& f);
Json to_json(const SpectrumCertificate& s);
/// {d, n, alpha, gram: [[{re, im}, ...]], certificates: {...}}.
Json to_json(const LineSystem& l, const EtfReport& report, const SpectrumCertificate& cert);
Json to_json(const EtfReport& r);
Json to_json(const CaseReport& r);
Json to_json(const SweepReport& r);

}  // namespace coverlab
