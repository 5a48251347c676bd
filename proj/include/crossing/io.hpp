#pragma once

#include <iosfwd>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossing/certificate.hpp"
#include "crossing/constructions.hpp"
#include "crossing/harness.hpp"

namespace crossing {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Base graph, crossings and edge orders; the planarization is rebuilt and
/// checked on load (FormatError if it does not verify).
Json to_json(const DrawingCertificate& c);
DrawingCertificate certificate_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const KappaRecord& r);
KappaRecord kappa_record_from_json(const Json& j);
Json to_json(const std::vector<KappaRecord>& records);
std::vector<KappaRecord> kappa_records_from_json(const Json& j);

Json to_json(const SampleStats& s);
Json to_json(const GammaSeries& s);
Json to_json(const DEstimate& d);
Json to_json(const BlowupResult& b, const BlowupParams& params);
Json to_json(const SandwichReport& r);
Json to_json(const std::vector<SubadditivityViolation>& v);
Json to_json(const std::vector<CrossingLemmaViolation>& v);
Json to_json(const std::vector<MonotonicityViolation>& v);

/// CSV with columns class,n,e,kappa,exact,witness_graph6, preceded by each
/// line of `comment` prefixed with "# ".
void write_kappa_csv(std::ostream& out, const std::vector<KappaRecord>& records, const std::string& comment = "");
/// Reads the CSV back (records carry no certificate; lower = kappa when
/// exact, else 0). Comment lines are skipped. Throws FormatError.
std::vector<KappaRecord> read_kappa_csv(std::istream& in);

}  // namespace crossing
