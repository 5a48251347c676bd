#include "crossing/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "crossing/graph6.hpp"

namespace crossing {

Json to_json(const Graph& g) { return Json{{"n", g.order()}, {"e", g.size()}, {"graph6", to_graph6(g)}}; }

Graph graph_from_json(const Json& j) {
  try {
    return from_graph6(j.at("graph6").get<std::string>());
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("graph: ") + ex.what());
  } catch (const Graph6Error& ex) {
    throw FormatError(std::string("graph: ") + ex.what());
  }
}

Json to_json(const DrawingCertificate& c) {
  Json crossings = Json::array();
  for (const auto& [a, b] : c.crossings) crossings.push_back({a, b});
  return Json{{"graph", to_json(c.base)}, {"crossing_count", c.crossing_count()}, {"crossings", crossings},
              {"edge_orders", c.edge_orders}};
}

DrawingCertificate certificate_from_json(const Json& j) {
  try {
    Graph base = graph_from_json(j.at("graph"));
    std::vector<CrossingPair> crossings;
    for (const auto& pair : j.at("crossings")) crossings.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    auto orders = j.at("edge_orders").get<std::vector<std::vector<int>>>();
    // Structural checks happen in verify_certificate; planarize needs sane indices first.
    if (static_cast<int>(orders.size()) != base.size()) throw FormatError("edge_orders has the wrong length");
    for (const auto& list : orders)
      for (int x : list)
        if (x < 0 || x >= static_cast<int>(crossings.size())) throw FormatError("crossing index out of range");
    for (const auto& [a, b] : crossings)
      if (a < 0 || b >= base.size() || a >= b) throw FormatError("crossing pair out of range");
    std::optional<DrawingCertificate> c;
    try {
      c = make_certificate(std::move(base), std::move(crossings), std::move(orders));
    } catch (const std::invalid_argument&) {
    }
    if (!c || !verify_certificate(*c)) throw FormatError("certificate does not verify");
    return std::move(*c);
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("certificate: ") + ex.what());
  }
}

Json to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw FormatError("rational must be an integer or \"p/q\"");
  const std::string text = j.get<std::string>();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw FormatError("bad rational: " + text);
  }
}

Json to_json(const KappaRecord& r) {
  Json j{{"class", r.spec.to_string()}, {"n", r.n},          {"e", r.e},
         {"kappa", r.kappa},            {"lower", r.lower},  {"exact", r.exact},
         {"witness", to_json(r.witness)}};
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  return j;
}

KappaRecord kappa_record_from_json(const Json& j) {
  try {
    KappaRecord r;
    r.spec = ClassSpec::parse(j.at("class").get<std::string>());
    r.n = j.at("n").get<int>();
    r.e = j.at("e").get<int>();
    r.kappa = j.at("kappa").get<int>();
    r.lower = j.at("lower").get<int>();
    r.exact = j.at("exact").get<bool>();
    r.witness = graph_from_json(j.at("witness"));
    if (j.contains("certificate") && !j.at("certificate").is_null())
      r.certificate = certificate_from_json(j.at("certificate"));
    return r;
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("kappa record: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("kappa record: ") + ex.what());
  }
}

Json to_json(const std::vector<KappaRecord>& records) {
  Json j = Json::array();
  for (const auto& r : records) j.push_back(to_json(r));
  return j;
}

std::vector<KappaRecord> kappa_records_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of kappa records");
  std::vector<KappaRecord> out;
  for (const auto& x : j) out.push_back(kappa_record_from_json(x));
  return out;
}

Json to_json(const SampleStats& s) {
  return Json{{"p", s.p},           {"trials", s.trials},   {"seed", s.seed},       {"nu_mean", s.nu_mean},
              {"eta_mean", s.eta_mean}, {"xi_mean", s.xi_mean}, {"nu_var", s.nu_var}, {"eta_var", s.eta_var},
              {"xi_var", s.xi_var}};
}

namespace {
Json point_json(const GammaPoint& p) {
  return Json{{"n", p.n}, {"e", p.e}, {"kappa", p.kappa}, {"exact", p.exact}, {"value", to_json(p.value)}};
}
const char* side_name(SideStatus s) {
  switch (s) {
    case SideStatus::Verified:
      return "verified";
    case SideStatus::Violated:
      return "violated";
    default:
      return "skipped";
  }
}
}  // namespace

Json to_json(const GammaSeries& s) {
  Json points = Json::array();
  for (const auto& p : s.points) points.push_back(point_json(p));
  return Json{{"class", s.spec.to_string()}, {"a", to_json(s.a)}, {"points", points}};
}

Json to_json(const DEstimate& d) {
  Json grid = Json::array();
  for (const auto& [a, p] : d.grid) {
    Json x = point_json(p);
    x["a"] = to_json(a);
    grid.push_back(x);
  }
  return Json{{"class", d.spec.to_string()}, {"grid", grid},           {"d_value", to_json(d.d_value)},
              {"window_ok", d.window_ok},    {"exact", d.exact},       {"finite_scale", d.finite_scale}};
}

Json to_json(const BlowupResult& b, const BlowupParams& params) {
  return Json{{"degree_threshold", params.degree_threshold},
              {"L", params.L},
              {"K", params.K},
              {"bound", b.bound},
              {"counted", b.counted},
              {"within_bound", b.counted <= b.bound},
              {"certificate", to_json(b.certificate)}};
}

Json to_json(const SandwichReport& r) {
  return Json{{"a", to_json(r.a)},
              {"n", r.n},
              {"e", r.e},
              {"kappa_upper", r.record.kappa},
              {"kappa_lower", r.record.lower},
              {"exact", r.record.exact},
              {"lower_side", side_name(r.lower_side)},
              {"upper_side", side_name(r.upper_side)},
              {"holds", r.holds()}};
}

Json to_json(const std::vector<SubadditivityViolation>& v) {
  Json j = Json::array();
  for (const auto& x : v)
    j.push_back({{"n1", x.n1}, {"e1", x.e1}, {"kappa1", x.kappa1}, {"n2", x.n2}, {"e2", x.e2}, {"kappa2", x.kappa2},
                 {"kappa_sum_point", x.kappa_sum_point}});
  return j;
}

Json to_json(const std::vector<CrossingLemmaViolation>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back({{"n", x.n}, {"e", x.e}, {"kappa", x.kappa}, {"denominator", x.denominator}});
  return j;
}

Json to_json(const std::vector<MonotonicityViolation>& v) {
  Json j = Json::array();
  for (const auto& x : v)
    j.push_back({{"n1", x.n1}, {"e1", x.e1}, {"kappa1", x.kappa1}, {"n2", x.n2}, {"e2", x.e2}, {"kappa2", x.kappa2}});
  return j;
}

void write_kappa_csv(std::ostream& out, const std::vector<KappaRecord>& records, const std::string& comment) {
  std::istringstream lines(comment);
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  out << "class,n,e,kappa,exact,witness_graph6\n";
  for (const auto& r : records) {
    // Class names contain commas inside parentheses; quote them.
    out << '"' << r.spec.to_string() << "\"," << r.n << ',' << r.e << ',' << r.kappa << ','
        << (r.exact ? "true" : "false") << ',' << to_graph6(r.witness) << '\n';
  }
}

std::vector<KappaRecord> read_kappa_csv(std::istream& in) {
  std::vector<KappaRecord> out;
  bool header = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "class,n,e,kappa,exact,witness_graph6") throw FormatError("unexpected CSV header");
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      else if (ch == ',' && !quoted) {
        fields.push_back(field);
        field.clear();
      } else field += ch;
    }
    fields.push_back(field);
    if (fields.size() != 6) throw FormatError("line " + std::to_string(line_no) + ": expected 6 fields");
    try {
      KappaRecord r;
      r.spec = ClassSpec::parse(fields[0]);
      r.n = std::stoi(fields[1]);
      r.e = std::stoi(fields[2]);
      r.kappa = std::stoi(fields[3]);
      if (fields[4] != "true" && fields[4] != "false") throw FormatError("exact must be true or false");
      r.exact = fields[4] == "true";
      r.lower = r.exact ? r.kappa : 0;
      r.witness = from_graph6(fields[5]);
      out.push_back(std::move(r));
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception& ex) {
      throw FormatError("line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  if (!header) throw FormatError("missing CSV header");
  return out;
}

}  // namespace crossing
