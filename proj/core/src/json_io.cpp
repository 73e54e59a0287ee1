#include "rds/json_io.hpp"

#include "rds/error.hpp"

namespace rds::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) fail(std::string("expected an object with field \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

long long as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long long>();
}

json encode_range(const IntRange& r) {
  if (r.exact()) return r.lo;
  return json::array({r.lo, r.hi});
}

}  // namespace

json encode(const Rational& q) { return q.str(); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("rationals must be strings like \"p/q\"");
}

json encode(const ImQuadElement& z) { return {{"re", z.re().str()}, {"im", z.im().str()}, {"k", z.k()}}; }

ImQuadElement decode_imquad(const json& j) {
  return ImQuadElement(as_integer(field(j, "k"), "k"), decode_rational(field(j, "re")), decode_rational(field(j, "im")));
}

json encode(const LatticePoint& p) { return {{"x", p.x.str()}, {"yc", p.yc.str()}}; }

LatticePoint decode_point(const json& j) { return {decode_rational(field(j, "x")), decode_rational(field(j, "yc"))}; }

json encode(const Configuration& c) {
  json pts = json::array();
  for (const auto& p : c.points()) pts.push_back(encode(p));
  return {{"k", c.k()}, {"points", std::move(pts)}, {"provenance", c.provenance()}};
}

Configuration decode_configuration(const json& j) {
  const json& pts = field(j, "points");
  if (!pts.is_array()) fail("\"points\" must be an array");
  std::vector<LatticePoint> points;
  for (const auto& p : pts) points.push_back(decode_point(p));
  std::string provenance;
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_string()) fail("\"provenance\" must be a string");
    provenance = it->get<std::string>();
  }
  return Configuration(as_integer(field(j, "k"), "k"), std::move(points), std::move(provenance));
}

json encode(const DistanceMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.squared()) {
    json r = json::array();
    for (const auto& q : row) r.push_back(q.str());
    rows.push_back(std::move(r));
  }
  return {{"squared", std::move(rows)}};
}

DistanceMatrix decode_distance_matrix(const json& j) {
  const json& rows = field(j, "squared");
  if (!rows.is_array()) fail("\"squared\" must be an array of rows");
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    if (!row.is_array()) fail("distance matrix rows must be arrays");
    auto& out = m.emplace_back();
    for (const auto& q : row) out.push_back(decode_rational(q));
  }
  return DistanceMatrix(std::move(m));
}

json encode(const RdsReport& r) {
  json pairs = json::array();
  for (const auto& f : r.failing_pairs) pairs.push_back({{"i", f.i}, {"j", f.j}, {"squared", f.squared.str()}});
  json dist = json::array();
  for (const auto& row : r.distances) {
    json out = json::array();
    for (const auto& d : row) out.push_back(d ? json(d->str()) : json(nullptr));
    dist.push_back(std::move(out));
  }
  return {{"is_rds", r.is_rds}, {"failing_pairs", std::move(pairs)}, {"distances", std::move(dist)}};
}

json encode(const AuditReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"kind", w.kind}, {"indices", w.indices}});
  return {{"n", r.n},
          {"line_threshold", r.line_threshold},
          {"circle_threshold", r.circle_threshold},
          {"max_collinear", r.max_collinear},
          {"max_concyclic", r.max_concyclic},
          {"literal_ok", r.literal_ok},
          {"strong_ok", r.strong_ok},
          {"vacuous_line", r.vacuous_line},
          {"vacuous_circle", r.vacuous_circle},
          {"witnesses", std::move(witnesses)}};
}

json encode(const TriPoly& f, int degree) {
  json monos = json::array();
  for (const auto& [m, c] : f.terms()) monos.push_back({{"i", m[0]}, {"j", m[1]}, {"k", m[2]}, {"c", c.str()}});
  return {{"degree", degree}, {"monomials", std::move(monos)}};
}

json encode(const PlaneCurve& c) { return encode(c.poly(), c.degree()); }

PlaneCurve decode_curve(const json& j) {
  const int degree = static_cast<int>(as_integer(field(j, "degree"), "degree"));
  const json& monos = field(j, "monomials");
  if (!monos.is_array()) fail("\"monomials\" must be an array");
  TriPoly f;
  for (const auto& m : monos) {
    const Monomial e{static_cast<int>(as_integer(field(m, "i"), "i")), static_cast<int>(as_integer(field(m, "j"), "j")),
                     static_cast<int>(as_integer(field(m, "k"), "k"))};
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) fail("monomial exponents must be nonnegative");
    f.add_term(e, decode_rational(field(m, "c")));
  }
  return PlaneCurve(std::move(f), degree);
}

json encode(const TransversalityReport& r) {
  json mults = json::array();
  for (const auto& m : r.multiplicities) mults.push_back({{"multiplicity", m.multiplicity}, {"degree", m.degree}});
  return {{"simple_roots", r.simple_roots},   {"excluded_roots", r.excluded_roots},
          {"multiplicities", std::move(mults)}, {"degree_drop", r.degree_drop},
          {"mu_lower_bound", r.mu_lower_bound}, {"mu_upper_bound", r.mu_upper_bound}};
}

json encode(const TripleSelection& s) {
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(encode(p));
  return {{"indices", s.indices},
          {"points", std::move(pts)},
          {"transverse_points", s.transverse_points},
          {"required", s.required},
          {"transcript", s.transcript}};
}

json encode(const DoubleCoverCurve& d) {
  json triple = json::array();
  for (const auto& p : d.triple) triple.push_back(encode(p));
  return {{"relation", "w^2 = q1*q2*q3, f = 0 in P(1,1,1,3)"},
          {"base", encode(d.base)},
          {"k", d.k},
          {"triple", std::move(triple)},
          {"branch", encode(d.branch, 6)},
          {"r", encode_range(d.ramification)},
          {"genus", encode_range(d.genus)},
          {"base_genus", d.base_genus < 0 ? json(nullptr) : json(d.base_genus)},
          {"note", d.note}};
}

json encode(const QuadricSystem& s) {
  json base = json::array();
  for (const auto& p : s.base()) base.push_back(encode(p));
  return {{"m", s.m()}, {"k", s.k()}, {"base", std::move(base)}};
}

json encode(const LiftedPoint& p) {
  json out = json::array();
  for (const auto& q : p.coords) out.push_back(q.str());
  return out;
}

LiftedPoint decode_lifted_point(const json& j) {
  if (!j.is_array()) fail("a lifted point is an array of rationals");
  LiftedPoint p;
  for (const auto& q : j) p.coords.push_back(decode_rational(q));
  return p;
}

json encode(const SingularityRecord& r) {
  return {{"loc", r.location.str()}, {"e", r.e}, {"a", r.a.str()}, {"canonical", r.canonical()}};
}

json encode(const GeneralTypeCertificate& c) {
  json records = json::array();
  for (const auto& r : c.records) records.push_back(encode(r));
  return {{"m", c.m ? json(*c.m) : json(nullptr)},
          {"dim", c.dim},
          {"K_d", c.k_d.str()},
          {"records", std::move(records)},
          {"lhs", c.lhs.str()},
          {"rhs", c.rhs.str()},
          {"ample", c.ample},
          {"verdict", c.verdict},
          {"reason", c.reason}};
}

json encode(const SearchSpec& s) {
  return {{"k", s.k},
          {"numerator_bound", s.numerator_bound},
          {"denominator_bound", s.denominator_bound},
          {"target_size", s.target_size},
          {"require", std::string(to_string(s.require))}};
}

SearchSpec decode_search_spec(const json& j) {
  SearchSpec s;
  s.k = as_integer(field(j, "k"), "k");
  s.numerator_bound = static_cast<long>(as_integer(field(j, "numerator_bound"), "numerator_bound"));
  s.denominator_bound = static_cast<long>(as_integer(field(j, "denominator_bound"), "denominator_bound"));
  const long long target = as_integer(field(j, "target_size"), "target_size");
  if (target < 0) fail("target_size must be nonnegative");
  s.target_size = static_cast<std::size_t>(target);
  if (auto it = j.find("require"); it != j.end()) {
    if (!it->is_string()) fail("\"require\" must be a string");
    s.require = parse_requirement(it->get<std::string>());
  }
  s.validate();
  return s;
}

json encode(const SearchCheckpoint& c) {
  json frontier = json::array();
  for (const auto& partial : c.frontier) {
    json pts = json::array();
    for (const auto& p : partial) pts.push_back(encode(p));
    frontier.push_back(std::move(pts));
  }
  json found = json::array();
  for (const auto& cfg : c.found) found.push_back(encode(cfg));
  json ranges = json::array();
  for (const auto& r : c.exhausted_ranges) ranges.push_back(json::array({r.begin, r.end}));
  return {{"spec", encode(c.spec)},
          {"frontier", std::move(frontier)},
          {"found", std::move(found)},
          {"exhausted_ranges", std::move(ranges)}};
}

SearchCheckpoint decode_checkpoint(const json& j) {
  SearchCheckpoint c;
  c.spec = decode_search_spec(field(j, "spec"));
  const json& frontier = field(j, "frontier");
  if (!frontier.is_array()) fail("\"frontier\" must be an array");
  for (const auto& partial : frontier) {
    if (!partial.is_array()) fail("frontier entries must be arrays of points");
    auto& out = c.frontier.emplace_back();
    for (const auto& p : partial) out.push_back(decode_point(p));
  }
  const json& found = field(j, "found");
  if (!found.is_array()) fail("\"found\" must be an array");
  for (const auto& cfg : found) c.found.push_back(decode_configuration(cfg));
  const json& ranges = field(j, "exhausted_ranges");
  if (!ranges.is_array()) fail("\"exhausted_ranges\" must be an array");
  for (const auto& r : ranges) {
    if (!r.is_array() || r.size() != 2) fail("cell ranges are [begin, end] pairs");
    const long long b = as_integer(r[0], "range begin");
    const long long e = as_integer(r[1], "range end");
    if (b < 0 || e < b) fail("invalid cell range");
    c.exhausted_ranges.push_back({static_cast<std::size_t>(b), static_cast<std::size_t>(e)});
  }
  return c;
}

}  // namespace rds::json
