#include "dessins/io.hpp"

#include <sstream>
#include <stdexcept>

namespace dessins {

namespace {

std::string rational_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

}  // namespace

OrderedJson dessin_to_json(const Dessin& D) {
  OrderedJson j;
  j["n"] = D.edge_count();
  j["sigma0"] = D.sigma0().cycles(false);
  j["sigma1"] = D.sigma1().cycles(false);
  return j;
}

Dessin dessin_from_json(const OrderedJson& j) {
  int n = j.at("n").get<int>();
  auto cycles0 = j.at("sigma0").get<std::vector<std::vector<int>>>();
  auto cycles1 = j.at("sigma1").get<std::vector<std::vector<int>>>();
  return Dessin(Permutation::from_cycles(cycles0, n),
                Permutation::from_cycles(cycles1, n));
}

OrderedJson poly_to_json(const ExactPolynomial& F) {
  OrderedJson j;
  j["field"] = F.field() == Field::Q ? "Q" : "Q(sqrt-3)";
  OrderedJson coeffs = OrderedJson::array();
  for (int i = 0; i <= F.degree(); ++i) {
    ExactScalar c = F.coeff(i);
    coeffs.push_back({rational_string(c.rat()), rational_string(c.irr())});
  }
  j["coeffs"] = coeffs;
  return j;
}

ExactPolynomial poly_from_json(const OrderedJson& j) {
  std::string field_name = j.at("field").get<std::string>();
  Field field;
  if (field_name == "Q")
    field = Field::Q;
  else if (field_name == "Q(sqrt-3)")
    field = Field::QSqrtMinus3;
  else
    throw std::invalid_argument("unknown coefficient field: " + field_name);
  std::vector<ExactScalar> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("coefficient must be a [rat, rat] pair");
    coeffs.emplace_back(parse_rational(pair[0].get<std::string>()),
                        parse_rational(pair[1].get<std::string>()));
  }
  return ExactPolynomial(std::move(coeffs), field);
}

OrderedJson label_to_json(const GroupLabel& label) {
  OrderedJson j;
  j["kind"] = label_kind_tag(label.kind);
  j["name"] = label_to_string(label);
  OrderedJson params = OrderedJson::array();
  if (label.kind == GroupLabel::Kind::Unknown) {
    j["order"] = label.unknown_order.str();
  } else {
    params.push_back(label.a);
    if (label.b != 0) params.push_back(label.b);
  }
  j["params"] = params;
  return j;
}

OrderedJson group_report_json(const GroupHandle& G, const RecognitionResult& rec) {
  OrderedJson j;
  OrderedJson gens = OrderedJson::array();
  for (const auto& g : G.generators()) gens.push_back(g.to_cycle_string());
  j["degree"] = G.degree();
  j["generators"] = gens;
  j["order"] = G.order().str();
  j["transitive"] = G.is_transitive();
  j["label"] = label_kind_tag(rec.label.kind);
  OrderedJson params = OrderedJson::array();
  if (rec.label.kind == GroupLabel::Kind::Unknown) {
    params.push_back(rec.label.unknown_order.str());
  } else {
    params.push_back(rec.label.a);
    if (rec.label.b != 0) params.push_back(rec.label.b);
  }
  j["label_params"] = params;
  j["label_name"] = label_to_string(rec.label);
  OrderedJson evidence;
  if (rec.blocks) {
    evidence["blocks"] = rec.blocks->blocks;
    evidence["kernel_order"] = rec.kernel_order ? rec.kernel_order->str() : "";
    evidence["signature"] = rec.signature ? rec.signature->describe() : "";
  }
  j["evidence"] = evidence;
  return j;
}

OrderedJson row_report_json(const RowReport& report) {
  OrderedJson j;
  j["family"] = family_name(report.params);
  j["params"] = family_to_string(report.params);
  j["n"] = report.prediction.n;
  j["passport"] = report.prediction.passport.to_string();
  OrderedJson predicted;
  predicted["label"] = label_to_json(report.prediction.label);
  if (report.prediction.label.kind != GroupLabel::Kind::Unknown)
    predicted["order"] = predicted_order(report.prediction.label).str();
  j["predicted"] = predicted;
  OrderedJson computed;
  computed["order"] = report.computed_order.str();
  computed["label"] = label_to_json(report.recognized);
  j["computed"] = computed;
  OrderedJson assertions = OrderedJson::array();
  for (const auto& a : report.assertions) {
    OrderedJson entry;
    entry["name"] = a.name;
    entry["pass"] = a.pass;
    if (!a.detail.empty()) entry["detail"] = a.detail;
    assertions.push_back(entry);
  }
  j["assertions"] = assertions;
  j["notes"] = report.notes;
  j["pass"] = report.all_pass;
  return j;
}

OrderedJson sweep_report_json(const std::vector<RowReport>& reports) {
  OrderedJson rows = OrderedJson::array();
  int failures = 0;
  for (const auto& report : reports) {
    rows.push_back(row_report_json(report));
    if (!report.all_pass) ++failures;
  }
  OrderedJson j;
  j["rows"] = rows;
  j["total"] = reports.size();
  j["failures"] = failures;
  return j;
}

OrderedJson traced_graph_json(const TracedGraph& graph) {
  OrderedJson j;
  OrderedJson verts = OrderedJson::array();
  for (const auto& v : graph.vertices) {
    OrderedJson entry;
    entry["position"] = {v.position.real(), v.position.imag()};
    entry["black"] = v.black;
    entry["multiplicity"] = v.multiplicity;
    entry["cluster_radius"] = v.cluster_radius;
    verts.push_back(entry);
  }
  j["vertices"] = verts;
  OrderedJson edges = OrderedJson::array();
  for (const auto& e : graph.edges) {
    OrderedJson entry;
    entry["black_vertex"] = e.black_vertex;
    entry["white_vertex"] = e.white_vertex;
    OrderedJson path = OrderedJson::array();
    for (size_t k = 0; k < e.path.size(); k += 16)
      path.push_back({e.path[k].real(), e.path[k].imag()});
    entry["path"] = path;
    edges.push_back(entry);
  }
  j["edges"] = edges;
  j["rotations"] = graph.rotations;
  return j;
}

}  // namespace dessins
