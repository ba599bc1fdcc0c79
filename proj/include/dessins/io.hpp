#ifndef DESSINS_IO_HPP
#define DESSINS_IO_HPP

#include <nlohmann/json.hpp>

#include "dessins/catalog.hpp"
#include "dessins/dessin.hpp"
#include "dessins/exact.hpp"
#include "dessins/group.hpp"
#include "dessins/lift.hpp"

namespace dessins {

/// All emitted JSON uses insertion order so identical invocations produce
/// byte-identical reports.
using OrderedJson = nlohmann::ordered_json;

// {"n": 7, "sigma0": [[1,3,2],[4,7,5]], "sigma1": [[3,4],[5,6]]},
// 1-indexed, fixed points omitted.
OrderedJson dessin_to_json(const Dessin& D);
Dessin dessin_from_json(const OrderedJson& j);

// {"field": "Q" | "Q(sqrt-3)", "coeffs": [["num/den","num/den"], ...]},
// ascending degree, each coefficient a (rational, rational) pair a + b*w.
OrderedJson poly_to_json(const ExactPolynomial& F);
ExactPolynomial poly_from_json(const OrderedJson& j);

OrderedJson label_to_json(const GroupLabel& label);

// {generators, order (decimal string), transitive, label, label_params,
//  evidence: {blocks, kernel_order, signature}}.
OrderedJson group_report_json(const GroupHandle& G, const RecognitionResult& rec);

OrderedJson row_report_json(const RowReport& report);
OrderedJson sweep_report_json(const std::vector<RowReport>& reports);

OrderedJson traced_graph_json(const TracedGraph& graph);

}  // namespace dessins

#endif
