#pragma once

#include <string>
#include <vector>

#include "multipark/bijection.hpp"
#include "multipark/laurent.hpp"
#include "multipark/multigraph.hpp"

namespace multipark {

// Graph documents: {"n": <int>, "edges": [[u,v],...]} with multiplicity by
// repetition and loops as [i,i]. Malformed documents raise invalid_argument.
ColoredMultigraph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const ColoredMultigraph& G);

// Plain integer arrays, e.g. functions [0,1,-1] and orders [3,1,2].
std::vector<int> int_array_from_json_text(const std::string& text);
std::string int_array_to_json_text(const std::vector<int>& xs);

// Forests: {"edges": [[u,v,color],...]}; structural validity is checked
// later by the consumer, only the shape is checked here.
ColorForest forest_from_json_text(const std::string& text, int n, Vertex m);
std::string forest_to_json_text(const ColorForest& F);

// Polynomials: {"<exponent>": <coefficient>, ...}.
std::string poly_to_json_text(const LaurentPolynomial& p);
LaurentPolynomial poly_from_json_text(const std::string& text);

}  // namespace multipark
