#include "multipark/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace multipark {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

ColoredMultigraph graph_from_json_text(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw std::invalid_argument("graph document must be an object");
  if (!j.contains("n")) throw std::invalid_argument("graph document is missing \"n\"");
  const int n = as_int(j["n"], "n");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("each edge must be a pair [u,v]");
      pairs.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
  }
  return ColoredMultigraph::from_edge_list(n, pairs);
}

std::string graph_to_json_text(const ColoredMultigraph& G) {
  json edges = json::array();
  for (const auto& [u, v] : G.edge_pairs()) edges.push_back({u, v});
  json j{{"n", G.vertex_count()}, {"edges", std::move(edges)}};
  return j.dump();
}

std::vector<int> int_array_from_json_text(const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> out;
  for (const json& x : j) out.push_back(as_int(x, "array entry"));
  return out;
}

std::string int_array_to_json_text(const std::vector<int>& xs) {
  return json(xs).dump();
}

ColorForest forest_from_json_text(const std::string& text, int n, Vertex m) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("forest document must be {\"edges\": [[u,v,color],...]}");
  ColorForest F{n, m, {}};
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("each forest edge must be a triple [u,v,color]");
    F.edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"),
                         as_int(e[2], "edge color"));
  }
  std::sort(F.edges.begin(), F.edges.end());
  return F;
}

std::string forest_to_json_text(const ColorForest& F) {
  json edges = json::array();
  for (const EdgeRef& e : F.edges) edges.push_back({e.u, e.v, e.color});
  json j{{"edges", std::move(edges)}};
  return j.dump();
}

std::string poly_to_json_text(const LaurentPolynomial& p) {
  json j = json::object();
  for (const auto& [exp, coeff] : p.terms()) j[std::to_string(exp)] = coeff;
  return j.dump();
}

LaurentPolynomial poly_from_json_text(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw std::invalid_argument("polynomial document must be an object");
  LaurentPolynomial p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int exp = 0;
    try {
      exp = std::stoi(key, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("polynomial exponent keys must be integers");
    }
    if (used != key.size())
      throw std::invalid_argument("polynomial exponent keys must be integers");
    if (!value.is_number_integer())
      throw std::invalid_argument("polynomial coefficients must be integers");
    p.add_term(exp, value.get<long long>());
  }
  return p;
}

}  // namespace multipark
