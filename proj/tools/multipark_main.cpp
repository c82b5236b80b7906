// multipark: exact toolkit for rooted parking functions on edge-colored
// multigraphs. Subcommands: enumerate | forests | phi | psi | poly | verify
// | corpus. Exit codes: 0 ok/pass, 1 malformed input, 2 invalid function or
// forest / falsified identity.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multipark/bijection.hpp"
#include "multipark/corpus.hpp"
#include "multipark/genfunc.hpp"
#include "multipark/json_io.hpp"
#include "multipark/multigraph.hpp"
#include "multipark/parking.hpp"
#include "multipark/recursion.hpp"

namespace {

using namespace multipark;
using nlohmann::json;

// Inline JSON when the argument looks like a document, file contents otherwise.
std::string read_doc(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Invocation {
  std::string graph_arg;
  int m = 0;  // 0 = default to n
  bool m_given = false;
  std::string ranking_arg;
  std::string format = "text";
};

ColoredMultigraph load_graph(const Invocation& inv) {
  return graph_from_json_text(read_doc(inv.graph_arg));
}

Vertex resolve_m(const Invocation& inv, const ColoredMultigraph& G) {
  if (!inv.m_given) return G.vertex_count();
  if (inv.m < 1 || inv.m > G.vertex_count())
    throw std::invalid_argument("threshold m out of range");
  return inv.m;
}

VertexRanking resolve_ranking(const Invocation& inv, int n) {
  if (inv.ranking_arg.empty()) return VertexRanking::identity(n);
  std::vector<int> images;
  std::stringstream ss(inv.ranking_arg);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      images.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("ranking must be comma-separated integers");
    }
  }
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("ranking length does not match vertex count");
  return VertexRanking::from_images(std::move(images));
}

json forest_json(const ColorForest& F) {
  json edges = json::array();
  for (const EdgeRef& e : F.edges) edges.push_back({e.u, e.v, e.color});
  return json{{"edges", std::move(edges)}};
}

int cmd_enumerate(const Invocation& inv) {
  ColoredMultigraph G = load_graph(inv);
  Vertex m = resolve_m(inv, G);
  auto fns = enumerate_multiparking(G, m);
  if (inv.format == "json") {
    json out{{"count", fns.size()}, {"functions", json::array()}};
    for (const auto& f : fns) out["functions"].push_back({{"f", f.values}, {"sum", f.sum()}});
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& f : fns)
      std::cout << json(f.values).dump() << " sum=" << f.sum() << "\n";
  }
  return 0;
}

int cmd_forests(const Invocation& inv) {
  ColoredMultigraph G = load_graph(inv);
  Vertex m = resolve_m(inv, G);
  auto forests = enumerate_color_forests(G, m);
  if (inv.format == "json") {
    json out{{"count", forests.size()}, {"forests", json::array()}};
    for (const auto& F : forests) out["forests"].push_back(forest_json(F));
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& F : forests) std::cout << forest_json(F).dump() << "\n";
  }
  return 0;
}

int cmd_phi(const Invocation& inv, const std::string& f_arg) {
  ColoredMultigraph G = load_graph(inv);
  Vertex m = resolve_m(inv, G);
  VertexRanking tau = resolve_ranking(inv, G.vertex_count());
  MultiparkingFunction f{m, int_array_from_json_text(read_doc(f_arg))};
  PhiResult result = phi(G, f, tau);
  if (inv.format == "json") {
    json out{{"forest", forest_json(result.forest)}, {"order", result.order.pi}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "forest: " << forest_json(result.forest).dump() << "\n";
    std::cout << "order: " << json(result.order.pi).dump() << "\n";
  }
  return 0;
}

int cmd_psi(const Invocation& inv, const std::string& forest_arg) {
  ColoredMultigraph G = load_graph(inv);
  Vertex m = resolve_m(inv, G);
  VertexRanking tau = resolve_ranking(inv, G.vertex_count());
  ColorForest F = forest_from_json_text(read_doc(forest_arg), G.vertex_count(), m);
  PsiResult result = psi(G, F, tau);
  if (inv.format == "json") {
    json out{{"f", result.f.values}, {"order", result.order.pi}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "f: " << json(result.f.values).dump() << "\n";
    std::cout << "order: " << json(result.order.pi).dump() << "\n";
  }
  return 0;
}

int cmd_poly(const Invocation& inv, const std::string& which) {
  ColoredMultigraph G = load_graph(inv);
  Vertex m = resolve_m(inv, G);
  LaurentPolynomial p;
  if (which == "P")
    p = P_poly(G, m);
  else if (which == "Pbar")
    p = Pbar_poly(G, m);
  else if (which == "I")
    p = I_poly(G, m, resolve_ranking(inv, G.vertex_count()));
  else
    throw std::invalid_argument("--which must be P, Pbar or I");
  if (inv.format == "json")
    std::cout << poly_to_json_text(p) << "\n";
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

void emit_report(const Invocation& inv, const std::string& check, bool pass,
                 const std::vector<std::pair<std::string, std::string>>& fields) {
  if (inv.format == "json") {
    json out{{"check", check}, {"pass", pass}};
    for (const auto& [k, v] : fields) out[k] = v;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "check: " << check << "\n";
    for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
}

int cmd_verify(const Invocation& inv, const std::string& check) {
  ColoredMultigraph G = load_graph(inv);
  const int n = G.vertex_count();
  bool pass = false;

  if (check == "reciprocity") {
    Vertex m = resolve_m(inv, G);
    VertexRanking tau = resolve_ranking(inv, n);
    ReciprocityReport r = reciprocity_check(G, m, tau);
    pass = r.pass;
    emit_report(inv, check, pass,
                {{"qV_I", r.qV_I.to_string()},
                 {"pbar", r.pbar.to_string()},
                 {"qE_P_inv", r.qE_Pinv.to_string()}});
  } else if (check == "recursion") {
    if (inv.m_given && inv.m != n)
      throw std::invalid_argument("the recursion is defined for m = n only");
    LaurentPolynomial rec = P_recursive(G);
    LaurentPolynomial brute = P_poly(G, n);
    pass = rec == brute;
    emit_report(inv, check, pass,
                {{"P_recursive", rec.to_string()}, {"P_brute", brute.to_string()}});
  } else if (check == "tutte") {
    if (inv.m_given && inv.m != n)
      throw std::invalid_argument("the Tutte identity is defined for m = n only");
    TutteReport r = tutte_check(G);
    pass = r.pass;
    emit_report(inv, check, pass,
                {{"tutte", r.tutte_poly.to_string()},
                 {"tutte_side", r.tutte_side.to_string()},
                 {"P", r.parking_poly.to_string()}});
  } else if (check == "bijection") {
    Vertex m = resolve_m(inv, G);
    VertexRanking tau = resolve_ranking(inv, n);
    auto fns = enumerate_multiparking(G, m);
    auto forests = enumerate_color_forests(G, m);
    bool round_trips = true;
    for (const auto& f : fns) {
      PhiResult fw = phi(G, f, tau);
      PsiResult bw = psi(G, fw.forest, tau);
      if (bw.f != f || bw.order != fw.order) round_trips = false;
    }
    for (const auto& F : forests) {
      PsiResult bw = psi(G, F, tau);
      PhiResult fw = phi(G, bw.f, tau);
      if (fw.forest != F || fw.order != bw.order) round_trips = false;
    }
    pass = round_trips && fns.size() == forests.size();
    emit_report(inv, check, pass,
                {{"functions", std::to_string(fns.size())},
                 {"forests", std::to_string(forests.size())},
                 {"round_trips", round_trips ? "ok" : "broken"}});
  } else if (check == "corollary") {
    Vertex m = resolve_m(inv, G);
    VertexRanking tau = resolve_ranking(inv, n);
    auto forests = enumerate_color_forests(G, m);
    int failures = 0;
    for (const auto& F : forests) {
      CorollaryStats s = corollary_stats(G, F, tau);
      if (s.f_sum != s.color_sum + s.n_sum - s.sigma) ++failures;
    }
    pass = failures == 0;
    emit_report(inv, check, pass,
                {{"forests", std::to_string(forests.size())},
                 {"identity_failures", std::to_string(failures)}});
  } else {
    throw std::invalid_argument(
        "--check must be reciprocity, recursion, tutte, bijection or corollary");
  }
  return pass ? 0 : 2;
}

int cmd_corpus(int max_n, int max_mu, int count, std::uint64_t seed) {
  for (const ColoredMultigraph& g : all_connected_multigraphs(max_n, max_mu))
    std::cout << graph_to_json_text(g) << "\n";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    int n = max_n + 1 + (i % 2);
    bool loops = i % 5 == 0;
    std::cout << graph_to_json_text(random_connected_multigraph(n, max_mu, loops, rng)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for rooted parking functions on colored multigraphs"};
  app.require_subcommand(1);

  Invocation inv;
  std::string f_arg, forest_arg, which, check;
  int max_n = 2, max_mu = 1, count = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool with_ranking) {
    sub->add_option("graph", inv.graph_arg, "graph JSON document or file path")->required();
    sub->add_option("--m", inv.m, "root threshold (default: n)")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { inv.m_given = true; });
    if (with_ranking)
      sub->add_option("--ranking", inv.ranking_arg, "tau images tau(1),...,tau(n)");
    sub->add_option("--format", inv.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all multiparking functions");
  add_common(enumerate, false);

  CLI::App* forests = app.add_subcommand("forests", "list all spanning color m-forests");
  add_common(forests, false);

  CLI::App* phi_cmd = app.add_subcommand("phi", "map a function to its forest");
  add_common(phi_cmd, true);
  phi_cmd->add_option("--f", f_arg, "function as a JSON array, e.g. [0,1,-1]")->required();

  CLI::App* psi_cmd = app.add_subcommand("psi", "map a forest back to its function");
  add_common(psi_cmd, true);
  psi_cmd->add_option("--forest", forest_arg, "forest as {\"edges\":[[u,v,color],...]}")
      ->required();

  CLI::App* poly = app.add_subcommand("poly", "generating functions P, Pbar, I");
  add_common(poly, true);
  poly->add_option("--which", which, "P, Pbar or I")->required();

  CLI::App* verify = app.add_subcommand("verify", "check one of the identities");
  add_common(verify, true);
  verify->add_option("--check", check, "reciprocity|recursion|tutte|bijection|corollary")
      ->required();

  CLI::App* corpus = app.add_subcommand("corpus", "emit a graph corpus as JSON lines");
  corpus->add_option("--max-n", max_n, "vertex count of the exhaustive part")->required();
  corpus->add_option("--max-mu", max_mu, "multiplicity bound")->required();
  corpus->add_option("--count", count, "number of random larger instances");
  corpus->add_option("--seed", seed, "seed for the random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(inv);
    if (forests->parsed()) return cmd_forests(inv);
    if (phi_cmd->parsed()) return cmd_phi(inv, f_arg);
    if (psi_cmd->parsed()) return cmd_psi(inv, forest_arg);
    if (poly->parsed()) return cmd_poly(inv, which);
    if (verify->parsed()) return cmd_verify(inv, check);
    if (corpus->parsed()) return cmd_corpus(max_n, max_mu, count, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
