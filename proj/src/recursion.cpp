#include "multipark/recursion.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "multipark/genfunc.hpp"

namespace multipark {

BivariatePolynomial BivariatePolynomial::one() {
  BivariatePolynomial p;
  p.terms[{0, 0}] = 1;
  return p;
}

void BivariatePolynomial::add_term(int xe, int ye, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(std::make_pair(xe, ye), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial BivariatePolynomial::times_x() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms) out.terms.emplace(std::make_pair(e.first + 1, e.second), c);
  return out;
}

BivariatePolynomial BivariatePolynomial::times_y() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms) out.terms.emplace(std::make_pair(e.first, e.second + 1), c);
  return out;
}

long long BivariatePolynomial::eval(long long x, long long y) const {
  long long total = 0;
  for (const auto& [e, c] : terms) {
    long long term = c;
    for (int i = 0; i < e.first; ++i) term *= x;
    for (int i = 0; i < e.second; ++i) term *= y;
    total += term;
  }
  return total;
}

LaurentPolynomial BivariatePolynomial::at_x1_y_recip() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms) out.add_term(-e.second, c);
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto [xe, ye] = it->first;
    const long long c = it->second;
    std::string body;
    if (xe > 0) body += xe == 1 ? "x" : "x^" + std::to_string(xe);
    if (ye > 0) {
      if (!body.empty()) body += "*";
      body += ye == 1 ? "y" : "y^" + std::to_string(ye);
    }
    std::string term;
    if (body.empty())
      term = std::to_string(c);
    else if (c == 1)
      term = body;
    else
      term = std::to_string(c) + "*" + body;
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

namespace {

LaurentPolynomial q_pow(int k) { return LaurentPolynomial::monomial(1, k); }

// Picks index 0 without an engine (lexicographic choice), pseudo-random with one.
struct PivotChooser {
  std::mt19937_64* rng = nullptr;
  std::size_t pick(std::size_t options) { return rng ? (*rng)() % options : 0; }
};

ColoredMultigraph relabel_with_root(const ColoredMultigraph& g, Vertex r) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;  // old labels in new-label order; r goes last
  for (Vertex v = 1; v <= n; ++v)
    if (v != r) order.push_back(v);
  order.push_back(r);
  std::vector<int> mu(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mu[static_cast<std::size_t>(a) * n + b] = g.mu(order[a], order[b]);
  return ColoredMultigraph::from_multiplicity(n, std::move(mu));
}

LaurentPolynomial p_rec(const ColoredMultigraph& g, MemoTable<LaurentPolynomial>& memo,
                        PivotChooser& chooser) {
  const std::string key = g.multiplicity_key();
  if (const LaurentPolynomial* hit = memo.find(key)) return *hit;

  const int n = g.vertex_count();
  LaurentPolynomial result;
  if (n == 1) {
    result = q_pow(-1);
  } else {
    std::vector<Vertex> loop_vertices;
    for (Vertex i = 1; i <= n; ++i)
      if (g.loops_at(i) > 0) loop_vertices.push_back(i);
    if (!loop_vertices.empty()) {
      Vertex i = loop_vertices[chooser.pick(loop_vertices.size())];
      result = p_rec(g.delete_edge(EdgeRef(i, i, 0)), memo, chooser);
    } else {
      std::vector<EdgeRef> pivots;  // non-loop, non-bridge colored edges
      std::vector<EdgeRef> bridges;
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
          const int m = g.mu(u, v);
          if (m == 0) continue;
          if (m >= 2 || !g.is_bridge(EdgeRef(u, v, 0)))
            for (int c = 0; c < m; ++c) pivots.emplace_back(u, v, c);
          else
            bridges.emplace_back(u, v, 0);
        }
      if (!pivots.empty()) {
        const EdgeRef e = pivots[chooser.pick(pivots.size())];
        result = q_pow(1) * p_rec(g.delete_edge(e), memo, chooser) +
                 p_rec(g.contract_edge(e), memo, chooser);
      } else {
        // every edge is a bridge: split off the far side of one of them
        const EdgeRef e = bridges[chooser.pick(bridges.size())];
        const ColoredMultigraph cut = g.delete_edge(e);
        auto comps = cut.components();
        std::vector<Vertex>* root_side = nullptr;
        std::vector<Vertex>* far_side = nullptr;
        for (auto& comp : comps) {
          if (std::find(comp.begin(), comp.end(), n) != comp.end())
            root_side = &comp;
          else
            far_side = &comp;
        }
        const Vertex attach =
            std::find(far_side->begin(), far_side->end(), e.u) != far_side->end() ? e.u : e.v;
        const ColoredMultigraph g1 = cut.induced(*root_side);
        ColoredMultigraph g2 = cut.induced(*far_side);
        // the attachment endpoint acts as the root of the far factor
        const int attach_new =
            static_cast<int>(std::lower_bound(far_side->begin(), far_side->end(), attach) -
                             far_side->begin()) +
            1;
        g2 = relabel_with_root(g2, attach_new);
        result = q_pow(1) * p_rec(g1, memo, chooser) * p_rec(g2, memo, chooser);
      }
    }
  }
  memo.store(key, result);
  return result;
}

LaurentPolynomial run_p(const ColoredMultigraph& G, PivotChooser chooser) {
  if (!G.connected()) throw std::invalid_argument("graph must be connected");
  MemoTable<LaurentPolynomial> memo;
  return p_rec(G, memo, chooser);
}

}  // namespace

LaurentPolynomial P_recursive(const ColoredMultigraph& G) { return run_p(G, PivotChooser{}); }

LaurentPolynomial P_recursive_randomized(const ColoredMultigraph& G, std::uint64_t pivot_seed) {
  std::mt19937_64 rng(pivot_seed);
  return run_p(G, PivotChooser{&rng});
}

LaurentPolynomial P_rooted(const ColoredMultigraph& G, Vertex r) {
  if (r < 1 || r > G.vertex_count()) throw std::invalid_argument("root vertex out of range");
  return P_recursive(relabel_with_root(G, r));
}

namespace {

BivariatePolynomial t_rec(const ColoredMultigraph& g, MemoTable<BivariatePolynomial>& memo) {
  const std::string key = g.multiplicity_key();
  if (const BivariatePolynomial* hit = memo.find(key)) return *hit;

  BivariatePolynomial result;
  const std::vector<EdgeRef> edges = g.edges();
  if (edges.empty()) {
    result = BivariatePolynomial::one();
  } else {
    const EdgeRef e = edges.front();
    if (e.is_loop())
      result = t_rec(g.delete_edge(e), memo).times_y();
    else if (g.is_bridge(e))
      result = t_rec(g.delete_edge(e), memo).times_x();
    else {
      result = t_rec(g.delete_edge(e), memo);
      result += t_rec(g.contract_edge(e), memo);
    }
  }
  memo.store(key, result);
  return result;
}

}  // namespace

BivariatePolynomial tutte(const ColoredMultigraph& G) {
  MemoTable<BivariatePolynomial> memo;
  return t_rec(G, memo);
}

TutteReport tutte_check(const ColoredMultigraph& G) {
  TutteReport report;
  report.parking_poly = P_poly(G, G.vertex_count());
  report.tutte_poly = tutte(G);
  report.tutte_side =
      report.tutte_poly.at_x1_y_recip().shifted(G.edge_count() - G.vertex_count());
  report.pass = report.parking_poly == report.tutte_side;
  return report;
}

}  // namespace multipark
