#include "multipark/multigraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace multipark {

std::string to_string(const EdgeRef& e) {
  std::ostringstream os;
  os << "{" << e.u << "," << e.v << "}_" << e.color;
  return os.str();
}

void ColoredMultigraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex label out of range");
}

ColoredMultigraph ColoredMultigraph::from_edge_list(
    int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  if (n > 64) throw std::invalid_argument("vertex count is limited to 64");
  std::vector<int> mu(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : pairs) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge endpoint out of range");
    mu[static_cast<std::size_t>(u - 1) * n + (v - 1)] += 1;
    if (u != v) mu[static_cast<std::size_t>(v - 1) * n + (u - 1)] += 1;
  }
  return ColoredMultigraph(n, std::move(mu));
}

ColoredMultigraph ColoredMultigraph::from_multiplicity(int n, std::vector<int> mu) {
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  if (n > 64) throw std::invalid_argument("vertex count is limited to 64");
  if (mu.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("multiplicity table has wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = mu[static_cast<std::size_t>(i) * n + j];
      if (m < 0) throw std::invalid_argument("negative multiplicity");
      if (m != mu[static_cast<std::size_t>(j) * n + i])
        throw std::invalid_argument("multiplicity table is not symmetric");
    }
  return ColoredMultigraph(n, std::move(mu));
}

int ColoredMultigraph::edge_count() const {
  int total = 0;
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex j = i; j <= n_; ++j) total += mu_[idx(i, j)];
  return total;
}

int ColoredMultigraph::deg(Vertex i) const {
  check_vertex(i);
  int d = 2 * mu_[idx(i, i)];
  for (Vertex j = 1; j <= n_; ++j)
    if (j != i) d += mu_[idx(i, j)];
  return d;
}

bool ColoredMultigraph::loop_free() const {
  for (Vertex i = 1; i <= n_; ++i)
    if (mu_[idx(i, i)] > 0) return false;
  return true;
}

bool ColoredMultigraph::has_edge(const EdgeRef& e) const {
  if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) return false;
  return e.color >= 0 && e.color < mu_[idx(e.u, e.v)];
}

bool ColoredMultigraph::connected() const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 1; w <= n_; ++w)
      if (!seen[w] && w != v && mu_[idx(v, w)] > 0) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_;
}

std::vector<std::vector<Vertex>> ColoredMultigraph::components() const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w = 1; w <= n_; ++w)
        if (!seen[w] && w != v && mu_[idx(v, w)] > 0) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int ColoredMultigraph::outdeg(const VertexSet& I, Vertex i) const {
  check_vertex(i);
  if (I.bits() & ~VertexSet::full(n_).bits())
    throw std::invalid_argument("vertex set exceeds the graph");
  if (!I.contains(i)) throw std::invalid_argument("outdeg requires i in I");
  int d = 0;
  for (Vertex j = 1; j <= n_; ++j)
    if (!I.contains(j)) d += mu_[idx(i, j)];
  return d;
}

int ColoredMultigraph::indeg(const VertexSet& I, Vertex i) const {
  check_vertex(i);
  if (!loop_free()) throw std::invalid_argument("indeg requires a loop-free graph");
  if (I.bits() & ~VertexSet::full(n_).bits())
    throw std::invalid_argument("vertex set exceeds the graph");
  if (!I.contains(i)) throw std::invalid_argument("indeg requires i in I");
  int d = 0;
  for (Vertex j = 1; j <= n_; ++j)
    if (j != i && I.contains(j)) d += mu_[idx(i, j)];
  return d;
}

ColoredMultigraph ColoredMultigraph::delete_edge(const EdgeRef& e) const {
  if (!has_edge(e)) throw std::invalid_argument("cannot delete a nonexistent edge");
  std::vector<int> mu = mu_;
  mu[idx(e.u, e.v)] -= 1;
  if (!e.is_loop()) mu[idx(e.v, e.u)] -= 1;
  return ColoredMultigraph(n_, std::move(mu));
}

ColoredMultigraph ColoredMultigraph::contract_edge(const EdgeRef& e) const {
  if (!has_edge(e)) throw std::invalid_argument("cannot contract a nonexistent edge");
  if (e.is_loop()) throw std::invalid_argument("cannot contract a loop");
  const Vertex keep = e.v;  // larger label survives the merge
  const Vertex drop = e.u;
  std::vector<int> merged = mu_;
  merged[idx(keep, keep)] += mu_[idx(drop, drop)] + (mu_[idx(drop, keep)] - 1);
  for (Vertex w = 1; w <= n_; ++w) {
    if (w == keep || w == drop) continue;
    merged[idx(keep, w)] += mu_[idx(drop, w)];
    merged[idx(w, keep)] = merged[idx(keep, w)];
  }
  const int nn = n_ - 1;
  std::vector<int> out(static_cast<std::size_t>(nn) * nn, 0);
  auto relabel = [&](Vertex w) { return w > drop ? w - 1 : w; };
  for (Vertex a = 1; a <= n_; ++a) {
    if (a == drop) continue;
    for (Vertex b = 1; b <= n_; ++b) {
      if (b == drop) continue;
      out[static_cast<std::size_t>(relabel(a) - 1) * nn + (relabel(b) - 1)] = merged[idx(a, b)];
    }
  }
  return ColoredMultigraph(nn, std::move(out));
}

ColoredMultigraph ColoredMultigraph::add_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  std::vector<int> mu = mu_;
  mu[idx(u, v)] += 1;
  if (u != v) mu[idx(v, u)] += 1;
  return ColoredMultigraph(n_, std::move(mu));
}

bool ColoredMultigraph::is_bridge(const EdgeRef& e) const {
  if (!has_edge(e)) throw std::invalid_argument("bridge test on a nonexistent edge");
  if (e.is_loop()) return false;
  if (mu_[idx(e.u, e.v)] >= 2) return false;
  // single edge: bridge iff v is unreachable from u once the pair is cut
  std::vector<char> seen(n_ + 1, 0);
  std::vector<Vertex> stack{e.u};
  seen[e.u] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 1; w <= n_; ++w) {
      if (seen[w] || w == v || mu_[idx(v, w)] == 0) continue;
      if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return !seen[e.v];
}

std::vector<EdgeRef> ColoredMultigraph::edges() const {
  std::vector<EdgeRef> out;
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = u; v <= n_; ++v)
      for (int c = 0; c < mu_[idx(u, v)]; ++c) out.emplace_back(u, v, c);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> ColoredMultigraph::edge_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = u; v <= n_; ++v)
      for (int c = 0; c < mu_[idx(u, v)]; ++c) out.emplace_back(u, v);
  return out;
}

ColoredMultigraph ColoredMultigraph::induced(std::vector<Vertex> vs) const {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("induced subgraph vertices must be distinct");
  if (vs.empty()) throw std::invalid_argument("induced subgraph must be nonempty");
  for (Vertex v : vs) check_vertex(v);
  const int k = static_cast<int>(vs.size());
  std::vector<int> mu(static_cast<std::size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      mu[static_cast<std::size_t>(a) * k + b] = mu_[idx(vs[a], vs[b])];
  return ColoredMultigraph(k, std::move(mu));
}

std::string ColoredMultigraph::multiplicity_key() const {
  std::string key = std::to_string(n_);
  key += ':';
  for (int m : mu_) {
    key += std::to_string(m);
    key += ',';
  }
  return key;
}

}  // namespace multipark
