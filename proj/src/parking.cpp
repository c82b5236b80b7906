#include "multipark/parking.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "multipark/bijection.hpp"

namespace multipark {

namespace {

void check_shape(const ColoredMultigraph& G, Vertex m, std::size_t len) {
  const int n = G.vertex_count();
  if (static_cast<int>(len) != n)
    throw std::invalid_argument("function length does not match vertex count");
  if (m < 1 || m > n) throw std::invalid_argument("threshold m out of range");
  if (!G.connected()) throw std::invalid_argument("graph must be connected");
}

}  // namespace

long long MultiparkingFunction::sum() const {
  long long s = 0;
  for (int v : values) s += v;
  return s;
}

VertexSet MultiparkingFunction::roots() const {
  VertexSet r;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == -1) r.add(static_cast<Vertex>(i + 1));
  return r;
}

long long ComplementFunction::sum() const {
  long long s = 0;
  for (int v : values) s += v;
  return s;
}

std::optional<Vertex> alpha(const VertexSet& I, Vertex m) {
  if (I.empty()) throw std::invalid_argument("alpha of an empty set");
  return I.min_at_least(m);
}

bool is_multiparking(const ColoredMultigraph& G, const MultiparkingFunction& f) {
  check_shape(G, f.m, f.values.size());
  const int n = G.vertex_count();
  const auto& mu = G.mu_table();
  std::vector<int> rowsum(n, 0);  // edges to other vertices, loops excluded
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) rowsum[i] += mu[static_cast<std::size_t>(i) * n + j];

  const std::uint64_t all = VertexSet::full(n).bits();
  const std::uint64_t at_least_m = all & ~((std::uint64_t{1} << (f.m - 1)) - 1);
  for (std::uint64_t I = 1;; ++I) {
    std::uint64_t ge = I & at_least_m;
    bool ok = false;
    if (ge && f.values[std::countr_zero(ge)] == -1) ok = true;  // root clause
    if (!ok) {
      for (std::uint64_t b = I; b; b &= b - 1) {
        int i = std::countr_zero(b);
        int fi = f.values[i];
        if (fi < 0 || fi >= rowsum[i]) continue;
        int od = rowsum[i];
        for (std::uint64_t c = I; c; c &= c - 1) {
          int j = std::countr_zero(c);
          if (j != i) od -= mu[static_cast<std::size_t>(i) * n + j];
        }
        if (fi < od) {  // witness clause
          ok = true;
          break;
        }
      }
    }
    if (!ok) return false;
    if (I == all) break;
  }
  return true;
}

bool is_multiparking_burning(const ColoredMultigraph& G, const MultiparkingFunction& f) {
  check_shape(G, f.m, f.values.size());
  return detail::burn(G, f, VertexRanking::identity(G.vertex_count())).valid;
}

std::vector<MultiparkingFunction> enumerate_multiparking(const ColoredMultigraph& G, Vertex m) {
  const int n = G.vertex_count();
  if (m < 1 || m > n) throw std::invalid_argument("threshold m out of range");
  if (!G.connected()) throw std::invalid_argument("graph must be connected");
  std::vector<int> lo(n), hi(n);
  for (Vertex i = 1; i <= n; ++i) {
    lo[i - 1] = i >= m ? -1 : 0;
    hi[i - 1] = G.deg(i) - 1;
  }
  std::vector<MultiparkingFunction> out;
  for (int i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return out;
  std::vector<int> vals(lo);
  while (true) {
    MultiparkingFunction f{m, vals};
    if (is_multiparking(G, f)) out.push_back(std::move(f));
    int k = n - 1;
    while (k >= 0 && vals[k] == hi[k]) {
      vals[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++vals[k];
  }
  return out;
}

bool is_complement(const ColoredMultigraph& G, const ComplementFunction& h) {
  check_shape(G, h.m, h.values.size());
  if (!G.loop_free())
    throw std::invalid_argument("complement functions require a loop-free graph");
  const int n = G.vertex_count();
  const auto& mu = G.mu_table();
  std::vector<int> degree(n);
  for (Vertex i = 1; i <= n; ++i) degree[i - 1] = G.deg(i);

  const std::uint64_t all = VertexSet::full(n).bits();
  const std::uint64_t at_least_m = all & ~((std::uint64_t{1} << (h.m - 1)) - 1);
  for (std::uint64_t I = 1;; ++I) {
    std::uint64_t ge = I & at_least_m;
    bool ok = false;
    if (ge) {
      int a = std::countr_zero(ge);
      if (h.values[a] == degree[a] + 1) ok = true;  // root clause
    }
    if (!ok) {
      for (std::uint64_t b = I; b; b &= b - 1) {
        int i = std::countr_zero(b);
        int hi = h.values[i];
        if (hi > degree[i] || hi <= 0) continue;
        int in = 0;
        for (std::uint64_t c = I; c; c &= c - 1) {
          int j = std::countr_zero(c);
          if (j != i) in += mu[static_cast<std::size_t>(i) * n + j];
        }
        if (in < hi) {  // witness clause
          ok = true;
          break;
        }
      }
    }
    if (!ok) return false;
    if (I == all) break;
  }
  return true;
}

ComplementFunction complement_of(const ColoredMultigraph& G, const MultiparkingFunction& f) {
  check_shape(G, f.m, f.values.size());
  if (!G.loop_free())
    throw std::invalid_argument("complement functions require a loop-free graph");
  const int n = G.vertex_count();
  ComplementFunction h{f.m, std::vector<int>(n)};
  for (Vertex i = 1; i <= n; ++i) {
    if (f.value(i) < -1) throw std::invalid_argument("function values must be >= -1");
    h.values[i - 1] = G.deg(i) - f.value(i);
  }
  return h;
}

std::vector<ComplementFunction> enumerate_complements(const ColoredMultigraph& G, Vertex m) {
  const int n = G.vertex_count();
  if (m < 1 || m > n) throw std::invalid_argument("threshold m out of range");
  if (!G.connected()) throw std::invalid_argument("graph must be connected");
  if (!G.loop_free())
    throw std::invalid_argument("complement functions require a loop-free graph");
  std::vector<int> hi(n);
  for (Vertex i = 1; i <= n; ++i) hi[i - 1] = G.deg(i) + 1;
  std::vector<ComplementFunction> out;
  std::vector<int> vals(n, 0);
  while (true) {
    ComplementFunction h{m, vals};
    if (is_complement(G, h)) out.push_back(std::move(h));
    int k = n - 1;
    while (k >= 0 && vals[k] == hi[k]) {
      vals[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++vals[k];
  }
  return out;
}

}  // namespace multipark
