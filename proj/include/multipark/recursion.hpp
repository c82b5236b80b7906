#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "multipark/laurent.hpp"
#include "multipark/multigraph.hpp"

namespace multipark {

// Exact bivariate polynomial with nonnegative exponents.
struct BivariatePolynomial {
  std::map<std::pair<int, int>, long long> terms;  // (x-exp, y-exp) -> coeff

  static BivariatePolynomial one();
  void add_term(int xe, int ye, long long c);
  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial times_x() const;
  BivariatePolynomial times_y() const;
  long long eval(long long x, long long y) const;
  LaurentPolynomial at_x1_y_recip() const;  // substitute x = 1, y = 1/q
  std::string to_string() const;            // e.g. "x^2 + x + y"

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
};

// Exact-key cache for graph-indexed recursions; entries never change.
template <class Value>
class MemoTable {
 public:
  const Value* find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }
  void store(std::string key, Value v) { map_.emplace(std::move(key), std::move(v)); }
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, Value> map_;
};

// Parking polynomial rooted at the top vertex (m = n), computed by deleting
// loops, splitting q P(G-e) + P(G/e) on a non-bridge pivot, and the bridge
// product rule q P(G1) P(G2) once only bridges remain. Pivots are chosen
// lexicographically; a fresh memo table is used per call.
LaurentPolynomial P_recursive(const ColoredMultigraph& G);

// Same value with pivots drawn pseudo-randomly from the seed.
LaurentPolynomial P_recursive_randomized(const ColoredMultigraph& G, std::uint64_t pivot_seed);

// Relabel r to the top label (others keep relative order), then P_recursive.
LaurentPolynomial P_rooted(const ColoredMultigraph& G, Vertex r);

// Standard deletion-contraction: bridge -> x T(G-e), loop -> y T(G-e),
// otherwise T(G-e) + T(G/e); edgeless graphs evaluate to 1. Memoized.
BivariatePolynomial tutte(const ColoredMultigraph& G);

struct TutteReport {
  LaurentPolynomial parking_poly;  // P via enumeration, m = n
  BivariatePolynomial tutte_poly;
  LaurentPolynomial tutte_side;  // q^(|E|-|V|) T(1, 1/q)
  bool pass = false;
};

TutteReport tutte_check(const ColoredMultigraph& G);

}  // namespace multipark
