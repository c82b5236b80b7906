#pragma once

#include <optional>
#include <vector>

#include "multipark/multigraph.hpp"

namespace multipark {

// Vertex function into {-1, 0, 1, ...} together with the root threshold m.
// Vertices with value -1 are the roots.
struct MultiparkingFunction {
  Vertex m = 1;
  std::vector<int> values;  // values[i-1] = f(i)

  int value(Vertex i) const { return values[i - 1]; }
  long long sum() const;
  VertexSet roots() const;

  friend bool operator==(const MultiparkingFunction&, const MultiparkingFunction&) = default;
};

// Nonnegative vertex function paired with the same threshold m.
struct ComplementFunction {
  Vertex m = 1;
  std::vector<int> values;

  int value(Vertex i) const { return values[i - 1]; }
  long long sum() const;

  friend bool operator==(const ComplementFunction&, const ComplementFunction&) = default;
};

// Least element of I that is >= m; empty I is an error.
std::optional<Vertex> alpha(const VertexSet& I, Vertex m);

// Definitional check over all nonempty vertex subsets I: either the alpha
// vertex of I is a root, or some i in I satisfies 0 <= f(i) < outdeg_I(i).
// When no element of I reaches m the witness clause is required.
bool is_multiparking(const ColoredMultigraph& G, const MultiparkingFunction& f);

// The same predicate decided by the burning pass of the forest bijection:
// valid iff every component start is a root and no restart runs dry.
bool is_multiparking_burning(const ColoredMultigraph& G, const MultiparkingFunction& f);

// All multiparking functions, in lexicographic order of their value vectors.
std::vector<MultiparkingFunction> enumerate_multiparking(const ColoredMultigraph& G, Vertex m);

// Complement-side check: either h(alpha(I,m)) = deg+1 or some i in I has
// indeg_I(i) < h(i) <= deg(i). Loop-free graphs only.
bool is_complement(const ColoredMultigraph& G, const ComplementFunction& h);

// Pointwise deg(i) - f(i); accepts any vertex function with values >= -1.
ComplementFunction complement_of(const ColoredMultigraph& G, const MultiparkingFunction& f);

std::vector<ComplementFunction> enumerate_complements(const ColoredMultigraph& G, Vertex m);

}  // namespace multipark
