#pragma once

#include <string>

#include "digspec/digraph.hpp"
#include "digspec/matrix.hpp"

namespace digspec {

enum class ProductKind { Cartesian, Lexicographic, Direct, Strong };

const char* product_kind_name(ProductKind kind);
ProductKind product_kind_from_name(const std::string& name);

// Vertex (x, x') of the product maps to index x*n' + x'.
Digraph product(const Digraph& g, const Digraph& h, ProductKind kind);

// Distance matrix of g lexp h assembled from the closed distance formula
// (d_g(x,y) off the diagonal blocks, min{xi_g(x), d_h(x',y')} on them).
// g must be strongly connected; h need not be.
Matrix lexicographic_distance_matrix(const Digraph& g, const Digraph& h);

// Entrywise max of the lifted factor distances; both factors must be
// strongly connected.
Matrix strong_distance_matrix(const Digraph& g, const Digraph& h);

}  // namespace digspec
