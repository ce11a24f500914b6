#ifndef L21_FAMILIES_HPP
#define L21_FAMILIES_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "l21/field.hpp"
#include "l21/graph.hpp"

namespace l21 {

/// Point of the projective plane over a finite field: a coordinate triple,
/// not all zero, scaled so the first nonzero coordinate is 1. Coordinates are
/// field-element encodings (see FiniteField).
struct ProjectivePoint {
    int x;
    int y;
    int z;

    auto operator<=>(const ProjectivePoint&) const = default;
};

/// All q^2+q+1 canonical points, sorted lexicographically by (x, y, z).
std::vector<ProjectivePoint> projective_points(const FiniteField& f);

/// Graph on the plane's points: distinct points P, Q adjacent iff
/// x1*y1 + x2*y2 + x3*y3 = 0. Self-orthogonal (absolute) points carry no
/// loop; they end up with degree q, all others with degree q+1.
Graph polarity_graph(const FiniteField& f);

/// Polarity graph plus one extra vertex joined to every degree-q vertex,
/// giving a (q+1)-regular diameter-two graph of order q^2+q+2. Requires
/// characteristic 2 (input_error otherwise).
Graph erdos_extension(const FiniteField& f);

Graph path_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph complete_graph(int n);
Graph star_graph(int n);       // center 0, n-1 leaves

/// Uniform labeled tree: decodes a Prufer word whose entries are successive
/// mt19937_64(seed) draws reduced mod n. Deterministic for a fixed seed.
Graph random_tree(int n, uint64_t seed);

/// 3-regular Moore graph on 10 vertices (outer 5-cycle 0..4, inner pentagram
/// 5..9, spokes i -- 5+i).
Graph petersen_graph();

/// 7-regular Moore graph on 50 vertices from the five-pentagon /
/// five-pentagram construction: pentagons P_h (i ~ i+-1 mod 5), pentagrams
/// Q_j (i ~ i+-2 mod 5), and vertex i of P_h joined to vertex h*i+j mod 5 of
/// Q_j. P_h vertex i is numbered 5h+i, Q_j vertex i is 25+5j+i.
Graph hoffman_singleton_graph();

}  // namespace l21

#endif
