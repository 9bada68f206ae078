#ifndef GRAPHZETA_LOOPS_HPP
#define GRAPHZETA_LOOPS_HPP

#include "graphzeta/graph.hpp"
#include "graphzeta/series.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace graphzeta {

inline constexpr std::size_t kDefaultLoopClassCap = 10'000'000;

/// Shift-equivalence class of reduced closed paths, canonicalized as the
/// lexicographically minimal rotation of its oriented-edge id sequence.
struct LoopClass {
    std::vector<int> edges; ///< canonical rotation of oriented edge ids
    int primitive_length;   ///< l(c0)
    int multiplicity;       ///< m(c); the class is prime iff 1

    int length() const { return static_cast<int>(edges.size()); }
    bool prime() const { return multiplicity == 1; }
    /// Vertex sequence v_0..v_n of the canonical path, v_n = v_0.
    std::vector<int> vertex_cycle(const Graph& g) const;

    bool operator==(const LoopClass& rhs) const = default;
};

/// Lexicographically minimal rotation of a cyclic sequence.
std::vector<int> least_rotation(std::vector<int> seq);
/// Smallest cyclic period p (p divides seq.size(), rotation by p fixes seq).
int smallest_period(const std::vector<int>& seq);
/// Builds a LoopClass from any representative oriented-edge sequence.
LoopClass make_loop_class(std::vector<int> edge_seq);

/// Exactly one LoopClass per shift-equivalence class of reduced closed
/// paths of length <= max_length, ordered by (length, canonical edges).
/// Throws ResourceLimitError when more than class_cap classes appear.
std::vector<LoopClass> enumerate_loops(const Graph& g, int max_length,
                                       std::size_t class_cap = kDefaultLoopClassCap);

/// (c0, m) with c = c0^m and c0 prime, via the smallest cyclic period.
std::pair<LoopClass, int> primitive_decompose(const LoopClass& c);

/// Prime classes only (multiplicity 1), same order and cap semantics.
std::vector<LoopClass> prime_loops_up_to(const Graph& g, int max_length,
                                         std::size_t class_cap = kDefaultLoopClassCap);

/// prod over primes with l(p) <= order of (1 - u^l(p))^-1, truncated to
/// u^order with exact coefficients.
TruncatedSeries euler_product_series(const Graph& g, int order,
                                     std::size_t class_cap = kDefaultLoopClassCap);

} // namespace graphzeta

#endif
