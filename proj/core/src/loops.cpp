#include "graphzeta/loops.hpp"
#include "graphzeta/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace graphzeta {

std::vector<int> LoopClass::vertex_cycle(const Graph& g) const {
    std::vector<int> vs;
    vs.reserve(edges.size() + 1);
    const auto& oe = g.oriented_edges();
    for (int e : edges) vs.push_back(oe[static_cast<std::size_t>(e)].start);
    if (!edges.empty()) vs.push_back(oe[static_cast<std::size_t>(edges[0])].start);
    return vs;
}

std::vector<int> least_rotation(std::vector<int> seq) {
    const std::size_t n = seq.size();
    if (n <= 1) return seq;
    // Booth's least-rotation algorithm on the doubled sequence.
    std::vector<int> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const int sj = seq[j % n];
        std::size_t i = static_cast<std::size_t>(f[j - k - 1] + 1);
        while (i != 0 && sj != seq[(k + i) % n]) {
            if (sj < seq[(k + i) % n]) k = j - i;
            i = static_cast<std::size_t>(f[i - 1] + 1);
        }
        if (i == 0 && sj != seq[k % n]) {
            if (sj < seq[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = static_cast<int>(i);
        }
    }
    k %= n;
    std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k), seq.end());
    return seq;
}

int smallest_period(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = p; i < n && ok; ++i) ok = seq[static_cast<std::size_t>(i)] ==
                                               seq[static_cast<std::size_t>(i - p)];
        if (ok) return p;
    }
    return n;
}

LoopClass make_loop_class(std::vector<int> edge_seq) {
    if (edge_seq.empty()) throw DomainError("empty loop");
    LoopClass c;
    c.edges = least_rotation(std::move(edge_seq));
    c.primitive_length = smallest_period(c.edges);
    c.multiplicity = c.length() / c.primitive_length;
    return c;
}

namespace {

/// Per-edge successor lists under the non-backtracking rule
/// target(e) = start(e'), e' != reverse(e).
std::vector<std::vector<int>> plain_successors(const Graph& g) {
    const auto& oe = g.oriented_edges();
    std::vector<std::vector<int>> succ(oe.size());
    for (const auto& e : oe) {
        for (int cand : g.out_edges(e.target))
            if (cand != e.reverse_id) succ[static_cast<std::size_t>(e.id)].push_back(cand);
    }
    return succ;
}

struct CycleCollector {
    std::set<std::vector<int>> canonical;
    std::size_t cap;

    void add(const std::vector<int>& seq) {
        auto canon = least_rotation(seq);
        if (canonical.insert(std::move(canon)).second && canonical.size() > cap)
            throw ResourceLimitError("loop class cap exceeded (" + std::to_string(cap) + ")");
    }
};

/// Anchored DFS over non-backtracking edge sequences. Only edges with id >=
/// anchor are extended, so every cyclic class is produced from the anchor
/// equal to its minimal edge id; remaining rotation duplicates (minimal edge
/// occurring twice) are removed by canonicalization in the collector.
void enumerate_cycles(const Graph& g, const std::vector<std::vector<int>>& succ,
                      int max_length, CycleCollector& out) {
    const auto& oe = g.oriented_edges();
    const int m = static_cast<int>(oe.size());
    std::vector<int> seq;
    for (int anchor = 0; anchor < m; ++anchor) {
        const int home = oe[static_cast<std::size_t>(anchor)].start;
        seq.assign(1, anchor);
        // Iterative DFS; frame i holds the next successor index to try.
        std::vector<std::size_t> next{0};
        while (!seq.empty()) {
            const int last = seq.back();
            // Closing transition last -> anchor must itself be admissible.
            if (next.back() == 0 && oe[static_cast<std::size_t>(last)].target == home &&
                anchor != Graph::reverse(last))
                out.add(seq);
            const auto& cands = succ[static_cast<std::size_t>(last)];
            bool descended = false;
            if (static_cast<int>(seq.size()) < max_length) {
                while (next.back() < cands.size()) {
                    const int e = cands[next.back()++];
                    if (e < anchor) continue;
                    seq.push_back(e);
                    next.push_back(0);
                    descended = true;
                    break;
                }
            }
            if (!descended && (static_cast<int>(seq.size()) >= max_length ||
                               next.back() >= cands.size())) {
                seq.pop_back();
                next.pop_back();
            }
        }
    }
}

std::vector<LoopClass> classes_from_collector(CycleCollector& collector) {
    std::vector<LoopClass> classes;
    classes.reserve(collector.canonical.size());
    for (const auto& seq : collector.canonical) {
        LoopClass c;
        c.edges = seq;
        c.primitive_length = smallest_period(seq);
        c.multiplicity = c.length() / c.primitive_length;
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const LoopClass& a, const LoopClass& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.edges < b.edges;
    });
    return classes;
}

} // namespace

std::vector<LoopClass> enumerate_loops(const Graph& g, int max_length, std::size_t class_cap) {
    if (max_length < 1) throw DomainError("max_length must be >= 1");
    CycleCollector collector{{}, class_cap};
    enumerate_cycles(g, plain_successors(g), max_length, collector);
    return classes_from_collector(collector);
}

std::pair<LoopClass, int> primitive_decompose(const LoopClass& c) {
    LoopClass root;
    root.edges.assign(c.edges.begin(), c.edges.begin() + c.primitive_length);
    root.primitive_length = c.primitive_length;
    root.multiplicity = 1;
    return {std::move(root), c.multiplicity};
}

std::vector<LoopClass> prime_loops_up_to(const Graph& g, int max_length,
                                         std::size_t class_cap) {
    auto all = enumerate_loops(g, max_length, class_cap);
    std::erase_if(all, [](const LoopClass& c) { return !c.prime(); });
    return all;
}

TruncatedSeries euler_product_series(const Graph& g, int order, std::size_t class_cap) {
    if (order < 1) throw DomainError("order must be >= 1");
    const auto primes = prime_loops_up_to(g, order, class_cap);
    std::vector<long> count_by_length(static_cast<std::size_t>(order) + 1, 0);
    for (const auto& p : primes) ++count_by_length[static_cast<std::size_t>(p.length())];

    TruncatedSeries result = TruncatedSeries::one(order);
    for (int l = 1; l <= order; ++l) {
        const long cnt = count_by_length[static_cast<std::size_t>(l)];
        if (cnt == 0) continue;
        // (1 - u^l)^(-cnt) = sum_j C(cnt + j - 1, j) u^(l j)
        TruncatedSeries factor(order);
        Rational binom(1);
        for (int j = 0; l * j <= order; ++j) {
            factor.set_coeff(l * j, binom);
            binom = binom * Rational(cnt + j) / Rational(j + 1);
        }
        result = result * factor;
    }
    return result;
}

} // namespace graphzeta
