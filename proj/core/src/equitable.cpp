#include "l21/equitable.hpp"

#include <algorithm>
#include <numeric>

namespace l21 {

bool is_proper(const Coloring& c, const Graph& g) {
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    int covered = 0;
    for (const auto& cls : c.classes) {
        for (size_t i = 0; i < cls.size(); ++i) {
            int v = cls[i];
            if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
            seen[v] = 1;
            ++covered;
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (g.adjacent(v, cls[j])) return false;
        }
    }
    return covered == g.vertex_count();
}

bool is_equitable(const Coloring& c) {
    if (c.classes.empty()) return true;
    size_t lo = c.classes.front().size();
    size_t hi = lo;
    for (const auto& cls : c.classes) {
        lo = std::min(lo, cls.size());
        hi = std::max(hi, cls.size());
    }
    return hi - lo <= 1;
}

std::vector<int> class_index(const Coloring& c, int n) {
    std::vector<int> idx(static_cast<size_t>(n), -1);
    for (size_t ci = 0; ci < c.classes.size(); ++ci) {
        for (int v : c.classes[ci]) {
            if (v < 0 || v >= n || idx[v] != -1)
                throw input_error("coloring is not a partition of the vertex set");
            idx[v] = static_cast<int>(ci);
        }
    }
    for (int v = 0; v < n; ++v)
        if (idx[v] == -1)
            throw input_error("coloring is not a partition of the vertex set");
    return idx;
}

namespace {

// Mutable partition of the padded graph into exactly L classes.
struct Partition {
    const Graph* g;
    int num_classes;
    std::vector<int> cls;                   // vertex -> class
    std::vector<std::vector<int>> members;  // class -> sorted members

    bool blocked(int v, int c) const {
        for (int u : members[c])
            if (g->adjacent(v, u)) return true;
        return false;
    }

    int neighbors_in(int v, int c) const {
        int count = 0;
        for (int u : members[c])
            if (g->adjacent(v, u)) ++count;
        return count;
    }

    void assign(int v, int c) {
        cls[v] = c;
        auto& m = members[c];
        m.insert(std::lower_bound(m.begin(), m.end(), v), v);
    }

    void move(int v, int to) {
        auto& from = members[cls[v]];
        from.erase(std::lower_bound(from.begin(), from.end(), v));
        assign(v, to);
    }
};

// Greedy proper coloring: vertices in descending degree order (ties by index)
// go to the smallest class without a neighbor (ties by class index). A free
// class always exists because L > max degree.
void greedy_fill(Partition& part) {
    int n = part.g->vertex_count();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return part.g->degree(a) > part.g->degree(b);
    });
    for (int v : order) {
        int best = -1;
        for (int c = 0; c < part.num_classes; ++c) {
            if (best != -1 && part.members[c].size() >= part.members[best].size())
                continue;
            if (!part.blocked(v, c)) best = c;
        }
        if (best == -1) throw internal_error("greedy coloring found no free class");
        part.assign(v, best);
    }
}

// Classes that can pass a vertex toward `sink` along chains of legal moves:
// parent[c] is the class one step closer to the sink, witness[c] the vertex
// of c that makes the step. Search order is deterministic.
struct Access {
    std::vector<int> parent;
    std::vector<int> witness;
    std::vector<char> in;
    std::vector<int> discovered;
};

Access accessibility(const Partition& part, int sink) {
    int L = part.num_classes;
    Access acc;
    acc.parent.assign(static_cast<size_t>(L), -1);
    acc.witness.assign(static_cast<size_t>(L), -1);
    acc.in.assign(static_cast<size_t>(L), 0);
    acc.in[sink] = 1;
    acc.discovered.push_back(sink);
    for (size_t qi = 0; qi < acc.discovered.size(); ++qi) {
        int x = acc.discovered[qi];
        for (int y = 0; y < L; ++y) {
            if (acc.in[y]) continue;
            for (int v : part.members[y]) {
                if (!part.blocked(v, x)) {
                    acc.parent[y] = x;
                    acc.witness[y] = v;
                    acc.in[y] = 1;
                    acc.discovered.push_back(y);
                    break;
                }
            }
        }
    }
    return acc;
}

// Moves one vertex from `from` to the sink of `acc` along the recorded chain;
// every intermediate class keeps its size.
void run_chain(Partition& part, const Access& acc, int from) {
    std::vector<int> chain;  // from ... sink
    for (int c = from; c != -1; c = acc.parent[c]) chain.push_back(c);
    // Execute sink-end first so each witness still sees its recorded target.
    for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i)
        part.move(acc.witness[chain[i]], chain[i + 1]);
}

// Exhaustive fallback: proper coloring with every class of size exactly
// `target`. Existence is guaranteed; this is only reached if the repair
// heuristics stall, and is capped to fail loudly rather than spin.
struct ExactFill {
    const Graph* g;
    int num_classes;
    int target;
    std::vector<int> order;
    Partition* part;
    long long nodes = 0;
    static constexpr long long kNodeCap = 50'000'000;

    bool fill(size_t pos, int used) {
        if (++nodes > kNodeCap)
            throw internal_error("equitable repair stalled and fallback exceeded its cap");
        if (pos == order.size()) return true;
        int v = order[pos];
        // New classes are opened in index order, which breaks class symmetry.
        int limit = std::min(num_classes, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (static_cast<int>(part->members[c].size()) >= target) continue;
            if (part->blocked(v, c)) continue;
            part->assign(v, c);
            if (fill(pos + 1, std::max(used, c + 1))) return true;
            auto& m = part->members[c];
            m.erase(std::lower_bound(m.begin(), m.end(), v));
            part->cls[v] = -1;
        }
        return false;
    }
};

void exact_fill(Partition& part, int target) {
    int n = part.g->vertex_count();
    for (auto& m : part.members) m.clear();
    std::fill(part.cls.begin(), part.cls.end(), -1);
    ExactFill search;
    search.g = part.g;
    search.num_classes = part.num_classes;
    search.target = target;
    search.part = &part;
    search.order.resize(static_cast<size_t>(n));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return part.g->degree(a) > part.g->degree(b);
    });
    if (!search.fill(0, 0))
        throw internal_error("exact equitable search found no coloring");
}

// Balances a proper coloring of a padded graph (|V| divisible by L) so every
// class has size exactly m. Moves: cascades toward the deficient class, and
// when the surplus side is cut off, solo swaps that trade an A-side vertex
// for a surplus-side vertex whose only neighbor in that class it was.
void repair(Partition& part, int m) {
    int L = part.num_classes;
    long long guard = 0;
    const long long cap = 8LL * L * part.g->vertex_count() + 64;
    while (true) {
        int plus = -1;
        int minus = -1;
        for (int c = 0; c < L; ++c) {
            if (plus == -1 && static_cast<int>(part.members[c].size()) > m) plus = c;
            if (minus == -1 && static_cast<int>(part.members[c].size()) < m) minus = c;
        }
        if (plus == -1 && minus == -1) return;
        if (plus == -1 || minus == -1)
            throw internal_error("partition size bookkeeping broken");
        if (++guard > cap) break;

        Access acc = accessibility(part, minus);
        if (acc.in[plus]) {
            run_chain(part, acc, plus);
            continue;
        }

        // Hard case: no chain reaches the surplus. Surplus-side classes are
        // those not in acc; every vertex over there has a neighbor in every
        // accessible class, so a direct move is impossible. Look for a solo
        // pair: y on the surplus side whose unique neighbor z in an
        // accessible class X can itself vacate X.
        Access reach;  // surplus-side relocation chains, rooted at plus
        {
            reach.parent.assign(static_cast<size_t>(L), -1);
            reach.witness.assign(static_cast<size_t>(L), -1);
            reach.in.assign(static_cast<size_t>(L), 0);
            reach.in[plus] = 1;
            reach.discovered.push_back(plus);
            for (size_t qi = 0; qi < reach.discovered.size(); ++qi) {
                int z = reach.discovered[qi];
                for (int w = 0; w < L; ++w) {
                    if (reach.in[w] || acc.in[w]) continue;
                    for (int v : part.members[z]) {
                        if (!part.blocked(v, w)) {
                            reach.parent[w] = z;  // surplus flows z -> w
                            reach.witness[w] = v;
                            reach.in[w] = 1;
                            reach.discovered.push_back(w);
                            break;
                        }
                    }
                }
            }
        }

        bool resolved = false;
        for (size_t si = 0; si < reach.discovered.size() && !resolved; ++si) {
            int source = reach.discovered[si];
            for (size_t yi = 0; yi < part.members[source].size() && !resolved; ++yi) {
                int y = part.members[source][yi];
                for (int x : acc.discovered) {
                    if (part.neighbors_in(y, x) != 1) continue;
                    int z = -1;
                    for (int u : part.members[x])
                        if (part.g->adjacent(y, u)) {
                            z = u;
                            break;
                        }
                    // Try to vacate z: into the deficient class first, else
                    // any other accessible class.
                    int dest = -1;
                    if (x != minus && !part.blocked(z, minus)) {
                        dest = minus;
                    } else {
                        for (int x2 : acc.discovered) {
                            if (x2 == x || x2 == minus) continue;
                            if (!part.blocked(z, x2)) {
                                dest = x2;
                                break;
                            }
                        }
                    }
                    if (dest == -1) continue;
                    if (source != plus) {
                        // Walk the surplus over to y's class first.
                        std::vector<int> chain;  // source ... plus
                        for (int c = source; c != -1; c = reach.parent[c])
                            chain.push_back(c);
                        for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i)
                            part.move(reach.witness[chain[i]], chain[i]);
                    }
                    part.move(z, dest);
                    part.move(y, x);
                    resolved = true;
                    break;
                }
            }
        }
        if (!resolved) break;  // no usable solo pair; fall back
    }
    exact_fill(part, m);
}

}  // namespace

Coloring equitable_coloring(const Graph& g, int num_classes) {
    int n = g.vertex_count();
    int delta = max_degree(g);
    if (num_classes <= delta)
        throw precondition_error("colors-min",
                                 "need at least max degree + 1 = " +
                                     std::to_string(delta + 1) + " classes, got " +
                                     std::to_string(num_classes));

    Coloring out;
    out.classes.resize(static_cast<size_t>(num_classes));
    if (n == 0) return out;

    if (num_classes >= n) {
        for (int v = 0; v < n; ++v) out.classes[v].push_back(v);
        return out;
    }

    // Pad with a clique so the class size is forced to exactly m everywhere;
    // pads are pairwise adjacent, hence land in distinct classes, and
    // removing them leaves exactly n mod L classes one vertex larger.
    int pads = (num_classes - n % num_classes) % num_classes;
    Graph padded(n + pads);
    for (auto [u, v] : g.edges()) padded.add_edge(u, v);
    for (int a = n; a < n + pads; ++a)
        for (int b = a + 1; b < n + pads; ++b) padded.add_edge(a, b);

    Partition part;
    part.g = &padded;
    part.num_classes = num_classes;
    part.cls.assign(static_cast<size_t>(n + pads), -1);
    part.members.resize(static_cast<size_t>(num_classes));

    greedy_fill(part);
    repair(part, (n + pads) / num_classes);

    for (int c = 0; c < num_classes; ++c)
        for (int v : part.members[c])
            if (v < n) out.classes[c].push_back(v);

    if (!is_proper(out, g) || !is_equitable(out))
        throw internal_error("equitable coloring postcondition failed");
    return out;
}

}  // namespace l21
