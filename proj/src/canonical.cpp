#include "chordalkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chordalkit {

namespace {

// Iterated neighbour-colour refinement. Returns a colour per vertex; colour
// ids are assigned from sorted signatures, so they are invariant under
// relabelling.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    int classes = n > 0 ? 1 : 0;
    for (int round = 0; round < n; ++round) {
        // signature: own colour + sorted multiset of neighbour colours
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> ids;
        for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = ids[sig[v]];
        if (next == classes) break;
        classes = next;
        color = std::move(fresh);
    }
    return color;
}

std::string code_for_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::string code;
    code.push_back(static_cast<char>(n));
    int bits = 0, used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
            if (++used == 8) {
                code.push_back(static_cast<char>(bits));
                bits = used = 0;
            }
        }
    }
    if (used > 0) code.push_back(static_cast<char>(bits << (8 - used)));
    return code;
}

} // namespace

std::string canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > canonical_code_max_vertices)
        throw size_cap_error("canonical_code supports at most " +
                             std::to_string(canonical_code_max_vertices) + " vertices");
    if (n == 0) return std::string(1, '\0');

    std::vector<int> color = refine_colors(g);

    // Vertices grouped by colour; the block structure is fixed, permutations
    // run within blocks only.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    std::vector<std::pair<int, int>> blocks; // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    std::string best;
    auto consider = [&](const std::vector<int>& candidate) {
        std::string code = code_for_order(g, candidate);
        if (best.empty() || code < best) best = std::move(code);
    };

    std::vector<int> current = order;
    auto permute_block = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            consider(current);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(current.begin() + lo, current.begin() + hi);
        do {
            self(self, b + 1);
        } while (std::next_permutation(current.begin() + lo, current.begin() + hi));
    };
    permute_block(permute_block, 0);
    return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

namespace {

// Map vertices of `a` onto `b` one at a time, pinned pairs first.
bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map,
                    VertexSet used_b, int next) {
    const int n = a.vertex_count();
    while (next < n && map[next] >= 0) ++next;
    if (next == n) return true;
    for (int cand : VertexSet::first_n(n) - used_b) {
        if (a.degree(next) != b.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < n && ok; ++prev)
            if (map[prev] >= 0 && a.adjacent(next, prev) != b.adjacent(cand, map[prev]))
                ok = false;
        if (!ok) continue;
        map[next] = cand;
        if (extend_mapping(a, b, map, used_b.with(cand), next + 1)) return true;
        map[next] = -1;
    }
    return false;
}

} // namespace

bool pointed_isomorphic(const Graph& a, int ua, int va, const Graph& b, int ub, int vb) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree(ua) != b.degree(ub) || a.degree(va) != b.degree(vb)) return false;
    if (a.adjacent(ua, va) != b.adjacent(ub, vb)) return false;
    std::vector<int> map(n, -1);
    map[ua] = ub;
    map[va] = vb;
    return extend_mapping(a, b, map, VertexSet::of({ub, vb}), 0);
}

} // namespace chordalkit
