#include "gmak/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "gmak/errors.hpp"

namespace gmak {

namespace {

std::vector<std::vector<int>> adjacency(const GeneralizedNetwork& net) {
    std::vector<std::vector<int>> adj(net.complex_count());
    for (const auto& r : net.reactions) adj[r.source].push_back(r.target);
    return adj;
}

void sort_classes(std::vector<std::vector<int>>& classes) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

LinkageDecomposition decompose(const GeneralizedNetwork& net) {
    const int m = net.complex_count();
    auto adj = adjacency(net);

    LinkageDecomposition out;

    // linkage classes = components of the underlying undirected graph
    {
        std::vector<int> comp(m, -1);
        std::vector<std::vector<int>> undirected(m);
        for (const auto& r : net.reactions) {
            undirected[r.source].push_back(r.target);
            undirected[r.target].push_back(r.source);
        }
        int nc = 0;
        for (int start = 0; start < m; ++start) {
            if (comp[start] != -1) continue;
            std::deque<int> q{start};
            comp[start] = nc;
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int w : undirected[v])
                    if (comp[w] == -1) {
                        comp[w] = nc;
                        q.push_back(w);
                    }
            }
            ++nc;
        }
        out.linkage_classes.assign(nc, {});
        for (int v = 0; v < m; ++v) out.linkage_classes[comp[v]].push_back(v);
        sort_classes(out.linkage_classes);
        out.linkage_of.assign(m, -1);
        for (int i = 0; i < static_cast<int>(out.linkage_classes.size()); ++i)
            for (int v : out.linkage_classes[i]) out.linkage_of[v] = i;
    }

    // strong components (Tarjan)
    {
        std::vector<int> num(m, -1), low(m, 0), comp(m, -1), stack;
        std::vector<bool> on_stack(m, false);
        int counter = 0, nscc = 0;
        std::function<void(int)> dfs = [&](int v) {
            num[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = true;
            for (int w : adj[v]) {
                if (num[w] == -1) {
                    dfs(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            }
            if (low[v] == num[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = nscc;
                    if (w == v) break;
                }
                ++nscc;
            }
        };
        for (int v = 0; v < m; ++v)
            if (num[v] == -1) dfs(v);

        out.strong_linkage_classes.assign(nscc, {});
        for (int v = 0; v < m; ++v) out.strong_linkage_classes[comp[v]].push_back(v);

        // terminal = strong component with no edge leaving it
        std::vector<bool> has_exit(nscc, false);
        for (const auto& r : net.reactions)
            if (comp[r.source] != comp[r.target]) has_exit[comp[r.source]] = true;
        for (int c = 0; c < nscc; ++c)
            if (!has_exit[c]) out.terminal_classes.push_back(out.strong_linkage_classes[c]);

        sort_classes(out.strong_linkage_classes);
        sort_classes(out.terminal_classes);
    }

    out.l = static_cast<int>(out.linkage_classes.size());
    out.t = static_cast<int>(out.terminal_classes.size());
    // the strong partition refines the linkage partition, so equal counts
    // means equal partitions
    out.weakly_reversible = out.strong_linkage_classes.size() == out.linkage_classes.size();
    return out;
}

std::vector<Rational> circulation_rates(const GeneralizedNetwork& net) {
    auto dec = decompose(net);
    if (!dec.weakly_reversible)
        throw HypothesisError("circulation_rates requires a weakly reversible network");

    const int m = net.complex_count();
    const int nr = net.reaction_count();
    // edge-labelled adjacency for path reconstruction
    std::vector<std::vector<std::pair<int, int>>> adj(m);  // (target, reaction id)
    for (int r = 0; r < nr; ++r) adj[net.reactions[r].source].push_back({net.reactions[r].target, r});

    std::vector<long> count(nr, 0);
    for (int r = 0; r < nr; ++r) {
        if (count[r] > 0) continue;  // already covered by an earlier cycle
        int from = net.reactions[r].target;
        int to = net.reactions[r].source;
        // BFS path from -> to; exists inside the strong class by weak reversibility
        std::vector<int> via_edge(m, -1), parent(m, -1);
        std::deque<int> q{from};
        std::vector<bool> seen(m, false);
        seen[from] = true;
        while (!q.empty() && !seen[to]) {
            int v = q.front();
            q.pop_front();
            for (auto [w, e] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                parent[w] = v;
                via_edge[w] = e;
                q.push_back(w);
            }
        }
        if (from != to && !seen[to])
            throw HypothesisError("no return path for a reaction in a weakly reversible network");
        ++count[r];
        for (int v = to; v != from; v = parent[v]) ++count[via_edge[v]];
    }

    std::vector<Rational> k(nr);
    for (int r = 0; r < nr; ++r) k[r] = Rational(count[r]);

    // exact balance check: sum k (w_tgt - w_src) = 0
    std::vector<Rational> balance(m);
    for (int r = 0; r < nr; ++r) {
        balance[net.reactions[r].target] += k[r];
        balance[net.reactions[r].source] -= k[r];
    }
    for (const auto& b : balance)
        if (b != 0) throw std::logic_error("circulation balance violated");
    return k;
}

}  // namespace gmak
