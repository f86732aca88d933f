#ifndef OCFL_GRAPH_HPP
#define OCFL_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ocfl {

/// Strongly connected components of a directed graph given as adjacency lists.
/// Returns the component id of every node (iterative Tarjan, ids in reverse topological order).
inline std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    struct Frame {
        int node;
        std::size_t next;
    };
    std::vector<Frame> call;
    int counter = 0, ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& f = call.back();
            if (f.next < adj[f.node].size()) {
                int w = adj[f.node][f.next++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
                continue;
            }
            int v = f.node;
            call.pop_back();
            if (!call.empty())
                low[call.back().node] = std::min(low[call.back().node], low[v]);
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
        }
    }
    return comp;
}

}  // namespace ocfl

#endif  // OCFL_GRAPH_HPP
