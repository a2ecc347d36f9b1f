#include "oitm/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace oitm {

BipartiteGraph BipartiteGraph::unweighted(int n, std::vector<std::vector<int>> adj) {
    BipartiteGraph g;
    g.n = n;
    g.adj = std::move(adj);
    if (static_cast<int>(g.adj.size()) != n)
        throw domain_error("adjacency must have one list per row");
    for (auto& row : g.adj) {
        std::sort(row.begin(), row.end());
        for (int c : row)
            if (c < 0 || c >= n) throw domain_error("column index out of range");
    }
    return g;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    const std::vector<std::vector<int>>& adj;
    int nrows, ncols;
    std::vector<int> match_row, match_col, dist;

    HopcroftKarp(const std::vector<std::vector<int>>& a, int rows, int cols)
        : adj(a), nrows(rows), ncols(cols),
          match_row(rows, -1), match_col(cols, -1), dist(rows, 0) {}

    bool bfs() {
        std::queue<int> q;
        for (int r = 0; r < nrows; ++r) {
            if (match_row[r] < 0) {
                dist[r] = 0;
                q.push(r);
            } else {
                dist[r] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int r = q.front();
            q.pop();
            for (int c : adj[r]) {
                int r2 = match_col[c];
                if (r2 < 0) {
                    found = true;
                } else if (dist[r2] == kInf) {
                    dist[r2] = dist[r] + 1;
                    q.push(r2);
                }
            }
        }
        return found;
    }

    bool dfs(int r) {
        for (int c : adj[r]) {
            int r2 = match_col[c];
            if (r2 < 0 || (dist[r2] == dist[r] + 1 && dfs(r2))) {
                match_row[r] = c;
                match_col[c] = r;
                return true;
            }
        }
        dist[r] = kInf;
        return false;
    }

    void run() {
        while (bfs())
            for (int r = 0; r < nrows; ++r)
                if (match_row[r] < 0) dfs(r);
    }
};

}  // namespace

std::vector<int> max_matching(const std::vector<std::vector<int>>& adj, int num_cols) {
    HopcroftKarp hk(adj, static_cast<int>(adj.size()), num_cols);
    hk.run();
    return hk.match_row;
}

std::vector<int> max_matching(const BipartiteGraph& g) {
    return max_matching(g.adj, g.n);
}

int matching_size(const std::vector<int>& match) {
    int n = 0;
    for (int m : match) n += m >= 0;
    return n;
}

}  // namespace oitm
