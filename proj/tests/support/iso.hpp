#pragma once
// Isomorphism code for embedded triangulations (reflections identified):
// lexicographically least BFS code over every starting dart and both
// rotation directions.

#include <algorithm>
#include <deque>
#include <vector>

#include "arcdiag/triangulation.hpp"

namespace support {

inline std::vector<int> planar_code(const arcdiag::Triangulation& t) {
    const int n = t.vertex_count();
    std::vector<int> best;
    for (int u = 1; u <= n; ++u)
        for (int v : t.neighbors(u))
            for (int dir : {1, -1}) {
                std::vector<int> label(n + 1, 0), code;
                std::vector<int> from(n + 1, 0);
                std::deque<int> q{u};
                label[u] = 1;
                from[u] = v;
                int next = 2;
                bool worse = false;
                while (!q.empty() && !worse) {
                    int x = q.front();
                    q.pop_front();
                    const auto& r = t.neighbors(x);
                    const int d = static_cast<int>(r.size());
                    int i = 0;
                    while (r[i] != from[x]) ++i;
                    for (int s = 0; s < d; ++s) {
                        int y = r[((i + dir * s) % d + d) % d];
                        if (!label[y]) {
                            label[y] = next++;
                            from[y] = x;
                            q.push_back(y);
                        }
                        code.push_back(label[y]);
                    }
                    code.push_back(0);
                    // early exit once this code is already larger
                    if (!best.empty()) {
                        auto m = std::mismatch(code.begin(), code.end(), best.begin());
                        if (m.first != code.end() && *m.first > *m.second) worse = true;
                    }
                }
                if (!worse && (best.empty() || code < best)) best = code;
            }
    return best;
}

}  // namespace support
