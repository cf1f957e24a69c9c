#include "mpkc/matching.hpp"

#include <algorithm>

#include "mpkc/errors.hpp"

namespace mpkc {

std::vector<std::pair<int, int>> max_weight_assignment(
    int left, int right, const std::function<const Rational&(int, int)>& weight) {
    std::vector<int> match_l(static_cast<std::size_t>(left), -1);
    std::vector<int> match_r(static_cast<std::size_t>(right), -1);

    const int rounds = std::min(left, right);
    for (int round = 0; round < rounds; ++round) {
        // longest alternating path search; dl[v] = best gain of an alternating
        // path from a free left node ending in left node v
        std::vector<Rational> dl(static_cast<std::size_t>(left)), dr(static_cast<std::size_t>(right));
        std::vector<char> live_l(static_cast<std::size_t>(left), 0), live_r(static_cast<std::size_t>(right), 0);
        std::vector<int> parent_r(static_cast<std::size_t>(right), -1); // left node reaching this right node
        std::vector<int> parent_l(static_cast<std::size_t>(left), -1);  // right node reaching this left node
        for (int v = 0; v < left; ++v)
            if (match_l[static_cast<std::size_t>(v)] == -1) live_l[static_cast<std::size_t>(v)] = 1;

        bool changed = true;
        for (int pass = 0; pass <= rounds && changed; ++pass) {
            changed = false;
            for (int v = 0; v < left; ++v) {
                if (!live_l[static_cast<std::size_t>(v)]) continue;
                for (int c = 0; c < right; ++c) {
                    if (match_l[static_cast<std::size_t>(v)] == c) continue;
                    const Rational& w = weight(v, c);
                    if (!w.is_positive()) continue;
                    Rational cand = dl[static_cast<std::size_t>(v)] + w;
                    if (!live_r[static_cast<std::size_t>(c)] || cand > dr[static_cast<std::size_t>(c)]) {
                        live_r[static_cast<std::size_t>(c)] = 1;
                        dr[static_cast<std::size_t>(c)] = std::move(cand);
                        parent_r[static_cast<std::size_t>(c)] = v;
                        changed = true;
                    }
                }
            }
            for (int c = 0; c < right; ++c) {
                if (!live_r[static_cast<std::size_t>(c)]) continue;
                int v = match_r[static_cast<std::size_t>(c)];
                if (v == -1) continue;
                Rational cand = dr[static_cast<std::size_t>(c)] - weight(v, c);
                if (!live_l[static_cast<std::size_t>(v)] || cand > dl[static_cast<std::size_t>(v)]) {
                    // matched nodes are never path starts, so overwriting is safe
                    live_l[static_cast<std::size_t>(v)] = 1;
                    dl[static_cast<std::size_t>(v)] = std::move(cand);
                    parent_l[static_cast<std::size_t>(v)] = c;
                    changed = true;
                }
            }
        }

        int best_c = -1;
        for (int c = 0; c < right; ++c) {
            if (!live_r[static_cast<std::size_t>(c)] || match_r[static_cast<std::size_t>(c)] != -1) continue;
            if (!dr[static_cast<std::size_t>(c)].is_positive()) continue;
            if (best_c == -1 || dr[static_cast<std::size_t>(c)] > dr[static_cast<std::size_t>(best_c)]) best_c = c;
        }
        if (best_c == -1) break; // no augmenting path with positive gain

        // flip the path backwards
        int c = best_c;
        for (int steps = 0; c != -1; ++steps) {
            if (steps > rounds) throw InternalError("assignment: non-simple augmenting path");
            int v = parent_r[static_cast<std::size_t>(c)];
            int prev_c = parent_l[static_cast<std::size_t>(v)];
            match_r[static_cast<std::size_t>(c)] = v;
            match_l[static_cast<std::size_t>(v)] = c;
            c = prev_c;
        }
    }

    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < left; ++v)
        if (match_l[static_cast<std::size_t>(v)] != -1) out.emplace_back(v, match_l[static_cast<std::size_t>(v)]);
    return out;
}

} // namespace mpkc
