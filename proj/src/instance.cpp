#include "mpkc/instance.hpp"

#include <algorithm>

#include "mpkc/errors.hpp"

namespace mpkc {

Revenue::Revenue(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 1) throw InputError("revenue table needs n >= 0, k >= 1");
    auto zero_row = std::make_shared<const std::vector<Rational>>(static_cast<std::size_t>(k));
    rows_.assign(static_cast<std::size_t>(n), zero_row);
}

Revenue Revenue::uniform(int n, int k, const Rational& value) {
    Revenue r(n, k);
    if (value.is_negative()) throw InputError("negative revenue");
    auto row = std::make_shared<const std::vector<Rational>>(static_cast<std::size_t>(k), value);
    for (auto& p : r.rows_) p = row;
    return r;
}

Revenue Revenue::from_rows(std::vector<std::vector<Rational>> rows, int k) {
    Revenue r;
    r.n_ = static_cast<int>(rows.size());
    r.k_ = k;
    if (k < 1) throw InputError("revenue table needs k >= 1");
    r.rows_.reserve(rows.size());
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != k)
            throw InputError("revenue row has wrong width");
        for (const auto& val : row)
            if (val.is_negative()) throw InputError("negative revenue");
        r.rows_.push_back(std::make_shared<const std::vector<Rational>>(std::move(row)));
    }
    return r;
}

const Rational& Revenue::at(int v, int color) const {
    if (v < 0 || v >= n_) throw InputError("revenue: vertex out of range");
    if (color < 1 || color > k_) throw InputError("revenue: color out of range");
    return (*rows_[static_cast<std::size_t>(v)])[static_cast<std::size_t>(color - 1)];
}

void Revenue::set(int v, int color, Rational value) {
    if (v < 0 || v >= n_) throw InputError("revenue: vertex out of range");
    if (color < 1 || color > k_) throw InputError("revenue: color out of range");
    if (value.is_negative()) throw InputError("negative revenue");
    auto& slot = rows_[static_cast<std::size_t>(v)];
    auto fresh = std::make_shared<std::vector<Rational>>(*slot);
    (*fresh)[static_cast<std::size_t>(color - 1)] = std::move(value);
    slot = std::move(fresh);
}

RevenuePatch::RevenuePatch(const Revenue& base)
    : work_(base), owned_(static_cast<std::size_t>(base.n()), 0) {}

std::vector<Rational>& RevenuePatch::editable_row(int v) {
    if (v < 0 || v >= work_.n_) throw InputError("revenue: vertex out of range");
    auto& slot = work_.rows_[static_cast<std::size_t>(v)];
    if (!owned_[static_cast<std::size_t>(v)]) {
        slot = std::make_shared<std::vector<Rational>>(*slot);
        owned_[static_cast<std::size_t>(v)] = 1;
    }
    // owned rows are only reachable through this patch
    return const_cast<std::vector<Rational>&>(*slot);
}

void RevenuePatch::zero(int v, int color) {
    if (color < 1 || color > work_.k_) throw InputError("revenue: color out of range");
    editable_row(v)[static_cast<std::size_t>(color - 1)] = Rational();
}

void RevenuePatch::keep_only(int v, int color) {
    if (color < 1 || color > work_.k_) throw InputError("revenue: color out of range");
    auto& row = editable_row(v);
    for (int i = 1; i <= work_.k_; ++i)
        if (i != color) row[static_cast<std::size_t>(i - 1)] = Rational();
}

Revenue RevenuePatch::take() { return std::move(work_); }

Revenue Revenue::forbidden(int v, int color) const {
    RevenuePatch p(*this);
    p.zero(v, color);
    return p.take();
}

Instance make_instance(std::shared_ptr<const Graph> g, int k, Revenue revenue) {
    if (!g) throw InputError("instance without a graph");
    if (k < 1) throw InputError("instance needs k >= 1");
    if (revenue.n() != g->n() || revenue.k() != k)
        throw InputError("revenue dimensions do not match the instance");
    return Instance{std::move(g), k, std::move(revenue)};
}

Instance make_instance(Graph g, int k, Revenue revenue) {
    return make_instance(std::make_shared<const Graph>(std::move(g)), k, std::move(revenue));
}

Solution normalized_solution(const Instance& inst, std::vector<std::pair<int, int>> colored) {
    std::sort(colored.begin(), colored.end());
    Solution sol;
    for (const auto& [v, c] : colored) {
        if (v < 0 || v >= inst.n()) throw InternalError("solution vertex out of range");
        if (c < 1 || c > inst.k) throw InternalError("solution color out of range");
        if (inst.revenue.at(v, c).is_zero()) continue; // uncolor zero-revenue vertices
        if (!sol.colored.empty() && sol.colored.back().first == v)
            throw InternalError("vertex colored twice");
        sol.colored.emplace_back(v, c);
        sol.value += inst.revenue.at(v, c);
    }
    for (const auto& [v, c] : sol.colored) {
        for (const auto& [u, cu] : sol.colored) {
            if (u >= v) break;
            if (cu == c && inst.g().adjacent(u, v))
                throw InternalError("improper coloring produced internally");
        }
    }
    return sol;
}

Rational solution_value(const Instance& inst, const Solution& sol) {
    Rational total;
    for (std::size_t i = 0; i < sol.colored.size(); ++i) {
        auto [v, c] = sol.colored[i];
        if (v < 0 || v >= inst.n()) throw ValidationError("colored vertex out of range", v);
        if (c < 1 || c > inst.k) throw ValidationError("color out of range at vertex", v);
        if (i > 0 && sol.colored[i - 1].first == v)
            throw ValidationError("vertex colored twice", v);
        if (inst.revenue.at(v, c).is_zero())
            throw ValidationError("zero-revenue color assigned", v);
        for (std::size_t j = 0; j < i; ++j) {
            auto [u, cu] = sol.colored[j];
            if (cu == c && inst.g().adjacent(u, v))
                throw ValidationError("adjacent vertices share a color", v);
        }
        total += inst.revenue.at(v, c);
    }
    return total;
}

Instance forbid_color(const Instance& inst, int v, int color) {
    return Instance{inst.graph, inst.k, inst.revenue.forbidden(v, color)};
}

SubInstance subinstance(const Instance& inst, const VertexSet& s) {
    auto [sub, to_parent] = induced_subgraph(inst.g(), s);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(sub.n()));
    for (int v = 0; v < sub.n(); ++v) {
        auto& row = rows[static_cast<std::size_t>(v)];
        row.reserve(static_cast<std::size_t>(inst.k));
        for (int c = 1; c <= inst.k; ++c)
            row.push_back(inst.revenue.at(to_parent[static_cast<std::size_t>(v)], c));
    }
    return {make_instance(std::move(sub), inst.k, Revenue::from_rows(std::move(rows), inst.k)),
            std::move(to_parent)};
}

Solution merge_solutions(const Instance& parent, const std::vector<MappedSolution>& parts) {
    std::vector<std::pair<int, int>> combined;
    for (const auto& part : parts) {
        for (const auto& [v, c] : part.solution->colored) {
            int pv = v;
            if (part.to_parent) {
                if (v < 0 || v >= static_cast<int>(part.to_parent->size()))
                    throw InternalError("merge: vertex outside its map");
                pv = (*part.to_parent)[static_cast<std::size_t>(v)];
            }
            combined.emplace_back(pv, c);
        }
    }
    std::sort(combined.begin(), combined.end());
    for (std::size_t i = 1; i < combined.size(); ++i)
        if (combined[i].first == combined[i - 1].first)
            throw InternalError("merge: overlapping parts");
    Solution merged = normalized_solution(parent, std::move(combined));
    // cross-check: the parts' values must add up exactly
    Rational expected;
    for (const auto& part : parts) expected += part.solution->value;
    if (merged.value != expected)
        throw InternalError("merge: combined value differs from the sum of parts");
    return merged;
}

Instance from_list_coloring(const Graph& g, const std::vector<std::uint32_t>& lists, int k) {
    if (k < 1 || k > 31) throw InputError("list coloring needs 1 <= k <= 31");
    if (static_cast<int>(lists.size()) != g.n())
        throw InputError("one list per vertex required");
    Revenue rev(g.n(), k);
    for (int v = 0; v < g.n(); ++v) {
        if (lists[static_cast<std::size_t>(v)] >> k)
            throw InputError("list mentions a color above k");
        for (int c = 1; c <= k; ++c)
            if (lists[static_cast<std::size_t>(v)] & (1u << (c - 1))) rev.set(v, c, Rational(1));
    }
    return make_instance(g, k, std::move(rev));
}

} // namespace mpkc
