#ifndef MPKC_VERTEX_SET_HPP
#define MPKC_VERTEX_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mpkc/errors.hpp"

namespace mpkc {

// Subset of the vertex range [0, n) of one fixed graph, stored as a bitset.
// The universe size n is part of the value; mixing sets of different
// universes is an error.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), w_((static_cast<std::size_t>(universe) + 63) / 64, 0) {
        if (universe < 0) throw InputError("negative universe size");
    }
    VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
        for (int v : vs) set(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.w_) w = ~std::uint64_t(0);
        s.clear_tail();
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (w_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
    }
    void set(int v) {
        check(v);
        w_[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64);
    }
    void reset(int v) {
        check(v);
        w_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t(1) << (v % 64));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet operator&(const VertexSet& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    VertexSet operator|(const VertexSet& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    VertexSet minus(const VertexSet& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }
    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.clear_tail();
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int v = static_cast<int>(i * 64 + __builtin_ctzll(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex out of range");
    }
    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw InputError("vertex sets over different graphs");
    }
    void clear_tail() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
    }
    template <class Op>
    VertexSet apply(const VertexSet& o, Op op) const {
        check_universe(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = op(w_[i], o.w_[i]);
        return r;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace mpkc

#endif
