#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "secdom/errors.hpp"

namespace secdom {

// Subset of the vertices 0..n-1 of an ambient graph, stored as a bitset.
// All set operations are word-parallel, which keeps the subset-enumeration
// oracle and the O(n^3) secure-domination verifier cheap at desk scale.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet from_vertices(std::size_t universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(int v) const {
        check_range(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w != 0) return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Iterates members in ascending order.
    class iterator {
    public:
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() { v_ = set_->next_after(v_); return *this; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
    private:
        const VertexSet* set_;
        int v_;
    };

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int next_after(int v) const {
        if (v < 0) return -1;
        std::size_t i = (static_cast<std::size_t>(v) + 1) >> 6;
        if (i >= words_.size()) return -1;
        std::uint64_t w = words_[i] >> ((v + 1) & 63);
        if (w != 0) return v + 1 + std::countr_zero(w);
        for (++i; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    void check_range(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_)
            throw input_error("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe_));
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace secdom
