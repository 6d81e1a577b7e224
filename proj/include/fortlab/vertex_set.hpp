#pragma once
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>
#include <boost/container/small_vector.hpp>

namespace fortlab {

/* Subset of {0, ..., universe-1} as a bit vector. One inline 64-bit word
   covers n <= 64 without heap traffic (small_vector); larger universes
   spill to as many words as needed with the same semantics. Value type:
   copy freely, compare by value. Stray bits above the universe are never
   set, so whole-word equality and lexicographic compares are valid. */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(check_universe(universe)) {
        words_.resize(word_count(), 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet from_vector(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    /* universe <= 64 only; bit i of mask = membership of vertex i */
    static VertexSet from_mask(int universe, std::uint64_t mask) {
        if (universe > 64) throw std::invalid_argument("from_mask: universe exceeds 64");
        VertexSet s(universe);
        if (universe > 0) {
            std::uint64_t valid = universe == 64 ? ~0ull : ((1ull << universe) - 1);
            if (mask & ~valid) throw std::invalid_argument("from_mask: bits outside universe");
            s.words_[0] = mask;
        } else if (mask) {
            throw std::invalid_argument("from_mask: bits outside universe");
        }
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check_vertex(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    }

    VertexSet& insert(int v) {
        check_vertex(v);
        words_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
        return *this;
    }

    VertexSet& erase(int v) {
        check_vertex(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63));
        return *this;
    }

    VertexSet with(int v) const { VertexSet s = *this; s.insert(v); return s; }
    VertexSet without(int v) const { VertexSet s = *this; s.erase(v); return s; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool is_full() const { return count() == universe_; }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r = matched(o);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r = matched(o);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r = matched(o);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }
    VertexSet operator^(const VertexSet& o) const {
        VertexSet r = matched(o);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
        return r;
    }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool is_subset_of(const VertexSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int count_intersection(const VertexSet& o) const {
        require_same_universe(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    /* smallest member, or -1 when empty */
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /* smallest member > v, or universe() when none */
    int next_after(int v) const {
        for (int u = v + 1; u < universe_;) {
            std::uint64_t w = words_[static_cast<std::size_t>(u) >> 6] >> (u & 63);
            if (w) return u + std::countr_zero(w);
            u = ((u >> 6) + 1) << 6;
        }
        return universe_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v != -1 && v < universe_; v = next_after(v)) out.push_back(v);
        return out;
    }

    std::uint64_t mask64() const {
        if (universe_ > 64) throw std::invalid_argument("mask64: universe exceeds 64");
        return words_.empty() ? 0 : words_[0];
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    /* Numeric compare of the bit patterns (high words most significant).
       This is the canonical order for fort collections. */
    friend bool bit_pattern_less(const VertexSet& a, const VertexSet& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() { v_ = s_->next_after(v_); return *this; }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }
    private:
        const VertexSet* s_;
        int v_;
    };
    const_iterator begin() const {
        int f = first();
        return const_iterator(this, f == -1 ? universe_ : f);
    }
    const_iterator end() const { return const_iterator(this, universe_); }

private:
    static int check_universe(int n) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
        return n;
    }
    std::size_t word_count() const { return (static_cast<std::size_t>(universe_) + 63) / 64; }
    void check_vertex(int v) const {
        if (v < 0 || v >= universe_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }
    void require_same_universe(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }
    VertexSet matched(const VertexSet& o) const {
        require_same_universe(o);
        return VertexSet(universe_);
    }
    /* clear stray bits above universe_ in the last word */
    void trim() {
        if (words_.empty()) return;
        int used = universe_ & 63;
        if (used) words_.back() &= (1ull << used) - 1;
    }

    int universe_ = 0;
    boost::container::small_vector<std::uint64_t, 1> words_;
};

}  // namespace fortlab
