#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace factorlab {

/// Set of vertex ids in [0, 64), backed by a bitmask.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet from_mask(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    /// {0, 1, ..., n-1}
    static VertexSet range(int n) {
        return from_mask(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    bool contains(int v) const { return (bits_ >> v) & 1u; }
    VertexSet& add(int v) {
        bits_ |= 1ull << v;
        return *this;
    }
    VertexSet& remove(int v) {
        bits_ &= ~(1ull << v);
        return *this;
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t mask() const { return bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t x = bits_; x; x &= x - 1) out.push_back(std::countr_zero(x));
        return out;
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return from_mask(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return from_mask(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return from_mask(a.bits_ & ~b.bits_); }
    bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending vertex sequences, so {0,2} < {1}
/// and {0} < {0,2}. Used for deterministic witness tie-breaking.
inline bool set_lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.mask(), y = b.mask();
    while (x && y) {
        int va = std::countr_zero(x), vb = std::countr_zero(y);
        if (va != vb) return va < vb;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

} // namespace factorlab
