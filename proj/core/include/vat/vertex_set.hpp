#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace vat {

// Fixed-width bit-vector over the vertex ids 0..size()-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);
    VertexSet(int n, std::initializer_list<int> members);

    static VertexSet full(int n);
    // Only valid for n <= 64; bit i of mask is vertex i.
    static VertexSet from_mask(int n, std::uint64_t mask);

    int size() const noexcept { return n_; }
    bool contains(int v) const { return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }
    void insert(int v);
    void erase(int v);

    int count() const noexcept;
    bool empty() const noexcept;
    bool is_full() const noexcept { return count() == n_; }
    // Smallest member, or -1 when empty.
    int first() const noexcept;

    VertexSet complement() const;
    std::vector<int> members() const;

    // Low word; the whole set when size() <= 64.
    std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_.front(); }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace vat
