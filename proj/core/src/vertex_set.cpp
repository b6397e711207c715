#include "vat/vertex_set.hpp"

#include <bit>

#include "vat/error.hpp"

namespace vat {
namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

} // namespace

VertexSet::VertexSet(int n) : n_(n), words_(words_for(n), 0) {
    if (n < 0)
        throw Error(ErrorCode::BadParameter, "negative vertex set width");
}

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
    for (int v : members)
        insert(v);
}

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    for (std::size_t w = 0; w < s.words_.size(); ++w)
        s.words_[w] = ~std::uint64_t{0};
    if (n % 64 != 0)
        s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
}

VertexSet VertexSet::from_mask(int n, std::uint64_t mask) {
    if (n > 64)
        throw Error(ErrorCode::BadParameter, "mask construction needs n <= 64");
    VertexSet s(n);
    if (n == 0)
        return s;
    if (n < 64)
        mask &= (std::uint64_t{1} << n) - 1;
    s.words_[0] = mask;
    return s;
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " outside set width");
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " outside set width");
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const noexcept {
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept {
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

int VertexSet::first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] &= ~words_[i];
    return out;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (o.n_ != n_)
        throw Error(ErrorCode::BadParameter, "vertex set width mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (o.n_ != n_)
        throw Error(ErrorCode::BadParameter, "vertex set width mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

} // namespace vat
