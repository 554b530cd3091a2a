#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace covnum {

/// Fixed-universe bitset over vertex ids. Instances with at most 64 vertices
/// use a single word.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0)
    {
    }

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::vector<std::uint64_t> &words() const noexcept { return words_; }

    void insert(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void erase(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool contains(std::size_t v) const { return (words_[v / 64] >> (v % 64)) & 1U; }

    std::size_t size() const noexcept
    {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    VertexSet &operator|=(const VertexSet &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet &operator-=(const VertexSet &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    bool is_subset_of(const VertexSet &o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    std::optional<std::size_t> first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return std::nullopt;
    }

    std::vector<std::size_t> elements() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (auto w = words_[i]; w != 0; w &= w - 1)
                out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        return out;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace covnum
