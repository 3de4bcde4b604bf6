#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace isr {

using Vertex = int;

/// Fixed-capacity bitset over dense vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity) : _capacity(capacity), _words((capacity + 63) / 64, 0) {}

    auto capacity() const -> int { return _capacity; }

    auto set(Vertex v) -> void { _words[v >> 6] |= word_bit(v); }
    auto reset(Vertex v) -> void { _words[v >> 6] &= ~word_bit(v); }
    auto test(Vertex v) const -> bool { return (_words[v >> 6] & word_bit(v)) != 0; }

    auto count() const -> int
    {
        int total = 0;
        for (auto w : _words)
            total += std::popcount(w);
        return total;
    }

    auto any() const -> bool
    {
        for (auto w : _words)
            if (w)
                return true;
        return false;
    }

    auto none() const -> bool { return ! any(); }

    /// First member at or after `from`, or -1.
    auto next(Vertex from = 0) const -> Vertex
    {
        if (from >= _capacity)
            return -1;
        std::size_t i = from >> 6;
        std::uint64_t w = _words[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<Vertex>(i * 64 + std::countr_zero(w));
            if (++i >= _words.size())
                return -1;
            w = _words[i];
        }
    }

    auto intersect_with(const VertexSet & o) -> void
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= o._words[i];
    }

    auto unite_with(const VertexSet & o) -> void
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= o._words[i];
    }

    auto subtract(const VertexSet & o) -> void
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~o._words[i];
    }

    auto intersects(const VertexSet & o) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & o._words[i])
                return true;
        return false;
    }

    auto intersection_count(const VertexSet & o) const -> int
    {
        int total = 0;
        for (std::size_t i = 0; i < _words.size(); ++i)
            total += std::popcount(_words[i] & o._words[i]);
        return total;
    }

    auto members() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (Vertex v = next(0); v != -1; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
    static auto word_bit(Vertex v) -> std::uint64_t { return std::uint64_t{1} << (v & 63); }

    int _capacity = 0;
    std::vector<std::uint64_t> _words;
};

}
