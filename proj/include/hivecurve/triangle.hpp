#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hivecurve {

/// A lattice point of Delta_n = {(i,j,k) >= 0 : i+j+k = n}.
struct TriangleIndex {
    int i = 0, j = 0, k = 0;

    int degree() const { return i + j + k; }
    int operator[](int axis) const { return axis == 0 ? i : axis == 1 ? j : k; }
    auto operator<=>(const TriangleIndex&) const = default;
    bool operator==(const TriangleIndex&) const = default;

    std::string str() const {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    }
};

inline std::size_t triangle_size(int n) { return static_cast<std::size_t>((n + 1) * (n + 2) / 2); }

/// Canonical order: i descending, then j descending. For n=1 this gives
/// (1,0,0), (0,1,0), (0,0,1).
inline std::size_t triangle_position(int n, const TriangleIndex& t) {
    int a = n - t.i;
    return static_cast<std::size_t>(a * (a + 1) / 2 + (a - t.j));
}

inline bool in_triangle(int n, const TriangleIndex& t) {
    return t.i >= 0 && t.j >= 0 && t.k >= 0 && t.i + t.j + t.k == n;
}

inline std::vector<TriangleIndex> index_set(int n) {
    require(n >= 0, ErrorKind::InvalidArgument, "negative degree");
    std::vector<TriangleIndex> out;
    out.reserve(triangle_size(n));
    for (int i = n; i >= 0; --i)
        for (int j = n - i; j >= 0; --j) out.push_back({i, j, n - i - j});
    return out;
}

/// Dense table over Delta_n in canonical order.
template <class T>
class TriangleTable {
public:
    using value_type = T;

    TriangleTable() : TriangleTable(0) {}
    explicit TriangleTable(int n, const T& fill = T{}) : n_(n), values_(checked_size(n), fill) {}
    TriangleTable(int n, std::vector<T> values) : n_(n), values_(std::move(values)) {
        require(values_.size() == checked_size(n), ErrorKind::DimensionMismatch,
                "table for degree " + std::to_string(n) + " needs " +
                    std::to_string(triangle_size(n)) + " values");
    }

    template <class F>
    static TriangleTable generate(int n, F&& f) {
        TriangleTable t(n);
        std::size_t p = 0;
        for (const auto& idx : index_set(n)) t.values_[p++] = f(idx);
        return t;
    }

    int degree() const { return n_; }
    std::size_t size() const { return values_.size(); }

    T& at(const TriangleIndex& t) { return values_[position(t)]; }
    const T& at(const TriangleIndex& t) const { return values_[position(t)]; }
    T& at(int i, int j, int k) { return at({i, j, k}); }
    const T& at(int i, int j, int k) const { return at({i, j, k}); }
    T& operator[](std::size_t p) { return values_[p]; }
    const T& operator[](std::size_t p) const { return values_[p]; }

    bool contains(const TriangleIndex& t) const { return in_triangle(n_, t); }
    std::vector<TriangleIndex> indices() const { return index_set(n_); }
    const std::vector<T>& values() const { return values_; }

    auto begin() { return values_.begin(); }
    auto end() { return values_.end(); }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    template <class F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(values_.front()))>;
        std::vector<U> out;
        out.reserve(values_.size());
        for (const auto& v : values_) out.push_back(f(v));
        return TriangleTable<U>(n_, std::move(out));
    }

    bool operator==(const TriangleTable& o) const { return n_ == o.n_ && values_ == o.values_; }

private:
    static std::size_t checked_size(int n) {
        require(n >= 0, ErrorKind::InvalidArgument, "negative degree");
        return triangle_size(n);
    }
    std::size_t position(const TriangleIndex& t) const {
        require(in_triangle(n_, t), ErrorKind::InvalidArgument,
                "index " + t.str() + " outside Delta_" + std::to_string(n_));
        return triangle_position(n_, t);
    }

    int n_;
    std::vector<T> values_;
};

} // namespace hivecurve
