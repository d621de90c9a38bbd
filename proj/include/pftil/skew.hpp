#pragma once

#include <string>
#include <vector>

#include "pftil/bigint.hpp"
#include "pftil/poly.hpp"

namespace pftil {

// Strictly increasing 1-based row/column labels.
class IndexSet {
  public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> labels) : labels_(std::move(labels)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] < 1 || (i > 0 && labels_[i] <= labels_[i - 1]))
                throw DomainError("index set must be strictly increasing and 1-based");
        }
    }

    static IndexSet full(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return IndexSet(v);
    }

    int size() const { return static_cast<int>(labels_.size()); }
    int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
    int max() const { return labels_.empty() ? 0 : labels_.back(); }
    const std::vector<int>& labels() const { return labels_; }

    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(labels_[i]);
        }
        return s + "}";
    }

  private:
    std::vector<int> labels_;
};

// Skew-symmetric matrix over a commutative ring (BigInt or
// BivariatePolynomial).  Only the strict upper triangle is stored; reads of
// (j,i) and of the diagonal materialize -a_{i,j} and 0.
template <typename Ring>
class SkewMatrix {
  public:
    explicit SkewMatrix(int order) : order_(order) {
        if (order < 0) throw DomainError("matrix order must be >= 0");
        upper_.resize(static_cast<std::size_t>(order) * (order > 0 ? order - 1 : 0) / 2);
    }

    int order() const { return order_; }

    // i, j are 1-based.
    const Ring& upper(int i, int j) const { return upper_[pos(i, j)]; }

    void set(int i, int j, Ring v) { upper_[pos(i, j)] = std::move(v); }

    Ring get(int i, int j) const {
        check(i);
        check(j);
        if (i == j) return Ring{};
        if (i < j) return upper_[pos(i, j)];
        return -upper_[pos(j, i)];
    }

    SkewMatrix minor(const IndexSet& idx) const {
        if (idx.max() > order_)
            throw IndexError("index " + std::to_string(idx.max()) + " outside order " +
                             std::to_string(order_));
        SkewMatrix m(idx.size());
        for (int i = 1; i < idx.size(); ++i)
            for (int j = i + 1; j <= idx.size(); ++j)
                m.set(i, j, upper(idx[i - 1], idx[j - 1]));
        return m;
    }

    bool operator==(const SkewMatrix& o) const {
        return order_ == o.order_ && upper_ == o.upper_;
    }

  private:
    void check(int i) const {
        if (i < 1 || i > order_)
            throw IndexError("index " + std::to_string(i) + " outside order " +
                             std::to_string(order_));
    }

    std::size_t pos(int i, int j) const {
        check(i);
        check(j);
        if (i >= j) throw IndexError("upper-triangle access requires i < j");
        // Row-major strict upper triangle.
        auto r = static_cast<std::size_t>(i - 1);
        auto c = static_cast<std::size_t>(j - 1);
        auto n = static_cast<std::size_t>(order_);
        return r * n - r * (r + 1) / 2 + (c - r - 1);
    }

    int order_;
    std::vector<Ring> upper_;
};

using IntSkewMatrix = SkewMatrix<BigInt>;
using PolySkewMatrix = SkewMatrix<BivariatePolynomial>;

}  // namespace pftil
