#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pftil/skew.hpp"

namespace pftil {

class PathGraph;  // lattice.hpp

template <typename R>
R ring_one() {
    return R(BigInt(1));
}

// -------------------------------------------------------------------------
// Expansion engine.
//
// pf(S) = sum_{j in S \ {min S}} (-1)^{pos(j)+1} M[min S, j] pf(S \ {min S, j})
// memoized on the index subset, so every principal minor of one matrix
// shares a single table.  Works over any commutative ring; practical up to
// order ~20.
// -------------------------------------------------------------------------
template <typename Ring>
class PfaffianExpander {
  public:
    explicit PfaffianExpander(const SkewMatrix<Ring>& m) : m_(m) {
        if (m.order() > 62)
            throw DomainError("expansion engine limited to order 62");
    }

    // Pfaffian of the principal minor on the 0-based bit set `mask`.
    const Ring& pf(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Ring acc{};
        const int lowest = std::countr_zero(mask);
        std::uint64_t rest = mask & (mask - 1);  // drop the lowest index
        int p = 0;
        for (std::uint64_t bits = rest; bits; bits &= bits - 1) {
            const int j = std::countr_zero(bits);
            ++p;
            const Ring& sub = pf(rest & ~(std::uint64_t{1} << j));
            Ring term = m_.upper(lowest + 1, j + 1) * sub;
            if (p % 2 == 0) term = -term;
            acc += term;
        }
        return memo_.emplace(mask, std::move(acc)).first->second;
    }

    Ring pfOf(const IndexSet& idx) {
        std::uint64_t mask = 0;
        for (int label : idx) {
            if (label > m_.order()) throw IndexError("index outside matrix");
            mask |= std::uint64_t{1} << (label - 1);
        }
        if (idx.size() % 2 != 0)
            throw OddOrderError("pfaffian of odd order is undefined");
        return pf(mask);
    }

  private:
    const SkewMatrix<Ring>& m_;
    std::unordered_map<std::uint64_t, Ring> memo_{{0, ring_one<Ring>()}};
};

template <typename Ring>
Ring pf_expand(const SkewMatrix<Ring>& m) {
    if (m.order() % 2 != 0)
        throw OddOrderError("pfaffian of odd order is undefined");
    PfaffianExpander<Ring> ex(m);
    return ex.pfOf(IndexSet::full(m.order()));
}

// -------------------------------------------------------------------------
// Elimination engine (integer matrices of any order).
//
// Skew-symmetric elimination over exact rationals: clear rows/columns 3..m
// against the (1,2) pivot block and recurse; a row-and-column transposition
// flips the sign.  Exact, O(m^3) field operations.
// -------------------------------------------------------------------------
BigInt pf_eliminate(const IntSkewMatrix& m);

// Exact determinant of a square integer matrix (rational elimination).
BigInt det_exact(std::vector<std::vector<BigInt>> a);

// Preferred engine per ring: elimination for integers, expansion for
// polynomials (no division available in the ring).
inline BigInt pf_auto(const IntSkewMatrix& m) { return pf_eliminate(m); }
inline BivariatePolynomial pf_auto(const PolySkewMatrix& m) { return pf_expand(m); }

enum class OddMode { Zero, Phantom };

// Pfaffian of the principal minor M_I.  Odd |I| yields 0 in Zero mode; in
// Phantom mode the minor is bordered by one extra last row/column holding
// the supplied phantom values (phantom[i-1] pairs with matrix label i).
template <typename Ring>
Ring pf_minor(const SkewMatrix<Ring>& m, const IndexSet& idx, OddMode mode,
              const std::vector<Ring>* phantom = nullptr) {
    if (idx.max() > m.order()) throw IndexError("index set outside matrix");
    if (idx.size() % 2 == 0) return pf_auto(m.minor(idx));
    if (mode == OddMode::Zero) return Ring{};
    if (phantom == nullptr || phantom->size() < static_cast<std::size_t>(m.order()))
        throw DomainError("phantom mode requires a phantom column for every label");
    const int r = idx.size();
    SkewMatrix<Ring> b(r + 1);
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) b.set(i, j, m.upper(idx[i - 1], idx[j - 1]));
        b.set(i, r + 1, (*phantom)[static_cast<std::size_t>(idx[i - 1] - 1)]);
    }
    return pf_auto(b);
}

// Lindstrom-Gessel-Viennot determinant of the source-to-target path-count
// matrix of g.  Requires |sources| = |targets|.
BigInt lgv_det(const PathGraph& g);

// -------------------------------------------------------------------------
// Pfaffian decomposition M = R^T T R (2x2 skew diagonal blocks t_l, unit
// upper block-triangular R), entries given by Pfaffian ratios:
//   t_l = pf(M_[2l]) / pf(M_[2l-2])
//   r_{i,j} = pf(M_{[2d-2] u {i,j}}) / pf(M_[2d]),  d = floor((i+1)/2).
// Exists iff every even leading principal minor has nonzero Pfaffian.
// -------------------------------------------------------------------------

template <typename Ring>
struct FieldTraits;

template <>
struct FieldTraits<BigInt> {
    using F = BigRational;
    static F make(const BigInt& num, const BigInt& den) { return F(num, den); }
    static bool eq(const F& a, const F& b) { return a == b; }
    static BigInt toRing(const F& v) {
        if (boost::multiprecision::denominator(v) != 1)
            throw NotDivisibleError("pfaffian ratio is not integral");
        return boost::multiprecision::numerator(v);
    }
    static std::string str(const F& v) { return v.str(); }
};

template <>
struct FieldTraits<BivariatePolynomial> {
    using F = RationalFunction;
    static F make(const BivariatePolynomial& num, const BivariatePolynomial& den) {
        return F(num, den);
    }
    static bool eq(const F& a, const F& b) { return a.eq(b); }
    static BivariatePolynomial toRing(const F& v) { return v.toPolynomial(); }
    static std::string str(const F& v) { return v.str(); }
};

template <typename Ring>
struct PfaffianDecomposition {
    using F = typename FieldTraits<Ring>::F;

    int order = 0;                       // 2n
    std::vector<F> t;                    // t_1..t_n
    std::map<std::pair<int, int>, F> r;  // r_{i,j} for 1 <= i < j <= 2n

    const F& rAt(int i, int j) const { return r.at({i, j}); }

    // Full R and T factors, then R^T T R as a dense field matrix.
    std::vector<std::vector<F>> reconstruct() const;
};

namespace detail {

// pf of arbitrary principal minors of one matrix, with the engine picked by
// the ring and the expansion memo shared across queries.
template <typename Ring>
class MinorPfaffians {
  public:
    explicit MinorPfaffians(const SkewMatrix<Ring>& m) : m_(m) {
        if constexpr (!std::is_same_v<Ring, BigInt>) ex_.emplace(m);
    }

    Ring pfOf(const IndexSet& idx) {
        if constexpr (std::is_same_v<Ring, BigInt>)
            return pf_eliminate(m_.minor(idx));
        else
            return ex_->pfOf(idx);
    }

  private:
    const SkewMatrix<Ring>& m_;
    std::optional<PfaffianExpander<Ring>> ex_;
};

inline IndexSet prefix_union(int upto, int i, int j) {
    std::vector<int> v;
    for (int a = 1; a <= upto; ++a) v.push_back(a);
    v.push_back(i);
    v.push_back(j);
    return IndexSet(std::move(v));
}

}  // namespace detail

template <typename Ring>
PfaffianDecomposition<Ring> pf_decompose(const SkewMatrix<Ring>& m) {
    using FT = FieldTraits<Ring>;
    const int order = m.order();
    if (order % 2 != 0) throw OddOrderError("decomposition requires even order");
    const int n = order / 2;

    detail::MinorPfaffians<Ring> minors(m);
    std::vector<Ring> prefix_pf(static_cast<std::size_t>(n) + 1);
    prefix_pf[0] = ring_one<Ring>();  // pf of the empty matrix
    for (int l = 1; l <= n; ++l) {
        prefix_pf[static_cast<std::size_t>(l)] = minors.pfOf(IndexSet::full(2 * l));
        if (prefix_pf[static_cast<std::size_t>(l)] == Ring{})
            throw SingularPrincipalMinorError("pf(M_[" + std::to_string(2 * l) +
                                              "]) = 0");
    }

    PfaffianDecomposition<Ring> d;
    d.order = order;
    for (int l = 1; l <= n; ++l)
        d.t.push_back(FT::make(prefix_pf[static_cast<std::size_t>(l)],
                               prefix_pf[static_cast<std::size_t>(l - 1)]));
    for (int i = 1; i < order; ++i) {
        const int dd = (i + 1) / 2;
        for (int j = i + 1; j <= order; ++j) {
            Ring num = minors.pfOf(detail::prefix_union(2 * dd - 2, i, j));
            d.r.emplace(std::make_pair(i, j),
                        FT::make(num, prefix_pf[static_cast<std::size_t>(dd)]));
        }
    }
    return d;
}

template <typename Ring>
std::vector<std::vector<typename FieldTraits<Ring>::F>>
PfaffianDecomposition<Ring>::reconstruct() const {
    const int m = order;
    auto zero = F{};
    std::vector<std::vector<F>> R(static_cast<std::size_t>(m),
                                  std::vector<F>(static_cast<std::size_t>(m), zero));
    std::vector<std::vector<F>> T = R;
    const F one = FieldTraits<Ring>::make(Ring(BigInt(1)), Ring(BigInt(1)));
    for (int l = 1; l <= m / 2; ++l) {
        T[static_cast<std::size_t>(2 * l - 2)][static_cast<std::size_t>(2 * l - 1)] =
            t[static_cast<std::size_t>(l - 1)];
        T[static_cast<std::size_t>(2 * l - 1)][static_cast<std::size_t>(2 * l - 2)] =
            -t[static_cast<std::size_t>(l - 1)];
        R[static_cast<std::size_t>(2 * l - 2)][static_cast<std::size_t>(2 * l - 1)] = one;
        R[static_cast<std::size_t>(2 * l - 1)][static_cast<std::size_t>(2 * l - 2)] = -one;
    }
    for (int i = 1; i <= m; ++i) {
        const int block_end = 2 * ((i + 1) / 2);
        for (int j = block_end + 1; j <= m; ++j)
            R[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                rAt(i, j);
    }
    // R^T T R.
    auto mul = [&](const std::vector<std::vector<F>>& a,
                   const std::vector<std::vector<F>>& b) {
        std::vector<std::vector<F>> c(static_cast<std::size_t>(m),
                                      std::vector<F>(static_cast<std::size_t>(m), zero));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                F acc = zero;
                for (int z = 0; z < m; ++z) {
                    const F& l = a[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
                    const F& rr = b[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)];
                    acc = acc + l * rr;
                }
                c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = acc;
            }
        return c;
    };
    std::vector<std::vector<F>> Rt(static_cast<std::size_t>(m),
                                   std::vector<F>(static_cast<std::size_t>(m), zero));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            Rt[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                R[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    return mul(mul(Rt, T), R);
}

// Pfaffian through the decomposition's product formulas:
//   I = [2n]              -> t_1 ... t_n
//   I = [2d-2] u {i,j}    -> pf(M_[2d]) * r_{i,j},  d = floor((i+1)/2).
template <typename Ring>
Ring pf_via_decomposition(const SkewMatrix<Ring>& m, const IndexSet& idx) {
    using FT = FieldTraits<Ring>;
    if (idx.size() % 2 != 0)
        throw UnsupportedIndexSetError("index set must have even size");
    if (idx.size() == 0) return ring_one<Ring>();
    bool is_prefix = true;
    for (int p = 0; p < idx.size(); ++p)
        if (idx[p] != p + 1) {
            is_prefix = false;
            break;
        }

    detail::MinorPfaffians<Ring> minors(m);
    auto prefix_pf = [&](int upto) {
        Ring v = minors.pfOf(IndexSet::full(upto));
        if (upto > 0 && v == Ring{})
            throw SingularPrincipalMinorError("pf(M_[" + std::to_string(upto) + "]) = 0");
        return v;
    };

    if (is_prefix) {
        // Telescoping product of the t_l.
        typename FT::F acc = FT::make(ring_one<Ring>(), ring_one<Ring>());
        Ring prev = ring_one<Ring>();
        for (int l = 1; 2 * l <= idx.size(); ++l) {
            Ring cur = prefix_pf(2 * l);
            acc = acc * FT::make(cur, prev);
            prev = cur;
        }
        return FT::toRing(acc);
    }

    // Must be [2d-2] followed by exactly {i,j}.
    const int r = idx.size();
    const int i = idx[r - 2];
    const int j = idx[r - 1];
    const int dd = (i + 1) / 2;
    bool well_formed = (r == 2 * dd - 2 + 2);
    for (int p = 0; well_formed && p < r - 2; ++p)
        if (idx[p] != p + 1) well_formed = false;
    if (!well_formed || i <= 2 * dd - 2)
        throw UnsupportedIndexSetError("index set " + idx.str() +
                                       " is not [2d-2] u {i,j}");
    Ring num = minors.pfOf(detail::prefix_union(2 * dd - 2, i, j));
    Ring pf2d = prefix_pf(2 * dd);
    typename FT::F val = FT::make(num, pf2d) * FT::make(pf2d, ring_one<Ring>());
    return FT::toRing(val);
}

}  // namespace pftil
