#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "pftil/bigint.hpp"

namespace pftil {

// Delannoy numbers d_{p,q}: paths (0,0)->(p,q) with steps (1,0),(0,1),(1,1).
// d_{p,q} = d_{p-1,q} + d_{p,q-1} + d_{p-1,q-1}, d_{p,0} = d_{0,q} = 1,
// and d_{p,q} = 0 when p < 0 or q < 0.
class DelannoyTable {
  public:
    BigInt operator()(long p, long q);

  private:
    std::mutex mu_;
    std::map<std::pair<long, long>, BigInt> memo_;
};

// Schroder triangle s_{p,q}, 0 <= p <= q: same steps, never below y = x.
// s_{0,q} = 1; s_{p,q} = s_{p-1,q} + s_{p,q-1} + s_{p-1,q-1} for q > p > 0;
// s_{p,p} = s_{p-1,p} + s_{p-1,p-1} for p > 0.
class SchroderTriangle {
  public:
    // Throws DomainError unless 0 <= p <= q.
    BigInt operator()(long p, long q);

  private:
    std::mutex mu_;
    std::map<std::pair<long, long>, BigInt> memo_;
};

BigInt delannoy(long p, long q);
BigInt schroder(long p, long q);

// Closed form sum_i C(p,i) C(q,i) 2^i, valid for p,q >= 0.
BigInt delannoy_closed_form(long p, long q);

// Number of domino tilings of the Aztec diamond of order n: 2^{n(n+1)/2}.
BigInt aztec_total(int n);

}  // namespace pftil
