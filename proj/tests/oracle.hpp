#pragma once

// Brute-force reference implementations used only by the tests. They work
// straight from the definitions on plain vectors and share no code with the
// library's checkers (own profile encoding, no early-exit tricks, no orbit
// tables), so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Table = std::function<bool(std::size_t, std::size_t)>;
using Q = boost::rational<std::int64_t>;

struct Grid {
  std::size_t m;
  std::size_t n;

  std::size_t size() const {
    std::size_t s = 1;
    for (std::size_t k = 0; k < n; ++k) s *= m;
    return s;
  }
  std::vector<std::size_t> decode(std::size_t x) const {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = x % m;
      x /= m;
    }
    return out;
  }
  std::size_t encode(const std::vector<std::size_t>& c) const {
    std::size_t x = 0;
    for (std::size_t i = n; i-- > 0;) x = x * m + c[i];
    return x;
  }
};

inline bool weak_order(const Table& r, std::size_t size) {
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if (!r(x, y) && !r(y, x)) return false;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      for (std::size_t z = 0; z < size; ++z)
        if (r(x, y) && r(y, z) && !r(x, z)) return false;
  return true;
}

/// Every coordinate permutation of every profile is indifferent to it.
inline bool symmetric(const Table& r, const Grid& g) {
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto c = g.decode(x);
    std::vector<std::size_t> sigma(g.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::vector<std::size_t> p(g.n);
      for (std::size_t k = 0; k < g.n; ++k) p[k] = c[sigma[k]];
      const auto y = g.encode(p);
      if (!(r(x, y) && r(y, x))) return false;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return true;
}

/// (x_M, z_-M) >= (y_M, z_-M) iff (x_M, w_-M) >= (y_M, w_-M), every M, x, y, z, w.
inline bool separable(const Table& r, const Grid& g) {
  const std::size_t size = g.size();
  const std::uint32_t coalitions = 1U << g.n;
  // mix[(M * size + a) * size + b] = (a_M, b_-M)
  std::vector<std::size_t> mix(coalitions * size * size);
  for (std::uint32_t coalition = 0; coalition < coalitions; ++coalition)
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        auto ca = g.decode(a);
        const auto cb = g.decode(b);
        for (std::size_t i = 0; i < g.n; ++i)
          if (!((coalition >> i) & 1U)) ca[i] = cb[i];
        mix[(coalition * size + a) * size + b] = g.encode(ca);
      }
  auto at = [&](std::uint32_t coalition, std::size_t a, std::size_t b) {
    return mix[(coalition * size + a) * size + b];
  };
  for (std::uint32_t coalition = 0; coalition < coalitions; ++coalition)
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y)
        for (std::size_t z = 0; z < size; ++z)
          for (std::size_t w = 0; w < size; ++w)
            if (r(at(coalition, x, z), at(coalition, y, z)) != r(at(coalition, x, w), at(coalition, y, w)))
              return false;
  return true;
}

enum class Judgment { strong, dual, weak };

inline bool judgment(const Table& r, const Grid& g, Judgment kind) {
  auto strict = [&](std::size_t x, std::size_t y) { return r(x, y) && !r(y, x); };
  for (std::size_t a = 0; a < g.m; ++a)
    for (std::size_t b = 0; b < g.m; ++b)
      for (std::size_t c = 0; c < g.m; ++c)
        for (std::size_t i = 0; i < g.n; ++i)
          for (std::size_t j = 0; j < g.n; ++j) {
            if (i == j) continue;
            std::vector<std::size_t> bb(g.n, b);
            auto aib = bb;
            aib[i] = a;
            auto cj = aib;
            cj[j] = c;
            const auto B = g.encode(bb), A = g.encode(aib), C = g.encode(cj);
            switch (kind) {
              case Judgment::strong:
                if (strict(B, A) && !r(A, C)) return false;
                break;
              case Judgment::dual:
                if (strict(A, B) && !r(C, A)) return false;
                break;
              case Judgment::weak:
                if (strict(B, A) && !strict(B, C)) return false;
                break;
            }
          }
  return true;
}

/// Weak orders on k items, counted as surjections onto {0..L-1}.
inline std::uint64_t fubini(std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t functions = 1;
  for (std::size_t i = 0; i < k; ++i) functions *= k;
  for (std::uint64_t f = 0; f < functions; ++f) {
    std::vector<bool> used(k, false);
    std::uint64_t v = f;
    for (std::size_t i = 0; i < k; ++i) {
      used[v % k] = true;
      v /= k;
    }
    const auto levels = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
    if (std::all_of(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(levels), [](bool u) { return u; }))
      ++total;
  }
  return k == 0 ? 1 : total;
}

/// x >= y iff the count of members of S is at least as large.
inline std::vector<std::vector<bool>> sufficientarian(std::uint64_t s_bits, const Grid& g) {
  auto count = [&](std::size_t x) {
    int c = 0;
    for (auto e : g.decode(x)) c += ((s_bits >> e) & 1U) ? 1 : 0;
    return c;
  };
  std::vector<std::vector<bool>> out(g.size(), std::vector<bool>(g.size()));
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) out[x][y] = count(x) >= count(y);
  return out;
}

/// -1, 0, 1 after sorting both vectors ascending.
template <class T>
int leximin(std::vector<T> u, std::vector<T> v) {
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] < v[k]) return -1;
    if (v[k] < u[k]) return 1;
  }
  return 0;
}

/// Greatest lower bound from a leq matrix, or -1 when there is none.
inline int glb(const std::vector<std::vector<bool>>& leq, std::size_t a, std::size_t b) {
  const std::size_t m = leq.size();
  int best = -1;
  for (std::size_t c = 0; c < m; ++c) {
    if (!(leq[c][a] && leq[c][b])) continue;
    bool greatest = true;
    for (std::size_t d = 0; d < m; ++d)
      if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
    if (greatest) best = static_cast<int>(c);
  }
  return best;
}

/// Upward closed and closed under greatest lower bounds.
inline bool filter(const std::vector<std::vector<bool>>& leq, std::uint64_t s) {
  const std::size_t m = leq.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (!((s >> a) & 1U)) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (leq[a][b] && !((s >> b) & 1U)) return false;
      if ((s >> b) & 1U) {
        const int g = glb(leq, a, b);
        if (g < 0 || !((s >> g) & 1U)) return false;
      }
    }
  }
  return true;
}

/// The example2 rule straight from its two-branch definition.
inline bool example2_geq(const std::vector<Q>& x, const std::vector<Q>& y, const Q& tau) {
  Q low = x[0];
  for (const auto& v : x) low = std::min(low, v);
  for (const auto& v : y) low = std::min(low, v);
  if (low < tau) {
    std::size_t cx = 0, cy = 0;
    for (const auto& v : x) cx += v >= tau ? 1 : 0;
    for (const auto& v : y) cy += v >= tau ? 1 : 0;
    return cx >= cy;
  }
  Q px = 1, py = 1;
  for (const auto& v : x) px *= (1 - v);
  for (const auto& v : y) py *= (1 - v);
  return px <= py;
}

/// min_k alpha_k d_k with d the values sorted from largest to smallest.
inline Q example1_utility(const std::vector<Q>& alpha, std::vector<Q> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Q best = alpha[0] * values[0];
  for (std::size_t k = 1; k < values.size(); ++k) best = std::min(best, alpha[k] * values[k]);
  return best;
}

}  // namespace oracle
