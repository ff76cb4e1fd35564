#include "orthocover/oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace orthocover::oracle {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > limit / base) {
            throw InvalidInput("brute-force space exceeds the configured limit");
        }
        out *= base;
    }
    return out;
}

// Increments a base-`base` odometer; false once it wraps around.
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
    for (auto& d : digits) {
        if (++d < base) return true;
        d = 0;
    }
    return false;
}

// Number of proper colourings of `adj` (bitmask adjacency, n <= 20) with `colours` colours
// is sum over vertex subsets S of (-1)^(n-|S|) * ind(S)^colours, where ind(S) counts the
// independent subsets of S (including the empty set). Positive iff colourable.
bool colourable(const std::vector<std::uint32_t>& adj, std::size_t colours) {
    const std::size_t n = adj.size();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::int64_t> independent(std::size_t{1} << n);
    independent[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int v = __builtin_ctz(s);
        const std::uint32_t rest = s & (s - 1);
        independent[s] = independent[rest] + independent[rest & ~adj[v]];
    }
    __int128 total = 0;
    for (std::uint32_t s = 0;; ++s) {
        __int128 term = 1;
        for (std::size_t c = 0; c < colours; ++c) term *= independent[s];
        const bool negative = (n - static_cast<std::size_t>(__builtin_popcount(s))) % 2 == 1;
        total += negative ? -term : term;
        if (s == full) break;
    }
    return total > 0;
}

}  // namespace

bool orthogonal_colouring_exists_naive(const Graph& g, std::size_t num_colours, std::uint64_t limit) {
    const auto n = g.order();
    if (n == 0) return true;
    if (num_colours == 0) return false;
    checked_power(num_colours, 2 * n, limit);
    std::vector<std::size_t> digits(2 * n, 0);
    do {
        bool ok = true;
        for (const auto& e : g.edges()) {
            if (digits[2 * e.u] == digits[2 * e.v] || digits[2 * e.u + 1] == digits[2 * e.v + 1]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t v = 0; v < n && ok; ++v) {
            ok = seen.emplace(digits[2 * v], digits[2 * v + 1]).second;
        }
        if (ok) return true;
    } while (advance(digits, num_colours));
    return false;
}

bool orthogonal_colouring_exists(const Graph& g, std::size_t num_colours) {
    const auto n = g.order();
    if (n == 0) return true;
    if (num_colours == 0 || n > num_colours * num_colours) return false;
    // More colours than vertices never helps either coordinate.
    const auto colours = std::min(num_colours, n);
    if (n > 20 || n * colours > 120) {
        throw InvalidInput("factored oracle supports n <= 20 and n * min(N, n) <= 120");
    }

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::vector<std::size_t> first(n, 0);
    std::vector<std::uint32_t> joined(n);

    // Restricted growth strings: first[v] <= 1 + max(first[0..v-1]).
    auto leaf = [&]() {
        for (const auto& e : g.edges()) {
            if (first[e.u] == first[e.v]) return false;
        }
        for (std::size_t a = 0; a < n; ++a) {
            joined[a] = adj[a];
            for (std::size_t b = 0; b < n; ++b) {
                if (a != b && first[a] == first[b]) joined[a] |= 1u << b;
            }
        }
        return colourable(joined, colours);
    };
    auto extend = [&](auto&& self, std::size_t v, std::size_t used) -> bool {
        if (v == n) return leaf();
        for (std::size_t c = 0; c < std::min(colours, used + 1); ++c) {
            first[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
        }
        return false;
    };
    return extend(extend, 0, 0);
}

std::size_t orthogonal_chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (std::size_t colours = 1;; ++colours) {
        if (orthogonal_colouring_exists(g, colours)) return colours;
    }
}

bool independent_covering_exists_naive(const Graph& g, const Partition& p, std::uint64_t limit) {
    const auto n = g.order();
    if (n == 0) return true;
    const auto k = p.uniform_class_size();
    if (!k) throw InvalidInput("classes differ in size");
    checked_power(*k, n, limit);
    std::vector<std::size_t> slot(n, 0);
    do {
        bool ok = true;
        for (const auto& e : g.edges()) {
            if (slot[e.u] == slot[e.v]) {
                ok = false;
                break;
            }
        }
        for (std::size_t c = 0; c < p.class_count() && ok; ++c) {
            std::vector<char> taken(*k, 0);
            for (Vertex w : p[c]) {
                if (taken[slot[w]]) {
                    ok = false;
                    break;
                }
                taken[slot[w]] = 1;
            }
        }
        if (ok) return true;
    } while (advance(slot, *k));
    return false;
}

}  // namespace orthocover::oracle
