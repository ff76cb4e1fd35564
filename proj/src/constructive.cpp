#include "orthocover/constructive.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthocover {

namespace {

// Augmenting-path matching of vertices (rows) to colours; tries colours smallest first.
class SdrMatcher {
public:
    explicit SdrMatcher(const std::vector<std::vector<Colour>>& available)
        : available_(available), owner_(available.size(), -1), seen_(available.size(), 0) {}

    // Representative colour per row, or nullopt when no perfect matching exists.
    std::optional<std::vector<Colour>> solve() {
        for (std::size_t row = 0; row < available_.size(); ++row) {
            ++stamp_;
            if (!augment(static_cast<int>(row))) {
                return std::nullopt;
            }
        }
        std::vector<Colour> out(available_.size());
        for (std::size_t c = 0; c < owner_.size(); ++c) {
            if (owner_[c] >= 0) {
                out[owner_[c]] = static_cast<Colour>(c);
            }
        }
        return out;
    }

private:
    bool augment(int row) {
        for (Colour c : available_[row]) {
            if (seen_[c] == stamp_) continue;
            seen_[c] = stamp_;
            if (owner_[c] < 0 || augment(owner_[c])) {
                owner_[c] = row;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<Colour>>& available_;
    std::vector<int> owner_;
    std::vector<unsigned> seen_;
    unsigned stamp_ = 0;
};

}  // namespace

std::optional<std::string> nkk_violation(const Graph& g, const Partition& p) {
    if (p.order() != g.order()) {
        return "partition covers " + std::to_string(p.order()) + " vertices, graph has " + std::to_string(g.order());
    }
    if (!p.uniform_class_size()) {
        return "classes differ in size";
    }
    std::vector<std::size_t> hits(p.class_count());
    for (Vertex v = 0; v < g.order(); ++v) {
        std::fill(hits.begin(), hits.end(), 0);
        for (Vertex w : g.neighbours(v)) {
            ++hits[p.class_of(w)];
        }
        for (std::size_t c = 0; c < p.class_count(); ++c) {
            const std::size_t expected = c == p.class_of(v) ? 0 : 1;
            if (hits[c] != expected) {
                return "vertex " + std::to_string(v) + " has " + std::to_string(hits[c]) + " neighbours in class " +
                       std::to_string(c) + ", expected " + std::to_string(expected);
            }
        }
    }
    return std::nullopt;
}

HallCovering hall_covering(const Graph& g, const Partition& p) {
    if (auto why = nkk_violation(g, p)) {
        throw PreconditionFailed("not an [n,k,k]-partition: " + *why);
    }
    const auto parts = p.class_count();
    const auto k = parts == 0 ? 0 : *p.uniform_class_size();
    if (parts > (k + 1) / 2) {
        throw PreconditionFailed("Hall covering needs n <= ceil(k/2); got n = " + std::to_string(parts) +
                                 ", k = " + std::to_string(k));
    }

    HallCovering out;
    std::vector<ColourPair> pairs(g.order());
    std::vector<char> coloured(g.order(), 0);
    for (std::size_t j = 0; j < k && parts > 0; ++j) {
        const Vertex v = p[0][j];
        pairs[v] = {0, static_cast<Colour>(j)};
        coloured[v] = 1;
    }
    if (parts > 0) {
        out.min_available.push_back(k);
    }

    std::vector<char> blocked(k);
    for (std::size_t m = 1; m < parts; ++m) {
        std::vector<std::vector<Colour>> available(k);
        std::size_t smallest = k;
        for (std::size_t j = 0; j < k; ++j) {
            const Vertex v = p[m][j];
            std::fill(blocked.begin(), blocked.end(), 0);
            for (Vertex w : g.neighbours(v)) {
                if (coloured[w]) blocked[pairs[w].second] = 1;
            }
            for (Colour c = 0; c < k; ++c) {
                if (!blocked[c]) available[j].push_back(c);
            }
            smallest = std::min(smallest, available[j].size());
            if (available[j].size() < k - m) {
                throw std::logic_error("vertex " + std::to_string(v) + " has only " +
                                       std::to_string(available[j].size()) + " available colours in class " +
                                       std::to_string(m));
            }
        }
        out.min_available.push_back(smallest);
        auto sdr = SdrMatcher(available).solve();
        if (!sdr) {
            throw std::logic_error("matching not perfect for class " + std::to_string(m));
        }
        for (std::size_t j = 0; j < k; ++j) {
            const Vertex v = p[m][j];
            pairs[v] = {static_cast<Colour>(m), (*sdr)[j]};
            coloured[v] = 1;
        }
    }

    out.colouring = OrthogonalColouring(std::max(parts, k), std::move(pairs));
    std::vector<std::vector<Vertex>> transversals(k);
    for (Vertex v = 0; v < g.order(); ++v) {
        transversals[out.colouring[v].second].push_back(v);
    }
    out.covering = Covering(g.order(), std::move(transversals));
    return out;
}

OrthogonalColouring double_star_colouring(std::size_t m) {
    if (m < 2 || m % 2 != 0) {
        throw InvalidInput("double star D_m needs an even m >= 2, got " + std::to_string(m));
    }
    const auto n = ceil_sqrt(m);
    if (m >= n * n - 1) {
        throw PreconditionFailed("D_" + std::to_string(m) + " has no orthogonal colouring with " +
                                 std::to_string(n) + " colours (m >= N^2-1); it requires N+1 = " +
                                 std::to_string(n + 1) + " colours");
    }

    // 1-based labels as in the construction; shifted to 0-based on output.
    std::vector<ColourPair> x_leaves;
    std::vector<ColourPair> y_leaves;
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        x_leaves.push_back({2, static_cast<Colour>(i + 2)});
        y_leaves.push_back({1, static_cast<Colour>(i + 2)});
    }
    for (std::size_t j = n - 1; j + 4 <= 2 * n; ++j) {
        x_leaves.push_back({static_cast<Colour>(j - n + 4), 2});
        y_leaves.push_back({static_cast<Colour>(j - n + 4), 1});
    }
    bool to_x = true;
    for (std::size_t r = 3; r <= n; ++r) {
        for (std::size_t s = 3; s <= n; ++s) {
            if (n % 2 == 1 && r == n && s == n) {
                continue;
            }
            (to_x ? x_leaves : y_leaves).push_back({static_cast<Colour>(r), static_cast<Colour>(s)});
            to_x = !to_x;
        }
    }

    const auto per_side = m / 2 - 1;
    if (x_leaves.size() < per_side || y_leaves.size() < per_side) {
        throw std::logic_error("double star pattern too short for m = " + std::to_string(m));
    }
    std::vector<ColourPair> pairs{{1, 1}, {2, 2}};
    pairs.insert(pairs.end(), x_leaves.begin(), x_leaves.begin() + static_cast<std::ptrdiff_t>(per_side));
    pairs.insert(pairs.end(), y_leaves.begin(), y_leaves.begin() + static_cast<std::ptrdiff_t>(per_side));
    for (auto& p : pairs) {
        --p.first;
        --p.second;
    }
    return OrthogonalColouring(n, std::move(pairs));
}

bool degenerate_swap_applicable(std::size_t n, std::size_t max_degree, std::size_t degeneracy) {
    const auto lhs = 2 * max_degree + 2 * degeneracy + 1;
    return lhs * lhs < n;
}

namespace {

class SwapRun {
public:
    SwapRun(const Graph& g, const GraphStats& st, const SwapOptions& options)
        : g_(g),
          n_(g.order()),
          side_(ceil_sqrt(g.order())),
          options_(options),
          ordering_(st.degenerate_ordering),
          position_(n_),
          pair_(n_),
          owner_(side_ * side_, -1),
          mark_(n_, 0) {
        for (std::size_t i = 0; i < n_; ++i) {
            position_[ordering_[i]] = i;
        }
        for (Vertex v = 0; v < n_; ++v) {
            pair_[v] = {static_cast<Colour>(v / side_), static_cast<Colour>(v % side_)};
            owner_[v] = static_cast<int>(v);
        }
    }

    bool run(std::vector<SwapStep>& steps) {
        bool valid = true;
        for (std::size_t t = 0; t < n_; ++t) {
            const Vertex v = ordering_[t];
            earlier_.clear();
            for (Vertex w : g_.neighbours(v)) {
                if (position_[w] < t) earlier_.push_back(w);
            }
            if (clashes(v)) {
                steps.push_back(repair(t, v));
                if (!steps.back().swapped_with) {
                    valid = false;
                }
            }
            if (options_.check_invariants) {
                check_prefix(t);
            }
        }
        return valid;
    }

    OrthogonalColouring colouring() const { return OrthogonalColouring(side_, pair_); }

private:
    bool clashes(Vertex v) const {
        return std::any_of(earlier_.begin(), earlier_.end(), [&](Vertex w) {
            return pair_[w].first == pair_[v].first || pair_[w].second == pair_[v].second;
        });
    }

    // Marks every vertex whose pair lies in row `r` or column `c` of the pair grid.
    template <class F>
    void for_row_and_column(Colour r, Colour c, F&& visit) const {
        for (std::size_t s = 0; s < side_; ++s) {
            if (int w = owner_[r * side_ + s]; w >= 0) visit(static_cast<Vertex>(w));
            if (s != r) {
                if (int w = owner_[s * side_ + c]; w >= 0) visit(static_cast<Vertex>(w));
            }
        }
    }

    SwapStep repair(std::size_t t, Vertex v) {
        SwapStep step;
        step.position = t;
        step.vertex = v;
        step.earlier_neighbours = earlier_.size();

        ++stamp_;
        const unsigned in_w = stamp_;
        for (Vertex u : earlier_) {
            for_row_and_column(pair_[u].first, pair_[u].second, [&](Vertex w) {
                if (mark_[w] != in_w) {
                    mark_[w] = in_w;
                    ++step.conflict_set;
                }
            });
        }
        step.vertex_in_conflict_set = mark_[v] == in_w;

        std::vector<Vertex> same;
        for_row_and_column(pair_[v].first, pair_[v].second, [&](Vertex w) {
            if (w != v) same.push_back(w);
        });
        step.same_colour_set = same.size();
        std::vector<char> blocked(n_, 0);
        for (Vertex y : same) {
            for (Vertex w : g_.neighbours(y)) {
                if (!blocked[w]) {
                    blocked[w] = 1;
                    ++step.blocked;
                }
            }
        }

        std::optional<Vertex> pick;
        for (Vertex x = 0; x < n_; ++x) {
            if (mark_[x] != in_w && !blocked[x]) {
                ++step.candidates;
                if (!pick) pick = x;
            }
        }

        const auto bound_w = 2 * earlier_.size() * side_;
        if (step.conflict_set > bound_w) {
            throw std::logic_error("|W| = " + std::to_string(step.conflict_set) + " exceeds 2|N_t|N = " +
                                   std::to_string(bound_w));
        }
        if (step.same_colour_set > 2 * (side_ - 1)) {
            throw std::logic_error("|Y_t| exceeds 2(N-1)");
        }
        if (!step.vertex_in_conflict_set) {
            throw std::logic_error("clashing vertex " + std::to_string(v) + " is not in W");
        }
        if (!pick) {
            if (!options_.force) {
                throw std::logic_error("no swap candidate for vertex " + std::to_string(v) + " at step " +
                                       std::to_string(t) + " although the degree bound holds");
            }
            return step;
        }
        swap_pairs(v, *pick);
        step.swapped_with = pick;
        return step;
    }

    void swap_pairs(Vertex a, Vertex b) {
        std::swap(pair_[a], pair_[b]);
        owner_[pair_[a].first * side_ + pair_[a].second] = static_cast<int>(a);
        owner_[pair_[b].first * side_ + pair_[b].second] = static_cast<int>(b);
    }

    void check_prefix(std::size_t t) const {
        for (const auto& e : g_.edges()) {
            if (position_[e.u] > t || position_[e.v] > t) continue;
            if (pair_[e.u].first == pair_[e.v].first || pair_[e.u].second == pair_[e.v].second) {
                if (!options_.force) {
                    throw std::logic_error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                           "} clashes after step " + std::to_string(t));
                }
            }
        }
        std::vector<char> seen(side_ * side_, 0);
        for (const auto& p : pair_) {
            auto& slot = seen[p.first * side_ + p.second];
            if (slot) throw std::logic_error("pair repeated after step " + std::to_string(t));
            slot = 1;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (owner_[pair_[v].first * side_ + pair_[v].second] != static_cast<int>(v)) {
                throw std::logic_error("pair index out of sync after step " + std::to_string(t));
            }
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t side_;
    SwapOptions options_;
    std::vector<Vertex> ordering_;
    std::vector<std::size_t> position_;
    std::vector<ColourPair> pair_;
    std::vector<int> owner_;
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
    std::vector<Vertex> earlier_;
};

}  // namespace

SwapResult degenerate_swap_colouring(const Graph& g, const SwapOptions& options) {
    const auto st = stats(g);
    if (!options.force && !degenerate_swap_applicable(g.order(), st.max_degree, st.degeneracy)) {
        throw PreconditionFailed("degree bound fails: (2*" + std::to_string(st.max_degree) + " + 2*" +
                                 std::to_string(st.degeneracy) + " + 1)^2 >= n = " + std::to_string(g.order()));
    }
    SwapResult out;
    out.degeneracy = st.degeneracy;
    out.max_degree = st.max_degree;
    out.ordering = st.degenerate_ordering;
    SwapRun run(g, st, options);
    out.valid = run.run(out.steps);
    out.colouring = run.colouring();
    if (out.valid && !is_valid_orthogonal_colouring(g, out.colouring)) {
        out.valid = false;
        if (!options.force) {
            throw std::logic_error("degenerate swap produced an invalid colouring");
        }
    }
    return out;
}

}  // namespace orthocover
