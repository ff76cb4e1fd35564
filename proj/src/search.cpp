#include "orthocover/search.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace orthocover {

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ProvedNone: return "proved-none";
        case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

struct OutOfBudget {};

// Kuhn's augmenting paths: can every left vertex be matched into `right_count` slots?
class BipartiteMatcher {
public:
    BipartiteMatcher(const std::vector<std::vector<int>>& adjacency, std::size_t right_count)
        : adjacency_(adjacency), match_right_(right_count, -1), seen_(right_count, 0) {}

    bool perfect() {
        for (std::size_t left = 0; left < adjacency_.size(); ++left) {
            ++stamp_;
            if (!augment(static_cast<int>(left))) {
                return false;
            }
        }
        return true;
    }

private:
    bool augment(int left) {
        for (int right : adjacency_[left]) {
            if (seen_[right] == stamp_) {
                continue;
            }
            seen_[right] = stamp_;
            if (match_right_[right] < 0 || augment(match_right_[right])) {
                match_right_[right] = left;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& adjacency_;
    std::vector<int> match_right_;
    std::vector<unsigned> seen_;
    unsigned stamp_ = 0;
};

class ColouringSearch {
public:
    ColouringSearch(const Graph& g, std::size_t num_colours, SearchBudget& budget)
        : g_(g),
          n_(g.order()),
          colours_(num_colours),
          budget_(budget),
          pair_of_(n_, -1),
          used_(colours_ * colours_, 0),
          blocked_first_(n_ * colours_, 0),
          blocked_second_(n_ * colours_, 0) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::sort(order_.begin() + 1, order_.end(), [&](Vertex a, Vertex b) {
            if (g_.degree(a) != g_.degree(b)) {
                return g_.degree(a) > g_.degree(b);
            }
            return a < b;
        });
    }

    bool run() { return descend(0); }

    OrthogonalColouring witness() const {
        std::vector<ColourPair> pairs(n_);
        for (Vertex v = 0; v < n_; ++v) {
            pairs[v] = {static_cast<Colour>(pair_of_[v] / colours_), static_cast<Colour>(pair_of_[v] % colours_)};
        }
        return OrthogonalColouring(colours_, std::move(pairs));
    }

private:
    bool feasible(Vertex v, std::size_t a, std::size_t b) const {
        return !used_[a * colours_ + b] && blocked_first_[v * colours_ + a] == 0 &&
               blocked_second_[v * colours_ + b] == 0;
    }

    // Relaxation: unassigned vertices need pairwise distinct feasible pairs.
    bool distinct_pairs_remain(std::size_t pos) const {
        std::vector<std::vector<int>> options;
        options.reserve(n_ - pos);
        for (std::size_t i = pos; i < n_; ++i) {
            const Vertex v = order_[i];
            auto& row = options.emplace_back();
            for (std::size_t a = 0; a < colours_; ++a) {
                if (blocked_first_[v * colours_ + a]) continue;
                for (std::size_t b = 0; b < colours_; ++b) {
                    if (feasible(v, a, b)) {
                        row.push_back(static_cast<int>(a * colours_ + b));
                    }
                }
            }
            if (row.empty()) {
                return false;
            }
        }
        return BipartiteMatcher(options, colours_ * colours_).perfect();
    }

    void place(Vertex v, std::size_t a, std::size_t b, int delta) {
        used_[a * colours_ + b] = delta > 0;
        pair_of_[v] = delta > 0 ? static_cast<int>(a * colours_ + b) : -1;
        for (Vertex w : g_.neighbours(v)) {
            blocked_first_[w * colours_ + a] += delta;
            blocked_second_[w * colours_ + b] += delta;
        }
    }

    bool descend(std::size_t pos) {
        if (pos == n_) {
            return true;
        }
        if (!distinct_pairs_remain(pos)) {
            return false;
        }
        const Vertex v = order_[pos];
        // Colours in each coordinate are introduced in order of first use along the search order.
        const auto first_limit = std::min(colours_, static_cast<std::size_t>(max_first_ + 2));
        const auto second_limit = std::min(colours_, static_cast<std::size_t>(max_second_ + 2));
        for (std::size_t a = 0; a < first_limit; ++a) {
            for (std::size_t b = 0; b < second_limit; ++b) {
                if (!feasible(v, a, b)) {
                    continue;
                }
                if (!budget_.charge()) {
                    throw OutOfBudget{};
                }
                const int saved_first = max_first_;
                const int saved_second = max_second_;
                max_first_ = std::max(max_first_, static_cast<int>(a));
                max_second_ = std::max(max_second_, static_cast<int>(b));
                place(v, a, b, +1);
                if (descend(pos + 1)) {
                    return true;
                }
                place(v, a, b, -1);
                max_first_ = saved_first;
                max_second_ = saved_second;
            }
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t colours_;
    SearchBudget& budget_;
    std::vector<Vertex> order_;
    std::vector<int> pair_of_;
    std::vector<char> used_;
    std::vector<int> blocked_first_;
    std::vector<int> blocked_second_;
    int max_first_ = -1;
    int max_second_ = -1;
};

class CoveringSearch {
public:
    CoveringSearch(const Graph& g, const Partition& p, std::size_t k, SearchBudget& budget)
        : g_(g), p_(p), k_(k), budget_(budget), slot_(g.order(), -1) {}

    bool run() {
        // The first class fixes the transversal labels.
        const auto& first = p_[0];
        for (std::size_t j = 0; j < k_; ++j) {
            if (!budget_.charge()) {
                throw OutOfBudget{};
            }
            slot_[first[j]] = static_cast<int>(j);
        }
        class_used_ = 0;
        return descend(1, 0);
    }

    Covering witness() const {
        std::vector<std::vector<Vertex>> transversals(k_);
        for (Vertex v = 0; v < g_.order(); ++v) {
            transversals[slot_[v]].push_back(v);
        }
        return Covering(g_.order(), std::move(transversals));
    }

private:
    bool descend(std::size_t cls, std::size_t pos) {
        if (pos == k_) {
            ++cls;
            pos = 0;
            class_used_ = 0;
        }
        if (cls == p_.class_count()) {
            return true;
        }
        const Vertex v = p_[cls][pos];
        std::uint64_t blocked = class_used_;
        for (Vertex w : g_.neighbours(v)) {
            if (slot_[w] >= 0) {
                blocked |= std::uint64_t{1} << slot_[w];
            }
        }
        for (std::size_t t = 0; t < k_; ++t) {
            if (blocked & (std::uint64_t{1} << t)) {
                continue;
            }
            if (!budget_.charge()) {
                throw OutOfBudget{};
            }
            const auto saved = class_used_;
            slot_[v] = static_cast<int>(t);
            class_used_ |= std::uint64_t{1} << t;
            if (descend(cls, pos + 1)) {
                return true;
            }
            slot_[v] = -1;
            class_used_ = saved;
        }
        return false;
    }

    const Graph& g_;
    const Partition& p_;
    std::size_t k_;
    SearchBudget& budget_;
    std::vector<int> slot_;
    std::uint64_t class_used_ = 0;
};

}  // namespace

SearchOutcome<OrthogonalColouring> find_orthogonal_colouring(const Graph& g, std::size_t num_colours,
                                                             SearchBudget& budget) {
    using Outcome = SearchOutcome<OrthogonalColouring>;
    const auto start = budget.used();
    if (num_colours == 0) {
        if (g.order() == 0) {
            return Outcome::make_found(OrthogonalColouring(0, {}), 0);
        }
        throw InvalidInput("colour count must be positive");
    }
    if (num_colours > 64) {
        throw InvalidInput("exact search supports at most 64 colours, got " + std::to_string(num_colours));
    }
    if (g.order() > num_colours * num_colours) {
        return Outcome::make_none(0);
    }
    ColouringSearch search(g, num_colours, budget);
    try {
        if (search.run()) {
            return Outcome::make_found(search.witness(), budget.used() - start);
        }
        return Outcome::make_none(budget.used() - start);
    } catch (const OutOfBudget&) {
        return Outcome::make_inconclusive(budget.used() - start);
    }
}

SearchOutcome<OchiResult> ochi(const Graph& g, SearchBudget& budget) {
    using Outcome = SearchOutcome<OchiResult>;
    const auto start = budget.used();
    if (g.order() == 0) {
        return Outcome::make_found({0, OrthogonalColouring(0, {})}, 0);
    }
    for (std::size_t colours = ceil_sqrt(g.order());; ++colours) {
        auto attempt = find_orthogonal_colouring(g, colours, budget);
        if (attempt.status == SearchStatus::Found) {
            return Outcome::make_found({colours, std::move(*attempt.witness)}, budget.used() - start);
        }
        if (attempt.status == SearchStatus::Inconclusive) {
            return Outcome::make_inconclusive(budget.used() - start);
        }
    }
}

SearchOutcome<Covering> find_independent_covering(const Graph& g, const Partition& p, SearchBudget& budget) {
    using Outcome = SearchOutcome<Covering>;
    if (p.order() != g.order()) {
        throw InvalidInput("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                           std::to_string(g.order()));
    }
    const auto k = p.uniform_class_size();
    if (!k) {
        throw InvalidInput("independent covering search needs classes of equal size");
    }
    if (*k > 64) {
        throw InvalidInput("independent covering search supports class size at most 64");
    }
    for (std::size_t i = 0; i < p.class_count(); ++i) {
        if (!is_independent_set(g, p[i])) {
            throw InvalidInput("class " + std::to_string(i) + " is not an independent set");
        }
    }
    if (g.order() == 0) {
        return Outcome::make_found(Covering(0, {}), 0);
    }
    const auto start = budget.used();
    CoveringSearch search(g, p, *k, budget);
    try {
        if (search.run()) {
            return Outcome::make_found(search.witness(), budget.used() - start);
        }
        return Outcome::make_none(budget.used() - start);
    } catch (const OutOfBudget&) {
        return Outcome::make_inconclusive(budget.used() - start);
    }
}

bool perfect_orthogonal_check(const Graph& g, SearchBudget& budget) {
    const auto side = ceil_sqrt(g.order());
    if (side * side != g.order()) {
        throw InvalidInput("perfect orthogonal colouring needs a square number of vertices, got " +
                           std::to_string(g.order()));
    }
    auto outcome = find_orthogonal_colouring(g, side, budget);
    if (outcome.status == SearchStatus::Inconclusive) {
        throw BudgetExhausted("perfect orthogonal check ran out of budget after " +
                              std::to_string(outcome.nodes_used) + " nodes");
    }
    return outcome.found();
}

std::optional<std::size_t> TransversalPropagation::assigned(Vertex v) const {
    const auto mask = domains.at(v);
    if (std::popcount(mask) != 1) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(std::countr_zero(mask));
}

TransversalPropagation propagate_transversals(const Graph& g, const Partition& p,
                                              const std::vector<std::optional<std::size_t>>& fixed,
                                              const std::vector<std::string>& names) {
    const auto k = p.uniform_class_size();
    if (!k || *k == 0 || *k > 64) {
        throw InvalidInput("propagation needs classes of one size between 1 and 64");
    }
    if (fixed.size() != g.order() || p.order() != g.order()) {
        throw InvalidInput("fixed assignment and partition must cover every vertex");
    }
    auto name = [&](Vertex v) { return v < names.size() ? names[v] : std::to_string(v); };
    auto class_name = [&](std::size_t i) {
        std::string out = "{";
        for (Vertex v : p[i]) {
            out += (out.size() > 1 ? "," : "") + name(v);
        }
        return out + "}";
    };

    const std::uint64_t all = *k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << *k) - 1;
    TransversalPropagation out;
    out.domains.assign(g.order(), all);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (fixed[v]) {
            if (*fixed[v] >= *k) {
                throw InvalidInput("transversal index out of range for vertex " + name(v));
            }
            out.domains[v] = std::uint64_t{1} << *fixed[v];
        }
    }

    // Deductions are applied first-in first-out, so the trace follows the order they were made.
    std::deque<Vertex> queue;
    std::vector<char> queued(g.order(), 0);
    auto settle = [&](Vertex w) {
        if (!queued[w]) {
            queued[w] = 1;
            queue.push_back(w);
        }
    };
    for (Vertex v = 0; v < g.order(); ++v) {
        if (fixed[v]) settle(v);
    }
    while (!out.contradiction) {
        while (!queue.empty() && !out.contradiction) {
            const Vertex v = queue.front();
            queue.pop_front();
            const auto bit = out.domains[v];
            // An assigned vertex excludes its transversal from classmates and neighbours.
            auto exclude = [&](Vertex w) {
                if (w == v || !(out.domains[w] & bit) || out.contradiction) {
                    return;
                }
                out.domains[w] &= ~bit;
                if (out.domains[w] == 0) {
                    out.contradiction = name(w) + " has no transversal left";
                } else if (std::popcount(out.domains[w]) == 1) {
                    out.trace.push_back(name(w) + " -> T" + std::to_string(std::countr_zero(out.domains[w])));
                    settle(w);
                }
            };
            for (Vertex w : p[p.class_of(v)]) exclude(w);
            for (Vertex w : g.neighbours(v)) exclude(w);
        }
        if (out.contradiction) break;
        // Every class must place exactly one vertex in each transversal.
        for (std::size_t c = 0; c < p.class_count() && !out.contradiction; ++c) {
            for (std::size_t t = 0; t < *k && !out.contradiction; ++t) {
                const auto bit = std::uint64_t{1} << t;
                std::vector<Vertex> homes;
                for (Vertex v : p[c]) {
                    if (out.domains[v] & bit) homes.push_back(v);
                }
                if (homes.empty()) {
                    out.contradiction = "no vertex of " + class_name(c) + " can go in T" + std::to_string(t);
                } else if (homes.size() == 1 && out.domains[homes[0]] != bit) {
                    out.domains[homes[0]] = bit;
                    out.trace.push_back(name(homes[0]) + " -> T" + std::to_string(t));
                    settle(homes[0]);
                }
            }
        }
        if (queue.empty()) break;
    }
    return out;
}

}  // namespace orthocover
