#include "corefactor/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "corefactor/graph_ops.hpp"

namespace corefactor {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Augmenting-path matcher with blossom contraction. Blossom membership lives
// in a union-find keyed by the current search epoch, so per-search state needs
// no O(n) reset: a stamp mismatch means "not touched this search". Structure
// follows the classical contract: even (outer) vertices are scanned from a
// FIFO queue, odd (inner) vertices carry their discovery parent in p, and a
// contraction re-roots every class on the blossom cycle at the cycle's base.
class BlossomMatcher {
  public:
    explicit BlossomMatcher(const MultiGraph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(n_, kNoVertex),
          p_(n_, kNoVertex),
          dsu_(n_, 0),
          used_stamp_(n_, 0),
          p_stamp_(n_, 0),
          dsu_stamp_(n_, 0),
          lca_stamp_(n_, 0) {}

    MatchingResult run() {
        greedy_init();
        for (std::size_t v = 0; v < n_; ++v) {
            if (match_[v] != kNoVertex) continue;
            if (!find_path(static_cast<VertexId>(v))) {
                return violator_result();
            }
        }
        return perfect_result();
    }

  private:
    bool used(VertexId v) const { return used_stamp_[v] == epoch_; }
    bool has_p(VertexId v) const { return p_stamp_[v] == epoch_; }
    void set_used(VertexId v) {
        used_stamp_[v] = epoch_;
        queue_.push_back(v);
    }
    void set_p(VertexId v, VertexId parent) {
        p_[v] = parent;
        p_stamp_[v] = epoch_;
    }

    // Union-find over blossom bases; un-stamped entries are their own root.
    VertexId find(VertexId v) {
        VertexId root = v;
        while (dsu_stamp_[root] == epoch_) root = dsu_[root];
        while (dsu_stamp_[v] == epoch_) {  // path compression
            const VertexId next = dsu_[v];
            dsu_[v] = root;
            v = next;
        }
        return root;
    }
    void unite_into(VertexId root, VertexId base) {
        if (root == base) return;
        dsu_[root] = base;
        dsu_stamp_[root] = epoch_;
    }

    void greedy_init() {
        for (std::size_t v = 0; v < n_; ++v) {
            if (match_[v] != kNoVertex) continue;
            for (auto [to, e] : g_.incidences(static_cast<VertexId>(v))) {
                (void)e;
                if (to != v && match_[to] == kNoVertex) {
                    match_[v] = to;
                    match_[to] = static_cast<VertexId>(v);
                    break;
                }
            }
        }
    }

    // Base of the first common blossom on the tree paths from a and b to the
    // root, walking even classes only (base -> p of its matched inner vertex).
    VertexId lca(VertexId a, VertexId b) {
        ++lca_epoch_;
        VertexId v = find(a);
        while (true) {
            lca_stamp_[v] = lca_epoch_;
            if (match_[v] == kNoVertex) break;  // root class
            v = find(p_[match_[v]]);
        }
        VertexId w = find(b);
        while (lca_stamp_[w] != lca_epoch_) w = find(p_[match_[w]]);
        return w;
    }

    // Folds the tree path from v down to the blossom base `b` into b's class:
    // every class on the path is re-rooted at b and every inner vertex on it
    // turns even (enqueued). `child` is the cross-edge partner recorded in p
    // so a later augmentation can walk through the blossom. Class structure
    // must stay frozen while the walk runs: the walk can re-enter a class it
    // has already scheduled for folding (a previously contracted blossom whose
    // ring it traverses), and uniting mid-walk would make the find(v) == b
    // guard fire before the remaining arc is rewired and enqueued. Unions are
    // therefore deferred to after the walk.
    void mark_path(VertexId v, VertexId b, VertexId child) {
        fold_reps_.clear();
        while (find(v) != b) {
            const VertexId inner = match_[v];
            fold_reps_.push_back(find(v));
            fold_reps_.push_back(find(inner));
            if (!used(inner)) set_used(inner);
            set_p(v, child);
            child = inner;
            v = p_[inner];
        }
        for (const VertexId rep : fold_reps_) unite_into(find(rep), b);
    }

    void augment(VertexId to) {
        while (to != kNoVertex) {
            const VertexId pv = p_[to];
            const VertexId next = match_[pv];
            match_[to] = pv;
            match_[pv] = to;
            to = next;
        }
    }

    // One alternating-forest search from an exposed root. True iff the
    // matching was augmented; false leaves the final forest in place for the
    // violator extraction.
    bool find_path(VertexId root) {
        ++epoch_;
        queue_.clear();
        set_used(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const VertexId v = queue_[head];
            for (auto [to, e] : g_.incidences(v)) {
                (void)e;
                if (find(v) == find(to) || match_[v] == to) continue;
                const bool to_is_even =
                    to == root || (match_[to] != kNoVertex && has_p(match_[to]));
                if (to_is_even) {
                    const VertexId base = lca(v, to);
                    mark_path(v, base, to);
                    mark_path(to, base, v);
                } else if (!has_p(to)) {
                    set_p(to, v);
                    if (match_[to] == kNoVertex) {
                        augment(to);
                        return true;
                    }
                    set_used(match_[to]);
                }
            }
        }
        return false;
    }

    // At quiescence of a failed search the inner (odd) vertices X of the
    // forest satisfy o(g - X) >= |X| + 1: every even class is one odd-sized
    // component of g - X, and there are |X| + 1 of them.
    MatchingResult violator_result() {
        MatchingResult result;
        result.perfect = false;
        for (std::size_t v = 0; v < n_; ++v) {
            if (p_stamp_[v] == epoch_ && used_stamp_[v] != epoch_) {
                result.violator.push_back(static_cast<VertexId>(v));
            }
        }
        const VertexSet x(result.violator);
        if (odd_components(g_, x) <= x.size()) {
            throw std::logic_error(
                "perfect_matching_certified: extracted set is not a Tutte violator");
        }
        return result;
    }

    MatchingResult perfect_result() {
        MatchingResult result;
        result.perfect = true;
        result.edges.reserve(n_ / 2);
        for (std::size_t v = 0; v < n_; ++v) {
            const VertexId w = match_[v];
            if (w == kNoVertex || match_[w] != v || w == v) {
                throw std::logic_error("perfect_matching_certified: matching array corrupt");
            }
            if (w < v) continue;
            EdgeId best = kNoEdge;
            for (auto [to, e] : g_.incidences(static_cast<VertexId>(v))) {
                if (to == w && e < best) best = e;
            }
            if (best == kNoEdge) {
                throw std::logic_error("perfect_matching_certified: matched pair not adjacent");
            }
            result.edges.push_back(best);
        }
        std::sort(result.edges.begin(), result.edges.end());
        return result;
    }

    const MultiGraph& g_;
    std::size_t n_;
    std::vector<VertexId> match_, p_, dsu_;
    std::vector<std::uint32_t> used_stamp_, p_stamp_, dsu_stamp_, lca_stamp_;
    std::uint32_t epoch_ = 0;
    std::uint32_t lca_epoch_ = 0;
    std::vector<VertexId> queue_;
    std::vector<VertexId> fold_reps_;
};

}  // namespace

MatchingResult perfect_matching_certified(const MultiGraph& g) {
    return BlossomMatcher(g).run();
}

std::optional<std::vector<EdgeId>> perfect_matching(const MultiGraph& g) {
    MatchingResult r = perfect_matching_certified(g);
    if (!r.perfect) return std::nullopt;
    return std::move(r.edges);
}

}  // namespace corefactor
