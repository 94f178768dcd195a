#pragma once

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "connectivity.hpp"
#include "embedding.hpp"
#include "graph.hpp"

namespace surfminor {

inline constexpr int kInfinity = INT_MAX / 4;

inline std::string genus_str(int g) { return g >= kInfinity ? "inf" : std::to_string(g); }

// A closed surface by Euler genus: sphere 0:orientable, torus 2:orientable,
// projective plane 1:nonorientable.
struct Surface {
    int genus = 0;
    bool orientable = true;

    Surface() = default;
    Surface(int g, bool o) : genus(g), orientable(o) {
        if (g < 0) throw Error("surface genus must be nonnegative");
        if (o && g % 2 != 0) throw Error("orientable surfaces have even Euler genus, got " + std::to_string(g));
        if (!o && g == 0) throw Error("there is no nonorientable surface of Euler genus 0");
    }
    static Surface parse(const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw Error("surface must look like <genus>:<orientable|nonorientable>, got '" + s + "'");
        std::string kind = s.substr(colon + 1);
        if (kind != "orientable" && kind != "nonorientable") throw Error("unknown surface kind '" + kind + "'");
        return Surface(std::stoi(s.substr(0, colon)), kind == "orientable");
    }
    std::string str() const { return std::to_string(genus) + (orientable ? ":orientable" : ":nonorientable"); }
    bool operator==(const Surface&) const = default;
};

struct SearchBudget {
    std::uint64_t max_nodes = 2'000'000'000ULL;
    double max_log10_space = 60.0;
    int threads = 1;

    // SURFACE_MINORS_BUDGET overrides the node budget when set.
    static SearchBudget from_env() {
        SearchBudget b;
        if (const char* s = std::getenv("SURFACE_MINORS_BUDGET")) b.max_nodes = std::strtoull(s, nullptr, 10);
        return b;
    }
};

// Minimum over one orientability class. When exact is false, the minimum lies
// in [lower, upper] and value is meaningless.
struct GenusBound {
    bool exact = true;
    int value = kInfinity;
    int lower = 0;
    int upper = kInfinity;
    std::optional<Embedding> witness;
    std::uint64_t nodes = 0;
};

struct GenusProfile {
    GenusBound orientable;
    GenusBound nonorientable;

    bool exact() const { return orientable.exact && nonorientable.exact; }
    int orientable_min() const { return orientable.value; }
    int nonorientable_min() const { return nonorientable.value; }
    int euler_genus() const { return std::min(orientable.value, nonorientable.value); }
};

namespace detail {

// Branch and bound over normalised embeddings of a connected graph with at
// least one edge. Tree edges of a BFS tree carry +1. The first vertex's
// rotation is fixed per top-level branch (up to reflection); everything else is
// decided lazily while tracing faces. The bound counts every unused dart side
// as part of a face of length at least 3.
class RotationSearch {
public:
    RotationSearch(const Graph& g, bool nonorientable) : g_(g), nonorientable_(nonorientable) {
        n_ = g.order();
        m_ = g.size();
        tail_.resize(static_cast<std::size_t>(2 * m_));
        for (Dart d = 0; d < 2 * m_; ++d) tail_[static_cast<std::size_t>(d)] = g.index_of(dart_tail(g, d));
        order_vertices();
        build_tree();
        darts_at_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) darts_at_[static_cast<std::size_t>(v)] = out_darts(v);
        triangle_faces_only_ = m_ >= 2;
    }

    double space_log10() const {
        double s = 0;
        for (int v = 0; v < n_; ++v) s += std::lgamma(std::max(1, deg(v))) / std::log(10.0);
        s -= std::log10(2.0);
        if (nonorientable_) s += static_cast<double>(cotree_count_) * std::log10(2.0);
        return s;
    }

    // Genus that no embedding of this class can beat.
    int trivial_lower_bound() const {
        int lb = 2 - n_ + m_ - (m_ >= 2 ? (2 * m_) / 3 : 1);
        lb = std::max(lb, 0);
        if (nonorientable_) lb = std::max(lb, 1);
        else if (lb % 2) ++lb;
        return lb;
    }

    struct Result {
        bool complete = true;       // search space exhausted
        int best = kInfinity;       // best genus found (below the initial bound)
        std::vector<std::vector<Dart>> rotation;
        std::vector<int> signature;
        std::uint64_t nodes = 0;
    };

    // Finds the smallest genus strictly below bound (ties resolved to the first
    // embedding in search order).
    // Any embedding of genus <= floor_lb ends the search.
    Result run(int bound, int floor_lb, std::uint64_t max_nodes, int threads) {
        Result res;
        if (nonorientable_ && cotree_count_ == 0) return res;
        if (trivial_lower_bound() >= bound) return res;

        // top-level branches: rotations of the first vertex
        std::vector<std::vector<Dart>> roots;
        {
            std::vector<Dart> r = out_darts(order_[0]);
            std::sort(r.begin() + 1, r.end());
            do {
                if (r.size() < 3 || r[1] < r.back()) roots.push_back(r);
            } while (std::next_permutation(r.begin() + 1, r.end()));
        }
        const int nb = static_cast<int>(roots.size());
        std::vector<Worker::Outcome> outcomes(static_cast<std::size_t>(nb));
        std::atomic<int> shared_best{bound};
        std::atomic<int> stop_index{nb};  // branches after this one need not run
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> out_of_budget{false};
        std::atomic<int> next_branch{0};

        auto work = [&] {
            Worker w(*this);
            while (true) {
                int b = next_branch.fetch_add(1);
                if (b >= nb) break;
                if (b > stop_index.load() || out_of_budget.load()) continue;
                Worker::Outcome oc = w.run_branch(roots[static_cast<std::size_t>(b)], b, bound, floor_lb, shared_best,
                                                  stop_index, nodes, max_nodes, out_of_budget);
                outcomes[static_cast<std::size_t>(b)] = std::move(oc);
            }
        };
        threads = std::max(1, std::min(threads, nb));
        if (threads == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        res.nodes = nodes.load();
        res.complete = !out_of_budget.load();
        for (int b = 0; b < nb; ++b) {
            auto& oc = outcomes[static_cast<std::size_t>(b)];
            if (oc.best < res.best) {
                res.best = oc.best;
                res.rotation = std::move(oc.rotation);
                res.signature = std::move(oc.signature);
            }
        }
        return res;
    }

    const std::vector<int>& cotree_edges() const { return cotree_; }

private:
    int deg(int v) const { return static_cast<int>(g_.incident(v).size()); }

    std::vector<Dart> out_darts(int v) const {
        std::vector<Dart> r;
        Vertex vv = g_.vertices()[static_cast<std::size_t>(v)];
        for (int ei : g_.incident(v)) r.push_back(2 * ei + (g_.edges()[static_cast<std::size_t>(ei)].u == vv ? 0 : 1));
        return r;
    }

    void order_vertices() {
        std::vector<char> placed(static_cast<std::size_t>(n_), 0);
        std::vector<int> seen_nb(static_cast<std::size_t>(n_), 0);
        pos_.assign(static_cast<std::size_t>(n_), -1);
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            for (int v = 0; v < n_; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (step > 0 && seen_nb[static_cast<std::size_t>(v)] == 0) continue;
                if (best < 0 || std::make_pair(seen_nb[static_cast<std::size_t>(v)], deg(v)) >
                                    std::make_pair(seen_nb[static_cast<std::size_t>(best)], deg(best)))
                    best = v;
            }
            placed[static_cast<std::size_t>(best)] = 1;
            pos_[static_cast<std::size_t>(best)] = step;
            order_.push_back(best);
            Vertex bv = g_.vertices()[static_cast<std::size_t>(best)];
            for (int ei : g_.incident(best)) ++seen_nb[static_cast<std::size_t>(g_.index_of(g_.edges()[static_cast<std::size_t>(ei)].other(bv)))];
        }
    }

    void build_tree() {
        std::vector<char> in_tree(static_cast<std::size_t>(m_), 0), seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> q{order_[0]};
        seen[static_cast<std::size_t>(order_[0])] = 1;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int x = q[h];
            Vertex xv = g_.vertices()[static_cast<std::size_t>(x)];
            for (int ei : g_.incident(x)) {
                int y = g_.index_of(g_.edges()[static_cast<std::size_t>(ei)].other(xv));
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                in_tree[static_cast<std::size_t>(ei)] = 1;
                q.push_back(y);
            }
        }
        level_cotree_.assign(static_cast<std::size_t>(n_), {});
        for (int ei = 0; ei < m_; ++ei) {
            if (in_tree[static_cast<std::size_t>(ei)]) continue;
            cotree_.push_back(ei);
            const Edge& e = g_.edges()[static_cast<std::size_t>(ei)];
            int lvl = std::max(pos_[static_cast<std::size_t>(g_.index_of(e.u))], pos_[static_cast<std::size_t>(g_.index_of(e.v))]);
            level_cotree_[static_cast<std::size_t>(lvl)].push_back(ei);
        }
        cotree_count_ = static_cast<int>(cotree_.size());
    }

    // Faces are traced one at a time. Whenever the walk needs an unknown
    // rotation successor (or predecessor) or an unknown cotree signature, the
    // search branches on it. A successor may not close the partial rotation
    // at a vertex into a cycle before every dart there is placed.
    class Worker {
    public:
        struct Outcome {
            int best = kInfinity;
            std::vector<std::vector<Dart>> rotation;
            std::vector<int> signature;
        };

        explicit Worker(const RotationSearch& s) : s_(s) {}

        Outcome run_branch(const std::vector<Dart>& root, int branch, int bound, int floor_lb, std::atomic<int>& shared_best,
                           std::atomic<int>& stop_index, std::atomic<std::uint64_t>& nodes, std::uint64_t max_nodes,
                           std::atomic<bool>& out_of_budget) {
            const int nd = 2 * s_.m_;
            succ_.assign(static_cast<std::size_t>(nd), -1);
            pred_.assign(static_cast<std::size_t>(nd), -1);
            sign_.assign(static_cast<std::size_t>(s_.m_), 1);
            for (int ei : s_.cotree_) sign_[static_cast<std::size_t>(ei)] = s_.nonorientable_ ? 0 : 1;
            mark_.assign(static_cast<std::size_t>(2 * nd), 0);
            undo_.clear();
            faces_ = used_ = negatives_ = 0;
            in_face_ = false;
            local_best_ = bound;
            outcome_ = Outcome{};
            branch_ = branch;
            floor_lb_ = floor_lb;
            shared_best_ = &shared_best;
            stop_index_ = &stop_index;
            nodes_ = &nodes;
            max_nodes_ = max_nodes;
            out_of_budget_ = &out_of_budget;
            local_nodes_ = 0;
            abort_ = false;
            start_scan_ = 0;

            for (std::size_t k = 0; k < root.size(); ++k) link(root[k], root[(k + 1) % root.size()]);
            for (int v = 0; v < s_.n_; ++v)
                if (s_.deg(v) == 1) {
                    Dart d = s_.out_darts(v)[0];
                    if (succ_[static_cast<std::size_t>(d)] < 0) link(d, d);
                }
            extend();
            flush_nodes();
            return std::move(outcome_);
        }

    private:
        static std::size_t key(Dart d, int o) { return static_cast<std::size_t>(2 * d + (o > 0 ? 0 : 1)); }

        // undo records: kind 0 = mark, 1 = link (a -> b), 2 = sign
        struct Undo { int kind; int a; int b; };

        void link(Dart a, Dart b) {
            succ_[static_cast<std::size_t>(a)] = b;
            pred_[static_cast<std::size_t>(b)] = a;
            undo_.push_back({1, a, b});
        }
        void mark_state(Dart d, int o) {
            mark_[key(d, o)] = 1;
            undo_.push_back({0, static_cast<int>(key(d, o)), 0});
            const int sg = sign_[static_cast<std::size_t>(d >> 1)];
            if (s_.nonorientable_ && sg != 0) {
                int k = static_cast<int>(key(d ^ 1, -o * sg));
                mark_[static_cast<std::size_t>(k)] = 1;
                undo_.push_back({0, k, 0});
            }
        }
        void set_sign(int e, int s) {
            sign_[static_cast<std::size_t>(e)] = s;
            if (s < 0) ++negatives_;
            undo_.push_back({2, e, s});
        }
        void rollback(std::size_t top) {
            while (undo_.size() > top) {
                Undo u = undo_.back();
                undo_.pop_back();
                if (u.kind == 0) {
                    mark_[static_cast<std::size_t>(u.a)] = 0;
                } else if (u.kind == 1) {
                    succ_[static_cast<std::size_t>(u.a)] = -1;
                    pred_[static_cast<std::size_t>(u.b)] = -1;
                } else {
                    sign_[static_cast<std::size_t>(u.a)] = 0;
                    if (u.b < 0) --negatives_;
                }
            }
        }

        // May a -> b be added to the partial rotation at their common vertex?
        bool can_link(Dart a, Dart b, int degree) const {
            if (succ_[static_cast<std::size_t>(a)] >= 0 || pred_[static_cast<std::size_t>(b)] >= 0) return false;
            // walking forward from b must not reach a early
            int len = 1;
            Dart x = b;
            while (x != a) {
                Dart y = succ_[static_cast<std::size_t>(x)];
                if (y < 0) return true;
                x = y;
                ++len;
            }
            return len == degree;
        }

        int lower_bound() const {
            const int rest = 2 * s_.m_ - used_;
            int fmax;
            if (in_face_) {
                int need = std::max(cur_len_ + 1, s_.triangle_faces_only_ ? 3 : 2);
                fmax = faces_ + 1 + std::max(0, rest - need) / (s_.triangle_faces_only_ ? 3 : 2);
            } else {
                fmax = faces_ + rest / (s_.triangle_faces_only_ ? 3 : 2);
            }
            int lb = 2 - s_.n_ + s_.m_ - fmax;
            if (!s_.nonorientable_ && (lb & 1)) ++lb;
            return lb;
        }

        bool prune() const {
            int lb = lower_bound();
            return lb >= local_best_ || lb > shared_best_->load(std::memory_order_relaxed);
        }

        void flush_nodes() {
            if (local_nodes_ == 0) return;
            std::uint64_t total = nodes_->fetch_add(local_nodes_) + local_nodes_;
            local_nodes_ = 0;
            if (total > max_nodes_) out_of_budget_->store(true);
        }

        bool stopped() const {
            if (abort_) return true;
            if (out_of_budget_->load(std::memory_order_relaxed)) return true;
            return stop_index_->load(std::memory_order_relaxed) < branch_;
        }

        bool count_node() {
            if (++local_nodes_ >= 4096) flush_nodes();
            return !stopped();
        }

        void leaf() {
            const int genus = 2 - s_.n_ + s_.m_ - faces_;
            if (s_.nonorientable_ && negatives_ == 0) return;
            if (genus >= local_best_ || genus > shared_best_->load()) return;
            local_best_ = genus;
            outcome_.best = genus;
            outcome_.rotation.assign(static_cast<std::size_t>(s_.n_), {});
            for (int v = 0; v < s_.n_; ++v) {
                auto r = s_.out_darts(v);
                std::vector<Dart> cyc{r[0]};
                for (Dart d = succ_[static_cast<std::size_t>(r[0])]; d != r[0]; d = succ_[static_cast<std::size_t>(d)]) cyc.push_back(d);
                outcome_.rotation[static_cast<std::size_t>(v)] = cyc;
            }
            outcome_.signature = sign_;
            int cur = shared_best_->load();
            while (genus < cur && !shared_best_->compare_exchange_weak(cur, genus)) {}
            if (genus <= floor_lb_) {
                int si = stop_index_->load();
                while (branch_ < si && !stop_index_->compare_exchange_weak(si, branch_)) {}
                abort_ = true;
            }
        }

        // Advances the walk as far as it is determined, branching at the first
        // unknown. All state changes are undone before returning.
        void extend() {
            if (stopped()) return;
            const std::size_t top = undo_.size();
            const bool in0 = in_face_;
            const Dart d0 = d_, s0 = start_d_;
            const int o0 = o_, so0 = start_o_, len0 = cur_len_, f0 = faces_, u0 = used_;
            const int scan0 = start_scan_;
            auto restore = [&] {
                rollback(top);
                in_face_ = in0;
                d_ = d0;
                start_d_ = s0;
                o_ = o0;
                start_o_ = so0;
                cur_len_ = len0;
                faces_ = f0;
                used_ = u0;
                start_scan_ = scan0;
            };

            while (true) {
                if (!in_face_) {
                    const int states = 4 * s_.m_;
                    int k = start_scan_;
                    while (k < states && (mark_[static_cast<std::size_t>(k)] || (!s_.nonorientable_ && (k & 1)))) ++k;
                    start_scan_ = k;
                    if (k == states) {
                        leaf();
                        break;
                    }
                    start_d_ = d_ = k >> 1;
                    start_o_ = o_ = (k & 1) ? -1 : 1;
                    cur_len_ = 0;
                    in_face_ = true;
                    mark_state(d_, o_);
                }
                const int e = d_ >> 1;
                if (sign_[static_cast<std::size_t>(e)] == 0) {
                    for (int s : {1, -1}) {
                        if (!count_node()) break;
                        std::size_t t = undo_.size();
                        set_sign(e, s);
                        // the mirror of the current state depends on this sign
                        mark_state(d_, o_);
                        if (!prune()) extend();
                        rollback(t);
                    }
                    break;
                }
                const int o2 = o_ * sign_[static_cast<std::size_t>(e)];
                const Dart r = d_ ^ 1;
                Dart nxt = o2 > 0 ? succ_[static_cast<std::size_t>(r)] : pred_[static_cast<std::size_t>(r)];
                if (nxt < 0) {
                    const int w = s_.tail_[static_cast<std::size_t>(r)];
                    const int degree = s_.deg(w);
                    for (Dart x : s_.darts_at_[static_cast<std::size_t>(w)]) {
                        bool ok = o2 > 0 ? can_link(r, x, degree) : can_link(x, r, degree);
                        if (!ok) continue;
                        if (!count_node()) break;
                        std::size_t t = undo_.size();
                        if (o2 > 0) link(r, x);
                        else link(x, r);
                        extend();
                        rollback(t);
                    }
                    break;
                }
                d_ = nxt;
                o_ = o2;
                ++cur_len_;
                if (d_ == start_d_ && o_ == start_o_) {
                    ++faces_;
                    used_ += cur_len_;
                    in_face_ = false;
                    if (prune()) break;
                    continue;
                }
                if (mark_[key(d_, o_)]) break;  // cannot happen for a consistent partial map
                mark_state(d_, o_);
                if (prune()) break;
            }
            restore();
        }

        const RotationSearch& s_;
        std::vector<Dart> succ_, pred_;
        std::vector<int> sign_;
        std::vector<char> mark_;
        std::vector<Undo> undo_;
        int faces_ = 0, used_ = 0, negatives_ = 0;
        bool in_face_ = false;
        Dart d_ = 0, start_d_ = 0;
        int o_ = 1, start_o_ = 1, cur_len_ = 0;
        int start_scan_ = 0;
        int local_best_ = kInfinity;
        Outcome outcome_;
        int branch_ = 0, floor_lb_ = 0;
        std::atomic<int>* shared_best_ = nullptr;
        std::atomic<int>* stop_index_ = nullptr;
        std::atomic<std::uint64_t>* nodes_ = nullptr;
        std::uint64_t max_nodes_ = 0, local_nodes_ = 0;
        std::atomic<bool>* out_of_budget_ = nullptr;
        bool abort_ = false;
    };

    const Graph& g_;
    bool nonorientable_;
    int n_ = 0, m_ = 0;
    std::vector<int> tail_;
    std::vector<std::vector<Dart>> darts_at_;
    std::vector<int> order_, pos_;
    std::vector<int> cotree_;
    std::vector<std::vector<int>> level_cotree_;
    int cotree_count_ = 0;
    bool triangle_faces_only_ = true;
};

inline GenusBound search_class(const Graph& g, bool nonorientable, int bound, const SearchBudget& budget) {
    GenusBound out;
    RotationSearch rs(g, nonorientable);
    out.lower = rs.trivial_lower_bound();
    if (nonorientable && rs.cotree_edges().empty()) {
        out.lower = out.upper = out.value = kInfinity;
        return out;
    }
    if (rs.space_log10() > budget.max_log10_space) {
        out.exact = false;
        out.value = kInfinity;
        return out;
    }
    // Deepening on the target genus: each round either proves that nothing
    // below the target exists or stops at the first embedding meeting it.
    const int step = nonorientable ? 1 : 2;
    RotationSearch::Result r;
    std::uint64_t spent = 0;
    for (int target = out.lower; target < bound; target += step) {
        r = rs.run(target + 1, target, budget.max_nodes - std::min(spent, budget.max_nodes), budget.threads);
        spent += r.nodes;
        if (!r.complete || r.best < kInfinity) break;
    }
    r.nodes = spent;
    out.nodes = r.nodes;
    if (r.best < kInfinity) {
        out.witness = Embedding(g, r.rotation, r.signature);
        out.upper = r.best;
    }
    if (r.complete) {
        out.value = r.best;
        out.lower = std::max(out.lower, std::min(r.best, bound));
        if (r.best >= kInfinity) out.lower = bound;
    } else {
        out.exact = false;
        out.value = kInfinity;
    }
    return out;
}

}  // namespace detail

// Exact minimum Euler genus per orientability class for a connected graph.
inline GenusProfile min_euler_genus(const Graph& g, const SearchBudget& budget = {}) {
    if (!g.is_connected()) throw Error("min_euler_genus: graph is disconnected");
    GenusProfile p;
    if (g.size() == 0) {
        p.orientable.value = p.orientable.upper = p.orientable.lower = 0;
        p.orientable.witness = Embedding::trivial(g);
        p.nonorientable.value = p.nonorientable.upper = p.nonorientable.lower = kInfinity;
        return p;
    }
    const int cap = g.size() - g.order() + 3;  // above every achievable genus
    p.orientable = detail::search_class(g, false, cap, budget);
    if (g.size() - g.order() + 1 == 0) {
        p.nonorientable.value = p.nonorientable.lower = p.nonorientable.upper = kInfinity;
        return p;
    }
    // a nonorientable embedding of genus at most orientable_min + 1 always exists
    int nb = p.orientable.exact ? p.orientable.value + 2 : cap;
    p.nonorientable = detail::search_class(g, true, nb, budget);
    if (p.nonorientable.exact && p.nonorientable.value >= kInfinity && nb < cap)
        p.nonorientable = detail::search_class(g, true, cap, budget);
    return p;
}

namespace detail {

// Is there an embedding of this class with genus <= g?
inline std::optional<bool> class_embeds(const Graph& g, bool nonorientable, int genus, const SearchBudget& budget,
                                        std::optional<Embedding>* witness) {
    if (g.size() == 0) {
        if (nonorientable) return false;
        if (witness) *witness = Embedding::trivial(g);
        return true;
    }
    GenusBound b = search_class(g, nonorientable, genus + 1, budget);
    if (b.witness) {
        if (witness) *witness = b.witness;
        return true;
    }
    if (!b.exact) return std::nullopt;
    return false;
}

}  // namespace detail

struct EmbeddabilityResult {
    std::optional<bool> embeddable;  // nullopt: budget exhausted
    // One witness per component, each a cellular embedding whose class and
    // genus fit the combination rule.
    std::vector<Embedding> witnesses;
    std::string detail;
};

// Per-component minima for the combination rule.
struct ComponentGenus {
    Graph component;
    GenusProfile profile;
};

// Orientable target: Σ orientable minima <= g. Nonorientable target: the
// disjoint union needs Σ min(or_i, non_i) crosscap-equivalents, plus one when
// no component reaches its minimum nonorientably (a handle is traded for two
// crosscaps, and N_a # S_b = N_(a+b)).
inline int combined_euler_genus(const std::vector<ComponentGenus>& comps, bool orientable_target) {
    long total = 0;
    if (orientable_target) {
        for (const auto& c : comps) total += c.profile.orientable_min();
        return static_cast<int>(std::min<long>(total, kInfinity));
    }
    bool some_nonorientable = false;
    for (const auto& c : comps) {
        int o = c.profile.orientable_min(), n = c.profile.nonorientable_min();
        total += std::min(o, n);
        if (n <= o) some_nonorientable = true;
    }
    if (!some_nonorientable) total += 1;
    return static_cast<int>(std::min<long>(total, kInfinity));
}

inline std::vector<ComponentGenus> component_profiles(const Graph& g, const SearchBudget& budget) {
    std::vector<ComponentGenus> out;
    for (Graph c : g.components()) {
        GenusProfile p = min_euler_genus(c, budget);
        out.push_back({std::move(c), std::move(p)});
    }
    return out;
}

inline EmbeddabilityResult embeddable_in(const Graph& g, const Surface& s, const SearchBudget& budget = {}) {
    EmbeddabilityResult r;
    auto comps = g.components();
    if (comps.size() == 1 || g.order() == 0) {
        if (g.order() == 0) {
            r.embeddable = true;
            return r;
        }
        std::optional<Embedding> w;
        auto o = detail::class_embeds(g, false, s.orientable ? s.genus : s.genus - 1, budget, &w);
        if (o == std::optional<bool>(true)) {
            r.embeddable = true;
            r.witnesses.push_back(*w);
            return r;
        }
        if (s.orientable) {
            r.embeddable = o;
            return r;
        }
        auto n = detail::class_embeds(g, true, s.genus, budget, &w);
        if (n == std::optional<bool>(true)) {
            r.embeddable = true;
            r.witnesses.push_back(*w);
        } else if (!o || !n) {
            r.embeddable = std::nullopt;
        } else {
            r.embeddable = false;
        }
        return r;
    }
    auto profiles = component_profiles(g, budget);
    for (const auto& c : profiles)
        if (!c.profile.exact()) {
            r.embeddable = std::nullopt;
            r.detail = "budget exhausted on a component";
            return r;
        }
    int need = combined_euler_genus(profiles, s.orientable);
    r.embeddable = need <= s.genus;
    r.detail = "combined Euler genus " + genus_str(need);
    if (*r.embeddable)
        for (const auto& c : profiles) {
            const auto& p = c.profile;
            bool use_non = !s.orientable && p.nonorientable_min() <= p.orientable_min();
            r.witnesses.push_back(use_non ? *p.nonorientable.witness : *p.orientable.witness);
        }
    return r;
}

// ---- blocks ---------------------------------------------------------------

// Joins block embeddings at shared cutvertices: at a cutvertex, the rotations
// contributed by the blocks are concatenated. Orientability is preserved by
// first normalising every block so its spanning tree carries +1.
inline Embedding amalgamate_blocks(const Graph& g, const std::vector<Embedding>& parts) {
    std::map<Vertex, std::vector<Vertex>> rot;
    std::map<Edge, int> sig;
    for (const Embedding& p : parts) {
        Embedding n = normalize_signatures(p);
        for (Vertex v : n.graph().vertices()) {
            auto nb = n.neighbor_order(v);
            auto& dst = rot[v];
            dst.insert(dst.end(), nb.begin(), nb.end());
        }
        for (std::size_t i = 0; i < n.graph().edges().size(); ++i) sig[n.graph().edges()[i]] = n.sign(static_cast<int>(i));
    }
    return Embedding::from_neighbors(g, rot, sig);
}

struct BlockGenus {
    bool exact = true;
    int euler_genus = kInfinity;
    int orientable = kInfinity;
    int nonorientable = kInfinity;
    std::vector<Graph> blocks;
    std::vector<GenusProfile> profiles;
    std::optional<Embedding> witness;  // amalgamated minimum embedding
};

// Euler genus of a connected graph as the sum over its blocks. The orientable
// minimum is additive; the nonorientable one is Σ min(or_i, non_i), plus one
// when every block is best embedded orientably.
inline BlockGenus genus_via_blocks(const Graph& g, const SearchBudget& budget = {}) {
    if (!g.is_connected()) throw Error("genus_via_blocks: graph is disconnected");
    BlockGenus out;
    auto bd = blocks(g);
    out.blocks = bd.blocks;
    long orient = 0, mins = 0;
    bool some_non = false, any_cycle = false;
    std::vector<Embedding> best_parts, orient_parts;
    for (const Graph& b : bd.blocks) {
        GenusProfile p = min_euler_genus(b, budget);
        if (!p.exact()) out.exact = false;
        orient += p.orientable_min();
        int o = p.orientable_min(), n = p.nonorientable_min();
        mins += std::min(o, n);
        if (n <= o) some_non = true;
        if (n < kInfinity) any_cycle = true;
        if (p.orientable.witness) orient_parts.push_back(*p.orientable.witness);
        if (n < o && p.nonorientable.witness) best_parts.push_back(*p.nonorientable.witness);
        else if (p.orientable.witness) best_parts.push_back(*p.orientable.witness);
        out.profiles.push_back(std::move(p));
    }
    if (!out.exact) return out;
    out.orientable = static_cast<int>(orient);
    out.nonorientable = any_cycle ? static_cast<int>(mins + (some_non ? 0 : 1)) : kInfinity;
    out.euler_genus = std::min(out.orientable, out.nonorientable);
    if (g.size() > 0) out.witness = amalgamate_blocks(g, out.euler_genus == out.orientable ? orient_parts : best_parts);
    else out.witness = Embedding::trivial(g);
    return out;
}

// ---- exhaustive enumeration -------------------------------------------------

// Calls visit on one normalised representative per equivalence class (for a
// connected graph whose first vertex has degree >= 3; otherwise a class may
// appear twice, once per mirror image). Returns false if visit asked to stop.
inline bool for_each_embedding(const Graph& g, bool orientable_only, const std::function<bool(const Embedding&)>& visit) {
    const int n = g.order(), m = g.size();
    auto sg = std::make_shared<const Graph>(g);
    if (m == 0) return visit(Embedding(sg, std::vector<std::vector<Dart>>(static_cast<std::size_t>(n)), {}));
    int first = 0;
    for (int v = 0; v < n; ++v)
        if (g.incident(v).size() > g.incident(first).size()) first = v;
    std::vector<std::vector<Dart>> rot(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Vertex vv = g.vertices()[static_cast<std::size_t>(v)];
        for (int ei : g.incident(v)) rot[static_cast<std::size_t>(v)].push_back(2 * ei + (g.edges()[static_cast<std::size_t>(ei)].u == vv ? 0 : 1));
        std::sort(rot[static_cast<std::size_t>(v)].begin(), rot[static_cast<std::size_t>(v)].end());
    }
    // cotree of the canonical forest
    auto tree = canonical_spanning_tree(g);
    std::sort(tree.begin(), tree.end());
    std::vector<int> cotree;
    for (int ei = 0; ei < m; ++ei)
        if (!std::binary_search(tree.begin(), tree.end(), g.edges()[static_cast<std::size_t>(ei)])) cotree.push_back(ei);
    const std::uint64_t patterns = orientable_only ? 1 : (std::uint64_t{1} << cotree.size());
    auto advance = [&](int v) {
        auto& r = rot[static_cast<std::size_t>(v)];
        if (r.size() < 3) return false;
        while (std::next_permutation(r.begin() + 1, r.end()))
            if (v != first || r[1] < r.back()) return true;
        std::sort(r.begin() + 1, r.end());
        return false;
    };
    while (true) {
        for (std::uint64_t pat = 0; pat < patterns; ++pat) {
            std::vector<int> sig(static_cast<std::size_t>(m), 1);
            for (std::size_t k = 0; k < cotree.size(); ++k)
                if ((pat >> k) & 1u) sig[static_cast<std::size_t>(cotree[k])] = -1;
            if (!visit(Embedding(sg, rot, std::move(sig)))) return false;
        }
        int v = 0;
        while (v < n && !advance(v)) ++v;
        if (v == n) break;
    }
    return true;
}

}  // namespace surfminor
