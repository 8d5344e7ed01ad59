#include "frb/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace frb {

namespace {

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int k) { w[k >> 6] |= std::uint64_t(1) << (k & 63); }
    void reset(int k) { w[k >> 6] &= ~(std::uint64_t(1) << (k & 63)); }
    bool test(int k) const { return (w[k >> 6] >> (k & 63)) & 1; }
    bool any() const
    {
        for (auto x : w)
            if (x)
                return true;
        return false;
    }
    int count() const
    {
        int c = 0;
        for (auto x : w)
            c += std::popcount(x);
        return c;
    }
    int lowest() const
    {
        for (int k = 0; k < W; ++k)
            if (w[k])
                return k * 64 + std::countr_zero(w[k]);
        return -1;
    }
    bool subset_of(const Bits& o) const
    {
        for (int k = 0; k < W; ++k)
            if (w[k] & ~o.w[k])
                return false;
        return true;
    }
    Bits operator&(const Bits& o) const
    {
        Bits r;
        for (int k = 0; k < W; ++k)
            r.w[k] = w[k] & o.w[k];
        return r;
    }
    Bits operator|(const Bits& o) const
    {
        Bits r;
        for (int k = 0; k < W; ++k)
            r.w[k] = w[k] | o.w[k];
        return r;
    }
    Bits minus(const Bits& o) const
    {
        Bits r;
        for (int k = 0; k < W; ++k)
            r.w[k] = w[k] & ~o.w[k];
        return r;
    }
    bool intersects(const Bits& o) const
    {
        for (int k = 0; k < W; ++k)
            if (w[k] & o.w[k])
                return true;
        return false;
    }
    friend bool operator==(const Bits&, const Bits&) = default;

    // Positions 0..k-1.
    static Bits below(int k)
    {
        Bits r;
        for (int b = 0; b < W; ++b) {
            const int lo = b * 64;
            if (k >= lo + 64)
                r.w[b] = ~std::uint64_t(0);
            else if (k > lo)
                r.w[b] = (std::uint64_t(1) << (k - lo)) - 1;
        }
        return r;
    }
};

struct Abort {};

template <int W>
class Engine {
public:
    Engine(const RhoTable& t, const ClauseSet& clauses, IndexList universe, const SearchOptions& opts)
        : universe_(std::move(universe)), opts_(opts)
    {
        const int k_count = int(universe_.size());
        std::vector<int> pos(t.n() + 1, -1);
        for (int k = 0; k < k_count; ++k)
            pos[universe_[k]] = k;

        options_.resize(k_count);
        hard_.resize(k_count);
        below_.resize(k_count + 1);
        for (int k = 0; k <= k_count; ++k)
            below_[k] = Bits<W>::below(k);

        for (int k = 0; k < k_count; ++k) {
            const int i = universe_[k];
            std::vector<Bits<W>> opts_k;
            for (const auto& c : clauses)
                for (int j : t.columns_hitting(i, c.hit)) {
                    Bits<W> f;
                    for (int p = 0; p < k; ++p)
                        if (c.forbids(t(universe_[p], j)))
                            f.set(p);
                    opts_k.push_back(f);
                }
            options_[k] = prune_dominated(std::move(opts_k));
            Bits<W> all = below_[k];
            for (const auto& f : options_[k])
                all = all & f;
            hard_[k] = all;
        }
        conflict_.assign(k_count, Bits<W>{});
        for (int k = 0; k < k_count; ++k)
            for (int p = 0; p < k; ++p)
                if (hard_[k].test(p)) {
                    conflict_[k].set(p);
                    conflict_[p].set(k);
                }
    }

    void seed(const Bits<W>& chosen)
    {
        const int c = chosen.count();
        if (c > best_count_) {
            best_count_ = c;
            best_ = chosen;
        }
    }

    bool run()
    {
        const int k_count = int(universe_.size());
        try {
            if (best_count_ < opts_.stop_at)
                dfs(k_count - 1, Bits<W>{}, Bits<W>{}, 0);
        } catch (const Abort&) {
            return false;
        }
        return best_count_ < opts_.stop_at;
    }

    IndexList best_set() const
    {
        IndexList out;
        for (int k = 0; k < int(universe_.size()); ++k)
            if (best_.test(k))
                out.push_back(universe_[k]);
        return out;
    }

    long long nodes() const { return nodes_; }

    Bits<W> to_bits(const IndexList& set) const
    {
        Bits<W> b;
        for (int i : set) {
            auto it = std::lower_bound(universe_.begin(), universe_.end(), i);
            if (it == universe_.end() || *it != i)
                return Bits<W>{}; // not in the universe: cannot be feasible
            b.set(int(it - universe_.begin()));
        }
        return b;
    }

private:
    static std::vector<Bits<W>> prune_dominated(std::vector<Bits<W>> opts)
    {
        std::sort(opts.begin(), opts.end(), [](const Bits<W>& a, const Bits<W>& b) {
            const int ca = a.count(), cb = b.count();
            return ca != cb ? ca < cb : a.w < b.w;
        });
        opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
        std::vector<Bits<W>> kept;
        for (const auto& f : opts) {
            bool dominated = false;
            for (const auto& g : kept)
                if (g.subset_of(f)) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                kept.push_back(f);
        }
        return kept;
    }

    // Greedy clique cover of the hard-conflict graph restricted to `avail`.
    int cover_bound(Bits<W> avail) const
    {
        int cliques = 0;
        while (avail.any()) {
            const int v = avail.lowest();
            avail.reset(v);
            Bits<W> cand = avail & conflict_[v];
            while (cand.any()) {
                const int u = cand.lowest();
                avail.reset(u);
                cand.reset(u);
                cand = cand & conflict_[u];
            }
            ++cliques;
        }
        return cliques;
    }

    void tick()
    {
        ++nodes_;
        if (opts_.node_limit > 0 && nodes_ > opts_.node_limit)
            throw Abort{};
    }

    void record(const Bits<W>& chosen, int count)
    {
        if (count > best_count_) {
            best_count_ = count;
            best_ = chosen;
            if (best_count_ >= opts_.stop_at)
                throw Abort{};
        }
    }

    void dfs(int k, Bits<W> banned, Bits<W> chosen, int count)
    {
        tick();
        Bits<W> avail_below;
        for (;;) {
            while (k >= 0 && banned.test(k))
                --k;
            if (k < 0) {
                record(chosen, count);
                return;
            }
            const Bits<W> avail = below_[k + 1].minus(banned);
            if (count + avail.count() <= best_count_)
                return;
            avail_below = below_[k].minus(banned);
            bool free_take = false;
            for (const auto& f : options_[k])
                if (!f.intersects(avail_below)) {
                    free_take = true;
                    break;
                }
            if (!free_take)
                break;
            chosen.set(k);
            ++count;
            --k;
        }
        if (count + cover_bound(below_[k + 1].minus(banned)) <= best_count_)
            return;

        // Effective options, least restrictive first, without dominated ones.
        std::vector<Bits<W>> eff;
        eff.reserve(options_[k].size());
        for (const auto& f : options_[k])
            eff.push_back(f & avail_below);
        eff = prune_dominated(std::move(eff));

        Bits<W> with_k = chosen;
        with_k.set(k);
        for (const auto& f : eff)
            dfs(k - 1, banned | f, with_k, count + 1);
        dfs(k - 1, banned, chosen, count);
    }

    IndexList universe_;
    SearchOptions opts_;
    std::vector<std::vector<Bits<W>>> options_;
    std::vector<Bits<W>> hard_;
    std::vector<Bits<W>> conflict_;
    std::vector<Bits<W>> below_;
    Bits<W> best_;
    int best_count_ = 0;
    long long nodes_ = 0;
};

template <int W>
SearchResult run_engine(const RhoTable& t, const ClauseSet& clauses, IndexList universe,
                        std::span<const IndexList> seeds, const SearchOptions& opts)
{
    SearchResult res;
    res.universe = int(universe.size());
    Engine<W> engine(t, clauses, std::move(universe), opts);
    for (const auto& s : seeds)
        if (satisfies(t, s, clauses))
            engine.seed(engine.to_bits(s));
    res.optimal = engine.run();
    res.set = engine.best_set();
    res.nodes = engine.nodes();
    return res;
}

} // namespace

IndexList candidate_universe(const RhoTable& t, const ClauseSet& clauses)
{
    IndexList u;
    for (int i = 1; i <= t.n(); ++i)
        for (const auto& c : clauses)
            if (!t.columns_hitting(i, c.hit).empty()) {
                u.push_back(i);
                break;
            }
    return u;
}

SearchResult max_clause_set(const RhoTable& t, const ClauseSet& clauses, std::span<const IndexList> seeds,
                            const SearchOptions& opts)
{
    auto universe = candidate_universe(t, clauses);
    const int size = int(universe.size());
    if (opts.universe_cap > 0 && size > opts.universe_cap)
        throw SearchCapExceeded("candidate universe of " + std::to_string(size) + " exceeds cap " +
                                std::to_string(opts.universe_cap));
    if (size <= 256)
        return run_engine<4>(t, clauses, std::move(universe), seeds, opts);
    if (size <= 512)
        return run_engine<8>(t, clauses, std::move(universe), seeds, opts);
    if (size <= 1024)
        return run_engine<16>(t, clauses, std::move(universe), seeds, opts);
    throw SearchCapExceeded("candidate universe above 1024 is not supported");
}

} // namespace frb
