#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "strand.hpp"
#include "syzygy.hpp"

namespace extab {

// Betti table: (homological degree, internal degree) -> rank.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries;

    long total(int i) const {
        long t = 0;
        for (const auto& [key, v] : entries)
            if (key.first == i) t += v;
        return t;
    }
    int length() const {
        int l = 0;
        for (const auto& [key, v] : entries) l = std::max(l, key.first);
        return l;
    }
};

// Finite graded free resolution ... -> F_2 -> F_1 -> F_0 of coker(d_1).
// Each level keeps the tracked Groebner state of its column module so that
// membership and lifting questions (chain maps) reuse the construction work.
template <class F>
struct Resolution {
    Resolution() = default;
    explicit Resolution(Ring<F> r) : ring(std::move(r)) {}

    Ring<F> ring;
    FreeModule f0;
    std::vector<ModuleMap<F>> maps; // maps[i] = d_{i+1} : F_{i+1} -> F_i
    std::vector<std::shared_ptr<TrackedModule<F>>> lifts; // per level, for d_{i+1}
    bool minimal = false;
    bool complete = true; // false when truncated by max_length
    int verify_window_lo = 0, verify_window_hi = -1; // exactness spot-check window

    int length() const { return static_cast<int>(maps.size()); }

    const FreeModule& module(int i) const {
        require(i >= 0 && i <= length(), "Resolution::module: index out of range");
        return i == 0 ? f0 : maps[static_cast<std::size_t>(i - 1)].source;
    }

    const ModuleMap<F>& map(int i) const {
        require(i >= 1 && i <= length(), "Resolution::map: index out of range");
        return maps[static_cast<std::size_t>(i - 1)];
    }

    BettiTable betti() const {
        BettiTable B;
        for (int l = 0; l < f0.rank(); ++l) ++B.entries[{0, f0.twist(l)}];
        for (int i = 1; i <= length(); ++i)
            for (int tw : module(i).twists) ++B.entries[{i, tw}];
        return B;
    }

    // Hilbert series of coker(d_1) from the Betti numbers: the alternating
    // sum of the free-module numerators (second path, independent of the
    // lead-term path).
    HilbertSeries hilbert_series_from_betti() const {
        ZPoly num;
        for (int i = 0; i <= length(); ++i)
            for (int tw : module(i).twists) num[tw] += (i % 2 == 0 ? 1 : -1);
        for (auto it = num.begin(); it != num.end();)
            it = it->second == 0 ? num.erase(it) : std::next(it);
        return HilbertSeries{std::move(num), ring.nvars};
    }
};

namespace detail {

template <class F>
void check_composition_zero(const Ring<F>& R, const ModuleMap<F>& a, const ModuleMap<F>& b) {
    ModuleMap<F> comp = map_compose(R, a, b);
    for (const auto& col : comp.cols)
        for (const auto& p : col)
            require(p.is_zero(), "resolution: d∘d != 0");
}

} // namespace detail

struct ResolveOptions {
    int max_length = -1;    // stop after this many steps (-1: to the end)
    bool verify = true;     // spot-check exactness by degreewise ranks
    long verify_dim_cap = 20000; // skip check degrees whose components exceed this
    void* budget_ctx = nullptr;
    ProgressFn progress = nullptr;
};

// Iterated syzygies with per-level minimal generators; the result is the
// minimal free resolution of coker(presentation).
template <class F>
Resolution<F> free_resolution(const Ring<F>& R, const ModuleMap<F>& presentation,
                              const ResolveOptions& opt = {}) {
    Resolution<F> res(R);
    res.f0 = presentation.target;

    std::vector<ModElem<F>> cols;
    for (int c = 0; c < presentation.ncols(); ++c) cols.push_back(map_column(presentation, c));
    cols = min_generators(R, presentation.target, std::move(cols));

    FreeModule current = presentation.target;
    int level = 0;
    while (!cols.empty()) {
        ++level;
        if (opt.progress) opt.progress(opt.budget_ctx);
        require(level <= R.nvars + 1, "free_resolution: exceeded Hilbert syzygy bound");
        ModuleMap<F> d = columns_to_map(R, current, cols);
        auto tracked = std::make_shared<TrackedModule<F>>(R, current, cols);
        res.maps.push_back(d);
        res.lifts.push_back(tracked);
        if (opt.max_length > 0 && level >= opt.max_length) break;
        std::vector<ModElem<F>> syz = tracked->syzygy_generators();
        current = d.source;
        cols = min_generators(R, current, std::move(syz));
    }
    res.complete = cols.empty();

    for (int i = 1; i < res.length(); ++i)
        detail::check_composition_zero(R, res.map(i), res.map(i + 1));
    res.minimal = true;
    for (int i = 2; i <= res.length(); ++i)
        for (const auto& col : res.map(i).cols)
            for (const auto& p : col)
                if (!p.is_zero() && p.degree(R) == 0) res.minimal = false;

    if (opt.verify) {
        // Exactness spot-check: in each degree of the window, the strand
        // ranks must satisfy dim(F_i)_d = rank(d_i)_d + rank(d_{i+1})_d at
        // every interior position. The window covers all generator degrees.
        int lo = 0, hi = 0;
        for (int i = 1; i <= res.length(); ++i)
            for (int tw : res.module(i).twists) hi = std::max(hi, tw);
        hi += 1;
        res.verify_window_lo = lo;
        res.verify_window_hi = hi;
        for (int i = 1; i < res.length(); ++i) {
            const ModuleMap<F>& di = res.map(i);
            const ModuleMap<F>& dnext = res.map(i + 1);
            for (int d = lo; d <= hi; ++d) {
                long dim = graded_component_dim(di.source, d, R.nvars);
                if (dim == 0 || dim > opt.verify_dim_cap) continue;
                long r1 = strand_rank(R, di, d);
                long r2 = strand_rank(R, dnext, d);
                require(dim == r1 + r2, "free_resolution: exactness spot-check failed at level " +
                                            std::to_string(i) + ", degree " + std::to_string(d));
            }
        }
        // when the tower terminated on its own, the last map is injective
        bool truncated = opt.max_length > 0 && res.length() >= opt.max_length;
        if (!truncated && res.length() >= 1) {
            const ModuleMap<F>& dl = res.map(res.length());
            for (int d = lo; d <= hi; ++d) {
                long dim = graded_component_dim(dl.source, d, R.nvars);
                if (dim == 0 || dim > opt.verify_dim_cap) continue;
                require(dim == strand_rank(R, dl, d),
                        "free_resolution: last differential not injective in degree " + std::to_string(d));
            }
        }
    }
    return res;
}

// Lazily (re)build the tracked division state for level i (d_i's columns).
template <class F>
std::shared_ptr<TrackedModule<F>> ensure_lift(Resolution<F>& res, int i) {
    require(i >= 1 && i <= res.length(), "ensure_lift: level out of range");
    auto& slot = res.lifts[static_cast<std::size_t>(i - 1)];
    if (!slot) {
        std::vector<ModElem<F>> cols;
        const ModuleMap<F>& d = res.map(i);
        for (int c = 0; c < d.ncols(); ++c) cols.push_back(map_column(d, c));
        slot = std::make_shared<TrackedModule<F>>(res.ring, d.target, cols);
    }
    return slot;
}

template <class F>
Resolution<F> free_resolution(const Ring<F>& R, const std::vector<Poly<F>>& ideal_gens,
                              const ResolveOptions& opt = {}) {
    for (const auto& g : ideal_gens)
        if (!g.is_homogeneous(R)) throw not_homogeneous("free_resolution: inhomogeneous generator");
    std::vector<std::vector<Poly<F>>> cols;
    std::vector<int> twists;
    for (const auto& g : ideal_gens) {
        cols.push_back({g});
        twists.push_back(g.is_zero() ? 0 : g.degree(R));
    }
    ModuleMap<F> pres = make_map(R, FreeModule(std::move(twists)), FreeModule::rank1(0), std::move(cols));
    return free_resolution(R, pres, opt);
}

// Cancel unit entries of the differentials (Gaussian pivoting over R with
// degree-zero pivots); homotopy-equivalent minimal resolution out.
template <class F>
Resolution<F> minimalize(const Ring<F>& R, Resolution<F> res) {
    auto find_unit = [&](const ModuleMap<F>& m, int& r, int& c) {
        for (c = 0; c < m.ncols(); ++c)
            for (r = 0; r < m.rows(); ++r) {
                const Poly<F>& p = m.entry(r, c);
                if (!p.is_zero() && p.t.size() == 1 && p.lead().m.is_one()) return true;
            }
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= res.length(); ++i) {
            ModuleMap<F>& d = res.maps[static_cast<std::size_t>(i - 1)];
            int r, c;
            while (find_unit(d, r, c)) {
                changed = true;
                auto a = d.entry(r, c).lead().c;
                auto ainv = R.field.inv(a);
                // column operations kill row r outside column c
                for (int cc = 0; cc < d.ncols(); ++cc) {
                    if (cc == c) continue;
                    const Poly<F>& e = d.entry(r, cc);
                    if (e.is_zero()) continue;
                    Poly<F> f = poly_scale(R, e, ainv);
                    for (int rr = 0; rr < d.rows(); ++rr) {
                        Poly<F> upd = poly_sub(R, d.entry(rr, cc), poly_mul(R, f, d.entry(rr, c)));
                        d.cols[static_cast<std::size_t>(cc)][static_cast<std::size_t>(rr)] = std::move(upd);
                    }
                }
                // drop generator c of F_i and generator r of F_{i-1}
                d.cols.erase(d.cols.begin() + c);
                d.source.twists.erase(d.source.twists.begin() + c);
                for (auto& col : d.cols) col.erase(col.begin() + r);
                d.target.twists.erase(d.target.twists.begin() + r);
                if (i < res.length()) {
                    ModuleMap<F>& up = res.maps[static_cast<std::size_t>(i)];
                    for (auto& col : up.cols) col.erase(col.begin() + c);
                    up.target.twists.erase(up.target.twists.begin() + c);
                }
                if (i >= 2) {
                    ModuleMap<F>& down = res.maps[static_cast<std::size_t>(i - 2)];
                    down.cols.erase(down.cols.begin() + r);
                    down.source.twists.erase(down.source.twists.begin() + r);
                } else {
                    res.f0.twists.erase(res.f0.twists.begin() + r);
                }
            }
        }
    }
    while (!res.maps.empty() && res.maps.back().ncols() == 0) res.maps.pop_back();
    // lift bases refer to the old matrices; rebuilt on demand via ensure_lift
    res.lifts.assign(res.maps.size(), nullptr);
    for (int i = 1; i < res.length(); ++i)
        detail::check_composition_zero(R, res.map(i), res.map(i + 1));
    res.minimal = true;
    return res;
}

// Hilbert series of R/I from the lead terms of a Groebner basis (first path).
template <class F>
HilbertSeries hilbert_series_ideal(const Ring<F>& R, const GroebnerBasis<F>& gb) {
    return hilbert_series_quotient(R, gb);
}

} // namespace extab
