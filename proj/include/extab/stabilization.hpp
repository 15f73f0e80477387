#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "catalog.hpp"
#include "ext.hpp"

namespace extab {

// Shared computation state for one ideal and its powers: resolutions, Ext
// presentations, chain maps and transition matrices are built once, cached,
// then read concurrently by the drivers.
template <class F>
class ThickeningContext {
  public:
    ThickeningContext(GradedIdeal<F> ideal, Budget* budget = nullptr)
        : ring_(ideal.ring), base_(std::move(ideal)), budget_(budget) {}

    const Ring<F>& ring() const { return ring_; }
    const GradedIdeal<F>& base_ideal() const { return base_; }
    int n() const { return ring_.nvars - 1; }
    Budget* budget() { return budget_; }

    const GradedIdeal<F>& power(int t) {
        if (t == 1) return base_;
        auto it = powers_.find(t);
        if (it == powers_.end()) {
            if (budget_) budget_->checkpoint("ideal power t=" + std::to_string(t));
            it = powers_.emplace(t, ideal_power(base_, t)).first;
        }
        return it->second;
    }

    ExtCalculator<F>& calc(int t, int max_length = -1) {
        auto it = calcs_.find(t);
        if (it == calcs_.end()) {
            if (budget_) budget_->checkpoint("resolution of power t=" + std::to_string(t));
            ResolveOptions opt;
            opt.max_length = max_length;
            opt.budget_ctx = budget_;
            opt.progress = budget_ ? &budget_progress : nullptr;
            Resolution<F> res = free_resolution(ring_, power(t).gens, opt);
            it = calcs_.emplace(t, std::make_shared<ExtCalculator<F>>(std::move(res))).first;
        }
        return *it->second;
    }

    // Pre-seed a calculator (e.g. loaded from a disk cache).
    void adopt_resolution(int t, Resolution<F> res) {
        calcs_.emplace(t, std::make_shared<ExtCalculator<F>>(std::move(res)));
    }
    bool has_resolution(int t) const { return calcs_.count(t) > 0; }

    // chain map lifting R/I^{t+1} ->> R/I^t
    const ChainMap<F>& chain(int t) {
        auto it = chains_.find(t);
        if (it == chains_.end()) {
            if (budget_) budget_->checkpoint("chain map t=" + std::to_string(t));
            Resolution<F>& src = calc(t + 1).resolution();
            Resolution<F>& tgt = calc(t).resolution();
            it = chains_.emplace(t, lift_surjection_chain_map(src, tgt)).first;
        }
        return it->second;
    }

    // induced Ext^k(R/I^t) -> Ext^k(R/I^{t+1})
    const ModuleMap<F>& transition(int k, int t) {
        auto key = std::make_pair(k, t);
        auto it = transitions_.find(key);
        if (it == transitions_.end()) {
            const ChainMap<F>& cm = chain(t);
            it = transitions_.emplace(key, ext_transition_matrix(ring_, calc(t), calc(t + 1), cm, k)).first;
        }
        return it->second;
    }

    mpz_class ext_rank(int t, int k, int j) { return calc(t).ext_rank(k, j); }

    TransitionTriple transition_rank(int k, int t, int j) {
        if (t < 1) throw invalid_input("transition_rank: t must be >= 1");
        const ModuleMap<F>& psi = transition(k, t);
        return presented_map_rank(ring_, calc(t).presentation(k).mod, calc(t + 1).presentation(k).mod,
                                  psi, j);
    }

    // rank of the composite Ext^k(R/I^{t0}) -> ... -> Ext^k(R/I^{t1}) in degree j
    mpz_class composite_transition_rank(int k, int t0, int t1, int j) {
        require(t1 > t0, "composite_transition_rank: need t1 > t0");
        ModuleMap<F> psi = transition(k, t0);
        for (int t = t0 + 1; t < t1; ++t) psi = map_compose(ring_, transition(k, t), psi);
        return presented_map_rank(ring_, calc(t0).presentation(k).mod,
                                  calc(t1).presentation(k).mod, psi, j)
            .map_rank;
    }

    // dim_F (R/I^t)_m
    mpz_class hf(int t, int m) { return power(t).hilbert_function(m); }

    // rank H^k(X_t, O_{X_t}(m)) by graded local duality; the k = 0 case uses
    // the four-term sequence relating it to (R/I^t)_m and H^0_m, H^1_m.
    mpz_class sheaf_rank(int k, int t, int m) {
        if (k < 0) return 0;
        const int nn = n();
        if (k == 0)
            return hf(t, m) - ext_rank(t, nn + 1, -nn - 1 - m) + ext_rank(t, nn, -nn - 1 - m);
        return ext_rank(t, nn - k, -nn - 1 - m);
    }

  private:
    Ring<F> ring_;
    GradedIdeal<F> base_;
    Budget* budget_;
    std::map<int, GradedIdeal<F>> powers_;
    std::map<int, std::shared_ptr<ExtCalculator<F>>> calcs_;
    std::map<int, ChainMap<F>> chains_;
    std::map<std::pair<int, int>, ModuleMap<F>> transitions_;
};

// ---------------------------------------------------------------------------

struct TableCellTriple {
    long source_rank = 0, target_rank = 0, map_rank = 0;
};

// (t, j) |-> rank grid for a fixed Ext index, with the transition ranks
// between consecutive rows and the oracle limit row when mu is supplied.
struct CohomologyTable {
    std::string ideal_name;
    std::string field_name;
    int kappa = 0; // Ext index
    int t_min = 1, t_max = 1;
    int j_lo = 0, j_hi = 0;
    std::optional<int> mu;
    int n = 0; // projective dimension of the ambient space
    std::map<std::pair<int, long>, mpz_class> entries;          // (t, j) -> rank
    std::map<std::pair<int, long>, TableCellTriple> transitions; // (t, j): t -> t+1
    std::map<long, mpz_class> limit_row;

    mpz_class entry(int t, long j) const {
        auto it = entries.find({t, j});
        return it == entries.end() ? mpz_class(0) : it->second;
    }
};

struct ColumnReport {
    long j = 0;
    int twist_m = 0; // m with j = -n-1-m
    std::optional<int> first_stable_t;      // with respect to the oracle limit
    std::optional<int> constant_from_t;     // constant within the computed range
    int effective_bound_t0 = 1;
    std::optional<bool> bound_respected;    // only when first_stable_t determined
    bool in_effective_range = false;        // sheaf index below codim(Sing X) - 1
};

struct StabilizationReport {
    std::vector<ColumnReport> columns;
    std::vector<std::string> violations; // bound violations inside the effective range
};

struct KodairaViolation {
    int k = 0, t = 0, m = 0;
    mpz_class rank;
};

struct GrowthReport {
    int k = 0, m = 0;
    std::vector<mpz_class> ranks; // t = 1..t_max
    bool strictly_increasing = false;
    bool eventually_constant = false;
};

// t_0 = dim X + m + 2, clamped at 1 (thickenings are indexed from 1).
inline int effective_bound(int dim_x, int twist_m) { return std::max(1, dim_x + twist_m + 2); }

template <class F>
CohomologyTable build_table(ThickeningContext<F>& ctx, int kappa, int t_max, long j_lo, long j_hi,
                            std::optional<int> mu = {}) {
    CohomologyTable tab;
    tab.ideal_name = "";
    tab.field_name = ctx.ring().field.name();
    tab.kappa = kappa;
    tab.t_max = t_max;
    tab.j_lo = static_cast<int>(j_lo);
    tab.j_hi = static_cast<int>(j_hi);
    tab.mu = mu;
    tab.n = ctx.n();
    for (int t = 1; t <= t_max; ++t) {
        for (long j = j_lo; j <= j_hi; ++j) {
            if (ctx.budget())
                ctx.budget()->checkpoint("table cell t=" + std::to_string(t) + " j=" + std::to_string(j));
            tab.entries[{t, j}] = ctx.ext_rank(t, kappa, static_cast<int>(j));
        }
    }
    for (int t = 1; t < t_max; ++t) {
        for (long j = j_lo; j <= j_hi; ++j) {
            if (ctx.budget())
                ctx.budget()->checkpoint("transition t=" + std::to_string(t) + " j=" + std::to_string(j));
            TransitionTriple tr = ctx.transition_rank(kappa, t, static_cast<int>(j));
            tab.transitions[{t, j}] = TableCellTriple{tr.source_rank.get_si(), tr.target_rank.get_si(),
                                                      tr.map_rank.get_si()};
        }
    }
    if (mu) {
        for (long j = j_lo; j <= j_hi; ++j)
            tab.limit_row[j] = limit_rank_oracle(*mu, tab.n, kappa, j);
    }
    return tab;
}

// Flag each column's first stabilization against the oracle limit, compare
// with the effective bound, and report violations inside the range where the
// bound is asserted.
inline StabilizationReport check_stabilization(const CohomologyTable& tab, int dim_x, int sing_dim) {
    StabilizationReport rep;
    const int codim_sing = sing_dim < 0 ? dim_x : dim_x - sing_dim;
    const int sheaf_k = tab.n - tab.kappa;
    for (long j = tab.j_lo; j <= tab.j_hi; ++j) {
        ColumnReport col;
        col.j = j;
        col.twist_m = static_cast<int>(-tab.n - 1 - j);
        col.effective_bound_t0 = effective_bound(dim_x, col.twist_m);
        col.in_effective_range = sheaf_k < codim_sing - 1;

        // constant within range: entries and full-rank transitions from some t on
        for (int t0 = tab.t_min; t0 <= tab.t_max; ++t0) {
            bool constant = true;
            for (int t = t0; t < tab.t_max && constant; ++t) {
                auto it = tab.transitions.find({t, j});
                if (it == tab.transitions.end()) { constant = false; break; }
                const auto& tr = it->second;
                if (!(tab.entry(t, j) == tab.entry(t + 1, j) && tr.map_rank == tr.source_rank &&
                      tr.map_rank == tr.target_rank))
                    constant = false;
            }
            if (constant) {
                col.constant_from_t = t0;
                break;
            }
        }

        if (!tab.limit_row.empty()) {
            auto lit = tab.limit_row.find(j);
            if (lit != tab.limit_row.end()) {
                const mpz_class& limit = lit->second;
                for (int t = tab.t_min; t < tab.t_max; ++t) {
                    auto it = tab.transitions.find({t, j});
                    if (it == tab.transitions.end()) continue;
                    const auto& tr = it->second;
                    if (tab.entry(t, j) == limit && tab.entry(t + 1, j) == limit &&
                        mpz_class(tr.map_rank) == limit) {
                        col.first_stable_t = t;
                        break;
                    }
                }
                if (col.first_stable_t) {
                    col.bound_respected = (*col.first_stable_t <= col.effective_bound_t0);
                    if (col.in_effective_range && !*col.bound_respected)
                        rep.violations.push_back("column j=" + std::to_string(j) +
                                                 " stabilizes after the effective bound");
                }
            }
        }
        rep.columns.push_back(col);
    }
    return rep;
}

// Kodaira sweep: nonzero H^k(X_t, O(m)) for m <= 0 are findings, not errors.
template <class F>
std::vector<KodairaViolation> kodaira_check(ThickeningContext<F>& ctx, int k_max, int t_max,
                                            const std::vector<int>& m_range) {
    for (int m : m_range)
        if (m > 0) throw invalid_input("kodaira_check: twists must be <= 0");
    std::vector<KodairaViolation> out;
    for (int k = 0; k <= k_max; ++k)
        for (int t = 1; t <= t_max; ++t)
            for (int m : m_range) {
                if (ctx.budget())
                    ctx.budget()->checkpoint("kodaira k=" + std::to_string(k) + " t=" + std::to_string(t));
                mpz_class r = ctx.sheaf_rank(k, t, m);
                if (r != 0) out.push_back(KodairaViolation{k, t, m, r});
            }
    return out;
}

template <class F>
GrowthReport growth_check(ThickeningContext<F>& ctx, int k, int t_max, int m) {
    GrowthReport rep;
    rep.k = k;
    rep.m = m;
    for (int t = 1; t <= t_max; ++t) {
        if (ctx.budget()) ctx.budget()->checkpoint("growth t=" + std::to_string(t));
        rep.ranks.push_back(ctx.sheaf_rank(k, t, m));
    }
    rep.strictly_increasing = true;
    for (std::size_t i = 0; i + 1 < rep.ranks.size(); ++i)
        if (!(rep.ranks[i] < rep.ranks[i + 1])) rep.strictly_increasing = false;
    rep.eventually_constant = rep.ranks.size() >= 2 &&
                              rep.ranks[rep.ranks.size() - 2] == rep.ranks.back();
    return rep;
}

} // namespace extab
