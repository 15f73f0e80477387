#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "free_module.hpp"

namespace extab {

// Buchberger for submodules of graded free modules (ideals are the rank-1
// case). Pair selection: normal strategy, minimal lcm degree first, with the
// Gebauer-Moller chain criteria; the product criterion applies in rank one,
// where skipped pairs contribute their Koszul syzygy instead.
//
// A tracked run carries, for every basis element, its expression in terms of
// the original input columns; reductions to zero then emit syzygies of the
// inputs directly.

template <class F>
struct GBItem {
    ModElem<F> g;
    ModElem<F> tracker; // combination of original inputs equal to g (tracked runs)
    bool alive = true;  // false once superseded during interreduction
};

template <class F>
struct GroebnerBasis {
    FreeModule ambient;
    std::vector<ModElem<F>> gens; // reduced, monic, sorted by lead
    bool reduced = true;

    int size() const { return static_cast<int>(gens.size()); }
};

namespace detail {

template <class F>
struct Pair {
    int i, j;           // basis indices, i < j
    Monomial lcm;       // lcm of lead monomials (same slot)
    int degree;         // graded degree of the S-element
    bool coprime;       // product-criterion flag (rank-1 ambient only)
};

} // namespace detail

// Progress hook: called once per processed pair batch; may throw to abort
// (budget enforcement).
using ProgressFn = void (*)(void*);

template <class F>
class GroebnerEngine {
  public:
    GroebnerEngine(const Ring<F>& R, FreeModule ambient, bool track)
        : R_(R), ambient_(std::move(ambient)), track_(track) {}

    void add_input(const ModElem<F>& v) {
        inputs_.push_back(v);
        pending_inputs_.push_back(static_cast<int>(inputs_.size()) - 1);
    }

    // Run Buchberger to completion. Safe to call again after more add_input.
    void run(void* budget_ctx = nullptr, ProgressFn progress = nullptr) {
        for (int idx : pending_inputs_) {
            ModElem<F> v = inputs_[static_cast<std::size_t>(idx)];
            ModElem<F> tr;
            if (track_) tr.t.push_back({static_cast<std::uint32_t>(idx), Monomial::one(R_.nvars), R_.field.one()});
            reduce_and_insert(std::move(v), std::move(tr));
        }
        pending_inputs_.clear();
        while (!queue_.empty()) {
            if (progress) progress(budget_ctx);
            auto pair = pop_pair();
            if (!pair) continue;
            process_pair(*pair);
        }
        dirty_reduced_ = true;
    }

    // Reduced basis: minimal lead terms, fully tail-reduced, monic, sorted.
    // Trackers are carried through all rewriting when tracking is on.
    const std::vector<GBItem<F>>& reduced_items() {
        if (dirty_reduced_) interreduce();
        return items_;
    }

    GroebnerBasis<F> basis() {
        if (dirty_reduced_) interreduce();
        GroebnerBasis<F> B;
        B.ambient = ambient_;
        for (const auto& it : items_)
            if (it.alive) B.gens.push_back(it.g);
        return B;
    }

    // Syzygies of the original inputs collected from reductions to zero and
    // from product-criterion Koszul relations. Generates the full syzygy
    // module once run() has completed (Schreyer).
    const std::vector<ModElem<F>>& syzygies() const { return syzygies_; }

    // Normal form against the current basis; deterministic: the highest
    // reducible term goes first, divisors tried in basis order.
    ModElem<F> normal_form(const ModElem<F>& v) const {
        ModElem<F> tr;
        return normal_form_tracked(v, nullptr);
    }

    // As normal_form; when lift != nullptr also accumulate the quotients so
    // that v = (combination recorded in *lift) + remainder, with the
    // combination expressed against the original inputs (tracked runs only).
    ModElem<F> normal_form_tracked(const ModElem<F>& v, ModElem<F>* lift) const {
        ModElem<F> rem;
        ModElem<F> cur = v;
        if (lift) lift->t.clear();
        while (!cur.is_zero()) {
            const MTerm<F>& lt = cur.t.front();
            int gi = find_divisor(lt.slot, lt.m);
            if (gi < 0) {
                rem.t.push_back(lt);
                cur.t.erase(cur.t.begin());
                continue;
            }
            const GBItem<F>& it = items_[static_cast<std::size_t>(gi)];
            Monomial q = mono_quotient(lt.m, it.g.lead().m);
            auto coef = R_.field.div(lt.c, it.g.lead().c);
            auto ncoef = R_.field.neg(coef);
            cur = mod_add_scaled_mul(R_, cur, ncoef, q, it.g);
            if (lift && track_) *lift = mod_add_scaled_mul(R_, *lift, coef, q, it.tracker);
        }
        return rem;
    }

    const Ring<F>& ring() const { return R_; }
    const FreeModule& ambient() const { return ambient_; }
    const std::vector<ModElem<F>>& inputs() const { return inputs_; }
    long pair_reductions() const { return pair_reductions_; }

  private:
    const Ring<F>& R_;
    FreeModule ambient_;
    bool track_;
    std::vector<ModElem<F>> inputs_;
    std::vector<int> pending_inputs_;
    std::vector<GBItem<F>> items_;
    std::vector<detail::Pair<F>> queue_; // kept heapified by degree
    std::vector<ModElem<F>> syzygies_;
    bool dirty_reduced_ = false;
    long pair_reductions_ = 0;

    struct PairOrder {
        bool operator()(const detail::Pair<F>& a, const detail::Pair<F>& b) const {
            if (a.degree != b.degree) return a.degree > b.degree; // min-heap
            if (a.j != b.j) return a.j > b.j;
            return a.i > b.i;
        }
    };

    int find_divisor(std::uint32_t slot, const Monomial& m) const {
        for (std::size_t k = 0; k < items_.size(); ++k) {
            const auto& it = items_[k];
            if (!it.alive) continue;
            const auto& lt = it.g.lead();
            if (lt.slot == slot && mono_divides(lt.m, m)) return static_cast<int>(k);
        }
        return -1;
    }

    void reduce_and_insert(ModElem<F> v, ModElem<F> tracker) {
        // full reduction of new candidates keeps the basis small
        ModElem<F> rem;
        while (!v.is_zero()) {
            const MTerm<F>& lt = v.t.front();
            int gi = find_divisor(lt.slot, lt.m);
            if (gi < 0) {
                rem.t.push_back(lt);
                v.t.erase(v.t.begin());
                continue;
            }
            const GBItem<F>& it = items_[static_cast<std::size_t>(gi)];
            Monomial q = mono_quotient(lt.m, it.g.lead().m);
            auto coef = R_.field.div(lt.c, it.g.lead().c);
            auto ncoef = R_.field.neg(coef);
            v = mod_add_scaled_mul(R_, v, ncoef, q, it.g);
            if (track_) tracker = mod_add_scaled_mul(R_, tracker, ncoef, q, it.tracker);
        }
        if (rem.is_zero()) {
            if (track_ && !tracker.is_zero()) syzygies_.push_back(normalized(tracker));
            return;
        }
        normalize_pair(rem, tracker);
        add_basis_element(std::move(rem), std::move(tracker));
    }

    void normalize_pair(ModElem<F>& g, ModElem<F>& tracker) {
        if (g.is_zero()) return;
        if constexpr (F::is_prime_field) {
            auto s = R_.field.inv(g.lead().c);
            if (!R_.field.is_one(s)) {
                for (auto& tm : g.t) R_.field.mul_assign(tm.c, s);
                if (track_) for (auto& tm : tracker.t) R_.field.mul_assign(tm.c, s);
            }
        } else {
            // integer-primitive with positive lead; same unit on tracker
            ModElem<F> before = g;
            mod_normalize_scale(R_, g);
            if (track_ && !tracker.is_zero() && !before.is_zero()) {
                mpq_class unit = g.lead().c / before.lead().c;
                if (unit != 1)
                    for (auto& tm : tracker.t) tm.c *= unit;
            }
        }
    }

    ModElem<F> normalized(ModElem<F> v) const {
        mod_normalize_scale(R_, v);
        return v;
    }

    void add_basis_element(ModElem<F> g, ModElem<F> tracker) {
        int s = static_cast<int>(items_.size());
        items_.push_back(GBItem<F>{std::move(g), std::move(tracker), true});
        update_pairs(items_[static_cast<std::size_t>(s)].g, s);
        dirty_reduced_ = true;
    }

    // Gebauer-Moller update: build pairs (i, s) for live i with same lead
    // slot, prune by the M/F/B criteria, and drop old pairs whose lcm is
    // strictly killed by the new lead.
    void update_pairs(const ModElem<F>& g, int s) {
        const auto& lt = g.lead();
        struct Cand {
            int i;
            Monomial lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Cand> cand;
        for (int i = 0; i < s; ++i) {
            const auto& it = items_[static_cast<std::size_t>(i)];
            if (!it.alive) continue;
            const auto& li = it.g.lead();
            if (li.slot != lt.slot) continue;
            Cand c{i, mono_lcm(li.m, lt.m), mono_coprime(li.m, lt.m), true};
            cand.push_back(std::move(c));
        }
        // criterion M: drop (i,s) if another (k,s) has lcm strictly dividing
        for (auto& a : cand) {
            for (const auto& b : cand) {
                if (&a == &b || !b.keep) continue;
                if (!(b.lcm == a.lcm) && mono_divides(b.lcm, a.lcm)) {
                    a.keep = false;
                    break;
                }
            }
        }
        // criterion F: among equal lcms keep a single representative,
        // preferring a coprime one (whose S-element is known to reduce)
        for (std::size_t x = 0; x < cand.size(); ++x) {
            if (!cand[x].keep) continue;
            for (std::size_t y = x + 1; y < cand.size(); ++y) {
                if (!cand[y].keep) continue;
                if (cand[x].lcm == cand[y].lcm) {
                    if (cand[y].coprime && !cand[x].coprime) cand[x].keep = false;
                    else cand[y].keep = false;
                }
            }
        }
        // criterion B: old pair (i,j) dies when the new lead strictly
        // divides its lcm and both new pairs have different lcms
        const bool rank1 = ambient_.rank() == 1;
        std::vector<detail::Pair<F>> kept;
        kept.reserve(queue_.size());
        for (auto& p : queue_) {
            const auto& li = items_[static_cast<std::size_t>(p.i)].g.lead();
            const auto& lj = items_[static_cast<std::size_t>(p.j)].g.lead();
            bool drop = false;
            if (li.slot == lt.slot && mono_divides(lt.m, p.lcm)) {
                Monomial lcm_is = mono_lcm(li.m, lt.m);
                Monomial lcm_js = mono_lcm(lj.m, lt.m);
                if (!(lcm_is == p.lcm) && !(lcm_js == p.lcm)) drop = true;
            }
            if (!drop) kept.push_back(std::move(p));
        }
        queue_ = std::move(kept);
        std::make_heap(queue_.begin(), queue_.end(), PairOrder{});
        for (auto& c : cand) {
            if (!c.keep) continue;
            if (rank1 && c.coprime) {
                // product criterion: S reduces to zero; in tracked runs its
                // Koszul syzygy still contributes a generator
                if (track_) emit_koszul(c.i, s);
                continue;
            }
            detail::Pair<F> p{c.i, s, c.lcm,
                              R_.degree(c.lcm) + ambient_.twist(static_cast<int>(lt.slot)), c.coprime};
            queue_.push_back(std::move(p));
            std::push_heap(queue_.begin(), queue_.end(), PairOrder{});
        }
    }

    void emit_koszul(int i, int j) {
        const auto& gi = items_[static_cast<std::size_t>(i)];
        const auto& gj = items_[static_cast<std::size_t>(j)];
        // g_j * tr_i - g_i * tr_j, evaluated in the tracking module
        ModElem<F> syz;
        for (const auto& tm : gj.g.t)
            syz = mod_add_scaled_mul(R_, syz, tm.c, tm.m, gi.tracker);
        for (const auto& tm : gi.g.t)
            syz = mod_add_scaled_mul(R_, syz, R_.field.neg(tm.c), tm.m, gj.tracker);
        if (!syz.is_zero()) syzygies_.push_back(normalized(std::move(syz)));
    }

    std::optional<detail::Pair<F>> pop_pair() {
        std::pop_heap(queue_.begin(), queue_.end(), PairOrder{});
        detail::Pair<F> p = std::move(queue_.back());
        queue_.pop_back();
        if (!items_[static_cast<std::size_t>(p.i)].alive || !items_[static_cast<std::size_t>(p.j)].alive)
            return std::nullopt;
        return p;
    }

    void process_pair(const detail::Pair<F>& p) {
        ++pair_reductions_;
        const auto& gi = items_[static_cast<std::size_t>(p.i)];
        const auto& gj = items_[static_cast<std::size_t>(p.j)];
        Monomial qi = mono_quotient(p.lcm, gi.g.lead().m);
        Monomial qj = mono_quotient(p.lcm, gj.g.lead().m);
        // S = (1/lc_i) q_i g_i - (1/lc_j) q_j g_j
        ModElem<F> S = mod_mul_term(R_, gi.g, qi, R_.field.inv(gi.g.lead().c));
        S = mod_add_scaled_mul(R_, S, R_.field.neg(R_.field.inv(gj.g.lead().c)), qj, gj.g);
        ModElem<F> tracker;
        if (track_) {
            tracker = mod_mul_term(R_, gi.tracker, qi, R_.field.inv(gi.g.lead().c));
            tracker = mod_add_scaled_mul(R_, tracker, R_.field.neg(R_.field.inv(gj.g.lead().c)), qj, gj.tracker);
        }
        reduce_and_insert(std::move(S), std::move(tracker));
    }

    // Make the basis reduced: prune lead-divisible elements, tail-reduce the
    // rest against each other, monic-normalize, and sort by lead ascending.
    void interreduce() {
        // prune: keep the element with the smaller lead when one lead divides another
        for (std::size_t a = 0; a < items_.size(); ++a) {
            if (!items_[a].alive) continue;
            for (std::size_t b = 0; b < items_.size(); ++b) {
                if (a == b || !items_[b].alive) continue;
                const auto& la = items_[a].g.lead();
                const auto& lb = items_[b].g.lead();
                if (la.slot == lb.slot && mono_divides(lb.m, la.m)) {
                    if (la.m == lb.m && a < b) continue; // equal leads: drop the later one
                    items_[a].alive = false;
                    break;
                }
            }
        }
        // tail-reduce each survivor against the others
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t a = 0; a < items_.size(); ++a) {
                if (!items_[a].alive) continue;
                items_[a].alive = false; // reduce against the rest
                ModElem<F> lift;
                ModElem<F> rem = normal_form_tracked(items_[a].g, track_ ? &lift : nullptr);
                items_[a].alive = true;
                if (!mod_eq(R_, rem, items_[a].g)) {
                    changed = true;
                    require(!rem.is_zero(), "interreduce: survivor reduced to zero");
                    if (track_) // rem = g - combination recorded in lift
                        items_[a].tracker = mod_add_scaled_mul(R_, items_[a].tracker,
                                                               R_.field.neg(R_.field.one()),
                                                               Monomial::one(R_.nvars), lift);
                    items_[a].g = std::move(rem);
                }
            }
        }
        // monic + canonical sort
        for (auto& it : items_) {
            if (!it.alive) continue;
            if (!R_.field.is_one(it.g.lead().c)) {
                auto s = R_.field.inv(it.g.lead().c);
                for (auto& tm : it.g.t) R_.field.mul_assign(tm.c, s);
                if (track_) for (auto& tm : it.tracker.t) R_.field.mul_assign(tm.c, s);
            }
        }
        std::stable_sort(items_.begin(), items_.end(), [&](const GBItem<F>& x, const GBItem<F>& y) {
            if (x.alive != y.alive) return x.alive;
            if (!x.alive) return false;
            return mterm_cmp(R_, x.g.lead().slot, x.g.lead().m, y.g.lead().slot, y.g.lead().m) < 0;
        });
        while (!items_.empty() && !items_.back().alive) items_.pop_back();
        dirty_reduced_ = false;
    }
};

// Convenience front-ends -----------------------------------------------------

template <class F>
GroebnerBasis<F> module_groebner(const Ring<F>& R, const FreeModule& ambient,
                                 const std::vector<ModElem<F>>& cols) {
    GroebnerEngine<F> eng(R, ambient, /*track=*/false);
    for (const auto& c : cols)
        if (!c.is_zero()) eng.add_input(c);
    eng.run();
    return eng.basis();
}

template <class F>
GroebnerBasis<F> buchberger(const Ring<F>& R, const std::vector<Poly<F>>& gens,
                            bool require_homogeneous = true) {
    if (require_homogeneous)
        for (const auto& g : gens)
            if (!g.is_homogeneous(R)) throw not_homogeneous("buchberger: inhomogeneous generator");
    std::vector<ModElem<F>> cols;
    for (const auto& g : gens)
        if (!g.is_zero()) cols.push_back(poly_to_mod(g));
    return module_groebner(R, FreeModule::rank1(), cols);
}

template <class F>
ModElem<F> normal_form(const Ring<F>& R, const ModElem<F>& v, const GroebnerBasis<F>& B) {
    ModElem<F> rem;
    ModElem<F> cur = v;
    while (!cur.is_zero()) {
        const MTerm<F>& lt = cur.t.front();
        int found = -1;
        for (std::size_t k = 0; k < B.gens.size(); ++k) {
            const auto& lg = B.gens[k].lead();
            if (lg.slot == lt.slot && mono_divides(lg.m, lt.m)) {
                found = static_cast<int>(k);
                break;
            }
        }
        if (found < 0) {
            rem.t.push_back(lt);
            cur.t.erase(cur.t.begin());
            continue;
        }
        const ModElem<F>& g = B.gens[static_cast<std::size_t>(found)];
        Monomial q = mono_quotient(lt.m, g.lead().m);
        cur = mod_add_scaled_mul(R, cur, R.field.neg(R.field.div(lt.c, g.lead().c)), q, g);
    }
    return rem;
}

template <class F>
Poly<F> normal_form(const Ring<F>& R, const Poly<F>& f, const GroebnerBasis<F>& B) {
    return mod_to_poly(normal_form(R, poly_to_mod(f), B));
}

template <class F>
bool in_module(const Ring<F>& R, const ModElem<F>& v, const GroebnerBasis<F>& B) {
    return normal_form(R, v, B).is_zero();
}

template <class F>
bool in_ideal(const Ring<F>& R, const Poly<F>& f, const GroebnerBasis<F>& B) {
    return normal_form(R, f, B).is_zero();
}

// Full Buchberger-criterion audit: every same-slot S-element reduces to zero.
// Brute force by design; used by the test suites as the safety net for the
// pair-pruning criteria.
template <class F>
bool buchberger_audit(const Ring<F>& R, const GroebnerBasis<F>& B) {
    const auto& G = B.gens;
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            const auto& li = G[i].lead();
            const auto& lj = G[j].lead();
            if (li.slot != lj.slot) continue;
            Monomial l = mono_lcm(li.m, lj.m);
            ModElem<F> S = mod_mul_term(R, G[i], mono_quotient(l, li.m), R.field.inv(li.c));
            S = mod_add_scaled_mul(R, S, R.field.neg(R.field.inv(lj.c)), mono_quotient(l, lj.m), G[j]);
            if (!normal_form(R, S, B).is_zero()) return false;
        }
    }
    return true;
}

} // namespace extab
