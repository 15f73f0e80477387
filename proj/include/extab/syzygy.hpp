#pragma once

#include <string>
#include <vector>

#include "groebner.hpp"

namespace extab {

// Tracked Groebner state for a fixed generating set: supports dividing module
// elements with an explicit lift back to the original columns, and yields
// generators of the syzygy module (Schreyer).
template <class F>
class TrackedModule {
  public:
    TrackedModule(const Ring<F>& R, FreeModule ambient, std::vector<ModElem<F>> cols)
        : R_(R), engine_(R, ambient, /*track=*/true), cols_(std::move(cols)) {
        for (const auto& c : cols_) engine_.add_input(c);
        engine_.run();
        // Syzygy generators: S-pair reductions to zero plus Koszul relations
        // from criterion-skipped coprime pairs, plus the discrepancies
        // between each input and its division by the completed basis.
        syz_ = engine_.syzygies();
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (cols_[i].is_zero()) continue;
            ModElem<F> lift;
            ModElem<F> rem = engine_.normal_form_tracked(cols_[i], &lift);
            require(rem.is_zero(), "TrackedModule: input fails to divide by its own basis");
            ModElem<F> unit;
            unit.t.push_back({static_cast<std::uint32_t>(i), Monomial::one(R.nvars), R.field.one()});
            ModElem<F> s = mod_add_scaled_mul(R_, unit, R.field.neg(R.field.one()), Monomial::one(R.nvars), lift);
            if (!s.is_zero()) {
                mod_normalize_scale(R_, s);
                syz_.push_back(std::move(s));
            }
        }
    }

    const std::vector<ModElem<F>>& syzygy_generators() const { return syz_; }
    const std::vector<ModElem<F>>& columns() const { return cols_; }

    // v = combination of the original columns (recorded in *lift) + remainder.
    ModElem<F> divide(const ModElem<F>& v, ModElem<F>* lift) const {
        return engine_.normal_form_tracked(v, lift);
    }

    bool contains(const ModElem<F>& v) const { return engine_.normal_form(v).is_zero(); }

    GroebnerBasis<F> reduced_basis() { return engine_.basis(); }

  private:
    const Ring<F>& R_;
    GroebnerEngine<F> engine_;
    std::vector<ModElem<F>> cols_;
    std::vector<ModElem<F>> syz_;
};

// Minimal generating set of the graded submodule generated by `cand`:
// ascending-degree greedy filter, each survivor reduced against the module
// generated by the earlier ones. For graded modules this yields a minimal
// generating set (graded Nakayama).
template <class F>
std::vector<ModElem<F>> min_generators(const Ring<F>& R, const FreeModule& ambient,
                                       std::vector<ModElem<F>> cand) {
    std::vector<int> idx(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        const auto& va = cand[static_cast<std::size_t>(a)];
        const auto& vb = cand[static_cast<std::size_t>(b)];
        if (va.is_zero() != vb.is_zero()) return vb.is_zero();
        if (va.is_zero()) return false;
        return va.degree(R, ambient) < vb.degree(R, ambient);
    });
    GroebnerEngine<F> eng(R, ambient, /*track=*/false);
    std::vector<ModElem<F>> selected;
    for (int i : idx) {
        ModElem<F>& v = cand[static_cast<std::size_t>(i)];
        if (v.is_zero()) continue;
        ModElem<F> nf = eng.normal_form(v);
        if (nf.is_zero()) continue;
        mod_normalize_scale(R, nf);
        selected.push_back(nf);
        eng.add_input(nf);
        eng.run();
    }
    return selected;
}

// Columns generating all homogeneous relations among the columns of the
// input map; composing the result with the input gives the zero map.
template <class F>
ModuleMap<F> syzygy_basis(const Ring<F>& R, const ModuleMap<F>& cols) {
    std::vector<ModElem<F>> C;
    for (int c = 0; c < cols.ncols(); ++c) C.push_back(map_column(cols, c));
    TrackedModule<F> tm(R, cols.target, C);
    FreeModule mid = cols.source;
    std::vector<ModElem<F>> gens = min_generators(R, mid, tm.syzygy_generators());
    return columns_to_map(R, mid, gens);
}

// Substitute images for the variables of `src`: x_i -> images[i].
template <class F>
Poly<F> substitute(const Ring<F>& src, const Poly<F>& f, const Ring<F>& dst,
                   const std::vector<Poly<F>>& images) {
    require(static_cast<int>(images.size()) == src.nvars, "substitute: image count mismatch");
    Poly<F> acc;
    for (const auto& tm : f.t) {
        Poly<F> term = poly_const(dst, tm.c);
        for (int v = 0; v < src.nvars; ++v) {
            int e = tm.m.exp(v);
            for (int k = 0; k < e; ++k) term = poly_mul(dst, term, images[static_cast<std::size_t>(v)]);
        }
        acc = poly_add(dst, acc, term);
    }
    return acc;
}

// Kernel of the graded ring map source -> target, x_i -> images[i], computed
// by a block elimination order on the graph ideal (target block first).
// Optional target_relations cut out a quotient of the target ring. All images
// must be homogeneous of one degree so the map is graded after rescaling.
template <class F>
std::vector<Poly<F>> kernel_of_ring_map(const Ring<F>& source, const Ring<F>& target,
                                        const std::vector<Poly<F>>& images,
                                        const std::vector<Poly<F>>& target_relations = {}) {
    require(static_cast<int>(images.size()) == source.nvars, "kernel_of_ring_map: need one image per source variable");
    int deg = -1;
    for (const auto& f : images) {
        if (f.is_zero()) throw not_gradable("kernel_of_ring_map: zero image");
        if (!f.is_homogeneous(target)) throw not_gradable("kernel_of_ring_map: inhomogeneous image");
        int d = f.degree(target);
        if (deg < 0) deg = d;
        else if (d != deg) throw not_gradable("kernel_of_ring_map: images of unequal degrees");
    }
    const int nt = target.nvars, ns = source.nvars;
    if (nt + ns > kMaxVars) throw invalid_input("kernel_of_ring_map: too many variables in product ring");

    std::vector<std::string> names = target.names;
    names.insert(names.end(), source.names.begin(), source.names.end());
    Ring<F> prod(target.field, names, MonomialOrder::elimination(nt));
    prod.weights.assign(static_cast<std::size_t>(nt + ns), 1);
    for (int i = 0; i < ns; ++i) prod.weights[static_cast<std::size_t>(nt + i)] = deg;

    auto embed = [&](const Poly<F>& f, int offset) {
        Poly<F> g;
        for (const auto& tm : f.t) {
            std::vector<int> e(static_cast<std::size_t>(nt + ns), 0);
            for (int v = 0; v < tm.m.nvars; ++v) e[static_cast<std::size_t>(offset + v)] = tm.m.exp(v);
            g.t.push_back({Monomial::from_exponents(e), tm.c});
        }
        return poly_collect(prod, std::move(g.t));
    };

    std::vector<Poly<F>> graph;
    for (int i = 0; i < ns; ++i) {
        Poly<F> si = poly_var(prod, nt + i);
        graph.push_back(poly_sub(prod, si, embed(images[static_cast<std::size_t>(i)], 0)));
    }
    for (const auto& rel : target_relations) graph.push_back(embed(rel, 0));

    GroebnerBasis<F> gb = buchberger(prod, graph, /*require_homogeneous=*/false);

    std::vector<Poly<F>> kernel;
    for (const auto& g : gb.gens) {
        Poly<F> p = mod_to_poly(g);
        bool pure = true;
        for (const auto& tm : p.t)
            for (int v = 0; v < nt && pure; ++v)
                if (tm.m.exp(v) != 0) pure = false;
        if (!pure || p.is_zero()) continue;
        Poly<F> back;
        for (const auto& tm : p.t) {
            std::vector<int> e(static_cast<std::size_t>(ns), 0);
            for (int v = 0; v < ns; ++v) e[static_cast<std::size_t>(v)] = tm.m.exp(nt + v);
            back.t.push_back({Monomial::from_exponents(e), tm.c});
        }
        kernel.push_back(poly_collect(source, std::move(back.t)));
    }
    // every returned generator must vanish on the images
    GroebnerBasis<F> relgb;
    if (!target_relations.empty()) relgb = buchberger(target, target_relations);
    for (const auto& f : kernel) {
        Poly<F> val = substitute(source, f, target, images);
        if (!target_relations.empty()) val = normal_form(target, val, relgb);
        require(val.is_zero(), "kernel_of_ring_map: generator fails substitution check");
    }
    return kernel;
}

} // namespace extab
