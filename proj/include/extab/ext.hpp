#pragma once

#include <map>
#include <memory>
#include <vector>

#include "resolution.hpp"

namespace extab {

// Graded Ext modules from the dualized minimal free resolution, realized as
// presented graded modules (generators with twists, relation Groebner basis)
// so that every internal degree is a cheap count, plus degreewise strand
// matrices as the independent second route.

inline FreeModule dual_module(const FreeModule& M) {
    std::vector<int> tw;
    for (int t : M.twists) tw.push_back(-t);
    return FreeModule(std::move(tw));
}

// Hom(-, R) of a degree-zero map: the transpose matrix between dual modules.
template <class F>
ModuleMap<F> dual_map(const Ring<F>& R, const ModuleMap<F>& d) {
    FreeModule src = dual_module(d.target);
    FreeModule tgt = dual_module(d.source);
    std::vector<std::vector<Poly<F>>> cols(static_cast<std::size_t>(src.rank()));
    for (int j = 0; j < src.rank(); ++j) {
        cols[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(tgt.rank()));
        for (int c = 0; c < tgt.rank(); ++c)
            cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = d.entry(j, c);
    }
    return make_map(R, std::move(src), std::move(tgt), std::move(cols));
}

// Quotient of a graded free module by a relation submodule.
template <class F>
struct PresentedModule {
    FreeModule gens;
    GroebnerBasis<F> rel_gb;
    HilbertSeries hs;

    mpz_class hf(int j) const { return hs.coefficient(j); }

    // Standard-monomial basis of the degree-j component.
    std::vector<std::pair<int, Monomial>> component_basis(const Ring<F>& R, int j) const {
        std::vector<std::pair<int, Monomial>> basis;
        for (int l = 0; l < gens.rank(); ++l) {
            int d = j - gens.twist(l);
            if (d < 0) continue;
            for (const auto& m : monomials_of_degree(R, d)) {
                bool reducible = false;
                for (const auto& g : rel_gb.gens) {
                    if (static_cast<int>(g.lead().slot) != l) continue;
                    if (mono_divides(g.lead().m, m)) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) basis.emplace_back(l, m);
            }
        }
        return basis;
    }

    // Coordinates of an element in the standard-monomial basis of its degree.
    std::vector<typename F::Elem> coords(const Ring<F>& R, const ModElem<F>& v,
                                         const std::vector<std::pair<int, Monomial>>& basis) const {
        ModElem<F> nf = normal_form(R, v, rel_gb);
        std::vector<typename F::Elem> out(basis.size(), R.field.zero());
        for (const auto& tm : nf.t) {
            bool found = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (basis[i].first == static_cast<int>(tm.slot) && basis[i].second == tm.m) {
                    out[i] = tm.c;
                    found = true;
                    break;
                }
            }
            require(found, "PresentedModule::coords: residue outside the standard basis");
        }
        return out;
    }
};

template <class F>
PresentedModule<F> make_presented(const Ring<F>& R, FreeModule gens,
                                  const std::vector<ModElem<F>>& relations) {
    GroebnerBasis<F> gb = module_groebner(R, gens, relations);
    HilbertSeries hs = hilbert_series_coker(R, gens, gb);
    return PresentedModule<F>{std::move(gens), std::move(gb), std::move(hs)};
}

// Ext^k as a subquotient ker(B)/im(A) of the dualized resolution, presented
// by kernel generators (witnesses) and their relations.
template <class F>
struct ExtPresentation {
    int k = 0;
    FreeModule dual_k;                       // Hom(F_k, R)
    std::vector<ModElem<F>> witnesses;       // generator i as an element of dual_k
    std::shared_ptr<TrackedModule<F>> witness_lift; // division by the witnesses
    PresentedModule<F> mod;

    bool is_zero_module() const { return mod.gens.rank() == 0; }
};

template <class F>
class ExtCalculator {
  public:
    ExtCalculator(Resolution<F> res) : res_(std::move(res)) {}

    const Resolution<F>& resolution() const { return res_; }
    Resolution<F>& resolution() { return res_; }
    const Ring<F>& ring() const { return res_.ring; }

    int max_known_index() const { return res_.complete ? res_.length() : res_.length() - 1; }

    const ExtPresentation<F>& presentation(int k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return *it->second;
        auto pres = std::make_shared<ExtPresentation<F>>(build(k));
        cache_.emplace(k, pres);
        return *pres;
    }

    // rank_F Ext^k(coker, R)_j
    mpz_class ext_rank(int k, int j) {
        if (k < 0 || k > max_known_index()) return 0;
        return presentation(k).mod.hf(j);
    }

    // Independent route: degree-j strand ranks of the dualized complex.
    mpz_class ext_rank_strand(int k, int j) {
        const Ring<F>& R = res_.ring;
        if (k < 0 || k > max_known_index()) return 0;
        FreeModule Dk = dual_module(res_.module(k));
        mpz_class dim = graded_component_dim(Dk, j, R.nvars);
        if (k >= 1) dim -= strand_rank(R, dual_map(R, res_.map(k)), j);
        if (k < res_.length()) dim -= strand_rank(R, dual_map(R, res_.map(k + 1)), j);
        return dim;
    }

  private:
    Resolution<F> res_;
    std::map<int, std::shared_ptr<ExtPresentation<F>>> cache_;

    ExtPresentation<F> build(int k) {
        const Ring<F>& R = res_.ring;
        require(k >= 0, "ExtCalculator: negative index");
        if (k > res_.length()) {
            // beyond the projective dimension the module vanishes
            require(res_.complete, "ExtCalculator: resolution truncated below requested index");
            ExtPresentation<F> zero;
            zero.k = k;
            zero.witness_lift = std::make_shared<TrackedModule<F>>(R, FreeModule{}, std::vector<ModElem<F>>{});
            zero.mod = make_presented(R, FreeModule{}, {});
            return zero;
        }
        ExtPresentation<F> out;
        out.k = k;
        out.dual_k = dual_module(res_.module(k));

        // kernel generators of B = dual(d_{k+1})
        if (k == res_.length()) {
            // B = 0: the kernel is everything
            for (int l = 0; l < out.dual_k.rank(); ++l) {
                ModElem<F> unit;
                unit.t.push_back({static_cast<std::uint32_t>(l), Monomial::one(R.nvars), R.field.one()});
                out.witnesses.push_back(std::move(unit));
            }
        } else {
            ModuleMap<F> B = dual_map(R, res_.map(k + 1));
            std::vector<ModElem<F>> bcols;
            for (int c = 0; c < B.ncols(); ++c) bcols.push_back(map_column(B, c));
            TrackedModule<F> tmB(R, B.target, bcols);
            out.witnesses = min_generators(R, out.dual_k, tmB.syzygy_generators());
        }
        out.witness_lift = std::make_shared<TrackedModule<F>>(R, out.dual_k, out.witnesses);

        std::vector<int> gen_twists;
        for (const auto& w : out.witnesses) gen_twists.push_back(w.degree(R, out.dual_k));
        FreeModule egens(std::move(gen_twists));

        // relations: lifts of im(A) through the witnesses, plus witness syzygies
        std::vector<ModElem<F>> rels = out.witness_lift->syzygy_generators();
        if (k >= 1) {
            ModuleMap<F> A = dual_map(R, res_.map(k));
            for (int c = 0; c < A.ncols(); ++c) {
                ModElem<F> lift;
                ModElem<F> rem = out.witness_lift->divide(map_column(A, c), &lift);
                require(rem.is_zero(), "ExtCalculator: image column escapes the kernel");
                if (!lift.is_zero()) rels.push_back(std::move(lift));
            }
        }
        out.mod = make_presented(R, egens, rels);
        return out;
    }
};

// Degree-zero chain map phi_i : F_i(source) -> F_i(target) lifting the
// natural surjection coker(source) ->> coker(target); phi_0 = identity.
template <class F>
struct ChainMap {
    std::vector<ModuleMap<F>> phi; // phi[i] is phi_i, starting at i = 0
};

// source resolves R/I_big, target resolves R/I_small, I_big ⊆ I_small.
// Containment is the caller's claim; it is verified by normal forms of the
// first differential's columns.
template <class F>
ChainMap<F> lift_surjection_chain_map(Resolution<F>& source, Resolution<F>& target) {
    const Ring<F>& R = source.ring;
    require(source.f0 == target.f0, "lift_surjection_chain_map: ambient modules differ");
    ChainMap<F> cm;
    // phi_0 = identity
    std::vector<std::vector<Poly<F>>> id_cols;
    for (int c = 0; c < source.f0.rank(); ++c) {
        std::vector<Poly<F>> col(static_cast<std::size_t>(source.f0.rank()));
        col[static_cast<std::size_t>(c)] = poly_const(R, R.field.one());
        id_cols.push_back(std::move(col));
    }
    cm.phi.push_back(make_map(R, source.f0, target.f0, std::move(id_cols)));

    // containment check: every generator of the bigger-power ideal divides to
    // zero against the smaller-power level-1 module
    if (source.length() >= 1 && target.length() >= 1) {
        auto lift1 = ensure_lift(target, 1);
        for (int c = 0; c < source.map(1).ncols(); ++c) {
            ModElem<F> v = map_column(source.map(1), c);
            if (!lift1->contains(v))
                throw not_nested("lift_surjection_chain_map: generators are not contained in the target ideal");
        }
    }

    int levels = std::min(source.length(), target.length());
    for (int i = 1; i <= levels; ++i) {
        auto lift = ensure_lift(target, i);
        std::vector<ModElem<F>> cols;
        for (int c = 0; c < source.map(i).ncols(); ++c) {
            ModElem<F> v = map_apply(R, cm.phi[static_cast<std::size_t>(i - 1)], map_column(source.map(i), c));
            ModElem<F> x;
            ModElem<F> rem = lift->divide(v, &x);
            require(rem.is_zero(), "lift_surjection_chain_map: lifting failed (complex not exact?)");
            cols.push_back(std::move(x));
        }
        ModuleMap<F> phi_i{source.map(i).source, target.map(i).source, {}};
        for (auto& x : cols) phi_i.cols.push_back(mod_to_column(x, phi_i.target.rank()));
        cm.phi.push_back(std::move(phi_i));
        // exact commutation check: d^tgt ∘ phi_i = phi_{i-1} ∘ d^src
        ModuleMap<F> lhs = map_compose(R, target.map(i), cm.phi[static_cast<std::size_t>(i)]);
        ModuleMap<F> rhs = map_compose(R, cm.phi[static_cast<std::size_t>(i - 1)], source.map(i));
        for (int c = 0; c < lhs.ncols(); ++c)
            for (int r = 0; r < lhs.rows(); ++r)
                require(poly_eq(R, lhs.entry(r, c), rhs.entry(r, c)),
                        "lift_surjection_chain_map: chain map does not commute");
    }
    return cm;
}

// Matrix of the induced map Ext^k(target quotient) -> Ext^k(source quotient)
// against the Ext presentations; entries are polynomials over the generators.
template <class F>
ModuleMap<F> ext_transition_matrix(const Ring<F>& R, ExtCalculator<F>& from, ExtCalculator<F>& to,
                                   const ChainMap<F>& cm, int k) {
    const ExtPresentation<F>& src = from.presentation(k);
    const ExtPresentation<F>& dst = to.presentation(k);
    FreeModule from_gens = src.mod.gens;
    FreeModule to_gens = dst.mod.gens;
    std::vector<std::vector<Poly<F>>> cols;
    if (static_cast<int>(cm.phi.size()) > k && !src.is_zero_module() && !dst.is_zero_module()) {
        ModuleMap<F> dphi = dual_map(R, cm.phi[static_cast<std::size_t>(k)]);
        for (const auto& w : src.witnesses) {
            ModElem<F> img = map_apply(R, dphi, w);
            ModElem<F> x;
            ModElem<F> rem = dst.witness_lift->divide(img, &x);
            require(rem.is_zero(), "ext_transition_matrix: image escapes the kernel");
            cols.push_back(mod_to_column(x, to_gens.rank()));
        }
    } else {
        // one side vanishes identically: the zero map
        for (int c = 0; c < from_gens.rank(); ++c)
            cols.push_back(std::vector<Poly<F>>(static_cast<std::size_t>(to_gens.rank())));
    }
    return ModuleMap<F>{std::move(from_gens), std::move(to_gens), std::move(cols)};
}

struct TransitionTriple {
    mpz_class source_rank, target_rank, map_rank;
};

// Rank of the degree-j component of a map between presented modules.
template <class F>
TransitionTriple presented_map_rank(const Ring<F>& R, const PresentedModule<F>& from,
                                    const PresentedModule<F>& to, const ModuleMap<F>& psi, int j) {
    auto fb = from.component_basis(R, j);
    auto tb = to.component_basis(R, j);
    TransitionTriple out{mpz_class(fb.size()), mpz_class(tb.size()), 0};
    require(out.source_rank == from.hf(j), "presented_map_rank: basis size disagrees with Hilbert function");
    require(out.target_rank == to.hf(j), "presented_map_rank: basis size disagrees with Hilbert function");
    if (fb.empty() || tb.empty()) return out;
    DenseMat<F> M(R.field, static_cast<int>(tb.size()), static_cast<int>(fb.size()));
    for (std::size_t c = 0; c < fb.size(); ++c) {
        ModElem<F> v;
        v.t.push_back({static_cast<std::uint32_t>(fb[c].first), fb[c].second, R.field.one()});
        ModElem<F> img = map_apply(R, psi, v);
        auto col = to.coords(R, img, tb);
        for (std::size_t r = 0; r < tb.size(); ++r) M.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    out.map_rank = dense_rank(R.field, M);
    return out;
}

// Stable column value: the degree-j rank of H^{n+1}_m(R)^{⊕mu}, which is
// mu * C(-j-1, n) for j <= -n-1 and zero above.
inline mpz_class limit_rank_oracle(int mu, int n, int /*k*/, long j) {
    if (mu <= 0) throw invalid_input("limit_rank_oracle: mu must be positive");
    if (j > -static_cast<long>(n) - 1) return 0;
    return mpz_class(mu) * detail::binom_mpz(-j - 1, n);
}

} // namespace extab
