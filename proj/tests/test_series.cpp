// Derived/lower-central series, normalizers, and derivation algebras: model
// algebras with hand-checked answers, then centralizer invariants of regular
// and subdiagram-regular nilpotents in the exceptional algebras.
#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "chevrep/series.hpp"

using namespace chevrep;

namespace {

BracketFn zero_bracket(int n) {
    return [n](const GfpVec&, const GfpVec&) { return GfpVec(n, 0); };
}

// heisenberg on (x, y, z): [x, y] = z, z central
BracketFn heisenberg_bracket(uint32_t p) {
    return [p](const GfpVec& a, const GfpVec& b) {
        PrimeField F(p);
        GfpVec out(3, 0);
        out[2] = F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]));
        return out;
    };
}

GfpVec simple_support(const ChevalleyAlgebra& alg, const std::vector<int>& nodes) {
    std::vector<RootVec> roots;
    for (int i : nodes) roots.push_back(alg.rs().simple_root(i));
    return alg.element_from_roots(roots);
}

std::vector<int> regular_support(int rank) {
    std::vector<int> nodes(rank);
    for (int i = 0; i < rank; ++i) nodes[i] = i + 1;
    return nodes;
}

std::vector<int> normalizer_dims_of_derived_series(const ChevalleyAlgebra& alg,
                                                   const Subspace& sub) {
    std::vector<int> out;
    for (const auto& term : derived_series(alg, sub)) out.push_back(normalizer(alg, term).dim());
    return out;
}

}  // namespace

TEST_CASE("series chains on model algebras", "[series]") {
    using dims = std::vector<int>;

    Subspace abelian = Subspace::full(3, 5);
    REQUIRE(series_dims(derived_series(zero_bracket(5), abelian)) == dims{5, 0});
    REQUIRE(series_dims(lower_central_series(zero_bracket(5), abelian)) == dims{5, 0});

    Subspace heis = Subspace::full(3, 3);
    REQUIRE(series_dims(derived_series(heisenberg_bracket(3), heis)) == dims{3, 1, 0});
    REQUIRE(series_dims(lower_central_series(heisenberg_bracket(3), heis)) == dims{3, 1, 0});

    // sl2 is perfect away from p = 2; at p = 2 the brackets with h vanish
    ChevalleyAlgebra sl2_5('A', 1, 5, Lattice::simply_connected);
    Subspace whole5 = Subspace::full(5, 3);
    REQUIRE(series_dims(derived_series(sl2_5, whole5)) == dims{3});
    REQUIRE(series_dims(lower_central_series(sl2_5, whole5)) == dims{3});

    ChevalleyAlgebra sl2_2('A', 1, 2, Lattice::simply_connected);
    Subspace whole2 = Subspace::full(2, 3);
    REQUIRE(series_dims(derived_series(sl2_2, whole2)) == dims{3, 1, 0});
    REQUIRE(series_dims(lower_central_series(sl2_2, whole2)) == dims{3, 1, 0});
}

TEST_CASE("series terms require a bracket-closed subspace", "[series]") {
    ChevalleyAlgebra sl2('A', 1, 5, Lattice::simply_connected);
    RootVec alpha = sl2.rs().simple_root(1);
    Subspace ef(5, 3);
    ef.add_row(sl2.basis_e(alpha));
    ef.add_row(sl2.basis_e(root_neg(alpha)));
    REQUIRE_THROWS_AS(derived_series(sl2, ef), std::invalid_argument);
    REQUIRE_THROWS_AS(lower_central_series(sl2, ef), std::invalid_argument);
    REQUIRE_THROWS_AS(derivation_algebra(sl2, ef), std::invalid_argument);
}

TEST_CASE("derivation algebras of model algebras", "[series]") {
    // abelian: every matrix is a derivation, commutators span the traceless ones
    DerivationDims a4 = derivation_algebra(2, zero_bracket(4), Subspace::full(2, 4));
    REQUIRE(a4.alg == 16);
    REQUIRE(a4.alg_prime == 15);
    DerivationDims a5 = derivation_algebra(3, zero_bracket(5), Subspace::full(3, 5));
    REQUIRE(a5.alg == 25);
    REQUIRE(a5.alg_prime == 24);

    // heisenberg: D fixes z up to the trace of the (x, y) block, giving
    // matrices [[A, 0], [v, tr A]] with A and v free; commutators of those
    // have A traceless and last column zero
    for (uint32_t p : {2u, 3u}) {
        DerivationDims h = derivation_algebra(p, heisenberg_bracket(p), Subspace::full(p, 3));
        REQUIRE(h.alg == 6);
        REQUIRE(h.alg_prime == 5);
    }

    // away from p = 2, 3 every derivation of sl2 is inner
    ChevalleyAlgebra sl2('A', 1, 5, Lattice::simply_connected);
    DerivationDims d = derivation_algebra(sl2, Subspace::full(5, 3));
    REQUIRE(d.alg == 3);
    REQUIRE(d.alg_prime == 3);

    DerivationDims no_prime = derivation_algebra(sl2, Subspace::full(5, 3), false);
    REQUIRE(no_prime.alg == 3);
    REQUIRE(no_prime.alg_prime == 0);
}

TEST_CASE("centralizers and normalizers in small algebras", "[series]") {
    ChevalleyAlgebra sl2('A', 1, 5, Lattice::simply_connected);
    RootVec alpha = sl2.rs().simple_root(1);
    GfpVec e = sl2.basis_e(alpha);

    Subspace ce = centralizer(sl2, e);
    REQUIRE(ce.dim() == 1);
    REQUIRE(ce.contains(e));
    REQUIRE(centralizer(sl2, sl2.zero()).dim() == 3);

    // fixed space of the one-parameter unipotent through e
    Subspace cu = centralizer(sl2, sl2.unipotent_action(alpha, 1));
    REQUIRE(cu.dim() == 1);
    REQUIRE(cu.contains(e));

    // the normalizer of the root line is the borel
    Subspace line(5, 3);
    line.add_row(e);
    REQUIRE(normalizer(sl2, line).dim() == 2);
    REQUIRE(normalizer(sl2, Subspace(5, 3)).dim() == 3);
    REQUIRE(normalizer(sl2, Subspace::full(5, 3)).dim() == 3);

    ChevalleyAlgebra sl2_2('A', 1, 2, Lattice::simply_connected);
    Subspace line2(2, 3);
    line2.add_row(sl2_2.basis_e(alpha));
    REQUIRE(normalizer(sl2_2, line2).dim() == 2);

    // heisenberg center is normalized by everything
    Subspace zline(3, 3);
    zline.add_row(GfpVec{0, 0, 1});
    REQUIRE(normalizer(3, 3, heisenberg_bracket(3), zline).dim() == 3);

    // regular nilpotent of sl4: centralizer spanned by e, e^2, e^3
    ChevalleyAlgebra sl4('A', 3, 3, Lattice::simply_connected);
    Subspace creg = centralizer(sl4, simple_support(sl4, regular_support(3)));
    REQUIRE(creg.dim() == 3);
    REQUIRE(series_dims(derived_series(sl4, creg)) == std::vector<int>{3, 0});
    Subspace nreg = normalizer(sl4, creg);
    REQUIRE(nreg.contains_space(creg));
    REQUIRE_NOTHROW(derived_series(sl4, nreg));
}

TEST_CASE("centralizer series match the recorded exceptional values", "[series]") {
    using dims = std::vector<int>;

    ChevalleyAlgebra e8('E', 8, 5, Lattice::simply_connected);
    Subspace c8 = centralizer(e8, simple_support(e8, regular_support(8)));
    REQUIRE(series_dims(derived_series(e8, c8)) == dims{10, 7, 0});

    ChevalleyAlgebra e7('E', 7, 3, Lattice::simply_connected);
    Subspace c_e6 = centralizer(e7, simple_support(e7, {1, 2, 3, 4, 5, 6}));
    REQUIRE(series_dims(derived_series(e7, c_e6)) == dims{15, 12, 9});
    Subspace c_a6 = centralizer(e7, simple_support(e7, {1, 3, 4, 5, 6, 7}));
    REQUIRE(series_dims(derived_series(e7, c_a6)) == dims{19, 17});

    ChevalleyAlgebra e6('E', 6, 2, Lattice::simply_connected);
    Subspace c_d4 = centralizer(e6, simple_support(e6, {2, 3, 4, 5}));
    REQUIRE(series_dims(derived_series(e6, c_d4)) == dims{20, 17, 16});
}

TEST_CASE("normalizer chains match the recorded exceptional values", "[series]") {
    ChevalleyAlgebra e8('E', 8, 3, Lattice::simply_connected);
    Subspace c = centralizer(e8, simple_support(e8, regular_support(8)));
    REQUIRE(normalizer_dims_of_derived_series(e8, c) == std::vector<int>{15, 18, 248});
}

TEST_CASE("derivation dimensions match the recorded exceptional values", "[series]") {
    ChevalleyAlgebra e6_sc('E', 6, 3, Lattice::simply_connected);
    Subspace c6s = centralizer(e6_sc, simple_support(e6_sc, regular_support(6)));
    REQUIRE(derivation_algebra(e6_sc, c6s, false).alg == 31);

    ChevalleyAlgebra e6_ad('E', 6, 3, Lattice::adjoint);
    Subspace c6a = centralizer(e6_ad, simple_support(e6_ad, regular_support(6)));
    REQUIRE(derivation_algebra(e6_ad, c6a, false).alg == 24);

    ChevalleyAlgebra e7_ad('E', 7, 2, Lattice::adjoint);
    Subspace c7a = centralizer(e7_ad, simple_support(e7_ad, regular_support(7)));
    REQUIRE(derivation_algebra(e7_ad, c7a, false).alg == 56);

    ChevalleyAlgebra e7_sc('E', 7, 2, Lattice::simply_connected);
    Subspace c7s = centralizer(e7_sc, simple_support(e7_sc, regular_support(7)));
    REQUIRE(derivation_algebra(e7_sc, c7s, false).alg == 62);

    ChevalleyAlgebra e8('E', 8, 2, Lattice::simply_connected);
    Subspace c8 = centralizer(e8, simple_support(e8, regular_support(8)));
    DerivationDims d8 = derivation_algebra(e8, c8);
    REQUIRE(d8.alg == 79);
    REQUIRE(d8.alg_prime == 74);
}
