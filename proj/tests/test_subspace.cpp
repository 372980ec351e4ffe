#include <cmath>
#include <random>

#include "doctest.h"
#include "bidisc/subspace.hpp"
#include "support/generators.hpp"

using namespace bidisc;

namespace {

SymVector mix_e0_e1() {
    SymVector v = SymVector::zero(1);
    v.coords[0] = 1.0 / std::sqrt(2.0);
    v.coords[1] = 1.0 / std::sqrt(2.0);
    return v;
}

SymVector p1_unnormalized() {
    SymVector v = SymVector::zero(1);
    v.coords[1] = std::sqrt(2.0);  // p_1 = sqrt(2) e_1
    return v;
}

}  // namespace

TEST_CASE("ordered two-pass orthonormalization") {
    Frame dup = orthonormalize({SymVector::basis(0), SymVector::basis(0)});
    CHECK(dup.rank() == 1);
    CHECK(sub(dup.vectors[0], SymVector::basis(0)).norm() < 1e-15);
    CHECK(dup.source_count == 2);

    Frame two = orthonormalize({add(SymVector::basis(0), SymVector::basis(1)),
                                sub(SymVector::basis(0), SymVector::basis(1))});
    CHECK(two.rank() == 2);
    CHECK(gram_defect(two) < 1e-14);

    Frame p1 = orthonormalize({p1_unnormalized()});
    CHECK(p1.rank() == 1);
    CHECK(sub(p1.vectors[0], SymVector::basis(1)).norm() < 1e-15);

    CHECK_THROWS_AS(orthonormalize({}), EmptySpanError);
    CHECK_THROWS_AS(orthonormalize({SymVector::zero(3)}), EmptySpanError);

    // deterministic including phase: a rotated input yields the same frame
    std::mt19937_64 rng(401);
    SymVector v = testsupport::random_sym(rng, 7);
    Frame a = orthonormalize({v});
    Frame b = orthonormalize({scale(std::polar(1.0, 2.1), v)});
    CHECK(sub(a.vectors[0], b.vectors[0]).norm() < 1e-13);
}

TEST_CASE("invariant-subspace generation") {
    InvariantModel chain = generate_invariant({SymVector::basis(1)}, 5);
    CHECK(chain.basis.rank() == 5);
    for (int n = 1; n <= 5; ++n)
        CHECK(contains(chain.basis, SymVector::basis(n), 1e-12).inside);
    CHECK_FALSE(contains(chain.basis, SymVector::basis(0), 1e-12).inside);

    InvariantModel whole = generate_invariant({SymVector::basis(0)}, 12);
    CHECK(whole.basis.rank() == 13);

    InvariantModel partial = generate_invariant({SymVector::basis(2)}, 4);
    CHECK(partial.basis.rank() == 3);

    CHECK_THROWS_AS(generate_invariant({SymVector::basis(6)}, 5), CapExceededError);

    // every model passes its own invariance check
    std::mt19937_64 rng(402);
    for (int rep = 0; rep < 5; ++rep) {
        InvariantModel m = generate_invariant({testsupport::random_sym(rng, 3)}, 15);
        CHECK(invariance_residual(m) <= 1e-10);
        for (const SymVector& g : m.generators)
            CHECK(contains(m.basis, g, 1e-10).inside);
    }
}

TEST_CASE("wandering subspace extraction") {
    Frame w1 = wandering_of(generate_invariant({SymVector::basis(1)}, 10));
    CHECK(w1.rank() == 1);
    CHECK(sub(w1.vectors[0], SymVector::basis(1)).norm() < 1e-13);

    Frame w0 = wandering_of(generate_invariant({SymVector::basis(0)}, 10));
    CHECK(w0.rank() == 1);
    CHECK(sub(w0.vectors[0], SymVector::basis(0)).norm() < 1e-13);
}

TEST_CASE("zero-set model and its extremal vector") {
    InvariantModel m = zero_set_model({Complex{0.5, 0.0}}, 40);
    CHECK(m.basis.rank() == 40);
    CHECK(m.generators.size() == 40);

    // generators vanish at the zero (checked in Bergman coordinates)
    for (const SymVector& g : m.generators) {
        BergmanPoly b = to_bergman(g);
        Complex val{0.0, 0.0};
        for (int n = b.deg; n >= 0; --n) val = val * Complex{0.5, 0.0} + b.at(n);
        CHECK(std::abs(val) < 1e-12);
    }

    Frame w = wandering_of(m);
    REQUIRE(w.rank() == 1);
    const SymVector& q = w.vectors[0];
    // the truncated extremal satisfies radial-sum constancy to truncation error
    CHECK(radial_constancy(q, 1e-8).passed);
    // it is orthogonal to the shifted generators
    for (size_t j = 1; j < m.generators.size(); ++j)
        CHECK(std::abs(inner(q, m.generators[j])) < 1e-10 * m.generators[j].norm());

    CHECK_THROWS_AS(zero_set_model({}, 10), std::invalid_argument);
    CHECK_THROWS_AS(zero_set_model({Complex{1.5, 0.0}}, 10), std::invalid_argument);
}

TEST_CASE("containment residuals") {
    Frame e0 = orthonormalize({SymVector::basis(0)});
    CHECK(contains(e0, SymVector::basis(0), 1e-12).inside);
    CHECK(contains(e0, SymVector::basis(0), 1e-12).residual < 1e-15);

    ContainsResult out = contains(e0, SymVector::basis(1), 1e-12);
    CHECK_FALSE(out.inside);
    CHECK(std::abs(out.residual - 1.0) < 1e-15);

    Frame diag = orthonormalize({mix_e0_e1()});
    ContainsResult half = contains(diag, SymVector::basis(0), 1e-12);
    CHECK_FALSE(half.inside);
    CHECK(std::abs(half.residual - 1.0 / std::sqrt(2.0)) < 1e-14);

    // zero vector is inside everything
    CHECK(contains(e0, SymVector::zero(5), 1e-12).inside);
}

TEST_CASE("minimality of the generated subspace") {
    // for genuinely wandering inputs the wandering frame comes back exactly
    for (int n : {0, 1, 2}) {
        InvariantModel m = generate_invariant({SymVector::basis(n)}, 20);
        Frame w = wandering_of(m);
        REQUIRE(w.rank() == 1);
        CHECK(contains(w, SymVector::basis(n), 1e-10).inside);
    }

    // a non-wandering generator leaves only a spurious direction at the cap
    InvariantModel m = generate_invariant({mix_e0_e1()}, 40);
    Frame w = wandering_of(m);
    REQUIRE(w.rank() == 1);
    CHECK_FALSE(contains(w, mix_e0_e1(), 1e-8).inside);
    CHECK(exact_degree(w.vectors[0]) > 40 - kWanderingGuard);
}

TEST_CASE("generation recovers the model for wandering generators") {
    for (int n : {1, 2}) {
        InvariantModel m = generate_invariant({SymVector::basis(n)}, 24);
        InvariantModel regen = generate_invariant(wandering_of(m), 24);
        for (const SymVector& v : m.basis.vectors)
            CHECK(contains(regen.basis, v, 1e-10).inside);
        CHECK(regen.basis.rank() == m.basis.rank());
    }
}

TEST_CASE("generation from the truncated extremal recovers interior degrees") {
    // The cap-40 extremal of the zero-set model has no shift headroom at cap
    // 40, so the regeneration runs with doubled headroom; interior generators
    // come back to truncation accuracy.
    InvariantModel m = zero_set_model({Complex{0.5, 0.0}}, 40);
    Frame w = wandering_of(m);
    REQUIRE(w.rank() == 1);
    InvariantModel regen = generate_invariant(w, 80);
    for (const SymVector& g : m.generators) {
        if (exact_degree(g) > 20) continue;
        CHECK(contains(regen.basis, g, 1e-8).inside);
    }
}

TEST_CASE("truncation decay of the extremal vector") {
    double prev = 1e300;
    for (int cap : {10, 20, 40}) {
        Frame wa = wandering_of(zero_set_model({Complex{0.5, 0.0}}, cap));
        Frame wb = wandering_of(zero_set_model({Complex{0.5, 0.0}}, 2 * cap));
        REQUIRE(wa.rank() == 1);
        REQUIRE(wb.rank() == 1);
        double diff = sub(resized(wa.vectors[0], 2 * cap), wb.vectors[0]).norm();
        CHECK(diff < prev);
        prev = diff;
    }
}

TEST_CASE("intermediate-subspace constructor premises") {
    Frame wn = orthonormalize({SymVector::basis(1)});

    // e_0 is orthogonal and individually wandering, but the pair fails
    CHECK_THROWS_WITH_AS(construct_intermediate(wn, SymVector::basis(0), 10),
                         doctest::Contains("cross_condition"), PremiseViolatedError);

    // not orthogonal
    CHECK_THROWS_WITH_AS(construct_intermediate(wn, SymVector::basis(1), 10),
                         doctest::Contains("orthogonal"), PremiseViolatedError);

    // not a unit vector
    CHECK_THROWS_WITH_AS(construct_intermediate(wn, scale(0.5, SymVector::basis(0)), 10),
                         doctest::Contains("unit"), PremiseViolatedError);

    // q_hat failing the single-vector criterion is named as such
    SymVector skew = SymVector::zero(3);
    skew.coords[0] = 0.6;
    skew.coords[3] = 0.8;
    try {
        construct_intermediate(wn, skew, 10);
        FAIL("expected PremiseViolatedError");
    } catch (const PremiseViolatedError& e) {
        CHECK(e.failed_check == "coeff_criterion");
    }

    // extremal-frame candidate: the gate names a premise rather than silently
    // constructing (orthogonal polynomial wandering pairs do not exist)
    Frame extremal = wandering_of(zero_set_model({Complex{0.5, 0.0}}, 20));
    SymVector cand = orthonormalize({project_residual(extremal, SymVector::basis(0))}).vectors[0];
    CHECK_THROWS_AS(construct_intermediate(extremal, cand, 20), PremiseViolatedError);

    // all premises hold for the degenerate empty frame; generation proceeds
    Frame empty;
    InvariantModel ok = construct_intermediate(empty, SymVector::basis(0), 10);
    CHECK(ok.basis.rank() == 11);
}
