#include <doctest.h>

#include "chronon/entropy.hpp"
#include "chronon/sot.hpp"
#include "helpers.hpp"

using namespace chronon;

namespace {

double scalar_eta(double x, double base = 2.0) {
    return (std::abs(x) < 1e-15) ? 0.0 : -x * std::log(std::abs(x)) / std::log(base);
}

MatrixC subadditivity_counterexample() {
    double s5 = std::sqrt(5.0);
    MatrixC m(4, 4);
    m << -6, s5, s5, 0, //
        s5, 8, 0, s5,   //
        s5, 0, 8, s5,   //
        0, s5, s5, 2;
    return m / 12.0;
}

} // namespace

TEST_SUITE("entropy") {

TEST_CASE("quasi-distribution entropy") {
    CHECK(ent::qdist_entropy(QuasiDist({0.5, 0.5})) == doctest::Approx(1.0));
    CHECK(ent::qdist_entropy(QuasiDist({1.0, 0.0})) == doctest::Approx(0.0));
    double expected = scalar_eta(1.5) + scalar_eta(-0.5);
    CHECK(ent::qdist_entropy(QuasiDist({1.5, -0.5})) == doctest::Approx(expected));
    CHECK(expected == doctest::Approx(-1.3774437510817341));
    CHECK_THROWS_AS(QuasiDist({0.5, 0.1}), PreconditionViolated);
}

TEST_CASE("extended entropy of pure states vanishes") {
    rnd::SplitMix64 gen(3);
    VectorC v = ens::haar_pure(4, gen);
    AlgElement rho = AlgElement::from_matrix(v * v.adjoint());
    CHECK(std::abs(ent::ext_entropy(rho)) < 1e-10);
}

TEST_CASE("subadditivity counterexample") {
    MatrixC rho_ab = subadditivity_counterexample();
    MatrixC ra = la::partial_trace(rho_ab, 2, 2, la::Factor::Right);
    MatrixC rb = la::partial_trace(rho_ab, 2, 2, la::Factor::Left);
    MatrixC expected_marginal(2, 2);
    expected_marginal << 1, std::sqrt(5.0), std::sqrt(5.0), 5;
    expected_marginal /= 6.0;
    CHECK(test::max_abs_diff(ra, expected_marginal) < 1e-12);
    CHECK(test::max_abs_diff(rb, expected_marginal) < 1e-12);
    CHECK(std::abs(ent::ext_entropy(AlgElement::from_matrix(ra))) < 1e-9);
    CHECK(std::abs(ent::ext_entropy(AlgElement::from_matrix(rb))) < 1e-9);

    double s_nat = ent::ext_entropy(AlgElement::from_matrix(rho_ab), LogBase::e());
    CHECK(s_nat == doctest::Approx(0.29).epsilon(0.05)); // natural-log value
    double s_bits = ent::ext_entropy(AlgElement::from_matrix(rho_ab));
    CHECK(s_bits > 0.1); // subadditivity fails under either base
}

TEST_CASE("EPR symmetric bloom entropy") {
    AlgElement sym = sot_fn::sot(SotKind::sym_bloom(), test::epr_partial_trace_process()).value;
    double expected = std::log2(4.0 / (3.0 * std::sqrt(3.0)));
    CHECK(ent::ext_entropy(sym) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("even extension") {
    // identity process on a pure qubit: odd extension gives 0, even gives log 2
    MatrixC plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    Process proc(AlgElement::from_matrix(plus), ch::identity(AlgebraShape::matrix(2)));
    AlgElement sym = sot_fn::sot(SotKind::sym_bloom(), proc).value;
    CHECK(ent::even_entropy(sym) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ent::ext_entropy(sym)) < 1e-10);
    CHECK(ent::even_entropy(sym) - ent::ext_entropy(sym) == doctest::Approx(1.0).epsilon(1e-9));

    AlgElement rho = AlgElement::from_matrix(test::rand_state(3, 7));
    CHECK(ent::even_entropy(rho) == doctest::Approx(ent::ext_entropy(rho)).epsilon(1e-10));

    MatrixC q = test::rand_hermitian(3, 8);
    q /= q.trace().real();
    double oracle = 0.0;
    for (double l : la::mspec(q)) oracle += scalar_eta(std::abs(l));
    CHECK(ent::even_entropy(AlgElement::from_matrix(q)) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("orthogonal affinity") {
    std::vector<MatrixC> parts{la::unit(0, 0, 2), la::unit(1, 1, 2)};
    CHECK(ent::orthogonal_affinity_check(QuasiDist({0.5, 0.5}), parts) < 1e-12);

    // random orthogonal family from a Haar frame
    MatrixC u = ens::haar_unitary(4, 11);
    std::vector<MatrixC> fam;
    fam.push_back(u.col(0) * u.col(0).adjoint());
    fam.push_back(u.col(1) * u.col(1).adjoint());
    MatrixC mix = 0.5 * (u.col(2) * u.col(2).adjoint()) + 0.5 * (u.col(3) * u.col(3).adjoint());
    fam.push_back(mix);
    CHECK(ent::orthogonal_affinity_check(QuasiDist({0.2, 0.5, 0.3}), fam) < 1e-10);

    std::vector<MatrixC> overlap{la::unit(0, 0, 2), la::unit(0, 0, 2)};
    CHECK_THROWS_AS(ent::orthogonal_affinity_check(QuasiDist({0.5, 0.5}), overlap), NotOrthogonal);
}

TEST_CASE("PVM blocks reproduce the closed-form entropy") {
    MatrixC b1(2, 2), b2(2, 2);
    b1 << 1, -0.5, -0.5, 0;
    b2 << 0, -0.5, -0.5, 1;
    double s1 = ent::ext_entropy(AlgElement::from_matrix(b1));
    double s2 = ent::ext_entropy(AlgElement::from_matrix(b2));
    double total = 1.0 + 0.5 * s1 + 0.5 * s2; // H(1/2,1/2) + weighted parts
    double closed = 2.0 + (std::sqrt(2.0) / 2.0) *
                              std::log2((std::sqrt(2.0) - 1.0) / (std::sqrt(2.0) + 1.0));
    CHECK(total == doctest::Approx(closed).epsilon(1e-10));
}

TEST_CASE("fannes bound") {
    AlgElement a = AlgElement::from_matrix(test::rand_state(3, 13));
    auto same = ent::fannes_check(a, a);
    CHECK(same.applicable);
    CHECK(same.lhs <= same.rhs + 1e-12);
    CHECK(same.lhs < 1e-12);

    for (std::uint64_t s = 0; s < 30; ++s) {
        MatrixC base = test::rand_state(3, 1000 + s);
        MatrixC pert = test::rand_hermitian(3, 2000 + s);
        pert -= (pert.trace() / 3.0) * MatrixC::Identity(3, 3);
        MatrixC other = base + 0.02 * pert;
        AlgElement ea = AlgElement::from_matrix(base);
        AlgElement eb = AlgElement::from_matrix(other);
        auto rep = ent::fannes_check(ea, eb);
        if (!rep.applicable) continue;
        CHECK(rep.lhs <= rep.rhs + 1e-10);
    }

    MatrixC qa = MatrixC::Zero(2, 2), qb = MatrixC::Zero(2, 2);
    qa(0, 0) = 1.4;
    qa(1, 1) = -0.4;
    qb(0, 0) = 0.4;
    qb(1, 1) = 0.6;
    auto gate = ent::fannes_check(AlgElement::from_matrix(qa), AlgElement::from_matrix(qb));
    CHECK(!gate.applicable); // opposite-sign eigenvalue pair
}

TEST_CASE("causality monotone") {
    Process epr = test::epr_partial_trace_process();
    AlgElement sym = sot_fn::sot(SotKind::sym_bloom(), epr).value;
    AlgElement ls = sot_fn::sot(SotKind::ls(), epr).value;
    CHECK(ent::causality_monotone(sym) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ent::causality_monotone(ls)) < 1e-10);
    CHECK(std::abs(ent::causality_monotone(AlgElement::from_matrix(test::rand_state(4, 17)))) <
          1e-9);
}

TEST_CASE("causality monotone properties") {
    rnd::SplitMix64 gen(19);
    for (int rep = 0; rep < 10; ++rep) {
        MatrixC q = test::rand_hermitian(3, 3000 + static_cast<std::uint64_t>(rep));
        q /= q.trace().real();
        AlgElement quasi = AlgElement::from_matrix(q);
        double c = ent::causality_monotone(quasi);
        CHECK(c >= -1e-12);

        MatrixC u = ens::haar_unitary(3, 3100 + static_cast<std::uint64_t>(rep));
        AlgElement rotated = AlgElement::from_matrix(u * q * u.adjoint());
        CHECK(ent::causality_monotone(rotated) == doctest::Approx(c).epsilon(1e-9));

        Channel e = ens::random_channel(3, 2, 2, 3200 + static_cast<std::uint64_t>(rep));
        CHECK(ent::causality_monotone(e.apply(quasi)) <= c + 1e-9);

        MatrixC q2 = test::rand_hermitian(3, 3300 + static_cast<std::uint64_t>(rep));
        q2 /= q2.trace().real();
        double lam = gen.uniform();
        AlgElement mixed = AlgElement::from_matrix(lam * q + (1 - lam) * q2);
        CHECK(ent::causality_monotone(mixed) <=
              lam * c + (1 - lam) * ent::causality_monotone(AlgElement::from_matrix(q2)) + 1e-9);
    }
}

TEST_CASE("isometric invariance, additivity, extension") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        MatrixC a = test::rand_hermitian(3, 100 + s);
        MatrixC u = ens::haar_unitary(3, 200 + s);
        AlgElement ea = AlgElement::from_matrix(a);
        AlgElement rot = AlgElement::from_matrix(u * a * u.adjoint());
        CHECK(ent::ext_entropy(ea) == doctest::Approx(ent::ext_entropy(rot)).epsilon(1e-8));

        // additivity holds on quasi-states (unit traces)
        a /= a.trace().real();
        ea = AlgElement::from_matrix(a);
        MatrixC b = test::rand_hermitian(2, 300 + s);
        b /= b.trace().real();
        double joint = ent::ext_entropy(AlgElement::from_matrix(la::kron(a, b)));
        CHECK(joint == doctest::Approx(ent::ext_entropy(ea) +
                                       ent::ext_entropy(AlgElement::from_matrix(b)))
                           .epsilon(1e-8));

        MatrixC rho = test::rand_state(4, 400 + s);
        double oracle = 0.0; // direct von Neumann sum
        for (double l : la::mspec(rho))
            if (l > 1e-12) oracle -= l * std::log2(l);
        CHECK(ent::ext_entropy(AlgElement::from_matrix(rho)) ==
              doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("direct-sum decomposition") {
    AlgebraShape sh({2, 3});
    AlgElement e = AlgElement::zero(sh);
    double p0 = 0.35, p1 = 0.65;
    MatrixC r0 = test::rand_state(2, 21), r1 = test::rand_state(3, 22);
    e.block(0) = p0 * r0;
    e.block(1) = p1 * r1;
    double lhs = ent::ext_entropy(e);
    double rhs = ent::qdist_entropy(QuasiDist({p0, p1})) +
                 p0 * ent::ext_entropy(AlgElement::from_matrix(r0)) +
                 p1 * ent::ext_entropy(AlgElement::from_matrix(r1));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("entropy rejects non-hermitian input") {
    MatrixC bad(2, 2);
    bad << 1, 1, 0, 0;
    CHECK_THROWS_AS(ent::ext_entropy(AlgElement::from_matrix(bad)), NonHermitianInput);
    CHECK_THROWS_AS(ent::causality_monotone(AlgElement::from_matrix(bad)), NonHermitianInput);
}

} // TEST_SUITE
