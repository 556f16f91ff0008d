#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conic/borel.hpp"
#include "conic/faces.hpp"
#include "conic/projection.hpp"
#include "conic/rng.hpp"
#include "conic/zoo.hpp"

using namespace conic;

namespace {

Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

} // namespace

TEST_CASE("conic membership basics") {
    ConicSet full = ConicSet::full(2);
    ConicSet star = ConicSet::star(2);
    ConicSet zero = ConicSet::zero_only(2);
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        Eigen::VectorXd x = rng.gaussian_vector(2);
        CHECK(full.contains(x));
        CHECK(star.contains(x));
        CHECK(!zero.contains(x));
    }
    Eigen::VectorXd o = Eigen::VectorXd::Zero(2);
    CHECK(full.contains(o));
    CHECK(!star.contains(o));
    CHECK(zero.contains(o));

    ConicSet cap = ConicSet::cap(vec2(1, 0), 0.0);
    CHECK(cap.contains(vec2(1, 1)));
    CHECK(!cap.contains(vec2(-1, 0)));
    CHECK(!cap.contains(o));

    ConicSet compl_cap = ConicSet::complement(cap);
    CHECK(!compl_cap.contains(vec2(1, 1)));
    CHECK(compl_cap.contains(vec2(-1, 0)));
}

TEST_CASE("positive homogeneity of conic sets") {
    Rng rng(2);
    std::vector<ConicSet> sets = {
        ConicSet::full(3),
        ConicSet::star(3),
        ConicSet::zero_only(3),
        ConicSet::from_cone(zoo::orthant(3)),
        ConicSet::cap(Eigen::Vector3d(1, 1, 0), std::cos(0.7)),
        ConicSet::complement(ConicSet::cap(Eigen::Vector3d(0, 0, 1), 0.5)),
        ConicSet::union_of({ConicSet::from_cone(zoo::ray(3)), ConicSet::cap(Eigen::Vector3d(0, 1, 0), 0.9)}),
        ConicSet::predicate(3, [](const Eigen::VectorXd& x) { return x[0] + x[1] > 0; }),
    };
    for (const auto& m : sets) {
        for (int i = 0; i < 100; ++i) {
            Eigen::VectorXd x = rng.gaussian_vector(3);
            double lam = rng.next_uniform() * 10;
            if (lam == 0) lam = 0.5;
            CHECK(m.contains(x) == m.contains(lam * x));
        }
    }
}

TEST_CASE("bi-homogeneity of biconic sets") {
    Rng rng(3);
    Cone c = zoo::orthant(2);
    std::vector<BiconicSet> sets = {
        BiconicSet::full(2),
        BiconicSet::product_form(ConicSet::cap(vec2(1, 0), 0.2), ConicSet::from_cone(polar(c))),
        BiconicSet::lift(c),
        BiconicSet::lifted_skeleton(c, 1),
        rev(BiconicSet::lift(c)),
    };
    for (const auto& mm : sets) {
        for (int i = 0; i < 100; ++i) {
            // probe with Moreau pairs so lift kinds see both hits and misses
            MoreauPair p = project(c, rng.gaussian_vector(2));
            double lam = 0.1 + rng.next_uniform() * 9;
            double mu = 0.1 + rng.next_uniform() * 9;
            CHECK(mm.contains(p.primal, p.polar) == mm.contains(lam * p.primal, mu * p.polar));
        }
    }
}

TEST_CASE("biconic lift membership") {
    Cone c = zoo::orthant(2);
    BiconicSet lift = BiconicSet::lift(c);
    Rng rng(4);
    for (int i = 0; i < 10000; ++i) {
        MoreauPair p = project(c, rng.gaussian_vector(2));
        CHECK(lift.contains(p.primal, p.polar));
    }
    // (e1, e1) not in lift(ray e1): inner product 1
    BiconicSet liftray = BiconicSet::lift(zoo::ray(2));
    CHECK(!liftray.contains(vec2(1, 0), vec2(1, 0)));

    // lift of a subspace is L x L-perp
    Cone l = zoo::coordinate_subspace(3, 1);
    BiconicSet ll = BiconicSet::lift(l);
    BiconicSet prod =
        BiconicSet::product_form(ConicSet::from_cone(l), ConicSet::from_cone(polar(l)));
    Rng rng2(5);
    const Eigen::MatrixXd pl = Eigen::Vector3d(1, 0, 0) * Eigen::RowVector3d(1, 0, 0);
    for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXd a = rng2.gaussian_vector(3), b = rng2.gaussian_vector(3);
        Eigen::VectorXd xin = pl * a, xpin = b - pl * b;
        CHECK(ll.contains(xin, xpin));
        CHECK(prod.contains(xin, xpin));
        CHECK(ll.contains(a, b) == prod.contains(a, b));
    }
}

TEST_CASE("rev: involution, product swap, lift of polar") {
    Cone c = zoo::orthant(2);
    ConicSet m = ConicSet::cap(vec2(1, 0), 0.3);
    ConicSet mp = ConicSet::from_cone(polar(c));
    BiconicSet prod = BiconicSet::product_form(m, mp);
    BiconicSet r = rev(prod);
    REQUIRE(r.kind() == BiconicSet::Kind::Product);
    Rng rng(6);
    for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXd a = rng.gaussian_vector(2), b = rng.gaussian_vector(2);
        CHECK(r.contains(a, b) == prod.contains(b, a));
        CHECK(rev(r).contains(a, b) == prod.contains(a, b));
    }

    // rev(Lift(C)) = Lift(C~) on Moreau pairs of C~
    BiconicSet rl = rev(BiconicSet::lift(c));
    BiconicSet lp = BiconicSet::lift(polar(c));
    Cone cp = polar(c);
    for (int i = 0; i < 10000; ++i) {
        MoreauPair p = project(cp, rng.gaussian_vector(2));
        CHECK(rl.contains(p.primal, p.polar));
        CHECK(lp.contains(p.primal, p.polar));
    }
}

TEST_CASE("gl_action identities") {
    Cone c = zoo::orthant(2);
    RatMat eye = RatMat::identity(2);
    BiconicSet lift = BiconicSet::lift(c);
    BiconicSet same = gl_action(eye, lift);
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        MoreauPair p = project(c, rng.gaussian_vector(2));
        CHECK(same.contains(p.primal, p.polar) == lift.contains(p.primal, p.polar));
    }

    // orthogonal Q on a product maps componentwise
    RatMat q{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
    ConicSet capset = ConicSet::cap(vec2(1, 0), 0.2);
    BiconicSet prod = BiconicSet::product_form(capset, ConicSet::full(2));
    BiconicSet moved = gl_action(q, prod);
    REQUIRE(moved.kind() == BiconicSet::Kind::Product);
    Eigen::MatrixXd qf = q.to_eigen();
    for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXd x = rng.gaussian_vector(2);
        CHECK(moved.contains(qf * x, rng.gaussian_vector(2)) ==
              capset.contains(x));
    }

    // T Lift(C) = Lift(TC) on Moreau probes of TC
    RatMat t{{2, 0}, {0, 1}};
    Cone tc = linear_image(t, c);
    BiconicSet lift_tc = BiconicSet::lift(tc);
    BiconicSet t_lift = gl_action(t, BiconicSet::lift(c));
    for (int i = 0; i < 10000; ++i) {
        MoreauPair p = project(tc, rng.gaussian_vector(2));
        CHECK(lift_tc.contains(p.primal, p.polar));
        CHECK(t_lift.contains(p.primal, p.polar));
    }

    // T S_k(C) = S_k(TC) on probes
    BiconicSet sk_tc = BiconicSet::lifted_skeleton(tc, 1);
    BiconicSet t_sk = gl_action(t, BiconicSet::lifted_skeleton(c, 1));
    for (int i = 0; i < 5000; ++i) {
        MoreauPair p = project(tc, rng.gaussian_vector(2));
        CHECK(sk_tc.contains(p.primal, p.polar) == t_sk.contains(p.primal, p.polar));
    }
}

TEST_CASE("wedge and vee on structured sets") {
    Cone c = zoo::orthant(2);
    Cone d = zoo::half_space(2);

    // Lift(C) ^ Lift(D) = Lift(C cap D) on Moreau pairs of the intersection
    BiconicSet w = wedge(BiconicSet::lift(c), BiconicSet::lift(d));
    REQUIRE(w.kind() == BiconicSet::Kind::Lift);
    Cone inter = intersect(c, d);
    BiconicSet li = BiconicSet::lift(inter);
    Rng rng(8);
    for (int i = 0; i < 10000; ++i) {
        MoreauPair p = project(inter, rng.gaussian_vector(2));
        CHECK(w.contains(p.primal, p.polar));
        CHECK(li.contains(p.primal, p.polar));
    }

    // (M x R^d) ^ (N x R^d) = (M cap N) x R^d
    ConicSet m = ConicSet::cap(vec2(1, 0), 0.1);
    ConicSet n = ConicSet::cap(vec2(0, 1), 0.1);
    BiconicSet wp = wedge(BiconicSet::product_form(m, ConicSet::full(2)),
                          BiconicSet::product_form(n, ConicSet::full(2)));
    REQUIRE(wp.kind() == BiconicSet::Kind::Product);
    for (int i = 0; i < 2000; ++i) {
        Eigen::VectorXd x = rng.gaussian_vector(2), xp = rng.gaussian_vector(2);
        CHECK(wp.contains(x, xp) == (m.contains(x) && n.contains(x)));
    }

    // vee duality with rev: rev(M ^ N) = rev(M) v rev(N)
    BiconicSet mm = BiconicSet::product_form(ConicSet::from_cone(c), ConicSet::from_cone(polar(c)));
    BiconicSet nn = BiconicSet::product_form(ConicSet::from_cone(d), ConicSet::from_cone(polar(d)));
    BiconicSet lhs = rev(wedge(mm, nn));
    BiconicSet rhs = vee(rev(mm), rev(nn));
    for (int i = 0; i < 2000; ++i) {
        Eigen::VectorXd x = rng.gaussian_vector(2), xp = rng.gaussian_vector(2);
        CHECK(lhs.contains(x, xp) == rhs.contains(x, xp));
    }

    // raw predicates are not wedge-able
    BiconicSet pred = BiconicSet::predicate(
        2, [](const Eigen::VectorXd&, const Eigen::VectorXd&) { return true; });
    CHECK_THROWS_AS(wedge(pred, mm), UnsupportedKind);
}

TEST_CASE("non-lattice witness: wedge does not distribute over intersection") {
    // three pairwise independent lines in R^2
    RatMat b0(2, 1), b1(2, 1), bn(2, 1);
    b0(0, 0) = 1;
    b1(1, 0) = 1;
    bn(0, 0) = 1;
    bn(1, 0) = 1;
    Cone l0 = Cone::subspace(b0, 2), l1 = Cone::subspace(b1, 2), ln = Cone::subspace(bn, 2);

    BiconicSet m0 = BiconicSet::product_form(ConicSet::full(2), ConicSet::from_cone(l0));
    BiconicSet m1 = BiconicSet::product_form(ConicSet::full(2), ConicSet::from_cone(l1));
    BiconicSet nn = BiconicSet::product_form(ConicSet::full(2), ConicSet::from_cone(ln));

    // (M0 cap M1) ^ N = Full x N'
    BiconicSet inter01 =
        BiconicSet::product_form(ConicSet::full(2), ConicSet::from_cone(intersect(l0, l1)));
    BiconicSet left = wedge(inter01, nn);
    // (M0 ^ N) cap (M1 ^ N) = Full x R^2
    BiconicSet right = BiconicSet::intersection_of({wedge(m0, nn), wedge(m1, nn)});

    Eigen::VectorXd x = vec2(0.3, -0.8);
    Eigen::VectorXd witness = vec2(1, 0); // not on the line span(e1+e2)
    CHECK(!left.contains(x, witness));
    CHECK(right.contains(x, witness));
    // and on the line both agree
    CHECK(left.contains(x, vec2(2, 2)));
    CHECK(right.contains(x, vec2(2, 2)));
}

TEST_CASE("lift decompositions: exactly one face pair per Moreau sample") {
    Rng rng(9);
    for (auto& [name, c] : zoo::standard()) {
        if (c.ambient_dim() > 3) continue;
        CAPTURE(name);
        const FaceLattice& lat = c.lattice();
        Cone cp = polar(c);
        const ProjectionKit& kitp = cp.kit();
        Rng s = rng.child(std::hash<std::string>{}(name) & 0xffff);
        for (int i = 0; i < 10000; ++i) {
            MoreauPair p = project(c, s.gaussian_vector(c.ambient_dim()));
            int count = 0;
            for (const Face& f : lat.faces()) {
                // x in relint(C cap L) and x' in C~ cap L-perp
                bool in_relint = (f.id == p.primal_face);
                bool xp_in_lperp = true;
                if (f.dim > 0) {
                    Eigen::MatrixXd span = f.span_rows.transposed().to_eigen();
                    xp_in_lperp = (span.transpose() * p.polar).cwiseAbs().maxCoeff() <
                                  1e-9 * (1 + p.polar.norm());
                }
                bool xp_in_polar = kitp.member(p.polar, 1e-8);
                if (in_relint && xp_in_lperp && xp_in_polar) ++count;
            }
            REQUIRE(count == 1);
        }
    }
}

TEST_CASE("lifted skeleton membership matches classification") {
    Rng rng(10);
    Cone c = zoo::orthant(2);
    std::vector<BiconicSet> skel;
    for (int k = 0; k <= 2; ++k) skel.push_back(BiconicSet::lifted_skeleton(c, k));
    for (int i = 0; i < 20000; ++i) {
        MoreauPair p = project(c, rng.gaussian_vector(2));
        auto [k, id] = locate_skeleton(c, p.primal);
        (void)id;
        for (int j = 0; j <= 2; ++j) CHECK(skel[j].contains(p.primal, p.polar) == (j == k));
    }
}

TEST_CASE("biconic product identities") {
    Cone c = zoo::orthant(2);
    Cone d = zoo::half_space(2);
    Cone prod = product(c, d);
    BiconicSet lift_prod = BiconicSet::lift(prod);
    BiconicSet prod_lifts = biconic_product(BiconicSet::lift(c), BiconicSet::lift(d));
    Rng rng(11);
    for (int i = 0; i < 10000; ++i) {
        MoreauPair p = project(prod, rng.gaussian_vector(4));
        CHECK(lift_prod.contains(p.primal, p.polar));
        CHECK(prod_lifts.contains(p.primal, p.polar));
    }
    // rev distributes over the biconic product
    BiconicSet r1 = rev(prod_lifts);
    BiconicSet r2 = biconic_product(rev(BiconicSet::lift(c)), rev(BiconicSet::lift(d)));
    Cone prodp = polar(prod);
    for (int i = 0; i < 10000; ++i) {
        MoreauPair p = project(prodp, rng.gaussian_vector(4));
        CHECK(r1.contains(p.primal, p.polar));
        CHECK(r2.contains(p.primal, p.polar));
    }
}

TEST_CASE("almost surely in the lifted skeleton union") {
    Rng rng(12);
    Cone c = zoo::square_base();
    std::vector<BiconicSet> skel;
    for (int k = 0; k <= 3; ++k) skel.push_back(BiconicSet::lifted_skeleton(c, k));
    long misses = 0;
    const long n = 100000;
    for (long i = 0; i < n; ++i) {
        MoreauPair p = project(c, rng.gaussian_vector(3));
        bool in_union = false;
        for (const auto& s : skel)
            if (s.contains(p.primal, p.polar)) in_union = true;
        if (!in_union) ++misses;
    }
    CHECK(misses == 0);
}
