#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "conic/cone.hpp"
#include "conic/faces.hpp"
#include "conic/projection.hpp"
#include "conic/rng.hpp"
#include "conic/zoo.hpp"

using namespace conic;

TEST_CASE("face lattice of subspaces: single face") {
    Cone l = zoo::coordinate_subspace(3, 2);
    const FaceLattice& lat = l.lattice();
    CHECK(lat.faces().size() == 1);
    CHECK(lat.faces()[0].dim == 2);
    CHECK(f_vector(l) == std::vector<long>{0, 0, 1, 0});
}

TEST_CASE("f-vector examples") {
    CHECK(f_vector(zoo::orthant(3)) == std::vector<long>{1, 3, 3, 1});
    CHECK(f_vector(zoo::half_space(2)) == std::vector<long>{0, 1, 1});
    CHECK(f_vector(zoo::orthant(2)) == std::vector<long>{1, 2, 1});
    CHECK(f_vector(zoo::square_base()) == std::vector<long>{1, 4, 4, 1});
    CHECK(f_vector(Cone::full_space(2)) == std::vector<long>{0, 0, 1});
    CHECK(f_vector(Cone::origin(2)) == std::vector<long>{1, 0, 0});
}

TEST_CASE("f-vector polarity and Euler identity on the zoo") {
    for (auto& [name, c] : zoo::standard()) {
        CAPTURE(name);
        auto f = f_vector(c);
        auto fp = f_vector(polar(c));
        std::size_t d = c.ambient_dim();
        for (std::size_t k = 0; k <= d; ++k) CHECK(f[k] == fp[d - k]);
        if (!c.is_subspace()) {
            long alt = 0;
            for (std::size_t k = 0; k <= d; ++k) alt += (k % 2 ? -1 : 1) * f[k];
            CHECK(alt == 0);
        }
    }
}

TEST_CASE("f-vector of products is the convolution") {
    Cone a = zoo::orthant(2);
    Cone b = zoo::ray(1);
    auto fa = f_vector(a), fb = f_vector(b), fp = f_vector(product(a, b));
    for (std::size_t k = 0; k < fp.size(); ++k) {
        long conv = 0;
        for (std::size_t i = 0; i <= k; ++i)
            if (i < fa.size() && k - i < fb.size()) conv += fa[i] * fb[k - i];
        CHECK(fp[k] == conv);
    }

    Cone sq = zoo::square_base();
    Cone hs = zoo::half_space(2);
    auto fs = f_vector(sq), fh = f_vector(hs), fps = f_vector(product(sq, hs));
    for (std::size_t k = 0; k < fps.size(); ++k) {
        long conv = 0;
        for (std::size_t i = 0; i <= k; ++i)
            if (i < fs.size() && k - i < fh.size()) conv += fs[i] * fh[k - i];
        CHECK(fps[k] == conv);
    }
}

TEST_CASE("spans_k") {
    Cone full = Cone::full_space(3);
    auto top = spans_k(full, 3);
    REQUIRE(top.size() == 1);
    CHECK(top[0].span_dim() == 3);

    auto s1 = spans_k(zoo::orthant(2), 1);
    REQUIRE(s1.size() == 2);
    std::set<int> axes;
    for (auto& l : s1) {
        CHECK(l.is_subspace());
        CHECK(l.span_dim() == 1);
        const RatMat& g = l.generators();
        for (std::size_t j = 0; j < g.cols(); ++j)
            for (int i = 0; i < 2; ++i)
                if (g(i, j) != 0) axes.insert(i);
    }
    CHECK(axes == std::set<int>{0, 1});

    for (auto& [name, c] : zoo::standard()) {
        CAPTURE(name);
        auto f = f_vector(c);
        for (std::size_t k = 0; k <= c.ambient_dim(); ++k)
            CHECK(spans_k(c, static_cast<int>(k)).size() == static_cast<std::size_t>(f[k]));
    }
}

TEST_CASE("polar bijection on spans: L -> complement(L)") {
    for (auto& [name, c] : zoo::standard()) {
        CAPTURE(name);
        std::size_t d = c.ambient_dim();
        Cone cp = polar(c);
        const FaceLattice& latp = cp.lattice();
        for (std::size_t k = 0; k <= d; ++k) {
            for (auto& l : spans_k(c, static_cast<int>(k))) {
                // complement span must be a face span of the polar
                RatMat comp = null_space(row_space_basis(l.generators().transposed())).transposed();
                CHECK(latp.face_by_span(row_space_basis(comp)) >= 0);
            }
        }
    }
}

TEST_CASE("ell vector") {
    auto ell = ell_vector(zoo::half_space(3));
    CHECK(ell == std::vector<long>{0, 0, 1, 0});
    CHECK(ell_vector(zoo::orthant(2)) == std::vector<long>{1, 0, 0});
    // l_0 = f_0 on every zoo cone
    for (auto& [name, c] : zoo::standard()) {
        (void)name;
        CHECK(ell_vector(c)[0] == f_vector(c)[0]);
    }
}

TEST_CASE("locate_skeleton examples") {
    Cone q = zoo::orthant(2);
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
    auto [k0, f0] = locate_skeleton(q, zero);
    CHECK(k0 == 0);
    CHECK(f0 == q.lattice().minimal_face());

    Eigen::VectorXd e1(2);
    e1 << 1, 0;
    auto [k1, f1] = locate_skeleton(q, e1);
    CHECK(k1 == 1);
    const Face& face1 = q.lattice().face(f1);
    CHECK(face1.span_rows.rows() == 1);
    CHECK(face1.span_rows(0, 0) == 1);
    CHECK(face1.span_rows(0, 1) == 0);

    Eigen::VectorXd interior(2);
    interior << 1, 2;
    CHECK(locate_skeleton(q, interior).first == 2);

    Eigen::VectorXd outside(2);
    outside << -1, -1;
    CHECK_THROWS_AS(locate_skeleton(q, outside), NotInCone);
}

TEST_CASE("partition: projections always land in exactly one relative interior") {
    Rng rng(17);
    for (auto& [name, c] : zoo::standard()) {
        CAPTURE(name);
        Rng s = rng.child(std::hash<std::string>{}(name) & 0xffff);
        int ambiguous = 0;
        for (int i = 0; i < 10000; ++i) {
            Eigen::VectorXd x = s.gaussian_vector(c.ambient_dim());
            try {
                MoreauPair p = project(c, x);
                auto [k, id] = locate_skeleton(c, p.primal);
                (void)k;
                CHECK(id == p.primal_face);
            } catch (const AmbiguousProjection&) {
                ++ambiguous;
            }
        }
        CHECK(ambiguous == 0);
    }
}

TEST_CASE("product lattice: spans are pairwise products") {
    Cone a = zoo::orthant(2);
    Cone b = zoo::ray(1);
    Cone prod = product(a, b);
    const FaceLattice& lat = prod.lattice();

    std::set<std::string> expected;
    for (std::size_t i = 0; i <= 2; ++i) {
        for (auto& la : spans_k(a, static_cast<int>(i))) {
            for (std::size_t j = 0; j <= 1; ++j) {
                for (auto& lb : spans_k(b, static_cast<int>(j))) {
                    // block span in R^3
                    RatMat rows(0, 3);
                    const RatMat& ga = la.generators();
                    for (std::size_t col = 0; col < ga.cols(); ++col) {
                        std::vector<Rational> r(3);
                        r[0] = ga(0, col);
                        r[1] = ga(1, col);
                        rows.append_row(r);
                    }
                    const RatMat& gb = lb.generators();
                    for (std::size_t col = 0; col < gb.cols(); ++col) {
                        std::vector<Rational> r(3);
                        r[2] = gb(0, col);
                        rows.append_row(r);
                    }
                    expected.insert(span_key(row_space_basis(rows)));
                }
            }
        }
    }
    std::set<std::string> actual;
    for (const auto& f : lat.faces()) actual.insert(span_key(f.span_rows));
    CHECK(actual == expected);
}

TEST_CASE("skeleton of product: indices add") {
    Cone a = zoo::orthant(2);
    Cone b = zoo::half_space(2);
    Cone prod = product(a, b);
    Rng rng(19);
    for (int i = 0; i < 2000; ++i) {
        Eigen::VectorXd x = rng.gaussian_vector(4);
        MoreauPair p = project(prod, x);
        auto [kp, idp] = locate_skeleton(prod, p.primal);
        (void)idp;
        auto [ka, ida] = locate_skeleton(a, p.primal.head(2));
        auto [kb, idb] = locate_skeleton(b, p.primal.tail(2));
        (void)ida;
        (void)idb;
        CHECK(kp == ka + kb);
    }
}

TEST_CASE("is_general_position: exact examples") {
    Cone zero = Cone::origin(2);
    Cone anything = zoo::orthant(2);
    CHECK(is_general_position({zero, anything}));

    Cone e1 = zoo::coordinate_subspace(2, 1);
    CHECK(!is_general_position({e1, e1}));

    RatMat b2(2, 1);
    b2(1, 0) = 1;
    Cone e2 = Cone::subspace(b2, 2);
    CHECK(is_general_position({e1, e2}));
}

TEST_CASE("random rotations are almost surely generic") {
    Rng rng(23);
    Cone c = zoo::orthant(3);
    Cone d = zoo::half_space(3);
    int generic = 0;
    for (int trial = 0; trial < 100; ++trial) {
        RatMat q = RatMat::from_eigen_exact(rng.haar_orthogonal(3));
        if (is_general_position({linear_image(q, c), d})) ++generic;
    }
    CHECK(generic == 100);
}

TEST_CASE("generic skeleton intersection: indices satisfy k = k0 + k1 - d") {
    Rng rng(29);
    Cone c0 = zoo::orthant(3);
    Cone c1 = zoo::half_space(3);
    for (int trial = 0; trial < 20; ++trial) {
        RatMat q = RatMat::from_eigen_exact(rng.haar_orthogonal(3));
        Cone rc1 = linear_image(q, c1);
        REQUIRE(is_general_position({c0, rc1}));
        Cone inter = intersect(c0, rc1);
        for (int i = 0; i < 200; ++i) {
            Eigen::VectorXd x = rng.gaussian_vector(3);
            MoreauPair p = project(inter, x);
            auto [k, id] = locate_skeleton(inter, p.primal);
            (void)id;
            if (k == 0) continue; // origin: component indices not pinned
            auto [k0, i0] = locate_skeleton(c0, p.primal);
            auto [k1, i1] = locate_skeleton(rc1, p.primal);
            (void)i0;
            (void)i1;
            CHECK(k == k0 + k1 - 3);
        }
    }
}
