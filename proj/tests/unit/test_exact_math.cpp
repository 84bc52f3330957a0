#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eigenone/algebraic.hpp"

using namespace eigenone;

namespace {

Cyclo z(long n, long e = 1) { return Cyclo::zeta(n, e); }
Cyclo rat(long p, long q = 1) { return Cyclo(Rational(p, q)); }

Mat mat2(long a, long b, long c, long d) {
    Mat m(2, 2);
    m.at(0, 0) = rat(a);
    m.at(0, 1) = rat(b);
    m.at(1, 0) = rat(c);
    m.at(1, 1) = rat(d);
    return m;
}

Poly poly_from_ints(std::initializer_list<long> asc) {
    std::vector<Cyclo> c;
    for (long v : asc) c.push_back(rat(v));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic field operations") {
    CHECK(z(4) * z(4) == rat(-1));
    CHECK(z(5) + z(5, 2) + z(5, 3) + z(5, 4) == rat(-1));
    Cyclo d = z(3) - z(3, 2);
    CHECK(d * d == rat(-3));

    CHECK(z(8, 2) == z(4));                    // zeta_8^2 canonicalizes
    CHECK(z(6) == -z(3, 2));                   // conductor 2 mod 4 eliminated
    CHECK((z(12) * z(12).inverse()) == rat(1));
    CHECK_THROWS(Cyclo().inverse());

    // conj is an involutive ring homomorphism
    Cyclo a = z(12) + rat(2) * z(12, 5);
    Cyclo b = z(12, 7) - rat(1, 3);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
}

TEST_CASE("cyclotomic ring axioms on random samples") {
    std::mt19937 rng(7);
    auto rnd = [&]() {
        long n = std::vector<long>{3, 4, 5, 8, 12}[rng() % 5];
        Cyclo v;
        for (int i = 0; i < 3; ++i)
            v += Cyclo(Rational((long)(rng() % 7) - 3)) * Cyclo::zeta(n, rng() % n);
        return v;
    };
    for (int t = 0; t < 25; ++t) {
        Cyclo a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("sign_of under the real embedding") {
    CHECK(sign_of(Cyclo()) == 0);
    CHECK(sign_of(z(5) + z(5, 4)) == 1);   // 2cos(72 deg) > 0
    CHECK(sign_of(z(3) + z(3, 2)) == -1);  // 2cos(120 deg) = -1
    CHECK_THROWS(sign_of(z(5)));
    // golden ratio combination: zeta5 + zeta5^-1 - 1 = 2cos72 - 1 < 0
    CHECK(sign_of(z(5) + z(5, 4) - rat(1)) == -1);
}

TEST_CASE("charpoly") {
    CHECK(Mat::identity(3).charpoly() == poly_from_ints({-1, 3, -3, 1}));
    Mat d(2, 2);
    d.at(0, 0) = rat(2);
    d.at(1, 1) = rat(3);
    CHECK(d.charpoly() == poly_from_ints({6, -5, 1}));
    // companion matrix of x^3 - 2
    Mat c(3, 3);
    c.at(0, 2) = rat(2);
    c.at(1, 0) = rat(1);
    c.at(2, 1) = rat(1);
    CHECK(c.charpoly() == poly_from_ints({-2, 0, 0, 1}));
    CHECK_THROWS(Mat(2, 3).charpoly());
}

TEST_CASE("Cayley-Hamilton on random small matrices") {
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        long n = 2 + rng() % 3;
        Mat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m.at(i, j) = rat((long)(rng() % 7) - 3);
        Poly p = m.charpoly();
        Mat acc(n, n);
        Mat power = Mat::identity(n);
        for (long i = 0; i <= p.degree(); ++i) {
            acc = acc + power.scaled(p[i]);
            power = power * m;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("nullspace") {
    auto [r0, b0] = Mat(2, 2).nullspace();
    CHECK(r0 == 0);
    CHECK(b0.size() == 2);
    auto [r1, b1] = Mat::identity(3).nullspace();
    CHECK(r1 == 3);
    CHECK(b1.empty());
    Mat m = mat2(1, 1, 1, 1);
    auto [r2, b2] = m.nullspace();
    CHECK(r2 == 1);
    REQUIRE(b2.size() == 1);
    // M v = 0
    auto col = apply_to_vec_as_col(m, b2[0]);
    CHECK(col.is_zero());
}

TEST_CASE("poly_gcd") {
    Poly a = poly_from_ints({-1, 0, 1});      // x^2-1
    Poly b = poly_from_ints({-1, 0, 0, 1});   // x^3-1
    CHECK(poly_gcd(a, b) == poly_from_ints({-1, 1}));
    CHECK(poly_gcd(poly_from_ints({1, 0, 1}), a) == poly_from_ints({1}));
    Poly p = poly_from_ints({-2, 1}) * poly_from_ints({-2, 1}) * poly_from_ints({1, 1});
    Poly q = poly_from_ints({-2, 1}) * poly_from_ints({3, 1});
    Poly g = poly_gcd(p, q);
    CHECK(g == poly_from_ints({-2, 1}));
    CHECK(p.divmod(g).second.is_zero());
    CHECK(q.divmod(g).second.is_zero());
    CHECK_THROWS(poly_gcd(Poly(), Poly()));
}

TEST_CASE("sturm_count") {
    Poly x2m2 = poly_from_ints({-2, 0, 1});
    CHECK(sturm_count(x2m2, Bound::at(Rational(0)), Bound::pos_inf()) == 1);
    CHECK(sturm_count(poly_from_ints({1, 0, 1}), Bound::neg_inf(), Bound::pos_inf()) == 0);
    CHECK(sturm_count(poly_from_ints({0, -1, 0, 1}), Bound::neg_inf(), Bound::pos_inf()) == 3);
    CHECK_THROWS(sturm_count(poly_from_ints({-2, 1}) * poly_from_ints({-2, 1}), Bound::neg_inf(),
                             Bound::pos_inf()));
    // closed/open endpoint handling at a root
    CHECK(sturm_count(x2m2, Bound::at(Rational(0)), Bound::at(Rational(2))) == 1);
    CHECK(sturm_count(poly_from_ints({0, 1}), Bound::at(Rational(0), false),
                      Bound::at(Rational(1))) == 1);
    CHECK(sturm_count(poly_from_ints({0, 1}), Bound::at(Rational(0), true),
                      Bound::at(Rational(1))) == 0);
}

TEST_CASE("has_algebraic_eigenvalue basics") {
    RadicalReal one{rat(1), 1, 1};
    RadicalReal minus_one{rat(1), 1, -1};
    CHECK(has_algebraic_eigenvalue(Mat::identity(3), one));
    CHECK_FALSE(has_algebraic_eigenvalue(Mat::identity(3).scaled(rat(-1)), one));
    CHECK(has_algebraic_eigenvalue(Mat::identity(3).scaled(rat(-1)), minus_one));
    Mat m = mat2(0, 2, 1, 0);
    RadicalReal sqrt2{rat(2), 2, 1};
    CHECK(has_algebraic_eigenvalue(m, sqrt2));
    RadicalReal neg_sqrt2{rat(2), 2, -1};
    CHECK(has_algebraic_eigenvalue(m, neg_sqrt2));
    RadicalReal sqrt3{rat(3), 2, 1};
    CHECK_FALSE(has_algebraic_eigenvalue(m, sqrt3));
    RadicalReal bad{rat(-1), 2, 1};
    CHECK_THROWS(has_algebraic_eigenvalue(m, bad));
}

TEST_CASE("sign_at_radical") {
    RadicalReal sqrt2{rat(2), 2, 1};
    CHECK(sign_at_radical(poly_from_ints({-2, 0, 1}), sqrt2) == 0);
    CHECK(sign_at_radical(poly_from_ints({-1, 1}), sqrt2) == 1);   // sqrt2 - 1 > 0
    CHECK(sign_at_radical(poly_from_ints({-2, 1}), sqrt2) == -1);  // sqrt2 - 2 < 0
    RadicalReal cbrt2_neg{rat(2), 3, -1};
    CHECK(sign_at_radical(poly_from_ints({0, 1}), cbrt2_neg) == -1);
}

TEST_CASE("exact vs floating point eigenvalue cross-check") {
    // Spot-check version of the acceptance-scale property.
    std::mt19937 rng(2024);
    for (int t = 0; t < 60; ++t) {
        long n = 2 + rng() % 5;
        Mat m(n, n);
        std::vector<std::vector<double>> md(n, std::vector<double>(n));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                long v = (long)(rng() % 9) - 4;
                m.at(i, j) = rat(v);
                md[i][j] = (double)v;
            }
        // target theta = 1: compare against float charpoly evaluation near 1
        RadicalReal one{rat(1), 1, 1};
        bool exact = has_algebraic_eigenvalue(m, one);
        // float oracle: |det(I - M)| tiny  <=>  1 is an eigenvalue (integer matrix)
        // determinant via LU on doubles
        std::vector<std::vector<double>> a = md;
        for (long i = 0; i < n; ++i) a[i][i] -= 1.0;
        double det = 1.0;
        for (long col = 0; col < n; ++col) {
            long pr = col;
            for (long r = col; r < n; ++r)
                if (std::abs(a[r][col]) > std::abs(a[pr][col])) pr = r;
            if (std::abs(a[pr][col]) < 1e-12) { det = 0.0; break; }
            if (pr != col) { std::swap(a[pr], a[col]); det = -det; }
            det *= a[col][col];
            for (long r = col + 1; r < n; ++r) {
                double f = a[r][col] / a[col][col];
                for (long j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            }
        }
        CHECK(exact == (std::abs(det) < 1e-9));
    }
}
