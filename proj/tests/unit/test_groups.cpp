#include <catch2/catch_amalgamated.hpp>

#include "eigenone/automorphism.hpp"

using namespace eigenone;

namespace {

Perm cyc(long deg, std::initializer_list<std::initializer_list<long>> cycles) {
    std::vector<long> img(deg);
    std::iota(img.begin(), img.end(), 0L);
    for (auto c : cycles) {
        std::vector<long> pts(c);
        for (size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
    }
    return Perm(std::move(img));
}

PermGroup s3() { return PermGroup::from_generators({cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}, 3); }

PermGroup q8() {
    // Regular representation on {1,i,-1,-i,j,k,-j,-k} = points 0..7.
    Perm a = cyc(8, {{0, 1, 2, 3}, {4, 7, 6, 5}});  // right multiplication by i
    Perm b = cyc(8, {{0, 4, 2, 6}, {1, 5, 3, 7}});  // right multiplication by j
    return PermGroup::from_generators({a, b}, 8);
}

PermGroup cn(long n) {
    std::vector<long> img(n);
    for (long i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup::from_generators({Perm(std::move(img))}, n);
}

std::vector<long> class_sizes(const PermGroup& G) {
    std::vector<long> s;
    for (const auto& c : G.classes()) s.push_back(c.size);
    return s;
}

}  // namespace

TEST_CASE("closure and element enumeration") {
    CHECK(s3().order() == 6);
    CHECK(PermGroup::from_generators({}, 3).order() == 1);
    CHECK(q8().order() == 8);
    CHECK_THROWS(PermGroup::from_generators({cyc(5, {{0, 1, 2, 3, 4}})}, 5, 3));
    // identity is always element 0 and words multiply out correctly
    PermGroup G = s3();
    CHECK(G.element(0).is_identity());
    for (long i = 0; i < G.order(); ++i) {
        Perm p = Perm::identity(3);
        for (long gi : G.word(i)) p = p * G.generators()[gi];
        CHECK(p == G.element(i));
    }
}

TEST_CASE("conjugacy classes") {
    CHECK(class_sizes(s3()) == std::vector<long>{1, 2, 3});
    CHECK(class_sizes(cn(4)) == std::vector<long>{1, 1, 1, 1});
    CHECK(class_sizes(q8()) == std::vector<long>{1, 1, 2, 2, 2});
    PermGroup G = s3();
    long total = 0;
    for (const auto& c : G.classes()) {
        total += c.size;
        CHECK(G.order() % c.size == 0);
        CHECK(c.size * G.centralizer_order(c.representative) == G.order());
    }
    CHECK(total == G.order());
}

TEST_CASE("centralizers and center") {
    PermGroup G = s3();
    CHECK(G.centralizer_order(0) == 6);
    long transposition = G.index_of(cyc(3, {{0, 1}}));
    CHECK(G.centralizer_order(transposition) == 2);
    PermGroup Q = q8();
    auto z = Q.center();
    CHECK(z.size() == 2);
    for (long i : z) CHECK(Q.centralizer_order(i) == 8);
}

TEST_CASE("fixed subgroups of automorphisms") {
    PermGroup G = s3();
    CHECK(fixed_subgroup(G, Automorphism::identity_map(G)).order() == 6);

    PermGroup C5 = cn(5);
    Automorphism inv5 = Automorphism::from_gen_images(C5, {C5.generators()[0].inverse()});
    CHECK(fixed_subgroup(C5, inv5).order() == 1);

    PermGroup C3xC3 =
        PermGroup::from_generators({cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}})}, 6);
    Automorphism swap_factors = Automorphism::from_gen_images(
        C3xC3, {C3xC3.generators()[1], C3xC3.generators()[0]});
    CHECK(fixed_subgroup(C3xC3, swap_factors).order() == 3);
}

TEST_CASE("automorphism groups") {
    PermGroup V = PermGroup::from_generators({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}, 4);
    CHECK(automorphism_group(V).size() == 6);

    PermGroup G3 = s3();
    auto auts3 = automorphism_group(G3);
    CHECK(auts3.size() == 6);
    for (const auto& a : auts3) CHECK(is_inner(a));

    CHECK(automorphism_group(cn(5)).size() == 4);
    CHECK_THROWS(automorphism_group(cn(5), 3));
}

TEST_CASE("outer classes fixing a class function") {
    PermGroup C3 = cn(3);
    auto auts = automorphism_group(C3);  // order 2: identity and inversion
    REQUIRE(auts.size() == 2);
    std::vector<int> trivial_chi(C3.class_count(), 1);
    CHECK(outer_classes_fixing_char(C3, auts, trivial_chi).size() == 2);
    // a "class function" separating g from g^-1: only identity survives
    std::vector<int> separating(C3.class_count());
    for (long c = 0; c < C3.class_count(); ++c) separating[c] = (int)c;
    auto reps = outer_classes_fixing_char(C3, auts, separating);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].is_identity());

    PermGroup G = s3();
    auto autsS3 = automorphism_group(G);
    std::vector<int> sign_chi;
    for (const auto& cl : G.classes())
        sign_chi.push_back(G.element(cl.representative).order() == 2 ? -1 : 1);
    CHECK(outer_classes_fixing_char(G, autsS3, sign_chi).size() == 1);
}

TEST_CASE("extended group carrier") {
    PermGroup C3 = cn(3);
    auto eg_id = build_extended(C3, Automorphism::identity_map(C3));
    CHECK(eg_id.carrier.order() == 3);
    CHECK(eg_id.coset_count() == 1);

    Automorphism inv = Automorphism::from_gen_images(C3, {C3.generators()[0].inverse()});
    auto eg = build_extended(C3, inv);
    CHECK(eg.carrier.order() == 6);
    CHECK_FALSE(eg.carrier.is_abelian());  // holomorph of C3 is S3

    PermGroup V = PermGroup::from_generators({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}, 4);
    // 3-cycle on the involutions: a -> b -> ab -> a
    Automorphism rot = Automorphism::from_gen_images(
        V, {V.generators()[1], V.generators()[0] * V.generators()[1]});
    CHECK(rot.order() == 3);
    auto egV = build_extended(V, rot);
    CHECK(egV.carrier.order() == 12);  // V extended by a 3-cycle is A4
    CHECK_FALSE(egV.carrier.is_abelian());

    auto cosets = eg.coset_autos();
    CHECK(cosets.size() == 1);  // C3 abelian: every ad_g is trivial
    for (const auto& [g, a] : cosets) CHECK(a.order() == 2);
}

TEST_CASE("solvability") {
    PermGroup S4 =
        PermGroup::from_generators({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, 4);
    CHECK(S4.order() == 24);
    CHECK(S4.is_solvable());
    PermGroup A5 =
        PermGroup::from_generators({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}, 5);
    CHECK(A5.order() == 60);
    CHECK_FALSE(A5.is_solvable());
    CHECK(q8().is_solvable());
}

TEST_CASE("normal subgroups and quotients") {
    PermGroup S4 =
        PermGroup::from_generators({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, 4);
    auto normals = S4.normal_subgroups();
    std::vector<long> sizes;
    for (const auto& n : normals) sizes.push_back((long)n.size());
    CHECK(sizes == std::vector<long>{1, 4, 12, 24});

    // quotient of C6 by its C2 gives C3
    PermGroup C6 = cn(6);
    long g3 = C6.index_of(C6.generators()[0] * C6.generators()[0] * C6.generators()[0]);
    auto sub = C6.closure_of({g3});
    CHECK(sub.size() == 2);
    PermGroup Q = quotient_group(C6, sub);
    CHECK(Q.order() == 3);
}

TEST_CASE("characteristic structure") {
    PermGroup A5 =
        PermGroup::from_generators({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}, 5);
    // |A5| = 60 > default automorphism bound workaround: inner automorphisms
    // suffice for invariance testing of normal subgroups.
    std::vector<Automorphism> inner_only;
    for (long g = 0; g < A5.order(); ++g) inner_only.push_back(Automorphism::inner(A5, g));
    auto cs = characteristic_structure(A5, inner_only);
    CHECK(cs.char_simple);
    REQUIRE(cs.direct_power_of_simple.has_value());
    CHECK(cs.direct_power_of_simple->first.order() == 60);
    CHECK(cs.direct_power_of_simple->second == 1);

    PermGroup C6 = cn(6);
    auto autsC6 = automorphism_group(C6);
    auto cs6 = characteristic_structure(C6, autsC6);
    CHECK_FALSE(cs6.char_simple);
    std::vector<long> sizes;
    for (const auto& s : cs6.proper_characteristic) sizes.push_back((long)s.size());
    CHECK(sizes == std::vector<long>{2, 3});

    PermGroup A5xA5 = PermGroup::from_generators(
        {cyc(10, {{0, 1, 2, 3, 4}}), cyc(10, {{0, 1, 2}}), cyc(10, {{5, 6, 7, 8, 9}}),
         cyc(10, {{5, 6, 7}})},
        10);
    CHECK(A5xA5.order() == 3600);
    // the factor swap is the automorphism that rules out the two A5 factors
    // as characteristic subgroups
    Automorphism swap2 = Automorphism::from_gen_images(
        A5xA5, {A5xA5.generators()[2], A5xA5.generators()[3], A5xA5.generators()[0],
                A5xA5.generators()[1]});
    auto cs2 = characteristic_structure(A5xA5, {Automorphism::identity_map(A5xA5), swap2});
    CHECK(cs2.char_simple);
    REQUIRE(cs2.direct_power_of_simple.has_value());
    CHECK(cs2.direct_power_of_simple->first.order() == 60);
    CHECK(cs2.direct_power_of_simple->second == 2);
}
