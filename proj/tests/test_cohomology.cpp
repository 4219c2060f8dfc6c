#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gkm/builtins.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "test_support.hpp"

using namespace gkm;
using namespace gkm::test;

namespace {

CongruenceSystem system_for(const GKMComplex& gc, const TheorySpec& spec, const std::string& seed = "") {
    auto out = filter_complex(gc.complex, seed);
    REQUIRE(out.status == FilterStatus::Ok);
    auto built = build_system(gc, out.filtration, spec);
    REQUIRE_MESSAGE(built.ok(), built.detail);
    return built.sys;
}

CohomologyClass tuple_class(const CongruenceSystem& sys, const std::vector<std::string>& texts) {
    CohomologyClass x{sys.spec, {}};
    for (const auto& t : texts) x.values.push_back(sys.spec.parse(t));
    return x;
}

CohomologyClass reconstruct(const CongruenceSystem& sys, const std::vector<BasisClass>& basis,
                            const std::vector<Coefficient>& coeffs) {
    CohomologyClass acc{sys.spec, std::vector<Coefficient>(static_cast<size_t>(sys.nverts()), sys.spec.zero())};
    for (size_t j = 0; j < basis.size(); ++j) acc = add_classes(acc, scale_class(basis[j].cls, coeffs[j]));
    return acc;
}

Coefficient random_coefficient(const TheorySpec& spec) {
    if (spec.theory == Theory::H) {
        IntPoly p(spec.rank);
        for (int t = 0; t < 3; ++t) {
            Expo e(static_cast<size_t>(spec.rank), 0);
            for (auto& v : e) v = static_cast<int32_t>(rand_int(0, 1));
            p.add_term(std::move(e), Int(rand_int(-2, 2)));
        }
        return Coefficient{std::move(p)};
    }
    if (spec.theory == Theory::K) {
        IntPoly p(spec.rank);
        for (int t = 0; t < 3; ++t) {
            Expo e(static_cast<size_t>(spec.rank), 0);
            for (auto& v : e) v = static_cast<int32_t>(rand_int(-1, 1));
            p.add_term(std::move(e), Int(rand_int(-2, 2)));
        }
        return Coefficient{std::move(p)};
    }
    auto ring = spec.lazard();
    IntPoly p(ring.nvars());
    for (int t = 0; t < 2; ++t) {
        Expo e(static_cast<size_t>(ring.nvars()), 0);
        e[static_cast<size_t>(rand_int(0, spec.rank - 1))] = static_cast<int32_t>(rand_int(0, 1));
        p.add_term(std::move(e), Int(rand_int(-2, 2)));
    }
    return Coefficient{TruncSeries(ring, std::move(p))};
}

CohomologyClass random_member(const CongruenceSystem& sys, const std::vector<BasisClass>& basis) {
    std::vector<Coefficient> coeffs;
    for (size_t j = 0; j < basis.size(); ++j) coeffs.push_back(random_coefficient(sys.spec));
    return reconstruct(sys, basis, coeffs);
}

}  // namespace

TEST_CASE("system shape and constant membership") {
    auto line = make_complete_gkm(2);
    auto sys = system_for(line, TheorySpec::make(Theory::H, 2));
    REQUIRE(sys.strata() == 2);
    CHECK(sys.at[0].empty());
    REQUIRE(sys.at[1].size() == 1);
    CHECK(sys.spec.render(sys.at[1][0].euler) == "y1 - y2");

    CHECK(is_member(sys, constant_class(sys.spec, sys.spec.parse("7"), 2)).member);
    CHECK(is_member(sys, tuple_class(sys, {"3", "3"})).member);
    CHECK(is_member(sys, tuple_class(sys, {"y1", "y2"})).member);

    auto bad = is_member(sys, tuple_class(sys, {"0", "1"}));
    CHECK_FALSE(bad.member);
    CHECK(bad.j == 1);
    CHECK(bad.s == 0);
    CHECK(bad.witness == "1");

    auto k3 = make_complete_gkm(3);
    auto sys3 = system_for(k3, TheorySpec::make(Theory::H, 3));
    REQUIRE(sys3.at[1].size() == 1);
    REQUIRE(sys3.at[2].size() == 2);
}

TEST_CASE("mismatched classes are rejected") {
    auto sys = system_for(make_complete_gkm(2), TheorySpec::make(Theory::H, 2));
    CohomologyClass wrong{TheorySpec::make(Theory::K, 2), {}};
    wrong.values = {wrong.spec.parse("1"), wrong.spec.parse("1")};
    CHECK_THROWS_AS(is_member(sys, wrong), input_error);
    CHECK_THROWS_AS(is_member(sys, tuple_class(sys, {"1"})), input_error);
}

TEST_CASE("single edge basis and elimination") {
    auto sys = system_for(make_complete_gkm(2), TheorySpec::make(Theory::H, 2));
    auto out = compute_basis(sys, 4);
    REQUIRE(out.ok());
    REQUIRE(out.classes.size() == 2);
    CHECK(sys.spec.render(out.classes[0].cls.values[0]) == "1");
    CHECK(sys.spec.render(out.classes[0].cls.values[1]) == "1");
    CHECK(sys.spec.render(out.classes[1].cls.values[0]) == "0");
    CHECK(sys.spec.render(out.classes[1].cls.values[1]) == "y1 - y2");

    auto dec = decompose(sys, out.classes, tuple_class(sys, {"y1", "y2"}));
    REQUIRE(dec.ok());
    CHECK(sys.spec.render(dec.coeffs[0]) == "y1");
    CHECK(sys.spec.render(dec.coeffs[1]) == "-1");

    auto non = decompose(sys, out.classes, tuple_class(sys, {"0", "1"}));
    CHECK(non.error == DecomposeError::not_a_member);
}

TEST_CASE("projective plane basis is the classical one") {
    auto sys = system_for(make_complete_gkm(3), TheorySpec::make(Theory::H, 3));
    auto out = compute_basis(sys, 6);
    REQUIRE(out.ok());
    REQUIRE(out.classes.size() == 3);
    const auto& phi1 = out.classes[1].cls;
    CHECK(sys.spec.render(phi1.values[0]) == "0");
    CHECK(sys.spec.render(phi1.values[1]) == "y1 - y2");
    CHECK(sys.spec.render(phi1.values[2]) == "y1 - y3");
    const auto& phi2 = out.classes[2].cls;
    CHECK(sys.spec.render(phi2.values[0]) == "0");
    CHECK(sys.spec.render(phi2.values[1]) == "0");
    CHECK(sys.spec.render(phi2.values[2]) == "y1*y2 - y1*y3 - y2*y3 + y3^2");

    auto again = compute_basis(sys, 6);
    REQUIRE(again.ok());
    for (size_t j = 0; j < out.classes.size(); ++j) CHECK(again.classes[j].cls == out.classes[j].cls);
}

TEST_CASE("basis classes vanish below their stratum and pass membership") {
    for (auto theory : {Theory::H, Theory::K}) {
        auto gc = make_fig3_complex(8, 4, 2, 2);
        auto sys = system_for(gc, TheorySpec::make(theory, 4));
        auto out = compute_basis(sys, 6);
        REQUIRE_MESSAGE(out.ok(), out.detail);
        REQUIRE(out.classes.size() == 4);
        for (int j = 0; j < 4; ++j) {
            const auto& phi = out.classes[static_cast<size_t>(j)].cls;
            CHECK(is_member(sys, phi).member);
            for (int s = 0; s < j; ++s)
                CHECK(sys.spec.is_zero(phi.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(s)])]));
            CHECK(phi.values[static_cast<size_t>(sys.filt.order[static_cast<size_t>(j)])] ==
                  sys.top[static_cast<size_t>(j)]);
        }
    }
}

TEST_CASE("products of basis classes decompose integrally and uniquely") {
    auto gc = make_fig3_complex(8, 4, 2, 2);
    for (auto theory : {Theory::H, Theory::K}) {
        auto sys = system_for(gc, TheorySpec::make(theory, 4));
        auto out = compute_basis(sys, 6);
        REQUIRE_MESSAGE(out.ok(), out.detail);
        for (size_t a = 0; a < out.classes.size(); ++a)
            for (size_t b = a; b < out.classes.size(); ++b) {
                auto prod = mul_classes(out.classes[a].cls, out.classes[b].cls);
                auto dec = decompose(sys, out.classes, prod);
                REQUIRE_MESSAGE(dec.ok(), dec.detail);
                CHECK(reconstruct(sys, out.classes, dec.coeffs) == prod);
            }
        for (size_t a = 0; a < out.classes.size(); ++a) {
            auto dec = decompose(sys, out.classes, out.classes[a].cls);
            REQUIRE(dec.ok());
            for (size_t b = 0; b < dec.coeffs.size(); ++b)
                CHECK(sys.spec.render(dec.coeffs[b]) == (a == b ? "1" : "0"));
        }
    }
}

TEST_CASE("decomposition recovers arbitrary coefficient tuples") {
    auto sys = system_for(make_fig3_complex(1, 1, 1, 1), TheorySpec::make(Theory::H, 4));
    auto out = compute_basis(sys, 6);
    REQUIRE(out.ok());
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Coefficient> coeffs;
        for (int j = 0; j < 4; ++j) coeffs.push_back(random_coefficient(sys.spec));
        auto x = reconstruct(sys, out.classes, coeffs);
        auto dec = decompose(sys, out.classes, x);
        REQUIRE_MESSAGE(dec.ok(), dec.detail);
        for (int j = 0; j < 4; ++j) CHECK(dec.coeffs[static_cast<size_t>(j)] == coeffs[static_cast<size_t>(j)]);
    }
}

TEST_CASE("members are closed under sum and product") {
    struct Case {
        GKMComplex gc;
        Theory theory;
    };
    std::vector<Case> cases;
    cases.push_back({make_fig3_complex(8, 4, 2, 2), Theory::H});
    cases.push_back({make_fig3_complex(8, 4, 2, 2), Theory::K});
    cases.push_back({make_complete_gkm(2), Theory::MU});
    for (const auto& c : cases) {
        auto sys = system_for(c.gc, TheorySpec::make(c.theory, c.gc.rank, 3));
        auto out = compute_basis(sys, 6);
        REQUIRE_MESSAGE(out.ok(), out.detail);
        for (int trial = 0; trial < 15; ++trial) {
            auto x = random_member(sys, out.classes);
            auto y = random_member(sys, out.classes);
            CHECK(is_member(sys, add_classes(x, y)).member);
            CHECK(is_member(sys, mul_classes(x, y)).member);
        }
    }
}

TEST_CASE("Laurent carrier basis") {
    auto sys = system_for(make_complete_gkm(2), TheorySpec::make(Theory::K, 2));
    auto out = compute_basis(sys, 4);
    REQUIRE_MESSAGE(out.ok(), out.detail);
    CHECK(sys.spec.render(out.classes[0].cls.values[0]) == "1");
    CHECK(sys.spec.render(out.classes[1].cls.values[0]) == "0");
    CHECK(out.classes[1].cls.values[1] == sys.spec.parse("1 - z1*z2^-1"));

    auto square = mul_classes(out.classes[1].cls, out.classes[1].cls);
    auto dec = decompose(sys, out.classes, square);
    REQUIRE_MESSAGE(dec.ok(), dec.detail);
    CHECK(reconstruct(sys, out.classes, dec.coeffs) == square);
}

TEST_CASE("series basis degenerates onto the polynomial one") {
    for (auto gc : {make_complete_gkm(2), make_fig3_complex(1, 1, 1, 1)}) {
        auto mu_sys = system_for(gc, TheorySpec::make(Theory::MU, gc.rank, 3));
        auto h_sys = system_for(gc, TheorySpec::make(Theory::H, gc.rank));
        auto mu_out = compute_basis(mu_sys, 6);
        auto h_out = compute_basis(h_sys, 6);
        REQUIRE_MESSAGE(mu_out.ok(), mu_out.detail);
        REQUIRE_MESSAGE(h_out.ok(), h_out.detail);
        size_t pairs = mu_sys.spec.lazard().pairs.size();
        std::vector<Int> zeros(pairs, Int(0));
        for (size_t j = 0; j < mu_out.classes.size(); ++j)
            for (int v = 0; v < mu_sys.nverts(); ++v) {
                auto projected = mu_out.classes[j].cls.values[static_cast<size_t>(v)].series().specialize(zeros);
                CHECK(projected == h_out.classes[j].cls.values[static_cast<size_t>(v)].int_poly());
            }
    }
}

TEST_CASE("graded ranks match the direct lattice computation") {
    auto sys = system_for(make_complete_gkm(2), TheorySpec::make(Theory::H, 2));
    auto out = compute_basis(sys, 4);
    REQUIRE(out.ok());
    CHECK(graded_rank(sys, out.classes, 3) == std::vector<int>{1, 3, 5, 7});

    auto sys3 = system_for(make_complete_gkm(3), TheorySpec::make(Theory::H, 3));
    auto out3 = compute_basis(sys3, 6);
    REQUIRE(out3.ok());
    auto ranks = graded_rank(sys3, out3.classes, 4);
    CHECK(ranks[0] == 1);
    CHECK(ranks[1] == 4);  // three monomials above the point class plus the degree-1 class

    CHECK_THROWS_AS(graded_rank(system_for(make_complete_gkm(2), TheorySpec::make(Theory::K, 2)), out.classes, 2),
                    input_error);
}

TEST_CASE("the degree slice of the member lattice is spanned by the basis") {
    auto sys = system_for(make_complete_gkm(3), TheorySpec::make(Theory::H, 3));
    auto out = compute_basis(sys, 6);
    REQUIRE(out.ok());
    for (int d = 0; d <= 4; ++d) {
        auto direct = member_lattice(sys, d);
        auto spanned = basis_degree_lattice(sys, out.classes, d);
        CHECK(direct == spanned);
    }
}

TEST_CASE("non-divisive data is rejected for integral carriers but not rational ones") {
    auto gc = make_fig3_complex(2, 3, 1, 1);
    auto filt = filter_complex(gc.complex, "v0");
    REQUIRE(filt.status == FilterStatus::Ok);

    auto integral = build_system(gc, filt.filtration, TheorySpec::make(Theory::H, 4));
    CHECK(integral.error == SystemError::not_divisive);
    CHECK(integral.detail.find("v1 -> v0") != std::string::npos);

    auto rational = build_system(gc, filt.filtration, TheorySpec::make(Theory::H, 4, 3, true));
    REQUIRE_MESSAGE(rational.ok(), rational.detail);
    auto out = compute_basis(rational.sys, 6);
    REQUIRE_MESSAGE(out.ok(), out.detail);
    for (const auto& bc : out.classes) CHECK(is_member(rational.sys, bc.cls).member);
    auto prod = mul_classes(out.classes[1].cls, out.classes[2].cls);
    auto dec = decompose(rational.sys, out.classes, prod);
    REQUIRE_MESSAGE(dec.ok(), dec.detail);
    CHECK(reconstruct(rational.sys, out.classes, dec.coeffs) == prod);
}

TEST_CASE("parallel divisors at one vertex are refused") {
    auto triangle = make_complex({"a", "b", "c"}, {{"all", {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}}});
    WeightedProjectiveSpec spec;
    spec.rank = 1;
    spec.weights = {1, 1, 1};
    spec.characters = {{Int{0}}, {Int{1}}, {Int{2}}};
    auto gc = make_weighted_gkm(spec, triangle);
    auto filt = filter_complex(gc.complex, "a");
    REQUIRE(filt.status == FilterStatus::Ok);
    auto built = build_system(gc, filt.filtration, TheorySpec::make(Theory::H, 1));
    CHECK(built.error == SystemError::coprimality);
    CHECK(built.detail.find("'c'") != std::string::npos);
}

TEST_CASE("congruences with no integral solution are reported honestly") {
    CongruenceSystem sys;
    sys.spec = TheorySpec::make(Theory::H, 1);
    sys.labels = {"a", "b", "c"};
    sys.filt.order = {0, 1, 2};
    sys.filt.position = {0, 1, 2};
    sys.filt.added = {{}, {{0, 1}}, {{0, 2}, {1, 2}}};
    sys.filt.d = {0, 1, 2};
    auto euler = [&](Int m) { return sys.spec.euler_class({m}); };
    sys.at = {{}, {{0, {Int(1)}, euler(1)}}, {{0, {Int(2)}, euler(2)}, {1, {Int(2)}, euler(2)}}};
    sys.top = {sys.spec.one(), euler(1), sys.spec.mul(euler(2), euler(2))};

    auto out = compute_basis(sys, 4);
    CHECK(out.error == BasisError::no_integral_extension);
    CHECK(out.detail.find("'b'") != std::string::npos);
    CHECK(out.detail.find("'c'") != std::string::npos);
}
