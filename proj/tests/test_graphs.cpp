#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/graphs.hpp"

using namespace gkm;

namespace {

using E = std::pair<std::string, std::string>;

Graph octahedron() {
    return make_graph({"b0", "b1", "b2", "b3", "b4", "b5"},
                      {{"b0", "b1"}, {"b0", "b2"}, {"b0", "b3"}, {"b0", "b4"},
                       {"b5", "b1"}, {"b5", "b2"}, {"b5", "b3"}, {"b5", "b4"},
                       {"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"b1", "b4"}});
}

GraphComplex triangle_with_rectangle() {
    return make_complex({"b0", "b1", "b2", "b3", "b4"},
                        {{"triangle", {"b0", "b1", "b3"}, {{"b0", "b1"}, {"b1", "b3"}, {"b0", "b3"}}},
                         {"rectangle", {"b0", "b1", "b2", "b4"}, {{"b0", "b1"}, {"b0", "b2"}, {"b2", "b4"}, {"b1", "b4"}}},
                         {"side", {"b0", "b1"}, {{"b0", "b1"}}}});
}

GraphComplex triangle_of_sides() {
    return make_complex({"b0", "b1", "b2"},
                        {{"", {"b0", "b1"}, {{"b0", "b1"}}},
                         {"", {"b1", "b2"}, {{"b1", "b2"}}},
                         {"", {"b0", "b2"}, {{"b0", "b2"}}}});
}

std::vector<std::string> order_labels(const Graph& g, const Filtration& f) {
    std::vector<std::string> out;
    for (int v : f.order) out.push_back(g.labels[static_cast<size_t>(v)]);
    return out;
}

void check_filtration_shape(const Graph& g, const Filtration& f) {
    REQUIRE(f.order.size() == g.labels.size());
    for (size_t pos = 0; pos < f.order.size(); ++pos)
        CHECK(f.position[static_cast<size_t>(f.order[pos])] == static_cast<int>(pos));
    size_t total = 0;
    for (size_t j = 0; j < f.added.size(); ++j) {
        CHECK(f.d[j] == static_cast<int>(f.added[j].size()));
        total += f.added[j].size();
        int prev = -1;
        for (const auto& [down, fresh] : f.added[j]) {
            CHECK(fresh == f.order[j]);
            CHECK(g.has_edge(down, fresh));
            int p = f.position[static_cast<size_t>(down)];
            CHECK(p < static_cast<int>(j));
            CHECK(p > prev);
            prev = p;
        }
    }
    CHECK(total == g.edges.size());
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(make_graph({}, {}), input_error);
    CHECK_THROWS_AS(make_graph({"a", "a"}, {}), input_error);
    CHECK_THROWS_AS(make_graph({"a", ""}, {}), input_error);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{"a", "c"}}), input_error);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{"a", "a"}}), input_error);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), input_error);
}

TEST_CASE("regularity and connectivity") {
    auto path = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(is_regular(path));
    CHECK(is_connected(path));

    int valence = -1;
    auto cycle = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    CHECK(is_regular(cycle, &valence));
    CHECK(valence == 2);

    auto split = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(is_regular(split));
    CHECK_FALSE(is_connected(split));

    CHECK(is_regular(octahedron(), &valence));
    CHECK(valence == 4);
}

TEST_CASE("octahedron filtration from each pole") {
    auto g = octahedron();
    auto out = filter_regular(g, "b0");
    REQUIRE(out.status == FilterStatus::Ok);
    CHECK(order_labels(g, out.filtration) == std::vector<std::string>{"b0", "b1", "b2", "b3", "b4", "b5"});
    CHECK(out.filtration.d == std::vector<int>{0, 1, 2, 2, 3, 4});
    check_filtration_shape(g, out.filtration);

    auto other = filter_regular(g, "b5");
    REQUIRE(other.status == FilterStatus::Ok);
    CHECK(other.filtration.d == std::vector<int>{0, 1, 2, 2, 3, 4});
    check_filtration_shape(g, other.filtration);
}

TEST_CASE("complete graphs climb one step per vertex") {
    std::vector<std::string> labels{"v1", "v2", "v3", "v4", "v5"};
    std::vector<E> edges;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j) edges.emplace_back(labels[i], labels[j]);
    auto g = make_graph(labels, edges);
    auto out = filter_regular(g, "v1");
    REQUIRE(out.status == FilterStatus::Ok);
    CHECK(out.filtration.d == std::vector<int>{0, 1, 2, 3, 4});
    check_filtration_shape(g, out.filtration);
}

TEST_CASE("default seed is the smallest label") {
    auto g = make_graph({"m", "a", "x"}, {{"m", "a"}, {"a", "x"}, {"m", "x"}});
    auto out = filter_regular(g, "");
    REQUIRE(out.status == FilterStatus::Ok);
    CHECK(g.labels[static_cast<size_t>(out.filtration.order[0])] == "a");
    CHECK_THROWS_AS(filter_regular(g, "q"), input_error);
}

TEST_CASE("single vertex filters trivially") {
    auto g = make_graph({"v"}, {});
    auto out = filter_regular(g, "v");
    REQUIRE(out.status == FilterStatus::Ok);
    CHECK(out.filtration.d == std::vector<int>{0});
}

TEST_CASE("disconnected graphs are rejected up front") {
    auto split = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    auto out = filter_regular(split, "a");
    CHECK(out.status == FilterStatus::Disconnected);
}

TEST_CASE("complex construction rejects malformed members") {
    CHECK_THROWS_AS(make_complex({"a", "b"}, {}), input_error);
    CHECK_THROWS_AS(make_complex({"a", "b"}, {{"m", {}, {}}}), input_error);
    CHECK_THROWS_AS(make_complex({"a", "b"}, {{"m", {"a", "a"}, {}}}), input_error);
    CHECK_THROWS_AS(make_complex({"a", "b", "c"}, {{"m", {"a", "b"}, {{"a", "c"}}}}), input_error);
    CHECK_THROWS_AS(make_complex({"a", "b"}, {{"m", {"a", "b"}, {{"a", "b"}}}, {"m", {"a"}, {}}}), input_error);
    CHECK_THROWS_AS(make_complex({"a", "b"}, {{"m1", {"a", "b"}, {{"a", "b"}}}, {"m2", {"a", "b"}, {{"a", "b"}}}}),
                    input_error);
}

TEST_CASE("complex axioms") {
    CHECK(validate_complex(triangle_with_rectangle()).ok);
    CHECK(validate_complex(triangle_of_sides()).ok);

    auto no_shared_side = make_complex(
        {"a", "b", "c", "d"},
        {{"t1", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}},
         {"t2", {"a", "b", "d"}, {{"a", "b"}, {"b", "d"}, {"a", "d"}}}});
    auto report = validate_complex(no_shared_side);
    CHECK_FALSE(report.ok);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].find("intersection") != std::string::npos);

    auto with_side = make_complex(
        {"a", "b", "c", "d"},
        {{"t1", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}},
         {"t2", {"a", "b", "d"}, {{"a", "b"}, {"b", "d"}, {"a", "d"}}},
         {"side", {"a", "b"}, {{"a", "b"}}}});
    CHECK(validate_complex(with_side).ok);

    auto lopsided = make_complex({"a", "b", "c"}, {{"path", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}}});
    auto lop_report = validate_complex(lopsided);
    CHECK_FALSE(lop_report.ok);
    CHECK(lop_report.issues[0].find("regular") != std::string::npos);

    auto torn = make_complex({"a", "b", "c", "d"}, {{"m", {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}}});
    auto torn_report = validate_complex(torn);
    CHECK_FALSE(torn_report.ok);
    CHECK(torn_report.issues[0].find("connected") != std::string::npos);

    auto stray = make_complex({"a", "b", "c"}, {{"m", {"a", "b"}, {{"a", "b"}}}});
    auto stray_report = validate_complex(stray);
    CHECK_FALSE(stray_report.ok);
    CHECK(stray_report.issues[0].find("no member") != std::string::npos);
}

TEST_CASE("five vertex complex filters with the expected profile") {
    auto c = triangle_with_rectangle();
    auto g = c.total();
    auto out = filter_complex(c, "b0");
    REQUIRE(out.status == FilterStatus::Ok);
    CHECK(order_labels(g, out.filtration) == std::vector<std::string>{"b0", "b1", "b2", "b3", "b4"});
    CHECK(out.filtration.d == std::vector<int>{0, 1, 1, 2, 2});
    check_filtration_shape(g, out.filtration);

    auto from_b2 = filter_complex(c, "b2");
    REQUIRE(from_b2.status == FilterStatus::Ok);
    CHECK(from_b2.filtration.d == std::vector<int>{0, 1, 1, 2, 2});
    check_filtration_shape(g, from_b2.filtration);
}

TEST_CASE("a triangle of bare sides has no filtration") {
    auto c = triangle_of_sides();
    for (const char* seed : {"b0", "b1", "b2"}) {
        auto out = filter_complex(c, seed);
        CHECK(out.status == FilterStatus::NoFiltration);
        CHECK(out.detail.find("no member contains") != std::string::npos);
    }
}

TEST_CASE("the search backtracks over earlier choices") {
    // square plus one diagonal held only by a separate side member: growing
    // a, b first strands the remaining vertices, growing a, c works
    auto c = make_complex({"a", "b", "c", "d"},
                          {{"square", {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}},
                           {"chord", {"a", "c"}, {{"a", "c"}}}});
    CHECK(validate_complex(c).ok);
    auto out = filter_complex(c, "a");
    REQUIRE(out.status == FilterStatus::Ok);
    auto g = c.total();
    CHECK(order_labels(g, out.filtration) == std::vector<std::string>{"a", "c", "b", "d"});
    CHECK(out.filtration.d == std::vector<int>{0, 1, 2, 2});
    check_filtration_shape(g, out.filtration);
}

TEST_CASE("a one member complex filters exactly like its graph") {
    for (const Graph& g : {octahedron(), make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
                           make_graph({"p", "q", "r", "s"}, {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "p"}})}) {
        auto direct = filter_regular(g, "");
        auto lifted = filter_complex(complex_of_graph(g), "");
        REQUIRE(direct.status == FilterStatus::Ok);
        REQUIRE(lifted.status == FilterStatus::Ok);
        CHECK(direct.filtration.order == lifted.filtration.order);
        CHECK(direct.filtration.d == lifted.filtration.d);
        CHECK(direct.filtration.added == lifted.filtration.added);
    }
}

TEST_CASE("member intersections") {
    auto c = triangle_with_rectangle();
    auto common = intersect(c.members[0], c.members[1]);
    CHECK(common.vertices == std::vector<int>{0, 1});
    CHECK(common.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(common.same_underlying(c.members[2]));
}
