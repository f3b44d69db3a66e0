#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "walklen/filtration.hpp"
#include "walklen/generators.hpp"
#include "walklen/io.hpp"
#include "walklen/persistence.hpp"

using namespace walklen;
using namespace walklen::test;

TEST_CASE("value formatting") {
    CHECK(format_value(kInf) == "inf");
    CHECK(format_value(3.0) == "3");
    CHECK(format_value(0.1) == "0.1");
    CHECK(parse_value("inf") == kInf);
    CHECK(parse_value(" Inf ") == kInf);
    CHECK(parse_value("2.5") == 2.5);
    CHECK_THROWS_AS(parse_value("abc"), IoError);
    CHECK_THROWS_AS(parse_value("1.5x"), IoError);

    // printing at 12 significant digits is a fixpoint under reparsing
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const double v = rng.uniform(-1e3, 1e3);
        const std::string s = format_value(v);
        CHECK(format_value(parse_value(s)) == s);
    }
}

TEST_CASE("matrix CSV round trip") {
    const auto g = make_paper_fixture("fig3_Z");
    std::stringstream ss;
    write_graph_csv(ss, g);
    const auto back = read_graph_csv(ss);
    CHECK(back.data() == g.data());
}

TEST_CASE("matrix CSV must be square") {
    std::stringstream ss("1,2\n3\n");
    CHECK_THROWS_AS(read_matrix_csv(ss), IoError);
}

TEST_CASE("edge list CSV") {
    std::stringstream ss("source,target,weight\na,b,1\nb,c,1\nc,a,1\nb,a,10\n");
    std::vector<std::string> names;
    const auto g = read_edge_list_csv(ss, &names);
    CHECK(names == std::vector<std::string>{"a", "b", "c"});
    CHECK(g(0, 1) == 1.0);
    CHECK(g(1, 0) == 10.0);
    CHECK(std::isinf(g(0, 2)));
    CHECK(g(0, 0) == 0.0);

    std::stringstream bad("src,dst,w\n");
    CHECK_THROWS_AS(read_edge_list_csv(bad), IoError);
}

TEST_CASE("graph reader detects the edge-list header") {
    std::stringstream edges("source,target,weight\nu,v,2.5\nv,u,1\n");
    const auto g = read_graph_csv(edges);
    CHECK(g.size() == 2);
    CHECK(g(0, 1) == 2.5);

    std::stringstream matrix("0,1\ninf,0\n");
    const auto m = read_graph_csv(matrix);
    CHECK(m(0, 1) == 1.0);
    CHECK(std::isinf(m(1, 0)));
}

TEST_CASE("filtration dump round trip") {
    const auto fc = walk_length_filtration(make_cycle_network(5), 1);
    std::stringstream ss;
    write_filtration_csv(ss, fc);
    const std::string text = ss.str();
    CHECK(text.rfind("dim,vertices,value\n", 0) == 0);
    CHECK(text.find("0,0,0\n") != std::string::npos);

    std::stringstream in(text);
    const auto back = read_filtration_csv(in);
    REQUIRE(back.cells.size() == fc.cells.size());
    const auto d1 = compute_persistence(fc, 1);
    const auto d2 = compute_persistence(back, 1);
    REQUIRE(d1.points.size() == d2.points.size());
    for (std::size_t i = 0; i < d1.points.size(); ++i) {
        CHECK(d1.points[i].dim == d2.points[i].dim);
        CHECK(d1.points[i].birth == d2.points[i].birth);
        CHECK(d1.points[i].death == d2.points[i].death);
    }
}

TEST_CASE("filtration CSV rejects malformed input") {
    std::stringstream dup("dim,vertices,value\n0,0,0\n0,0,0\n");
    CHECK_THROWS_AS(read_filtration_csv(dup), IoError);
    std::stringstream mismatch("dim,vertices,value\n1,0,0\n");
    CHECK_THROWS_AS(read_filtration_csv(mismatch), IoError);
    std::stringstream repeated("dim,vertices,value\n1,2;2,0\n");
    CHECK_THROWS_AS(read_filtration_csv(repeated), IoError);
}

TEST_CASE("diagram CSV rejects malformed points") {
    std::stringstream backwards("dim,birth,death\n1,3,1\n");
    CHECK_THROWS_AS(read_diagram_csv(backwards), IoError);
    std::stringstream inf_birth("dim,birth,death\n1,inf,inf\n");
    CHECK_THROWS_AS(read_diagram_csv(inf_birth), IoError);
}

TEST_CASE("diagram CSV round trip keeps inf deaths") {
    PersistenceDiagram dgm;
    dgm.points.push_back({0, 0.0, kInf});
    dgm.points.push_back({1, 1.0, 3.0});
    std::stringstream ss;
    write_diagram_csv(ss, dgm);
    const auto back = read_diagram_csv(ss);
    REQUIRE(back.points.size() == 2);
    CHECK(back.points[0].dim == 0);
    CHECK(std::isinf(back.points[0].death));
    CHECK(back.points[1].death == 3.0);
}

TEST_CASE("linkage CSV format") {
    std::stringstream ss;
    write_linkage_csv(ss, {{0, 0, 1, 1.0}, {1, 2, 3, 2.5}});
    CHECK(ss.str() == "step,cluster_a,cluster_b,distance\n0,0,1,1\n1,2,3,2.5\n");
}
