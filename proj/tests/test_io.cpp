#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "siegeltheta/siegeltheta.hpp"

using namespace siegeltheta;

TEST_CASE("complex literals") {
    CHECK(io::parse_complex("2i") == complex_t{0, 2});
    CHECK(io::parse_complex("0.1") == complex_t{0.1, 0});
    CHECK(io::parse_complex("1+2i") == complex_t{1, 2});
    CHECK(io::parse_complex("-1.5-0.3i") == complex_t{-1.5, -0.3});
    CHECK(io::parse_complex("i") == complex_t{0, 1});
    CHECK(io::parse_complex("-i") == complex_t{0, -1});
    CHECK(io::parse_complex("3e-2+1e-1i") == complex_t{0.03, 0.1});
    CHECK(io::parse_complex(" 2 + 3i ") == complex_t{2, 3});
    CHECK(io::parse_complex("4i-1") == complex_t{-1, 4});
}

TEST_CASE("malformed literals carry a position") {
    CHECK_THROWS_AS(io::parse_complex(""), parse_error);
    CHECK_THROWS_AS(io::parse_complex("1+"), parse_error);
    CHECK_THROWS_AS(io::parse_complex("2i+3i"), parse_error);
    CHECK_THROWS_AS(io::parse_complex("1.2.3"), parse_error);
    CHECK_THROWS_AS(io::parse_complex("oops"), parse_error);
    try {
        io::parse_complex("1+2i junk");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position >= 4);
    }
}

TEST_CASE("matrices parse as nested arrays, scalars as 1x1") {
    const cmatrix m = io::parse_complex_matrix("[[2i, 0.1],[0.1, 2i]]");
    CHECK(m.rows() == 2);
    CHECK(m(0, 0) == complex_t{0, 2});
    CHECK(m(0, 1) == complex_t{0.1, 0});
    const cmatrix s = io::parse_complex_matrix("1+0.5i");
    CHECK(s.rows() == 1);
    CHECK(s(0, 0) == complex_t{1, 0.5});
    CHECK_THROWS_AS(io::parse_complex_matrix("[[1,2],[3]]"), parse_error);
    CHECK_THROWS_AS(io::parse_complex_matrix("[[1,2],[3,4]"), parse_error);
}

TEST_CASE("vectors parse with or without brackets") {
    const auto v = io::parse_complex_list("1,0,0,0");
    REQUIRE(v.size() == 4);
    CHECK(v[0] == complex_t{1, 0});
    const auto w = io::parse_complex_list("[1+i, 2i]");
    REQUIRE(w.size() == 2);
    CHECK(w[0] == complex_t{1, 1});
}

TEST_CASE("characteristics parse from the a;b grammar") {
    const auto ch = io::parse_characteristic("1/2,0;0,1/2");
    CHECK(ch.genus() == 2);
    CHECK(ch.a()[0] == rational(1, 2));
    CHECK(ch.b()[1] == rational(1, 2));
    CHECK_THROWS_AS(io::parse_characteristic("1/2,0"), parse_error);
    CHECK_THROWS_AS(io::parse_characteristic("x;y"), parse_error);
}

TEST_CASE("seventeen significant digits round-trip doubles") {
    for (double x : {1.0 / 3.0, 2.8710800441845200, 1e-300, 0.0, -4.2541809728585101e-56}) {
        const std::string s = io::format_sig17(x);
        CHECK(std::stod(s) == x);
    }
}

TEST_CASE("reports are byte-stable") {
    io::report_config cfg;
    cfg.command = "check";
    cfg.suite = "torsion";
    cfg.seed = 7;
    std::vector<check_case> recs{{"alpha", "XX-01", 1e-12, 1e-8, true},
                                 {"beta", "XX-02", 0.5, 0.1, false}};
    std::ostringstream a, b;
    io::write_check_report(a, cfg, recs, "0.1.0");
    io::write_check_report(b, cfg, recs, "0.1.0");
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"pass\":false") != std::string::npos);
    CHECK(a.str().back() == '\n');

    std::ostringstream c;
    cfg.format = "csv";
    io::write_check_report(c, cfg, recs, "0.1.0");
    CHECK(c.str().rfind("id,ref,residual,tolerance,pass\n", 0) == 0);
}

TEST_CASE("eval records serialize with the fixed field order") {
    io::report_config cfg;
    cfg.command = "eval --quantity theta";
    std::vector<io::eval_record> recs{{"theta", "tau=i", 1.0864348112133082, 0.0, 1e-22}};
    std::ostringstream os;
    io::write_eval_report(os, cfg, recs, "0.1.0");
    const std::string s = os.str();
    CHECK(s.find("\"quantity\":\"theta\"") < s.find("\"inputs\""));
    CHECK(s.find("\"value_re\":1.0864348112133082") != std::string::npos);
    CHECK(s.find("\"err\":") != std::string::npos);
}
