#include "galmann/curve.hpp"
#include "galmann/errors.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

using galmann::Curve;
using galmann::Expression;
using galmann::SampleTable;
using galmann::Space;

namespace {

Curve circle_g3(int samples = 201) {
    return Curve::from_expressions(Space::G3, Expression::parse("cos(s)"),
                                   Expression::parse("sin(s)"), std::nullopt, 0.0,
                                   2 * 3.14159265358979323846, samples);
}

SampleTable sample_expr(const char* y, const char* z, double s0, double s1, int n) {
    Expression fy = Expression::parse(y);
    Expression fz = Expression::parse(z);
    SampleTable t;
    double h = (s1 - s0) / (n - 1);
    for (int i = 0; i < n; ++i) {
        double s = s0 + i * h;
        t.s.push_back(s);
        t.x.push_back(s);
        t.y.push_back(fy.eval(s));
        t.z.push_back(fz.eval(s));
    }
    return t;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("expression curves evaluate jets anywhere in the domain") {
    Curve c = circle_g3();
    CHECK(c.space() == Space::G3);
    CHECK_FALSE(c.sampled_data());
    CHECK(c.max_jet_order() == 16);
    CHECK(c.grid().size() == 201);
    CHECK(c.grid().front() == 0.0);
    CHECK(c.interior_grid().size() == 201);
    CHECK(c.queryable_at(1.2345));
    CHECK_FALSE(c.queryable_at(-0.1));

    galmann::CoordJets jets = c.jets_at(0.0, 4);
    CHECK(jets.y.value() == 1.0);
    CHECK(jets.y.deriv(1) == 0.0);
    CHECK(jets.y.deriv(2) == -1.0);
    CHECK(jets.z.deriv(1) == 1.0);
    CHECK(jets.z.deriv(3) == -1.0);
    CHECK_FALSE(jets.phi.has_value());

    galmann::Vec3 p = c.point_at(0.0);
    CHECK(p.x == 0.0);
    CHECK(p.y == 1.0);
    CHECK(p.z == 0.0);
}

TEST_CASE("type II curves carry the hyperbolic angle") {
    Curve c = Curve::from_expressions(Space::PG3_TypeII, Expression::parse("s^2/2"),
                                      std::nullopt, Expression::parse("s"), 0.5, 2.0);
    galmann::CoordJets jets = c.jets_at(1.0, 3);
    REQUIRE(jets.phi.has_value());
    CHECK(jets.phi->value() == 1.0);
    CHECK(jets.phi->deriv(1) == 1.0);
    CHECK(jets.z.value() == 0.0);

    CHECK_THROWS_AS(Curve::from_expressions(Space::PG3_TypeII, Expression::parse("s"),
                                            Expression::parse("s"), std::nullopt, 0.0, 1.0),
                    galmann::InputError);
    CHECK_THROWS_AS(Curve::from_expressions(Space::G3, Expression::parse("s"),
                                            Expression::parse("s"), Expression::parse("s"),
                                            0.0, 1.0),
                    galmann::InputError);
}

TEST_CASE("expression curve domain validation") {
    CHECK_THROWS_AS(Curve::from_expressions(Space::G3, Expression::parse("s"),
                                            Expression::parse("s"), std::nullopt, 1.0, 1.0),
                    galmann::InputError);
    CHECK_THROWS_AS(Curve::from_expressions(Space::G3, Expression::parse("s"),
                                            Expression::parse("s"), std::nullopt, 0.0, 1.0, 3),
                    galmann::InputError);
}

TEST_CASE("sample tables are validated before adoption") {
    SampleTable good = sample_expr("sin(s)", "cos(s)", 0.0, 1.0, 11);
    CHECK_NOTHROW(Curve::from_samples(Space::G3, good));

    SampleTable short_table = sample_expr("sin(s)", "cos(s)", 0.0, 1.0, 8);
    CHECK_THROWS_AS(Curve::from_samples(Space::G3, short_table), galmann::InputError);

    SampleTable skewed = good;
    skewed.s[5] += 1e-3;
    CHECK_THROWS_AS(Curve::from_samples(Space::G3, skewed), galmann::InputError);

    SampleTable bad_x = good;
    bad_x.x[2] += 0.5;
    CHECK_THROWS_AS(Curve::from_samples(Space::G3, bad_x), galmann::InputError);

    SampleTable ragged = good;
    ragged.z.pop_back();
    CHECK_THROWS_AS(Curve::from_samples(Space::G3, ragged), galmann::InputError);

    CHECK_THROWS_AS(Curve::from_samples(Space::PG3_TypeII, good), galmann::InputError);
}

TEST_CASE("finite differences recover derivatives of a smooth curve") {
    SampleTable t = sample_expr("sin(s)", "cos(s)", 0.0, 2.0, 2001);
    Curve c = Curve::from_samples(Space::G3, t);
    CHECK(c.sampled_data());
    CHECK(c.max_jet_order() == 4);

    double s = c.interior_grid()[c.interior_grid().size() / 2];
    galmann::CoordJets jets = c.jets_at(s, 4);
    CHECK(std::abs(jets.y.deriv(0) - std::sin(s)) <= 1e-12);
    CHECK(std::abs(jets.y.deriv(1) - std::cos(s)) <= 1e-8);
    CHECK(std::abs(jets.y.deriv(2) + std::sin(s)) <= 1e-8);
    CHECK(std::abs(jets.y.deriv(3) + std::cos(s)) <= 1e-7);
    CHECK(std::abs(jets.y.deriv(4) - std::sin(s)) <= 1e-5);
}

TEST_CASE("sampled curves only answer at interior rows") {
    SampleTable t = sample_expr("s^3/6", "s^2/2", 1.0, 1.8, 9);
    Curve c = Curve::from_samples(Space::G3, t);

    std::vector<double> interior = c.interior_grid();
    REQUIRE(interior.size() == 3);
    CHECK(interior.front() == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(interior.back() == doctest::Approx(1.5).epsilon(1e-12));

    CHECK(c.queryable_at(1.4));
    CHECK_FALSE(c.queryable_at(1.0));
    CHECK_FALSE(c.queryable_at(1.35));
    CHECK_THROWS_AS(c.jets_at(1.1, 2), galmann::InputError);
    CHECK_THROWS_AS(c.jets_at(1.35, 2), galmann::InputError);
    CHECK_NOTHROW(c.jets_at(1.4 + 1e-13, 2));
}

TEST_CASE("offset curves differentiate through the base jets") {
    Curve base = circle_g3();
    Curve off = base.offset_by_normal(0.5);
    CHECK(off.space() == Space::G3);
    CHECK(off.max_jet_order() == 14);
    CHECK_FALSE(off.sampled_data());

    for (double s : {0.3, 1.7, 4.4}) {
        galmann::CoordJets jets = off.jets_at(s, 4);
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(s);
            CAPTURE(k);
            galmann::Jet expect = 0.5 * galmann::cos(galmann::Jet::variable(s, 4));
            CHECK(jets.y.deriv(k) == doctest::Approx(expect.deriv(k)).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(base.offset_by_normal(std::nan("")), galmann::InputError);
}

TEST_CASE("offset of a sampled curve keeps the interior and loose tolerances") {
    SampleTable t = sample_expr("sin(s)", "cos(s)", 0.0, 2.0, 2001);
    Curve base = Curve::from_samples(Space::G3, t);
    Curve off = base.offset_by_normal(1.0);
    CHECK(off.sampled_data());
    CHECK(off.max_jet_order() == 2);
    CHECK(off.grid() == base.interior_grid());
    CHECK(off.tolerances().invariant == galmann::Tolerances::sampled().invariant);
}

TEST_CASE("csv round trip preserves every double bit for bit") {
    SampleTable t = sample_expr("sin(s)*exp(s/3)", "log(s+2)", 0.0, 1.0, 33);
    std::string path = temp_path("galmann_test_roundtrip.csv");
    galmann::write_sample_table_csv(path, t);
    SampleTable back = galmann::read_sample_table_csv(path);
    REQUIRE(back.rows() == t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        CHECK(back.s[i] == t.s[i]);
        CHECK(back.x[i] == t.x[i]);
        CHECK(back.y[i] == t.y[i]);
        CHECK(back.z[i] == t.z[i]);
    }
    std::remove(path.c_str());
}

TEST_CASE("csv reader rejects malformed files") {
    auto write_text = [](const std::string& path, const char* body) {
        FILE* f = std::fopen(path.c_str(), "wb");
        REQUIRE(f != nullptr);
        std::fputs(body, f);
        std::fclose(f);
    };

    std::string path = temp_path("galmann_test_bad.csv");

    write_text(path, "s,x,y\n0,0,0\n");
    CHECK_THROWS_AS(galmann::read_sample_table_csv(path), galmann::InputError);

    write_text(path, "s,x,y,z\n0,0,zero,0\n");
    CHECK_THROWS_AS(galmann::read_sample_table_csv(path), galmann::InputError);

    write_text(path, "s,x,y,z\n0,0,0\n");
    CHECK_THROWS_AS(galmann::read_sample_table_csv(path), galmann::InputError);

    CHECK_THROWS_AS(galmann::read_sample_table_csv(temp_path("galmann_no_such_file.csv")),
                    galmann::InputError);
    std::remove(path.c_str());
}

TEST_CASE("space names round trip") {
    CHECK(galmann::to_string(Space::G3) == "G3");
    CHECK(galmann::to_string(Space::PG3_TypeI) == "PG3-I");
    CHECK(galmann::to_string(Space::PG3_TypeII) == "PG3-II");
    CHECK(galmann::space_from_string("G3") == Space::G3);
    CHECK(galmann::space_from_string("PG3-I") == Space::PG3_TypeI);
    CHECK(galmann::space_from_string("PG3-II") == Space::PG3_TypeII);
    CHECK_FALSE(galmann::space_from_string("E3").has_value());
}
