#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dk/format.hpp"
#include "dk/svg.hpp"

TEST_CASE("shortest round-trip formatting recovers the exact double") {
    for (double v : {0.1, 1.0 / 3.0, 1e300, 5e-324, -0.0, 210.0 - 0x1.0p-23, -1.0,
                     123456789.123456789}) {
        double back = 0.0;
        REQUIRE(dk::parse_double(dk::format_double(v), back));
        CHECK(back == v);
    }
    CHECK(dk::format_double(-1.0) == "-1");
    CHECK(dk::format_double(0.5) == "0.5");
}

TEST_CASE("fixed 17-digit formatting") {
    CHECK(dk::format_double17(7.0) == "7");
    double back = 0.0;
    REQUIRE(dk::parse_double(dk::format_double17(1.0 / 3.0), back));
    CHECK(back == 1.0 / 3.0);
}

TEST_CASE("csv line splitting") {
    CHECK(dk::split_csv_line("a,b,c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(dk::split_csv_line("a") == std::vector<std::string>{"a"});
    CHECK(dk::split_csv_line("a,,c") == std::vector<std::string>{"a", "", "c"});
    CHECK(dk::split_csv_line("") == std::vector<std::string>{""});
}

TEST_CASE("csv reading keeps the header and data rows apart") {
    std::istringstream in("degree,bound,radius\r\n3,cauchy,7\n4,aberth,2\n\n");
    const dk::CsvTable t = dk::read_csv(in);
    CHECK(t.header == std::vector<std::string>{"degree", "bound", "radius"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1] == std::vector<std::string>{"4", "aberth", "2"});
}

namespace {

dk::CsvTable radius_table() {
    std::istringstream in(
        "scenario,degree,bound,radius,iterations,status,mean_error,max_residual,seed,wall_time_ms\n"
        "radius-comparison,3,cauchy,7,0,BoundsOnly,-1,0,42,0.1\n"
        "radius-comparison,3,lambda-max,3,0,BoundsOnly,-1,0,42,0.1\n"
        "radius-comparison,5,cauchy,9,0,BoundsOnly,-1,0,42,0.1\n"
        "radius-comparison,5,lambda-max,4,0,BoundsOnly,-1,0,42,0.1\n");
    return dk::read_csv(in);
}

}  // namespace

TEST_CASE("radius chart structure and determinism") {
    const dk::CsvTable t = radius_table();
    const std::string svg = dk::radius_chart_svg(t);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
        ++polylines;
    CHECK(polylines == 2);  // one per bound
    CHECK(svg.find(">cauchy</text>") != std::string::npos);
    CHECK(svg.find(">lambda-max</text>") != std::string::npos);
    CHECK(svg.find(">degree</text>") != std::string::npos);
    CHECK(svg.find(">radius</text>") != std::string::npos);

    CHECK(svg == dk::radius_chart_svg(t));
}

TEST_CASE("radius chart error paths") {
    std::istringstream missing("scenario,degree,bound\nx,3,cauchy\n");
    const dk::CsvTable t1 = dk::read_csv(missing);
    CHECK_THROWS_WITH_AS(static_cast<void>(dk::radius_chart_svg(t1)),
                         "missing column: radius", std::invalid_argument);

    std::istringstream header_only("degree,bound,radius\n");
    const dk::CsvTable t2 = dk::read_csv(header_only);
    CHECK_THROWS_WITH_AS(static_cast<void>(dk::radius_chart_svg(t2)), "no data rows",
                         std::invalid_argument);
}

TEST_CASE("convergence chart uses a log scale and drops zero steps") {
    std::istringstream in(
        "run,iteration,max_step\n"
        "lambda-max,1,10\n"
        "lambda-max,2,0.1\n"
        "lambda-max,3,0\n"
        "new-bound-1,1,5\n"
        "new-bound-1,2,1e-9\n");
    const dk::CsvTable t = dk::read_csv(in);
    const std::string svg = dk::convergence_chart_svg(t);
    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
        ++polylines;
    CHECK(polylines == 2);
    CHECK(svg.find(">1e") != std::string::npos);  // power-of-ten tick labels

    std::istringstream missing("run,iteration\nx,1\n");
    const dk::CsvTable bad = dk::read_csv(missing);
    CHECK_THROWS_WITH_AS(static_cast<void>(dk::convergence_chart_svg(bad)),
                         "missing column: max_step", std::invalid_argument);
}
