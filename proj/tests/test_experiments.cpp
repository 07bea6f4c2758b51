#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dk/experiments.hpp"
#include "dk/format.hpp"

using dk::BoundMethod;
using dk::ExperimentRecord;

namespace {

bool equal_except_time(const std::vector<ExperimentRecord>& a,
                       const std::vector<ExperimentRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i];
        const auto& y = b[i];
        if (x.scenario != y.scenario || x.degree != y.degree || x.bound != y.bound ||
            x.radius != y.radius || x.iterations != y.iterations || x.status != y.status ||
            x.mean_error != y.mean_error || x.max_residual != y.max_residual ||
            x.seed != y.seed)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("radius comparison emits one record per polynomial and bound") {
    const auto records = dk::run_radius_comparison(50, 3, 50, {-15.0, 15.0}, 42);
    CHECK(records.size() == 250);
    for (const auto& r : records) {
        CHECK(r.iterations == 0);
        CHECK(r.status == "BoundsOnly");
        CHECK(r.mean_error == -1.0);
        CHECK(r.radius > 0.0);
    }
    // same seed, same records
    CHECK(equal_except_time(records, dk::run_radius_comparison(50, 3, 50, {-15.0, 15.0}, 42)));
}

TEST_CASE("degenerate coefficient range produces the clamped lambda-max radius") {
    const auto records = dk::run_radius_comparison(1, 3, 3, {0.0, 0.0}, 9);
    REQUIRE(records.size() == 5);
    for (const auto& r : records) {
        if (r.bound == "lambda-max") CHECK(r.radius == 1e-6);
        if (r.bound == "cauchy") CHECK(r.radius == 1.0);
        if (r.bound == "new-bound-1") CHECK(r.radius == 1.0);
    }
}

TEST_CASE("wilkinson suite solves and scores against the construction roots") {
    dk::SolverConfig cfg;
    const std::vector<BoundMethod> bounds{BoundMethod::NewBound1, BoundMethod::LambdaMax};
    const auto records = dk::run_wilkinson_suite({1, 5, 10}, bounds, cfg);
    REQUIRE(records.size() == 6);
    for (const auto& r : records) {
        CHECK(r.scenario == "wilkinson");
        CHECK(r.status != "MaxIterations");
        CHECK(r.status != "Error");
        CHECK(r.mean_error >= 0.0);
        if (r.degree == 1) CHECK(r.mean_error <= 1e-12);
        if (r.degree == 10) CHECK(r.mean_error <= 1e-6);
    }
}

TEST_CASE("solver failures become Error records instead of aborting") {
    dk::SolverConfig bad;
    bad.eps1 = -1.0;  // rejected inside solve
    const auto records =
        dk::run_wilkinson_suite({4}, {BoundMethod::Cauchy, BoundMethod::LambdaMax}, bad);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) CHECK(r.status == "Error");
}

TEST_CASE("perturbed wilkinson records note the perturbation") {
    dk::SolverConfig cfg;
    const auto rec = dk::run_perturbed_wilkinson(20, 0x1.0p-23, 19, BoundMethod::LambdaMax, cfg);
    CHECK(rec.scenario.find("wilkinson-perturbed") == 0);
    CHECK(rec.scenario.find("k=19") != std::string::npos);
    CHECK(rec.degree == 20);
    CHECK(rec.mean_error >= 0.0);  // compared against the unperturbed roots

    // zero perturbation reduces to the plain Wilkinson row
    const auto zero = dk::run_perturbed_wilkinson(10, 0.0, 9, BoundMethod::NewBound1, cfg);
    const auto plain = dk::run_wilkinson_suite({10}, {BoundMethod::NewBound1}, cfg);
    CHECK(zero.iterations == plain[0].iterations);
    CHECK(zero.mean_error == doctest::Approx(plain[0].mean_error).epsilon(1e-9));
}

TEST_CASE("clustered suite converges against the constructed truth") {
    dk::SolverConfig cfg;
    const auto records =
        dk::run_clustered_suite({1, 10}, 0.001, {BoundMethod::LambdaMax}, cfg);
    REQUIRE(records.size() == 2);
    CHECK(records[0].mean_error <= 1e-9);  // single root -1.001 is exact
    CHECK(records[1].status != "MaxIterations");
    CHECK(records[1].scenario == "clustered spacing=0.001");
}

TEST_CASE("random suite has no ground truth") {
    dk::SolverConfig cfg;
    const auto a =
        dk::run_random_suite({3, 20}, {-15.0, 15.0}, {BoundMethod::LambdaMax}, cfg, 7);
    REQUIRE(a.size() == 2);
    for (const auto& r : a) {
        CHECK(r.mean_error == -1.0);
        CHECK(r.status != "MaxIterations");
    }
    // low-degree case: the derivative near the roots is small, so the
    // absolute residual is a meaningful accuracy proxy
    CHECK(a[0].max_residual <= 1e-8);

    const auto b =
        dk::run_random_suite({3, 20}, {-15.0, 15.0}, {BoundMethod::LambdaMax}, cfg, 7);
    CHECK(equal_except_time(a, b));
}

TEST_CASE("CSV output schema") {
    dk::SolverConfig cfg;
    const auto records = dk::run_wilkinson_suite({3}, {BoundMethod::Cauchy}, cfg);
    std::ostringstream out;
    dk::write_records_csv(out, records);
    const std::string text = out.str();
    CHECK(text.find("scenario,degree,bound,radius,iterations,status,mean_error,"
                     "max_residual,seed,wall_time_ms\n") == 0);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(dk::split_csv_line(line).size() == 10);
    CHECK(line.find("wilkinson,3,cauchy,") == 0);
}
