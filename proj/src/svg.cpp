#include "dk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dk/format.hpp"

namespace dk {

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

namespace {

constexpr double kWidth = 960, kHeight = 600;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // already in plot space
};

std::size_t column_index(const CsvTable& table, const std::string& name) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        if (table.header[i] == name) return i;
    throw std::invalid_argument("missing column: " + name);
}

std::string fmt_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double nice_step(double span) {
    if (!(span > 0.0)) return 1.0;
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double nice = 10.0;
    if (frac <= 1.0) nice = 1.0;
    else if (frac <= 2.0) nice = 2.0;
    else if (frac <= 5.0) nice = 5.0;
    return nice * mag;
}

// Shared renderer. When log_y is set, point y-values and the y range are
// already log10-transformed and tick labels show the power of ten.
std::string render(const std::vector<Series>& series, const std::string& x_label,
                   const std::string& y_label, bool log_y) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!any) {
                xmin = xmax = x;
                ymin = ymax = y;
                any = true;
            } else {
                xmin = std::min(xmin, x); xmax = std::max(xmax, x);
                ymin = std::min(ymin, y); ymax = std::max(ymax, y);
            }
        }
    if (xmax == xmin) { xmin -= 1.0; xmax += 1.0; }
    if (ymax == ymin) { ymin -= 1.0; ymax += 1.0; }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return kTop + (1.0 - (y - ymin) / (ymax - ymin)) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes box
    svg << "<rect x=\"" << fmt_px(kLeft) << "\" y=\"" << fmt_px(kTop) << "\" width=\""
        << fmt_px(plot_w) << "\" height=\"" << fmt_px(plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // ticks and grid
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    const double xstep = nice_step(xmax - xmin);
    for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-9 * xstep; t += xstep) {
        const double X = px(t);
        svg << "<line x1=\"" << fmt_px(X) << "\" y1=\"" << fmt_px(kTop) << "\" x2=\""
            << fmt_px(X) << "\" y2=\"" << fmt_px(kTop + plot_h)
            << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fmt_px(X) << "\" y=\"" << fmt_px(kTop + plot_h + 18)
            << "\" text-anchor=\"middle\">" << fmt_tick(t) << "</text>\n";
    }
    const double ystep = log_y ? std::max(1.0, std::ceil((ymax - ymin) / 8.0))
                               : nice_step(ymax - ymin);
    for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-9 * ystep; t += ystep) {
        const double Y = py(t);
        svg << "<line x1=\"" << fmt_px(kLeft) << "\" y1=\"" << fmt_px(Y) << "\" x2=\""
            << fmt_px(kLeft + plot_w) << "\" y2=\"" << fmt_px(Y)
            << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fmt_px(kLeft - 8) << "\" y=\"" << fmt_px(Y + 4)
            << "\" text-anchor=\"end\">"
            << (log_y ? ("1e" + fmt_tick(t)) : fmt_tick(t)) << "</text>\n";
    }
    svg << "<text x=\"" << fmt_px(kLeft + plot_w / 2) << "\" y=\""
        << fmt_px(kHeight - 16) << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    svg << "<text x=\"20\" y=\"" << fmt_px(kTop + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << fmt_px(kTop + plot_h / 2) << ")\">" << y_label << "</text>\n";
    svg << "</g>\n";

    // series
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[s].points)
            svg << fmt_px(px(x)) << ',' << fmt_px(py(y)) << ' ';
        svg << "\"/>\n";
    }

    // legend
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const double Y = kTop + 10 + 18.0 * static_cast<double>(s);
        svg << "<line x1=\"" << fmt_px(kWidth - kRight + 10) << "\" y1=\"" << fmt_px(Y)
            << "\" x2=\"" << fmt_px(kWidth - kRight + 34) << "\" y2=\"" << fmt_px(Y)
            << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt_px(kWidth - kRight + 40) << "\" y=\"" << fmt_px(Y + 4)
            << "\">" << series[s].label << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace

std::string radius_chart_svg(const CsvTable& table) {
    const std::size_t c_degree = column_index(table, "degree");
    const std::size_t c_bound = column_index(table, "bound");
    const std::size_t c_radius = column_index(table, "radius");
    if (table.rows.empty()) throw std::invalid_argument("no data rows");

    std::vector<Series> series;
    std::map<std::string, std::size_t> index;
    for (const auto& row : table.rows) {
        if (row.size() <= std::max({c_degree, c_bound, c_radius}))
            throw std::invalid_argument("short row in CSV");
        double deg = 0.0, rad = 0.0;
        if (!parse_double(row[c_degree], deg) || !parse_double(row[c_radius], rad))
            throw std::invalid_argument("non-numeric degree/radius cell");
        const std::string& bound = row[c_bound];
        auto [it, fresh] = index.try_emplace(bound, series.size());
        if (fresh) series.push_back(Series{bound, {}});
        series[it->second].points.emplace_back(deg, rad);
    }
    for (auto& s : series)
        std::stable_sort(s.points.begin(), s.points.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
    return render(series, "degree", "radius", false);
}

std::string convergence_chart_svg(const CsvTable& table) {
    const std::size_t c_run = column_index(table, "run");
    const std::size_t c_iter = column_index(table, "iteration");
    const std::size_t c_step = column_index(table, "max_step");
    if (table.rows.empty()) throw std::invalid_argument("no data rows");

    std::vector<Series> series;
    std::map<std::string, std::size_t> index;
    for (const auto& row : table.rows) {
        if (row.size() <= std::max({c_run, c_iter, c_step}))
            throw std::invalid_argument("short row in CSV");
        double it_num = 0.0, step = 0.0;
        if (!parse_double(row[c_iter], it_num) || !parse_double(row[c_step], step))
            throw std::invalid_argument("non-numeric iteration/max_step cell");
        if (!(step > 0.0)) continue;  // log scale; exact zeros are dropped
        const std::string& run = row[c_run];
        auto [it, fresh] = index.try_emplace(run, series.size());
        if (fresh) series.push_back(Series{run, {}});
        series[it->second].points.emplace_back(it_num, std::log10(step));
    }
    if (series.empty()) throw std::invalid_argument("no data rows");
    for (auto& s : series)
        std::stable_sort(s.points.begin(), s.points.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
    return render(series, "iteration", "max step", true);
}

}  // namespace dk
