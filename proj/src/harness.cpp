#include "siac/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "siac/dg.hpp"

namespace siac::harness {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_plain(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("cannot parse number '" + text + "'");
    return v;
}

// Reals with the conveniences used in filter specs: "pi/4", "3pi/4", "0.5pi",
// "sqrt2", "1/sqrt2", or a plain literal.
double parse_real(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw std::invalid_argument("empty number");
    if (text == "sqrt2") return std::sqrt(2.0);
    if (text == "1/sqrt2") return 1.0 / std::sqrt(2.0);
    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string::npos) return parse_plain(text);
    double factor = 1.0;
    std::string prefix = text.substr(0, pi_pos);
    if (prefix == "-") {
        factor = -1.0;
    } else if (!prefix.empty()) {
        factor = parse_plain(prefix);
    }
    std::string suffix = text.substr(pi_pos + 2);
    double divisor = 1.0;
    if (!suffix.empty()) {
        if (suffix[0] != '/') throw std::invalid_argument("cannot parse angle '" + text + "'");
        divisor = parse_plain(suffix.substr(1));
    }
    return factor * M_PI / divisor;
}

std::string sci6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.5e", v);
    return buf;
}

std::string sig12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string filter_descriptor(const FilterChoice& choice) {
    if (!choice.config) return "none";
    const FilterConfig& c = *choice.config;
    std::string out = choice.label();
    out += ":theta=" + sig12(c.theta) + ",mu=" + sig12(c.resolved_mu());
    return out;
}

volatile double timing_sink;  // defeats dead-code elimination in the timing loop

std::string column_label(const FilterChoice& choice) {
    if (!choice.config) return "dg";
    const FilterConfig& c = *choice.config;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_theta%.6g_mu%.6g", choice.label().c_str(),
                  c.theta, c.resolved_mu());
    return buf;
}

}  // namespace

std::function<double(double, double)> InitialCondition::exact_at(double tfinal) const {
    auto f = u0;
    return [f, tfinal](double x, double y) { return f(x - tfinal, y - tfinal); };
}

InitialCondition initial_condition(const std::string& name) {
    if (name == "sinxy") {
        return {name, [](double x, double y) { return std::sin(x + y); }};
    }
    if (name == "sinxcosy") {
        return {name, [](double x, double y) { return std::sin(x) * std::cos(y); }};
    }
    throw std::invalid_argument("unknown initial condition '" + name +
                                "' (expected sinxy or sinxcosy)");
}

std::string FilterChoice::label() const {
    if (!config) return "none";
    return config->kind == FilterKind::line ? "line" : "tensor";
}

std::vector<FilterChoice> parse_filter_list(const std::string& text) {
    std::vector<FilterChoice> choices;
    for (const std::string& raw : split(text, ';')) {
        const std::string item = trim(raw);
        if (item.empty()) continue;
        if (item == "none") {
            choices.push_back(FilterChoice{});
            continue;
        }
        const auto colon = item.find(':');
        const std::string kind = trim(item.substr(0, colon));
        FilterConfig config;
        if (kind == "line") {
            config.kind = FilterKind::line;
        } else if (kind == "tensor") {
            config.kind = FilterKind::tensor;
        } else {
            throw std::invalid_argument("unknown filter kind '" + kind + "'");
        }
        if (colon != std::string::npos) {
            for (const std::string& kvraw : split(item.substr(colon + 1), ',')) {
                const std::string kv = trim(kvraw);
                if (kv.empty()) continue;
                const auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    throw std::invalid_argument("filter option '" + kv + "' is not key=value");
                }
                const std::string key = trim(kv.substr(0, eq));
                const std::string value = trim(kv.substr(eq + 1));
                if (key == "theta") {
                    config.theta = parse_real(value);
                } else if (key == "mu") {
                    config.mu = parse_real(value);
                } else if (key == "k") {
                    config.k_override = static_cast<int>(parse_plain(value));
                } else {
                    throw std::invalid_argument("unknown filter option '" + key + "'");
                }
            }
        }
        choices.push_back(FilterChoice{config});
    }
    if (choices.empty()) throw std::invalid_argument("empty filter list");
    return choices;
}

double StudySpec::cfl_for(int k) const {
    for (const auto& [deg, value] : cfl_overrides) {
        if (deg == k) return value;
    }
    return cfl;
}

StudySpec parse_study_config(std::istream& in) {
    StudySpec spec;
    bool have_filters = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not key=value: '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "ic") {
            initial_condition(value);  // validates
            spec.ic = value;
        } else if (key == "klist") {
            spec.degrees.clear();
            for (const std::string& item : split(value, ','))
                spec.degrees.push_back(static_cast<int>(parse_plain(trim(item))));
        } else if (key == "nlist") {
            spec.mesh_sizes.clear();
            for (const std::string& item : split(value, ','))
                spec.mesh_sizes.push_back(static_cast<int>(parse_plain(trim(item))));
        } else if (key == "filters") {
            spec.filters = parse_filter_list(value);
            have_filters = true;
        } else if (key == "tfinal") {
            spec.tfinal = parse_plain(value);
        } else if (key == "cfl") {
            spec.cfl = parse_plain(value);
        } else if (key.rfind("cfl_k", 0) == 0) {
            const int deg = static_cast<int>(parse_plain(key.substr(5)));
            spec.cfl_overrides.emplace_back(deg, parse_plain(value));
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    if (spec.degrees.empty()) throw std::invalid_argument("config: klist is required");
    if (spec.mesh_sizes.empty()) throw std::invalid_argument("config: nlist is required");
    if (!have_filters) spec.filters = {FilterChoice{}};
    return spec;
}

StudySpec parse_study_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    return parse_study_config(in);
}

ConvergenceReport run_convergence_study(
    const StudySpec& spec, const std::function<void(const std::string&)>& progress) {
    const InitialCondition ic = initial_condition(spec.ic);
    const auto exact = ic.exact_at(spec.tfinal);
    ConvergenceReport report;
    report.spec = spec;

    for (int k : spec.degrees) {
        std::vector<std::vector<double>> prev_errors;  // per filter, last N
        for (std::size_t ni = 0; ni < spec.mesh_sizes.size(); ++ni) {
            const int n = spec.mesh_sizes[ni];
            const UniformMesh2D mesh = UniformMesh2D::unit_torus(n, n);
            const ModalField2D initial = project_initial(mesh, k, ic.u0);
            const ModalField2D solved = solve_advection(initial, spec.tfinal, spec.cfl_for(k));

            std::vector<double> errors;
            for (const FilterChoice& choice : spec.filters) {
                double err;
                try {
                    err = choice.config ? filtered_l2_error(solved, *choice.config, exact)
                                        : l2_error(solved, exact);
                } catch (const std::exception& e) {
                    throw std::runtime_error("study case k=" + std::to_string(k) +
                                             " N=" + std::to_string(n) + " filter=" +
                                             filter_descriptor(choice) + ": " + e.what());
                }
                errors.push_back(err);

                ReportRow row;
                row.k = k;
                row.n = n;
                row.filter = choice;
                row.l2_error = err;
                if (ni > 0) {
                    const double coarse = prev_errors.back()[errors.size() - 1];
                    const double ratio = static_cast<double>(n) / spec.mesh_sizes[ni - 1];
                    row.order = std::log(coarse / err) / std::log(ratio);
                }
                report.rows.push_back(row);
            }
            prev_errors.push_back(std::move(errors));
            if (progress) {
                progress("k=" + std::to_string(k) + " N=" + std::to_string(n) + " done");
            }
        }
    }
    return report;
}

void write_study_csv(const ConvergenceReport& report, std::ostream& out) {
    const StudySpec& spec = report.spec;
    out << "# ic=" << spec.ic << " tfinal=" << sig12(spec.tfinal)
        << " cfl=" << sig12(spec.cfl);
    for (const auto& [deg, value] : spec.cfl_overrides) {
        out << " cfl_k" << deg << "=" << sig12(value);
    }
    out << "\n# dt_rule=cfl*min(hx,hy)^max(1,(2k+1)/4)\n";
    out << "# filters=";
    for (std::size_t i = 0; i < spec.filters.size(); ++i) {
        if (i) out << ';';
        out << filter_descriptor(spec.filters[i]);
    }
    out << "\nk,N,filter,theta,mu,l2_error,order\n";
    for (const ReportRow& row : report.rows) {
        out << row.k << ',' << row.n << ',' << row.filter.label() << ',';
        if (row.filter.config) {
            out << sig12(row.filter.config->theta) << ','
                << sig12(row.filter.config->resolved_mu());
        } else {
            out << ',';
        }
        out << ',' << sci6(row.l2_error) << ',';
        if (row.order) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.4f", *row.order);
            out << buf;
        }
        out << '\n';
    }
}

std::string CutSpec::label() const {
    switch (kind) {
        case Kind::horizontal: return "horizontal_y" + sig12(offset);
        case Kind::vertical: return "vertical_x" + sig12(offset);
        case Kind::diagonal: return "diagonal";
    }
    return "";
}

std::vector<CutSpec> parse_cut_list(const std::string& text) {
    std::vector<CutSpec> cuts;
    for (const std::string& raw : split(text, ';')) {
        const std::string item = trim(raw);
        if (item.empty()) continue;
        const auto colon = item.find(':');
        const std::string kind = trim(item.substr(0, colon));
        CutSpec cut;
        if (kind == "horizontal") {
            cut.kind = CutSpec::Kind::horizontal;
        } else if (kind == "vertical") {
            cut.kind = CutSpec::Kind::vertical;
        } else if (kind == "diagonal") {
            cut.kind = CutSpec::Kind::diagonal;
            cuts.push_back(cut);
            continue;
        } else {
            throw std::invalid_argument("unknown cut kind '" + kind + "'");
        }
        if (colon == std::string::npos) {
            throw std::invalid_argument("cut '" + item + "' needs an offset, e.g. horizontal:1.0");
        }
        cut.offset = parse_real(item.substr(colon + 1));
        cuts.push_back(cut);
    }
    if (cuts.empty()) throw std::invalid_argument("empty cut list");
    return cuts;
}

std::vector<SliceProfile> run_slices(const ModalField2D& field,
                                     const std::function<double(double, double)>& exact,
                                     const std::vector<FilterChoice>& filters,
                                     const std::vector<CutSpec>& cuts, int samples) {
    const UniformMesh2D& mesh = field.mesh();
    std::vector<SliceProfile> profiles;
    for (const CutSpec& cut : cuts) {
        SliceProfile profile;
        profile.cut = cut;
        profile.filter_error.resize(filters.size());
        const double diag_len = std::hypot(mesh.lx(), mesh.ly());
        const double length = cut.kind == CutSpec::Kind::horizontal ? mesh.lx()
                              : cut.kind == CutSpec::Kind::vertical ? mesh.ly()
                                                                    : diag_len;
        for (int s = 0; s < samples; ++s) {
            const double arc = (s + 0.5) * length / samples;
            Point2 p;
            switch (cut.kind) {
                case CutSpec::Kind::horizontal:
                    p = {mesh.xmin + arc, cut.offset};
                    break;
                case CutSpec::Kind::vertical:
                    p = {cut.offset, mesh.ymin + arc};
                    break;
                case CutSpec::Kind::diagonal:
                    p = {mesh.xmin + arc * mesh.lx() / diag_len,
                         mesh.ymin + arc * mesh.ly() / diag_len};
                    break;
            }
            profile.arc.push_back(arc);
            profile.dg_error.push_back(std::abs(field.evaluate(p.x, p.y) - exact(p.x, p.y)));
            for (std::size_t f = 0; f < filters.size(); ++f) {
                if (!filters[f].config) {
                    profile.filter_error[f].push_back(profile.dg_error.back());
                    continue;
                }
                const double filtered = filter_point(field, p, *filters[f].config);
                profile.filter_error[f].push_back(std::abs(filtered - exact(p.x, p.y)));
            }
        }
        profiles.push_back(std::move(profile));
    }
    return profiles;
}

void write_slice_csv(const SliceProfile& profile,
                     const std::vector<FilterChoice>& filters, std::ostream& out) {
    out << "# cut=" << profile.cut.label() << "\narc,dg";
    for (const FilterChoice& choice : filters) out << ',' << column_label(choice);
    out << '\n';
    for (std::size_t s = 0; s < profile.arc.size(); ++s) {
        out << sig12(profile.arc[s]) << ',' << sci6(profile.dg_error[s]);
        for (const auto& column : profile.filter_error) out << ',' << sci6(column[s]);
        out << '\n';
    }
}

double total_variation(const std::vector<double>& samples) {
    double tv = 0.0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        tv += std::abs(samples[i] - samples[i - 1]);
    }
    return tv;
}

std::vector<ContourGrid> run_contours(const ModalField2D& field,
                                      const std::function<double(double, double)>& exact,
                                      const std::vector<FilterChoice>& filters,
                                      int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("run_contours: grid must be >= 1x1");
    const UniformMesh2D& mesh = field.mesh();
    std::vector<FilterChoice> all;
    all.push_back(FilterChoice{});
    all.insert(all.end(), filters.begin(), filters.end());

    std::vector<ContourGrid> grids;
    for (const FilterChoice& choice : all) {
        ContourGrid grid;
        grid.filter = choice;
        grid.nx = nx;
        grid.ny = ny;
        for (int j = 0; j < ny; ++j) {
            const double y = mesh.ymin + (j + 0.5) * mesh.ly() / ny;
            for (int i = 0; i < nx; ++i) {
                const double x = mesh.xmin + (i + 0.5) * mesh.lx() / nx;
                const double value = choice.config
                                         ? filter_point(field, {x, y}, *choice.config)
                                         : field.evaluate(x, y);
                const double err = std::abs(value - exact(x, y));
                grid.x.push_back(x);
                grid.y.push_back(y);
                grid.log10_error.push_back(
                    err <= 1e-300 ? -std::numeric_limits<double>::infinity()
                                  : std::log10(err));
            }
        }
        grids.push_back(std::move(grid));
    }
    return grids;
}

void write_contour_csv(const ContourGrid& grid, std::ostream& out) {
    out << "# filter=" << filter_descriptor(grid.filter) << " grid=" << grid.nx << 'x'
        << grid.ny << " floor=<1e-300\nx,y,log10_error\n";
    for (std::size_t s = 0; s < grid.x.size(); ++s) {
        out << sig12(grid.x[s]) << ',' << sig12(grid.y[s]) << ',';
        if (std::isinf(grid.log10_error[s])) {
            out << "-inf";
        } else {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", grid.log10_error[s]);
            out << buf;
        }
        out << '\n';
    }
}

std::vector<CountReport> run_counts_timing(const ModalField2D& field, Point2 point,
                                           const std::vector<FilterChoice>& filters) {
    using clock = std::chrono::steady_clock;
    std::vector<CountReport> reports;
    for (const FilterChoice& choice : filters) {
        if (!choice.config) {
            throw std::invalid_argument("run_counts_timing: 'none' has no convolution to count");
        }
        const FilterConfig& config = *choice.config;
        CountReport report;
        report.filter = choice;

        // Kernels prebuilt so the timed region is exactly the single-point
        // post-process (footprint search plus quadrature).
        const int k = config.resolved_k(field);
        const double mu = config.resolved_mu();
        const SiacKernel kx(k, mu * field.mesh().hx());
        const SiacKernel ky(k, mu * field.mesh().hy());
        const bool is_line = config.kind == FilterKind::line;
        auto run = [&]() {
            return is_line ? filter_point_line(field, point, kx, config.theta)
                           : filter_point_tensor(field, point, kx, ky);
        };
        if (is_line) {
            filter_point_line(field, point, kx, config.theta, &report.counters);
        } else {
            filter_point_tensor(field, point, kx, ky, &report.counters);
        }

        // Median of 5; each measurement averages enough repeats to be readable
        // on a microsecond-scale operation.
        std::vector<double> measurements;
        for (int rep = 0; rep < 5; ++rep) {
            double sink = 0.0;
            long repeats = 1;
            while (true) {
                const auto begin = clock::now();
                for (long r = 0; r < repeats; ++r) sink += run();
                const std::chrono::duration<double> elapsed = clock::now() - begin;
                if (elapsed.count() > 0.02 || repeats >= (1L << 22)) {
                    measurements.push_back(elapsed.count() / repeats);
                    break;
                }
                repeats *= 4;
            }
            timing_sink = sink;
        }
        std::sort(measurements.begin(), measurements.end());
        report.seconds = measurements[measurements.size() / 2];
        reports.push_back(std::move(report));
    }
    return reports;
}

void write_counts_csv(const std::vector<CountReport>& reports, Point2 point, int k,
                      std::ostream& out) {
    out << "# point=" << sig12(point.x) << ',' << sig12(point.y) << " k=" << k
        << "\nfilter,theta,mu,intersection_scans,integrals,quadrature_evals,seconds\n";
    for (const CountReport& report : reports) {
        const FilterConfig& c = *report.filter.config;
        out << report.filter.label() << ',' << sig12(c.theta) << ','
            << sig12(c.resolved_mu()) << ',' << report.counters.intersection_scans << ','
            << report.counters.integrals << ',' << report.counters.quadrature_evals << ','
            << sci6(report.seconds) << '\n';
    }
}

}  // namespace siac::harness
