// Command-line driver: solve the advection test problem, filter stored
// fields, and run the convergence / slice / contour / cost studies.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "siac/dg.hpp"
#include "siac/field_io.hpp"
#include "siac/filtering.hpp"
#include "siac/harness.hpp"

namespace {

using namespace siac;
namespace fs = std::filesystem;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

Sampling parse_sampling(const std::string& text) {
    if (text == "errgrid") return Sampling::error_grid();
    if (text.rfind("uniform:", 0) == 0) {
        const std::string dims = text.substr(8);
        const auto comma = dims.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("expected uniform:NX,NY, got '" + text + "'");
        }
        return Sampling::uniform(std::stoi(dims.substr(0, comma)),
                                 std::stoi(dims.substr(comma + 1)));
    }
    throw std::runtime_error("unknown sampling '" + text + "' (errgrid or uniform:NX,NY)");
}

Point2 parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::runtime_error("expected X,Y, got '" + text + "'");
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

FilterConfig single_filter(const std::string& kind, double theta, double mu) {
    harness::FilterChoice choice = harness::parse_filter_list(kind)[0];
    if (!choice.config) throw std::runtime_error("filter kind must be line or tensor");
    choice.config->theta = theta;
    choice.config->mu = mu;
    return *choice.config;
}

int run_solve(const std::string& ic_name, int k, int nx, int ny, double tfinal,
              double cfl, const std::string& out_path) {
    const harness::InitialCondition ic = harness::initial_condition(ic_name);
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(nx, ny);
    ModalField2D field = project_initial(mesh, k, ic.u0);
    if (tfinal > 0.0) field = solve_advection(field, tfinal, cfl);
    save_field(field, out_path);
    std::cout << "wrote " << out_path << " (k=" << k << ", " << nx << "x" << ny
              << ", t=" << tfinal << ")\n";
    return 0;
}

int run_filter(const std::string& field_path, const std::string& kind, double theta,
               double mu, const std::string& sampling_text, const std::string& out_path) {
    const ModalField2D field = load_field(field_path);
    const FilterConfig config = single_filter(kind, theta, mu);
    const Sampling sampling = parse_sampling(sampling_text);
    const SampledFilterField result = filter_field(field, config, sampling);

    std::ofstream out = open_output(out_path);
    out << "# field=" << field_path << " kind=" << kind << " theta=" << theta
        << " mu=" << config.resolved_mu() << " sampling=" << sampling_text << '\n';
    out << "# intersection_scans=" << result.counters.intersection_scans
        << " integrals=" << result.counters.integrals
        << " quadrature_evals=" << result.counters.quadrature_evals << '\n';
    out << "x,y,value\n";
    char buf[96];
    for (std::size_t s = 0; s < result.x.size(); ++s) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.17g\n", result.x[s], result.y[s],
                      result.value[s]);
        out << buf;
    }
    std::cout << "wrote " << out_path << " (" << result.x.size() << " samples)\n";
    return 0;
}

int run_study(const std::string& config_path, const std::string& out_dir) {
    const harness::StudySpec spec = harness::parse_study_config_file(config_path);
    fs::create_directories(out_dir);
    const harness::ConvergenceReport report = harness::run_convergence_study(
        spec, [](const std::string& line) { std::cout << "  " << line << '\n'; });
    const std::string out_path = (fs::path(out_dir) / "study.csv").string();
    std::ofstream out = open_output(out_path);
    harness::write_study_csv(report, out);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int run_slices(const std::string& field_path, const std::string& filters_text,
               const std::string& cuts_text, const std::string& ic_name, double tfinal,
               const std::string& out_dir) {
    const ModalField2D field = load_field(field_path);
    const auto filters = harness::parse_filter_list(filters_text);
    const auto cuts = harness::parse_cut_list(cuts_text);
    const auto exact = harness::initial_condition(ic_name).exact_at(tfinal);
    fs::create_directories(out_dir);
    const auto profiles = harness::run_slices(field, exact, filters, cuts);
    for (const auto& profile : profiles) {
        const std::string out_path =
            (fs::path(out_dir) / ("slice_" + profile.cut.label() + ".csv")).string();
        std::ofstream out = open_output(out_path);
        harness::write_slice_csv(profile, filters, out);
        std::cout << "wrote " << out_path << '\n';
    }
    return 0;
}

int run_contours(const std::string& field_path, const std::string& filters_text,
                 const std::string& grid_text, const std::string& ic_name, double tfinal,
                 const std::string& out_dir) {
    const ModalField2D field = load_field(field_path);
    const auto filters = harness::parse_filter_list(filters_text);
    const Point2 dims = parse_point(grid_text);
    const auto exact = harness::initial_condition(ic_name).exact_at(tfinal);
    fs::create_directories(out_dir);
    const auto grids = harness::run_contours(field, exact, filters,
                                             static_cast<int>(dims.x),
                                             static_cast<int>(dims.y));
    for (std::size_t g = 0; g < grids.size(); ++g) {
        const std::string name = g == 0 ? "dg" : "filter" + std::to_string(g);
        const std::string out_path =
            (fs::path(out_dir) / ("contour_" + name + ".csv")).string();
        std::ofstream out = open_output(out_path);
        harness::write_contour_csv(grids[g], out);
        std::cout << "wrote " << out_path << '\n';
    }
    return 0;
}

int run_counts(int k, const std::string& point_text, int n, const std::string& filters_text,
               const std::string& out_path) {
    const Point2 point = parse_point(point_text);
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(n, n);
    const ModalField2D field =
        project_initial(mesh, k, harness::initial_condition("sinxy").u0);
    const auto filters = harness::parse_filter_list(filters_text);
    const auto reports = harness::run_counts_timing(field, point, filters);
    std::ofstream out = open_output(out_path);
    harness::write_counts_csv(reports, point, k, out);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIAC line and tensor filtering for 2D DG advection fields"};
    app.require_subcommand(1);

    // solve
    std::string ic = "sinxy", out_path, field_path, kind = "line";
    int k = 1, nx = 20, ny = 20, counts_n = 20;
    double tfinal = 2.0, cfl = 0.05, theta = 0.0, mu = 0.0;
    std::string sampling = "errgrid", config_path, out_dir = ".";
    std::string filters_text, cuts_text, grid_text = "64,64", point_text = "3.0,3.1";

    CLI::App* solve = app.add_subcommand("solve", "solve the advection test problem");
    solve->add_option("--ic", ic, "initial condition: sinxy | sinxcosy");
    solve->add_option("--k", k, "polynomial degree")->required();
    solve->add_option("--nx", nx, "elements in x")->required();
    solve->add_option("--ny", ny, "elements in y")->required();
    solve->add_option("--tfinal", tfinal, "final time (0 = projection only)");
    solve->add_option("--cfl", cfl, "time step constant");
    solve->add_option("--out", out_path, "output field file")->required();

    CLI::App* filter = app.add_subcommand("filter", "filter a stored field");
    filter->add_option("--field", field_path, "input field file")->required();
    filter->add_option("--kind", kind, "tensor | line")->required();
    filter->add_option("--theta", theta, "rotation angle in radians (line)");
    filter->add_option("--mu", mu, "scaling multiplier, H = mu h (0 = default)");
    filter->add_option("--sampling", sampling, "errgrid | uniform:NX,NY");
    filter->add_option("--out", out_path, "output CSV")->required();

    CLI::App* study = app.add_subcommand("study", "run a convergence study");
    study->add_option("--config", config_path, "key=value study config")->required();
    study->add_option("--out-dir", out_dir, "output directory")->required();

    CLI::App* slices = app.add_subcommand("slices", "pointwise error profiles along cuts");
    slices->add_option("--field", field_path, "input field file")->required();
    slices->add_option("--filters", filters_text, "e.g. line:theta=3pi/4,mu=sqrt2;tensor:mu=1")
        ->required();
    slices->add_option("--cuts", cuts_text, "e.g. horizontal:1.0;vertical:2.5;diagonal")
        ->required();
    slices->add_option("--ic", ic, "initial condition the field was solved from");
    slices->add_option("--tfinal", tfinal, "solve time of the field");
    slices->add_option("--out-dir", out_dir, "output directory")->required();

    CLI::App* contours = app.add_subcommand("contours", "log10 pointwise error grids");
    contours->add_option("--field", field_path, "input field file")->required();
    contours->add_option("--filters", filters_text, "filter list")->required();
    contours->add_option("--grid", grid_text, "sampling grid NX,NY");
    contours->add_option("--ic", ic, "initial condition the field was solved from");
    contours->add_option("--tfinal", tfinal, "solve time of the field");
    contours->add_option("--out-dir", out_dir, "output directory")->required();

    CLI::App* counts = app.add_subcommand("counts", "operation counts and timing per filter");
    counts->add_option("--k", k, "polynomial degree")->required();
    counts->add_option("--point", point_text, "query point X,Y");
    counts->add_option("--n", counts_n, "mesh elements per axis");
    counts->add_option("--filters", filters_text,
                       "filter list (default line 3pi/4 vs tensor)");
    counts->add_option("--out", out_path, "output CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(ic, k, nx, ny, tfinal, cfl, out_path);
        if (filter->parsed()) return run_filter(field_path, kind, theta, mu, sampling, out_path);
        if (study->parsed()) return run_study(config_path, out_dir);
        if (slices->parsed())
            return run_slices(field_path, filters_text, cuts_text, ic, tfinal, out_dir);
        if (contours->parsed())
            return run_contours(field_path, filters_text, grid_text, ic, tfinal, out_dir);
        if (counts->parsed()) {
            if (filters_text.empty()) {
                filters_text = "line:theta=3pi/4,mu=sqrt2;tensor:mu=1";
            }
            return run_counts(k, point_text, counts_n, filters_text, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
