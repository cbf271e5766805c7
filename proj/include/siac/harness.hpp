#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "siac/filtering.hpp"
#include "siac/modal_field.hpp"

namespace siac::harness {

/// Built-in test problems for the advection equation on [0, 2 pi]^2 with
/// velocity (1, 1): the exact solution at time T is u0(x - T, y - T).
struct InitialCondition {
    std::string name;
    std::function<double(double, double)> u0;

    std::function<double(double, double)> exact_at(double tfinal) const;
};

/// Looks up "sinxy" (sin(x+y)) or "sinxcosy" (sin x cos y).
InitialCondition initial_condition(const std::string& name);

/// One filter column of a study: either the unfiltered solution or a
/// FilterConfig.
struct FilterChoice {
    std::optional<FilterConfig> config;  // nullopt = unfiltered

    std::string label() const;  // "none", "line" or "tensor"
    bool operator==(const FilterChoice&) const = default;
};

/// Parses a filter list "none;line:theta=3pi/4,mu=sqrt2;tensor:mu=1".
/// theta accepts plain reals or multiples of pi ("pi/4", "3pi/4", "0.5pi");
/// mu accepts plain reals, "sqrt2" and "1/sqrt2".
std::vector<FilterChoice> parse_filter_list(const std::string& text);

struct StudySpec {
    std::string ic = "sinxy";
    std::vector<int> degrees;
    std::vector<int> mesh_sizes;  // N, used as N x N
    std::vector<FilterChoice> filters;
    double tfinal = 2.0;
    double cfl = 0.05;
    /// Per-degree cfl override, e.g. {{3, 0.02}}.
    std::vector<std::pair<int, double>> cfl_overrides;

    double cfl_for(int k) const;
};

/// Reads a study spec from flat key=value text (# starts a comment).
/// Keys: ic, klist, nlist, filters, tfinal, cfl, cfl_k<d>.
StudySpec parse_study_config(std::istream& in);
StudySpec parse_study_config_file(const std::string& path);

struct ReportRow {
    int k = 0;
    int n = 0;
    FilterChoice filter;
    double l2_error = 0.0;
    std::optional<double> order;  // vs the previous N with the same descriptor
};

struct ConvergenceReport {
    StudySpec spec;
    std::vector<ReportRow> rows;
};

/// Solves each (k, N) case to tfinal and measures the unfiltered and filtered
/// L2 errors on the shared error grid. progress, if given, receives one line
/// per completed case.
ConvergenceReport run_convergence_study(
    const StudySpec& spec,
    const std::function<void(const std::string&)>& progress = nullptr);

/// Study CSV: '#' config-echo comments, then the header
/// k,N,filter,theta,mu,l2_error,order. Errors carry 6 significant digits in
/// scientific notation, angles 12 significant digits.
void write_study_csv(const ConvergenceReport& report, std::ostream& out);

struct CutSpec {
    enum class Kind { horizontal, vertical, diagonal };
    Kind kind = Kind::horizontal;
    double offset = 0.0;  // y = offset (horizontal) or x = offset (vertical)

    std::string label() const;
};

/// Parses "horizontal:1.0;vertical:2.5;diagonal".
std::vector<CutSpec> parse_cut_list(const std::string& text);

struct SliceProfile {
    CutSpec cut;
    std::vector<double> arc;                      // strictly increasing
    std::vector<double> dg_error;                 // |u_h - u|
    std::vector<std::vector<double>> filter_error;  // per filter, |u* - u|
};

/// Pointwise error profiles along the cuts, 1000 samples each.
std::vector<SliceProfile> run_slices(const ModalField2D& field,
                                     const std::function<double(double, double)>& exact,
                                     const std::vector<FilterChoice>& filters,
                                     const std::vector<CutSpec>& cuts,
                                     int samples = 1000);

void write_slice_csv(const SliceProfile& profile,
                     const std::vector<FilterChoice>& filters, std::ostream& out);

/// Total variation of a sampled profile (sum of |increments|).
double total_variation(const std::vector<double>& samples);

struct ContourGrid {
    FilterChoice filter;
    int nx = 0, ny = 0;
    std::vector<double> x, y;        // sample coordinates (cell centres)
    std::vector<double> log10_error; // -inf floor encoded as -infinity
};

/// log10 pointwise error on a uniform grid, one grid per filter plus the
/// unfiltered solution (always first). Errors below 1e-300 floor to -inf.
std::vector<ContourGrid> run_contours(const ModalField2D& field,
                                      const std::function<double(double, double)>& exact,
                                      const std::vector<FilterChoice>& filters,
                                      int nx, int ny);

void write_contour_csv(const ContourGrid& grid, std::ostream& out);

struct CountReport {
    FilterChoice filter;
    Counters counters;
    double seconds = 0.0;  // median-of-5 wall time for one point
};

/// Filters a single point of a degree-k field with each filter, reporting the
/// decomposition counters and a median-of-5 wall time per filter.
std::vector<CountReport> run_counts_timing(const ModalField2D& field, Point2 point,
                                           const std::vector<FilterChoice>& filters);

void write_counts_csv(const std::vector<CountReport>& reports, Point2 point,
                      int k, std::ostream& out);

}  // namespace siac::harness
