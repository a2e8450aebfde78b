// Command-line front end: polygon generators, Cheeger computations, polygon
// distances, alignment and the stability experiments.  All polygon input and
// output uses the JSON wire formats from json_io.
//
// Exit codes: 0 success, 2 validation/usage error, 3 inequality violation
// reported by `verify` (or a failed series assertion).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cheegerlab/json_io.hpp"
#include "svg_plot.hpp"

using namespace cheegerlab;

namespace {

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw GeometryError("empty list: " + csv);
    return out;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        save_json(j, out_path);
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw GeometryError("cannot write " + path);
    os << text;
}

CheegerMethod parse_method(const std::string& m) {
    if (m == "auto") return CheegerMethod::automatic;
    if (m == "formula") return CheegerMethod::formula;
    if (m == "root") return CheegerMethod::radius_root;
    throw GeometryError("unknown method: " + m);
}

DistanceMetric parse_metric(const std::string& m) {
    if (m == "hausdorff") return DistanceMetric::hausdorff;
    if (m == "l1") return DistanceMetric::l1;
    throw GeometryError("unknown metric: " + m);
}

std::vector<SweepPlotRow> read_sweep_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GeometryError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("eps,deficit,hd,l1,ratio_hd,ratio_l1", 0) != 0)
        throw GeometryError("not a sweep CSV: " + path);
    std::vector<SweepPlotRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 6) continue;
        SweepPlotRow r;
        r.eps = std::stod(cells[0]);
        r.deficit = std::stod(cells[1]);
        if (cells[4] != "degenerate") r.ratio_hd = std::stod(cells[4]);
        if (cells[5] != "degenerate") r.ratio_l1 = std::stod(cells[5]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cheeger constants, Cheeger sets and polygon stability experiments"};
    app.require_subcommand(1);

    auto* ngon = app.add_subcommand("ngon", "unit-area regular N-gon as polygon JSON");
    int ngon_n = 6;
    std::string ngon_out;
    ngon->add_option("--n", ngon_n, "side count")->required();
    ngon->add_option("--out", ngon_out, "output file (stdout when omitted)");

    auto* compute = app.add_subcommand("compute", "Cheeger constant of a convex polygon");
    std::string compute_in, compute_method = "auto";
    compute->add_option("--in", compute_in, "polygon JSON")->required();
    compute->add_option("--method", compute_method, "auto|formula|root");

    auto* cset = app.add_subcommand("cheeger-set", "Cheeger set as arc-polygon JSON");
    std::string cset_in, cset_out;
    cset->add_option("--in", cset_in, "polygon JSON")->required();
    cset->add_option("--out", cset_out, "output file (stdout when omitted)");

    auto* dist = app.add_subcommand("distance", "distance between two polygons");
    std::string dist_a, dist_b, dist_metric = "hausdorff";
    double dist_err_tol = 0.0;
    dist->add_option("--a", dist_a)->required();
    dist->add_option("--b", dist_b)->required();
    dist->add_option("--metric", dist_metric, "hausdorff|l1");
    dist->add_option("--err-tol", dist_err_tol, "certified error (default 1e-7 x scale)");

    auto* al = app.add_subcommand("align", "optimal rigid motion of one polygon onto another");
    std::string al_moving, al_fixed, al_metric = "hausdorff";
    al->add_option("--moving", al_moving)->required();
    al->add_option("--fixed", al_fixed)->required();
    al->add_option("--metric", al_metric, "hausdorff|l1");

    auto* def = app.add_subcommand("deficit", "stability record of a convex polygon");
    std::string def_in;
    def->add_option("--in", def_in)->required();

    auto* sweep = app.add_subcommand("sweep", "perturbation sweep to CSV");
    int sweep_n = 6;
    std::string sweep_eps = "0.08,0.04,0.02,0.01", sweep_out;
    sweep->add_option("--n", sweep_n);
    sweep->add_option("--eps", sweep_eps, "comma-separated eps list");
    sweep->add_option("--out", sweep_out, "CSV file")->required();

    auto* tent = app.add_subcommand("tentacle", "spiked-square hexagon as polygon JSON");
    double tent_k = 10.0;
    std::string tent_out;
    tent->add_option("--k", tent_k)->required();
    tent->add_option("--out", tent_out, "output file (stdout when omitted)");

    auto* ts = app.add_subcommand("tentacle-series", "bounded-deficit series to CSV");
    std::string ts_ks = "5,10,20,40", ts_out;
    ts->add_option("--ks", ts_ks, "comma-separated k list");
    ts->add_option("--out", ts_out, "CSV file")->required();

    auto* verify = app.add_subcommand("verify", "inequality checks over a random ensemble");
    int verify_n = 6, verify_samples = 1000;
    std::uint64_t verify_seed = 1;
    std::string verify_out;
    bool verify_skip_align = false;
    verify->add_option("--n", verify_n);
    verify->add_option("--samples", verify_samples);
    verify->add_option("--seed", verify_seed);
    verify->add_option("--out", verify_out, "report JSON (stdout when omitted)");
    verify->add_flag("--skip-align", verify_skip_align,
                     "skip the aligned-Hausdorff ratio columns");

    auto* plot = app.add_subcommand("plot", "render a sweep CSV as SVG");
    std::string plot_in, plot_out;
    plot->add_option("--in", plot_in, "sweep CSV")->required();
    plot->add_option("--out", plot_out, "SVG file")->required();

    try {
        app.parse(argc, argv);

        if (*ngon) {
            emit(polygon_to_json(regular_ngon(ngon_n)), ngon_out);
        } else if (*compute) {
            const Polygon p = load_polygon(compute_in);
            emit(cheeger_report_to_json(cheeger_constant(p, parse_method(compute_method))), "");
        } else if (*cset) {
            emit(arc_polygon_to_json(cheeger_set(load_polygon(cset_in))), cset_out);
        } else if (*dist) {
            const Polygon a = load_polygon(dist_a);
            const Polygon b = load_polygon(dist_b);
            CertifiedDistance d;
            if (parse_metric(dist_metric) == DistanceMetric::hausdorff) {
                const double tol = dist_err_tol > 0.0
                                       ? dist_err_tol
                                       : 1e-7 * std::max(bbox_scale(a), bbox_scale(b));
                d = hausdorff_boundary(a, b, tol);
            } else {
                d = {symmetric_difference_area(a, b), 0.0};  // exact clipping
            }
            emit(certified_distance_to_json(d), "");
        } else if (*al) {
            const AlignResult r =
                align(load_polygon(al_moving), load_polygon(al_fixed), parse_metric(al_metric));
            emit(align_result_to_json(r), "");
        } else if (*def) {
            emit(stability_record_to_json(aligned_deficit_record(load_polygon(def_in), def_in)),
                 "");
        } else if (*sweep) {
            const auto rows = sweep_perturbation(sweep_n, parse_list(sweep_eps));
            std::ostringstream os;
            write_sweep_csv(rows, os);
            write_text(os.str(), sweep_out);
        } else if (*tent) {
            emit(polygon_to_json(tentacle_polygon(tent_k)), tent_out);
        } else if (*ts) {
            const auto rows = tentacle_series(parse_list(ts_ks));
            std::ostringstream os;
            write_tentacle_csv(rows, os);
            write_text(os.str(), ts_out);
        } else if (*verify) {
            const EnsembleReport rep =
                verify_ensemble(verify_n, verify_samples, verify_seed, !verify_skip_align);
            emit(ensemble_report_to_json(rep), verify_out);
            if (rep.total_violations() > 0) {
                std::cerr << "verify: " << rep.total_violations() << " inequality violation(s)\n";
                return 3;
            }
        } else if (*plot) {
            write_text(render_sweep_svg(read_sweep_csv(plot_in)), plot_out);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const InequalityViolationError& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
