#include "uan/cli.hpp"
#include "uan/band_plan.hpp"
#include "uan/channel.hpp"
#include "uan/numerics.hpp"
#include "uan/scaling.hpp"
#include "uan/sweeps.hpp"
#include "uan/waterfill.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uan::cli {

namespace {

using json = nlohmann::ordered_json;

// shortest decimal that round-trips the double
std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct OutputTarget {
    std::ostream* stream;
    std::unique_ptr<std::ofstream> file;
};

OutputTarget open_output(const std::string& path, std::ostream& fallback) {
    OutputTarget t;
    if (path.empty()) {
        t.stream = &fallback;
        return t;
    }
    t.file = std::make_unique<std::ofstream>(path);
    if (!*t.file)
        throw std::domain_error("cannot open output file: " + path);
    t.stream = t.file.get();
    return t;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            json arr = json::array();
            for (const auto& row : rows) {
                json obj;
                for (std::size_t c = 0; c < header.size(); ++c)
                    obj[header[c]] = row[c];
                arr.push_back(std::move(obj));
            }
            os << arr.dump(2) << "\n";
            return;
        }
        for (std::size_t c = 0; c < header.size(); ++c)
            os << (c ? "," : "") << header[c];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                os << (c ? "," : "") << format_double(row[c]);
            os << "\n";
        }
    }
};

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0 && lo <= hi))
        throw std::domain_error("grid: need 0 < lo <= hi");
    if (points == 0)
        throw std::domain_error("grid: need at least one point");
    std::vector<double> g;
    g.reserve(points);
    if (points == 1) {
        g.push_back(lo);
        return g;
    }
    const double step = std::log(hi / lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        g.push_back(lo * std::exp(step * static_cast<double>(i)));
    g.back() = hi;
    return g;
}

std::vector<double> log_integer_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g;
    for (double v : log_grid(lo, hi, points)) {
        const double n = std::max(1.0, std::round(v));
        if (g.empty() || n > g.back())
            g.push_back(n);
    }
    return g;
}

json band_to_json(const Band& b) {
    return json{{"f_min", b.f_min}, {"f_max", b.f_max}};
}

struct ChannelOptions {
    ChannelParams params{};

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", params.alpha, "Spreading factor")
            ->capture_default_str();
        cmd->add_option("--shipping", params.shipping, "Shipping activity in [0,1]")
            ->capture_default_str();
        cmd->add_option("--wind", params.wind, "Wind speed in m/s")->capture_default_str();
        cmd->add_option("--l-ref", params.l_ref_km, "Reference distance in km")
            ->capture_default_str();
        cmd->add_option("--f-lo", params.f_domain.lo, "Frequency domain lower edge, kHz")
            ->capture_default_str();
        cmd->add_option("--f-hi", params.f_domain.hi, "Frequency domain upper edge, kHz")
            ->capture_default_str();
    }
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Underwater acoustic network capacity toolkit"};
    app.set_config("--config", "", "Config file with key=value lines");
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    app.add_option("--out", out_path, "Output file (stdout when omitted)");
    app.add_option("--format", format, "Output format for table commands")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // absorption
    auto* c_abs = app.add_subcommand("absorption", "Thorp absorption over a frequency grid")->fallthrough();
    double abs_lo = 0.1, abs_hi = 200.0;
    std::size_t abs_points = 512;
    c_abs->add_option("--f-lo", abs_lo, "Grid lower edge, kHz")->capture_default_str();
    c_abs->add_option("--f-hi", abs_hi, "Grid upper edge, kHz")->capture_default_str();
    c_abs->add_option("--points", abs_points, "Grid points (log-spaced)")->capture_default_str();

    // noise
    auto* c_noise = app.add_subcommand("noise", "Ambient noise psd over a frequency grid")->fallthrough();
    ChannelOptions noise_opts;
    noise_opts.attach(c_noise);
    std::size_t noise_points = 512;
    c_noise->add_option("--points", noise_points, "Grid points (log-spaced)")
        ->capture_default_str();

    // fc-curve
    auto* c_fc = app.add_subcommand("fc-curve", "Optimal center frequency vs distance")->fallthrough();
    ChannelOptions fc_opts;
    fc_opts.attach(c_fc);
    double l_min = 0.1, l_max = 100.0;
    std::size_t l_points = 64;
    c_fc->add_option("--l-min", l_min, "Distance grid start, km")->capture_default_str();
    c_fc->add_option("--l-max", l_max, "Distance grid end, km")->capture_default_str();
    c_fc->add_option("--l-points", l_points, "Distance grid points (log-spaced)")
        ->capture_default_str();

    // waterfill
    auto* c_wf = app.add_subcommand("waterfill", "Waterfilling solution for one link")->fallthrough();
    ChannelOptions wf_opts;
    wf_opts.attach(c_wf);
    double wf_l = 10.0;
    std::optional<double> wf_capacity, wf_power, wf_delta_f;
    c_wf->add_option("--l", wf_l, "Link distance, km")->required();
    auto* opt_cap = c_wf->add_option("--capacity", wf_capacity, "Target capacity");
    auto* opt_pow = c_wf->add_option("--power", wf_power, "Power budget");
    auto* opt_dfw = c_wf->add_option("--delta-f", wf_delta_f, "Target band width, kHz");
    opt_cap->excludes(opt_pow)->excludes(opt_dfw);
    opt_pow->excludes(opt_dfw);

    // bound
    auto* c_bound = app.add_subcommand("bound", "Narrowband transport-capacity bound curves")->fallthrough();
    double b_alpha = 1.0, b_beta = 2.0, b_w = 1.0;
    std::vector<double> b_afs;
    double b_nmin = 1.0, b_nmax = 1e6;
    std::size_t b_npoints = 61;
    c_bound->add_option("--alpha", b_alpha, "Spreading factor")->capture_default_str();
    c_bound->add_option("--beta", b_beta, "SINR threshold")->capture_default_str();
    c_bound->add_option("--w-rate", b_w, "Transmission rate W, bps")->capture_default_str();
    c_bound->add_option("--a-f", b_afs, "Absorption values (repeatable)");
    c_bound->add_option("--n-min", b_nmin, "Smallest node count")->capture_default_str();
    c_bound->add_option("--n-max", b_nmax, "Largest node count")->capture_default_str();
    c_bound->add_option("--n-points", b_npoints, "Node-count grid points (log-spaced)")
        ->capture_default_str();

    // simulate
    auto* c_sim = app.add_subcommand("simulate", "Seeded greedy-schedule runs vs the bound")->fallthrough();
    ChannelOptions sim_opts;
    sim_opts.attach(c_sim);
    TransportSweepConfig sim_cfg;
    double sim_af = 0.0;
    bool sim_serial = false;
    c_sim->add_option("--runs", sim_cfg.runs, "Number of runs")->capture_default_str();
    c_sim->add_option("--seed", sim_cfg.seed, "Base seed; run r uses seed + r")
        ->capture_default_str();
    c_sim->add_option("--n-min", sim_cfg.n_min, "Smallest node count")->capture_default_str();
    c_sim->add_option("--n-max", sim_cfg.n_max, "Largest node count")->capture_default_str();
    c_sim->add_option("--beta", sim_cfg.beta, "SINR threshold")->capture_default_str();
    auto* sim_af_opt =
        c_sim->add_option("--a-f", sim_af, "Absorption override for the band");
    c_sim->add_option("--band-center", sim_cfg.band_center_khz, "Band center, kHz")
        ->capture_default_str();
    c_sim->add_option("--delta-f", sim_cfg.delta_f_khz, "Band width, kHz")
        ->capture_default_str();
    c_sim->add_option("--slots", sim_cfg.slots, "Time slots per run")->capture_default_str();
    c_sim->add_flag("--serial", sim_serial, "Run the reference serial sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        OutputTarget target = open_output(out_path, out);
        std::ostream& os = *target.stream;

        if (*c_abs) {
            Table table;
            table.header = {"f_khz", "a_db_per_km", "a_linear"};
            for (double f : log_grid(abs_lo, abs_hi, abs_points))
                table.rows.push_back({f, absorption_db_per_km(f), absorption_linear(f)});
            table.write(os, format);
        } else if (*c_noise) {
            const ChannelParams& p = noise_opts.params;
            p.validate();
            Table table;
            table.header = {"f_khz", "noise_db", "noise_linear"};
            for (double f : log_grid(p.f_domain.lo, p.f_domain.hi, noise_points))
                table.rows.push_back({f, noise_psd_db(f, p), noise_psd(f, p)});
            table.write(os, format);
        } else if (*c_fc) {
            const ChannelParams& p = fc_opts.params;
            p.validate();
            Table table;
            table.header = {"l_km", "f_c_khz", "an_min"};
            for (double l : log_grid(l_min, l_max, l_points)) {
                const CenterFrequency fc = optimal_center_frequency(l, p);
                table.rows.push_back({l, fc.f_khz, fc.an_min});
            }
            table.write(os, format);
        } else if (*c_wf) {
            const ChannelParams& p = wf_opts.params;
            WaterfillSolution sol;
            if (wf_capacity)
                sol = solve_for_capacity(wf_l, *wf_capacity, p);
            else if (wf_power)
                sol = solve_for_power(wf_l, *wf_power, p);
            else if (wf_delta_f)
                sol = solve_for_bandwidth(wf_l, *wf_delta_f, p);
            else
                throw std::domain_error(
                    "waterfill: one of --capacity, --power, --delta-f is required");
            json doc;
            doc["l_km"] = wf_l;
            doc["k_level"] = sol.k_level;
            doc["bands"] = json::array();
            for (const Band& b : sol.bands)
                doc["bands"].push_back(band_to_json(b));
            doc["power"] = sol.power;
            doc["capacity"] = sol.capacity;
            doc["narrowband"] = sol.narrowband;
            doc["clipped"] = sol.clipped;
            os << doc.dump(2) << "\n";
        } else if (*c_bound) {
            if (b_afs.empty())
                b_afs = {1.0, 10.0, 100.0, 1000.0, 10000.0};
            const std::vector<double> ns = log_integer_grid(b_nmin, b_nmax, b_npoints);
            Table table;
            table.header = {"a_f", "n", "per_pair_bound", "transport_bound", "n_ref_decay"};
            for (const BoundCurveRow& row : bound_curve(b_alpha, b_beta, b_w, b_afs, ns))
                table.rows.push_back({row.a_f, row.n, row.per_pair_bound, row.transport_bound,
                                      std::pow(row.n, -1.0 / b_alpha)});
            table.write(os, format);
        } else if (*c_sim) {
            sim_cfg.channel = sim_opts.params;
            sim_cfg.channel.validate();
            if (sim_af_opt->count() > 0)
                sim_cfg.a_f = sim_af;
            const std::vector<SimRecord> records = run_transport_sweep(
                sim_cfg, sim_serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel);
            bool violation = false;
            for (const SimRecord& r : records) {
                json line;
                line["seed"] = r.seed;
                line["n"] = r.n;
                line["alpha"] = r.alpha;
                line["beta"] = r.beta;
                line["a_f"] = r.a_f;
                line["margin_min"] = r.margin_min;
                line["transport_achieved"] = r.transport_achieved;
                line["transport_bound"] = r.transport_bound;
                os << line.dump() << "\n";
                if (r.margin_min < 0.0)
                    violation = true;
            }
            if (violation)
                return 4;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        err << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("uancap");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace uan::cli
