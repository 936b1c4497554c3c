#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dicke/errors.hpp"
#include "dicke/observables.hpp"
#include "dicke/spectrum.hpp"
#include "dicke/variational.hpp"

namespace dicke::cli {

namespace {

const std::vector<std::string> kCommands = {"spectrum", "rwa-diagram", "scan-fidelity", "scan-fluctuations",
                                            "variational", "probs", "oracle-check"};

std::string num(double v) { return std::isnan(v) ? "nan" : fmt::format("{:.17g}", v); }

nlohmann::json axis_json(const Axis& a) { return {{"min", a.min}, {"max", a.max}, {"count", a.count}}; }

Axis axis_from(const nlohmann::json& j, Axis a) {
    a.min = j.value("min", a.min);
    a.max = j.value("max", a.max);
    a.count = j.value("count", a.count);
    return a;
}

std::complex<double> make_xi(double eta, double phase) {
    if (phase == 0.0)
        return {eta, 0.0};
    if (phase == std::numbers::pi || phase == -std::numbers::pi)
        return {-eta, 0.0};
    return std::polar(eta, phase);
}

JobConfig defaults_for(const std::string& command) {
    JobConfig c;
    c.command = command;
    if (command == "spectrum") {
        c.x12 = {0.0, 0.0, 1};
        c.second = {0.0, 0.0, 1};
    } else if (command == "probs") {
        c.n_atoms = 7;
        c.x12 = {0.3, 0.3, 1};
        c.second = {0.0, 0.0, 1};
    } else if (command == "rwa-diagram") {
        c.model = "rwa";
    } else if (command == "variational") {
        c.second_axis = "chi";
    }
    return c;
}

JobConfig job_from_json(const nlohmann::json& j, JobConfig c) {
    if (!j.is_object())
        throw InvalidArgument("config must be a JSON object");
    c.model = j.value("model", c.model);
    c.n_atoms = j.value("n_atoms", c.n_atoms);
    c.omega_field = j.value("omega_field", c.omega_field);
    c.omega1 = j.value("omega1", c.omega1);
    c.omega2 = j.value("omega2", c.omega2);
    c.eta = j.value("eta", c.eta);
    c.xi_phase = j.value("xi_phase", c.xi_phase);
    if (j.contains("x12"))
        c.x12 = axis_from(j.at("x12"), c.x12);
    c.second_axis = j.value("second_axis", c.second_axis);
    if (j.contains("second"))
        c.second = axis_from(j.at("second"), c.second);
    if (j.contains("k"))
        c.k = axis_from(j.at("k"), c.k);
    c.use_k = j.value("use_k", c.use_k);
    c.levels = j.value("levels", c.levels);
    c.m_max = j.value("m_max", c.m_max);
    c.threads = j.value("threads", c.threads);
    if (j.contains("thresholds")) {
        const auto& t = j.at("thresholds");
        c.thresholds.zero_fidelity = t.value("zero_fidelity", c.thresholds.zero_fidelity);
        c.thresholds.continuous_ceiling = t.value("continuous_ceiling", c.thresholds.continuous_ceiling);
        c.thresholds.rwa_identity = t.value("rwa_identity", c.thresholds.rwa_identity);
    }
    if (j.contains("convergence")) {
        const auto& p = j.at("convergence");
        c.policy.initial_cutoff = p.value("initial_cutoff", c.policy.initial_cutoff);
        c.policy.step = p.value("step", c.policy.step);
        c.policy.overlap_threshold = p.value("overlap_threshold", c.policy.overlap_threshold);
        c.policy.energy_tol = p.value("energy_tol", c.policy.energy_tol);
        c.policy.max_cutoff = p.value("max_cutoff", c.policy.max_cutoff);
        c.policy.monotonic_slack = p.value("monotonic_slack", c.policy.monotonic_slack);
    }
    c.out = j.value("out", c.out);
    return c;
}

void check_config(const JobConfig& c) {
    if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end())
        throw InvalidArgument(fmt::format("unknown command '{}'", c.command));
    if (c.model != "full" && c.model != "rwa")
        throw InvalidArgument("model must be full or rwa");
    if (c.second_axis != "zeta" && c.second_axis != "chi")
        throw InvalidArgument("second axis must be zeta or chi");
    for (const Axis* a : {&c.x12, &c.second, &c.k})
        if (a->count < 1 || !std::isfinite(a->min) || !std::isfinite(a->max))
            throw InvalidArgument("ranges need finite bounds and count >= 1");
    if (c.levels < 1)
        throw InvalidArgument("levels must be at least 1");
    if (c.threads < 0)
        throw InvalidArgument("threads must be non-negative");
    if (c.policy.step < 1 || c.policy.max_cutoff < 1)
        throw InvalidArgument("cutoff step and ceiling must be positive");
}

struct Output {
    std::ostream* os = &std::cout;
    std::unique_ptr<std::ofstream> file;
    std::string path;

    explicit Output(const std::string& p) : path(p) {
        if (p == "-" || p.empty())
            return;
        file = std::make_unique<std::ofstream>(p, std::ios::binary);
        if (!*file)
            throw InvalidArgument(fmt::format("cannot open '{}' for writing", p));
        os = file.get();
    }
    bool to_file() const { return file != nullptr; }
};

void write_side_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InvalidArgument(fmt::format("cannot open '{}' for writing", path));
    f << text;
}

void require_point(const JobConfig& c) {
    if (c.x12.count != 1 || c.second.count != 1)
        throw InvalidArgument(fmt::format("{} takes single values for x12 and zeta", c.command));
}

int cmd_spectrum(const JobConfig& c) {
    require_point(c);
    const auto p = c.point(c.x12.min, c.second.min);
    Output out(c.out);
    fmt::print(*out.os, "sector,cutoff,level,energy,energy_pp\n");
    GroundState g;
    if (c.model == "rwa") {
        g = c.m_max >= 1 ? rwa_ground(p, c.m_max) : rwa_ground(p);
        const int m_max = c.m_max >= 1 ? c.m_max : default_rwa_m_max(p);
        for (int m = 0; m <= m_max; ++m) {
            auto basis = build_sector(p.n_atoms, SectorLabel::rwa_block(m));
            const auto h = assemble(p, basis, true);
            const int k = std::min<int>(c.levels, static_cast<int>(h.dim()));
            const auto pairs = lowest_eigenpair(h, k);
            for (int i = 0; i < k; ++i)
                fmt::print(*out.os, "m={},{},{},{},{}\n", m, basis->max_photons(), i, num(pairs[i].energy),
                           num(pairs[i].energy / p.n_atoms));
        }
    } else {
        g = full_ground(p, c.policy);
        for (int sign : {1, -1}) {
            auto basis = build_sector(p.n_atoms, SectorLabel::parity(sign, g.cutoff_used));
            const auto h = assemble(p, basis, false);
            const int k = std::min<int>(c.levels, static_cast<int>(h.dim()));
            const auto pairs = lowest_eigenpair(h, k);
            for (int i = 0; i < k; ++i)
                fmt::print(*out.os, "{},{},{},{},{}\n", sign > 0 ? "even" : "odd", g.cutoff_used, i,
                           num(pairs[i].energy), num(pairs[i].energy / p.n_atoms));
        }
    }
    if (out.to_file()) {
        nlohmann::json side = {{"config", to_json(c)}};
        side["ground"] = {{"energy", g.energy()},
                          {"energy_pp", g.energy() / p.n_atoms},
                          {"sector", g.pair.sector.to_string()},
                          {"parity", g.parity},
                          {"excitation_mean", g.excitation_mean},
                          {"cutoff_used", g.cutoff_used},
                          {"convergence_overlap", g.convergence_overlap},
                          {"degenerate", g.degenerate}};
        write_side_file(out.path + ".json", side.dump(2) + "\n");
    }
    return 0;
}

int finish_grid(const JobConfig& c, const PhaseDiagramGrid& grid) {
    Output out(c.out);
    write_csv(grid, *out.os);
    if (out.to_file()) {
        nlohmann::json side = {{"config", to_json(c)}, {"grid", to_json(grid.spec)}};
        std::size_t flagged = 0;
        for (const auto& cell : grid.cells)
            flagged += cell.ok() ? 0 : 1;
        side["flagged_cells"] = flagged;
        write_side_file(out.path + ".json", side.dump(2) + "\n");
        std::ofstream sep(out.path + ".separatrix.csv", std::ios::binary);
        write_overlay_csv(overlay_variational(grid), grid.spec.second_kind, sep);
    }
    for (const auto& cell : grid.cells)
        if (cell.flag == "no-convergence")
            return 3;
    for (const auto& cell : grid.cells)
        if (!cell.ok())
            return 3;
    return 0;
}

int cmd_rwa_diagram(const JobConfig& c) {
    if (c.model != "rwa")
        throw InvalidArgument("rwa-diagram needs model = rwa");
    if (c.second.count > 1)
        return finish_grid(c, scan_rwa(c.grid()));

    // Single zeta: E_m^(0)/N_a curves along x12.
    const double x_far = std::max(std::abs(c.x12.min), std::abs(c.x12.max));
    const int m_max = c.m_max >= 1 ? c.m_max : default_rwa_m_max(c.point(x_far, c.second.min));
    Output out(c.out);
    fmt::print(*out.os, "x12,m,energy_pp,ground\n");
    int status = 0;
    for (int i = 0; i < c.x12.count; ++i) {
        const double x = c.x12.at(i);
        const auto p = c.point(x, c.second.min);
        const auto e = rwa_block_energies(p, m_max);
        const auto best = static_cast<int>(std::min_element(e.begin(), e.end()) - e.begin());
        if (best == m_max)
            status = 3;
        for (int m = 0; m <= m_max; ++m)
            fmt::print(*out.os, "{},{},{},{}\n", num(std::abs(x)), m, num(e[m] / p.n_atoms), m == best ? 1 : 0);
    }
    if (out.to_file())
        write_side_file(out.path + ".json", nlohmann::json{{"config", to_json(c)}, {"m_max", m_max}}.dump(2) + "\n");
    return status;
}

int cmd_variational(const JobConfig& c) {
    if (c.model != "full")
        throw InvalidArgument("variational uses the full-model coupling convention (model = full)");
    Output out(c.out);
    fmt::print(*out.os, "x12,chi,zeta,energy_pp,region,r_c,rho_c,theta_c\n");
    for (int j = 0; j < c.second.count; ++j)
        for (int i = 0; i < c.x12.count; ++i) {
            const auto p = c.point(c.x12.at(i), c.second.at(j));
            const auto d = to_dimensionless(p);
            const auto cp = critical_point(p);
            fmt::print(*out.os, "{},{},{},{},{},{},{},{}\n", num(std::abs(d.x12)), num(d.chi), num(p.zeta),
                       num(min_energy(d, p.omega1)), cp.region == Region::Normal ? "normal" : "collective",
                       num(cp.r_c), num(cp.rho_c), num(cp.theta_c));
        }
    if (out.to_file()) {
        std::ofstream sep(out.path + ".separatrix.csv", std::ios::binary);
        fmt::print(sep, "x12,chi\n");
        for (const auto& s : variational_separatrix(c.x12.values()))
            fmt::print(sep, "{},{}\n", num(std::abs(s.x12)), num(s.chi));
        write_side_file(out.path + ".json", nlohmann::json{{"config", to_json(c)}}.dump(2) + "\n");
    }
    return 0;
}

int cmd_probs(const JobConfig& c) {
    if (c.x12.count != 1)
        throw InvalidArgument("probs takes a single x12");
    std::vector<double> zetas;
    if (c.use_k)
        for (double k : c.k.values())
            zetas.push_back(0.05 * k);
    else
        zetas = c.second.values();

    Output out(c.out);
    fmt::print(*out.os, "zeta,n,p_m,p_n2_given_nu0,p_nu0,parity\n");
    for (double z : zetas) {
        const auto p = c.point(c.x12.min, z);
        const auto g = c.model == "rwa" ? (c.m_max >= 1 ? rwa_ground(p, c.m_max) : rwa_ground(p))
                                        : full_ground(p, c.policy);
        const auto d = excitation_distribution(g);
        // Rows stop at the last excitation number carrying non-negligible weight.
        int n_hi = p.n_atoms;
        for (const auto& [m, w] : d.p_of_m)
            if (w > 1e-15)
                n_hi = std::max(n_hi, m);
        for (int n = 0; n <= n_hi; ++n) {
            const auto it = d.p_of_m.find(n);
            double cond = std::nan("");
            if (d.p_n2_given_nu0) {
                const auto jt = d.p_n2_given_nu0->find(n);
                cond = jt == d.p_n2_given_nu0->end() ? 0.0 : jt->second;
                if (n > p.n_atoms)
                    cond = 0.0;
            }
            fmt::print(*out.os, "{},{},{},{},{},{}\n", num(z), n, num(it == d.p_of_m.end() ? 0.0 : it->second),
                       num(cond), num(d.p_nu0), g.parity);
        }
    }
    if (out.to_file())
        write_side_file(out.path + ".json", nlohmann::json{{"config", to_json(c)}}.dump(2) + "\n");
    return 0;
}

int dispatch(const JobConfig& c) {
    if (c.command == "spectrum")
        return cmd_spectrum(c);
    if (c.command == "rwa-diagram")
        return cmd_rwa_diagram(c);
    if (c.command == "scan-fidelity")
        return finish_grid(c, scan_fidelity(c.grid()));
    if (c.command == "scan-fluctuations")
        return finish_grid(c, scan_fluctuations(c.grid()));
    if (c.command == "variational")
        return cmd_variational(c);
    if (c.command == "probs")
        return cmd_probs(c);
    if (c.command == "oracle-check") {
        Output out(c.out);
        return run_oracle_suite(*out.os) == 0 ? 0 : 1;
    }
    throw InvalidArgument(fmt::format("unknown command '{}'", c.command));
}

// Raw flag values; applied on top of the defaults and --config.
struct Flags {
    std::string config, write_config, model, x12, zeta, chi, k, out;
    int na = 0, levels = 0, m_max = 0, threads = 0, cutoff_start = 0, cutoff_step = 0, cutoff_max = 0;
    double omega = 0, omega1 = 0, omega2 = 0, eta = 0, xi_phase = 0, zero_threshold = 0,
           continuous_ceiling = 0, overlap_threshold = 0, energy_tol = 0;
    std::map<std::string, CLI::Option*> opts;

    bool given(const std::string& name) const { return opts.at(name)->count() > 0; }
};

void add_flags(CLI::App& sub, Flags& f) {
    auto add = [&](const std::string& name, auto& target, const std::string& help) {
        f.opts[name] = sub.add_option("--" + name, target, help);
    };
    add("config", f.config, "JSON job configuration");
    add("write-config", f.write_config, "write the resolved job configuration here");
    add("out", f.out, "output CSV path, '-' for stdout");
    add("threads", f.threads, "worker threads, 0 for all cores");
    if (sub.get_name() == "oracle-check")
        return;
    add("model", f.model, "full or rwa");
    add("na", f.na, "number of atoms");
    add("omega", f.omega, "field frequency");
    add("omega1", f.omega1, "ground level energy");
    add("omega2", f.omega2, "excited level energy");
    add("eta", f.eta, "|xi|, non-diagonal dipolar strength");
    add("xi-phase", f.xi_phase, "arg xi in radians");
    add("x12", f.x12, "matter-field control, value or min:max:count");
    add("zeta", f.zeta, "diagonal dipolar strength, value or min:max:count");
    add("chi", f.chi, "effective dipolar control (zeta + 2 eta)/omega_a, value or min:max:count");
    add("k", f.k, "probs: zeta = 0.05 k, min:max:count");
    add("levels", f.levels, "eigenvalues per sector");
    add("m-max", f.m_max, "highest RWA block");
    add("zero-threshold", f.zero_threshold, "fidelity at or below: discontinuous");
    add("continuous-ceiling", f.continuous_ceiling, "fidelity minima above: ignored");
    add("cutoff-start", f.cutoff_start, "first photon cutoff");
    add("cutoff-step", f.cutoff_step, "photon cutoff increment");
    add("cutoff-max", f.cutoff_max, "photon cutoff ceiling");
    add("overlap-threshold", f.overlap_threshold, "successive-cutoff overlap required");
    add("energy-tol", f.energy_tol, "successive-cutoff energy change per particle");
    sub.get_option("--zeta")->excludes(sub.get_option("--chi"));
}

JobConfig resolve(const std::string& command, const Flags& f) {
    JobConfig c = defaults_for(command);
    if (f.given("config")) {
        std::ifstream in(f.config);
        if (!in)
            throw InvalidArgument(fmt::format("cannot read config '{}'", f.config));
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(fmt::format("config '{}': {}", f.config, e.what()));
        }
        if (j.contains("command") && j.at("command").get<std::string>() != command)
            throw InvalidArgument(fmt::format("config is for '{}', not '{}'", j.at("command").get<std::string>(), command));
        c = job_from_json(j, c);
    }
    if (f.given("out"))
        c.out = f.out;
    if (f.given("threads"))
        c.threads = f.threads;
    if (command == "oracle-check")
        return c;
    if (f.given("model"))
        c.model = f.model;
    if (f.given("na"))
        c.n_atoms = f.na;
    if (f.given("omega"))
        c.omega_field = f.omega;
    if (f.given("omega1"))
        c.omega1 = f.omega1;
    if (f.given("omega2"))
        c.omega2 = f.omega2;
    if (f.given("eta"))
        c.eta = f.eta;
    if (f.given("xi-phase"))
        c.xi_phase = f.xi_phase;
    if (f.given("x12"))
        c.x12 = parse_range(f.x12);
    if (f.given("zeta")) {
        c.second_axis = "zeta";
        c.second = parse_range(f.zeta);
        c.use_k = false;
    }
    if (f.given("chi")) {
        c.second_axis = "chi";
        c.second = parse_range(f.chi);
        c.use_k = false;
    }
    if (f.given("k")) {
        c.k = parse_range(f.k);
        c.use_k = true;
    }
    if (f.given("levels"))
        c.levels = f.levels;
    if (f.given("m-max"))
        c.m_max = f.m_max;
    if (f.given("zero-threshold"))
        c.thresholds.zero_fidelity = f.zero_threshold;
    if (f.given("continuous-ceiling"))
        c.thresholds.continuous_ceiling = f.continuous_ceiling;
    if (f.given("cutoff-start"))
        c.policy.initial_cutoff = f.cutoff_start;
    if (f.given("cutoff-step"))
        c.policy.step = f.cutoff_step;
    if (f.given("cutoff-max"))
        c.policy.max_cutoff = f.cutoff_max;
    if (f.given("overlap-threshold"))
        c.policy.overlap_threshold = f.overlap_threshold;
    if (f.given("energy-tol"))
        c.policy.energy_tol = f.energy_tol;
    return c;
}

} // namespace

GridSpec JobConfig::grid() const {
    if (std::sin(xi_phase) != 0.0 && std::abs(xi_phase) != std::numbers::pi)
        throw InvalidArgument("grid scans need a real xi (phase 0 or pi)");
    GridSpec g;
    g.model = model == "rwa" ? ModelKind::Rwa : ModelKind::Full;
    g.n_atoms = n_atoms;
    g.omega_field = omega_field;
    g.omega1 = omega1;
    g.omega_a = omega2 - omega1;
    g.eta = make_xi(eta, xi_phase).real();
    g.x12 = x12;
    g.second_kind = second_axis == "chi" ? SecondAxis::Chi : SecondAxis::Zeta;
    g.second = second;
    g.thresholds = thresholds;
    g.policy = policy;
    g.m_max = m_max;
    g.threads = threads;
    return g;
}

ModelParams JobConfig::point(double x, double s) const {
    ModelParams p;
    p.omega_field = omega_field;
    p.omega1 = omega1;
    p.omega2 = omega2;
    p.n_atoms = n_atoms;
    p.xi = make_xi(eta, xi_phase);
    const double omega_a = omega2 - omega1;
    if (!(omega_a > 0.0))
        throw InvalidArgument("omega2 must exceed omega1");
    p.mu = coupling_from_x12(x, omega_field, omega_a,
                             model == "rwa" ? CouplingConvention::Rwa : CouplingConvention::Full);
    p.zeta = second_axis == "chi" ? s * omega_a - 2.0 * p.eta() : s;
    p.validate();
    return p;
}

nlohmann::json to_json(const JobConfig& c) {
    return {
        {"command", c.command},
        {"model", c.model},
        {"n_atoms", c.n_atoms},
        {"omega_field", c.omega_field},
        {"omega1", c.omega1},
        {"omega2", c.omega2},
        {"eta", c.eta},
        {"xi_phase", c.xi_phase},
        {"x12", axis_json(c.x12)},
        {"second_axis", c.second_axis},
        {"second", axis_json(c.second)},
        {"k", axis_json(c.k)},
        {"use_k", c.use_k},
        {"levels", c.levels},
        {"m_max", c.m_max},
        {"threads", c.threads},
        {"thresholds",
         {{"zero_fidelity", c.thresholds.zero_fidelity},
          {"continuous_ceiling", c.thresholds.continuous_ceiling},
          {"rwa_identity", c.thresholds.rwa_identity}}},
        {"convergence",
         {{"initial_cutoff", c.policy.initial_cutoff},
          {"step", c.policy.step},
          {"overlap_threshold", c.policy.overlap_threshold},
          {"energy_tol", c.policy.energy_tol},
          {"max_cutoff", c.policy.max_cutoff},
          {"monotonic_slack", c.policy.monotonic_slack}}},
        {"out", c.out},
    };
}

JobConfig job_from_json(const nlohmann::json& j) {
    const auto command = j.value("command", std::string());
    try {
        return job_from_json(j, defaults_for(command));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(fmt::format("config: {}", e.what()));
    }
}

Axis parse_range(const std::string& text) {
    auto to_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v))
            throw InvalidArgument(fmt::format("bad number '{}' in range '{}'", s, text));
        return v;
    };
    const auto first = text.find(':');
    if (first == std::string::npos) {
        const double v = to_double(text);
        return {v, v, 1};
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
        throw InvalidArgument(fmt::format("range '{}' is not min:max:count", text));
    const double lo = to_double(text.substr(0, first));
    const double hi = to_double(text.substr(first + 1, second - first - 1));
    const double n = to_double(text.substr(second + 1));
    if (n < 1 || n != std::floor(n) || n > 1e7)
        throw InvalidArgument(fmt::format("range '{}' needs a positive integer count", text));
    if (n == 1 && lo != hi)
        throw InvalidArgument(fmt::format("range '{}' has one point but two bounds", text));
    return {lo, hi, static_cast<int>(n)};
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Ground states and phase diagrams of the extended two-level Dicke model", "dicke"};
    app.require_subcommand(1);
    std::map<std::string, Flags> flags;
    for (const auto& name : kCommands) {
        auto* sub = app.add_subcommand(name, "");
        add_flags(*sub, flags[name]);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (const auto& name : kCommands) {
            if (!app.got_subcommand(name))
                continue;
            const auto& f = flags.at(name);
            auto cfg = resolve(name, f);
            check_config(cfg);
            if (f.given("write-config"))
                write_side_file(f.write_config, to_json(cfg).dump(2) + "\n");
            return dispatch(cfg);
        }
    } catch (const ConvergenceError& e) {
        fmt::print(stderr, "dicke: no convergence: {} (best {:.3g})\n", e.what(), e.best());
        return 3;
    } catch (const InvalidArgument& e) {
        fmt::print(stderr, "dicke: {}\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        fmt::print(stderr, "dicke: config: {}\n", e.what());
        return 2;
    }
    return 2;
}

} // namespace dicke::cli
