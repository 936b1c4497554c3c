#include "dicke/scan.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dicke/errors.hpp"
#include "dicke/observables.hpp"

namespace dicke {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_axis(const Axis& a, const char* name) {
    if (a.count < 2)
        throw InvalidArgument(fmt::format("{} axis needs at least 2 points", name));
    if (!std::isfinite(a.min) || !std::isfinite(a.max))
        throw InvalidArgument(fmt::format("{} axis range must be finite", name));
}

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
}

std::string format_num(double v) {
    if (std::isnan(v))
        return "nan";
    return fmt::format("{:.17g}", v);
}

PhaseDiagramGrid run_scan(const GridSpec& spec) {
    spec.validate();
    const int nx = spec.x12.count, ny = spec.second.count;
    PhaseDiagramGrid grid{spec, std::vector<CellRecord>(spec.cells())};
    std::vector<GroundState> states(spec.cells());

    parallel_for(spec.cells(), spec.threads, [&](std::size_t k) {
        const int i = static_cast<int>(k % static_cast<std::size_t>(nx));
        const int j = static_cast<int>(k / static_cast<std::size_t>(nx));
        auto& cell = grid.cells[k];
        cell.x12 = std::abs(spec.x12.at(i));
        cell.second = spec.second.at(j);
        try {
            const auto p = spec.params_at(i, j);
            GroundState g;
            if (spec.model == ModelKind::Rwa)
                g = spec.m_max >= 1 ? rwa_ground(p, spec.m_max) : rwa_ground(p);
            else
                g = full_ground(p, spec.policy);
            cell.energy_pp = g.energy() / spec.n_atoms;
            cell.excitation_mean = g.excitation_mean;
            cell.m = spec.model == ModelKind::Rwa ? g.excitation() : -1;
            cell.parity = g.parity;
            cell.var_n1 = number_stats(g, NumberOperator::Level1).variance;
            cell.var_n2 = number_stats(g, NumberOperator::Level2).variance;
            cell.var_nu = number_stats(g, NumberOperator::Photons).variance;
            cell.p_nu0 = excitation_distribution(g).p_nu0;
            cell.cutoff_used = g.cutoff_used;
            cell.convergence_overlap = g.convergence_overlap;
            if (spec.model == ModelKind::Rwa &&
                (std::abs(cell.var_n2 - cell.var_nu) > spec.thresholds.rwa_identity ||
                 std::abs(cell.var_n1 - cell.var_n2) > spec.thresholds.rwa_identity))
                cell.flag = "rwa-identity";
            states[k] = std::move(g);
        } catch (const ConvergenceError& e) {
            cell.flag = "no-convergence";
        } catch (const Error& e) {
            cell.flag = "error";
        }
    });

    // Neighbour fidelities.
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            auto& c = grid.at(i, j);
            c.fid_right = kNaN;
            c.fid_up = kNaN;
            if (!c.ok())
                continue;
            const auto& g = states[grid.index(i, j)];
            if (i + 1 < nx && grid.at(i + 1, j).ok())
                c.fid_right = fidelity(g, states[grid.index(i + 1, j)]);
            if (j + 1 < ny && grid.at(i, j + 1).ok())
                c.fid_up = fidelity(g, states[grid.index(i, j + 1)]);
        }

    // Classification, one line at a time along each axis.
    std::vector<double> line;
    for (int j = 0; j < ny; ++j) {
        line.clear();
        for (int i = 0; i + 1 < nx; ++i)
            line.push_back(grid.at(i, j).fid_right);
        const auto cls = classify_edges(line, spec.thresholds);
        for (int i = 0; i + 1 < nx; ++i)
            grid.at(i, j).class_right = cls[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < nx; ++i) {
        line.clear();
        for (int j = 0; j + 1 < ny; ++j)
            line.push_back(grid.at(i, j).fid_up);
        const auto cls = classify_edges(line, spec.thresholds);
        for (int j = 0; j + 1 < ny; ++j)
            grid.at(i, j).class_up = cls[static_cast<std::size_t>(j)];
    }
    return grid;
}

} // namespace

std::vector<double> Axis::values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i)
        v.push_back(at(i));
    return v;
}

void GridSpec::validate() const {
    check_axis(x12, "x12");
    check_axis(second, second_kind == SecondAxis::Zeta ? "zeta" : "chi");
    if (n_atoms < 2)
        throw InvalidArgument("n_atoms must be at least 2");
    if (!(omega_a > 0.0) || !(omega_field > 0.0))
        throw InvalidArgument("frequencies must be positive");
    if (model == ModelKind::Rwa && eta != 0.0)
        throw InvalidArgument("RWA scans require eta = 0");
    if (!(thresholds.zero_fidelity >= 0.0) || !(thresholds.continuous_ceiling <= 1.0) ||
        thresholds.zero_fidelity >= thresholds.continuous_ceiling)
        throw InvalidArgument("fidelity thresholds must satisfy 0 <= zero < ceiling <= 1");
}

ModelParams GridSpec::params_at(int i, int j) const {
    ModelParams p;
    p.omega_field = omega_field;
    p.omega1 = omega1;
    p.omega2 = omega1 + omega_a;
    p.n_atoms = n_atoms;
    const auto conv = model == ModelKind::Rwa ? CouplingConvention::Rwa : CouplingConvention::Full;
    p.mu = coupling_from_x12(x12.at(i), omega_field, omega_a, conv);
    const double s = second.at(j);
    p.zeta = second_kind == SecondAxis::Zeta ? s : s * omega_a - 2.0 * eta;
    p.xi = {eta, 0.0};
    p.validate();
    return p;
}

std::vector<TransitionClass> classify_edges(const std::vector<double>& fid, const Thresholds& t) {
    const std::size_t n = fid.size();
    std::vector<TransitionClass> out(n, TransitionClass::None);
    for (std::size_t k = 0; k < n; ++k) {
        const double f = fid[k];
        if (std::isnan(f))
            continue;
        if (f <= t.zero_fidelity) {
            out[k] = TransitionClass::Discontinuous;
            continue;
        }
        if (f >= t.continuous_ceiling || k == 0 || k + 1 == n)
            continue;
        const double l = fid[k - 1], r = fid[k + 1];
        if (std::isnan(l) || std::isnan(r))
            continue;
        if (f <= l && f <= r && (f < l || f < r))
            out[k] = TransitionClass::Continuous;
    }
    return out;
}

PhaseDiagramGrid scan_rwa(const GridSpec& spec) {
    if (spec.model != ModelKind::Rwa)
        throw InvalidArgument("scan_rwa needs model = rwa");
    return run_scan(spec);
}

PhaseDiagramGrid scan_fidelity(const GridSpec& spec) {
    if (spec.model != ModelKind::Full)
        throw InvalidArgument("scan_fidelity needs model = full");
    return run_scan(spec);
}

PhaseDiagramGrid scan_fluctuations(const GridSpec& spec) { return run_scan(spec); }

std::vector<CurvePoint> overlay_variational(const PhaseDiagramGrid& grid) {
    const auto& s = grid.spec;
    std::vector<CurvePoint> out;
    for (int i = 0; i < s.x12.count; ++i) {
        const double x = std::abs(s.x12.at(i));
        const double chi = x * x - 1.0;
        out.push_back({x, s.second_kind == SecondAxis::Chi ? chi : s.omega_a * chi - 2.0 * s.eta});
    }
    return out;
}

std::string to_string(TransitionClass c) {
    switch (c) {
    case TransitionClass::None:
        return "none";
    case TransitionClass::Continuous:
        return "continuous";
    case TransitionClass::Discontinuous:
        return "discontinuous";
    }
    return "?";
}

std::string to_string(ModelKind m) { return m == ModelKind::Rwa ? "rwa" : "full"; }
std::string to_string(SecondAxis a) { return a == SecondAxis::Zeta ? "zeta" : "chi"; }

void write_csv(const PhaseDiagramGrid& grid, std::ostream& os) {
    const bool rwa = grid.spec.model == ModelKind::Rwa;
    fmt::print(os, "x12,{},energy_pp,{},var_n2,var_nu,fid_right,fid_up,class,flag\n",
               to_string(grid.spec.second_kind), rwa ? "m" : "parity");
    for (const auto& c : grid.cells) {
        const bool ok = c.ok();
        fmt::print(os, "{},{},{},{},{},{},{},{},{},{}\n", format_num(c.x12), format_num(c.second),
                   ok ? format_num(c.energy_pp) : "nan", ok ? std::to_string(rwa ? c.m : c.parity) : "0",
                   ok ? format_num(c.var_n2) : "nan", ok ? format_num(c.var_nu) : "nan",
                   format_num(c.fid_right), format_num(c.fid_up), to_string(c.classification()),
                   ok ? "ok" : c.flag);
    }
}

void write_overlay_csv(const std::vector<CurvePoint>& curve, SecondAxis axis, std::ostream& os) {
    fmt::print(os, "x12,{}\n", to_string(axis));
    for (const auto& p : curve)
        fmt::print(os, "{},{}\n", format_num(p.x12), format_num(p.second));
}

namespace {

nlohmann::json axis_json(const Axis& a) { return {{"min", a.min}, {"max", a.max}, {"count", a.count}}; }

Axis axis_from(const nlohmann::json& j) {
    return {j.at("min").get<double>(), j.at("max").get<double>(), j.at("count").get<int>()};
}

} // namespace

nlohmann::json to_json(const GridSpec& s) {
    return {
        {"model", to_string(s.model)},
        {"n_atoms", s.n_atoms},
        {"x12", axis_json(s.x12)},
        {"second_axis", to_string(s.second_kind)},
        {"second", axis_json(s.second)},
        {"eta", s.eta},
        {"omega_field", s.omega_field},
        {"omega1", s.omega1},
        {"omega_a", s.omega_a},
        {"m_max", s.m_max},
        {"threads", s.threads},
        {"thresholds",
         {{"zero_fidelity", s.thresholds.zero_fidelity},
          {"continuous_ceiling", s.thresholds.continuous_ceiling},
          {"rwa_identity", s.thresholds.rwa_identity}}},
        {"convergence",
         {{"initial_cutoff", s.policy.start_cutoff(s.n_atoms)},
          {"step", s.policy.step},
          {"overlap_threshold", s.policy.overlap_threshold},
          {"energy_tol", s.policy.energy_tol},
          {"max_cutoff", s.policy.max_cutoff},
          {"monotonic_slack", s.policy.monotonic_slack}}},
        {"solver", {{"residual_tol", SolverOptions{}.residual_tol}, {"degeneracy_tol", kDegeneracyTol}}},
    };
}

GridSpec grid_spec_from_json(const nlohmann::json& j) {
    GridSpec s;
    const auto model = j.value("model", std::string("full"));
    if (model != "rwa" && model != "full")
        throw InvalidArgument("model must be rwa or full");
    s.model = model == "rwa" ? ModelKind::Rwa : ModelKind::Full;
    s.n_atoms = j.value("n_atoms", s.n_atoms);
    if (j.contains("x12"))
        s.x12 = axis_from(j.at("x12"));
    const auto second = j.value("second_axis", std::string("zeta"));
    if (second != "zeta" && second != "chi")
        throw InvalidArgument("second_axis must be zeta or chi");
    s.second_kind = second == "zeta" ? SecondAxis::Zeta : SecondAxis::Chi;
    if (j.contains("second"))
        s.second = axis_from(j.at("second"));
    s.eta = j.value("eta", s.eta);
    s.omega_field = j.value("omega_field", s.omega_field);
    s.omega1 = j.value("omega1", s.omega1);
    s.omega_a = j.value("omega_a", s.omega_a);
    s.m_max = j.value("m_max", s.m_max);
    s.threads = j.value("threads", s.threads);
    if (j.contains("thresholds")) {
        const auto& t = j.at("thresholds");
        s.thresholds.zero_fidelity = t.value("zero_fidelity", s.thresholds.zero_fidelity);
        s.thresholds.continuous_ceiling = t.value("continuous_ceiling", s.thresholds.continuous_ceiling);
        s.thresholds.rwa_identity = t.value("rwa_identity", s.thresholds.rwa_identity);
    }
    if (j.contains("convergence")) {
        const auto& c = j.at("convergence");
        s.policy.initial_cutoff = c.value("initial_cutoff", s.policy.initial_cutoff);
        s.policy.step = c.value("step", s.policy.step);
        s.policy.overlap_threshold = c.value("overlap_threshold", s.policy.overlap_threshold);
        s.policy.energy_tol = c.value("energy_tol", s.policy.energy_tol);
        s.policy.max_cutoff = c.value("max_cutoff", s.policy.max_cutoff);
        s.policy.monotonic_slack = c.value("monotonic_slack", s.policy.monotonic_slack);
    }
    return s;
}

} // namespace dicke
