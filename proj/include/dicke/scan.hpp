#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicke/model.hpp"
#include "dicke/spectrum.hpp"

namespace dicke {

enum class ModelKind { Rwa, Full };
enum class SecondAxis { Zeta, Chi };
enum class TransitionClass { None, Continuous, Discontinuous };

struct Axis {
    double min = 0.0;
    double max = 1.0;
    int count = 2;

    double at(int i) const noexcept {
        return count == 1 ? min : min + (max - min) * static_cast<double>(i) / (count - 1);
    }
    std::vector<double> values() const;
};

struct Thresholds {
    double zero_fidelity = 1e-6;        // edge fidelity at or below: discontinuous
    double continuous_ceiling = 0.999;  // local minima above: not reported
    double rwa_identity = 1e-10;        // |var_n2 - var_nu| flagged above this in RWA scans
};

struct GridSpec {
    Axis x12{0.0, 2.0, 101};
    SecondAxis second_kind = SecondAxis::Zeta;
    Axis second{-4.0, 1.0, 101};
    double eta = 0.0;            // fixed real dipolar strength
    int n_atoms = 2;
    double omega_field = 1.0;
    double omega1 = 0.0;
    double omega_a = 1.0;
    ModelKind model = ModelKind::Full;
    Thresholds thresholds;
    ConvergencePolicy policy;
    int m_max = -1;              // RWA block ceiling, -1: default heuristic
    int threads = 0;             // 0: hardware concurrency

    /// Counts >= 2, finite ranges, valid physics.
    void validate() const;
    ModelParams params_at(int i, int j) const;
    std::size_t cells() const noexcept {
        return static_cast<std::size_t>(x12.count) * static_cast<std::size_t>(second.count);
    }
};

struct CellRecord {
    double x12 = 0.0;            // canonicalised to |x12|
    double second = 0.0;         // zeta or chi
    std::string flag;            // empty when the cell solved cleanly
    double energy_pp = 0.0;
    double excitation_mean = 0.0;
    int m = -1;                  // RWA block, -1 in the full model
    int parity = 0;
    double var_n1 = 0.0;
    double var_n2 = 0.0;
    double var_nu = 0.0;
    double p_nu0 = 0.0;
    double fid_right = 0.0;      // NaN on the last column or next to failed cells
    double fid_up = 0.0;
    TransitionClass class_right = TransitionClass::None;
    TransitionClass class_up = TransitionClass::None;
    int cutoff_used = 0;
    double convergence_overlap = 1.0;

    bool ok() const noexcept { return flag.empty(); }
    TransitionClass classification() const noexcept { return std::max(class_right, class_up); }
};

/// Cells stored row by row: index = j * x12.count + i, j along the second axis.
struct PhaseDiagramGrid {
    GridSpec spec;
    std::vector<CellRecord> cells;

    const CellRecord& at(int i, int j) const { return cells[index(i, j)]; }
    CellRecord& at(int i, int j) { return cells[index(i, j)]; }
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(spec.x12.count) +
               static_cast<std::size_t>(i);
    }
};

/// RWA excitation map (argmin m, E_g per particle, fluctuations, fidelities).
PhaseDiagramGrid scan_rwa(const GridSpec& spec);
/// Full-model fidelity surface with discontinuous/continuous classification.
PhaseDiagramGrid scan_fidelity(const GridSpec& spec);
/// Fluctuation maps for either model; the RWA identity is checked per cell.
PhaseDiagramGrid scan_fluctuations(const GridSpec& spec);

/// Per-axis classification of edge fidelities; exposed for testing.
/// `fid` holds one value per edge (NaN for unavailable edges).
std::vector<TransitionClass> classify_edges(const std::vector<double>& fid, const Thresholds& t);

struct CurvePoint {
    double x12;
    double second;
};

/// chi = x12^2 - 1 expressed on the grid's second axis at every grid x12.
std::vector<CurvePoint> overlay_variational(const PhaseDiagramGrid& grid);

std::string to_string(TransitionClass c);
std::string to_string(ModelKind m);
std::string to_string(SecondAxis a);

/// Header plus one record per cell, 17 significant digits.
void write_csv(const PhaseDiagramGrid& grid, std::ostream& os);
void write_overlay_csv(const std::vector<CurvePoint>& curve, SecondAxis axis, std::ostream& os);

nlohmann::json to_json(const GridSpec& spec);
GridSpec grid_spec_from_json(const nlohmann::json& j);

} // namespace dicke
