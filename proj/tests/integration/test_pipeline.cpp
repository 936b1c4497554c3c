#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "cli.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace dicke;

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int col(const std::string& name) const {
        return static_cast<int>(std::find(header.begin(), header.end(), name) - header.begin());
    }
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');)
        out.push_back(f);
    return out;
}

Table read_csv(const fs::path& p) {
    std::ifstream f(p);
    Table t;
    std::string line;
    std::getline(f, line);
    t.header = split(line);
    while (std::getline(f, line))
        t.rows.push_back(split(line));
    return t;
}

double brute_ground(const ModelParams& p, int cutoff) {
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::brute_force_hamiltonian(p, cutoff),
                                                  Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "dicke_pipeline_test";
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(Pipeline, FidelityScanEnergiesMatchKroneckerOracle) {
    const auto out = scratch("fid.csv");
    const std::vector<std::string> args = {"dicke", "scan-fidelity", "--na", "2", "--x12", "0:1.5:4", "--zeta",
                                           "-2:1:4", "--eta", "0.5", "--xi-phase", "0", "--out", out.string()};
    ASSERT_EQ(cli::run(args), 0);
    const auto t = read_csv(out);
    ASSERT_EQ(t.rows.size(), 16u);
    cli::JobConfig cfg;
    cfg.eta = 0.5;
    cfg.n_atoms = 2;
    const int cx = t.col("x12"), cz = t.col("zeta"), ce = t.col("energy_pp"), cp = t.col("parity");
    for (const auto& r : t.rows) {
        const auto p = cfg.point(std::stod(r[cx]), std::stod(r[cz]));
        EXPECT_NEAR(std::stod(r[ce]), brute_ground(p, 60) / 2.0, 1e-9) << r[cx] << "," << r[cz];
        EXPECT_TRUE(r[cp] == "1" || r[cp] == "-1");
    }
}

TEST(Pipeline, RwaScanAgreesWithLibraryAndRepeats) {
    const auto a = scratch("rwa_a.csv"), b = scratch("rwa_b.csv");
    const std::vector<std::string> base = {"dicke", "rwa-diagram", "--na", "3", "--x12", "0:2:6", "--zeta",
                                           "-3:1:5", "--threads", "1", "--out"};
    auto args = base;
    args.push_back(a.string());
    ASSERT_EQ(cli::run(args), 0);
    args = base;
    args[args.size() - 2] = "3";
    args.push_back(b.string());
    ASSERT_EQ(cli::run(args), 0);
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());

    const auto t = read_csv(a);
    cli::JobConfig cfg;
    cfg.model = "rwa";
    cfg.n_atoms = 3;
    const int cx = t.col("x12"), cz = t.col("zeta"), cm = t.col("m"), ce = t.col("energy_pp");
    for (const auto& r : t.rows) {
        const auto g = rwa_ground(cfg.point(std::stod(r[cx]), std::stod(r[cz])));
        EXPECT_EQ(std::stoi(r[cm]), g.excitation());
        EXPECT_NEAR(std::stod(r[ce]), g.energy() / 3.0, 1e-12);
    }
}

TEST(Pipeline, ConfigFileDrivesSpectrum) {
    const auto cfg_path = scratch("spectrum.json"), out = scratch("spectrum.csv");
    cli::JobConfig c;
    c.command = "spectrum";
    c.n_atoms = 3;
    c.x12 = {0.8, 0.8, 1};
    c.second = {-0.5, -0.5, 1};
    c.eta = 0.25;
    c.xi_phase = 3.141592653589793;
    c.levels = 3;
    c.out = out.string();
    std::ofstream(cfg_path) << cli::to_json(c).dump(2);
    ASSERT_EQ(cli::run({"dicke", "spectrum", "--config", cfg_path.string()}), 0);
    const auto t = read_csv(out);
    ASSERT_EQ(t.rows.size(), 6u);
    const auto p = c.point(0.8, -0.5);
    const int cutoff = std::stoi(t.rows[0][1]);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::brute_force_hamiltonian(p, cutoff),
                                                  Eigen::EigenvaluesOnly);
    std::vector<double> lib;
    for (const auto& r : t.rows)
        lib.push_back(std::stod(r[3]));
    std::sort(lib.begin(), lib.end());
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(lib[i], es.eigenvalues()(i), 1e-8);
}
