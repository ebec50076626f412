#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sasv::cli {

enum class Format { Table, Csv, Json };

struct EvaluateOptions {
    std::string keys;
    std::string scores;
    std::vector<std::string> configs;
    Format format = Format::Table;
    bool include_sasv_eer = false;
};

struct TandemOptions {
    std::string keys;
    std::string dual_scores;
    std::vector<std::string> configs;
    Format format = Format::Table;
    std::optional<double> frozen_t_asv;
    bool show_coeffs = false;
    std::string curve_out;
};

struct GateOptions {
    std::string dual_scores;
    std::string order = "cm-first";
    double t_gate = 0.0;
    std::string out;
};

struct SweepOptions {
    std::string keys;
    std::string scores;
    std::string config = "adcf1";
    std::string out;
};

struct SynthOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::size_t n_tar = 100;
    std::size_t n_non = 100;
    std::size_t n_spf = 100;
    std::vector<double> tar = {3.0, 1.0};
    std::vector<double> non = {0.0, 1.0};
    std::vector<double> spf = {1.5, 1.0};
    std::vector<double> cm_tar = {2.0, 1.0};
    std::vector<double> cm_non = {2.0, 1.0};
    std::vector<double> cm_spf = {-2.0, 1.0};
    std::optional<double> correlation;
};

// Each command writes its report to `out` and returns the process exit code.
// Library errors propagate as sasv::Error.
int run_evaluate(const EvaluateOptions& opt, std::ostream& out, std::ostream& err);
int run_tandem_eval(const TandemOptions& opt, std::ostream& out, std::ostream& err);
int run_gate(const GateOptions& opt, std::ostream& out, std::ostream& err);
int run_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);
int run_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err);

} // namespace sasv::cli
