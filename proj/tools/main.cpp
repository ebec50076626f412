// sasv-eval: detection-cost and EER evaluation of spoofing-robust speaker
// verification scores.
//
// Exit codes: 0 success, 1 metric-domain error (empty class, degenerate
// cost model), 2 input or usage error.

#include "commands.hpp"

#include "sasv/error.hpp"
#include "sasv/numfmt.hpp"
#include "sasv/version.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

constexpr int kExitMetric = 1;
constexpr int kExitInput = 2;

double parse_threshold(const std::string& text, const char* option) {
    auto v = sasv::parse_real(text);
    if (!v || std::isnan(*v)) throw sasv::ParseError(std::string(option) + ": invalid threshold '" + text + "'");
    return *v;
}

const std::map<std::string, sasv::cli::Format> kFormats = {
    {"table", sasv::cli::Format::Table}, {"csv", sasv::cli::Format::Csv}, {"json", sasv::cli::Format::Json}};

} // namespace

int main(int argc, char** argv) {
    using namespace sasv::cli;

    CLI::App app{"Detection cost (a-DCF, t-DCF) and EER evaluation for spoofing-robust speaker verification"};
    app.set_version_flag("--version", std::string(sasv::kVersion));
    app.require_subcommand(1);

    EvaluateOptions eval;
    auto* evaluate = app.add_subcommand("evaluate", "min a-DCF per cost config, SV-EER and SPF-EER");
    evaluate->add_option("--keys", eval.keys, "trial key file")->required();
    evaluate->add_option("--scores", eval.scores, "score file")->required();
    evaluate->add_option("--config", eval.configs, "preset name (adcf1, adcf2) or config file; repeatable");
    evaluate->add_option("--format", eval.format, "table, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
        ->option_text("FORMAT");
    evaluate->add_flag("--include-sasv-eer", eval.include_sasv_eer, "also report the (discouraged) SASV-EER");

    TandemOptions tandem;
    std::string frozen_text;
    auto* tandem_cmd = app.add_subcommand("tandem-eval", "min t-DCF of an ASV + CM cascade (AND gate)");
    tandem_cmd->add_option("--keys", tandem.keys, "trial key file")->required();
    tandem_cmd->add_option("--dual-scores", tandem.dual_scores, "dual-score file")->required();
    tandem_cmd->add_option("--config", tandem.configs, "preset name or config file; repeatable");
    tandem_cmd->add_option("--format", tandem.format, "table, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
        ->option_text("FORMAT");
    tandem_cmd->add_option("--frozen-asv", frozen_text, "fix the ASV threshold (default: full grid search)");
    tandem_cmd->add_flag("--show-coeffs", tandem.show_coeffs, "print ASV-constrained t-DCF coefficients");
    tandem_cmd->add_option("--curve-out", tandem.curve_out, "write the t-DCF curve of the first config as CSV");

    GateOptions gate;
    std::string gate_text = "0";
    auto* gate_cmd = app.add_subcommand("gate", "fuse dual scores into one score with a threshold gate");
    gate_cmd->add_option("--dual-scores", gate.dual_scores, "dual-score file")->required();
    gate_cmd->add_option("--order", gate.order, "cm-first or asv-first")
        ->check(CLI::IsMember({"cm-first", "asv-first"}));
    gate_cmd->add_option("--t-gate", gate_text, "gate threshold (use --t-gate=-inf for no gate)");
    gate_cmd->add_option("--out", gate.out, "output score file")->required();

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "export rate and cost curves over all candidate thresholds");
    sweep_cmd->add_option("--keys", sweep.keys, "trial key file")->required();
    sweep_cmd->add_option("--scores", sweep.scores, "score file")->required();
    sweep_cmd->add_option("--config", sweep.config, "preset name or config file");
    sweep_cmd->add_option("--out", sweep.out, "output prefix (<out>.rates.csv, <out>.cost.csv)")->required();

    SynthOptions synth;
    double correlation = 0.0;
    auto* synth_cmd = app.add_subcommand("synth", "write seeded synthetic key, score and dual-score files");
    synth_cmd->add_option("--seed", synth.seed, "64-bit seed");
    synth_cmd->add_option("--out", synth.out, "output prefix (<out>.keys, <out>.scores, <out>.dual)")->required();
    synth_cmd->add_option("--n-tar", synth.n_tar, "target trials");
    synth_cmd->add_option("--n-non", synth.n_non, "non-target trials");
    synth_cmd->add_option("--n-spf", synth.n_spf, "spoof trials");
    synth_cmd->add_option("--tar", synth.tar, "target score MEAN,STDDEV (single score and ASV column)")
        ->delimiter(',');
    synth_cmd->add_option("--non", synth.non, "non-target score MEAN,STDDEV")->delimiter(',');
    synth_cmd->add_option("--spf", synth.spf, "spoof score MEAN,STDDEV")->delimiter(',');
    synth_cmd->add_option("--cm-tar", synth.cm_tar, "target CM score MEAN,STDDEV")->delimiter(',');
    synth_cmd->add_option("--cm-non", synth.cm_non, "non-target CM score MEAN,STDDEV")->delimiter(',');
    synth_cmd->add_option("--cm-spf", synth.cm_spf, "spoof CM score MEAN,STDDEV")->delimiter(',');
    auto* corr_opt = synth_cmd->add_option("--correlation", correlation,
                                           "ASV/CM correlation within each class (default: independent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*evaluate) return run_evaluate(eval, std::cout, std::cerr);
        if (*tandem_cmd) {
            if (!frozen_text.empty()) tandem.frozen_t_asv = parse_threshold(frozen_text, "--frozen-asv");
            return run_tandem_eval(tandem, std::cout, std::cerr);
        }
        if (*gate_cmd) {
            gate.t_gate = parse_threshold(gate_text, "--t-gate");
            return run_gate(gate, std::cout, std::cerr);
        }
        if (*sweep_cmd) return run_sweep(sweep, std::cout, std::cerr);
        if (*synth_cmd) {
            if (*corr_opt) synth.correlation = correlation;
            return run_synth(synth, std::cout, std::cerr);
        }
    } catch (const sasv::Error& e) {
        std::cerr << "sasv-eval: error: " << e.name() << ": " << e.what() << '\n';
        return e.is_input_error() ? kExitInput : kExitMetric;
    } catch (const std::exception& e) {
        std::cerr << "sasv-eval: error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
