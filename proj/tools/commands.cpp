#include "commands.hpp"

#include "sasv/adcf.hpp"
#include "sasv/eer.hpp"
#include "sasv/errcurves.hpp"
#include "sasv/error.hpp"
#include "sasv/formats.hpp"
#include "sasv/numfmt.hpp"
#include "sasv/synth.hpp"
#include "sasv/tandem.hpp"
#include "sasv/version.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace sasv::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kToolName = "sasv-eval";
constexpr const char* kSasvNotice =
    "note: SASV-EER pools non-target and spoof trials in their empirical proportions and so depends on "
    "the dataset's class balance; its use is discouraged. Prefer min a-DCF, or SV-EER and SPF-EER.";

struct NamedModel {
    std::string name;
    CostModel model;
};

std::vector<NamedModel> load_models(const std::vector<std::string>& names) {
    std::vector<std::string> effective = names;
    if (effective.empty()) effective = preset_names();
    std::vector<NamedModel> out;
    for (const auto& n : effective) out.push_back({n, validate_cost_model(load_cost_model(n))});
    return out;
}

std::vector<CostModel> models_of(const std::vector<NamedModel>& named) {
    std::vector<CostModel> out;
    for (const auto& n : named) out.push_back(n.model);
    return out;
}

// Reattaches the originating file to errors that do not carry a location.
template <typename Fn>
auto with_origin(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const MissingScoreError& e) {
        throw MissingScoreError(path + ": " + e.what());
    } catch (const UnknownTrialError& e) {
        throw UnknownTrialError(path + ": " + e.what());
    }
}

Json threshold_json(double t) {
    if (std::isfinite(t)) return t;
    return format_real(t);
}

Json config_json(const NamedModel& n) {
    return Json{{"name", n.name},         {"pi_tar", n.model.pi_tar},     {"pi_non", n.model.pi_non},
                {"pi_spf", n.model.pi_spf}, {"c_miss", n.model.c_miss},     {"c_fa_non", n.model.c_fa_non},
                {"c_fa_spf", n.model.c_fa_spf}};
}

Json header_json(const char* command) {
    return Json{{"tool", kToolName}, {"version", std::string(kVersion)}, {"command", command}};
}

// Four significant digits, keeping trailing zeros ("25.00", "0.6500").
std::string four_sig(double x) {
    if (x == 0.0) return "0.000";
    const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(x))));
    return format_fixed(x, std::max(0, 3 - magnitude));
}

std::string percent(double fraction) { return four_sig(100.0 * fraction); }

std::string fraction4(double v) { return format_fixed(v, 4); }

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void write_config_table(std::ostream& out, const std::vector<NamedModel>& models) {
    out << pad("config", 12) << pad("pi_tar", 9) << pad("pi_non", 9) << pad("pi_spf", 9) << pad("c_miss", 9)
        << pad("c_fa_non", 10) << "c_fa_spf\n";
    for (const auto& n : models) {
        out << pad(n.name, 12) << pad(format_real(n.model.pi_tar), 9) << pad(format_real(n.model.pi_non), 9)
            << pad(format_real(n.model.pi_spf), 9) << pad(format_real(n.model.c_miss), 9)
            << pad(format_real(n.model.c_fa_non), 10) << format_real(n.model.c_fa_spf) << '\n';
    }
}

template <typename Counts>
void write_counts_line(std::ostream& out, const Counts& n) {
    out << "trials: target " << n[0] << ", nontarget " << n[1] << ", spoof " << n[2] << '\n';
}

Json counts_json(std::size_t tar, std::size_t non, std::size_t spf) {
    return Json{{"target", tar}, {"nontarget", non}, {"spoof", spf}};
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot open for writing");
    return f;
}

} // namespace

int run_evaluate(const EvaluateOptions& opt, std::ostream& out, std::ostream& err) {
    const auto models = load_models(opt.configs);
    const auto trials = read_trial_keys(opt.keys);
    const auto entries = read_scores(opt.scores);
    const auto scores = with_origin(opt.scores, [&] { return partition_scores(trials, score_map(entries)); });

    const auto results = min_adcf(models_of(models), scores);
    const auto sv = sv_eer(scores);
    const auto spf = spf_eer(scores);
    std::optional<EerResult> sasv;
    if (opt.include_sasv_eer) {
        sasv = sasv_eer(scores);
        err << kSasvNotice << '\n';
    }

    switch (opt.format) {
    case Format::Json: {
        Json j = header_json("evaluate");
        j["dataset"] = counts_json(scores.tar().size(), scores.non().size(), scores.spf().size());
        j["configs"] = Json::array();
        for (const auto& n : models) j["configs"].push_back(config_json(n));
        j["min_adcf"] = Json::array();
        for (std::size_t i = 0; i < models.size(); ++i) {
            j["min_adcf"].push_back(Json{{"config", models[i].name},
                                         {"value", results[i].min_norm_adcf},
                                         {"threshold", threshold_json(results[i].argmin_threshold)},
                                         {"default_cost", results[i].default_cost}});
        }
        auto eer_json = [](const EerResult& r) {
            return Json{{"value", r.eer}, {"percent", percent(r.eer)}, {"threshold", threshold_json(r.threshold)}};
        };
        j["eers"] = Json{{"sv_eer", eer_json(sv)}, {"spf_eer", eer_json(spf)}};
        if (sasv) {
            auto s = eer_json(*sasv);
            s["discouraged"] = true;
            j["eers"]["sasv_eer"] = s;
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv: {
        out << "metric,config,value,threshold\n";
        for (std::size_t i = 0; i < models.size(); ++i) {
            out << "min_adcf," << models[i].name << ',' << format_real(results[i].min_norm_adcf) << ','
                << format_real(results[i].argmin_threshold) << '\n';
        }
        out << "sv_eer,," << format_real(sv.eer) << ',' << format_real(sv.threshold) << '\n';
        out << "spf_eer,," << format_real(spf.eer) << ',' << format_real(spf.threshold) << '\n';
        if (sasv) out << "sasv_eer,," << format_real(sasv->eer) << ',' << format_real(sasv->threshold) << '\n';
        break;
    }
    case Format::Table: {
        out << kToolName << ' ' << kVersion << " evaluate\n";
        write_counts_line(out, std::array{scores.tar().size(), scores.non().size(), scores.spf().size()});
        out << '\n';
        write_config_table(out, models);
        out << '\n' << pad("metric", 24) << pad("value", 12) << "threshold\n";
        for (std::size_t i = 0; i < models.size(); ++i) {
            out << pad("min a-DCF [" + models[i].name + "]", 24) << pad(fraction4(results[i].min_norm_adcf), 12)
                << format_real(results[i].argmin_threshold) << '\n';
        }
        out << pad("SV-EER", 24) << pad(percent(sv.eer) + " %", 12) << format_real(sv.threshold) << '\n';
        out << pad("SPF-EER", 24) << pad(percent(spf.eer) + " %", 12) << format_real(spf.threshold) << '\n';
        if (sasv) {
            out << pad("SASV-EER (discouraged)", 24) << pad(percent(sasv->eer) + " %", 12)
                << format_real(sasv->threshold) << '\n';
        }
        break;
    }
    }
    return 0;
}

int run_tandem_eval(const TandemOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    const auto models = load_models(opt.configs);
    const auto trials = read_trial_keys(opt.keys);
    const auto entries = read_dual_scores(opt.dual_scores);
    const auto dual = with_origin(opt.dual_scores, [&] { return join_dual_scores(trials, entries); });

    const bool keep_curve = !opt.curve_out.empty();
    const auto results = min_tdcf(models_of(models), dual, opt.frozen_t_asv, keep_curve);
    if (keep_curve) {
        auto f = open_output(opt.curve_out);
        write_tdcf_curve_csv(f, *results.front().curve);
    }

    // Coefficients of the ASV-constrained t-DCF at the frozen (or optimal) ASV threshold.
    std::vector<ConstrainedCoeffs> coeffs;
    if (opt.show_coeffs) {
        for (std::size_t i = 0; i < models.size(); ++i) {
            const double t_asv = opt.frozen_t_asv.value_or(results[i].t_asv);
            coeffs.push_back(constrained_coeffs(models[i].model, asv_marginal_rates(dual, t_asv)));
        }
    }
    const char* mode = opt.frozen_t_asv ? "frozen-asv" : "grid";

    switch (opt.format) {
    case Format::Json: {
        Json j = header_json("tandem-eval");
        j["mode"] = mode;
        if (opt.frozen_t_asv) j["frozen_t_asv"] = threshold_json(*opt.frozen_t_asv);
        j["dataset"] = counts_json(dual.count(TrialClass::Target), dual.count(TrialClass::NonTarget),
                                   dual.count(TrialClass::Spoof));
        j["configs"] = Json::array();
        for (const auto& n : models) j["configs"].push_back(config_json(n));
        j["min_tdcf"] = Json::array();
        for (std::size_t i = 0; i < models.size(); ++i) {
            Json r{{"config", models[i].name},
                   {"value", results[i].min_norm_tdcf},
                   {"t_asv", threshold_json(results[i].t_asv)},
                   {"t_cm", threshold_json(results[i].t_cm)},
                   {"default_cost", results[i].default_cost}};
            if (!coeffs.empty()) r["constrained"] = Json{{"c0", coeffs[i].c0}, {"c1", coeffs[i].c1}, {"c2", coeffs[i].c2}};
            j["min_tdcf"].push_back(r);
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv: {
        out << "metric,config,value,t_asv,t_cm\n";
        for (std::size_t i = 0; i < models.size(); ++i) {
            out << "min_tdcf," << models[i].name << ',' << format_real(results[i].min_norm_tdcf) << ','
                << format_real(results[i].t_asv) << ',' << format_real(results[i].t_cm) << '\n';
        }
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out << "c0," << models[i].name << ',' << format_real(coeffs[i].c0) << ",,\n";
            out << "c1," << models[i].name << ',' << format_real(coeffs[i].c1) << ",,\n";
            out << "c2," << models[i].name << ',' << format_real(coeffs[i].c2) << ",,\n";
        }
        break;
    }
    case Format::Table: {
        out << kToolName << ' ' << kVersion << " tandem-eval (" << mode << ")\n";
        write_counts_line(out, std::array{dual.count(TrialClass::Target), dual.count(TrialClass::NonTarget),
                                          dual.count(TrialClass::Spoof)});
        out << '\n';
        write_config_table(out, models);
        out << '\n' << pad("metric", 24) << pad("value", 12) << pad("t_asv", 22) << "t_cm\n";
        for (std::size_t i = 0; i < models.size(); ++i) {
            out << pad("min t-DCF [" + models[i].name + "]", 24) << pad(fraction4(results[i].min_norm_tdcf), 12)
                << pad(format_real(results[i].t_asv), 22) << format_real(results[i].t_cm) << '\n';
        }
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out << "constrained t-DCF [" << models[i].name << "]: C0=" << format_sig(coeffs[i].c0, 6)
                << " C1=" << format_sig(coeffs[i].c1, 6) << " C2=" << format_sig(coeffs[i].c2, 6) << '\n';
        }
        break;
    }
    }
    return 0;
}

int run_gate(const GateOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    GateOrder order;
    if (opt.order == "cm-first") {
        order = GateOrder::CmFirst;
    } else if (opt.order == "asv-first") {
        order = GateOrder::AsvFirst;
    } else {
        throw ParseError("unknown gate order '" + opt.order + "' (expected cm-first or asv-first)");
    }
    if (std::isnan(opt.t_gate)) throw ParseError("gate threshold must be a number");
    const auto entries = read_dual_scores(opt.dual_scores);
    std::vector<ScoreEntry> gated;
    gated.reserve(entries.size());
    std::size_t rejected = 0;
    for (const auto& e : entries) {
        const double s = gate_score(e.asv, e.cm, order, opt.t_gate);
        rejected += std::isinf(s) ? 1 : 0;
        gated.push_back({e.id, s});
    }
    auto f = open_output(opt.out);
    write_scores(f, gated);
    out << "gated " << entries.size() << " trials (" << rejected << " rejected by the gate) -> " << opt.out << '\n';
    return 0;
}

int run_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    const auto model = validate_cost_model(load_cost_model(opt.config));
    const auto trials = read_trial_keys(opt.keys);
    const auto entries = read_scores(opt.scores);
    const auto scores = with_origin(opt.scores, [&] { return partition_scores(trials, score_map(entries)); });

    const auto curve = build_curve(scores);
    const auto result = min_adcf(model, curve, true);
    const auto rates_path = opt.out + ".rates.csv";
    const auto cost_path = opt.out + ".cost.csv";
    {
        auto f = open_output(rates_path);
        write_curve_csv(f, curve);
    }
    {
        auto f = open_output(cost_path);
        write_cost_curve_csv(f, *result.curve);
    }
    out << "wrote " << curve.size() << " operating points to " << rates_path << " and " << cost_path
        << "; min a-DCF " << fraction4(result.min_norm_adcf) << " at threshold "
        << format_real(result.argmin_threshold) << '\n';
    return 0;
}

int run_synth(const SynthOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    auto pair = [](const std::vector<double>& v, const char* what) {
        if (v.size() != 2) throw ParseError(std::string(what) + " expects MEAN,STDDEV");
        return std::pair{v[0], v[1]};
    };
    const auto [tar_m, tar_s] = pair(opt.tar, "--tar");
    const auto [non_m, non_s] = pair(opt.non, "--non");
    const auto [spf_m, spf_s] = pair(opt.spf, "--spf");
    const auto [ctar_m, ctar_s] = pair(opt.cm_tar, "--cm-tar");
    const auto [cnon_m, cnon_s] = pair(opt.cm_non, "--cm-non");
    const auto [cspf_m, cspf_s] = pair(opt.cm_spf, "--cm-spf");

    const auto single = synth::generate_single(opt.seed, {tar_m, tar_s, opt.n_tar}, {non_m, non_s, opt.n_non},
                                               {spf_m, spf_s, opt.n_spf});
    const bool independent = !opt.correlation.has_value();
    const double rho = opt.correlation.value_or(0.0);
    const auto dual = synth::generate_dual(opt.seed, {tar_m, tar_s, ctar_m, ctar_s, opt.n_tar, rho},
                                           {non_m, non_s, cnon_m, cnon_s, opt.n_non, rho},
                                           {spf_m, spf_s, cspf_m, cspf_s, opt.n_spf, rho}, independent);

    std::vector<Trial> trials;
    std::vector<ScoreEntry> scores;
    std::vector<DualEntry> duals;
    const auto total = opt.n_tar + opt.n_non + opt.n_spf;
    const int width = static_cast<int>(std::to_string(total).size());
    std::size_t index = 0;
    auto id_of = [&](std::size_t i) {
        std::ostringstream s;
        s << 'T' << std::setw(width) << std::setfill('0') << i;
        return s.str();
    };
    for (auto c : kAllClasses) {
        for (double s : single.of(c)) {
            auto id = id_of(index);
            const auto& d = dual.trials()[index];
            trials.push_back({id, c});
            scores.push_back({id, s});
            duals.push_back({id, d.asv, d.cm});
            ++index;
        }
    }
    {
        auto f = open_output(opt.out + ".keys");
        write_trial_keys(f, trials);
    }
    {
        auto f = open_output(opt.out + ".scores");
        write_scores(f, scores);
    }
    {
        auto f = open_output(opt.out + ".dual");
        write_dual_scores(f, duals);
    }
    out << "wrote " << total << " trials to " << opt.out << ".keys, " << opt.out << ".scores and " << opt.out
        << ".dual\n";
    return 0;
}

} // namespace sasv::cli
