#include "sasv/trialdata.hpp"

#include "sasv/error.hpp"
#include "sasv/numfmt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace sasv {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

void check_scores(const std::vector<double>& scores, std::string_view cls) {
    for (double s : scores) {
        if (std::isnan(s) || s == std::numeric_limits<double>::infinity()) {
            throw InvalidScoreError("non-admissible " + std::string(cls) + " score '" +
                                    format_real(s) + "' (NaN and +inf are not scores)");
        }
    }
}

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

std::string_view to_string(TrialClass c) noexcept {
    switch (c) {
    case TrialClass::Target: return "target";
    case TrialClass::NonTarget: return "nontarget";
    case TrialClass::Spoof: return "spoof";
    }
    return "?";
}

TrialClass parse_trial_class(std::string_view token) {
    const auto t = lower(token);
    if (t == "target") return TrialClass::Target;
    if (t == "nontarget") return TrialClass::NonTarget;
    if (t == "spoof") return TrialClass::Spoof;
    throw ParseError("unknown trial label '" + std::string(token) +
                     "' (expected target, nontarget or spoof)");
}

ScoreSet::ScoreSet(std::vector<double> tar, std::vector<double> non, std::vector<double> spf)
    : tar_(std::move(tar)), non_(std::move(non)), spf_(std::move(spf)) {
    if (tar_.empty() && non_.empty() && spf_.empty()) {
        throw EmptyClassError("score set has no scores in any class");
    }
    check_scores(tar_, "target");
    check_scores(non_, "nontarget");
    check_scores(spf_, "spoof");
}

const std::vector<double>& ScoreSet::of(TrialClass c) const noexcept {
    switch (c) {
    case TrialClass::Target: return tar_;
    case TrialClass::NonTarget: return non_;
    case TrialClass::Spoof: break;
    }
    return spf_;
}

DualScoreSet::DualScoreSet(std::vector<DualScore> trials) : trials_(std::move(trials)) {
    for (const auto& t : trials_) {
        if (!std::isfinite(t.asv) || !std::isfinite(t.cm)) {
            throw InvalidScoreError("dual scores must be finite, got (" + format_real(t.asv) +
                                    ", " + format_real(t.cm) + ")");
        }
    }
}

std::size_t DualScoreSet::count(TrialClass c) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(trials_.begin(), trials_.end(), [c](const DualScore& t) { return t.label == c; }));
}

namespace {
ScoreSet project(const std::vector<DualScore>& trials, double DualScore::*column) {
    std::vector<double> tar, non, spf;
    for (const auto& t : trials) {
        switch (t.label) {
        case TrialClass::Target: tar.push_back(t.*column); break;
        case TrialClass::NonTarget: non.push_back(t.*column); break;
        case TrialClass::Spoof: spf.push_back(t.*column); break;
        }
    }
    return ScoreSet(std::move(tar), std::move(non), std::move(spf));
}
} // namespace

ScoreSet DualScoreSet::asv_scores() const { return project(trials_, &DualScore::asv); }
ScoreSet DualScoreSet::cm_scores() const { return project(trials_, &DualScore::cm); }

CostModel validate_cost_model(const CostModel& m) {
    const std::array<std::pair<const char*, double>, 6> fields = {{
        {"pi_tar", m.pi_tar},
        {"pi_non", m.pi_non},
        {"pi_spf", m.pi_spf},
        {"c_miss", m.c_miss},
        {"c_fa_non", m.c_fa_non},
        {"c_fa_spf", m.c_fa_spf},
    }};
    for (const auto& [key, v] : fields) {
        if (!std::isfinite(v)) {
            throw NegativeValueError(std::string(key) + " must be a finite number");
        }
        if (v < 0.0) {
            throw NegativeValueError(std::string(key) + " = " + format_real(v) + " is negative");
        }
    }
    const double sum = m.pi_tar + m.pi_non + m.pi_spf;
    if (std::fabs(sum - 1.0) > kPriorSumTolerance) {
        throw PriorSumError("priors sum to " + format_real(sum) + ", expected 1");
    }
    if (m.c_miss == 0.0 && m.c_fa_non == 0.0 && m.c_fa_spf == 0.0) {
        throw AllZeroCostError("all costs are zero");
    }
    return m;
}

std::optional<CostModel> find_preset(std::string_view name) {
    const auto n = lower(name);
    if (n == "adcf1") return CostModel{0.94, 0.01, 0.05, 1.0, 10.0, 10.0};
    if (n == "adcf2") return CostModel{0.98, 0.01, 0.01, 1.0, 10.0, 10.0};
    return std::nullopt;
}

std::vector<std::string> preset_names() { return {"adcf1", "adcf2"}; }

std::string to_config_text(const CostModel& m) {
    std::string out;
    out += "pi_tar=" + format_real(m.pi_tar) + "\n";
    out += "pi_non=" + format_real(m.pi_non) + "\n";
    out += "pi_spf=" + format_real(m.pi_spf) + "\n";
    out += "c_miss=" + format_real(m.c_miss) + "\n";
    out += "c_fa_non=" + format_real(m.c_fa_non) + "\n";
    out += "c_fa_spf=" + format_real(m.c_fa_spf) + "\n";
    return out;
}

CostModel parse_cost_config(std::string_view text, std::string_view origin) {
    CostModel m;
    std::array<std::pair<std::string_view, double CostModel::*>, 6> keys = {{
        {"pi_tar", &CostModel::pi_tar},
        {"pi_non", &CostModel::pi_non},
        {"pi_spf", &CostModel::pi_spf},
        {"c_miss", &CostModel::c_miss},
        {"c_fa_non", &CostModel::c_fa_non},
        {"c_fa_spf", &CostModel::c_fa_spf},
    }};
    std::array<bool, 6> seen{};
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(where + "expected key=value");
        }
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        auto it = std::find_if(keys.begin(), keys.end(), [&](const auto& k) { return k.first == key; });
        if (it == keys.end()) {
            throw ParseError(where + "unknown key '" + std::string(key) + "'");
        }
        const auto idx = static_cast<std::size_t>(it - keys.begin());
        if (seen[idx]) {
            throw ParseError(where + "duplicate key '" + std::string(key) + "'");
        }
        auto v = parse_real(value);
        if (!v || !std::isfinite(*v)) {
            throw ParseError(where + "invalid number '" + std::string(value) + "'");
        }
        m.*(it->second) = *v;
        seen[idx] = true;
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (!seen[i]) {
            throw ParseError(std::string(origin) + ": missing key '" + std::string(keys[i].first) + "'");
        }
    }
    return m;
}

GeneralCostSpec::GeneralCostSpec(std::vector<double> priors, std::vector<double> costs)
    : priors_(std::move(priors)), costs_(std::move(costs)) {
    const auto n = priors_.size();
    if (n < 2) {
        throw DimensionMismatchError("a cost specification needs at least two classes");
    }
    if (costs_.size() != n * n) {
        throw DimensionMismatchError("cost matrix has " + std::to_string(costs_.size()) +
                                     " entries, expected " + std::to_string(n * n));
    }
    double sum = 0.0;
    for (double p : priors_) {
        if (!(p >= 0.0)) throw NegativeValueError("class priors must be non-negative");
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kPriorSumTolerance) {
        throw PriorSumError("priors sum to " + format_real(sum) + ", expected 1");
    }
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t k = 0; k < n; ++k) {
            const double c = costs_[q * n + k];
            if (!(c >= 0.0) || !std::isfinite(c)) {
                throw NegativeValueError("costs must be finite and non-negative");
            }
            if (q == k && c != 0.0) {
                throw NegativeValueError("correct decisions must have zero cost (c_kk = 0)");
            }
        }
    }
}

ScoreSet partition_scores(std::span<const Trial> trials,
                          const std::unordered_map<std::string, double>& scores) {
    std::vector<double> tar, non, spf;
    std::unordered_set<std::string_view> ids;
    ids.reserve(trials.size());
    for (const auto& t : trials) {
        if (!ids.insert(t.id).second) {
            throw DuplicateTrialError("duplicate trial id '" + t.id + "'");
        }
        auto it = scores.find(t.id);
        if (it == scores.end()) {
            throw MissingScoreError("no score for trial '" + t.id + "'");
        }
        switch (t.label) {
        case TrialClass::Target: tar.push_back(it->second); break;
        case TrialClass::NonTarget: non.push_back(it->second); break;
        case TrialClass::Spoof: spf.push_back(it->second); break;
        }
    }
    if (scores.size() != trials.size()) {
        // Smallest unknown id keeps the diagnostic independent of hash order.
        const std::string* unknown = nullptr;
        for (const auto& [id, s] : scores) {
            if (!ids.contains(id) && (unknown == nullptr || id < *unknown)) unknown = &id;
        }
        if (unknown != nullptr) {
            throw UnknownTrialError("score given for unknown trial '" + *unknown + "'");
        }
    }
    return ScoreSet(std::move(tar), std::move(non), std::move(spf));
}

} // namespace sasv
