#include "sasv/formats.hpp"

#include "sasv/error.hpp"
#include "sasv/numfmt.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace sasv {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string location(std::string_view origin, std::size_t line) {
    return std::string(origin) + ":" + std::to_string(line) + ": ";
}

// Calls fn(fields, line_no) for every non-comment, non-blank line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_ws(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        fn(fields, line_no);
    }
}

void expect_fields(const std::vector<std::string_view>& fields, std::size_t n, std::string_view origin,
                   std::size_t line, std::string_view shape) {
    if (fields.size() != n) {
        throw ParseError(location(origin, line) + "expected '" + std::string(shape) + "', got " +
                         std::to_string(fields.size()) + " fields");
    }
}

double finite_score(std::string_view token, std::string_view origin, std::size_t line) {
    auto v = parse_real(token);
    if (!v) {
        throw ParseError(location(origin, line) + "invalid score '" + std::string(token) + "'");
    }
    if (!std::isfinite(*v)) {
        throw InvalidScoreError(location(origin, line) + "non-finite score '" + std::string(token) + "'");
    }
    return *v;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    return in;
}

} // namespace

std::vector<Trial> parse_trial_keys(std::istream& in, std::string_view origin) {
    std::vector<Trial> trials;
    std::unordered_set<std::string> seen;
    for_each_record(in, [&](const auto& f, std::size_t line) {
        expect_fields(f, 2, origin, line, "<trial_id> <label>");
        TrialClass label;
        try {
            label = parse_trial_class(f[1]);
        } catch (const ParseError& e) {
            throw ParseError(location(origin, line) + e.what());
        }
        std::string id(f[0]);
        if (!seen.insert(id).second) {
            throw DuplicateTrialError(location(origin, line) + "duplicate trial id '" + id + "'");
        }
        trials.push_back({std::move(id), label});
    });
    return trials;
}

std::vector<ScoreEntry> parse_scores(std::istream& in, std::string_view origin) {
    std::vector<ScoreEntry> out;
    std::unordered_set<std::string> seen;
    for_each_record(in, [&](const auto& f, std::size_t line) {
        expect_fields(f, 2, origin, line, "<trial_id> <score>");
        // `-inf` is the gated-out sentinel written by the gate command.
        const double s = f[1] == "-inf" ? -std::numeric_limits<double>::infinity()
                                        : finite_score(f[1], origin, line);
        std::string id(f[0]);
        if (!seen.insert(id).second) {
            throw DuplicateTrialError(location(origin, line) + "duplicate score for trial '" + id + "'");
        }
        out.push_back({std::move(id), s});
    });
    return out;
}

std::vector<DualEntry> parse_dual_scores(std::istream& in, std::string_view origin) {
    std::vector<DualEntry> out;
    std::unordered_set<std::string> seen;
    for_each_record(in, [&](const auto& f, std::size_t line) {
        expect_fields(f, 3, origin, line, "<trial_id> <asv_score> <cm_score>");
        const double asv = finite_score(f[1], origin, line);
        const double cm = finite_score(f[2], origin, line);
        std::string id(f[0]);
        if (!seen.insert(id).second) {
            throw DuplicateTrialError(location(origin, line) + "duplicate score for trial '" + id + "'");
        }
        out.push_back({std::move(id), asv, cm});
    });
    return out;
}

std::vector<Trial> read_trial_keys(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_trial_keys(in, path.string());
}

std::vector<ScoreEntry> read_scores(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_scores(in, path.string());
}

std::vector<DualEntry> read_dual_scores(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_dual_scores(in, path.string());
}

std::unordered_map<std::string, double> score_map(const std::vector<ScoreEntry>& entries) {
    std::unordered_map<std::string, double> m;
    m.reserve(entries.size());
    for (const auto& e : entries) {
        if (!m.emplace(e.id, e.score).second) {
            throw DuplicateTrialError("duplicate score for trial '" + e.id + "'");
        }
    }
    return m;
}

DualScoreSet join_dual_scores(std::span<const Trial> trials, const std::vector<DualEntry>& entries) {
    std::unordered_map<std::string_view, const DualEntry*> by_id;
    by_id.reserve(entries.size());
    for (const auto& e : entries) {
        if (!by_id.emplace(e.id, &e).second) {
            throw DuplicateTrialError("duplicate score for trial '" + e.id + "'");
        }
    }
    std::unordered_set<std::string_view> keyed;
    std::vector<DualScore> out;
    out.reserve(trials.size());
    for (const auto& t : trials) {
        if (!keyed.insert(t.id).second) {
            throw DuplicateTrialError("duplicate trial id '" + t.id + "'");
        }
        auto it = by_id.find(t.id);
        if (it == by_id.end()) {
            throw MissingScoreError("no score for trial '" + t.id + "'");
        }
        out.push_back({t.label, it->second->asv, it->second->cm});
    }
    for (const auto& e : entries) {
        if (!keyed.contains(e.id)) {
            throw UnknownTrialError("score given for unknown trial '" + e.id + "'");
        }
    }
    return DualScoreSet(std::move(out));
}

void write_trial_keys(std::ostream& out, std::span<const Trial> trials) {
    for (const auto& t : trials) out << t.id << ' ' << to_string(t.label) << '\n';
}

void write_scores(std::ostream& out, const std::vector<ScoreEntry>& entries) {
    for (const auto& e : entries) out << e.id << ' ' << format_real(e.score) << '\n';
}

void write_dual_scores(std::ostream& out, const std::vector<DualEntry>& entries) {
    for (const auto& e : entries) {
        out << e.id << ' ' << format_real(e.asv) << ' ' << format_real(e.cm) << '\n';
    }
}

CostModel load_cost_model(std::string_view name_or_path) {
    if (auto preset = find_preset(name_or_path)) return *preset;
    const std::filesystem::path path(name_or_path);
    auto in = open_input(path);
    std::ostringstream text;
    text << in.rdbuf();
    const auto parsed = parse_cost_config(text.str(), path.string());
    const std::string where = path.string() + ": ";
    try {
        return validate_cost_model(parsed);
    } catch (const PriorSumError& e) {
        throw PriorSumError(where + e.what());
    } catch (const NegativeValueError& e) {
        throw NegativeValueError(where + e.what());
    } catch (const AllZeroCostError& e) {
        throw AllZeroCostError(where + e.what());
    }
}

} // namespace sasv
