#pragma once

#include "sasv/trialdata.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sasv {

// Plain-text trial formats. All readers skip blank lines and lines starting
// with '#', split on whitespace, and report problems as "<origin>:<line>: ...".
//
//   key file         <trial_id> <label>            label: target|nontarget|spoof
//   score file       <trial_id> <score>            score: decimal real, or -inf
//   dual-score file  <trial_id> <asv> <cm>         both decimal, finite

struct ScoreEntry {
    std::string id;
    double score;
};

struct DualEntry {
    std::string id;
    double asv;
    double cm;
};

std::vector<Trial> parse_trial_keys(std::istream& in, std::string_view origin);
std::vector<ScoreEntry> parse_scores(std::istream& in, std::string_view origin);
std::vector<DualEntry> parse_dual_scores(std::istream& in, std::string_view origin);

std::vector<Trial> read_trial_keys(const std::filesystem::path& path);
std::vector<ScoreEntry> read_scores(const std::filesystem::path& path);
std::vector<DualEntry> read_dual_scores(const std::filesystem::path& path);

/// id -> score, rejecting duplicated ids.
std::unordered_map<std::string, double> score_map(const std::vector<ScoreEntry>& entries);

/// Pairs dual-score entries with their keyed labels, in key order.
/// Throws DuplicateTrialError, MissingScoreError, UnknownTrialError.
DualScoreSet join_dual_scores(std::span<const Trial> trials, const std::vector<DualEntry>& entries);

void write_trial_keys(std::ostream& out, std::span<const Trial> trials);
void write_scores(std::ostream& out, const std::vector<ScoreEntry>& entries);
void write_dual_scores(std::ostream& out, const std::vector<DualEntry>& entries);

/// Cost model by preset name, else by reading a key=value config file.
CostModel load_cost_model(std::string_view name_or_path);

} // namespace sasv
