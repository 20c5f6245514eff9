#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigroots/graph.hpp"
#include "sigroots/polynomial.hpp"
#include "sigroots/root_analysis.hpp"

namespace sigroots {

inline constexpr const char* csv_schema_tag = "#sigma-roots-v1";

/// Per-graph result of a survey.
struct SurveyRecord {
    std::size_t index = 0;  // position in the input stream
    std::string graph_id;   // graph6
    int n = 0;
    std::size_t e = 0;
    int chi = 0;  // brute-force chromatic number
    IntPoly sigma;
    bool has_nonreal = false;
    std::vector<NumericRoot> roots;
    RationalInterval min_real_root;
    double max_re = 0;
    double max_abs_im = 0;
    /// Exact: no root of sigma in (0, inf).
    bool no_positive_roots = true;
    /// Multiplicity of the root 0 equals chi.
    bool zero_multiplicity_matches = true;
    /// has_nonreal is false but some numeric root is off the real axis by > 1e-7.
    bool real_axis_mismatch = false;
};

struct SurveyInputError {
    std::size_t line = 0;    // 1-based
    std::size_t offset = 0;  // byte offset in the line
    std::string message;
};

struct SurveySummary {
    std::size_t total = 0;
    std::size_t nonreal = 0;
    std::size_t errors = 0;
    std::size_t skipped_disconnected = 0;
    double min_real_root = 0;
    double max_re = 0;
    double max_abs_im = 0;
    std::size_t positive_root_violations = 0;
    std::size_t zero_multiplicity_mismatches = 0;
    std::size_t real_axis_mismatches = 0;
    std::vector<std::string> nonreal_graphs;

    std::size_t invariant_violations() const {
        return positive_root_violations + zero_multiplicity_mismatches + real_axis_mismatches;
    }
};

struct SurveyConfig {
    /// Exactly one of builtin_order / input must be set.
    std::optional<int> builtin_order;
    std::optional<std::filesystem::path> input;
    bool connected_only = false;
    double residual_bound = default_residual_bound;
    int workers = 1;
    /// Graphs processed per parallel batch (also the checkpoint granularity).
    std::size_t batch_size = 2048;
    /// When set, progress is recorded here after every batch and a matching
    /// file resumes the run from the recorded line.
    std::optional<std::filesystem::path> checkpoint;
    /// Called after each batch has been handed to the sink and before the
    /// checkpoint is written; its key/value pairs are stored in the checkpoint.
    std::function<std::vector<std::pair<std::string, std::string>>()> on_batch_end;

    void validate() const;
};

/// Progress of an interrupted survey.
struct SurveyCheckpoint {
    std::string source;
    std::size_t next_line = 0;  // input lines already consumed
    SurveySummary summary;
    std::vector<std::pair<std::string, std::string>> extra;
};

std::optional<SurveyCheckpoint> read_checkpoint(const std::filesystem::path& path);

/// Survey one graph (sigma scope: n <= 16).
SurveyRecord survey_graph(const Graph& g, double residual_bound = default_residual_bound);

/// Receives records in input order.
using RecordSink = std::function<void(const SurveyRecord&)>;

struct SurveyResult {
    SurveySummary summary;
    /// Input line the run resumed from, when a checkpoint was used.
    std::optional<std::size_t> resumed_at;
    std::vector<SurveyInputError> input_errors;
};

/// Streams every input graph through survey_graph, merging worker output in
/// input order. Output is independent of the worker count.
SurveyResult run_survey(const SurveyConfig& cfg, const RecordSink& sink);

/// Convenience: collects all records.
std::vector<SurveyRecord> run_survey_collect(const SurveyConfig& cfg, SurveyResult* result = nullptr);

// Output formats.
std::string format_decimal(double v);
std::string records_csv_header();
std::string records_csv_row(const SurveyRecord& r);
std::string roots_csv_header();
std::string roots_csv_rows(const SurveyRecord& r);
/// Fixed key order, one "key: value" per line.
std::string summary_text(const SurveySummary& s);

struct RootPoint {
    double re = 0;
    double im = 0;
};

/// Parses a roots.csv body (schema tag and header are skipped).
std::vector<RootPoint> read_roots_csv(std::istream& in);
/// 800x600 scatter plot; a pure function of the points.
std::string roots_svg(const std::vector<RootPoint>& points);

}  // namespace sigroots
