#include "sigroots/survey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "sigroots/enumerate.hpp"
#include "sigroots/errors.hpp"
#include "sigroots/graph6.hpp"
#include "sigroots/graph_polynomials.hpp"

namespace sigroots {

namespace {

constexpr double real_axis_tolerance = 1e-7;
constexpr const char* checkpoint_tag = "sigma-roots-checkpoint-v1";

struct Item {
    std::size_t line = 0;
    Graph graph;
};

/// Yields input graphs in order, either from the built-in enumeration or a graph6 file.
class GraphSource {
public:
    explicit GraphSource(const SurveyConfig& cfg) : builtin_mode_(cfg.builtin_order.has_value()) {
        if (builtin_mode_) {
            builtin_ = enumerate_graphs(*cfg.builtin_order, false);
            name_ = "builtin:" + std::to_string(*cfg.builtin_order);
        } else {
            file_.open(*cfg.input);
            if (!file_) throw std::runtime_error("cannot open input " + cfg.input->string());
            name_ = cfg.input->string();
        }
    }

    const std::string& name() const { return name_; }
    std::size_t consumed() const { return line_; }

    void skip(std::size_t lines) {
        std::string text;
        while (line_ < lines && next_line(text)) {
        }
    }

    /// False at end of input. Parse errors are reported through `error`.
    bool next(Item& item, std::optional<SurveyInputError>& error) {
        error.reset();
        std::string text;
        if (!next_line(text)) return false;
        item.line = line_;
        if (builtin_mode_) {
            item.graph = builtin_[line_ - 1];
            return true;
        }
        if (!text.empty() && text.back() == '\r') text.pop_back();
        try {
            item.graph = parse_graph6(text);
        } catch (const parse_error& e) {
            error = SurveyInputError{line_, e.offset(), e.what()};
        } catch (const capacity_error& e) {
            error = SurveyInputError{line_, 0, e.what()};
        }
        return true;
    }

private:
    bool next_line(std::string& text) {
        if (builtin_mode_) {
            if (line_ >= builtin_.size()) return false;
        } else if (!std::getline(file_, text)) {
            return false;
        }
        ++line_;
        return true;
    }

    bool builtin_mode_;
    std::vector<Graph> builtin_;
    std::ifstream file_;
    std::string name_;
    std::size_t line_ = 0;
};

void fold(SurveySummary& s, const SurveyRecord& r, bool& any_root) {
    ++s.total;
    if (r.has_nonreal) {
        ++s.nonreal;
        s.nonreal_graphs.push_back(r.graph_id);
    }
    double least = r.min_real_root.midpoint().get_d();
    if (!any_root) {
        s.min_real_root = least;
        s.max_re = r.max_re;
        s.max_abs_im = r.max_abs_im;
        any_root = true;
    } else {
        s.min_real_root = std::min(s.min_real_root, least);
        s.max_re = std::max(s.max_re, r.max_re);
        s.max_abs_im = std::max(s.max_abs_im, r.max_abs_im);
    }
    if (!r.no_positive_roots) ++s.positive_root_violations;
    if (!r.zero_multiplicity_matches) ++s.zero_multiplicity_mismatches;
    if (r.real_axis_mismatch) ++s.real_axis_mismatches;
}

void write_checkpoint(const std::filesystem::path& path, const SurveyCheckpoint& cp) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << checkpoint_tag << '\n';
        out << "source\t" << cp.source << '\n';
        out << "next_line\t" << cp.next_line << '\n';
        char buf[64];
        auto num = [&](double v) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return std::string(buf);
        };
        const auto& s = cp.summary;
        out << "total\t" << s.total << '\n';
        out << "nonreal\t" << s.nonreal << '\n';
        out << "errors\t" << s.errors << '\n';
        out << "skipped_disconnected\t" << s.skipped_disconnected << '\n';
        out << "min_real_root\t" << num(s.min_real_root) << '\n';
        out << "max_re\t" << num(s.max_re) << '\n';
        out << "max_abs_im\t" << num(s.max_abs_im) << '\n';
        out << "positive_root_violations\t" << s.positive_root_violations << '\n';
        out << "zero_multiplicity_mismatches\t" << s.zero_multiplicity_mismatches << '\n';
        out << "real_axis_mismatches\t" << s.real_axis_mismatches << '\n';
        for (const auto& g : s.nonreal_graphs) out << "nonreal_graph\t" << g << '\n';
        for (const auto& [k, v] : cp.extra) out << "extra." << k << '\t' << v << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

void SurveyConfig::validate() const {
    if (builtin_order.has_value() == input.has_value())
        throw domain_error("survey: exactly one of built-in order and input file must be given");
    if (builtin_order && (*builtin_order < 1 || *builtin_order > max_builtin_order))
        throw domain_error("survey: built-in order must be between 1 and " + std::to_string(max_builtin_order));
    if (!(residual_bound > 0)) throw domain_error("survey: residual bound must be positive");
    if (workers < 1) throw domain_error("survey: need at least one worker");
    if (batch_size < 1) throw domain_error("survey: batch size must be positive");
}

std::optional<SurveyCheckpoint> read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != checkpoint_tag) throw domain_error("not a survey checkpoint: " + path.string());
    SurveyCheckpoint cp;
    auto& s = cp.summary;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        std::string key = line.substr(0, tab), value = line.substr(tab + 1);
        auto count = [&] { return static_cast<std::size_t>(std::stoull(value)); };
        if (key == "source") cp.source = value;
        else if (key == "next_line") cp.next_line = count();
        else if (key == "total") s.total = count();
        else if (key == "nonreal") s.nonreal = count();
        else if (key == "errors") s.errors = count();
        else if (key == "skipped_disconnected") s.skipped_disconnected = count();
        else if (key == "min_real_root") s.min_real_root = std::stod(value);
        else if (key == "max_re") s.max_re = std::stod(value);
        else if (key == "max_abs_im") s.max_abs_im = std::stod(value);
        else if (key == "positive_root_violations") s.positive_root_violations = count();
        else if (key == "zero_multiplicity_mismatches") s.zero_multiplicity_mismatches = count();
        else if (key == "real_axis_mismatches") s.real_axis_mismatches = count();
        else if (key == "nonreal_graph") s.nonreal_graphs.push_back(value);
        else if (key.starts_with("extra.")) cp.extra.emplace_back(key.substr(6), value);
    }
    return cp;
}

SurveyRecord survey_graph(const Graph& g, double residual_bound) {
    if (g.order() < 1) throw domain_error("survey_graph: empty graph");
    SurveyRecord r;
    r.graph_id = emit_graph6(g);
    r.n = g.order();
    r.e = g.size();
    r.chi = chromatic_number(g);
    r.sigma = sigma_poly(g);

    SturmChain chain(r.sigma);
    r.has_nonreal = chain.count_all() < chain.squarefree().degree();
    r.no_positive_roots = chain.count(Rational(0), Rational(cauchy_bound(r.sigma))) == 0;
    r.zero_multiplicity_matches = r.sigma.low_order() == r.chi;
    r.min_real_root = min_real_root(r.sigma);

    r.roots = numeric_roots(r.sigma, residual_bound);
    r.max_re = -std::numeric_limits<double>::infinity();
    for (const auto& root : r.roots) {
        r.max_re = std::max(r.max_re, root.value.real());
        r.max_abs_im = std::max(r.max_abs_im, std::abs(root.value.imag()));
        if (!r.has_nonreal && std::abs(root.value.imag()) > real_axis_tolerance) r.real_axis_mismatch = true;
    }
    return r;
}

SurveyResult run_survey(const SurveyConfig& cfg, const RecordSink& sink) {
    cfg.validate();
    GraphSource source(cfg);
    SurveyResult result;
    SurveySummary& summary = result.summary;
    bool any_root = false;

    if (cfg.checkpoint) {
        if (auto cp = read_checkpoint(*cfg.checkpoint)) {
            if (cp->source != source.name())
                throw domain_error("checkpoint belongs to a different input: " + cp->source);
            summary = cp->summary;
            any_root = summary.total > 0;
            source.skip(cp->next_line);
            result.resumed_at = cp->next_line;
        }
    }

    bool exhausted = false;
    while (!exhausted) {
        std::vector<Item> batch;
        Item item;
        std::optional<SurveyInputError> error;
        while (batch.size() < cfg.batch_size) {
            if (!source.next(item, error)) {
                exhausted = true;
                break;
            }
            if (error) {
                ++summary.errors;
                result.input_errors.push_back(*error);
                continue;
            }
            if (cfg.connected_only && !is_connected(item.graph)) {
                ++summary.skipped_disconnected;
                continue;
            }
            if (item.graph.order() < 1 || item.graph.order() > max_sigma_order) {
                ++summary.errors;
                result.input_errors.push_back(
                    {item.line, 0, "graph order outside 1.." + std::to_string(max_sigma_order)});
                continue;
            }
            batch.push_back(item);
        }

        std::vector<std::optional<SurveyRecord>> records(batch.size());
        std::vector<std::string> failures(batch.size());
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                try {
                    records[i] = survey_graph(batch[i].graph, cfg.residual_bound);
                    records[i]->index = batch[i].line - 1;
                } catch (const std::exception& e) {
                    failures[i] = e.what();
                }
            }
        };
        const std::size_t workers = std::min<std::size_t>(cfg.workers, batch.size());
        if (workers <= 1) {
            work(0, batch.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (batch.size() + workers - 1) / workers;
            for (std::size_t w = 0; w < workers; ++w) {
                const std::size_t b = std::min(batch.size(), w * chunk);
                pool.emplace_back(work, b, std::min(batch.size(), b + chunk));
            }
            for (auto& t : pool) t.join();
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!records[i]) {
                ++summary.errors;
                result.input_errors.push_back({batch[i].line, 0, failures[i]});
                continue;
            }
            fold(summary, *records[i], any_root);
            sink(*records[i]);
        }

        std::vector<std::pair<std::string, std::string>> extra;
        if (cfg.on_batch_end) extra = cfg.on_batch_end();
        if (cfg.checkpoint) write_checkpoint(*cfg.checkpoint, {source.name(), source.consumed(), summary, extra});
    }
    return result;
}

std::vector<SurveyRecord> run_survey_collect(const SurveyConfig& cfg, SurveyResult* result) {
    std::vector<SurveyRecord> records;
    SurveyResult r = run_survey(cfg, [&](const SurveyRecord& rec) { records.push_back(rec); });
    if (result) *result = std::move(r);
    return records;
}

std::string format_decimal(double v) {
    if (v == 0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string records_csv_header() {
    return "graph_id,n,e,chi,sigma,has_nonreal,degree,min_real_root,max_re,max_abs_im";
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string records_csv_row(const SurveyRecord& r) {
    std::ostringstream out;
    out << csv_field(r.graph_id) << ',' << r.n << ',' << r.e << ',' << r.chi << ',' << r.sigma.to_string() << ','
        << (r.has_nonreal ? "true" : "false") << ',' << r.sigma.degree() << ','
        << format_decimal(r.min_real_root.midpoint().get_d()) << ',' << format_decimal(r.max_re) << ','
        << format_decimal(r.max_abs_im);
    return out.str();
}

std::string roots_csv_header() { return "graph_id,re,im"; }

std::string roots_csv_rows(const SurveyRecord& r) {
    std::string out;
    const std::string id = csv_field(r.graph_id);
    for (const auto& root : r.roots)
        out += id + ',' + format_decimal(root.value.real()) + ',' + format_decimal(root.value.imag()) + '\n';
    return out;
}

std::string summary_text(const SurveySummary& s) {
    std::ostringstream out;
    out << "schema: " << csv_schema_tag << '\n';
    out << "total: " << s.total << '\n';
    out << "nonreal: " << s.nonreal << '\n';
    out << "errors: " << s.errors << '\n';
    out << "skipped_disconnected: " << s.skipped_disconnected << '\n';
    out << "min_real_root: " << format_decimal(s.min_real_root) << '\n';
    out << "max_re: " << format_decimal(s.max_re) << '\n';
    out << "max_abs_im: " << format_decimal(s.max_abs_im) << '\n';
    out << "positive_root_violations: " << s.positive_root_violations << '\n';
    out << "zero_multiplicity_mismatches: " << s.zero_multiplicity_mismatches << '\n';
    out << "real_axis_mismatches: " << s.real_axis_mismatches << '\n';
    out << "nonreal_graphs:";
    for (const auto& g : s.nonreal_graphs) out << ' ' << g;
    out << '\n';
    return out.str();
}

std::vector<RootPoint> read_roots_csv(std::istream& in) {
    std::vector<RootPoint> points;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line == roots_csv_header()) continue;
        auto last = line.rfind(',');
        auto mid = line.rfind(',', last == 0 ? 0 : last - 1);
        if (last == std::string::npos || mid == std::string::npos)
            throw domain_error("malformed roots row: " + line);
        points.push_back({std::stod(line.substr(mid + 1, last - mid - 1)), std::stod(line.substr(last + 1))});
    }
    return points;
}

std::string roots_svg(const std::vector<RootPoint>& points) {
    constexpr double width = 800, height = 600, margin = 60;
    double re_lo = -1, re_hi = 1, im_lo = -1, im_hi = 1;
    if (!points.empty()) {
        re_lo = re_hi = points.front().re;
        im_lo = im_hi = points.front().im;
        for (const auto& p : points) {
            re_lo = std::min(re_lo, p.re);
            re_hi = std::max(re_hi, p.re);
            im_lo = std::min(im_lo, p.im);
            im_hi = std::max(im_hi, p.im);
        }
        auto widen = [](double& lo, double& hi) {
            if (hi - lo < 1e-9) {
                lo -= 1;
                hi += 1;
            }
        };
        widen(re_lo, re_hi);
        widen(im_lo, im_hi);
    }
    auto sx = [&](double re) { return margin + (re - re_lo) / (re_hi - re_lo) * (width - 2 * margin); };
    auto sy = [&](double im) { return height - margin - (im - im_lo) / (im_hi - im_lo) * (height - 2 * margin); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    const double x0 = margin, x1 = width - margin, y0 = height - margin, y1 = margin;
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
        << "\" stroke=\"black\"/>\n";
    out << "<g font-family=\"monospace\" font-size=\"12\">\n";
    out << "<text x=\"" << x0 << "\" y=\"" << y0 + 20 << "\">" << format_decimal(re_lo) << "</text>\n";
    out << "<text x=\"" << x1 << "\" y=\"" << y0 + 20 << "\" text-anchor=\"end\">" << format_decimal(re_hi)
        << "</text>\n";
    out << "<text x=\"" << x0 - 8 << "\" y=\"" << y0 << "\" text-anchor=\"end\">" << format_decimal(im_lo)
        << "</text>\n";
    out << "<text x=\"" << x0 - 8 << "\" y=\"" << y1 + 4 << "\" text-anchor=\"end\">" << format_decimal(im_hi)
        << "</text>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">Re</text>\n";
    out << "<text x=\"15\" y=\"" << height / 2 << "\">Im</text>\n";
    out << "</g>\n<g fill=\"steelblue\">\n";
    for (const auto& p : points)
        out << "<circle cx=\"" << num(sx(p.re)) << "\" cy=\"" << num(sy(p.im)) << "\" r=\"1.5\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace sigroots
