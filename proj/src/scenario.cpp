#include "mcvar/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cfloat>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace mcvar {
namespace {

// Raw sums may carry decimal rounding residue up to this much and still be
// renormalized; anything worse is rejected as invalid data.
constexpr double kRenormTolerance = 1e-9;
// Sums already this close to 1 are treated as exactly 1 so that
// renormalization is idempotent and emitted files reload bit-exactly.
constexpr double kRenormDeadBand = 64.0 * DBL_EPSILON;

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view token, std::size_t line_no) {
    double value = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": not a number: '" +
                        std::string(token) + "'");
    return value;
}

ScenarioSet parse_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    bool expect_label = false;
    std::size_t dim = 0;
    std::vector<std::vector<double>> outcomes;
    std::vector<double> probs;
    std::vector<std::string> labels;

    while (std::getline(in, line)) {
        ++line_no;
        auto sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        auto fields = split_fields(sv);
        if (!header_seen) {
            if (fields.empty() || fields[0] != "prob")
                throw Error(ErrorKind::ParseError,
                            "line " + std::to_string(line_no) +
                                ": header must start with 'prob'");
            expect_label = fields.back() == "label";
            std::size_t ncols = fields.size() - (expect_label ? 1 : 0);
            if (ncols < 2)
                throw Error(ErrorKind::ParseError, "header declares no outcome columns");
            dim = ncols - 1;
            for (std::size_t i = 1; i <= dim; ++i) {
                std::string want = "x" + std::to_string(i);
                if (fields[i] != want)
                    throw Error(ErrorKind::ParseError,
                                "line " + std::to_string(line_no) + ": expected column '" +
                                    want + "', got '" + std::string(fields[i]) + "'");
            }
            header_seen = true;
            continue;
        }
        std::size_t want = 1 + dim + (expect_label ? 1 : 0);
        if (fields.size() != want)
            throw Error(ErrorKind::DimensionMismatch,
                        "line " + std::to_string(line_no) + ": expected " +
                            std::to_string(want) + " fields, got " +
                            std::to_string(fields.size()));
        probs.push_back(parse_double(fields[0], line_no));
        std::vector<double> row(dim);
        for (std::size_t i = 0; i < dim; ++i) row[i] = parse_double(fields[1 + i], line_no);
        outcomes.push_back(std::move(row));
        if (expect_label) labels.emplace_back(fields.back());
    }
    if (!header_seen)
        throw Error(ErrorKind::EmptyInput, "no header row found");
    if (outcomes.empty())
        throw Error(ErrorKind::EmptyInput, "no scenario rows found");
    return ScenarioSet(dim, std::move(outcomes), std::move(probs), std::move(labels));
}

ScenarioSet parse_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("scenarios"))
        throw Error(ErrorKind::ParseError, "expected object with 'dim' and 'scenarios'");
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::uint64_t>() == 0)
        throw Error(ErrorKind::ParseError, "'dim' must be a positive integer");
    if (!doc["scenarios"].is_array())
        throw Error(ErrorKind::ParseError, "'scenarios' must be an array");
    std::size_t dim = doc["dim"].get<std::size_t>();

    std::vector<std::vector<double>> outcomes;
    std::vector<double> probs;
    std::vector<std::string> labels;
    std::size_t labelled = 0;
    for (const auto& sc : doc["scenarios"]) {
        if (!sc.is_object() || !sc.contains("prob") || !sc.contains("x") ||
            !sc["prob"].is_number() || !sc["x"].is_array())
            throw Error(ErrorKind::ParseError,
                        "each scenario needs a numeric 'prob' and an array 'x'");
        if (sc["x"].size() != dim)
            throw Error(ErrorKind::DimensionMismatch,
                        "scenario outcome has " + std::to_string(sc["x"].size()) +
                            " components, expected " + std::to_string(dim));
        std::vector<double> row(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!sc["x"][i].is_number())
                throw Error(ErrorKind::ParseError, "outcome components must be numbers");
            row[i] = sc["x"][i].get<double>();
        }
        outcomes.push_back(std::move(row));
        probs.push_back(sc["prob"].get<double>());
        if (sc.contains("label")) {
            if (!sc["label"].is_string())
                throw Error(ErrorKind::ParseError, "'label' must be a string");
            labels.push_back(sc["label"].get<std::string>());
            ++labelled;
        }
    }
    if (outcomes.empty())
        throw Error(ErrorKind::EmptyInput, "scenario list is empty");
    if (labelled != 0 && labelled != outcomes.size())
        throw Error(ErrorKind::ParseError, "labels must be present on every scenario or none");
    return ScenarioSet(dim, std::move(outcomes), std::move(probs), std::move(labels));
}

void require_finite(const std::vector<double>& flat) {
    for (double v : flat)
        if (!std::isfinite(v))
            throw Error(ErrorKind::ParseError, "non-finite outcome component");
}

} // namespace

ScenarioSet::ScenarioSet(std::size_t dim, std::vector<std::vector<double>> outcomes,
                         std::vector<double> probs, std::vector<std::string> labels)
    : dim_(dim) {
    if (dim_ == 0) throw Error(ErrorKind::EmptyInput, "dimension must be at least 1");
    if (outcomes.empty()) throw Error(ErrorKind::EmptyInput, "at least one scenario required");
    if (outcomes.size() != probs.size())
        throw Error(ErrorKind::DimensionMismatch, "outcome and probability counts differ");
    if (!labels.empty() && labels.size() != outcomes.size())
        throw Error(ErrorKind::DimensionMismatch, "label count differs from scenario count");

    flat_.reserve(outcomes.size() * dim_);
    for (const auto& row : outcomes) {
        if (row.size() != dim_)
            throw Error(ErrorKind::DimensionMismatch,
                        "outcome has " + std::to_string(row.size()) +
                            " components, expected " + std::to_string(dim_));
        flat_.insert(flat_.end(), row.begin(), row.end());
    }
    require_finite(flat_);

    double sum = 0.0;
    for (double q : probs) {
        if (!std::isfinite(q) || q <= 0.0)
            throw Error(ErrorKind::InvalidProbability, "probabilities must be finite and > 0");
        sum += q;
    }
    double dev = std::abs(sum - 1.0);
    if (dev > kRenormTolerance)
        throw Error(ErrorKind::InvalidProbability,
                    "probabilities sum to " + std::to_string(sum) + ", expected 1");
    if (dev > kRenormDeadBand)
        for (double& q : probs) q /= sum;
    probs_ = std::move(probs);
    labels_ = std::move(labels);
}

ScenarioSet::ScenarioSet(raw_tag, std::size_t dim, std::vector<double> flat,
                         std::vector<double> probs, std::vector<std::string> labels)
    : dim_(dim), flat_(std::move(flat)), probs_(std::move(probs)), labels_(std::move(labels)) {
    require_finite(flat_);
}

ScenarioSet load_scenarios(std::istream& source, InputFormat format) {
    return format == InputFormat::csv ? parse_csv(source) : parse_json(source);
}

ScenarioSet load_scenarios(const std::string& text, InputFormat format) {
    std::istringstream in(text);
    return load_scenarios(in, format);
}

ScenarioSet load_scenarios_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open input file: " + path);
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return load_scenarios(in, ext == "json" ? InputFormat::json : InputFormat::csv);
}

std::string emit_json(const ScenarioSet& set) {
    nlohmann::ordered_json doc;
    doc["dim"] = set.dim();
    auto scenarios = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < set.size(); ++s) {
        nlohmann::ordered_json sc;
        sc["prob"] = set.prob(s);
        sc["x"] = set.outcome_vector(s);
        if (set.has_labels()) sc["label"] = set.labels()[s];
        scenarios.push_back(std::move(sc));
    }
    doc["scenarios"] = std::move(scenarios);
    return doc.dump(2) + "\n";
}

ScenarioSet sum_scenarios(const ScenarioSet& a, const ScenarioSet& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::SpaceMismatch, "scenario counts differ");
    if (a.dim() != b.dim())
        throw Error(ErrorKind::SpaceMismatch, "dimensions differ");
    for (std::size_t s = 0; s < a.size(); ++s)
        if (std::abs(a.prob(s) - b.prob(s)) > 1e-12)
            throw Error(ErrorKind::SpaceMismatch,
                        "probability vectors differ at scenario " + std::to_string(s));
    std::vector<double> flat(a.flat_.size());
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = a.flat_[i] + b.flat_[i];
    return ScenarioSet(ScenarioSet::raw_tag{}, a.dim(), std::move(flat), a.probs(), a.labels());
}

ScenarioSet scale_scenarios(const ScenarioSet& a, double k) {
    if (!(k >= 0.0))
        throw Error(ErrorKind::NegativeScale, "scale factor must be nonnegative");
    std::vector<double> flat(a.flat_.size());
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = k * a.flat_[i];
    return ScenarioSet(ScenarioSet::raw_tag{}, a.dim(), std::move(flat), a.probs(), a.labels());
}

ScenarioSet translate_scenarios(const ScenarioSet& a, const std::vector<double>& shift) {
    if (shift.size() != a.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "shift has " + std::to_string(shift.size()) + " components, expected " +
                        std::to_string(a.dim()));
    for (double v : shift)
        if (!std::isfinite(v))
            throw Error(ErrorKind::ParseError, "non-finite shift component");
    std::vector<double> flat(a.flat_.size());
    for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t i = 0; i < a.dim(); ++i)
            flat[s * a.dim() + i] = a.flat_[s * a.dim() + i] + shift[i];
    return ScenarioSet(ScenarioSet::raw_tag{}, a.dim(), std::move(flat), a.probs(), a.labels());
}

} // namespace mcvar
