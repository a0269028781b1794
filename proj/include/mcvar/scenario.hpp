#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mcvar/error.hpp"

namespace mcvar {

// Confidence level p in (0,1). Larger p means fewer, more extreme tail
// outcomes (tail mass 1-p). eps is the tolerance used for every probability
// comparison against p.
struct ConfidenceLevel {
    double p;
    double eps = 1e-12;

    ConfidenceLevel(double p_, double eps_ = 1e-12) : p(p_), eps(eps_) {
        if (!(p > 0.0) || !(p < 1.0))
            throw Error(ErrorKind::InvalidLevel, "confidence level must lie in (0,1)");
        if (!(eps > 0.0))
            throw Error(ErrorKind::InvalidLevel, "comparison tolerance must be positive");
    }
};

// A finite discrete distribution of a d-dimensional random vector: n outcome
// vectors with strictly positive probabilities summing to 1. Immutable after
// construction; every operation returns a new set.
class ScenarioSet {
public:
    // Validates invariants and renormalizes probabilities (exact division by
    // the raw sum) when the sum is within 1e-9 of 1; larger deviations are
    // rejected. Outcomes are stored row-major, one row per scenario.
    ScenarioSet(std::size_t dim, std::vector<std::vector<double>> outcomes,
                std::vector<double> probs, std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return probs_.size(); }

    std::span<const double> outcome(std::size_t s) const {
        return {flat_.data() + s * dim_, dim_};
    }
    std::vector<double> outcome_vector(std::size_t s) const {
        auto row = outcome(s);
        return {row.begin(), row.end()};
    }
    double component(std::size_t s, std::size_t i) const { return flat_[s * dim_ + i]; }

    const std::vector<double>& probs() const noexcept { return probs_; }
    double prob(std::size_t s) const { return probs_[s]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }

    bool operator==(const ScenarioSet& other) const = default;

private:
    struct raw_tag {};
    ScenarioSet(raw_tag, std::size_t dim, std::vector<double> flat,
                std::vector<double> probs, std::vector<std::string> labels);

    friend ScenarioSet sum_scenarios(const ScenarioSet&, const ScenarioSet&);
    friend ScenarioSet scale_scenarios(const ScenarioSet&, double);
    friend ScenarioSet translate_scenarios(const ScenarioSet&, const std::vector<double>&);

    std::size_t dim_;
    std::vector<double> flat_; // n*d, row-major
    std::vector<double> probs_;
    std::vector<std::string> labels_;
};

enum class InputFormat { csv, json };

// Reads a scenario file. CSV: header "prob,x1,...,xd[,label]", one scenario
// per row, '#' comment lines skipped. JSON: {"dim": d, "scenarios":
// [{"prob": q, "x": [...], "label": "..."}]}.
ScenarioSet load_scenarios(std::istream& source, InputFormat format);
ScenarioSet load_scenarios(const std::string& text, InputFormat format);
ScenarioSet load_scenarios_file(const std::string& path);

// Canonical JSON writer; load_scenarios(emit_json(S), json) == S exactly.
std::string emit_json(const ScenarioSet& set);

// Comonotone scenario-wise sum on a shared probability space: outcomes
// x^s + y^s, probabilities unchanged. Requires equal n, d and identical
// probability vectors (within 1e-12 per entry).
ScenarioSet sum_scenarios(const ScenarioSet& a, const ScenarioSet& b);

// Outcomes multiplied by k >= 0; probabilities unchanged.
ScenarioSet scale_scenarios(const ScenarioSet& a, double k);

// Shift added to every outcome; probabilities unchanged.
ScenarioSet translate_scenarios(const ScenarioSet& a, const std::vector<double>& shift);

} // namespace mcvar
