#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "capfusion/cap.hpp"
#include "capfusion/chief.hpp"
#include "capfusion/corpus.hpp"
#include "capfusion/fusion.hpp"

namespace capf {

// Quantified parameters of one theorem instance. Unused fields stay at
// their defaults; P/H are lattice indices.
struct Binding {
    int p = 0;
    int d = 0;
    int P = -1;
    int H = -1;
    std::string str(const GroupCtx& ctx) const;
};

struct TheoremSpec {
    std::string id;
    std::string statement;  // one-line summary for reports
    std::function<std::vector<Binding>(GroupCtx&)> bindings;
    std::function<bool(GroupCtx&, const Binding&)> hypothesis;
    std::function<bool(GroupCtx&, const Binding&)> conclusion;
    std::function<std::string(GroupCtx&, const Binding&)> note;  // optional extra, may be null
};

const std::vector<TheoremSpec>& registry();
const TheoremSpec& theorem_by_id(const std::string& id);

struct TheoremVerdict {
    std::string theorem_id;
    std::string group_name;
    std::string params;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    long elapsed_ms = 0;
    std::string witness;  // optional notes; violation detail when hyp && !concl
    bool skipped = false;
    std::string skip_reason;
};

struct TheoremSummary {
    std::string theorem_id;
    long rows = 0;
    long hyp_true = 0;
    long violations = 0;
    long skips = 0;
};

struct VerifyResult {
    std::vector<TheoremVerdict> rows;        // canonical order: corpus x registry x binding
    std::vector<TheoremSummary> summaries;   // registry order
    bool any_violation = false;
};

// Evaluates the given theorems over the corpus; corpus rows are independent
// work items spread over cfg.effective_workers() threads, each worker owning
// its group's lattice and caches. Output order does not depend on the worker
// count. Rows whose group exceeds a cap come back as skipped verdicts.
VerifyResult verify(const std::vector<TheoremSpec>& theorems, const Corpus& corpus,
                    const Config& cfg);

void write_report(std::ostream& os, const VerifyResult& result, OutputFormat format);

}  // namespace capf
