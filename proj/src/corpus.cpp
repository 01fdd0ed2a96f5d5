#include "capfusion/corpus.hpp"

#include <map>
#include <set>
#include <sstream>

#include "capfusion/errors.hpp"
#include "capfusion/group.hpp"

namespace capf {

namespace {

std::string order_histogram(const FiniteGroup& g) {
    std::map<int, int> hist;
    for (int x = 0; x < g.order(); ++x) ++hist[g.element_order(x)];
    std::ostringstream os;
    for (auto [ord, cnt] : hist) os << ord << ":" << cnt << ",";
    return os.str();
}

}  // namespace

std::string fingerprint(const FiniteGroup& g) {
    Subgroup whole = whole_group(g);
    Subgroup comm = commutator_subgroup(whole);
    QuotientGroup ab = quotient(g, comm);
    std::ostringstream os;
    os << g.order() << "|" << order_histogram(g) << "|" << order_histogram(ab.group);
    return os.str();
}

Corpus generate_corpus(int max_order, const Config& cfg) {
    std::vector<std::string> names;

    for (int n = 1; n <= std::min(max_order, 30); ++n) names.push_back("C" + std::to_string(n));
    for (int n : {32, 36, 40, 48, 60, 64, 100, 120})
        if (n <= max_order) names.push_back("C" + std::to_string(n));

    for (const char* s : {"C2 x C2", "C2 x C4", "C2 x C6", "C2 x C2 x C2", "C2 x C8",
                          "C4 x C4", "C2 x C2 x C4", "C2 x C2 x C2 x C2", "C3 x C3",
                          "C2 x C10", "C2 x C12", "C3 x C9", "C3 x C3 x C3", "C5 x C5",
                          "C2 x C2 x C6", "C4 x C8", "C6 x C6", "C2 x C2 x C2 x C3",
                          "C2 x C4 x C4", "C7 x C7", "C2 x C2 x C5"})
        names.push_back(s);

    for (int n : {6, 8, 10, 12, 14, 16, 18, 20, 24, 28, 30, 32, 36, 40, 48, 60, 64})
        if (n <= max_order) names.push_back("D" + std::to_string(n));

    names.push_back("Q8");
    for (const char* s : {"S3", "S4", "S5", "A4", "A5", "SL(2,3)", "SL(2,5)", "GL(2,3)"})
        names.push_back(s);

    for (const char* s : {"C3:C2", "C5:C2", "C5:C4", "C7:C2", "C7:C3", "C7:C6", "C11:C2",
                          "C11:C5", "C11:C10", "C13:C3", "C13:C4", "C13:C6", "C19:C3"})
        names.push_back(s);

    for (const char* s :
         {"S3 x C2", "S3 x C3", "S3 x C4", "S3 x C5", "S3 x S3", "A4 x C2", "A4 x C3",
          "A4 x C5", "D8 x C2", "D8 x C3", "D8 x C5", "D8 x C7", "Q8 x C2", "Q8 x C3",
          "Q8 x C5", "D10 x C3", "D12 x C3", "S4 x C2", "S4 x C3", "SL(2,3) x C2",
          "D8 x D8", "Q8 x Q8", "C5:C4 x C2", "A4 x C2 x C2", "D8 x C3 x C3"})
        names.push_back(s);

    Corpus corpus;
    corpus.max_order = max_order;
    std::set<std::string> seen;
    for (const auto& name : names) {
        GroupSpec spec;
        try {
            spec = parse_builtin(name, cfg.order_cap);
        } catch (const Error&) {
            continue;
        }
        FiniteGroup g = build_group(spec, cfg.order_cap);
        if (g.order() > max_order) continue;
        if (!seen.insert(fingerprint(g)).second) continue;
        corpus.entries.push_back(std::move(spec));
    }
    return corpus;
}

}  // namespace capf
