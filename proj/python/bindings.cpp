#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "capfusion/builders.hpp"
#include "capfusion/cap.hpp"
#include "capfusion/errors.hpp"
#include "capfusion/chief.hpp"
#include "capfusion/corpus.hpp"
#include "capfusion/fusion.hpp"
#include "capfusion/verify.hpp"

namespace py = pybind11;
using namespace capf;

namespace {

// GroupCtx pinned behind shared_ptr so subgroup handles stay valid.
struct PyGroup {
    std::shared_ptr<GroupCtx> ctx;

    static PyGroup build(const std::string& spec_text) {
        Config cfg = Config::from_env();
        GroupSpec spec = parse_group_arg(spec_text, cfg.order_cap);
        PyGroup g;
        g.ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
        return g;
    }

    int order() const { return ctx->group.order(); }
    std::string name() const { return ctx->group.name(); }
    int element_order(int x) const { return ctx->group.element_order(x); }
    int mul(int a, int b) const { return ctx->group.mul(a, b); }
    int inv(int a) const { return ctx->group.inv(a); }
    size_t subgroup_count() const { return ctx->lat.all.size(); }

    std::vector<std::pair<int, int>> subgroups() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < static_cast<int>(ctx->lat.all.size()); ++i)
            out.emplace_back(ctx->lat.all[i].order(), ctx->lat.order_rank[i]);
        return out;
    }

    std::vector<std::pair<int, int>> chief_factor_orders() {
        std::vector<std::pair<int, int>> out;
        for (const ChiefFactor& f : all_chief_factors(*ctx))
            out.emplace_back(ctx->lat.all[f.lower].order(), ctx->lat.all[f.upper].order());
        return out;
    }

    int center_order() const { return center(ctx->group).order(); }

    bool cap_check(int order, int index, const std::string& variant) {
        int idx = ctx->lat.by_addr(order, index);
        if (idx < 0) throw UsageError("no such subgroup");
        int p = 0;
        CapVariant v;
        if (variant == "cap")
            v = CapVariant::Cap;
        else if (variant == "partial")
            v = CapVariant::PartialCap;
        else if (variant.rfind("pcap:", 0) == 0) {
            v = CapVariant::PCap;
            p = std::stoi(variant.substr(5));
        } else if (variant == "strong-cap")
            v = CapVariant::StrongCap;
        else if (variant.rfind("strong-pcap:", 0) == 0) {
            v = CapVariant::StrongPCap;
            p = std::stoi(variant.substr(12));
        } else
            throw UsageError("unknown variant: " + variant);
        return run_variant(*ctx, v, idx, p).holds;
    }

    bool solvable() { return ctx->class_flags().solvable; }
    bool nilpotent() { return ctx->class_flags().nilpotent; }
    int commutator_order() const { return commutator_subgroup(whole_group(ctx->group)).order(); }
    int sylow_order(int p) { return ctx->lat.all[ctx->sylow(p)].order(); }
    std::map<int, int> element_order_histogram() const {
        std::map<int, int> hist;
        for (int x = 0; x < ctx->group.order(); ++x) ++hist[ctx->group.element_order(x)];
        return hist;
    }

    bool supersolvable() { return ctx->class_flags().supersolvable; }
    bool p_supersolvable(int p) {
        auto& m = ctx->class_flags().p_supersolvable;
        auto it = m.find(p);
        return it == m.end() ? true : it->second;
    }
    bool p_nilpotent(int p) {
        auto& m = ctx->class_flags().p_nilpotent;
        auto it = m.find(p);
        return it == m.end() ? true : it->second;
    }

    bool fusion_supersolvable(int p) {
        FusionSystem fs = fusion_system(*ctx, p);
        return is_supersolvable_fusion(fs).supersolvable;
    }

    std::vector<int> fusion_chain(int p) {
        FusionSystem fs = fusion_system(*ctx, p);
        FusionChainResult r = is_supersolvable_fusion(fs);
        std::vector<int> orders;
        for (int idx : r.chain) orders.push_back(ctx->lat.all[idx].order());
        return orders;
    }

    std::vector<int> strongly_closed_orders(int p) {
        FusionSystem fs = fusion_system(*ctx, p);
        std::vector<int> orders;
        for (int idx : strongly_closed_subgroups(fs)) orders.push_back(ctx->lat.all[idx].order());
        return orders;
    }

    std::vector<int> primes() const { return ctx->group.primes(); }
};

py::dict verdict_dict(const TheoremVerdict& v) {
    py::dict d;
    d["theorem"] = v.theorem_id;
    d["group"] = v.group_name;
    d["params"] = v.params;
    d["hyp"] = v.hypothesis_holds;
    d["concl"] = v.conclusion_holds;
    d["skipped"] = v.skipped;
    return d;
}

}  // namespace

PYBIND11_MODULE(capfusion, m) {
    m.doc() = "finite-group cover-avoid predicates, chief series, and fusion systems";

    py::class_<PyGroup>(m, "Group")
        .def_static("build", &PyGroup::build, py::arg("spec"))
        .def_property_readonly("order", &PyGroup::order)
        .def_property_readonly("name", &PyGroup::name)
        .def("element_order", &PyGroup::element_order)
        .def("mul", &PyGroup::mul)
        .def("inv", &PyGroup::inv)
        .def("subgroup_count", &PyGroup::subgroup_count)
        .def("subgroups", &PyGroup::subgroups)
        .def("chief_factor_orders", &PyGroup::chief_factor_orders)
        .def("center_order", &PyGroup::center_order)
        .def("cap_check", &PyGroup::cap_check, py::arg("order"), py::arg("index"),
             py::arg("variant"))
        .def("solvable", &PyGroup::solvable)
        .def("nilpotent", &PyGroup::nilpotent)
        .def("commutator_order", &PyGroup::commutator_order)
        .def("sylow_order", &PyGroup::sylow_order)
        .def("element_order_histogram", &PyGroup::element_order_histogram)
        .def("supersolvable", &PyGroup::supersolvable)
        .def("p_supersolvable", &PyGroup::p_supersolvable)
        .def("p_nilpotent", &PyGroup::p_nilpotent)
        .def("fusion_supersolvable", &PyGroup::fusion_supersolvable)
        .def("fusion_chain", &PyGroup::fusion_chain)
        .def("strongly_closed_orders", &PyGroup::strongly_closed_orders)
        .def("primes", &PyGroup::primes);

    m.def("corpus_names", [](int max_order) {
        Config cfg = Config::from_env();
        std::vector<std::string> names;
        for (const auto& e : generate_corpus(max_order, cfg).entries) names.push_back(e.name);
        return names;
    });

    m.def("theorem_ids", [] {
        std::vector<std::string> ids;
        for (const auto& t : registry()) ids.push_back(t.id);
        return ids;
    });

    m.def(
        "verify_corpus",
        [](const std::string& which, int max_order) {
            Config cfg = Config::from_env();
            std::vector<TheoremSpec> theorems;
            if (which == "all")
                theorems = registry();
            else
                theorems.push_back(theorem_by_id(which));
            Corpus corpus = generate_corpus(max_order, cfg);
            VerifyResult result = verify(theorems, corpus, cfg);
            py::list rows;
            for (const auto& v : result.rows) rows.append(verdict_dict(v));
            py::dict out;
            out["rows"] = rows;
            out["violations"] = result.any_violation;
            return out;
        },
        py::arg("theorem") = "all", py::arg("max_order") = 24);
}
