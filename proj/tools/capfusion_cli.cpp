#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "capfusion/builders.hpp"
#include "capfusion/cap.hpp"
#include "capfusion/chief.hpp"
#include "capfusion/corpus.hpp"
#include "capfusion/errors.hpp"
#include "capfusion/fusion.hpp"
#include "capfusion/verify.hpp"

namespace {

using namespace capf;

std::string flag_str(bool b) { return b ? "true" : "false"; }

void run_info(const std::string& group_arg, const Config& cfg, std::ostream& os) {
    GroupSpec spec = parse_group_arg(group_arg, cfg.order_cap);
    auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
    const FiniteGroup& g = ctx->group;
    const SubgroupLattice& lat = ctx->lat;

    os << "GROUP " << g.name() << " order=" << g.order() << "\n";
    int normal_count = 0;
    for (char n : lat.normal) normal_count += n;
    os << "SUBGROUPS total=" << lat.all.size() << " normal=" << normal_count << "\n";
    for (int i = 0; i < static_cast<int>(lat.all.size()); ++i)
        if (lat.normal[i]) os << "NORMAL " << lat.addr(i) << "\n";

    // first chief series by walking the normal poset; full enumeration may
    // exceed the series cap, which only affects the count annotation
    {
        os << "SERIES orders=";
        int cur = lat.trivial_idx;
        os << lat.all[cur].order();
        while (cur != lat.whole_idx) {
            const auto& normals = ctx->normals_in(lat.whole_idx);
            const auto& succ = ctx->poset_succ(lat.whole_idx);
            size_t pos = std::lower_bound(normals.begin(), normals.end(), cur) - normals.begin();
            cur = succ[pos].front();
            os << "," << lat.all[cur].order();
        }
        std::string count;
        try {
            count = std::to_string(all_chief_series(*ctx).size());
        } catch (const SeriesExplosion&) {
            count = ">cap";
        }
        os << " count=" << count << "\n";
    }
    for (const ChiefFactor& f : all_chief_factors(*ctx)) {
        os << "CHIEF " << lat.all[f.lower].order() << " < " << lat.all[f.upper].order()
           << " order=" << f.order << " pd=";
        bool first = true;
        for (int p : g.primes()) {
            if (f.order % p != 0) continue;
            if (!first) os << ",";
            os << p;
            first = false;
        }
        os << "\n";
    }

    const GroupClassFlags& flags = ctx->class_flags();
    os << "CLASS solvable=" << flag_str(flags.solvable)
       << " supersolvable=" << flag_str(flags.supersolvable)
       << " nilpotent=" << flag_str(flags.nilpotent) << "\n";
    for (int p : g.primes()) {
        os << "CLASS p=" << p << " p_solvable=" << flag_str(flags.p_solvable.at(p))
           << " p_supersolvable=" << flag_str(flags.p_supersolvable.at(p))
           << " p_nilpotent=" << flag_str(flags.p_nilpotent.at(p)) << "\n";
        os << "SYLOW p=" << p << " " << lat.addr(ctx->sylow(p)) << "\n";
    }

    CharacteristicSubgroups cs = core_subgroups(lat);
    os << "CENTER order=" << center(g).order() << "\n";
    os << "FRATTINI order=" << cs.frattini.order() << "\n";
    os << "FITTING order=" << cs.fitting.order() << "\n";
    os << "GENFITTING order=" << cs.gen_fitting.order() << "\n";
    os << "UHYPERCENTRE order=" << flags.u_hypercentre.order() << "\n";
    os << "ZINF order=" << cs.hypercentre_nilpotent.order() << "\n";
}

// --subgroup order:<n>,index:<k> or gens:<cycles|matrix rows separated by ';'>
int resolve_subgroup(GroupCtx& ctx, const std::string& arg) {
    if (arg.rfind("order:", 0) == 0) {
        size_t comma = arg.find(",index:");
        if (comma == std::string::npos)
            throw UsageError("--subgroup order:<n>,index:<k> expected");
        int order = std::stoi(arg.substr(6, comma - 6));
        int rank = std::stoi(arg.substr(comma + 7));
        int idx = ctx.lat.by_addr(order, rank);
        if (idx < 0)
            throw UsageError("no subgroup of order " + std::to_string(order) + " with index " +
                             std::to_string(rank));
        return idx;
    }
    if (arg.rfind("gens:", 0) == 0) {
        std::string body = arg.substr(5);
        std::vector<int> gens;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ';')) {
            if (tok.empty()) continue;
            Element e;
            if (ctx.group.element(0).is_perm()) {
                e = parse_cycles(tok, static_cast<int>(ctx.group.element(0).perm.size()));
            } else {
                std::array<int, 4> m{};
                std::istringstream ms(tok);
                if (!(ms >> m[0] >> m[1] >> m[2] >> m[3]))
                    throw UsageError("matrix generator must hold 4 integers: " + tok);
                e = make_mat(m, ctx.group.element(0).q);
            }
            auto idx = ctx.group.index_of(e);
            if (!idx) throw UsageError("generator not an element of the group: " + tok);
            gens.push_back(*idx);
        }
        Subgroup s = subgroup_generated(ctx.group, gens);
        int idx = ctx.lat.index_of(s);
        if (idx < 0) throw Error("generated subgroup missing from lattice");
        return idx;
    }
    throw UsageError("--subgroup expects order:<n>,index:<k> or gens:<...>");
}

CapVariant parse_variant(const std::string& text, int& p) {
    if (text == "cap") return CapVariant::Cap;
    if (text == "partial") return CapVariant::PartialCap;
    if (text == "strong-cap") return CapVariant::StrongCap;
    if (text.rfind("pcap:", 0) == 0) {
        p = std::stoi(text.substr(5));
        return CapVariant::PCap;
    }
    if (text.rfind("strong-pcap:", 0) == 0) {
        p = std::stoi(text.substr(12));
        return CapVariant::StrongPCap;
    }
    throw UsageError("--variant must be cap|partial|pcap:<p>|strong-cap|strong-pcap:<p>");
}

void run_cap(const std::string& group_arg, const std::string& subgroup_arg,
             const std::string& variant_arg, const Config& cfg, std::ostream& os) {
    GroupSpec spec = parse_group_arg(group_arg, cfg.order_cap);
    auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
    int subject = resolve_subgroup(*ctx, subgroup_arg);
    int p = 0;
    CapVariant v = parse_variant(variant_arg, p);
    CapReport rep = run_variant(*ctx, v, subject, p);
    os << "VERDICT " << (rep.holds ? "true" : "false") << "\n";
    if (rep.failure) {
        os << "WITNESS overgroup=" << ctx->lat.addr(rep.failure->overgroup) << " factor="
           << ctx->lat.all[rep.failure->lower].order() << "-"
           << ctx->lat.all[rep.failure->upper].order() << "\n";
    }
    if (rep.series) {
        os << "WITNESS series=";
        for (size_t i = 0; i < rep.series->size(); ++i) {
            if (i) os << ",";
            os << ctx->lat.all[(*rep.series)[i]].order();
        }
        os << "\n";
    }
}

void run_fusion(const std::string& group_arg, int p, bool show_sc, bool show_ess, bool show_chain,
                const Config& cfg, std::ostream& os) {
    GroupSpec spec = parse_group_arg(group_arg, cfg.order_cap);
    auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
    if (ctx->group.order() % p != 0) throw UsageError("p must divide |G|");
    FusionSystem fs = fusion_system(*ctx, p);
    os << "FUSION group=" << ctx->group.name() << " p=" << p
       << " sylow=" << ctx->lat.addr(fs.sylow_idx) << "\n";
    if (show_sc)
        for (int idx : strongly_closed_subgroups(fs))
            os << "SC order=" << ctx->lat.all[idx].order() << " index=" << ctx->lat.order_rank[idx]
               << "\n";
    if (show_ess)
        for (int idx : essential_star_set(fs))
            os << "ESSENTIAL order=" << ctx->lat.all[idx].order()
               << " index=" << ctx->lat.order_rank[idx] << "\n";
    FusionChainResult r = is_supersolvable_fusion(fs);
    os << "SUPERSOLVABLE " << (r.supersolvable ? "true" : "false") << "\n";
    if (show_chain && r.supersolvable) {
        os << "CHAIN ";
        for (size_t i = 0; i < r.chain.size(); ++i) {
            if (i) os << ",";
            os << ctx->lat.all[r.chain[i]].order();
        }
        os << "\n";
    }
}

int run_verify(const std::string& which, int corpus_max, const Config& cfg, std::ostream& os) {
    std::vector<TheoremSpec> theorems;
    if (which == "all")
        theorems = registry();
    else
        theorems.push_back(theorem_by_id(which));
    Corpus corpus = generate_corpus(corpus_max, cfg);
    VerifyResult result = verify(theorems, corpus, cfg);
    write_report(os, result, cfg.format);
    return result.any_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group cover-avoid / fusion-system engine"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    Config cfg;
    try {
        cfg = Config::from_env();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::string format_flag;
    app.add_option("--format", format_flag, "output format: text|json-lines");
    app.add_option("--order-cap", cfg.order_cap, "max group order during closure");
    app.add_option("--lattice-cap", cfg.lattice_cap, "max group order for lattice enumeration");
    app.add_option("--series-cap", cfg.series_cap, "max number of chief series");
    app.add_option("--workers", cfg.workers, "verifier worker count (0 = auto)");

    auto* info = app.add_subcommand("info", "group structure report");
    std::string info_group;
    info->add_option("group", info_group, "builtin spec or definition file")->required();

    auto* cap = app.add_subcommand("cap", "cover-avoid predicates");
    std::string cap_group, cap_subgroup, cap_variant;
    cap->add_option("--group", cap_group)->required();
    cap->add_option("--subgroup", cap_subgroup, "order:<n>,index:<k> or gens:<g1;g2;...>")
        ->required();
    cap->add_option("--variant", cap_variant, "cap|partial|pcap:<p>|strong-cap|strong-pcap:<p>")
        ->required();

    auto* fusion = app.add_subcommand("fusion", "fusion system queries");
    std::string fusion_group;
    int fusion_p = 0;
    bool fusion_sc = false, fusion_ess = false, fusion_chain = false;
    fusion->add_option("--group", fusion_group)->required();
    fusion->add_option("-p", fusion_p, "prime")->required();
    fusion->add_flag("--strongly-closed", fusion_sc);
    fusion->add_flag("--essentials", fusion_ess);
    fusion->add_flag("--chain", fusion_chain);

    auto* verify_cmd = app.add_subcommand("verify", "run theorem verifiers over the corpus");
    std::string verify_which;
    int corpus_max = 60;
    verify_cmd->add_option("theorem", verify_which, "theorem id or 'all'")->required();
    verify_cmd->add_option("--corpus-max-order", corpus_max);

    auto* corpus_cmd = app.add_subcommand("corpus", "corpus utilities");
    std::string corpus_action;
    corpus_cmd->add_option("action", corpus_action, "'list'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!format_flag.empty()) cfg.format = parse_format(format_flag);
        if (*info) run_info(info_group, cfg, std::cout);
        if (*cap) run_cap(cap_group, cap_subgroup, cap_variant, cfg, std::cout);
        if (*fusion) run_fusion(fusion_group, fusion_p, fusion_sc, fusion_ess, fusion_chain, cfg,
                                std::cout);
        if (*verify_cmd) return run_verify(verify_which, corpus_max, cfg, std::cout);
        if (*corpus_cmd) {
            if (corpus_action != "list") throw UsageError("corpus supports: list");
            std::cout << builtin_grammar_help();
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ClosureExceedsCap& e) {
        std::cerr << "cap error: " << e.what() << "\n";
        return 2;
    } catch (const LatticeExceedsCap& e) {
        std::cerr << "cap error: " << e.what() << "\n";
        return 2;
    } catch (const SeriesExplosion& e) {
        std::cerr << "cap error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
