#include "capfusion/verify.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "capfusion/errors.hpp"

namespace capf {

std::string Binding::str(const GroupCtx& ctx) const {
    std::string out;
    auto add = [&](const std::string& k, const std::string& v) {
        if (!out.empty()) out += ",";
        out += k + "=" + v;
    };
    if (p > 0) add("p", std::to_string(p));
    if (d > 0) add("d", std::to_string(d));
    if (P >= 0) add("P", ctx.lat.addr(P));
    if (H >= 0) add("H", ctx.lat.addr(H));
    return out;
}

namespace {

bool prime_power_order(int n, int p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<int> of_order_within(GroupCtx& ctx, int ambient_idx, int d, bool cyclic_only) {
    std::vector<int> out;
    for (int j : ctx.lat.subgroups_within(ambient_idx)) {
        if (ctx.lat.all[j].order() != d) continue;
        if (cyclic_only && !is_cyclic(ctx.lat.all[j])) continue;
        out.push_back(j);
    }
    return out;
}

bool all_hold(GroupCtx& ctx, const std::vector<int>& subjects, CapVariant v, int p) {
    for (int s : subjects)
        if (!run_variant(ctx, v, s, p).holds) return false;
    return true;
}

// strong q-CAP for every prime divisor q of |G|
bool all_strong_qcap_every_prime(GroupCtx& ctx, const std::vector<int>& subjects) {
    for (int q : ctx.group.primes())
        if (!all_hold(ctx, subjects, CapVariant::StrongPCap, q)) return false;
    return true;
}

std::vector<Binding> per_prime(GroupCtx& ctx) {
    std::vector<Binding> out;
    for (int p : ctx.group.primes()) {
        Binding b;
        b.p = p;
        out.push_back(b);
    }
    return out;
}

// (p, d) with d = p^k, 1 <= k < n, where |S| = p^n. No admissible d, no row.
std::vector<Binding> per_prime_and_d(GroupCtx& ctx) {
    std::vector<Binding> out;
    for (int p : ctx.group.primes()) {
        int s_order = ctx.lat.all[ctx.sylow(p)].order();
        for (int d = p; d < s_order; d *= p) {
            Binding b;
            b.p = p;
            b.d = d;
            out.push_back(b);
        }
    }
    return out;
}

std::vector<Binding> per_normal_p_subgroup(GroupCtx& ctx, bool include_trivial, int min_exp) {
    std::vector<Binding> out;
    for (int p : ctx.group.primes()) {
        for (int i : ctx.normals_in(ctx.lat.whole_idx)) {
            int n = ctx.lat.all[i].order();
            if (!prime_power_order(n, p)) continue;
            if (n == 1 && !include_trivial) continue;
            int pk = 1, k = 0;
            while (pk < n) {
                pk *= p;
                ++k;
            }
            if (k < min_exp) continue;
            Binding b;
            b.p = p;
            b.P = i;
            out.push_back(b);
        }
    }
    return out;
}

bool fusion_supersolvable(GroupCtx& ctx, int p) {
    FusionSystem fs = fusion_system(ctx, p);
    return is_supersolvable_fusion(fs).supersolvable;
}

// Hypothesis bodies shared between theorems and their p-nilpotency
// corollaries.

bool hyp_t15_partial_cap(GroupCtx& ctx, const Binding& b, CapVariant v) {
    int s_idx = ctx.sylow(b.p);
    const Subgroup& s = ctx.lat.all[s_idx];
    if (s.order() <= b.p) return false;
    for (int m : maximal_subgroups_of(ctx.lat, s_idx))
        if (!run_variant(ctx, v, m, 0).holds) return false;
    if (b.p == 2 && !is_abelian(s)) {
        std::vector<int> c4 = of_order_within(ctx, ctx.lat.whole_idx, 4, true);
        for (int c : c4)
            if (!run_variant(ctx, v, c, 0).holds) return false;
    }
    return true;
}

bool hyp_t35_strong_qcap(GroupCtx& ctx, const Binding& b) {
    int s_idx = ctx.sylow(b.p);
    const Subgroup& s = ctx.lat.all[s_idx];
    if (s.order() <= b.p) return false;
    std::vector<int> subjects = maximal_subgroups_of(ctx.lat, s_idx);
    if (b.p == 2 && !is_abelian(s)) {
        std::vector<int> c4 = of_order_within(ctx, ctx.lat.whole_idx, 4, true);
        subjects.insert(subjects.end(), c4.begin(), c4.end());
    }
    return all_strong_qcap_every_prime(ctx, subjects);
}

// T-1.7 shape: every subgroup of S of order d (plus the order-4 clause when
// S non-abelian and d = p = 2) satisfies `check`.
bool hyp_order_d_in_sylow(GroupCtx& ctx, const Binding& b,
                          const std::function<bool(GroupCtx&, const std::vector<int>&)>& check) {
    int s_idx = ctx.sylow(b.p);
    std::vector<int> subjects = of_order_within(ctx, s_idx, b.d, false);
    if (!is_abelian(ctx.lat.all[s_idx]) && b.d == 2 && b.p == 2) {
        std::vector<int> c4 = of_order_within(ctx, s_idx, 4, true);
        subjects.insert(subjects.end(), c4.begin(), c4.end());
    }
    return check(ctx, subjects);
}

// T-1.8 / C-4.7 hypothesis.
bool hyp_main_theorem(GroupCtx& ctx, const Binding& b) {
    int s_idx = ctx.sylow(b.p);
    const Subgroup& s = ctx.lat.all[s_idx];
    std::vector<int> subjects = of_order_within(ctx, s_idx, b.d, false);
    if (!all_hold(ctx, subjects, CapVariant::StrongPCap, b.p)) return false;
    if (b.p == 2) {
        if (!exponent_at_most(s, 2)) return false;
        if (!is_abelian(s) && s.order() / 2 > b.d && b.d == 2) {
            std::vector<int> c4 = of_order_within(ctx, s_idx, 4, true);
            if (!all_hold(ctx, c4, CapVariant::StrongPCap, 2)) return false;
        }
    }
    return true;
}

// T-3.1 / T-4.1 / C-4.2 hypothesis; scope is the whole group or S.
bool hyp_cyclic_p_or_4(GroupCtx& ctx, const Binding& b, bool within_sylow) {
    int ambient = within_sylow ? ctx.sylow(b.p) : ctx.lat.whole_idx;
    std::vector<int> subjects = of_order_within(ctx, ambient, b.p, true);
    if (b.p == 2) {
        std::vector<int> c4 = of_order_within(ctx, ambient, 4, true);
        subjects.insert(subjects.end(), c4.begin(), c4.end());
    }
    return all_hold(ctx, subjects, CapVariant::StrongPCap, b.p);
}

// T-2.3 hypothesis: every cyclic subgroup of P of prime order or order 4.
bool hyp_cyclic_in_P(GroupCtx& ctx, const Binding& b) {
    std::vector<int> subjects;
    for (int j : ctx.lat.subgroups_within(b.P)) {
        int n = ctx.lat.all[j].order();
        bool prime = n >= 2 && [&] {
            for (int t = 2; t * t <= n; ++t)
                if (n % t == 0) return false;
            return true;
        }();
        if (!prime && n != 4) continue;
        if (!is_cyclic(ctx.lat.all[j])) continue;
        subjects.push_back(j);
    }
    return all_hold(ctx, subjects, CapVariant::StrongPCap, b.p);
}

// T-2.4 hypothesis for one (P, d).
bool hyp_order_d_in_P(GroupCtx& ctx, const Binding& b) {
    const Subgroup& P = ctx.lat.all[b.P];
    std::vector<int> subjects = of_order_within(ctx, b.P, b.d, false);
    if (!all_hold(ctx, subjects, CapVariant::StrongPCap, b.p)) return false;
    if (b.p == 2) {
        if (!exponent_at_most(P, 2)) return false;
        if (b.d == 2 && 2 * b.d < P.order() && !is_abelian(P)) {
            std::vector<int> c4 = of_order_within(ctx, b.P, 4, true);
            if (!all_hold(ctx, c4, CapVariant::StrongPCap, 2)) return false;
        }
    }
    return true;
}

bool conclusion_in_u_hypercentre(GroupCtx& ctx, const Binding& b) {
    return ctx.lat.all[b.P].mask.subset_of(ctx.class_flags().u_hypercentre.mask);
}

Subgroup nilpotent_hypercentre(GroupCtx& ctx) {
    const FiniteGroup& g = ctx.group;
    Bitset cur(g.order());
    cur.set(FiniteGroup::kIdentity);
    while (true) {
        std::vector<int> next;
        for (int x = 0; x < g.order(); ++x) {
            bool in = true;
            for (int y = 0; y < g.order(); ++y)
                if (!cur.test(g.comm(x, y))) {
                    in = false;
                    break;
                }
            if (in) next.push_back(x);
        }
        Subgroup zn = subgroup_from_members(g, next);
        if (zn.mask == cur || zn.order() == g.order()) return zn;
        cur = zn.mask;
    }
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

}  // namespace

const std::vector<TheoremSpec>& registry() {
    static const std::vector<TheoremSpec> specs = [] {
        std::vector<TheoremSpec> r;

        r.push_back({"T-1.5",
                     "maximal subgroups of S partial CAP (+C4 clause) => G p-supersolvable",
                     per_prime,
                     [](GroupCtx& ctx, const Binding& b) {
                         return hyp_t15_partial_cap(ctx, b, CapVariant::PartialCap);
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_supersolvable.at(b.p);
                     },
                     [](GroupCtx& ctx, const Binding&) -> std::string {
                         return std::string("supersolvable=") +
                                (ctx.class_flags().supersolvable ? "t" : "f");
                     }});

        r.push_back({"T-1.7",
                     "subgroups of S of order d strong CAP (+C4 clause) => F_S(G) supersolvable",
                     per_prime_and_d,
                     [](GroupCtx& ctx, const Binding& b) {
                         return hyp_order_d_in_sylow(
                             ctx, b, [](GroupCtx& c, const std::vector<int>& subjects) {
                                 return all_hold(c, subjects, CapVariant::StrongCap, 0);
                             });
                     },
                     [](GroupCtx& ctx, const Binding& b) { return fusion_supersolvable(ctx, b.p); },
                     nullptr});

        r.push_back({"T-1.8",
                     "subgroups of S of order d strong p-CAP (+p=2 clauses) => F_S(G) supersolvable",
                     per_prime_and_d, hyp_main_theorem,
                     [](GroupCtx& ctx, const Binding& b) { return fusion_supersolvable(ctx, b.p); },
                     nullptr});

        r.push_back({"T-2.3",
                     "cyclic subgroups of normal p-subgroup P of prime order or 4 strong p-CAP "
                     "=> P <= Z_U(G)",
                     [](GroupCtx& ctx) { return per_normal_p_subgroup(ctx, true, 0); },
                     hyp_cyclic_in_P, conclusion_in_u_hypercentre, nullptr});

        r.push_back({"T-2.4",
                     "subgroups of normal p-subgroup P of order d strong p-CAP (+p=2 clauses) "
                     "=> P <= Z_U(G)",
                     [](GroupCtx& ctx) {
                         std::vector<Binding> out;
                         for (Binding base : per_normal_p_subgroup(ctx, false, 2)) {
                             int n = ctx.lat.all[base.P].order();
                             for (int d = base.p; d < n; d *= base.p) {
                                 Binding b = base;
                                 b.d = d;
                                 out.push_back(b);
                             }
                         }
                         return out;
                     },
                     hyp_order_d_in_P, conclusion_in_u_hypercentre, nullptr});

        r.push_back({"C-2.5",
                     "normal 2-subgroup P, both clause sets strong 2-CAP => P <= Z_inf(G)",
                     [](GroupCtx& ctx) {
                         std::vector<Binding> out;
                         for (Binding b : per_normal_p_subgroup(ctx, false, 1))
                             if (b.p == 2) out.push_back(b);
                         return out;
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         // clause (1): cyclic subgroups of order 2 or 4
                         std::vector<int> c2 = of_order_within(ctx, b.P, 2, true);
                         std::vector<int> c4 = of_order_within(ctx, b.P, 4, true);
                         if (!all_hold(ctx, c2, CapVariant::StrongPCap, 2)) return false;
                         if (!all_hold(ctx, c4, CapVariant::StrongPCap, 2)) return false;
                         // clause (2): exp(P) <= 2 plus an order-d layer, 2 < d < |P|
                         const Subgroup& P = ctx.lat.all[b.P];
                         if (!exponent_at_most(P, 2)) return false;
                         for (int d = 4; d < P.order(); d *= 2) {
                             std::vector<int> layer = of_order_within(ctx, b.P, d, false);
                             if (!all_hold(ctx, layer, CapVariant::StrongPCap, 2)) continue;
                             if (2 * d < P.order() && !is_abelian(P) &&
                                 !all_hold(ctx, c4, CapVariant::StrongPCap, 2))
                                 continue;
                             return true;
                         }
                         return false;
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.lat.all[b.P].mask.subset_of(nilpotent_hypercentre(ctx).mask);
                     },
                     nullptr});

        r.push_back({"T-3.1",
                     "cyclic subgroups of G of order p or 4 strong p-CAP => G p-supersolvable",
                     per_prime,
                     [](GroupCtx& ctx, const Binding& b) { return hyp_cyclic_p_or_4(ctx, b, false); },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_supersolvable.at(b.p);
                     },
                     nullptr});

        r.push_back({"T-3.2",
                     "G/H supersolvable, cyclic subgroups of F*(H) of order p or 4 strong p-CAP "
                     "for all p => G supersolvable",
                     [](GroupCtx& ctx) {
                         std::vector<Binding> out;
                         for (int i : ctx.normals_in(ctx.lat.whole_idx)) {
                             Binding b;
                             b.H = i;
                             out.push_back(b);
                         }
                         return out;
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         if (!supersolvable_above(ctx, b.H)) return false;
                         Subgroup fstar = gen_fitting_within(ctx.lat, b.H);
                         int fstar_idx = ctx.lat.index_of(fstar);
                         for (int p : ctx.group.primes()) {
                             std::vector<int> subjects = of_order_within(ctx, fstar_idx, p, true);
                             if (p == 2) {
                                 std::vector<int> c4 = of_order_within(ctx, fstar_idx, 4, true);
                                 subjects.insert(subjects.end(), c4.begin(), c4.end());
                             }
                             if (!all_hold(ctx, subjects, CapVariant::StrongPCap, p)) return false;
                         }
                         return true;
                     },
                     [](GroupCtx& ctx, const Binding&) { return ctx.class_flags().supersolvable; },
                     nullptr});

        r.push_back({"C-3.4",
                     "maximal subgroups of S CAP (+C4 clause) => G p-supersolvable", per_prime,
                     [](GroupCtx& ctx, const Binding& b) {
                         return hyp_t15_partial_cap(ctx, b, CapVariant::Cap);
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_supersolvable.at(b.p);
                     },
                     nullptr});

        r.push_back({"C-3.5",
                     "maximal subgroups of S strong q-CAP for all q (+C4 clause) => G "
                     "p-supersolvable",
                     per_prime, hyp_t35_strong_qcap,
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_supersolvable.at(b.p);
                     },
                     nullptr});

        r.push_back({"T-4.1",
                     "cyclic subgroups of S of order p or 4 strong p-CAP => F_S(G) supersolvable",
                     per_prime,
                     [](GroupCtx& ctx, const Binding& b) { return hyp_cyclic_p_or_4(ctx, b, true); },
                     [](GroupCtx& ctx, const Binding& b) { return fusion_supersolvable(ctx, b.p); },
                     nullptr});

        r.push_back({"C-4.2",
                     "(p-1,|G|)=1, cyclic subgroups of S of order p or 4 strong p-CAP => G "
                     "p-nilpotent",
                     per_prime,
                     [](GroupCtx& ctx, const Binding& b) {
                         return gcd_int(b.p - 1, ctx.group.order()) == 1 &&
                                hyp_cyclic_p_or_4(ctx, b, true);
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_nilpotent.at(b.p);
                     },
                     nullptr});

        r.push_back({"C-4.3",
                     "subgroups of S of order d strong q-CAP for all q (+C4 clause) => F_S(G) "
                     "supersolvable",
                     per_prime_and_d,
                     [](GroupCtx& ctx, const Binding& b) {
                         return hyp_order_d_in_sylow(ctx, b, all_strong_qcap_every_prime);
                     },
                     [](GroupCtx& ctx, const Binding& b) { return fusion_supersolvable(ctx, b.p); },
                     nullptr});

        r.push_back({"C-4.5",
                     "(p-1,|G|)=1, subgroups of S of order d strong CAP (+C4 clause) => G "
                     "p-nilpotent",
                     per_prime_and_d,
                     [](GroupCtx& ctx, const Binding& b) {
                         return gcd_int(b.p - 1, ctx.group.order()) == 1 &&
                                hyp_order_d_in_sylow(
                                    ctx, b, [](GroupCtx& c, const std::vector<int>& subjects) {
                                        return all_hold(c, subjects, CapVariant::StrongCap, 0);
                                    });
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_nilpotent.at(b.p);
                     },
                     nullptr});

        r.push_back({"C-4.6",
                     "(p-1,|G|)=1, subgroups of S of order d strong q-CAP for all q (+C4 clause) "
                     "=> G p-nilpotent",
                     per_prime_and_d,
                     [](GroupCtx& ctx, const Binding& b) {
                         return gcd_int(b.p - 1, ctx.group.order()) == 1 &&
                                hyp_order_d_in_sylow(ctx, b, all_strong_qcap_every_prime);
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_nilpotent.at(b.p);
                     },
                     nullptr});

        r.push_back({"C-4.7",
                     "(p-1,|G|)=1, T-1.8 clauses => G p-nilpotent", per_prime_and_d,
                     [](GroupCtx& ctx, const Binding& b) {
                         return gcd_int(b.p - 1, ctx.group.order()) == 1 && hyp_main_theorem(ctx, b);
                     },
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_nilpotent.at(b.p);
                     },
                     nullptr});

        r.push_back({"R-1.6",
                     "G p-supersolvable => F_S(G) supersolvable", per_prime,
                     [](GroupCtx& ctx, const Binding& b) {
                         return ctx.class_flags().p_supersolvable.at(b.p);
                     },
                     [](GroupCtx& ctx, const Binding& b) { return fusion_supersolvable(ctx, b.p); },
                     nullptr});

        return r;
    }();
    return specs;
}

const TheoremSpec& theorem_by_id(const std::string& id) {
    for (const auto& t : registry())
        if (t.id == id) return t;
    throw UsageError("unknown theorem id: " + id);
}

namespace {

std::vector<TheoremVerdict> run_group(const GroupSpec& spec,
                                      const std::vector<TheoremSpec>& theorems,
                                      const Config& cfg) {
    std::vector<TheoremVerdict> rows;
    std::unique_ptr<GroupCtx> ctx;
    std::string build_error;
    try {
        ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
    } catch (const Error& e) {
        build_error = e.what();
    }
    for (const auto& t : theorems) {
        if (!ctx) {
            TheoremVerdict v;
            v.theorem_id = t.id;
            v.group_name = spec.name;
            v.skipped = true;
            v.skip_reason = build_error;
            rows.push_back(std::move(v));
            continue;
        }
        try {
            for (const Binding& b : t.bindings(*ctx)) {
                TheoremVerdict v;
                v.theorem_id = t.id;
                v.group_name = spec.name;
                v.params = b.str(*ctx);
                auto t0 = std::chrono::steady_clock::now();
                v.hypothesis_holds = t.hypothesis(*ctx, b);
                v.conclusion_holds = t.conclusion(*ctx, b);
                auto t1 = std::chrono::steady_clock::now();
                v.elapsed_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                if (t.note && v.hypothesis_holds) v.witness = t.note(*ctx, b);
                if (v.hypothesis_holds && !v.conclusion_holds) {
                    v.witness = v.witness.empty() ? "VIOLATION" : v.witness + ";VIOLATION";
                }
                rows.push_back(std::move(v));
            }
        } catch (const Error& e) {
            TheoremVerdict v;
            v.theorem_id = t.id;
            v.group_name = spec.name;
            v.skipped = true;
            v.skip_reason = e.what();
            rows.push_back(std::move(v));
        }
    }
    return rows;
}

}  // namespace

VerifyResult verify(const std::vector<TheoremSpec>& theorems, const Corpus& corpus,
                    const Config& cfg) {
    const int workers = std::max(1, std::min<int>(cfg.effective_workers(),
                                                  static_cast<int>(corpus.entries.size())));
    std::vector<std::vector<TheoremVerdict>> per_group(corpus.entries.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= corpus.entries.size()) break;
            per_group[i] = run_group(corpus.entries[i], theorems, cfg);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    VerifyResult result;
    for (auto& rows : per_group)
        for (auto& row : rows) result.rows.push_back(std::move(row));

    for (const auto& t : theorems) {
        TheoremSummary s;
        s.theorem_id = t.id;
        for (const auto& row : result.rows) {
            if (row.theorem_id != t.id) continue;
            if (row.skipped) {
                ++s.skips;
                continue;
            }
            ++s.rows;
            if (row.hypothesis_holds) ++s.hyp_true;
            if (row.hypothesis_holds && !row.conclusion_holds) ++s.violations;
        }
        if (s.violations > 0) result.any_violation = true;
        result.summaries.push_back(std::move(s));
    }
    return result;
}

void write_report(std::ostream& os, const VerifyResult& result, OutputFormat format) {
    if (format == OutputFormat::Text) {
        for (const auto& row : result.rows) {
            if (row.skipped) {
                os << "SKIP theorem=" << row.theorem_id << " group=" << row.group_name
                   << " reason=" << row.skip_reason << "\n";
                continue;
            }
            os << "VERDICT theorem=" << row.theorem_id << " group=" << row.group_name
               << " params=" << row.params << " hyp=" << (row.hypothesis_holds ? "t" : "f")
               << " concl=" << (row.conclusion_holds ? "t" : "f") << " ms=" << row.elapsed_ms;
            if (!row.witness.empty()) os << " note=" << row.witness;
            os << "\n";
        }
        for (const auto& s : result.summaries) {
            os << "SUMMARY theorem=" << s.theorem_id << " rows=" << s.rows
               << " hyp_true=" << s.hyp_true << " violations=" << s.violations;
            if (s.skips > 0) os << " skips=" << s.skips;
            os << "\n";
        }
        return;
    }
    for (const auto& row : result.rows) {
        nlohmann::json j;
        j["type"] = row.skipped ? "skip" : "verdict";
        j["theorem"] = row.theorem_id;
        j["group"] = row.group_name;
        if (row.skipped) {
            j["reason"] = row.skip_reason;
        } else {
            j["params"] = row.params;
            j["hyp"] = row.hypothesis_holds;
            j["concl"] = row.conclusion_holds;
            j["ms"] = row.elapsed_ms;
            if (!row.witness.empty()) j["note"] = row.witness;
        }
        os << j.dump() << "\n";
    }
    for (const auto& s : result.summaries) {
        nlohmann::json j;
        j["type"] = "summary";
        j["theorem"] = s.theorem_id;
        j["rows"] = s.rows;
        j["hyp_true"] = s.hyp_true;
        j["violations"] = s.violations;
        j["skips"] = s.skips;
        os << j.dump() << "\n";
    }
}

}  // namespace capf
