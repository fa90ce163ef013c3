#include "permforms/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "context.hpp"
#include "permforms/classify.hpp"
#include "permforms/errors.hpp"
#include "permforms/lattice.hpp"
#include "permforms/perm_ops.hpp"

namespace permforms {

using detail::ElementSet;
using detail::GroupContext;
using detail::SubId;
using detail::SubgroupStore;

const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kVerified: return "VERIFIED";
    case VerifyStatus::kCounterexample: return "COUNTEREXAMPLE";
    case VerifyStatus::kSkippedInF: return "SKIPPED_IN_F";
    case VerifyStatus::kSkippedInsoluble: return "SKIPPED_INSOLUBLE";
    case VerifyStatus::kSkippedFlags: return "SKIPPED_FLAGS";
    case VerifyStatus::kError: return "ERROR";
  }
  return "UNKNOWN";
}

namespace {

SubgroupWitness make_witness(GroupContext& ctx, const Formation& f, SubId id) {
  SubgroupStore& st = ctx.store();
  SubgroupWitness w;
  w.order = st.order(id);
  for (const auto& p : ctx.perms_of_genset(st.set(id))) w.generators.push_back(p.to_cycles());
  w.self_normalizing = ctx.self_normalizing(st.set(id));
  w.f_subnormal = ctx.f_subnormal(f, st.whole_id(), id);
  w.f_abnormal = ctx.f_abnormal(f, st.whole_id(), id);
  return w;
}

/// Shared quantifier for statements (1)/(2) and corollary (1)/(2):
/// primary_only selects the subgroup range, use_abnormal the second disjunct.
CheckResult quantified_check(const Formation& f, const Group& g, bool primary_only,
                             bool use_abnormal) {
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  std::vector<std::uint32_t> classes;
  if (primary_only) {
    classes = ctx->primary_cyclic_class_ids();
  } else {
    for (std::uint32_t c = 0; c < st.class_count(); ++c)
      if (st.class_rep(c) != st.whole_id()) classes.push_back(c);
  }
  for (std::uint32_t c : classes) {
    SubId rep = st.class_rep(c);
    bool first = use_abnormal ? ctx->f_subnormal(f, st.whole_id(), rep)
                              : ctx->self_normalizing(st.set(rep));
    if (first) continue;
    bool second = use_abnormal ? ctx->f_abnormal(f, st.whole_id(), rep)
                               : ctx->f_subnormal(f, st.whole_id(), rep);
    if (second) continue;
    return CheckResult{false, make_witness(*ctx, f, rep)};
  }
  return CheckResult{true, std::nullopt};
}

struct Statement3Mode {
  bool require_projector = false;
  bool require_derived_residual = false;
};

Statement3Result statement3_search(const Formation& f, const Group& g, Statement3Mode mode) {
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  const ElementSet whole = ctx->dense().whole_set();
  const ElementSet derived = ctx->derived_of(whole);

  if (mode.require_derived_residual) {
    if (ctx->set_in(f, whole)) return {false, std::nullopt};
    if (!(ctx->residual_of(f, whole) == derived)) return {false, std::nullopt};
  }

  const std::uint64_t order = g.order();
  for (std::uint64_t p : pi_of_group(g)) {
    std::uint64_t part = 1, rest = order;
    while (rest % p == 0) {
      part *= p;
      rest /= p;
    }
    // G = G' x| <x> forces |G'| = |G| / p-part.
    if (derived.count() * part != order) continue;
    for (std::uint32_t c = 0; c < st.class_count(); ++c) {
      SubId rep = st.class_rep(c);
      if (st.order(rep) != part || !ctx->cyclic(st.set(rep))) continue;
      if (!ctx->self_normalizing(st.set(rep))) continue;  // Carter: cyclic is nilpotent
      if (derived.intersect(st.set(rep)).count() != 1) continue;
      if (mode.require_projector && !ctx->f_projector(f, rep)) continue;
      // The witness element: a generator of the cyclic representative.
      detail::EIdx x = 0;
      st.set(rep).for_each([&](detail::EIdx e) {
        if (x == 0 && ctx->dense().element_order(e) == part) x = e;
      });
      ElementSet xp = ctx->dense().closure({ctx->dense().pow(x, p)});
      ElementSet fpart = ctx->dense().closure_join(derived, xp);
      if (!ctx->set_in(f, fpart)) continue;
      DecompositionWitness w;
      w.p = p;
      w.x = ctx->dense().perm(x).to_cycles();
      w.x_order = part;
      w.derived_order = derived.count();
      w.fpart_order = fpart.count();
      w.fpart_free_of_self_normalizing_primary_cyclic = true;
      {
        // Observation from the decomposition, recorded for reports only.
        auto fsub = ctx->to_subgroup(fpart).group();
        for (const auto& pc : primary_cyclic_subgroups(fsub))
          if (pc.order() < fsub.order() && is_self_normalizing(fsub, pc)) {
            w.fpart_free_of_self_normalizing_primary_cyclic = false;
            break;
          }
      }
      return {true, std::move(w)};
    }
  }
  return {false, std::nullopt};
}

enum class Gate { kRun, kFlags, kInsoluble, kInF };

Gate gate_for(const Formation& f, const Group& g) {
  const auto& fl = f.flags();
  if (!(fl.subgroup_closed && fl.saturated && fl.superradical && fl.contains_nilpotent))
    return Gate::kFlags;
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  if (!ctx->soluble(ctx->dense().whole_set())) return Gate::kInsoluble;
  if (ctx->set_in(f, ctx->dense().whole_set())) return Gate::kInF;
  return Gate::kRun;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

VerificationReport gated_report(const Formation& f, const Group& g, const std::string& name,
                                const std::string& check, Gate gate) {
  VerificationReport r;
  r.group_name = name;
  r.group_order = g.order();
  r.formation = f.name();
  r.flags = f.flags();
  r.check = check;
  switch (gate) {
    case Gate::kFlags: r.status = VerifyStatus::kSkippedFlags; break;
    case Gate::kInsoluble: r.status = VerifyStatus::kSkippedInsoluble; break;
    case Gate::kInF: r.status = VerifyStatus::kSkippedInF; break;
    case Gate::kRun: break;
  }
  return r;
}

}  // namespace

CheckResult check_statement1(const Formation& f, const Group& g) {
  return quantified_check(f, g, /*primary_only=*/true, /*use_abnormal=*/false);
}

CheckResult check_statement2(const Formation& f, const Group& g) {
  return quantified_check(f, g, /*primary_only=*/false, /*use_abnormal=*/false);
}

Statement3Result check_statement3(const Formation& f, const Group& g) {
  return statement3_search(f, g, Statement3Mode{});
}

CheckResult check_corollary1(const Formation& f, const Group& g) {
  return quantified_check(f, g, /*primary_only=*/true, /*use_abnormal=*/true);
}

CheckResult check_corollary2(const Formation& f, const Group& g) {
  return quantified_check(f, g, /*primary_only=*/false, /*use_abnormal=*/true);
}

Statement3Result check_corollary3(const Formation& f, const Group& g) {
  return statement3_search(
      f, g, Statement3Mode{.require_projector = true, .require_derived_residual = true});
}

VerificationReport verify_theorem(const Formation& f, const Group& g, const std::string& name) {
  auto t0 = std::chrono::steady_clock::now();
  Gate gate = gate_for(f, g);
  VerificationReport r = gated_report(f, g, name, "theorem", gate);
  if (gate == Gate::kRun) {
    CheckResult c1 = check_statement1(f, g);
    CheckResult c2 = check_statement2(f, g);
    Statement3Result c3 = check_statement3(f, g);
    r.statements.s1 = c1.value;
    r.statements.s2 = c2.value;
    r.statements.s3 = c3.value;
    r.statements.s1_witness = std::move(c1.witness);
    r.statements.s2_witness = std::move(c2.witness);
    r.statements.s3_witness = std::move(c3.witness);
    r.status = r.statements.all_equal() ? VerifyStatus::kVerified : VerifyStatus::kCounterexample;
  }
  r.time_ms = ms_since(t0);
  return r;
}

VerificationReport verify_corollary(const Formation& f, const Group& g,
                                    const std::string& name) {
  auto t0 = std::chrono::steady_clock::now();
  Gate gate = gate_for(f, g);
  VerificationReport r = gated_report(f, g, name, "corollary", gate);
  if (gate == Gate::kRun) {
    CheckResult c1 = check_corollary1(f, g);
    CheckResult c2 = check_corollary2(f, g);
    Statement3Result c3 = check_corollary3(f, g);
    r.statements.s1 = c1.value;
    r.statements.s2 = c2.value;
    r.statements.s3 = c3.value;
    r.statements.s1_witness = std::move(c1.witness);
    r.statements.s2_witness = std::move(c2.witness);
    r.statements.s3_witness = std::move(c3.witness);
    r.status = r.statements.all_equal() ? VerifyStatus::kVerified : VerifyStatus::kCounterexample;
  }
  r.time_ms = ms_since(t0);
  return r;
}

std::optional<bool> verify_lemma_in_f(const Formation& f, const Group& g) {
  const auto& fl = f.flags();
  if (!(fl.subgroup_closed && fl.saturated && fl.contains_nilpotent)) return std::nullopt;
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  if (!ctx->soluble(ctx->dense().whole_set())) return std::nullopt;
  SubgroupStore& st = ctx->store();
  bool all_subnormal = true;
  for (std::uint32_t c : ctx->primary_cyclic_class_ids())
    if (!ctx->f_subnormal(f, st.whole_id(), st.class_rep(c))) {
      all_subnormal = false;
      break;
    }
  return ctx->set_in(f, ctx->dense().whole_set()) == all_subnormal;
}

namespace {

std::string subgroup_desc(GroupContext& ctx, SubId id) {
  std::string out = "order " + std::to_string(ctx.store().order(id)) + " <";
  bool first = true;
  for (const auto& p : ctx.perms_of_genset(ctx.store().set(id))) {
    if (!first) out += ", ";
    out += p.to_cycles();
    first = false;
  }
  return out + ">";
}

}  // namespace

std::vector<LemmaOutcome> verify_lemmas(const Formation& f, const Group& g) {
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  const ElementSet whole = ctx->dense().whole_set();
  const SubId top = st.whole_id();
  const bool soluble = ctx->soluble(whole);
  const auto& fl = f.flags();
  std::vector<LemmaOutcome> out;

  auto run = [&](const std::string& name, bool applicable, auto&& body) {
    LemmaOutcome o;
    o.lemma = name;
    o.applicable = applicable;
    if (applicable) body(o);
    out.push_back(std::move(o));
  };

  run("subnormal_transitivity", true, [&](LemmaOutcome& o) {
    for (std::uint32_t c = 0; c < st.class_count() && o.holds; ++c) {
      SubId h = st.class_rep(c);
      if (!ctx->f_subnormal(f, top, h)) continue;
      st.downs(h).for_each([&](detail::EIdx k) {
        if (!o.holds) return;
        SubId kid = static_cast<SubId>(k);
        if (ctx->f_subnormal(f, h, kid) && !ctx->f_subnormal(f, top, kid)) {
          o.holds = false;
          o.detail = "K=" + subgroup_desc(*ctx, kid) + " inside H=" + subgroup_desc(*ctx, h);
        }
      });
    }
  });

  run("subnormal_quotient_lift", true, [&](LemmaOutcome& o) {
    for (const auto& n : ctx->normals_of(whole)) {
      SubId nid = st.id_of(n);
      QuotientMap qm = quotient_map(g, ctx->to_subgroup(n));
      std::vector<bool> class_done(st.class_count(), false);
      auto test_k = [&](SubId kid) {
        if (class_done[st.class_of(kid)]) return;
        class_done[st.class_of(kid)] = true;
        Subgroup image = qm.image_of(ctx->to_subgroup(st.set(kid)));
        if (!is_f_subnormal(f, qm.quotient(), image).value) return;
        if (ctx->f_subnormal(f, top, kid)) return;
        o.holds = false;
        o.detail = "K=" + subgroup_desc(*ctx, kid) + " over N=" + subgroup_desc(*ctx, nid);
      };
      test_k(nid);
      st.ups(nid).for_each([&](detail::EIdx k) {
        if (o.holds) test_k(static_cast<SubId>(k));
      });
      if (!o.holds) return;
    }
  });

  run("subnormal_quotient_image", true, [&](LemmaOutcome& o) {
    for (const auto& n : ctx->normals_of(whole)) {
      QuotientMap qm = quotient_map(g, ctx->to_subgroup(n));
      for (std::uint32_t c = 0; c < st.class_count(); ++c) {
        SubId h = st.class_rep(c);
        if (!ctx->f_subnormal(f, top, h)) continue;
        Subgroup image = qm.image_of(ctx->to_subgroup(st.set(h)));
        if (!is_f_subnormal(f, qm.quotient(), image).value) {
          o.holds = false;
          o.detail = "H=" + subgroup_desc(*ctx, h) + " over N of order " +
                     std::to_string(n.count());
          return;
        }
      }
    }
  });

  run("residual_below_subnormal", fl.subgroup_closed, [&](LemmaOutcome& o) {
    const ElementSet& residual = ctx->residual_of(f, whole);
    for (std::uint32_t c = 0; c < st.class_count(); ++c) {
      SubId h = st.class_rep(c);
      if (!residual.is_subset_of(st.set(h))) continue;
      if (!ctx->f_subnormal(f, top, h)) {
        o.holds = false;
        o.detail = "H=" + subgroup_desc(*ctx, h);
        return;
      }
    }
  });

  run("subgroup_of_f_subnormal", fl.subgroup_closed, [&](LemmaOutcome& o) {
    for (std::uint32_t c = 0; c < st.class_count() && o.holds; ++c) {
      SubId h = st.class_rep(c);
      if (!ctx->f_subnormal(f, top, h) || !ctx->set_in(f, st.set(h))) continue;
      st.downs(h).for_each([&](detail::EIdx k) {
        if (!o.holds) return;
        SubId kid = static_cast<SubId>(k);
        if (!ctx->f_subnormal(f, top, kid)) {
          o.holds = false;
          o.detail = "K=" + subgroup_desc(*ctx, kid) + " inside H=" + subgroup_desc(*ctx, h);
        }
      });
    }
  });

  run("abnormal_intermediate", fl.subgroup_closed && fl.contains_nilpotent,
      [&](LemmaOutcome& o) {
        for (std::uint32_t c = 0; c < st.class_count() && o.holds; ++c) {
          SubId a = st.class_rep(c);
          if (!ctx->f_abnormal(f, top, a)) continue;
          if (!ctx->self_normalizing(st.set(a))) {
            o.holds = false;
            o.detail = "abnormal A=" + subgroup_desc(*ctx, a) + " is not self-normalizing";
            return;
          }
          st.ups(a).for_each([&](detail::EIdx b) {
            if (!o.holds) return;
            SubId bid = static_cast<SubId>(b);
            if (!ctx->f_abnormal(f, bid, a)) {
              o.holds = false;
              o.detail = "A=" + subgroup_desc(*ctx, a) +
                         " not abnormal in B=" + subgroup_desc(*ctx, bid);
            } else if (!ctx->f_abnormal(f, top, bid) || !ctx->self_normalizing(st.set(bid))) {
              o.holds = false;
              o.detail = "B=" + subgroup_desc(*ctx, bid) +
                         " above abnormal A=" + subgroup_desc(*ctx, a);
            }
          });
        }
      });

  run("projector_characterization", soluble, [&](LemmaOutcome& o) {
    for (std::uint32_t c = 0; c < st.class_count(); ++c) {
      SubId h = st.class_rep(c);
      bool projector = ctx->f_projector(f, h);
      bool in_f_abnormal = ctx->set_in(f, st.set(h)) && ctx->f_abnormal(f, top, h);
      if (projector != in_f_abnormal) {
        o.holds = false;
        o.detail = "H=" + subgroup_desc(*ctx, h) + ": projector=" +
                   (projector ? "true" : "false") +
                   ", inF&abnormal=" + (in_f_abnormal ? "true" : "false");
        return;
      }
    }
  });

  run("minimal_non_f_structure", fl.subgroup_closed && fl.saturated && soluble,
      [&](LemmaOutcome& o) {
        if (ctx->set_in(f, whole)) return;
        for (SubId m : st.maximals_in(top))
          if (!ctx->set_in(f, st.set(m))) return;  // not minimal non-F
        std::uint64_t order = g.order();
        bool prime = order >= 2;
        for (std::uint64_t d = 2; d * d <= order; ++d)
          if (order % d == 0) {
            prime = false;
            break;
          }
        bool prime_case = false;
        if (prime) {
          auto pi = formation_pi(f, order);
          prime_case = std::find(pi.begin(), pi.end(), order) == pi.end();
        }
        bool schmidt = !ctx->nilpotent(whole);
        if (schmidt)
          for (SubId m : st.maximals_in(top))
            if (!ctx->nilpotent(st.set(m))) {
              schmidt = false;
              break;
            }
        if (!prime_case && !schmidt) {
          o.holds = false;
          o.detail = "minimal non-" + f.name() +
                     " group is neither of prime order outside pi(F) nor a Schmidt group";
        }
      });

  run("membership_by_primary_cyclic",
      fl.subgroup_closed && fl.saturated && fl.contains_nilpotent && soluble,
      [&](LemmaOutcome& o) {
        auto r = verify_lemma_in_f(f, g);
        if (r.has_value() && !*r) {
          o.holds = false;
          o.detail = "membership biconditional failed";
        }
      });

  return out;
}

namespace {

void append_entry_reports(const CorpusEntry& entry, const Formation& f, SweepMode mode,
                          std::vector<VerificationReport>& out) {
  auto guarded = [&](const std::string& check, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      VerificationReport r;
      r.group_name = entry.name;
      r.group_order = entry.group.valid() ? entry.group.order() : 0;
      r.formation = f.name();
      r.flags = f.flags();
      r.check = check;
      r.status = VerifyStatus::kError;
      r.detail = e.what();
      out.push_back(std::move(r));
    }
  };
  if (mode == SweepMode::kTheorem || mode == SweepMode::kAll)
    guarded("theorem", [&] { out.push_back(verify_theorem(f, entry.group, entry.name)); });
  if (mode == SweepMode::kCorollary || mode == SweepMode::kAll)
    guarded("corollary", [&] { out.push_back(verify_corollary(f, entry.group, entry.name)); });
  if (mode == SweepMode::kLemmas || mode == SweepMode::kAll) {
    guarded("lemmas", [&] {
      auto t0 = std::chrono::steady_clock::now();
      auto outcomes = verify_lemmas(f, entry.group);
      double each = ms_since(t0) / static_cast<double>(outcomes.size());
      for (const auto& lo : outcomes) {
        VerificationReport r;
        r.group_name = entry.name;
        r.group_order = entry.group.order();
        r.formation = f.name();
        r.flags = f.flags();
        r.check = "lemma:" + lo.lemma;
        r.status = !lo.applicable
                       ? VerifyStatus::kSkippedFlags
                       : (lo.holds ? VerifyStatus::kVerified : VerifyStatus::kCounterexample);
        r.detail = lo.detail;
        r.time_ms = each;
        out.push_back(std::move(r));
      }
    });
  }
}

}  // namespace

CorpusSweep run_corpus(const std::vector<CorpusEntry>& corpus, const Formation& f,
                       const SweepOptions& options) {
  std::vector<const CorpusEntry*> selected;
  for (const auto& e : corpus)
    if (options.order_max == 0 || !e.group.valid() || e.group.order() <= options.order_max)
      selected.push_back(&e);

  std::vector<std::vector<VerificationReport>> buckets(selected.size());
  unsigned jobs = options.jobs == 0 ? 1 : options.jobs;
  if (jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      append_entry_reports(*selected[i], f, options.mode, buckets[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= selected.size()) break;
        append_entry_reports(*selected[i], f, options.mode, buckets[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CorpusSweep sweep;
  for (auto& bucket : buckets)
    for (auto& r : bucket) {
      switch (r.status) {
        case VerifyStatus::kVerified: ++sweep.verified; break;
        case VerifyStatus::kCounterexample: ++sweep.counterexamples; break;
        case VerifyStatus::kSkippedInF: ++sweep.skipped_in_f; break;
        case VerifyStatus::kSkippedInsoluble: ++sweep.skipped_insoluble; break;
        case VerifyStatus::kSkippedFlags: ++sweep.skipped_flags; break;
        case VerifyStatus::kError: ++sweep.errors; break;
      }
      sweep.reports.push_back(std::move(r));
    }
  return sweep;
}

}  // namespace permforms
